use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Cell, Chain, TensorChain};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A finite augmented chain complex with a distinguished basis.
///
/// Cells are numbered per degree in insertion order. The differential and the
/// augmentation are stored on basis cells and extended linearly.
#[derive(Clone, Debug)]
pub struct BasedComplex<R: Ring> {
    names: Vec<Vec<String>>,
    lookup: HashMap<String, Cell>,
    differential: Vec<Vec<Chain<R>>>,
    augmentation: Vec<R>,
}

/// Incremental constructor for [`BasedComplex`]. Boundary cells must be added
/// before the cells whose boundary mentions them.
#[derive(Debug)]
pub struct ComplexBuilder<R: Ring> {
    complex: BasedComplex<R>,
}

impl<R: Ring> Default for ComplexBuilder<R> {
    fn default() -> Self {
        ComplexBuilder {
            complex: BasedComplex {
                names: Vec::new(),
                lookup: HashMap::new(),
                differential: Vec::new(),
                augmentation: Vec::new(),
            },
        }
    }
}

impl<R: Ring> ComplexBuilder<R> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a basis cell with the given boundary. Degree-0 cells get
    /// augmentation one unless overridden with [`Self::augmentation`].
    pub fn cell<S: AsRef<str>>(
        &mut self,
        name: impl Into<String>,
        degree: usize,
        boundary: impl IntoIterator<Item = (S, R)>,
    ) -> Result<Cell> {
        let name = name.into();
        if self.complex.lookup.contains_key(&name) {
            return Err(Error::InvalidComplex(format!("duplicate cell name `{name}`")));
        }
        let mut chain = Chain::zero();
        for (face, coeff) in boundary {
            let face = face.as_ref();
            let cell = self.complex.cell(face).ok_or_else(|| Error::UnknownCell(face.to_string()))?;
            if cell.degree() + 1 != degree {
                return Err(Error::InvalidComplex(format!(
                    "boundary of `{name}` (degree {degree}) mentions `{face}` of degree {}",
                    cell.degree()
                )));
            }
            chain.add_term(cell, coeff);
        }
        Ok(self.push(name, degree, chain))
    }

    fn push(&mut self, name: String, degree: usize, boundary: Chain<R>) -> Cell {
        let c = &mut self.complex;
        if c.names.len() <= degree {
            c.names.resize_with(degree + 1, Vec::new);
            c.differential.resize_with(degree + 1, Vec::new);
        }
        let cell = Cell::new(degree, c.names[degree].len());
        c.names[degree].push(name.clone());
        c.differential[degree].push(boundary);
        if degree == 0 {
            c.augmentation.push(R::one());
        }
        c.lookup.insert(name, cell);
        cell
    }

    /// Overrides the augmentation of a degree-0 cell.
    pub fn augmentation(&mut self, name: &str, value: R) -> Result<()> {
        let cell = self.complex.cell(name).ok_or_else(|| Error::UnknownCell(name.to_string()))?;
        if cell.degree() != 0 {
            return Err(Error::InvalidComplex(format!("augmentation set on `{name}` of positive degree")));
        }
        self.complex.augmentation[cell.index()] = value;
        Ok(())
    }

    /// Finishes construction, checking `∂∂ = 0` and `ε∂ = 0`.
    pub fn build(self) -> Result<BasedComplex<R>> {
        self.complex.check_invariants()?;
        Ok(self.complex)
    }
}

impl<R: Ring> BasedComplex<R> {
    pub fn builder() -> ComplexBuilder<R> {
        ComplexBuilder::new()
    }

    fn check_invariants(&self) -> Result<()> {
        for cell in self.all_cells() {
            let dd = self.boundary(self.boundary_of(cell))?;
            if !dd.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "boundary of boundary of `{}` is {}",
                    self.name(cell),
                    self.format_chain(&dd)
                )));
            }
            if cell.degree() == 1 {
                let e = self.augment(self.boundary_of(cell))?;
                if !e.is_zero() {
                    return Err(Error::InvalidComplex(format!(
                        "augmentation of the boundary of `{}` is {e}",
                        self.name(cell)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Highest degree with at least one basis cell.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.names.len()).rev().find(|&d| !self.names[d].is_empty())
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.names.get(degree).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    pub fn cells(&self, degree: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rank(degree)).map(move |i| Cell::new(degree, i))
    }

    /// All basis cells, by increasing degree.
    pub fn all_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.names.len()).flat_map(move |d| self.cells(d))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.index() < self.rank(cell.degree())
    }

    pub fn name(&self, cell: Cell) -> &str {
        &self.names[cell.degree()][cell.index()]
    }

    pub fn cell(&self, name: &str) -> Option<Cell> {
        self.lookup.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<Cell> {
        self.cell(name).ok_or_else(|| Error::UnknownCell(name.to_string()))
    }

    fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::UnknownCell(format!("{cell:?}")))
        }
    }

    /// The stored boundary of a basis cell. Panics on a foreign cell.
    pub fn boundary_of(&self, cell: Cell) -> &Chain<R> {
        &self.differential[cell.degree()][cell.index()]
    }

    pub fn boundary(&self, chain: &Chain<R>) -> Result<Chain<R>> {
        let mut out = Chain::zero();
        for (cell, coeff) in chain.terms() {
            self.check(*cell)?;
            out.add_scaled(self.boundary_of(*cell), coeff);
        }
        Ok(out)
    }

    pub fn augment_cell(&self, cell: Cell) -> R {
        if cell.degree() == 0 {
            self.augmentation[cell.index()].clone()
        } else {
            R::zero()
        }
    }

    pub fn augment(&self, chain: &Chain<R>) -> Result<R> {
        let mut total = R::zero();
        for (cell, coeff) in chain.terms() {
            self.check(*cell)?;
            total = total.add(&self.augment_cell(*cell).mul(coeff));
        }
        Ok(total)
    }

    /// `∂(x ⊗ y) = ∂x ⊗ y + (-1)^{|x|} x ⊗ ∂y`
    pub fn tensor_boundary(&self, t: &TensorChain<R>) -> Result<TensorChain<R>> {
        let mut out = TensorChain::zero();
        for ((x, y), coeff) in t.terms() {
            self.check(*x)?;
            self.check(*y)?;
            out.add_tensor(self.boundary_of(*x), &Chain::from_cell(*y), coeff);
            let signed = coeff.mul(&R::sign_power(x.degree()));
            out.add_tensor(&Chain::from_cell(*x), self.boundary_of(*y), &signed);
        }
        Ok(out)
    }

    /// `(1 ⊗ ε)`: contract the right factor with the augmentation.
    pub fn counit_right(&self, t: &TensorChain<R>) -> Chain<R> {
        t.terms()
            .map(|((x, y), c)| (*x, c.mul(&self.augment_cell(*y))))
            .collect()
    }

    /// `(ε ⊗ 1)`: contract the left factor with the augmentation.
    pub fn counit_left(&self, t: &TensorChain<R>) -> Chain<R> {
        t.terms()
            .map(|((x, y), c)| (*y, c.mul(&self.augment_cell(*x))))
            .collect()
    }

    /// Same basis, coefficients pushed through a ring map.
    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> BasedComplex<S> {
        BasedComplex {
            names: self.names.clone(),
            lookup: self.lookup.clone(),
            differential: self
                .differential
                .iter()
                .map(|cells| cells.iter().map(|c| c.map_ring(&f)).collect())
                .collect(),
            augmentation: self.augmentation.iter().map(&f).collect(),
        }
    }

    /// Human-readable form, e.g. `[12] - [02] + [01]`.
    pub fn format_chain(&self, chain: &Chain<R>) -> String {
        if chain.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (cell, coeff)) in chain.terms().enumerate() {
            let negative = coeff.signum() == Some(-1);
            let magnitude = if negative { coeff.neg() } else { coeff.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                out.push_str(&format!("{magnitude}·"));
            }
            out.push_str(self.name(*cell));
        }
        out
    }

    pub fn format_tensor(&self, t: &TensorChain<R>) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((x, y), coeff)) in t.terms().enumerate() {
            let negative = coeff.signum() == Some(-1);
            let magnitude = if negative { coeff.neg() } else { coeff.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                out.push_str(&format!("{magnitude}·"));
            }
            out.push_str(self.name(*x));
            out.push('⊗');
            out.push_str(self.name(*y));
        }
        out
    }

    pub fn chain_to_doc(&self, chain: &Chain<R>) -> ChainDoc {
        ChainDoc {
            degree: chain.degree(),
            terms: chain
                .terms()
                .map(|(cell, coeff)| TermDoc { cell: self.name(*cell).to_string(), coeff: bigint_to_json(&coeff.to_bigint()) })
                .collect(),
        }
    }

    pub fn chain_from_doc(&self, doc: &ChainDoc) -> Result<Chain<R>> {
        let mut chain = Chain::zero();
        for term in &doc.terms {
            let cell = self.require(&term.cell)?;
            let value = json_to_i64(&term.coeff)?;
            chain.add_term(cell, R::from_i64(value));
        }
        if let Some(d) = doc.degree {
            if !chain.is_homogeneous_of(d) {
                return Err(Error::Parse(format!("chain declared of degree {d} has terms of other degrees")));
            }
        }
        Ok(chain)
    }
}

/// JSON form of a chain: `{ "degree": n, "terms": [{"cell": "name", "coeff": int}] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainDoc {
    pub degree: Option<usize>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub cell: String,
    pub coeff: serde_json::Value,
}

fn bigint_to_json(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(small) => serde_json::Value::from(small),
        Err(_) => serde_json::Value::String(v.to_string()),
    }
}

fn json_to_i64(v: &serde_json::Value) -> Result<i64> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
        serde_json::Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("coefficient `{s}` is not an integer"))),
        other => Err(Error::Parse(format!("coefficient {other} is not an integer"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::F2;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn interval() -> BasedComplex<BigInt> {
        let mut b = BasedComplex::builder();
        b.cell("[0]", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("[1]", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("[01]", 1, [("[1]", z(1)), ("[0]", z(-1))]).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn augmentation_counts_vertices() {
        let c = interval();
        let v = Chain::from_cell(c.require("[0]").unwrap()).add(&Chain::from_cell(c.require("[1]").unwrap()));
        assert_eq!(c.augment(&v).unwrap(), z(2));
        assert_eq!(c.augment(&Chain::from_cell(c.require("[01]").unwrap())).unwrap(), z(0));
        assert_eq!(c.augment(&Chain::zero()).unwrap(), z(0));
    }

    #[test]
    fn boundary_of_zero_and_unknown_cell() {
        let c = interval();
        assert!(c.boundary(&Chain::zero()).unwrap().is_zero());
        let foreign = Chain::from_cell(Cell::new(2, 0));
        assert!(matches!(c.boundary(&foreign), Err(Error::UnknownCell(_))));
        assert!(c.augment(&foreign).is_err());
    }

    #[test]
    fn tensor_boundary_edge_squared() {
        let c = interval();
        let e = c.require("[01]").unwrap();
        let d = c.boundary_of(e).clone();
        let t = TensorChain::pure(e, e);
        let expected = TensorChain::tensor(&d, &Chain::from_cell(e))
            .sub(&TensorChain::tensor(&Chain::from_cell(e), &d));
        assert_eq!(c.tensor_boundary(&t).unwrap(), expected);
        assert!(c.tensor_boundary(&c.tensor_boundary(&t).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn tensor_boundary_degree_zero_sign() {
        let c = interval();
        let v = c.require("[0]").unwrap();
        let e = c.require("[01]").unwrap();
        let t = TensorChain::pure(v, e);
        let expected = TensorChain::tensor(&Chain::from_cell(v), c.boundary_of(e));
        assert_eq!(c.tensor_boundary(&t).unwrap(), expected);
    }

    #[test]
    fn rejects_nonzero_square() {
        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("a", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("b", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("e", 1, [("b", z(1)), ("a", z(-1))]).unwrap();
        b.cell("f", 2, [("e", z(1))]).unwrap();
        assert!(matches!(b.build(), Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn rejects_augmentation_not_chain_map() {
        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("a", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("e", 1, [("a", z(1))]).unwrap();
        assert!(b.build().is_err());
    }

    #[test]
    fn formatting_and_json() {
        let c = interval();
        let e = c.require("[01]").unwrap();
        assert_eq!(c.format_chain(c.boundary_of(e)), "-[0] + [1]");
        let doc = c.chain_to_doc(c.boundary_of(e));
        assert_eq!(doc.degree, Some(0));
        assert_eq!(&c.chain_from_doc(&doc).unwrap(), c.boundary_of(e));
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(json, r#"{"degree":0,"terms":[{"cell":"[0]","coeff":-1},{"cell":"[1]","coeff":1}]}"#);
        let f2 = c.map_ring(|v| F2::from_i64(i64::try_from(v).unwrap()));
        assert_eq!(serde_json::to_string(&f2.chain_to_doc(f2.boundary_of(e))).unwrap(),
            r#"{"degree":0,"terms":[{"cell":"[0]","coeff":1},{"cell":"[1]","coeff":1}]}"#);
    }
}
