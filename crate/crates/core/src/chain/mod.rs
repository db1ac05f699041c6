//! Exact sparse chain algebra.
//!
//! Chains are finite linear combinations of basis cells stored in canonical
//! sparse form: a `BTreeMap` keyed by [`Cell`] with no zero coefficients, so
//! that equality of chains is equality of maps.

mod complex;
mod tensor;

pub use complex::{BasedComplex, ChainDoc, ComplexBuilder, TermDoc};
pub use tensor::TensorChain;

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A basis cell of a [`BasedComplex`], identified by its degree and its
/// position among the basis cells of that degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub degree: u32,
    pub index: u32,
}

impl Cell {
    pub fn new(degree: usize, index: usize) -> Self {
        Cell { degree: degree as u32, index: index as u32 }
    }

    pub fn degree(self) -> usize {
        self.degree as usize
    }

    pub fn index(self) -> usize {
        self.index as usize
    }
}

/// A finite linear combination of basis cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<R: Ring> {
    terms: BTreeMap<Cell, R>,
}

impl<R: Ring> Default for Chain<R> {
    fn default() -> Self {
        Chain { terms: BTreeMap::new() }
    }
}

impl<R: Ring> Chain<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_cell(cell: Cell) -> Self {
        Self::term(cell, R::one())
    }

    pub fn term(cell: Cell, coeff: R) -> Self {
        let mut chain = Self::zero();
        chain.add_term(cell, coeff);
        chain
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Cell, R)>) -> Self {
        let mut chain = Self::zero();
        for (cell, coeff) in terms {
            chain.add_term(cell, coeff);
        }
        chain
    }

    /// Adds `coeff * cell`, keeping the canonical form.
    pub fn add_term(&mut self, cell: Cell, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(cell) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, other: &Self, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        for (cell, c) in &other.terms {
            self.add_term(*cell, c.mul(coeff));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one().neg());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    pub fn scale(&self, coeff: &R) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, cell: Cell) -> R {
        self.terms.get(&cell).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Cell, R> {
        self.terms.iter()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.terms.keys().copied()
    }

    /// If the chain is a single basis cell with coefficient one, that cell.
    pub fn as_single_cell(&self) -> Option<Cell> {
        match self.terms.iter().next() {
            Some((cell, c)) if self.terms.len() == 1 && c.is_one() => Some(*cell),
            _ => None,
        }
    }

    /// The common degree of all terms; `None` for the zero chain or a
    /// chain mixing degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut cells = self.terms.keys();
        let first = cells.next()?.degree;
        cells.all(|c| c.degree == first).then_some(first as usize)
    }

    /// True when every term has degree `degree` (vacuously for zero).
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|c| c.degree() == degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|c| c.degree()).max()
    }

    /// Projection onto `C_0 ⊕ … ⊕ C_n`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Chain {
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| c.degree() <= max_degree)
                .map(|(c, r)| (*c, r.clone()))
                .collect(),
        }
    }

    /// Splits `c = c⁺ - c⁻` with both parts having nonnegative coefficients
    /// and disjoint supports.
    pub fn positive_negative_parts(&self) -> Result<(Self, Self)> {
        if !R::SIGNED {
            return Err(Error::RingCapability { op: "positive_negative_parts", ring: R::NAME });
        }
        let mut pos = Self::zero();
        let mut neg = Self::zero();
        for (cell, c) in &self.terms {
            match c.signum() {
                Some(1) => pos.add_term(*cell, c.clone()),
                Some(-1) => neg.add_term(*cell, c.neg()),
                _ => unreachable!("canonical chains have no zero coefficients"),
            }
        }
        Ok((pos, neg))
    }

    /// True when every coefficient is nonnegative (membership in `C⁺`).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.signum().is_none_or(|s| s >= 0))
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> Chain<S> {
        Chain::from_terms(self.terms.iter().map(|(c, r)| (*c, f(r))))
    }

    pub fn max_magnitude(&self) -> u64 {
        self.terms.values().map(Ring::magnitude).max().unwrap_or(0)
    }
}

impl<R: Ring> FromIterator<(Cell, R)> for Chain<R> {
    fn from_iter<I: IntoIterator<Item = (Cell, R)>>(iter: I) -> Self {
        Chain::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::F2;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn c(d: usize, i: usize) -> Cell {
        Cell::new(d, i)
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut ch = Chain::term(c(0, 0), z(2));
        ch.add_term(c(0, 0), z(-2));
        assert!(ch.is_zero());
        assert_eq!(ch, Chain::zero());
    }

    #[test]
    fn positive_negative_of_simplex_boundary() {
        // [12] - [02] + [01], cells of degree 1 indexed 0:[01] 1:[02] 2:[12]
        let ch = Chain::from_terms([(c(1, 2), z(1)), (c(1, 1), z(-1)), (c(1, 0), z(1))]);
        let (p, n) = ch.positive_negative_parts().unwrap();
        assert_eq!(p, Chain::from_terms([(c(1, 2), z(1)), (c(1, 0), z(1))]));
        assert_eq!(n, Chain::from_cell(c(1, 1)));
    }

    #[test]
    fn positive_negative_edge_cases() {
        let (p, n) = Chain::<BigInt>::zero().positive_negative_parts().unwrap();
        assert!(p.is_zero() && n.is_zero());
        let three = Chain::term(c(0, 0), z(3));
        let (p, n) = three.positive_negative_parts().unwrap();
        assert_eq!(p, three);
        assert!(n.is_zero());
    }

    #[test]
    fn positive_negative_rejected_over_f2() {
        let ch = Chain::<F2>::from_cell(c(0, 0));
        assert!(matches!(ch.positive_negative_parts(), Err(Error::RingCapability { .. })));
    }

    #[test]
    fn degree_queries() {
        let mixed = Chain::from_terms([(c(0, 0), z(1)), (c(2, 0), z(1))]);
        assert_eq!(mixed.degree(), None);
        assert_eq!(mixed.truncate(1), Chain::from_cell(c(0, 0)));
        assert_eq!(Chain::<BigInt>::from_cell(c(3, 1)).degree(), Some(3));
    }

    fn arb_chain() -> impl Strategy<Value = Chain<BigInt>> {
        proptest::collection::vec((0usize..3, 0usize..4, -4i64..5), 0..8).prop_map(|terms| {
            Chain::from_terms(terms.into_iter().map(|(d, i, v)| (c(d, i), z(v))))
        })
    }

    proptest! {
        #[test]
        fn chain_arithmetic_laws(a in arb_chain(), b in arb_chain(), k in arb_chain(), s in -3i64..4) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&k), a.add(&b.add(&k)));
            prop_assert_eq!(a.add(&b).scale(&z(s)), a.scale(&z(s)).add(&b.scale(&z(s))));
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn decomposition_recombines(a in arb_chain()) {
            let (p, n) = a.positive_negative_parts().unwrap();
            prop_assert_eq!(p.sub(&n), a);
            prop_assert!(p.is_nonnegative() && n.is_nonnegative());
            prop_assert!(p.cells().all(|cell| n.coeff(cell).is_zero()));
        }
    }
}
