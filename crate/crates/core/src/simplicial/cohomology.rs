//! Cochains, cup products, Steenrod squares and a small 𝔽₂ cohomology
//! reducer over dense bit vectors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::chain::{BasedComplex, Cell};
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::ring::F2;

/// An 𝔽₂-valued cochain on the basis cells of one degree, stored as its
/// support (cell indices within that degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    support: BTreeSet<usize>,
}

/// Serialized cochain: the degree and the names of the supporting cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDoc {
    pub degree: usize,
    pub support: Vec<String>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, support: BTreeSet::new() }
    }

    pub fn from_support(degree: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Cochain::zero(degree);
        for i in support {
            c.toggle(i);
        }
        c
    }

    /// The dual of a basis cell.
    pub fn dual(cell: Cell) -> Self {
        Cochain::from_support(cell.degree(), [cell.index()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.iter().copied()
    }

    pub fn toggle(&mut self, index: usize) {
        if !self.support.remove(&index) {
            self.support.insert(index);
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        debug_assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, support: self.support.symmetric_difference(&other.support).copied().collect() }
    }

    /// Value on a single basis cell.
    pub fn value(&self, cell: Cell) -> bool {
        cell.degree() == self.degree && self.support.contains(&cell.index())
    }

    fn words(&self, rank: usize) -> Vec<u64> {
        let mut w = vec![0u64; rank.div_ceil(64)];
        for &i in &self.support {
            w[i / 64] |= 1 << (i % 64);
        }
        w
    }

    fn from_words(degree: usize, words: &[u64]) -> Self {
        let support = words
            .iter()
            .enumerate()
            .flat_map(|(j, &w)| (0..64).filter(move |b| w & (1 << b) != 0).map(move |b| j * 64 + b))
            .collect();
        Cochain { degree, support }
    }

    pub fn to_doc(&self, complex: &BasedComplex<F2>) -> CochainDoc {
        CochainDoc {
            degree: self.degree,
            support: self.support.iter().map(|&i| complex.name(Cell::new(self.degree, i)).to_string()).collect(),
        }
    }

    pub fn from_doc(doc: &CochainDoc, complex: &BasedComplex<F2>) -> Result<Self> {
        let mut c = Cochain::zero(doc.degree);
        for name in &doc.support {
            let cell = complex.require(name)?;
            if cell.degree() != doc.degree {
                return Err(Error::Parse(format!("cell `{name}` is not of degree {}", doc.degree)));
            }
            c.toggle(cell.index());
        }
        Ok(c)
    }
}

/// `(δα)(y) = α(∂y)`.
pub fn coboundary(alpha: &Cochain, complex: &BasedComplex<F2>) -> Cochain {
    let next = alpha.degree + 1;
    let mut out = Cochain::zero(next);
    for y in complex.cells(next) {
        let value = complex.boundary_of(y).terms().filter(|(x, _)| alpha.value(**x)).count() % 2 == 1;
        if value {
            out.toggle(y.index());
        }
    }
    out
}

pub fn is_cocycle(alpha: &Cochain, complex: &BasedComplex<F2>) -> bool {
    coboundary(alpha, complex).is_zero()
}

/// Evaluates `α ⊗ β` against `Δ_k` of every cell of degree `|α| + |β| - k`,
/// since `Δ_k` raises degree by `k`. Needs `k ≤ |α| + |β|`.
fn pair_against_delta(
    coalgebra: &impl Coalgebra<F2>,
    alpha: &Cochain,
    beta: &Cochain,
    k: usize,
) -> Cochain {
    let degree = alpha.degree + beta.degree - k;
    let mut out = Cochain::zero(degree);
    for x in coalgebra.complex().cells(degree) {
        let value = coalgebra
            .delta_cell(x, k)
            .terms()
            .filter(|((u, v), _)| alpha.value(*u) && beta.value(*v))
            .count()
            % 2
            == 1;
        if value {
            out.toggle(x.index());
        }
    }
    out
}

/// `α ⌣ β = (α ⊗ β) Δ_0`.
pub fn cup_product(coalgebra: &impl Coalgebra<F2>, alpha: &Cochain, beta: &Cochain) -> Cochain {
    pair_against_delta(coalgebra, alpha, beta, 0)
}

/// `Sq^k α = (α ⊗ α) Δ_{|α|-k}`, zero when `k > |α|`. The input must be a
/// cocycle.
pub fn steenrod_square(coalgebra: &impl Coalgebra<F2>, k: usize, alpha: &Cochain) -> Result<Cochain> {
    if !is_cocycle(alpha, coalgebra.complex()) {
        return Err(Error::Contract(format!("Sq^{k} needs a cocycle; the degree-{} input is not closed", alpha.degree)));
    }
    if k > alpha.degree {
        return Ok(Cochain::zero(alpha.degree + k));
    }
    Ok(pair_against_delta(coalgebra, alpha, alpha, alpha.degree - k))
}

/// A row-echelon set of bit vectors; each row carries a tag recording which
/// tracked vectors it is a combination of.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
}

fn lowest_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, w)| **w != 0).map(|(j, w)| j * 64 + w.trailing_zeros() as usize)
}

fn xor_into(target: &mut [u64], source: &[u64]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t ^= s;
    }
}

fn bit(words: &[u64], i: usize) -> bool {
    words[i / 64] & (1 << (i % 64)) != 0
}

impl Echelon {
    /// Reduces `v` (with its tag) against the rows; returns the residue and
    /// the accumulated tag.
    fn reduce(&self, mut v: Vec<u64>, mut tag: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        for (pivot, row, row_tag) in &self.rows {
            if bit(&v, *pivot) {
                xor_into(&mut v, row);
                xor_into(&mut tag, row_tag);
            }
        }
        (v, tag)
    }

    /// Inserts a reduced nonzero vector.
    fn insert(&mut self, v: Vec<u64>, tag: Vec<u64>) {
        let pivot = lowest_bit(&v).expect("only nonzero residues are inserted");
        // keep the rows fully reduced at the new pivot
        for (_, row, row_tag) in &mut self.rows {
            if bit(row, pivot) {
                xor_into(row, &v);
                xor_into(row_tag, &tag);
            }
        }
        self.rows.push((pivot, v, tag));
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// The cohomology of one degree: a basis of `H^d` given by cocycle
/// representatives, and a reducer for classes.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    degree: usize,
    cochain_rank: usize,
    cocycle_rank: usize,
    generators: Vec<Cochain>,
    reducer: Echelon,
}

impl DegreeCohomology {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn cocycle_rank(&self) -> usize {
        self.cocycle_rank
    }

    pub fn generators(&self) -> &[Cochain] {
        &self.generators
    }
}

/// `H^*(C; 𝔽₂)` by dense elimination.
#[derive(Clone, Debug)]
pub struct CohomologyF2 {
    degrees: Vec<DegreeCohomology>,
}

impl CohomologyF2 {
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeCohomology::rank).collect()
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeCohomology> {
        self.degrees.get(d)
    }

    pub fn generators(&self, d: usize) -> &[Cochain] {
        self.degrees.get(d).map_or(&[], |h| &h.generators)
    }

    /// Coordinates of `[α]` in the generator basis. Fails when `α` is not
    /// a cocycle.
    pub fn class_of(&self, alpha: &Cochain) -> Result<Vec<bool>> {
        let Some(h) = self.degrees.get(alpha.degree) else {
            return if alpha.is_zero() { Ok(Vec::new()) } else { Err(Error::Contract("cochain above the top degree".into())) };
        };
        let tag_words = h.generators.len().div_ceil(64).max(1);
        let (residue, tag) = h.reducer.reduce(alpha.words(h.cochain_rank), vec![0; tag_words]);
        if lowest_bit(&residue).is_some() {
            return Err(Error::Contract(format!("degree-{} cochain is not a cocycle", alpha.degree)));
        }
        Ok((0..h.generators.len()).map(|g| bit(&tag, g)).collect())
    }

    pub fn is_coboundary(&self, alpha: &Cochain) -> Result<bool> {
        Ok(self.class_of(alpha)?.iter().all(|b| !b))
    }

    /// A canonical representative of `[α]`: the sum of the generators in
    /// its coordinates.
    pub fn reduce(&self, alpha: &Cochain) -> Result<Cochain> {
        let coords = self.class_of(alpha)?;
        Ok(coords
            .iter()
            .zip(self.generators(alpha.degree))
            .filter(|(c, _)| **c)
            .fold(Cochain::zero(alpha.degree), |acc, (_, g)| acc.add(g)))
    }
}

/// Computes `H^d` for every degree of the complex.
pub fn cohomology_f2(complex: &BasedComplex<F2>) -> CohomologyF2 {
    let top = complex.max_degree().map_or(0, |d| d + 1);
    let mut degrees = Vec::with_capacity(top);
    for d in 0..top {
        let rank = complex.rank(d);
        let words = rank.div_ceil(64).max(1);
        // cocycles: kernel of δ on C^d, tracked by basis tags
        let mut image = Echelon::default();
        let mut cocycles = Vec::new();
        for j in 0..rank {
            let delta = coboundary(&Cochain::dual(Cell::new(d, j)), complex);
            let mut tag = vec![0u64; words];
            tag[j / 64] |= 1 << (j % 64);
            let (residue, tag) = image.reduce(delta.words(complex.rank(d + 1)), tag);
            if lowest_bit(&residue).is_some() {
                image.insert(residue, tag);
            } else {
                cocycles.push(Cochain::from_words(d, &tag));
            }
        }
        // coboundaries from the previous degree
        let mut reducer = Echelon::default();
        if d > 0 {
            for j in 0..complex.rank(d - 1) {
                let b = coboundary(&Cochain::dual(Cell::new(d - 1, j)), complex);
                let (residue, tag) = reducer.reduce(b.words(rank), vec![0; 1]);
                if lowest_bit(&residue).is_some() {
                    reducer.insert(residue, tag);
                }
            }
        }
        let boundary_rank = reducer.rank();
        let tag_words = cocycles.len().div_ceil(64).max(1);
        for row in &mut reducer.rows {
            row.2 = vec![0; tag_words];
        }
        let mut generators = Vec::new();
        for z in &cocycles {
            let mut tag = vec![0u64; tag_words];
            let g = generators.len();
            tag[g / 64] |= 1 << (g % 64);
            let (residue, tag) = reducer.reduce(z.words(rank), tag);
            if lowest_bit(&residue).is_some() {
                reducer.insert(residue, tag);
                generators.push(z.clone());
            }
        }
        debug_assert_eq!(generators.len() + boundary_rank, cocycles.len());
        degrees.push(DegreeCohomology { degree: d, cochain_rank: rank, cocycle_rank: cocycles.len(), generators, reducer });
    }
    CohomologyF2 { degrees }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{SimplicialComplex, SteenrodCoalgebra};

    fn rp2() -> SteenrodCoalgebra {
        SteenrodCoalgebra::new(SimplicialComplex::from_maximal(crate::simplicial::RP2_TRIANGLES).unwrap())
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 0..5 {
            let c = SteenrodCoalgebra::standard_simplex(n);
            let mut expected = vec![0; n + 1];
            expected[0] = 1;
            assert_eq!(cohomology_f2(c.complex()).ranks(), expected);
        }
    }

    #[test]
    fn circle_has_one_class_in_each_degree() {
        let c = SteenrodCoalgebra::new(SimplicialComplex::from_maximal([[0, 1], [1, 2], [0, 2]]).unwrap());
        assert_eq!(cohomology_f2(c.complex()).ranks(), vec![1, 1]);
    }

    #[test]
    fn projective_plane_squares() {
        let c = rp2();
        let h = cohomology_f2(c.complex());
        assert_eq!(h.ranks(), vec![1, 1, 1]);
        let a = &h.generators(1)[0];
        let sq1 = steenrod_square(&c, 1, a).unwrap();
        assert_eq!(h.class_of(&sq1).unwrap(), vec![true]);
        assert_eq!(steenrod_square(&c, 1, a).unwrap(), cup_product(&c, a, a));
        assert!(steenrod_square(&c, 2, a).unwrap().is_zero());
    }

    #[test]
    fn sq0_is_the_identity_in_cohomology() {
        let c = rp2();
        let h = cohomology_f2(c.complex());
        for p in 0..=2 {
            for a in h.generators(p) {
                let sq0 = steenrod_square(&c, 0, a).unwrap();
                assert_eq!(sq0.degree(), p);
                assert_eq!(h.class_of(&sq0).unwrap(), h.class_of(a).unwrap());
            }
        }
    }

    #[test]
    fn sq1_of_a_top_class_lands_above_the_complex() {
        let c = rp2();
        let h = cohomology_f2(c.complex());
        let sq = steenrod_square(&c, 1, &h.generators(2)[0]).unwrap();
        assert_eq!(sq.degree(), 3);
        assert!(sq.is_zero());
    }

    #[test]
    fn square_of_non_cocycle_is_rejected() {
        let c = SteenrodCoalgebra::standard_simplex(2);
        let alpha = Cochain::dual(c.complex().require("[01]").unwrap());
        assert!(matches!(steenrod_square(&c, 0, &alpha), Err(Error::Contract(_))));
    }

    #[test]
    fn counit_cup() {
        let c = SteenrodCoalgebra::standard_simplex(0);
        let p = Cochain::dual(c.complex().require("[0]").unwrap());
        assert_eq!(cup_product(&c, &p, &p), p);
    }

    #[test]
    fn cup_on_an_edge_pairs_against_the_diagonal() {
        let c = SteenrodCoalgebra::standard_simplex(1);
        let cx = c.complex();
        let one = Cochain::dual(cx.require("[1]").unwrap());
        let edge = Cochain::dual(cx.require("[01]").unwrap());
        let zero = Cochain::dual(cx.require("[0]").unwrap());
        assert_eq!(cup_product(&c, &one, &edge), edge);
        assert_eq!(cup_product(&c, &edge, &zero), edge);
        assert!(cup_product(&c, &zero, &edge).is_zero());
    }

    #[test]
    fn cochain_json_round_trip() {
        let c = rp2();
        let alpha = Cochain::from_support(1, [0, 3]);
        let doc = alpha.to_doc(c.complex());
        assert_eq!(Cochain::from_doc(&doc, c.complex()).unwrap(), alpha);
    }
}
