use serde::{Deserialize, Serialize};

use crate::chain::{BasedComplex, Chain, ChainDoc};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::ring::Ring;

/// A cell of `μ(C)`: a finite double sequence `(c_0^-, c_0^+, c_1^-, c_1^+, …)`
/// with `c_k^±` of degree `k` and `∂c_{k+1}^- = ∂c_{k+1}^+ = c_k^+ - c_k^-`.
///
/// Stored trimmed: the last stored pair is nonzero, so equal elements are
/// syntactically equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuElement<R: Ring> {
    minus: Vec<Chain<R>>,
    plus: Vec<Chain<R>>,
}

impl<R: Ring> MuElement<R> {
    /// Builds an element from its two entry sequences, padding the shorter
    /// one with zeros and trimming trailing zero pairs.
    pub fn new(mut minus: Vec<Chain<R>>, mut plus: Vec<Chain<R>>) -> Self {
        let len = minus.len().max(plus.len());
        minus.resize_with(len, Chain::zero);
        plus.resize_with(len, Chain::zero);
        let mut m = MuElement { minus, plus };
        m.trim();
        m
    }

    pub fn zero() -> Self {
        MuElement { minus: Vec::new(), plus: Vec::new() }
    }

    fn trim(&mut self) {
        while self.minus.last().is_some_and(Chain::is_zero) && self.plus.last().is_some_and(Chain::is_zero) {
            self.minus.pop();
            self.plus.pop();
        }
    }

    /// Index of the last nonzero pair; `None` for the zero element.
    pub fn top(&self) -> Option<usize> {
        self.minus.len().checked_sub(1)
    }

    /// Dimension in the globular set `μ(C)`: the least `n` with all entries
    /// above `n` zero.
    pub fn dim(&self) -> usize {
        self.top().unwrap_or(0)
    }

    pub fn minus(&self, k: usize) -> Chain<R> {
        self.minus.get(k).cloned().unwrap_or_default()
    }

    pub fn plus(&self, k: usize) -> Chain<R> {
        self.plus.get(k).cloned().unwrap_or_default()
    }

    pub fn minus_entries(&self) -> &[Chain<R>] {
        &self.minus
    }

    pub fn plus_entries(&self) -> &[Chain<R>] {
        &self.plus
    }

    /// `s_k(c) = (c_0^-, c_0^+, …, c_{k-1}^+, c_k^-, c_k^-, 0, …)`
    pub fn source(&self, k: usize) -> Self {
        self.face(k, false)
    }

    /// `t_k(c) = (c_0^-, c_0^+, …, c_{k-1}^+, c_k^+, c_k^+, 0, …)`
    pub fn target(&self, k: usize) -> Self {
        self.face(k, true)
    }

    /// `i_k(c) = c`
    pub fn identity(&self, _k: usize) -> Self {
        self.clone()
    }

    fn face(&self, k: usize, target: bool) -> Self {
        if self.minus.len() <= k + 1 {
            return self.clone();
        }
        let mut minus = self.minus[..=k].to_vec();
        let mut plus = self.plus[..=k].to_vec();
        if target {
            minus[k] = plus[k].clone();
        } else {
            plus[k] = minus[k].clone();
        }
        Self::new(minus, plus)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.add(b))
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.sub(b))
    }

    fn combine(&self, other: &Self, op: impl Fn(&Chain<R>, &Chain<R>) -> Chain<R>) -> Self {
        let len = self.minus.len().max(other.minus.len());
        let minus = (0..len).map(|k| op(&self.minus(k), &other.minus(k))).collect();
        let plus = (0..len).map(|k| op(&self.plus(k), &other.plus(k))).collect();
        Self::new(minus, plus)
    }

    /// `b ∘_m a = b + a - s_m(b)`, defined when `s_m(b) = t_m(a)`.
    pub fn compose(b: &Self, a: &Self, m: usize) -> Result<Self> {
        let source = b.source(m);
        let target = a.target(m);
        if source != target {
            let k = (0..=m)
                .find(|&k| source.minus(k) != target.minus(k) || source.plus(k) != target.plus(k))
                .unwrap_or(m);
            return Err(Error::NotComposable {
                level: m,
                detail: format!("s_{m}(b) and t_{m}(a) differ in entry {k}"),
            });
        }
        Ok(Self::compose_unchecked(b, a, &source))
    }

    /// `b + a - c` without the composability check.
    pub fn compose_unchecked(b: &Self, a: &Self, c: &Self) -> Self {
        b.add(a).sub(c)
    }

    pub fn max_magnitude(&self) -> u64 {
        self.minus.iter().chain(&self.plus).map(Chain::max_magnitude).max().unwrap_or(0)
    }

    /// True when every coefficient is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.minus.iter().chain(&self.plus).all(|c| c.terms().all(|(_, v)| v.is_one()))
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> MuElement<S> {
        MuElement::new(
            self.minus.iter().map(|c| c.map_ring(&f)).collect(),
            self.plus.iter().map(|c| c.map_ring(&f)).collect(),
        )
    }

    pub fn format(&self, complex: &BasedComplex<R>) -> String {
        let entries: Vec<String> = self
            .minus
            .iter()
            .zip(&self.plus)
            .flat_map(|(m, p)| [complex.format_chain(m), complex.format_chain(p)])
            .collect();
        format!("({})", entries.join(", "))
    }

    pub fn to_doc(&self, complex: &BasedComplex<R>) -> MuDoc {
        MuDoc {
            top: self.top(),
            minus: self.minus.iter().map(|c| complex.chain_to_doc(c)).collect(),
            plus: self.plus.iter().map(|c| complex.chain_to_doc(c)).collect(),
        }
    }

    pub fn from_doc(doc: &MuDoc, complex: &BasedComplex<R>) -> Result<Self> {
        let minus = doc.minus.iter().map(|c| complex.chain_from_doc(c)).collect::<Result<Vec<_>>>()?;
        let plus = doc.plus.iter().map(|c| complex.chain_from_doc(c)).collect::<Result<Vec<_>>>()?;
        let m = Self::new(minus, plus);
        if m.top() != doc.top {
            return Err(Error::Parse(format!("declared top {:?} but entries give {:?}", doc.top, m.top())));
        }
        Ok(m)
    }
}

/// JSON form `{ "top": n, "minus": [chain...], "plus": [chain...] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuDoc {
    pub top: Option<usize>,
    pub minus: Vec<ChainDoc>,
    pub plus: Vec<ChainDoc>,
}

/// Checks conditions i)–iii): entries homogeneous of the right degree and
/// known to `complex`, finitely many nonzero entries (by construction), and
/// `∂c_{k+1}^- = ∂c_{k+1}^+ = c_k^+ - c_k^-` for every `k`.
pub fn mu_validate<R: Ring>(m: &MuElement<R>, complex: &BasedComplex<R>) -> Report {
    let mut report = Report::new();
    let len = m.minus.len();
    for k in 0..len {
        for (side, chain) in [("-", &m.minus[k]), ("+", &m.plus[k])] {
            if let Some(cell) = chain.cells().find(|c| !complex.contains(*c)) {
                report.push(Violation::new(format!("entry c_{k}^{side} mentions an unknown cell {cell:?}")).k(k));
                return report;
            }
            if !chain.is_homogeneous_of(k) {
                report.push(
                    Violation::new(format!("entry c_{k}^{side} is not homogeneous of degree {k}"))
                        .k(k)
                        .sides(complex.format_chain(chain), format!("degree {k}")),
                );
            }
        }
    }
    if !report.pass {
        return report;
    }
    for k in 0..len {
        let difference = m.plus[k].sub(&m.minus[k]);
        for (side, next) in [("-", m.minus(k + 1)), ("+", m.plus(k + 1))] {
            let boundary = complex.boundary(&next).expect("cells checked above");
            if boundary != difference {
                report.push(
                    Violation::new(format!("∂c_{}^{side} = c_{k}^+ - c_{k}^-", k + 1))
                        .k(k)
                        .sides(complex.format_chain(&boundary), complex.format_chain(&difference)),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Cell;
    use num_bigint::BigInt;

    fn cell(d: usize, i: usize) -> Chain<BigInt> {
        Chain::from_cell(Cell::new(d, i))
    }

    #[test]
    fn trimming_makes_equality_syntactic() {
        let a = MuElement::new(vec![cell(0, 0), Chain::zero()], vec![cell(0, 0), Chain::zero()]);
        let b = MuElement::new(vec![cell(0, 0)], vec![cell(0, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.top(), Some(0));
        assert_eq!(MuElement::<BigInt>::new(vec![], vec![]).top(), None);
    }

    #[test]
    fn faces_at_or_above_top_are_identity() {
        let e = MuElement::new(vec![cell(0, 0), cell(1, 0)], vec![cell(0, 1), cell(1, 0)]);
        assert_eq!(e.source(1), e);
        assert_eq!(e.target(5), e);
        assert_eq!(e.source(0), MuElement::new(vec![cell(0, 0)], vec![cell(0, 0)]));
        assert_eq!(e.target(0), MuElement::new(vec![cell(0, 1)], vec![cell(0, 1)]));
        assert_eq!(e.identity(3), e);
    }

    #[test]
    fn mismatched_composition_is_rejected() {
        let e = MuElement::new(vec![cell(0, 0), cell(1, 0)], vec![cell(0, 1), cell(1, 0)]);
        let err = MuElement::compose(&e, &e, 0).unwrap_err();
        assert!(matches!(err, Error::NotComposable { level: 0, .. }));
    }
}
