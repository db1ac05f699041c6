use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;

use super::{Cell, Chain};
use crate::ring::Ring;

/// An element of `C ⊗ C` in canonical sparse form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorChain<R: Ring> {
    terms: BTreeMap<(Cell, Cell), R>,
}

impl<R: Ring> Default for TensorChain<R> {
    fn default() -> Self {
        TensorChain { terms: BTreeMap::new() }
    }
}

impl<R: Ring> TensorChain<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(left: Cell, right: Cell) -> Self {
        Self::term(left, right, R::one())
    }

    pub fn term(left: Cell, right: Cell, coeff: R) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, coeff);
        t
    }

    /// `x ⊗ y` extended bilinearly.
    pub fn tensor(x: &Chain<R>, y: &Chain<R>) -> Self {
        let mut t = Self::zero();
        t.add_tensor(x, y, &R::one());
        t
    }

    /// `self += coeff · (x ⊗ y)`
    pub fn add_tensor(&mut self, x: &Chain<R>, y: &Chain<R>, coeff: &R) {
        for (a, ca) in x.terms() {
            let ca = ca.mul(coeff);
            for (b, cb) in y.terms() {
                self.add_term(*a, *b, ca.mul(cb));
            }
        }
    }

    pub fn add_term(&mut self, left: Cell, right: Cell, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    pub fn add_scaled(&mut self, other: &Self, coeff: &R) {
        if coeff.is_zero() {
            return;
        }
        for ((a, b), c) in &other.terms {
            self.add_term(*a, *b, c.mul(coeff));
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

    pub fn terms(&self) -> btree_map::Iter<'_, (Cell, Cell), R> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: Cell, right: Cell) -> R {
        self.terms.get(&(left, right)).cloned().unwrap_or_else(R::zero)
    }

    /// The transposition `T(x ⊗ y) = (-1)^{|x||y|} y ⊗ x`.
    pub fn koszul_swap(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let sign = R::sign_power(a.degree() * b.degree());
            out.add_term(*b, *a, c.mul(&sign));
        }
        out
    }

    /// Apply `f ⊗ g` for linear maps given on basis cells.
    pub fn map_factors(
        &self,
        mut left: impl FnMut(Cell) -> Chain<R>,
        mut right: impl FnMut(Cell) -> Chain<R>,
    ) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_tensor(&left(*a), &right(*b), c);
        }
        out
    }

    /// True when every term lies in `C_{≤n} ⊗ C_{≤n}`.
    pub fn within_degree(&self, max_degree: usize) -> bool {
        self.terms.keys().all(|(a, b)| a.degree() <= max_degree && b.degree() <= max_degree)
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> TensorChain<S> {
        let mut out = TensorChain::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, f(c));
        }
        out
    }
}

impl<R: Ring> FromIterator<((Cell, Cell), R)> for TensorChain<R> {
    fn from_iter<I: IntoIterator<Item = ((Cell, Cell), R)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in iter {
            out.add_term(a, b, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::F2;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn swap_of_two_edges_is_negative() {
        let e01 = Cell::new(1, 0);
        let e12 = Cell::new(1, 2);
        let t = TensorChain::<BigInt>::pure(e01, e12);
        assert_eq!(t.koszul_swap(), TensorChain::term(e12, e01, BigInt::from(-1)));
    }

    #[test]
    fn swap_with_degree_zero_factor_has_no_sign() {
        let v = Cell::new(0, 0);
        let top = Cell::new(2, 0);
        let t = TensorChain::<BigInt>::pure(v, top);
        assert_eq!(t.koszul_swap(), TensorChain::pure(top, v));
    }

    #[test]
    fn signs_vanish_over_f2() {
        let e = Cell::new(1, 0);
        let t = TensorChain::<F2>::pure(e, e);
        assert_eq!(t.koszul_swap(), t);
    }

    proptest! {
        #[test]
        fn swap_is_involution(terms in proptest::collection::vec((0usize..4, 0usize..3, 0usize..4, 0usize..3, -3i64..4), 0..10)) {
            let t: TensorChain<BigInt> = terms
                .into_iter()
                .map(|(d1, i1, d2, i2, v)| ((Cell::new(d1, i1), Cell::new(d2, i2)), BigInt::from(v)))
                .collect();
            prop_assert_eq!(t.koszul_swap().koszul_swap(), t);
        }
    }
}
