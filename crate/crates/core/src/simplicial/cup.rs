//! Steenrod's cup-i coproducts on normalized simplicial chains over 𝔽₂.

use crate::chain::{BasedComplex, Cell, TensorChain};
use crate::coalgebra::Coalgebra;
use crate::ring::{Ring, F2};

use super::SimplicialComplex;

/// Splits `U = {u_1 < … < u_k}` by position parity: `u_i` goes to `U⁻`
/// when `u_i ≢ i (mod 2)` and to `U⁺` otherwise, with `i` counted from 1.
pub fn split_selector(u: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for (pos, &value) in u.iter().enumerate() {
        if value % 2 == (pos + 1) % 2 {
            plus.push(value);
        } else {
            minus.push(value);
        }
    }
    (minus, plus)
}

/// All `r`-subsets of `{0, …, n}` in lexicographic order.
pub(crate) fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n + 1 {
        return out;
    }
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // advance to the next combination
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n + 1 - r + i {
                current[i] += 1;
                for j in i + 1..r {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Δ_i(x) = Σ_{U ∈ P(n, n-i)} d_{U⁻} x ⊗ d_{U⁺} x` for a simplex `x` of
/// dimension `n`; zero when `i > n`.
pub fn cup_i(complex: &SimplicialComplex, x: Cell, i: usize) -> TensorChain<F2> {
    cup_i_with_split(complex, x, i, split_selector)
}

/// [`cup_i`] with the `U ↦ (U⁻, U⁺)` rule supplied by the caller.
pub fn cup_i_with_split(
    complex: &SimplicialComplex,
    x: Cell,
    i: usize,
    split: impl Fn(&[usize]) -> (Vec<usize>, Vec<usize>),
) -> TensorChain<F2> {
    let n = x.degree();
    let mut out = TensorChain::zero();
    if i > n {
        return out;
    }
    for u in subsets(n, n - i) {
        let (minus, plus) = split(&u);
        out.add_term(complex.face(x, &minus), complex.face(x, &plus), F2::one());
    }
    out
}

/// The Steenrod cup-i coalgebra `(C_•(X; 𝔽₂), Δ, ε)` of an ordered
/// simplicial complex.
#[derive(Clone, Debug)]
pub struct SteenrodCoalgebra {
    simplicial: SimplicialComplex,
    complex: BasedComplex<F2>,
}

impl SteenrodCoalgebra {
    pub fn new(simplicial: SimplicialComplex) -> Self {
        let complex = simplicial.chains();
        SteenrodCoalgebra { simplicial, complex }
    }

    pub fn standard_simplex(n: usize) -> Self {
        Self::new(SimplicialComplex::standard_simplex(n))
    }

    pub fn simplicial(&self) -> &SimplicialComplex {
        &self.simplicial
    }
}

impl Coalgebra<F2> for SteenrodCoalgebra {
    fn complex(&self) -> &BasedComplex<F2> {
        &self.complex
    }

    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<F2> {
        cup_i(&self.simplicial, cell, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(c: &BasedComplex<F2>, t: &TensorChain<F2>) -> String {
        c.format_tensor(t)
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_selector(&[0]), (vec![0], vec![]));
        assert_eq!(split_selector(&[1]), (vec![], vec![1]));
        assert_eq!(split_selector(&[0, 1]), (vec![0, 1], vec![]));
        assert_eq!(split_selector(&[1, 2]), (vec![], vec![1, 2]));
        assert_eq!(split_selector(&[]), (vec![], vec![]));
    }

    #[test]
    fn subsets_are_binomial() {
        assert_eq!(subsets(2, 1), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(subsets(3, 2).len(), 6);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(1, 3).is_empty());
    }

    #[test]
    fn cup_on_an_edge() {
        let c = SteenrodCoalgebra::standard_simplex(1);
        let e = c.complex().require("[01]").unwrap();
        assert_eq!(names(c.complex(), &c.delta_cell(e, 1)), "[01]⊗[01]");
        let d0 = c.delta_cell(e, 0);
        let expected = TensorChain::pure(c.complex().require("[1]").unwrap(), e)
            .add(&TensorChain::pure(e, c.complex().require("[0]").unwrap()));
        assert_eq!(d0, expected);
        assert!(c.delta_cell(e, 2).is_zero());
    }

    #[test]
    fn cup_one_on_a_triangle() {
        let c = SteenrodCoalgebra::standard_simplex(2);
        let cx = c.complex();
        let x = cx.require("[012]").unwrap();
        let cell = |s: &str| cx.require(s).unwrap();
        let expected = TensorChain::pure(cell("[12]"), x)
            .add(&TensorChain::pure(cell("[01]"), x))
            .add(&TensorChain::pure(x, cell("[02]")));
        assert_eq!(c.delta_cell(x, 1), expected);
    }
}
