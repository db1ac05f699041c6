//! Deliberately broken variants of the constructions, used to show the
//! validators are not vacuous.

use std::fmt;

use crate::chain::{BasedComplex, Cell, TensorChain};
use crate::coalgebra::{atom, is_group_like, project, Coalgebra, Side};
use crate::error::{Error, Result};
use crate::globular::GlobularCoalgebra;
use crate::omega::MuElement;
use crate::ring::{Ring, F2};
use crate::simplicial::{cup_i_with_split, split_selector, SimplicialComplex};

/// The three planted defects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Negates the sign `(-1)^{(n+1)k}` of the globular coproduct.
    GlobularSign,
    /// Swaps `U⁻` and `U⁺` in the cup-i coproducts.
    SplitParity,
    /// Replaces `(-1)^k` by `(-1)^{k+1}` in the minus side of atoms.
    AtomSign,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::GlobularSign, Mutation::SplitParity, Mutation::AtomSign];
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::GlobularSign => "globular coproduct sign",
            Mutation::SplitParity => "cup-i split parity",
            Mutation::AtomSign => "atom sign",
        })
    }
}

/// A globular coalgebra whose second summand `x ⊗ s_k x` has the wrong sign.
pub struct FlippedGlobular<'a, R: Ring>(pub &'a GlobularCoalgebra<R>);

impl<R: Ring> Coalgebra<R> for FlippedGlobular<'_, R> {
    fn complex(&self) -> &BasedComplex<R> {
        self.0.complex()
    }

    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<R> {
        let delta = self.0.delta_cell(cell, k);
        let n = cell.degree();
        if k >= n {
            return delta;
        }
        delta
            .terms()
            .map(|((x, y), c)| ((*x, *y), if x.degree() == n { c.neg() } else { c.clone() }))
            .collect()
    }
}

/// The cup-i coalgebra with `U⁻` and `U⁺` exchanged.
pub struct FlippedSplit {
    simplicial: SimplicialComplex,
    complex: BasedComplex<F2>,
}

impl FlippedSplit {
    pub fn standard_simplex(n: usize) -> Self {
        let simplicial = SimplicialComplex::standard_simplex(n);
        let complex = simplicial.chains();
        FlippedSplit { simplicial, complex }
    }
}

impl Coalgebra<F2> for FlippedSplit {
    fn complex(&self) -> &BasedComplex<F2> {
        &self.complex
    }

    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<F2> {
        cup_i_with_split(&self.simplicial, cell, k, |u| {
            let (minus, plus) = split_selector(u);
            (plus, minus)
        })
    }
}

/// The atom of `b`, with the sign on the minus side flipped when `flip`.
pub fn atom_with<R: Ring>(coalgebra: &impl Coalgebra<R>, b: Cell, flip: bool) -> Result<MuElement<R>> {
    if !flip {
        return atom(coalgebra, b);
    }
    if !is_group_like(coalgebra, b, coalgebra.default_kmax()) {
        return Err(Error::NotGroupLike(coalgebra.complex().name(b).to_string()));
    }
    let (minus, plus) = (0..=b.degree())
        .map(|k| {
            let delta = coalgebra.delta_cell(b, k);
            (project(b, Side::Minus, &delta).scale(&R::sign_power(k + 1)), project(b, Side::Plus, &delta))
        })
        .unzip();
    Ok(MuElement::new(minus, plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::validate_cosymmetric;
    use crate::globular::representable;
    use num_bigint::BigInt;

    #[test]
    fn flipped_globular_sign_breaks_the_relation() {
        let g = GlobularCoalgebra::<BigInt>::new(&representable(2, 2).unwrap()).unwrap();
        assert!(!validate_cosymmetric(&FlippedGlobular(&g), 4).pass);
    }

    #[test]
    fn flipped_atom_sign_differs_over_the_integers() {
        let g = GlobularCoalgebra::<BigInt>::new(&representable(1, 1).unwrap()).unwrap();
        let x = g.complex().require("x").unwrap();
        assert_ne!(atom_with(&g, x, true).unwrap(), atom_with(&g, x, false).unwrap());
    }
}
