use num_bigint::BigInt;

use super::closure::{generate_omega, Bounds, OmegaCat};
use super::mu::MuElement;
use super::steiner::steiner_atom;
use crate::coalgebra::{atom, is_group_like, Coalgebra};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::ring::{set_lift, Ring, F2};
use crate::simplicial::{SimplicialComplex, SteenrodCoalgebra};

/// The atoms of every basis cell; fails on the first cell that is not
/// group-like.
pub fn coalgebra_atoms<R: Ring>(coalgebra: &impl Coalgebra<R>) -> Result<Vec<MuElement<R>>> {
    let kmax = coalgebra.default_kmax();
    let complex = coalgebra.complex();
    complex
        .all_cells()
        .map(|b| {
            if !is_group_like(coalgebra, b, kmax) {
                return Err(Error::NotGroupLike(complex.name(b).to_string()));
            }
            atom(coalgebra, b)
        })
        .collect()
}

/// `ξ(C)`: the sub-ω-category of `μ(C)` generated by the atoms.
pub fn xi<R: Ring>(coalgebra: &impl Coalgebra<R>, bounds: Bounds) -> Result<OmegaCat<R>> {
    generate_omega(coalgebra_atoms(coalgebra)?, bounds)
}

/// `ξ` of an 𝔽₂-coalgebra with its atoms lifted to ℤ by `0 ↦ 0, 1 ↦ 1`,
/// closed inside `μ` of the integral chains.
pub fn xi_lifted(coalgebra: &impl Coalgebra<F2>, bounds: Bounds) -> Result<OmegaCat<BigInt>> {
    let atoms = coalgebra_atoms(coalgebra)?.iter().map(|a| a.map_ring(set_lift)).collect::<Vec<_>>();
    generate_omega(atoms, bounds)
}

/// Compares, for every simplex of `Δⁿ`, the ℤ-lifted cup-i atom with the
/// Steiner atom, after checking that the Steiner atoms only carry 0/1
/// coefficients.
pub fn compare_atoms(n: usize) -> Report {
    let steenrod = SteenrodCoalgebra::standard_simplex(n);
    compare_atoms_with(n, |b| atom(&steenrod, b))
}

/// [`compare_atoms`] with the 𝔽₂ side supplied by the caller.
pub fn compare_atoms_with(
    n: usize,
    f2_atom: impl Fn(crate::chain::Cell) -> Result<MuElement<F2>>,
) -> Report {
    let integral = SimplicialComplex::standard_simplex(n).chains::<BigInt>();
    let mut report = Report::new();
    let mut steiner = Vec::new();
    for b in integral.all_cells() {
        match steiner_atom(&integral, b) {
            Ok(a) if a.is_zero_one() => steiner.push(a),
            Ok(a) => {
                report.push(Violation::new("Steiner atom has 0/1 coefficients").cell(integral.name(b)).sides(a.format(&integral), "0/1 entries"));
                return report;
            }
            Err(e) => {
                report.push(Violation::new(format!("Steiner atom: {e}")).cell(integral.name(b)));
                return report;
            }
        }
    }
    for (b, expected) in integral.all_cells().zip(&steiner) {
        let lifted = match f2_atom(b) {
            Ok(a) => a.map_ring(set_lift),
            Err(e) => {
                report.push(Violation::new(format!("cup-i atom: {e}")).cell(integral.name(b)));
                continue;
            }
        };
        for k in 0..=b.degree() {
            for (side, got, want) in [("-", lifted.minus(k), expected.minus(k)), ("+", lifted.plus(k), expected.plus(k))] {
                if got != want {
                    report.push(
                        Violation::new(format!("lifted atom entry {side} equals Steiner entry"))
                            .cell(integral.name(b))
                            .k(k)
                            .sides(integral.format_chain(&got), integral.format_chain(&want)),
                    );
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::oriental;

    #[test]
    fn atoms_agree_up_to_four() {
        for n in 0..=4 {
            let r = compare_atoms(n);
            assert!(r.pass, "n = {n}: {}", r.summary());
        }
    }

    #[test]
    fn lifted_xi_is_the_oriental() {
        for n in 0..=2 {
            let lifted = xi_lifted(&SteenrodCoalgebra::standard_simplex(n), Bounds::default()).unwrap();
            assert!(lifted.same_elements(&oriental(n, Bounds::default()).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn xi_of_a_point() {
        assert_eq!(xi(&SteenrodCoalgebra::standard_simplex(0), Bounds::default()).unwrap().len(), 1);
    }
}
