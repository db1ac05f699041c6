//! Counital cosymmetric coalgebras presented by their `Δ_k` families.
//!
//! A coalgebra structure is a based augmented complex together with maps
//! `Δ_k : C → C ⊗ C` for `k ≥ 0` satisfying
//!
//! ```text
//! ∂Δ_k - (-1)^k Δ_k ∂ = (1 + (-1)^k T) Δ_{k-1},    Δ_{-1} = 0,
//! ```
//!
//! and the counit identities `(1⊗ε)Δ_0 = id = (ε⊗1)Δ_0`, with `ε` killing
//! either side of `Δ_k` for `k > 0`. The resolution `W` never appears
//! explicitly; the family above is the whole datum.

mod atom;
mod map;

pub use atom::{atom, classify_basis_image, is_group_like, is_group_like_element, project, Side};
pub use map::{validate_coalgebra_map, CoalgebraMap, CoalgebraMapDoc};

use std::collections::HashMap;

use crate::chain::{BasedComplex, Cell, Chain, TensorChain};
use crate::report::{Report, Violation};
use crate::ring::Ring;

/// A `Δ_k` family on a based complex.
pub trait Coalgebra<R: Ring> {
    fn complex(&self) -> &BasedComplex<R>;

    /// `Δ_k` on a basis cell.
    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<R>;

    /// `Δ_k` extended linearly.
    fn delta(&self, chain: &Chain<R>, k: usize) -> TensorChain<R> {
        let mut out = TensorChain::zero();
        for (cell, coeff) in chain.terms() {
            out.add_scaled(&self.delta_cell(*cell, k), coeff);
        }
        out
    }

    /// Largest `k` worth checking: top degree plus two.
    fn default_kmax(&self) -> usize {
        self.complex().max_degree().unwrap_or(0) + 2
    }
}

impl<R: Ring, C: Coalgebra<R> + ?Sized> Coalgebra<R> for &C {
    fn complex(&self) -> &BasedComplex<R> {
        (**self).complex()
    }
    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<R> {
        (**self).delta_cell(cell, k)
    }
}

/// A coalgebra given by an explicit table of `Δ_k` values; missing entries
/// are zero. Mostly useful for hand-built examples and planted defects.
#[derive(Clone, Debug)]
pub struct TableCoalgebra<R: Ring> {
    complex: BasedComplex<R>,
    table: HashMap<(Cell, usize), TensorChain<R>>,
}

impl<R: Ring> TableCoalgebra<R> {
    pub fn new(complex: BasedComplex<R>) -> Self {
        TableCoalgebra { complex, table: HashMap::new() }
    }

    /// Tabulates another coalgebra for `k ≤ kmax`.
    pub fn tabulate(source: &impl Coalgebra<R>, kmax: usize) -> Self {
        let mut table = HashMap::new();
        for cell in source.complex().all_cells() {
            for k in 0..=kmax {
                let t = source.delta_cell(cell, k);
                if !t.is_zero() {
                    table.insert((cell, k), t);
                }
            }
        }
        TableCoalgebra { complex: source.complex().clone(), table }
    }

    pub fn set(&mut self, cell: Cell, k: usize, value: TensorChain<R>) {
        if value.is_zero() {
            self.table.remove(&(cell, k));
        } else {
            self.table.insert((cell, k), value);
        }
    }
}

impl<R: Ring> Coalgebra<R> for TableCoalgebra<R> {
    fn complex(&self) -> &BasedComplex<R> {
        &self.complex
    }

    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<R> {
        self.table.get(&(cell, k)).cloned().unwrap_or_default()
    }
}

/// Checks the cosymmetry relation for `0 ≤ k ≤ kmax` and the counit
/// identities on every basis cell.
pub fn validate_cosymmetric<R: Ring>(coalgebra: &impl Coalgebra<R>, kmax: usize) -> Report {
    let complex = coalgebra.complex();
    let mut report = Report::new();
    for cell in complex.all_cells() {
        let name = complex.name(cell);
        let boundary = complex.boundary_of(cell);
        let mut previous = TensorChain::zero();
        for k in 0..=kmax {
            let current = coalgebra.delta_cell(cell, k);
            let sign = R::sign_power(k);
            let lhs = complex
                .tensor_boundary(&current)
                .expect("Δ_k lands in the complex")
                .sub(&coalgebra.delta(boundary, k).scale(&sign));
            let rhs = previous.add(&previous.koszul_swap().scale(&sign));
            if lhs != rhs {
                report.push(
                    Violation::new("cosymmetry")
                        .cell(name)
                        .k(k)
                        .sides(complex.format_tensor(&lhs), complex.format_tensor(&rhs)),
                );
            }

            let right = complex.counit_right(&current);
            let left = complex.counit_left(&current);
            let expected = if k == 0 { Chain::from_cell(cell) } else { Chain::zero() };
            if right != expected {
                report.push(
                    Violation::new("counit (1⊗ε)")
                        .cell(name)
                        .k(k)
                        .sides(complex.format_chain(&right), complex.format_chain(&expected)),
                );
            }
            if left != expected {
                report.push(
                    Violation::new("counit (ε⊗1)")
                        .cell(name)
                        .k(k)
                        .sides(complex.format_chain(&left), complex.format_chain(&expected)),
                );
            }
            previous = current;
        }
    }
    report
}
