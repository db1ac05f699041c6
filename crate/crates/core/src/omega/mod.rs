//! The μ-construction, finitely generated sub-ω-categories, Steiner's
//! directed complexes and the orientals.

mod closure;
mod mu;
mod steiner;
mod xi;

pub use closure::{
    check_omega_axioms, generate_omega, AxiomReport, AxiomSampling, Bounds, ElementDoc, OmegaCat, OmegaDoc,
};
pub use mu::{mu_validate, MuDoc, MuElement};
pub use steiner::{oriental, steiner_atom, validate_sadc};
pub use xi::{coalgebra_atoms, compare_atoms, compare_atoms_with, xi, xi_lifted};
