//! Exact chain-level algebra for globular and simplicial coalgebras.
//!
//! The crate works over two exact rings, the integers and the field with
//! two elements, and provides:
//!
//! * sparse chains, based augmented complexes and their tensor squares ([`chain`]);
//! * counital cosymmetric coalgebras, coalgebra maps and atoms ([`coalgebra`]);
//! * finite globular sets, their coalgebra of chains, and reconstruction of
//!   globular maps from coalgebra maps ([`globular`]);
//! * Steenrod's cup-i coalgebra, cup products and squares ([`simplicial`]);
//! * the μ-construction, generated ω-categories, Steiner atoms and
//!   orientals ([`omega`]).

pub mod chain;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod globular;
pub mod omega;
pub mod report;
pub mod ring;
pub mod selftest;
pub mod simplicial;

pub use error::{Error, Result};
pub use report::{Report, Violation};
pub use ring::{Ring, RingKind, F2};
