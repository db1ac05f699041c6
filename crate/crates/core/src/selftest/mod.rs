//! The acceptance suite: ten criteria with independent oracles and planted
//! mutations. Shared by the `selftest` command and the `acceptance` test.

mod criteria;
mod mutation;
pub mod oracles;

pub use criteria::{
    criterion_1, criterion_10, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
    criterion_8, criterion_9, mutation_detections, run_all, Detection, MapCorpus, Outcome, ORIENTAL_COUNTS,
};
pub use mutation::{atom_with, FlippedGlobular, FlippedSplit, Mutation};
