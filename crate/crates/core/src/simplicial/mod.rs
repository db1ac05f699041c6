//! Ordered simplicial complexes, Steenrod's cup-i coalgebra and mod-2
//! cohomology operations.

mod cohomology;
mod complex;
mod cup;

pub use cohomology::{
    coboundary, cohomology_f2, cup_product, is_cocycle, steenrod_square, Cochain, CochainDoc, CohomologyF2,
    DegreeCohomology,
};
pub use complex::{simplex_name, ComplexFile, SimplicialComplex};
pub use cup::{cup_i, cup_i_with_split, split_selector, SteenrodCoalgebra};

/// The minimal six-vertex triangulation of the real projective plane.
pub const RP2_TRIANGLES: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];
