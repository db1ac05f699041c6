//! Finite reflexive globular sets, their globular coalgebras, and the
//! correspondence between globular maps and coalgebra maps.

mod coalgebra;
mod map;
mod random;
mod set;

pub use coalgebra::{chains_of_map, reconstruct_map, GlobularCoalgebra};
pub use map::{validate_globular_map, GlobularMap, GlobularMapDoc};
pub use random::{random_globular, random_globular_map, random_globular_truncated, RandomShape};
pub use set::{boundary_representable, representable, validate_globular, Globe, GlobularBuilder, GlobularDoc, GlobularSet};
