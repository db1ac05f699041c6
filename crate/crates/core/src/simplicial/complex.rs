use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::chain::{BasedComplex, Cell};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A finite ordered simplicial complex. Simplices are strictly increasing
/// vertex lists; within each degree they are numbered in lexicographic order,
/// which is also the numbering of the basis cells of [`Self::chains`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
    lookup: HashMap<Vec<usize>, Cell>,
}

/// Ingestion format: `{ "maximal_simplices": [[0, 1, 2], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub maximal_simplices: Vec<Vec<usize>>,
}

/// Display name of a simplex: `[012]`, or `[0,1,12]` once a vertex has
/// more than one digit.
pub fn simplex_name(vertices: &[usize]) -> String {
    if vertices.iter().all(|&v| v < 10) {
        format!("[{}]", vertices.iter().map(|v| v.to_string()).collect::<String>())
    } else {
        format!("[{}]", vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl SimplicialComplex {
    /// Closes a list of simplices downward. Vertex lists may come in any
    /// order but must not repeat a vertex.
    pub fn from_maximal<V: AsRef<[usize]>>(maximal: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for simplex in maximal {
            let mut vertices = simplex.as_ref().to_vec();
            if vertices.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            vertices.sort_unstable();
            if vertices.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("simplex {:?} repeats a vertex", simplex.as_ref())));
            }
            if vertices.len() > 24 {
                return Err(Error::InvalidComplex(format!("simplex {:?} is too large to close downward", simplex.as_ref())));
            }
            let n = vertices.len();
            for mask in 1u32..(1 << n) {
                let face: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| vertices[i]).collect();
                all.insert(face);
            }
        }
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        for s in all {
            let d = s.len() - 1;
            if simplices.len() <= d {
                simplices.resize_with(d + 1, Vec::new);
            }
            simplices[d].push(s);
        }
        for level in &mut simplices {
            level.sort();
        }
        let lookup = simplices
            .iter()
            .enumerate()
            .flat_map(|(d, level)| level.iter().enumerate().map(move |(i, s)| (s.clone(), Cell::new(d, i))))
            .collect();
        Ok(SimplicialComplex { simplices, lookup })
    }

    /// The standard simplex `Δⁿ` on vertices `0..=n`.
    pub fn standard_simplex(n: usize) -> Self {
        Self::from_maximal([(0..=n).collect::<Vec<_>>()]).expect("standard simplex is well formed")
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        Self::from_maximal(&file.maximal_simplices)
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.simplices.get(degree).map_or(0, Vec::len)
    }

    pub fn cells(&self, degree: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rank(degree)).map(move |i| Cell::new(degree, i))
    }

    pub fn all_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.simplices.len()).flat_map(move |d| self.cells(d))
    }

    pub fn vertices(&self, cell: Cell) -> &[usize] {
        &self.simplices[cell.degree()][cell.index()]
    }

    pub fn cell(&self, vertices: &[usize]) -> Option<Cell> {
        self.lookup.get(vertices).copied()
    }

    /// `d_U x`: the face obtained by deleting the vertices at `positions`.
    pub fn face(&self, cell: Cell, positions: &[usize]) -> Cell {
        let vertices = self.vertices(cell);
        let kept: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|(p, _)| !positions.contains(p))
            .map(|(_, v)| *v)
            .collect();
        self.cell(&kept).expect("faces of a simplex belong to the complex")
    }

    /// Simplicial chains with the alternating-sum differential and
    /// augmentation one on vertices.
    pub fn chains<R: Ring>(&self) -> BasedComplex<R> {
        let mut builder = BasedComplex::builder();
        for level in &self.simplices {
            for s in level {
                let boundary: Vec<(String, R)> = if s.len() == 1 {
                    Vec::new()
                } else {
                    (0..s.len())
                        .map(|j| {
                            let mut face = s.clone();
                            face.remove(j);
                            (simplex_name(&face), R::sign_power(j))
                        })
                        .collect()
                };
                builder.cell(simplex_name(s), s.len() - 1, boundary).expect("faces are added first");
            }
        }
        builder.build().expect("simplicial chains satisfy ∂∂ = 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Chain;
    use num_bigint::BigInt;

    #[test]
    fn standard_simplex_ranks_are_binomial() {
        let d2 = SimplicialComplex::standard_simplex(2);
        assert_eq!((0..3).map(|d| d2.rank(d)).collect::<Vec<_>>(), vec![3, 3, 1]);
        let d4 = SimplicialComplex::standard_simplex(4);
        assert_eq!((0..5).map(|d| d4.rank(d)).collect::<Vec<_>>(), vec![5, 10, 10, 5, 1]);
    }

    #[test]
    fn boundary_of_triangle() {
        let sc = SimplicialComplex::standard_simplex(2);
        let c = sc.chains::<BigInt>();
        let top = c.require("[012]").unwrap();
        let expected = Chain::from_terms([
            (c.require("[12]").unwrap(), BigInt::from(1)),
            (c.require("[02]").unwrap(), BigInt::from(-1)),
            (c.require("[01]").unwrap(), BigInt::from(1)),
        ]);
        assert_eq!(c.boundary_of(top), &expected);
        assert_eq!(c.augment_cell(c.require("[0]").unwrap()), BigInt::from(1));
    }

    #[test]
    fn cell_numbering_agrees_with_chains() {
        let sc = SimplicialComplex::standard_simplex(3);
        let c = sc.chains::<BigInt>();
        for cell in sc.all_cells() {
            assert_eq!(c.name(cell), simplex_name(sc.vertices(cell)));
        }
    }

    #[test]
    fn face_deletes_positions() {
        let sc = SimplicialComplex::standard_simplex(3);
        let top = sc.cell(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sc.vertices(sc.face(top, &[0, 2])), &[1, 3]);
    }

    #[test]
    fn ingestion_closes_downward_and_rejects_repeats() {
        let sc = SimplicialComplex::from_maximal([vec![2, 0, 1], vec![2, 3]]).unwrap();
        assert_eq!(sc.rank(0), 4);
        assert_eq!(sc.rank(1), 4);
        assert!(SimplicialComplex::from_maximal([vec![1, 1]]).is_err());
        assert_eq!(simplex_name(&[0, 10]), "[0,10]");
    }
}
