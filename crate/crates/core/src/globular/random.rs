//! Seeded random globular sets and globular maps for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use super::map::GlobularMap;
use super::set::{Globe, GlobularBuilder, GlobularSet};

/// Size limits for [`random_globular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomShape {
    pub max_dim: usize,
    pub max_cells: usize,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape { max_dim: 4, max_cells: 6 }
    }
}

/// A random globular set with a random truncation in `0..=max_dim`.
pub fn random_globular(rng: &mut impl Rng, shape: RandomShape) -> GlobularSet {
    let truncation = rng.random_range(0..=shape.max_dim);
    random_globular_truncated(rng, truncation, shape.max_cells)
}

/// A random globular set truncated at `truncation`: 1 to `max_cells` points
/// and up to `max_cells` non-degenerate cells in each higher dimension. A new
/// cell takes a uniformly random target and a uniformly random source among
/// the cells parallel to it, identities included.
pub fn random_globular_truncated(rng: &mut impl Rng, truncation: usize, max_cells: usize) -> GlobularSet {
    let mut b = GlobularBuilder::new(truncation);
    for p in 0..rng.random_range(1..=max_cells.max(1)) {
        b.point(format!("p{p}")).expect("fresh name");
    }
    for d in 1..=truncation {
        let below = b.available(d - 1);
        for j in 0..rng.random_range(0..=max_cells) {
            let target = below[rng.random_range(0..below.len())];
            let parallel: Vec<Globe> = below
                .iter()
                .copied()
                .filter(|c| d == 1 || b.faces(*c) == b.faces(target))
                .collect();
            let source = parallel[rng.random_range(0..parallel.len())];
            b.cell(format!("c{d}_{j}"), source, target).expect("faces are parallel");
        }
    }
    b.build().expect("generated sets satisfy the globular relations")
}

/// A random globular map `X → Y` between sets of equal truncation, found by
/// randomized depth-first search over images of the non-degenerate cells.
/// Falls back to the constant map onto a random point when the search
/// budget runs out.
pub fn random_globular_map(rng: &mut impl Rng, x: &GlobularSet, y: &GlobularSet) -> GlobularMap {
    assert_eq!(x.truncation(), y.truncation(), "maps need equal truncations");
    let order: Vec<Globe> = (0..=x.truncation()).flat_map(|d| x.nondegenerate(d).collect::<Vec<_>>()).collect();
    let mut assigned: Vec<Vec<Option<usize>>> = (0..=x.truncation()).map(|d| vec![None; x.count(d)]).collect();
    let mut budget = 20_000usize;
    if search(rng, x, y, &order, 0, &mut assigned, &mut budget) {
        return complete(x, y, &assigned);
    }
    let p = Globe::new(0, rng.random_range(0..y.count(0)));
    let images = (0..=x.truncation()).map(|d| vec![y.identity_at(p, d).index; x.count(d)]).collect();
    GlobularMap::from_images(images)
}

/// Image of `c`, resolving identity cells through their faces.
fn resolved(x: &GlobularSet, y: &GlobularSet, assigned: &[Vec<Option<usize>>], c: Globe) -> Option<Globe> {
    if x.is_degenerate(c) {
        return resolved(x, y, assigned, x.t(c)).map(|g| y.i(g));
    }
    assigned[c.dim][c.index].map(|i| Globe::new(c.dim, i))
}

fn search(
    rng: &mut impl Rng,
    x: &GlobularSet,
    y: &GlobularSet,
    order: &[Globe],
    at: usize,
    assigned: &mut Vec<Vec<Option<usize>>>,
    budget: &mut usize,
) -> bool {
    let Some(&c) = order.get(at) else {
        return true;
    };
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let mut candidates: Vec<Globe> = if c.dim == 0 {
        y.cells(0).collect()
    } else {
        let t = resolved(x, y, assigned, x.t(c)).expect("faces come first");
        let s = resolved(x, y, assigned, x.s(c)).expect("faces come first");
        y.cells(c.dim).filter(|g| y.t(*g) == t && y.s(*g) == s).collect()
    };
    candidates.shuffle(rng);
    for g in candidates {
        assigned[c.dim][c.index] = Some(g.index);
        if search(rng, x, y, order, at + 1, assigned, budget) {
            return true;
        }
        if *budget == 0 {
            break;
        }
    }
    assigned[c.dim][c.index] = None;
    false
}

fn complete(x: &GlobularSet, y: &GlobularSet, assigned: &[Vec<Option<usize>>]) -> GlobularMap {
    let images = (0..=x.truncation())
        .map(|d| x.cells(d).map(|c| resolved(x, y, assigned, c).expect("assigned").index).collect())
        .collect();
    GlobularMap::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::globular::{validate_globular, validate_globular_map};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_sets_and_maps_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = random_globular(&mut rng, RandomShape::default());
            assert!(validate_globular(&x).pass);
            let y = random_globular_truncated(&mut rng, x.truncation(), 6);
            let f = random_globular_map(&mut rng, &x, &y);
            assert!(validate_globular_map(&f, &x, &y).pass);
        }
    }

    #[test]
    fn generation_is_seeded() {
        let a = random_globular(&mut ChaCha8Rng::seed_from_u64(3), RandomShape::default());
        let b = random_globular(&mut ChaCha8Rng::seed_from_u64(3), RandomShape::default());
        assert_eq!(a, b);
    }
}
