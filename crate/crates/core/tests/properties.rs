use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use coglobe::coalgebra::{validate_coalgebra_map, validate_cosymmetric, Coalgebra};
use coglobe::globular::{
    chains_of_map, random_globular, random_globular_map, random_globular_truncated, reconstruct_map, validate_globular_map,
    GlobularCoalgebra, RandomShape,
};
use coglobe::simplicial::{cohomology_f2, cup_product, steenrod_square, SimplicialComplex, SteenrodCoalgebra};
use coglobe::F2;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_globular_coalgebras_are_cosymmetric(seed in any::<u64>()) {
        let x = random_globular(&mut ChaCha8Rng::seed_from_u64(seed), RandomShape::default());
        let z = GlobularCoalgebra::<BigInt>::new(&x).unwrap();
        let f = GlobularCoalgebra::<F2>::new(&x).unwrap();
        prop_assert!(validate_cosymmetric(&z, z.default_kmax()).pass);
        prop_assert!(validate_cosymmetric(&f, f.default_kmax()).pass);
    }

    #[test]
    fn chains_of_a_globular_map_is_a_coalgebra_map_and_reconstructs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_globular(&mut rng, RandomShape::default());
        let y = random_globular_truncated(&mut rng, x.truncation(), 5);
        let g = random_globular_map(&mut rng, &x, &y);
        prop_assert!(validate_globular_map(&g, &x, &y).pass);
        let (cx, cy) = (GlobularCoalgebra::<BigInt>::new(&x).unwrap(), GlobularCoalgebra::<BigInt>::new(&y).unwrap());
        let f = chains_of_map(&g, &cx, &cy);
        prop_assert!(validate_coalgebra_map(&f, &cx, &cy, cx.default_kmax()).pass);
        prop_assert_eq!(reconstruct_map(&f, &cx, &cy).unwrap(), g);
    }

    #[test]
    fn cup_i_coalgebras_of_subcomplexes_are_cosymmetric(faces in prop::collection::vec(1u32..32, 1..5)) {
        let maximal: Vec<Vec<usize>> = faces.iter().map(|m| (0..5).filter(|v| m & (1 << v) != 0).collect()).collect();
        let c = SteenrodCoalgebra::new(SimplicialComplex::from_maximal(maximal).unwrap());
        prop_assert!(validate_cosymmetric(&c, c.default_kmax()).pass);
    }

    #[test]
    fn squares_on_cohomology_generators(faces in prop::collection::vec(1u32..32, 1..5)) {
        let maximal: Vec<Vec<usize>> = faces.iter().map(|m| (0..5).filter(|v| m & (1 << v) != 0).collect()).collect();
        let c = SteenrodCoalgebra::new(SimplicialComplex::from_maximal(maximal).unwrap());
        let h = cohomology_f2(c.complex());
        for p in 0..h.ranks().len() {
            for a in h.generators(p) {
                let sq0 = steenrod_square(&c, 0, a).unwrap();
                prop_assert_eq!(h.class_of(&sq0).unwrap(), h.class_of(a).unwrap());
                prop_assert_eq!(steenrod_square(&c, p, a).unwrap(), cup_product(&c, a, a));
                prop_assert!(steenrod_square(&c, p + 1, a).unwrap().is_zero());
            }
        }
    }
}
