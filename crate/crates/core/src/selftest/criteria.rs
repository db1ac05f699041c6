use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mutation::{atom_with, FlippedGlobular, FlippedSplit, Mutation};
use super::oracles::{oriental_count, surface_oracle};
use crate::chain::{BasedComplex, Cell, Chain};
use crate::coalgebra::{classify_basis_image, validate_cosymmetric, Coalgebra, CoalgebraMap};
use crate::error::Error;
use crate::globular::{
    boundary_representable, chains_of_map, random_globular, random_globular_map, random_globular_truncated,
    reconstruct_map, representable, GlobularBuilder, GlobularCoalgebra, GlobularMap, GlobularSet, RandomShape,
};
use crate::omega::{
    check_omega_axioms, compare_atoms_with, mu_validate, oriental, steiner_atom, validate_sadc, AxiomSampling, Bounds,
    MuElement,
};
use crate::ring::{set_lift, Ring, F2};
use crate::simplicial::{
    coboundary, cohomology_f2, cup_product, is_cocycle, steenrod_square, Cochain, SimplicialComplex,
    SteenrodCoalgebra, RP2_TRIANGLES,
};

/// Oriental element counts derived by the brute-force closure oracle.
pub const ORIENTAL_COUNTS: &str = include_str!("fixtures/oriental_counts.json");

/// Result of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    /// `[PASS] 1 title (12 ms): detail`
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({} ms): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_millis(),
            self.detail
        )
    }
}

fn timed(id: u8, title: &'static str, budget: Duration, body: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (mut pass, mut detail) = body();
    let elapsed = start.elapsed();
    if elapsed > budget {
        pass = false;
        detail.push_str(&format!("; over the {} s budget", budget.as_secs()));
    }
    Outcome { id, title, pass, detail, elapsed }
}

fn first_failure(failures: &[String]) -> String {
    match failures.first() {
        None => String::new(),
        Some(f) => format!("; first failure: {f}"),
    }
}

/// The fixed globular test sets: `𝔾_n` and `∂𝔾_{n+1}` for `n ≤ 4`, and 200
/// random sets.
fn globular_corpus(seed: u64) -> Vec<(String, GlobularSet)> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push((format!("G{n}"), representable(n, n + 1).expect("representable")));
        out.push((format!("dG{}", n + 1), boundary_representable(n, n + 1).expect("boundary")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..200 {
        out.push((format!("random #{i}"), random_globular(&mut rng, RandomShape::default())));
    }
    out
}

fn cosymmetric<R: Ring>(c: &GlobularCoalgebra<R>, mutation: Option<Mutation>) -> bool {
    let kmax = c.default_kmax();
    match mutation {
        Some(Mutation::GlobularSign) => validate_cosymmetric(&FlippedGlobular(c), kmax).pass,
        _ => validate_cosymmetric(c, kmax).pass,
    }
}

/// Criterion 1: the globular coalgebras satisfy the cosymmetry relation and
/// the counit identities.
pub fn criterion_1(seed: u64, mutation: Option<Mutation>) -> Outcome {
    timed(1, "cosymmetric relation, globular", Duration::from_secs(10), || {
        let corpus = globular_corpus(seed);
        let mut failures = Vec::new();
        let mut checked = 0;
        for (name, x) in &corpus {
            let z = GlobularCoalgebra::<BigInt>::new(x).expect("valid set");
            let f = GlobularCoalgebra::<F2>::new(x).expect("valid set");
            checked += 2;
            if !cosymmetric(&z, mutation) {
                failures.push(format!("{name} over z"));
            }
            if !cosymmetric(&f, mutation) {
                failures.push(format!("{name} over f2"));
            }
        }
        (failures.is_empty(), format!("{checked} coalgebras, {} failing{}", failures.len(), first_failure(&failures)))
    })
}

/// Criterion 2: the cup-i coalgebras of `Δⁿ`, `n ≤ 6`, are cosymmetric.
pub fn criterion_2(mutation: Option<Mutation>) -> Outcome {
    timed(2, "cosymmetric relation, Steenrod", Duration::from_secs(10), || {
        let mut failures = Vec::new();
        for n in 0..=6 {
            let pass = if mutation == Some(Mutation::SplitParity) {
                validate_cosymmetric(&FlippedSplit::standard_simplex(n), n + 2).pass
            } else {
                validate_cosymmetric(&SteenrodCoalgebra::standard_simplex(n), n + 2).pass
            };
            if !pass {
                failures.push(format!("Δ^{n}"));
            }
        }
        (failures.is_empty(), format!("Δ^0..Δ^6, {} failing{}", failures.len(), first_failure(&failures)))
    })
}

/// Seeded inputs shared by criteria 3 and 4.
pub struct MapCorpus {
    pub singles: Vec<(GlobularSet, GlobularSet, GlobularMap)>,
    pub composites: Vec<(GlobularSet, GlobularSet, GlobularSet, GlobularMap, GlobularMap)>,
    pub pairs: Vec<(GlobularSet, GlobularSet, GlobularMap, GlobularMap)>,
}

impl MapCorpus {
    pub fn generate(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0003);
        let shape = RandomShape::default();
        let mut singles = Vec::with_capacity(500);
        for _ in 0..500 {
            let x = random_globular(&mut rng, shape);
            let y = random_globular_truncated(&mut rng, x.truncation(), shape.max_cells);
            let f = random_globular_map(&mut rng, &x, &y);
            singles.push((x, y, f));
        }
        let mut composites = Vec::with_capacity(200);
        for _ in 0..200 {
            let x = random_globular(&mut rng, shape);
            let y = random_globular_truncated(&mut rng, x.truncation(), shape.max_cells);
            let z = random_globular_truncated(&mut rng, x.truncation(), shape.max_cells);
            let f = random_globular_map(&mut rng, &x, &y);
            let g = random_globular_map(&mut rng, &y, &z);
            composites.push((x, y, z, f, g));
        }
        let mut pairs = Vec::with_capacity(200);
        while pairs.len() < 200 {
            let x = random_globular(&mut rng, shape);
            let y = random_globular_truncated(&mut rng, x.truncation(), shape.max_cells);
            let f = random_globular_map(&mut rng, &x, &y);
            if let Some(g) = (0..20).map(|_| random_globular_map(&mut rng, &x, &y)).find(|g| *g != f) {
                pairs.push((x, y, f, g));
            }
        }
        MapCorpus { singles, composites, pairs }
    }
}

fn round_trips<R: Ring>(corpus: &MapCorpus, failures: &mut Vec<String>) {
    let ring = R::NAME;
    for (i, (x, y, f)) in corpus.singles.iter().enumerate() {
        let cx = GlobularCoalgebra::<R>::new(x).expect("valid");
        let cy = GlobularCoalgebra::<R>::new(y).expect("valid");
        match reconstruct_map(&chains_of_map(f, &cx, &cy), &cx, &cy) {
            Ok(g) if g == *f => {}
            Ok(_) => failures.push(format!("map #{i} over {ring}: reconstruction differs")),
            Err(e) => failures.push(format!("map #{i} over {ring}: {e}")),
        }
    }
    for (i, (x, y, z, f, g)) in corpus.composites.iter().enumerate() {
        let cx = GlobularCoalgebra::<R>::new(x).expect("valid");
        let cy = GlobularCoalgebra::<R>::new(y).expect("valid");
        let cz = GlobularCoalgebra::<R>::new(z).expect("valid");
        let composite = chains_of_map(f, &cx, &cy).then(&chains_of_map(g, &cy, &cz));
        if chains_of_map(&f.then(g), &cx, &cz) != composite {
            failures.push(format!("composite #{i} over {ring}: chains of maps is not functorial"));
        }
        match reconstruct_map(&composite, &cx, &cz) {
            Ok(h) if chains_of_map(&h, &cx, &cz) == composite => {}
            Ok(_) => failures.push(format!("composite #{i} over {ring}: chains of the reconstruction differ")),
            Err(e) => failures.push(format!("composite #{i} over {ring}: {e}")),
        }
    }
    for (i, (x, y, f, g)) in corpus.pairs.iter().enumerate() {
        let cx = GlobularCoalgebra::<R>::new(x).expect("valid");
        let cy = GlobularCoalgebra::<R>::new(y).expect("valid");
        if chains_of_map(f, &cx, &cy) == chains_of_map(g, &cx, &cy) {
            failures.push(format!("pair #{i} over {ring}: distinct maps have equal chains"));
        }
    }
}

/// Criterion 3: chains of maps and reconstruction are mutually inverse, and
/// chains of maps is faithful.
pub fn criterion_3(seed: u64) -> Outcome {
    timed(3, "globular maps <-> coalgebra maps", Duration::from_secs(30), || {
        let corpus = MapCorpus::generate(seed);
        let mut failures = Vec::new();
        round_trips::<BigInt>(&corpus, &mut failures);
        round_trips::<F2>(&corpus, &mut failures);
        let nonconstant = corpus
            .singles
            .iter()
            .filter(|(x, y, f)| x.all_cells().any(|c| !x.is_degenerate(c) && c.dim > 0 && !y.is_degenerate(f.image(c))))
            .count();
        (
            failures.is_empty(),
            format!(
                "500 round trips ({nonconstant} hit a non-degenerate cell above dimension 0), 200 composites, 200 distinct pairs, over z and f2, {} failing{}",
                failures.len(),
                first_failure(&failures)
            ),
        )
    })
}

fn dichotomy<R: Ring>(corpus: &MapCorpus) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut check = |f: &CoalgebraMap<R>, cx: &GlobularCoalgebra<R>, cy: &GlobularCoalgebra<R>, label: String| {
        for a in cx.complex().all_cells() {
            checked += 1;
            if let Err(e) = classify_basis_image(f, a, cx, cy) {
                failures.push(format!("{label}: {e}"));
            }
        }
    };
    for (i, (x, y, f)) in corpus.singles.iter().enumerate() {
        let (cx, cy) = (GlobularCoalgebra::<R>::new(x).expect("valid"), GlobularCoalgebra::<R>::new(y).expect("valid"));
        check(&chains_of_map(f, &cx, &cy), &cx, &cy, format!("map #{i}"));
    }
    for (i, (x, y, z, f, g)) in corpus.composites.iter().enumerate() {
        let cx = GlobularCoalgebra::<R>::new(x).expect("valid");
        let cy = GlobularCoalgebra::<R>::new(y).expect("valid");
        let cz = GlobularCoalgebra::<R>::new(z).expect("valid");
        let composite = chains_of_map(f, &cx, &cy).then(&chains_of_map(g, &cy, &cz));
        check(&composite, &cx, &cz, format!("composite #{i}"));
    }
    for (i, (x, y, f, g)) in corpus.pairs.iter().enumerate() {
        let (cx, cy) = (GlobularCoalgebra::<R>::new(x).expect("valid"), GlobularCoalgebra::<R>::new(y).expect("valid"));
        check(&chains_of_map(f, &cx, &cy), &cx, &cy, format!("pair #{i} first"));
        check(&chains_of_map(g, &cx, &cy), &cx, &cy, format!("pair #{i} second"));
    }
    (checked, failures)
}

/// Criterion 4: every basis image is zero or a single basis cell; a planted
/// non-dichotomous map is rejected.
pub fn criterion_4(seed: u64) -> Outcome {
    timed(4, "zero-or-basis-cell dichotomy", Duration::from_secs(30), || {
        let corpus = MapCorpus::generate(seed);
        let (nz, mut failures) = dichotomy::<BigInt>(&corpus);
        let (nf, more) = dichotomy::<F2>(&corpus);
        failures.extend(more);

        // two points, one of them sent to the sum of both
        let mut b = GlobularBuilder::new(0);
        b.point("p").expect("fresh");
        b.point("q").expect("fresh");
        let x = b.build().expect("valid");
        let cx = GlobularCoalgebra::<BigInt>::new(&x).expect("valid");
        let (p, q) = (Cell::new(0, 0), Cell::new(0, 1));
        let mut planted = CoalgebraMap::identity(cx.complex());
        planted.set_image(p, Chain::from_cell(p).add(&Chain::from_cell(q)));
        let classified = matches!(classify_basis_image(&planted, p, &cx, &cx), Err(Error::Dichotomy { .. }));
        let rejected = reconstruct_map(&planted, &cx, &cx).is_err();
        if !classified {
            failures.push("planted p -> p + q was not flagged by the classifier".into());
        }
        if !rejected {
            failures.push("planted p -> p + q was accepted by reconstruction".into());
        }
        (
            failures.is_empty(),
            format!("{} basis images classified, planted map rejected: {}{}", nz + nf, classified && rejected, first_failure(&failures)),
        )
    })
}

fn check_atoms<R: Ring>(
    coalgebra: &impl Coalgebra<R>,
    validate_in: &BasedComplex<R>,
    flip: bool,
    label: &str,
    checked: &mut usize,
    failures: &mut Vec<String>,
) {
    for b in coalgebra.complex().all_cells() {
        *checked += 1;
        match atom_with(coalgebra, b, flip) {
            Ok(a) => {
                let report = mu_validate(&a, validate_in);
                if !report.pass {
                    failures.push(format!("{label} {}: {}", coalgebra.complex().name(b), report.summary()));
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
}

/// Criterion 5: atoms of globular and cup-i coalgebras and Steiner atoms
/// of simplices lie in `μ`.
pub fn criterion_5(seed: u64, mutation: Option<Mutation>) -> Outcome {
    timed(5, "atom well-formedness", Duration::from_secs(5), || {
        let flip = mutation == Some(Mutation::AtomSign);
        let mut checked = 0;
        let mut failures = Vec::new();
        for (name, x) in globular_corpus(seed) {
            let g = GlobularCoalgebra::<BigInt>::new(&x).expect("valid");
            if mutation == Some(Mutation::GlobularSign) {
                check_atoms(&FlippedGlobular(&g), g.complex(), flip, &name, &mut checked, &mut failures);
            } else {
                check_atoms(&g, g.complex(), flip, &name, &mut checked, &mut failures);
            }
        }
        for n in 0..=5 {
            let integral = SimplicialComplex::standard_simplex(n).chains::<BigInt>();
            let label = format!("Δ^{n}");
            let f2_atoms: Vec<(Cell, crate::error::Result<MuElement<F2>>)> = if mutation == Some(Mutation::SplitParity) {
                let c = FlippedSplit::standard_simplex(n);
                c.complex().all_cells().map(|b| (b, atom_with(&c, b, flip))).collect()
            } else {
                let c = SteenrodCoalgebra::standard_simplex(n);
                c.complex().all_cells().map(|b| (b, atom_with(&c, b, flip))).collect()
            };
            let f2_complex = integral.map_ring(|v| F2(v.bit(0)));
            for (b, a) in f2_atoms {
                checked += 2;
                match a {
                    Ok(a) => {
                        for (ring, report) in [("f2", mu_validate(&a, &f2_complex)), ("lift", mu_validate(&a.map_ring(set_lift), &integral))] {
                            if !report.pass {
                                failures.push(format!("{label} cup-i {ring} {}: {}", integral.name(b), report.summary()));
                            }
                        }
                    }
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
            }
            for b in integral.all_cells() {
                checked += 1;
                match steiner_atom(&integral, b) {
                    Ok(a) if mu_validate(&a, &integral).pass => {}
                    Ok(_) => failures.push(format!("{label} Steiner {}", integral.name(b))),
                    Err(e) => failures.push(format!("{label} Steiner: {e}")),
                }
            }
        }
        (failures.is_empty(), format!("{checked} atoms validated, {} failing{}", failures.len(), first_failure(&failures)))
    })
}

/// Criterion 6: lifted cup-i atoms equal Steiner atoms on `Δⁿ`, `n ≤ 4`.
pub fn criterion_6(mutation: Option<Mutation>) -> Outcome {
    timed(6, "cup-i atoms are Steiner atoms", Duration::from_secs(10), || {
        let mut failures = Vec::new();
        let mut cells = 0;
        for n in 0..=4 {
            cells += (1usize << (n + 1)) - 1;
            let report = match mutation {
                Some(Mutation::SplitParity) => {
                    let c = FlippedSplit::standard_simplex(n);
                    compare_atoms_with(n, |b| atom_with(&c, b, false))
                }
                Some(Mutation::AtomSign) => {
                    let c = SteenrodCoalgebra::standard_simplex(n);
                    compare_atoms_with(n, |b| atom_with(&c, b, true))
                }
                _ => {
                    let c = SteenrodCoalgebra::standard_simplex(n);
                    compare_atoms_with(n, |b| atom_with(&c, b, false))
                }
            };
            if !report.pass {
                failures.push(format!("n = {n}: {}", report.summary()));
            }
        }
        (failures.is_empty(), format!("{cells} simplices of Δ^0..Δ^4 compared, {} failing{}", failures.len(), first_failure(&failures)))
    })
}

/// Criterion 7: orientals up to `n = 3` match the oracle and the frozen
/// counts, and satisfy the ω-category laws.
pub fn criterion_7(seed: u64) -> Outcome {
    timed(7, "orientals", Duration::from_secs(60), || {
        let frozen: BTreeMap<String, usize> = serde_json::from_str(ORIENTAL_COUNTS).expect("fixture parses");
        let mut failures = Vec::new();
        let mut counts = Vec::new();
        let mut cats = Vec::new();
        for n in 0..=3usize {
            match oriental(n, Bounds::default()) {
                Ok(cat) => {
                    let oracle = oriental_count(n, 100_000);
                    if oracle != Some(cat.len()) {
                        failures.push(format!("n = {n}: closure has {}, oracle {:?}", cat.len(), oracle));
                    }
                    if frozen.get(&n.to_string()) != Some(&cat.len()) {
                        failures.push(format!("n = {n}: closure has {}, fixture {:?}", cat.len(), frozen.get(&n.to_string())));
                    }
                    counts.push(cat.len());
                    cats.push(cat);
                }
                Err(e) => failures.push(format!("n = {n}: {e}")),
            }
        }
        let mut axioms = String::new();
        if cats.len() == 4 {
            let o2 = check_omega_axioms(&cats[2], AxiomSampling::Exhaustive);
            let o3 = check_omega_axioms(&cats[3], AxiomSampling::Exhaustive);
            let sampled = check_omega_axioms(&cats[3], AxiomSampling::Sampled { samples: 10_000, seed });
            for (label, r) in [("O2 exhaustive", &o2), ("O3 exhaustive", &o3), ("O3 sampled", &sampled)] {
                if !r.report.pass {
                    failures.push(format!("{label}: {}", r.report.summary()));
                }
            }
            if sampled.triples < 10_000 {
                failures.push(format!("only {} triples sampled in O3", sampled.triples));
            }
            axioms = format!(
                "; O3 has {} composable pairs and {} distinct triples, {} triples sampled",
                o3.pairs, o3.triples, sampled.triples
            );
        }
        (failures.is_empty(), format!("counts {counts:?}{axioms}{}", first_failure(&failures)))
    })
}

/// Criterion 8: simplices are SADCs; planted defects are caught with the
/// right witnesses.
pub fn criterion_8() -> Outcome {
    timed(8, "SADC validation", Duration::from_secs(5), || {
        let mut failures = Vec::new();
        for n in 0..=5 {
            let report = validate_sadc(&SimplicialComplex::standard_simplex(n).chains());
            if !report.pass {
                failures.push(format!("Δ^{n}: {}", report.summary()));
            }
        }
        let z = |v: i64| BigInt::from(v);
        let none: Vec<(&str, BigInt)> = Vec::new();

        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("p", 0, none.clone()).expect("fresh");
        b.cell("loop", 1, none.clone()).expect("fresh");
        let report = validate_sadc(&b.build().expect("valid complex"));
        let unital_witness = report.violations.iter().any(|v| v.check.starts_with("unital") && v.cell.as_deref() == Some("loop"));
        if !unital_witness {
            failures.push(format!("closed edge not reported: {}", report.summary()));
        }

        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("p", 0, none.clone()).expect("fresh");
        b.cell("q", 0, none).expect("fresh");
        b.cell("e", 1, [("q", z(1)), ("p", z(-1))]).expect("fresh");
        b.cell("f", 1, [("p", z(1)), ("q", z(-1))]).expect("fresh");
        let report = validate_sadc(&b.build().expect("valid complex"));
        let cycle = report.violations.iter().find(|v| v.check.starts_with("order")).and_then(|v| v.lhs.clone());
        if cycle.as_deref() != Some("p -> e -> q -> f -> p") {
            failures.push(format!("cycle witness was {cycle:?}"));
        }
        (
            failures.is_empty(),
            format!("Δ^0..Δ^5 pass; closed edge flagged: {unital_witness}; cycle {}{}", cycle.unwrap_or_default(), first_failure(&failures)),
        )
    })
}

/// A random subcomplex of `Δⁿ` generated by a few random faces.
fn random_subcomplex(rng: &mut impl Rng) -> SimplicialComplex {
    let n = rng.random_range(1..=4);
    let generators: Vec<Vec<usize>> = (0..rng.random_range(1..=5))
        .map(|_| {
            let mask = rng.random_range(1u32..(1 << (n + 1)));
            (0..=n).filter(|v| mask & (1 << v) != 0).collect()
        })
        .collect();
    SimplicialComplex::from_maximal(generators).expect("faces of a simplex")
}

/// Criterion 9: `Sq¹` is non-trivial on the projective plane, and the
/// edge cases of `Sq^k` hold on random cocycles.
pub fn criterion_9(seed: u64) -> Outcome {
    timed(9, "Steenrod squares", Duration::from_secs(30), || {
        let mut failures = Vec::new();
        let oracle = surface_oracle(&RP2_TRIANGLES);
        let rp2 = SteenrodCoalgebra::new(SimplicialComplex::from_maximal(RP2_TRIANGLES).expect("triangulation"));
        let h = cohomology_f2(rp2.complex());
        if h.ranks() != vec![1, oracle.h1, oracle.h2] {
            failures.push(format!("ranks {:?} against oracle (1, {}, {})", h.ranks(), oracle.h1, oracle.h2));
        }
        let sq1_nonzero = h.generators(1).first().is_some_and(|a| {
            steenrod_square(&rp2, 1, a).ok().and_then(|s| h.class_of(&s).ok()).is_some_and(|c| c.iter().any(|b| *b))
        });
        if !sq1_nonzero || !oracle.square_nonzero {
            failures.push(format!("Sq1 non-zero: library {sq1_nonzero}, oracle {}", oracle.square_nonzero));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0009);
        let mut cocycles = 0;
        while cocycles < 100 {
            let sc = random_subcomplex(&mut rng);
            let c = SteenrodCoalgebra::new(sc);
            let cx = c.complex();
            let top = cx.max_degree().unwrap_or(0);
            let p = rng.random_range(0..=top);
            let hc = cohomology_f2(cx);
            let mut alpha = Cochain::zero(p);
            if p > 0 {
                let beta = Cochain::from_support(p - 1, (0..cx.rank(p - 1)).filter(|_| rng.random_bool(0.5)));
                alpha = alpha.add(&coboundary(&beta, cx));
            }
            for g in hc.generators(p) {
                if rng.random_bool(0.5) {
                    alpha = alpha.add(g);
                }
            }
            if !is_cocycle(&alpha, cx) {
                failures.push("generated cochain is not a cocycle".into());
                break;
            }
            cocycles += 1;
            match steenrod_square(&c, 0, &alpha).and_then(|sq| Ok(hc.class_of(&sq)? == hc.class_of(&alpha)?)) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("Sq^0 is not the identity in degree {p}")),
                Err(e) => failures.push(e.to_string()),
            }
            for k in p..=p + 2 {
                match steenrod_square(&c, k, &alpha) {
                    Ok(sq) if k == p && sq != cup_product(&c, &alpha, &alpha) => {
                        failures.push(format!("Sq^{k} differs from the cup square in degree {p}"));
                    }
                    Ok(sq) if k > p && !sq.is_zero() => failures.push(format!("Sq^{k} non-zero in degree {p}")),
                    Ok(_) => {}
                    Err(e) => failures.push(e.to_string()),
                }
            }
        }
        (
            failures.is_empty(),
            format!("RP2 ranks {:?}, Sq1 of the generator non-zero: {sq1_nonzero}; {cocycles} random cocycles{}", h.ranks(), first_failure(&failures)),
        )
    })
}

/// Per-mutation detection record for criterion 10.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detection {
    pub mutation: Mutation,
    /// Criteria among 1, 2, 5 and 6 that failed under the mutation.
    pub caught_by: Vec<u8>,
}

impl Detection {
    /// Whether one of criteria 1, 2 or 6 failed.
    pub fn caught_by_1_2_6(&self) -> bool {
        self.caught_by.iter().any(|c| matches!(c, 1 | 2 | 6))
    }
}

/// Runs criteria 1, 2, 5 and 6 under each planted mutation.
pub fn mutation_detections(seed: u64) -> Vec<Detection> {
    Mutation::ALL
        .iter()
        .map(|&m| {
            let outcomes = [criterion_1(seed, Some(m)), criterion_2(Some(m)), criterion_5(seed, Some(m)), criterion_6(Some(m))];
            Detection { mutation: m, caught_by: outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect() }
        })
        .collect()
}

/// Criterion 10: each mutation makes criterion 1, 2 or 6 fail. Criterion 5
/// is run as well and reported, since a sign that only the integral atoms
/// can see is invisible to the other three.
pub fn criterion_10(seed: u64) -> (Outcome, Vec<Detection>) {
    let mut detections = Vec::new();
    let outcome = timed(10, "mutation sensitivity", Duration::from_secs(20), || {
        detections = mutation_detections(seed);
        let pass = detections.iter().all(Detection::caught_by_1_2_6);
        let detail = detections
            .iter()
            .map(|d| format!("{} caught by {:?}", d.mutation, d.caught_by))
            .collect::<Vec<_>>()
            .join("; ");
        (pass, detail)
    });
    (outcome, detections)
}

/// Runs all ten criteria.
pub fn run_all(seed: u64) -> Vec<Outcome> {
    vec![
        criterion_1(seed, None),
        criterion_2(None),
        criterion_3(seed),
        criterion_4(seed),
        criterion_5(seed, None),
        criterion_6(None),
        criterion_7(seed),
        criterion_8(),
        criterion_9(seed),
        criterion_10(seed).0,
    ]
}
