use std::collections::{HashMap, VecDeque};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::mu::{MuDoc, MuElement};
use crate::chain::BasedComplex;
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::ring::Ring;

/// Resource limits for [`generate_omega`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_elements: usize,
    pub max_coeff: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_elements: 100_000, max_coeff: 64 }
    }
}

impl FromStr for Bounds {
    type Err = String;

    /// Parses `<elems>,<coeff>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (elems, coeff) = s.split_once(',').ok_or_else(|| format!("bounds `{s}` must be <elems>,<coeff>"))?;
        Ok(Bounds {
            max_elements: elems.trim().parse().map_err(|e| format!("bad element bound: {e}"))?,
            max_coeff: coeff.trim().parse().map_err(|e| format!("bad coefficient bound: {e}"))?,
        })
    }
}

/// A finite sub-ω-category of `μ(C)`, listed in generation order.
#[derive(Clone, Debug)]
pub struct OmegaCat<R: Ring> {
    elements: Vec<MuElement<R>>,
    generators: Vec<bool>,
    index: HashMap<MuElement<R>, usize>,
}

impl<R: Ring> OmegaCat<R> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MuElement<R>] {
        &self.elements
    }

    pub fn is_generator(&self, i: usize) -> bool {
        self.generators[i]
    }

    pub fn position(&self, m: &MuElement<R>) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &MuElement<R>) -> bool {
        self.index.contains_key(m)
    }

    /// Number of elements per dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for e in &self.elements {
            let d = e.dim();
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    /// Same element set, ignoring order and generator tags.
    pub fn same_elements(&self, other: &OmegaCat<R>) -> bool {
        self.len() == other.len() && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn to_doc(&self, complex: &BasedComplex<R>) -> OmegaDoc {
        OmegaDoc {
            elements: self
                .elements
                .iter()
                .zip(&self.generators)
                .map(|(e, g)| ElementDoc { element: e.to_doc(complex), generator: *g })
                .collect(),
        }
    }
}

/// JSON form of an [`OmegaCat`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaDoc {
    pub elements: Vec<ElementDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    #[serde(flatten)]
    pub element: MuDoc,
    pub generator: bool,
}

struct Closure<R: Ring> {
    cat: OmegaCat<R>,
    queue: VecDeque<usize>,
    bounds: Bounds,
}

impl<R: Ring> Closure<R> {
    fn insert(&mut self, m: MuElement<R>, generator: bool) -> Result<usize> {
        if let Some(&i) = self.cat.index.get(&m) {
            if generator {
                self.cat.generators[i] = true;
            }
            return Ok(i);
        }
        if m.max_magnitude() > self.bounds.max_coeff {
            return Err(Error::BoundExceeded(format!(
                "coefficient magnitude {} exceeds max coefficient {}",
                m.max_magnitude(),
                self.bounds.max_coeff
            )));
        }
        if self.cat.elements.len() >= self.bounds.max_elements {
            return Err(Error::BoundExceeded(format!("more than {} elements", self.bounds.max_elements)));
        }
        let i = self.cat.elements.len();
        self.cat.index.insert(m.clone(), i);
        self.cat.elements.push(m);
        self.cat.generators.push(generator);
        self.queue.push_back(i);
        Ok(i)
    }
}

/// The least subset of `μ(C)` containing `atoms` and closed under every
/// `s_k`, `t_k` and every defined composition `∘_m`, computed as a worklist
/// fixpoint. Fails with [`Error::BoundExceeded`] when the closure outgrows
/// `bounds`.
pub fn generate_omega<R: Ring>(atoms: impl IntoIterator<Item = MuElement<R>>, bounds: Bounds) -> Result<OmegaCat<R>> {
    let mut state = Closure {
        cat: OmegaCat { elements: Vec::new(), generators: Vec::new(), index: HashMap::new() },
        queue: VecDeque::new(),
        bounds,
    };
    for atom in atoms {
        state.insert(atom, true)?;
    }

    // (level, face index) -> processed elements having that face
    let mut by_target: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut by_source: HashMap<(usize, usize), Vec<usize>> = HashMap::new();

    while let Some(i) = state.queue.pop_front() {
        let e = state.cat.elements[i].clone();
        let top = e.top().unwrap_or(0);
        let mut faces = Vec::with_capacity(top);
        for m in 0..top {
            let s = state.insert(e.source(m), false)?;
            let t = state.insert(e.target(m), false)?;
            faces.push((s, t));
        }
        for (m, &(s, t)) in faces.iter().enumerate() {
            by_source.entry((m, s)).or_default().push(i);
            by_target.entry((m, t)).or_default().push(i);
        }
        for (m, &(s, t)) in faces.iter().enumerate() {
            // e ∘_m a with t_m(a) = s_m(e)
            let lower = by_target.get(&(m, s)).cloned().unwrap_or_default();
            for a in lower {
                let c = MuElement::compose_unchecked(&e, &state.cat.elements[a], &state.cat.elements[s]);
                state.insert(c, false)?;
            }
            // b ∘_m e with s_m(b) = t_m(e)
            let upper = by_source.get(&(m, t)).cloned().unwrap_or_default();
            for b in upper {
                let c = MuElement::compose_unchecked(&state.cat.elements[b], &e, &state.cat.elements[t]);
                state.insert(c, false)?;
            }
        }
    }
    Ok(state.cat)
}

/// How thoroughly [`check_omega_axioms`] walks the category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomSampling {
    /// Every composable pair, triple and interchange square.
    Exhaustive,
    /// Every pair; `samples` random triples and `samples` random
    /// interchange squares.
    Sampled { samples: usize, seed: u64 },
}

/// Outcome of [`check_omega_axioms`] with the number of instances checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    #[serde(flatten)]
    pub report: Report,
    pub elements: usize,
    pub pairs: usize,
    pub triples: usize,
    pub interchanges: usize,
}

struct Indexed<'a, R: Ring> {
    cat: &'a OmegaCat<R>,
    // faces[i][m] = (s_m, t_m) for m < top
    faces: Vec<Vec<(usize, usize)>>,
    // (m, s_m index) -> elements with that m-source and top > m
    with_source: HashMap<(usize, usize), Vec<usize>>,
    with_target: HashMap<(usize, usize), Vec<usize>>,
    // all composable (b, a, m) with m < min(top b, top a)
    pairs: Vec<(usize, usize, usize)>,
}

impl<'a, R: Ring> Indexed<'a, R> {
    fn build(cat: &'a OmegaCat<R>, report: &mut Report) -> Self {
        let mut faces = Vec::with_capacity(cat.len());
        for e in &cat.elements {
            let mut fs = Vec::new();
            for m in 0..e.top().unwrap_or(0) {
                match (cat.position(&e.source(m)), cat.position(&e.target(m))) {
                    (Some(s), Some(t)) => fs.push((s, t)),
                    _ => {
                        report.push(Violation::new("closure: face of an element is missing").k(m));
                        break;
                    }
                }
            }
            faces.push(fs);
        }
        let mut with_source: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut with_target: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, fs) in faces.iter().enumerate() {
            for (m, &(s, t)) in fs.iter().enumerate() {
                with_source.entry((m, s)).or_default().push(i);
                with_target.entry((m, t)).or_default().push(i);
            }
        }
        let mut pairs = Vec::new();
        for (b, fs) in faces.iter().enumerate() {
            for (m, &(s, _)) in fs.iter().enumerate() {
                for &a in with_target.get(&(m, s)).map_or(&[][..], Vec::as_slice) {
                    pairs.push((b, a, m));
                }
            }
        }
        Indexed { cat, faces, with_source, with_target, pairs }
    }

    fn el(&self, i: usize) -> &MuElement<R> {
        &self.cat.elements[i]
    }

    fn compose(&self, b: &MuElement<R>, a: &MuElement<R>, m: usize) -> Option<MuElement<R>> {
        MuElement::compose(b, a, m).ok()
    }
}

/// Checks the ω-category laws on a closed set of μ-elements: closure under
/// faces and composition, globularity of faces, the source/target laws of
/// composites, unitality, associativity and interchange.
pub fn check_omega_axioms<R: Ring>(cat: &OmegaCat<R>, sampling: AxiomSampling) -> AxiomReport {
    let mut report = Report::new();
    let ix = Indexed::build(cat, &mut report);

    // globularity and unitality per element
    for (i, e) in cat.elements.iter().enumerate() {
        let top = e.top().unwrap_or(0);
        for k in 0..top {
            for j in 0..k {
                if e.source(k).source(j) != e.target(k).source(j) || e.target(k).target(j) != e.source(k).target(j) {
                    report.push(Violation::new(format!("globularity s_j/t_j of s_k/t_k (element {i})")).k(k));
                }
            }
            let s = e.source(k);
            let t = e.target(k);
            if ix.compose(e, &s, k).as_ref() != Some(e) || ix.compose(&t, e, k).as_ref() != Some(e) {
                report.push(Violation::new(format!("unitality (element {i})")).k(k));
            }
        }
    }

    // composable pairs: closure and source/target of composites
    for &(b, a, m) in &ix.pairs {
        let (eb, ea) = (ix.el(b), ix.el(a));
        let Some(c) = ix.compose(eb, ea, m) else {
            report.push(Violation::new(format!("pair ({b}, {a}) indexed as composable but is not")).k(m));
            continue;
        };
        if !cat.contains(&c) {
            report.push(Violation::new(format!("closure: composite of ({b}, {a}) missing")).k(m));
        }
        if c.source(m) != ea.source(m) || c.target(m) != eb.target(m) {
            report.push(Violation::new(format!("s_m/t_m of composite ({b}, {a})")).k(m));
        }
        for p in m + 1..c.top().unwrap_or(0) {
            let src = ix.compose(&eb.source(p), &ea.source(p), m);
            let tgt = ix.compose(&eb.target(p), &ea.target(p), m);
            if src.as_ref() != Some(&c.source(p)) || tgt.as_ref() != Some(&c.target(p)) {
                report.push(Violation::new(format!("faces of composite ({b}, {a}) at level {p}")).k(m));
            }
        }
    }

    let mut triples = 0;
    let mut interchanges = 0;
    match sampling {
        AxiomSampling::Exhaustive => {
            for &(b, a, m) in &ix.pairs {
                for c in composable_above(&ix, b, m) {
                    triples += 1;
                    check_associativity(&ix, c, b, a, m, &mut report);
                }
            }
            for &(b, a, p) in &ix.pairs {
                for &(d, c, q) in &ix.pairs {
                    if q != p {
                        continue;
                    }
                    for m in 0..p {
                        if check_interchange(&ix, d, c, b, a, m, p, &mut report) {
                            interchanges += 1;
                        }
                    }
                }
            }
        }
        AxiomSampling::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if !ix.pairs.is_empty() {
                let mut attempts = 0;
                while triples < samples && attempts < samples * 50 {
                    attempts += 1;
                    let (b, a, m) = ix.pairs[rng.random_range(0..ix.pairs.len())];
                    let above = composable_above(&ix, b, m);
                    if above.is_empty() {
                        continue;
                    }
                    let c = above[rng.random_range(0..above.len())];
                    triples += 1;
                    check_associativity(&ix, c, b, a, m, &mut report);
                }
                // interchange squares: (b, a) p-composable, then d over b at
                // level m with a p-composable partner c over a
                let mut attempts = 0;
                while interchanges < samples && attempts < samples * 50 {
                    attempts += 1;
                    let (b, a, p) = ix.pairs[rng.random_range(0..ix.pairs.len())];
                    if p == 0 {
                        continue;
                    }
                    let m = rng.random_range(0..p);
                    let ds: Vec<usize> = composable_above(&ix, b, m)
                        .into_iter()
                        .filter(|&d| ix.faces[d].len() > p)
                        .collect();
                    if ds.is_empty() {
                        continue;
                    }
                    let d = ds[rng.random_range(0..ds.len())];
                    let ta = ix.faces[a][m].1;
                    let cs: Vec<usize> = ix
                        .with_target
                        .get(&(p, ix.faces[d][p].0))
                        .map_or(&[][..], Vec::as_slice)
                        .iter()
                        .copied()
                        .filter(|&c| ix.faces[c][m].0 == ta)
                        .collect();
                    if cs.is_empty() {
                        continue;
                    }
                    let c = cs[rng.random_range(0..cs.len())];
                    if check_interchange(&ix, d, c, b, a, m, p, &mut report) {
                        interchanges += 1;
                    }
                }
            }
        }
    }
    AxiomReport { report, elements: cat.len(), pairs: ix.pairs.len(), triples, interchanges }
}

/// Elements `c` with `s_m(c) = t_m(b)` and `top(c) > m`.
fn composable_above<R: Ring>(ix: &Indexed<'_, R>, b: usize, m: usize) -> Vec<usize> {
    let t = ix.faces[b][m].1;
    ix.with_source.get(&(m, t)).cloned().unwrap_or_default()
}

fn check_associativity<R: Ring>(ix: &Indexed<'_, R>, c: usize, b: usize, a: usize, m: usize, report: &mut Report) {
    let (ec, eb, ea) = (ix.el(c), ix.el(b), ix.el(a));
    let left = ix.compose(ec, eb, m).and_then(|cb| ix.compose(&cb, ea, m));
    let right = ix.compose(eb, ea, m).and_then(|ba| ix.compose(ec, &ba, m));
    if left.is_none() || left != right {
        report.push(Violation::new(format!("associativity ({c}, {b}, {a})")).k(m));
    }
}

/// Checks `(d ∘_p c) ∘_m (b ∘_p a) = (d ∘_m b) ∘_p (c ∘_m a)` when the
/// left side is defined with `d, b` and `c, a` m-composable. Returns
/// whether the square was applicable.
#[allow(clippy::too_many_arguments)]
fn check_interchange<R: Ring>(
    ix: &Indexed<'_, R>,
    d: usize,
    c: usize,
    b: usize,
    a: usize,
    m: usize,
    p: usize,
    report: &mut Report,
) -> bool {
    let (ed, ec, eb, ea) = (ix.el(d), ix.el(c), ix.el(b), ix.el(a));
    if ed.source(m) != eb.target(m) || ec.source(m) != ea.target(m) {
        return false;
    }
    let (Some(dc), Some(ba)) = (ix.compose(ed, ec, p), ix.compose(eb, ea, p)) else {
        return false;
    };
    let left = ix.compose(&dc, &ba, m);
    let right = ix.compose(ed, eb, m).zip(ix.compose(ec, ea, m)).and_then(|(db, ca)| ix.compose(&db, &ca, p));
    if left.is_none() || left != right {
        report.push(Violation::new(format!("interchange ({d}, {c}, {b}, {a}) at levels {m} < {p}")).k(m));
    }
    true
}
