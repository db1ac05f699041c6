use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Report, Violation};

/// A cell of a globular set: its dimension and its position among the
/// cells of that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Globe {
    pub dim: usize,
    pub index: usize,
}

impl Globe {
    pub fn new(dim: usize, index: usize) -> Self {
        Globe { dim, index }
    }
}

/// A finite reflexive globular set truncated at dimension `N`.
///
/// Stored as a presheaf: for each dimension the cell names, and index tables
/// for `t, s : X_n → X_{n-1}` and `i : X_{n-1} → X_n`. Construction only
/// checks that the tables are well-typed; the globular relations are checked
/// by [`validate_globular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobularSet {
    names: Vec<Vec<String>>,
    lookup: HashMap<String, Globe>,
    // t[n][x], s[n][x] for x in X_n, n >= 1 (t[0], s[0] empty)
    t: Vec<Vec<usize>>,
    s: Vec<Vec<usize>>,
    // i[n][y] for y in X_{n-1}, n >= 1 (i[0] empty)
    i: Vec<Vec<usize>>,
    degenerate: Vec<Vec<bool>>,
}

/// JSON form: `{ "truncation": N, "cells": [[names]...], "t": {...},
/// "s": {...}, "i": {...} }`. `t` and `s` map every cell of positive
/// dimension to a cell one dimension down; `i` maps every cell below the
/// truncation to its identity cell. Names are unique across dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobularDoc {
    pub truncation: usize,
    pub cells: Vec<Vec<String>>,
    pub t: BTreeMap<String, String>,
    pub s: BTreeMap<String, String>,
    pub i: BTreeMap<String, String>,
}

impl GlobularSet {
    /// Assembles a globular set from raw tables, checking shapes and index
    /// ranges only.
    pub fn from_parts(
        names: Vec<Vec<String>>,
        t: Vec<Vec<usize>>,
        s: Vec<Vec<usize>>,
        i: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let levels = names.len();
        if levels == 0 {
            return Err(Error::InvalidGlobular("no dimensions".into()));
        }
        if t.len() != levels || s.len() != levels || i.len() != levels {
            return Err(Error::InvalidGlobular("tables do not match the number of dimensions".into()));
        }
        let mut lookup = HashMap::new();
        for (d, level) in names.iter().enumerate() {
            for (k, name) in level.iter().enumerate() {
                if lookup.insert(name.clone(), Globe::new(d, k)).is_some() {
                    return Err(Error::InvalidGlobular(format!("duplicate cell name `{name}`")));
                }
            }
        }
        for d in 0..levels {
            let below = if d == 0 { 0 } else { names[d - 1].len() };
            let expected = if d == 0 { 0 } else { names[d].len() };
            if t[d].len() != expected || s[d].len() != expected {
                return Err(Error::InvalidGlobular(format!("source/target tables in dimension {d} have the wrong length")));
            }
            if t[d].iter().chain(&s[d]).any(|&x| x >= below) {
                return Err(Error::InvalidGlobular(format!("source/target out of range in dimension {d}")));
            }
            if i[d].len() != below {
                return Err(Error::InvalidGlobular(format!("identity table in dimension {d} has the wrong length")));
            }
            if i[d].iter().any(|&x| x >= names[d].len()) {
                return Err(Error::InvalidGlobular(format!("identity out of range in dimension {d}")));
            }
        }
        let degenerate = (0..levels)
            .map(|d| {
                let mut flags = vec![false; names[d].len()];
                for &x in &i[d] {
                    flags[x] = true;
                }
                flags
            })
            .collect();
        Ok(GlobularSet { names, lookup, t, s, i, degenerate })
    }

    pub fn builder(truncation: usize) -> GlobularBuilder {
        GlobularBuilder::new(truncation)
    }

    pub fn truncation(&self) -> usize {
        self.names.len() - 1
    }

    pub fn count(&self, dim: usize) -> usize {
        self.names.get(dim).map_or(0, Vec::len)
    }

    pub fn cells(&self, dim: usize) -> impl Iterator<Item = Globe> + '_ {
        (0..self.count(dim)).map(move |k| Globe::new(dim, k))
    }

    pub fn all_cells(&self) -> impl Iterator<Item = Globe> + '_ {
        (0..self.names.len()).flat_map(move |d| self.cells(d))
    }

    pub fn name(&self, x: Globe) -> &str {
        &self.names[x.dim][x.index]
    }

    pub fn cell(&self, name: &str) -> Option<Globe> {
        self.lookup.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<Globe> {
        self.cell(name).ok_or_else(|| Error::UnknownCell(name.to_string()))
    }

    pub fn is_degenerate(&self, x: Globe) -> bool {
        self.degenerate[x.dim][x.index]
    }

    /// Non-degenerate cells of a dimension, in order.
    pub fn nondegenerate(&self, dim: usize) -> impl Iterator<Item = Globe> + '_ {
        self.cells(dim).filter(move |x| !self.is_degenerate(*x))
    }

    /// `t_{n-1} x` for `x` of dimension `n ≥ 1`.
    pub fn t(&self, x: Globe) -> Globe {
        Globe::new(x.dim - 1, self.t[x.dim][x.index])
    }

    /// `s_{n-1} x` for `x` of dimension `n ≥ 1`.
    pub fn s(&self, x: Globe) -> Globe {
        Globe::new(x.dim - 1, self.s[x.dim][x.index])
    }

    /// `i_{n+1} y` for `y` of dimension `n` below the truncation.
    pub fn i(&self, y: Globe) -> Globe {
        Globe::new(y.dim + 1, self.i[y.dim + 1][y.index])
    }

    /// The composite `t_k : X_n → X_k` for `k ≤ n`, taken along targets.
    pub fn target_at(&self, x: Globe, k: usize) -> Globe {
        let mut y = x;
        while y.dim > k {
            y = self.t(y);
        }
        y
    }

    /// The composite `s_k : X_n → X_k`; along sources down to `k + 1`, then
    /// one source step.
    pub fn source_at(&self, x: Globe, k: usize) -> Globe {
        if x.dim <= k {
            return x;
        }
        self.s(self.target_at(x, k + 1))
    }

    /// The identity cell of `y` in dimension `n ≥ dim y`.
    pub fn identity_at(&self, y: Globe, n: usize) -> Globe {
        let mut x = y;
        while x.dim < n {
            x = self.i(x);
        }
        x
    }

    pub fn to_doc(&self) -> GlobularDoc {
        let mut doc = GlobularDoc {
            truncation: self.truncation(),
            cells: self.names.clone(),
            t: BTreeMap::new(),
            s: BTreeMap::new(),
            i: BTreeMap::new(),
        };
        for x in self.all_cells() {
            if x.dim > 0 {
                doc.t.insert(self.name(x).to_string(), self.name(self.t(x)).to_string());
                doc.s.insert(self.name(x).to_string(), self.name(self.s(x)).to_string());
            }
            if x.dim < self.truncation() {
                doc.i.insert(self.name(x).to_string(), self.name(self.i(x)).to_string());
            }
        }
        doc
    }

    /// Reads the JSON form. Malformed references are parse errors; the
    /// globular relations are left to [`validate_globular`].
    pub fn from_doc(doc: &GlobularDoc) -> Result<Self> {
        if doc.cells.len() != doc.truncation + 1 {
            return Err(Error::Parse(format!(
                "truncation {} needs {} dimensions of cells, found {}",
                doc.truncation,
                doc.truncation + 1,
                doc.cells.len()
            )));
        }
        let mut lookup: HashMap<&str, Globe> = HashMap::new();
        for (d, level) in doc.cells.iter().enumerate() {
            for (k, name) in level.iter().enumerate() {
                if lookup.insert(name, Globe::new(d, k)).is_some() {
                    return Err(Error::Parse(format!("duplicate cell name `{name}`")));
                }
            }
        }
        let find = |table: &BTreeMap<String, String>, what: &str, key: &str, dim: usize| -> Result<usize> {
            let value = table.get(key).ok_or_else(|| Error::Parse(format!("missing `{what}` entry for `{key}`")))?;
            match lookup.get(value.as_str()) {
                Some(g) if g.dim == dim => Ok(g.index),
                Some(_) => Err(Error::Parse(format!("`{what}` of `{key}` is `{value}`, which is not of dimension {dim}"))),
                None => Err(Error::Parse(format!("`{what}` of `{key}` names an unknown cell `{value}`"))),
            }
        };
        let levels = doc.cells.len();
        let mut t = vec![Vec::new(); levels];
        let mut s = vec![Vec::new(); levels];
        let mut i = vec![Vec::new(); levels];
        for d in 1..levels {
            for name in &doc.cells[d] {
                t[d].push(find(&doc.t, "t", name, d - 1)?);
                s[d].push(find(&doc.s, "s", name, d - 1)?);
            }
            for name in &doc.cells[d - 1] {
                i[d].push(find(&doc.i, "i", name, d)?);
            }
        }
        for table in [&doc.t, &doc.s, &doc.i] {
            if let Some(key) = table.keys().find(|k| !lookup.contains_key(k.as_str())) {
                return Err(Error::Parse(format!("table entry for unknown cell `{key}`")));
            }
        }
        GlobularSet::from_parts(doc.cells.clone(), t, s, i).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Checks the globular relations in presheaf form: for `x` of dimension
/// `n ≥ 2`, `t t x = t s x` and `s s x = s t x`; for every `y` below the
/// truncation, `t i y = y = s i y`; and `i` injective.
pub fn validate_globular(x: &GlobularSet) -> Report {
    let mut report = Report::new();
    for n in 2..=x.truncation() {
        for c in x.cells(n) {
            if x.t(x.t(c)) != x.t(x.s(c)) {
                report.push(
                    Violation::new("globularity: t t = t s")
                        .cell(x.name(c))
                        .k(n - 2)
                        .sides(x.name(x.t(x.t(c))), x.name(x.t(x.s(c)))),
                );
            }
            if x.s(x.s(c)) != x.s(x.t(c)) {
                report.push(
                    Violation::new("globularity: s s = s t")
                        .cell(x.name(c))
                        .k(n - 2)
                        .sides(x.name(x.s(x.s(c))), x.name(x.s(x.t(c)))),
                );
            }
        }
    }
    for n in 0..x.truncation() {
        let mut seen: HashMap<usize, Globe> = HashMap::new();
        for y in x.cells(n) {
            let iy = x.i(y);
            if x.t(iy) != y {
                report.push(Violation::new("t i = id").cell(x.name(y)).k(n).sides(x.name(x.t(iy)), x.name(y)));
            }
            if x.s(iy) != y {
                report.push(Violation::new("s i = id").cell(x.name(y)).k(n).sides(x.name(x.s(iy)), x.name(y)));
            }
            if let Some(other) = seen.insert(iy.index, y) {
                report.push(
                    Violation::new("i is injective").cell(x.name(y)).k(n).sides(x.name(other), x.name(iy)),
                );
            }
        }
    }
    report
}

/// Incremental construction of a valid globular set.
///
/// Cells are added dimension by dimension. Adding a cell of dimension `n`
/// seals every lower dimension, which appends the identity cells (named
/// `1(y)`) of the dimension below it. `build` seals everything up to the
/// truncation.
#[derive(Clone, Debug)]
pub struct GlobularBuilder {
    truncation: usize,
    names: Vec<Vec<String>>,
    t: Vec<Vec<usize>>,
    s: Vec<Vec<usize>>,
    i: Vec<Vec<usize>>,
    sealed: usize,
    lookup: HashMap<String, Globe>,
}

impl GlobularBuilder {
    pub fn new(truncation: usize) -> Self {
        let levels = truncation + 1;
        GlobularBuilder {
            truncation,
            names: vec![Vec::new(); levels],
            t: vec![Vec::new(); levels],
            s: vec![Vec::new(); levels],
            i: vec![Vec::new(); levels],
            sealed: 0,
            lookup: HashMap::new(),
        }
    }

    fn push(&mut self, name: String, dim: usize, faces: Option<(usize, usize)>) -> Result<Globe> {
        if self.lookup.contains_key(&name) {
            return Err(Error::InvalidGlobular(format!("duplicate cell name `{name}`")));
        }
        let g = Globe::new(dim, self.names[dim].len());
        self.names[dim].push(name.clone());
        if let Some((src, tgt)) = faces {
            self.s[dim].push(src);
            self.t[dim].push(tgt);
        }
        self.lookup.insert(name, g);
        Ok(g)
    }

    /// Seals dimensions below `dim`: afterwards those dimensions, including
    /// their identity cells, are final.
    fn seal_below(&mut self, dim: usize) {
        while self.sealed < dim {
            self.sealed += 1;
            let d = self.sealed;
            for y in 0..self.names[d - 1].len() {
                let name = format!("1({})", self.names[d - 1][y]);
                let g = self.push(name, d, Some((y, y))).expect("identity names are fresh");
                self.i[d].push(g.index);
            }
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Adds a point.
    pub fn point(&mut self, name: impl Into<String>) -> Result<Globe> {
        if self.sealed > 0 {
            return Err(Error::InvalidGlobular("points must be added before higher cells".into()));
        }
        self.push(name.into(), 0, None)
    }

    /// Adds a non-degenerate cell from `source` to `target`, which must be
    /// parallel cells of the same dimension.
    pub fn cell(&mut self, name: impl Into<String>, source: Globe, target: Globe) -> Result<Globe> {
        let name = name.into();
        let dim = source.dim + 1;
        if source.dim != target.dim || dim > self.truncation {
            return Err(Error::InvalidGlobular(format!("cell `{name}` has faces of the wrong dimension")));
        }
        if self.sealed > dim {
            return Err(Error::InvalidGlobular(format!("dimension {dim} is already sealed")));
        }
        self.seal_below(dim);
        if source.index >= self.names[source.dim].len() || target.index >= self.names[target.dim].len() {
            return Err(Error::InvalidGlobular(format!("cell `{name}` has unknown faces")));
        }
        if source.dim > 0 {
            let d = source.dim;
            let parallel = self.s[d][source.index] == self.s[d][target.index] && self.t[d][source.index] == self.t[d][target.index];
            if !parallel {
                return Err(Error::InvalidGlobular(format!("faces of `{name}` are not parallel")));
            }
        }
        self.push(name, dim, Some((source.index, target.index)))
    }

    /// All cells of dimension `dim`, sealing lower dimensions first when
    /// `dim` is not the dimension currently being filled.
    pub fn available(&mut self, dim: usize) -> Vec<Globe> {
        self.seal_below(dim);
        (0..self.names[dim].len()).map(|k| Globe::new(dim, k)).collect()
    }

    /// Source and target of a cell added so far.
    pub fn faces(&self, x: Globe) -> Option<(Globe, Globe)> {
        (x.dim > 0).then(|| {
            (Globe::new(x.dim - 1, self.s[x.dim][x.index]), Globe::new(x.dim - 1, self.t[x.dim][x.index]))
        })
    }

    pub fn lookup(&self, name: &str) -> Option<Globe> {
        self.lookup.get(name).copied()
    }

    pub fn build(mut self) -> Result<GlobularSet> {
        self.seal_below(self.truncation);
        if self.names[0].is_empty() {
            return Err(Error::InvalidGlobular("no points".into()));
        }
        let x = GlobularSet::from_parts(self.names, self.t, self.s, self.i)?;
        let report = validate_globular(&x);
        if !report.pass {
            return Err(Error::InvalidGlobular(report.summary()));
        }
        Ok(x)
    }
}

/// The representable `𝔾_n` truncated at `truncation`: cells `s{k}x`,
/// `t{k}x` for `k < n`, the top cell `x`, and identities above.
pub fn representable(n: usize, truncation: usize) -> Result<GlobularSet> {
    if truncation < n {
        return Err(Error::InvalidGlobular(format!("truncation {truncation} is below n = {n}")));
    }
    let mut b = GlobularBuilder::new(truncation);
    let (src, tgt) = sphere_cells(&mut b, n)?;
    if n == 0 {
        b.point("x")?;
    } else {
        b.cell("x", src, tgt)?;
    }
    b.build()
}

/// `∂𝔾_{n+1}`: `𝔾_{n+1}` with its top cell removed, truncated at
/// `truncation ≥ n`.
pub fn boundary_representable(n: usize, truncation: usize) -> Result<GlobularSet> {
    if truncation < n {
        return Err(Error::InvalidGlobular(format!("truncation {truncation} is below n = {n}")));
    }
    let mut b = GlobularBuilder::new(truncation);
    sphere_cells(&mut b, n + 1)?;
    b.build()
}

/// Adds `s{k}x`, `t{k}x` for `k < n`; returns the pair in dimension
/// `n - 1` (or dummy values when `n = 0`).
fn sphere_cells(b: &mut GlobularBuilder, n: usize) -> Result<(Globe, Globe)> {
    let mut pair = (Globe::new(0, 0), Globe::new(0, 0));
    for k in 0..n {
        pair = if k == 0 {
            (b.point("s0x")?, b.point("t0x")?)
        } else {
            let (src, tgt) = pair;
            (b.cell(format!("s{k}x"), src, tgt)?, b.cell(format!("t{k}x"), src, tgt)?)
        };
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nondegenerate_counts(x: &GlobularSet) -> Vec<usize> {
        (0..=x.truncation()).map(|d| x.nondegenerate(d).count()).collect()
    }

    #[test]
    fn representables_have_the_pictured_cells() {
        assert_eq!(nondegenerate_counts(&representable(0, 0).unwrap()), vec![1]);
        assert_eq!(nondegenerate_counts(&representable(1, 1).unwrap()), vec![2, 1]);
        assert_eq!(nondegenerate_counts(&representable(2, 2).unwrap()), vec![2, 2, 1]);
        assert_eq!(nondegenerate_counts(&representable(2, 4).unwrap()), vec![2, 2, 1, 0, 0]);
    }

    #[test]
    fn boundaries_have_two_cells_per_dimension() {
        assert_eq!(nondegenerate_counts(&boundary_representable(0, 0).unwrap()), vec![2]);
        assert_eq!(nondegenerate_counts(&boundary_representable(1, 1).unwrap()), vec![2, 2]);
        assert_eq!(nondegenerate_counts(&boundary_representable(3, 4).unwrap()), vec![2, 2, 2, 2, 0]);
        assert!(boundary_representable(3, 2).is_err());
    }

    #[test]
    fn collapsed_faces() {
        let x = representable(3, 3).unwrap();
        let top = x.require("x").unwrap();
        for k in 0..3 {
            assert_eq!(x.name(x.target_at(top, k)), format!("t{k}x"));
            assert_eq!(x.name(x.source_at(top, k)), format!("s{k}x"));
        }
        assert_eq!(x.target_at(top, 3), top);
        let one = x.identity_at(x.require("t1x").unwrap(), 3);
        assert_eq!(x.name(one), "1(1(t1x))");
        assert!(x.is_degenerate(one));
    }

    #[test]
    fn planted_defects_are_reported() {
        // a 2-cell whose source and target arrows are not parallel
        let names = vec![
            vec!["p".to_string(), "q".to_string()],
            vec!["f".to_string(), "g".to_string(), "1(p)".to_string(), "1(q)".to_string()],
            vec!["a".to_string(), "1(f)".to_string(), "1(g)".to_string(), "1(1(p))".to_string(), "1(1(q))".to_string()],
        ];
        let t = vec![vec![], vec![1, 0, 0, 1], vec![1, 0, 1, 2, 3]];
        let s = vec![vec![], vec![0, 0, 0, 1], vec![0, 0, 1, 2, 3]];
        let i = vec![vec![], vec![2, 3], vec![1, 2, 3, 4]];
        let x = GlobularSet::from_parts(names.clone(), t.clone(), s.clone(), i.clone()).unwrap();
        let report = validate_globular(&x);
        assert!(!report.pass);
        assert_eq!(report.first().unwrap().cell.as_deref(), Some("a"));

        // i not injective
        let mut i2 = i;
        i2[1] = vec![2, 2];
        let mut t2 = t;
        t2[1][3] = 0;
        let mut s2 = s;
        s2[1][3] = 0;
        let x = GlobularSet::from_parts(names, t2, s2, i2).unwrap();
        let report = validate_globular(&x);
        assert!(report.violations.iter().any(|v| v.check == "i is injective"));
    }

    #[test]
    fn json_round_trip() {
        let x = representable(2, 3).unwrap();
        let doc = x.to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        let back = GlobularSet::from_doc(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_rejects_dangling_references() {
        let mut doc = representable(1, 1).unwrap().to_doc();
        doc.t.insert("x".into(), "nowhere".into());
        assert!(matches!(GlobularSet::from_doc(&doc), Err(Error::Parse(_))));
    }

    #[test]
    fn builder_rejects_non_parallel_faces() {
        let mut b = GlobularBuilder::new(2);
        let p = b.point("p").unwrap();
        let q = b.point("q").unwrap();
        let f = b.cell("f", p, q).unwrap();
        let g = b.cell("g", q, p).unwrap();
        assert!(b.cell("a", f, g).is_err());
    }
}
