//! Brute-force reference computations, written without the library's chain,
//! complex or closure types so they can cross-check them.

use std::collections::{BTreeMap, BTreeSet};

type Lin = BTreeMap<String, i64>;

/// A μ-element as a list of `(minus, plus)` pairs, trimmed.
type Elem = Vec<(Lin, Lin)>;

fn name(vertices: &[usize]) -> String {
    if vertices.iter().all(|&v| v < 10) {
        format!("[{}]", vertices.iter().map(|v| v.to_string()).collect::<String>())
    } else {
        format!("[{}]", vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn add_into(target: &mut Lin, source: &Lin, sign: i64) {
    for (k, v) in source {
        let e = target.entry(k.clone()).or_insert(0);
        *e += sign * v;
        if *e == 0 {
            target.remove(k);
        }
    }
}

fn trim(mut e: Elem) -> Elem {
    while e.last().is_some_and(|(m, p)| m.is_empty() && p.is_empty()) {
        e.pop();
    }
    e
}

fn face(e: &Elem, k: usize, target: bool) -> Elem {
    if e.len() <= k + 1 {
        return e.clone();
    }
    let mut out: Elem = e[..=k].to_vec();
    let chosen = if target { out[k].1.clone() } else { out[k].0.clone() };
    out[k] = (chosen.clone(), chosen);
    trim(out)
}

fn combine(b: &Elem, a: &Elem, c: &Elem) -> Elem {
    let len = b.len().max(a.len()).max(c.len());
    let empty = (Lin::new(), Lin::new());
    let out = (0..len)
        .map(|k| {
            let (bm, bp) = b.get(k).unwrap_or(&empty);
            let (am, ap) = a.get(k).unwrap_or(&empty);
            let (cm, cp) = c.get(k).unwrap_or(&empty);
            let mut m = bm.clone();
            add_into(&mut m, am, 1);
            add_into(&mut m, cm, -1);
            let mut p = bp.clone();
            add_into(&mut p, ap, 1);
            add_into(&mut p, cp, -1);
            (m, p)
        })
        .collect();
    trim(out)
}

/// Element counts of the closure of the Steiner atoms of `Δⁿ`, computed by
/// rounds over all pairs with a sorted-vector dedup. Returns `None` past
/// `limit` elements.
pub fn oriental_count(n: usize, limit: usize) -> Option<usize> {
    // simplices of Δⁿ by vertex bitmask
    let simplices: Vec<Vec<usize>> = (1u32..(1 << (n + 1)))
        .map(|mask| (0..=n).filter(|v| mask & (1 << v) != 0).collect())
        .collect();
    let boundary = |s: &[usize]| -> Lin {
        let mut out = Lin::new();
        if s.len() > 1 {
            for j in 0..s.len() {
                let mut f = s.to_vec();
                f.remove(j);
                add_into(&mut out, &Lin::from([(name(&f), 1)]), if j % 2 == 0 { 1 } else { -1 });
            }
        }
        out
    };
    let by_name: BTreeMap<String, Vec<usize>> = simplices.iter().map(|s| (name(s), s.clone())).collect();
    let lin_boundary = |c: &Lin| -> Lin {
        let mut out = Lin::new();
        for (k, v) in c {
            add_into(&mut out, &boundary(&by_name[k]), *v);
        }
        out
    };
    let mut elements: Vec<Elem> = Vec::new();
    let insert = |e: Elem, elements: &mut Vec<Elem>| -> bool {
        match elements.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                elements.insert(pos, e);
                true
            }
        }
    };
    for s in &simplices {
        let d = s.len() - 1;
        let top = Lin::from([(name(s), 1)]);
        let mut e: Elem = vec![(Lin::new(), Lin::new()); d + 1];
        e[d] = (top.clone(), top);
        for i in (0..d).rev() {
            let minus: Lin = lin_boundary(&e[i + 1].0).into_iter().filter(|(_, v)| *v < 0).map(|(k, v)| (k, -v)).collect();
            let plus: Lin = lin_boundary(&e[i + 1].1).into_iter().filter(|(_, v)| *v > 0).collect();
            e[i] = (minus, plus);
        }
        insert(e, &mut elements);
    }
    loop {
        let mut fresh: Vec<Elem> = Vec::new();
        for e in &elements {
            for k in 0..e.len().saturating_sub(1) {
                fresh.push(face(e, k, false));
                fresh.push(face(e, k, true));
            }
        }
        for b in &elements {
            for a in &elements {
                let top = b.len().min(a.len()).saturating_sub(1);
                for m in 0..top {
                    let c = face(b, m, false);
                    if c == face(a, m, true) {
                        fresh.push(combine(b, a, &c));
                    }
                }
            }
        }
        let mut grew = false;
        for e in fresh {
            grew |= insert(e, &mut elements);
            if elements.len() > limit {
                return None;
            }
        }
        if !grew {
            return Some(elements.len());
        }
    }
}

/// What brute force says about a triangulated surface over 𝔽₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceOracle {
    /// `dim H^1` and `dim H^2`.
    pub h1: usize,
    pub h2: usize,
    /// Whether `α ⌣ α` is a non-coboundary for a non-trivial class `α` of
    /// degree one, pairing front and back faces.
    pub square_nonzero: bool,
}

/// Enumerates every 1-cochain on a 2-dimensional complex given by its
/// triangles (at most 20 edges).
pub fn surface_oracle(triangles: &[[usize; 3]]) -> SurfaceOracle {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for t in triangles {
        let mut t = *t;
        t.sort_unstable();
        vertices.extend(t);
        edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    }
    let vertices: Vec<usize> = vertices.into_iter().collect();
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    assert!(edges.len() <= 20, "oracle is exhaustive over edge cochains");
    let edge = |a: usize, b: usize| edges.iter().position(|e| *e == (a.min(b), a.max(b))).expect("edge");
    let tri: Vec<[usize; 3]> = triangles
        .iter()
        .map(|t| {
            let mut t = *t;
            t.sort_unstable();
            t
        })
        .collect();
    let on = |mask: u32, i: usize| mask & (1 << i) != 0;
    let delta1 = |alpha: u32| -> u32 {
        tri.iter().enumerate().fold(0, |acc, (j, t)| {
            let v = on(alpha, edge(t[0], t[1])) ^ on(alpha, edge(t[0], t[2])) ^ on(alpha, edge(t[1], t[2]));
            acc | ((v as u32) << j)
        })
    };
    let delta0 = |f: u32| -> u32 {
        edges.iter().enumerate().fold(0, |acc, (j, (a, b))| {
            let ia = vertices.iter().position(|v| v == a).expect("vertex");
            let ib = vertices.iter().position(|v| v == b).expect("vertex");
            acc | (((on(f, ia) ^ on(f, ib)) as u32) << j)
        })
    };
    let coboundaries1: BTreeSet<u32> = (0..1u32 << vertices.len()).map(delta0).collect();
    let cocycles1: Vec<u32> = (0..1u32 << edges.len()).filter(|&a| delta1(a) == 0).collect();
    let coboundaries2: BTreeSet<u32> = (0..1u32 << edges.len()).map(delta1).collect();
    let log2 = |x: usize| x.trailing_zeros() as usize;
    let h1 = log2(cocycles1.len()) - log2(coboundaries1.len());
    // every 2-cochain is a cocycle on a 2-dimensional complex
    let h2 = tri.len() - log2(coboundaries2.len());
    let square_nonzero = cocycles1.iter().filter(|a| !coboundaries1.contains(a)).any(|&a| {
        let square = tri.iter().enumerate().fold(0u32, |acc, (j, t)| {
            let v = on(a, edge(t[0], t[1])) && on(a, edge(t[1], t[2]));
            acc | ((v as u32) << j)
        });
        !coboundaries2.contains(&square)
    });
    SurfaceOracle { h1, h2, square_nonzero }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oriental_counts() {
        assert_eq!(oriental_count(0, 100), Some(1));
        assert_eq!(oriental_count(1, 100), Some(3));
        assert_eq!(oriental_count(2, 100), Some(8));
    }

    #[test]
    fn sphere_has_trivial_squares() {
        let tetra = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
        let o = surface_oracle(&tetra);
        assert_eq!((o.h1, o.h2, o.square_nonzero), (0, 1, false));
    }
}
