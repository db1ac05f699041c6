use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::closure::{generate_omega, Bounds, OmegaCat};
use super::mu::MuElement;
use crate::chain::{BasedComplex, Cell, Chain};
use crate::error::Result;
use crate::report::{Report, Violation};
use crate::ring::Ring;
use crate::simplicial::SimplicialComplex;

/// The Steiner atom of a basis cell `b` of degree `n`:
/// `b_n^± = b` and `b_i^± = (∂b_{i+1}^±)^±` going down.
pub fn steiner_atom(complex: &BasedComplex<BigInt>, b: Cell) -> Result<MuElement<BigInt>> {
    complex.require(complex.name(b))?;
    let n = b.degree();
    let mut minus = vec![Chain::zero(); n + 1];
    let mut plus = vec![Chain::zero(); n + 1];
    minus[n] = Chain::from_cell(b);
    plus[n] = Chain::from_cell(b);
    for i in (0..n).rev() {
        let (_, neg) = complex.boundary(&minus[i + 1])?.positive_negative_parts()?;
        let (pos, _) = complex.boundary(&plus[i + 1])?.positive_negative_parts()?;
        minus[i] = neg;
        plus[i] = pos;
    }
    Ok(MuElement::new(minus, plus))
}

/// `c1 ≤ c2` on basis cells: `c1` occurs in `(∂c2)^-` or `c2` occurs in
/// `(∂c1)^+`. Returns the adjacency lists of the strict relation.
fn order_edges(complex: &BasedComplex<BigInt>) -> Result<Vec<(Cell, BTreeSet<Cell>)>> {
    let cells: Vec<Cell> = complex.all_cells().collect();
    let mut edges: Vec<(Cell, BTreeSet<Cell>)> = cells.iter().map(|c| (*c, BTreeSet::new())).collect();
    let position = |c: Cell| cells.iter().position(|x| *x == c).expect("basis cell");
    for &c in &cells {
        let (pos, neg) = complex.boundary_of(c).positive_negative_parts()?;
        for d in neg.cells() {
            if d != c {
                edges[position(d)].1.insert(c);
            }
        }
        for d in pos.cells() {
            if d != c {
                edges[position(c)].1.insert(d);
            }
        }
    }
    Ok(edges)
}

/// Finds a directed cycle through distinct cells, returned closed
/// (`[p, …, p]`).
fn find_cycle(edges: &[(Cell, BTreeSet<Cell>)]) -> Option<Vec<Cell>> {
    let cells: Vec<Cell> = edges.iter().map(|(c, _)| *c).collect();
    let position = |c: Cell| cells.iter().position(|x| *x == c).expect("basis cell");
    // 0 = unseen, 1 = on stack, 2 = done
    let mut state = vec![0u8; cells.len()];
    let mut stack: Vec<(usize, Vec<Cell>)> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..cells.len() {
        if state[start] != 0 {
            continue;
        }
        state[start] = 1;
        path.push(start);
        stack.push((start, edges[start].1.iter().rev().copied().collect()));
        while let Some((node, pending)) = stack.last_mut() {
            let node = *node;
            match pending.pop() {
                Some(next) => {
                    let j = position(next);
                    match state[j] {
                        0 => {
                            state[j] = 1;
                            path.push(j);
                            stack.push((j, edges[j].1.iter().rev().copied().collect()));
                        }
                        1 => {
                            let from = path.iter().position(|&p| p == j).expect("on stack");
                            let mut cycle: Vec<Cell> = path[from..].iter().map(|&p| cells[p]).collect();
                            cycle.push(cells[j]);
                            return Some(cycle);
                        }
                        _ => {}
                    }
                }
                None => {
                    state[node] = 2;
                    path.pop();
                    stack.pop();
                }
            }
        }
    }
    None
}

/// Checks the strong augmented directed complex axioms on a based
/// ℤ-complex: a unital basis (`ε(b_0^-) = ε(b_0^+) = 1` for every Steiner
/// atom) and antisymmetry of the transitive closure of the order on basis
/// cells. Cycles are reported as `p -> q -> … -> p`.
pub fn validate_sadc(complex: &BasedComplex<BigInt>) -> Report {
    let mut report = Report::new();
    for b in complex.all_cells() {
        let atom = match steiner_atom(complex, b) {
            Ok(a) => a,
            Err(e) => {
                report.push(Violation::new(format!("atom: {e}")).cell(complex.name(b)));
                continue;
            }
        };
        for (side, chain) in [("-", atom.minus(0)), ("+", atom.plus(0))] {
            let e = complex.augment(&chain).expect("atom cells belong to the complex");
            if !e.is_one() {
                report.push(
                    Violation::new(format!("unital basis: ε(b_0^{side}) = 1"))
                        .cell(complex.name(b))
                        .k(0)
                        .sides(e.to_string(), "1"),
                );
            }
        }
    }
    match order_edges(complex) {
        Ok(edges) => {
            if let Some(cycle) = find_cycle(&edges) {
                let names: Vec<&str> = cycle.iter().map(|c| complex.name(*c)).collect();
                report.push(Violation::new("order is antisymmetric").cell(names[0]).sides(names.join(" -> "), "no cycle"));
            }
        }
        Err(e) => report.push(Violation::new(format!("order: {e}"))),
    }
    report
}

/// The oriental `𝒪_n`: the sub-ω-category of `μ(C(Δⁿ; ℤ))` generated by
/// the Steiner atoms of the simplices.
pub fn oriental(n: usize, bounds: Bounds) -> Result<OmegaCat<BigInt>> {
    let complex = SimplicialComplex::standard_simplex(n).chains::<BigInt>();
    let atoms = complex.all_cells().map(|b| steiner_atom(&complex, b)).collect::<Result<Vec<_>>>()?;
    generate_omega(atoms, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn simplex(n: usize) -> BasedComplex<BigInt> {
        SimplicialComplex::standard_simplex(n).chains()
    }

    fn c(complex: &BasedComplex<BigInt>, names: &[&str]) -> Chain<BigInt> {
        names.iter().map(|s| (complex.require(s).unwrap(), z(1))).collect()
    }

    #[test]
    fn atom_of_a_triangle() {
        let cx = simplex(2);
        let a = steiner_atom(&cx, cx.require("[012]").unwrap()).unwrap();
        let expected = MuElement::new(
            vec![c(&cx, &["[0]"]), c(&cx, &["[02]"]), c(&cx, &["[012]"])],
            vec![c(&cx, &["[2]"]), c(&cx, &["[01]", "[12]"]), c(&cx, &["[012]"])],
        );
        assert_eq!(a, expected);
    }

    #[test]
    fn atom_of_an_edge_and_a_vertex() {
        let cx = simplex(1);
        let e = steiner_atom(&cx, cx.require("[01]").unwrap()).unwrap();
        assert_eq!(e, MuElement::new(vec![c(&cx, &["[0]"]), c(&cx, &["[01]"])], vec![c(&cx, &["[1]"]), c(&cx, &["[01]"])]));
        let v = steiner_atom(&cx, cx.require("[0]").unwrap()).unwrap();
        assert_eq!(v, MuElement::new(vec![c(&cx, &["[0]"])], vec![c(&cx, &["[0]"])]));
    }

    #[test]
    fn simplices_are_sadcs() {
        for n in 0..=4 {
            assert!(validate_sadc(&simplex(n)).pass, "Δ^{n}");
        }
    }

    #[test]
    fn cycle_is_a_witness() {
        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("p", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("q", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("e", 1, [("q", z(1)), ("p", z(-1))]).unwrap();
        b.cell("f", 1, [("p", z(1)), ("q", z(-1))]).unwrap();
        let report = validate_sadc(&b.build().unwrap());
        assert!(!report.pass);
        let v = report.first().unwrap();
        assert_eq!(v.lhs.as_deref(), Some("p -> e -> q -> f -> p"));
    }

    #[test]
    fn closed_edge_is_not_unital() {
        let mut b = BasedComplex::<BigInt>::builder();
        b.cell("p", 0, Vec::<(&str, BigInt)>::new()).unwrap();
        b.cell("loop", 1, Vec::<(&str, BigInt)>::new()).unwrap();
        let report = validate_sadc(&b.build().unwrap());
        assert!(!report.pass);
        assert_eq!(report.first().unwrap().cell.as_deref(), Some("loop"));
    }

    #[test]
    fn small_orientals() {
        assert_eq!(oriental(0, Bounds::default()).unwrap().len(), 1);
        assert_eq!(oriental(1, Bounds::default()).unwrap().len(), 3);
        assert_eq!(oriental(2, Bounds::default()).unwrap().len(), 8);
    }
}
