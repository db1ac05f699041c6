use super::{Coalgebra, CoalgebraMap};
use crate::chain::{Cell, Chain, TensorChain};
use crate::error::{Error, Result};
use crate::omega::MuElement;
use crate::ring::Ring;

/// The two projections `π_b^-` and `π_b^+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

/// `π_b^+ = id ⊗ π_b` and `π_b^- = π_b^+ T`.
pub fn project<R: Ring>(b: Cell, side: Side, t: &TensorChain<R>) -> Chain<R> {
    let mut out = Chain::zero();
    for ((x, y), coeff) in t.terms() {
        match side {
            Side::Plus if *y == b => out.add_term(*x, coeff.clone()),
            Side::Minus if *x == b => {
                out.add_term(*y, coeff.mul(&R::sign_power(x.degree() * y.degree())));
            }
            _ => {}
        }
    }
    out
}

/// Group-like test for a homogeneous element `c` of degree `n`:
/// every `Δ_k c` lies in `C_{≤n} ⊗ C_{≤n}`, `Δ_n c = c ⊗ c`, and `ε(c) = 1`
/// when `n = 0`. `k` ranges over `0..=kmax`.
pub fn is_group_like_element<R: Ring>(coalgebra: &impl Coalgebra<R>, c: &Chain<R>, kmax: usize) -> bool {
    let Some(n) = c.degree() else {
        return false;
    };
    let complex = coalgebra.complex();
    if c.cells().any(|cell| !complex.contains(cell)) {
        return false;
    }
    if n == 0 && !complex.augment(c).is_ok_and(|e| e.is_one()) {
        return false;
    }
    if coalgebra.delta(c, n) != TensorChain::tensor(c, c) {
        return false;
    }
    (0..=kmax.max(n)).all(|k| coalgebra.delta(c, k).within_degree(n))
}

/// [`is_group_like_element`] on a basis cell.
pub fn is_group_like<R: Ring>(coalgebra: &impl Coalgebra<R>, b: Cell, kmax: usize) -> bool {
    is_group_like_element(coalgebra, &Chain::from_cell(b), kmax)
}

/// For a coalgebra map between group-like coalgebras over an integral
/// domain, the image of a basis cell is either zero or a single basis cell.
/// Anything else means the input was not such a map.
pub fn classify_basis_image<R: Ring>(
    f: &CoalgebraMap<R>,
    a: Cell,
    domain: &impl Coalgebra<R>,
    codomain: &impl Coalgebra<R>,
) -> Result<Option<Cell>> {
    let image = f.image(a);
    if image.is_zero() {
        return Ok(None);
    }
    image.as_single_cell().map(Some).ok_or_else(|| Error::Dichotomy {
        cell: domain.complex().name(a).to_string(),
        image: codomain.complex().format_chain(image),
    })
}

/// The atom `⟨b⟩` of a group-like basis cell:
/// `⟨b⟩_k^- = (-1)^k π_b^- Δ_k b` and `⟨b⟩_k^+ = π_b^+ Δ_k b`.
pub fn atom<R: Ring>(coalgebra: &impl Coalgebra<R>, b: Cell) -> Result<MuElement<R>> {
    if !is_group_like(coalgebra, b, coalgebra.default_kmax()) {
        return Err(Error::NotGroupLike(coalgebra.complex().name(b).to_string()));
    }
    let n = b.degree();
    let mut minus = Vec::with_capacity(n + 1);
    let mut plus = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let delta = coalgebra.delta_cell(b, k);
        minus.push(project(b, Side::Minus, &delta).scale(&R::sign_power(k)));
        plus.push(project(b, Side::Plus, &delta));
    }
    Ok(MuElement::new(minus, plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::BasedComplex;
    use crate::coalgebra::TableCoalgebra;
    use crate::ring::F2;
    use num_bigint::BigInt;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn projections_pick_matching_factor() {
        // x of degree 2, t0x / s0x of degree 0: Δ_0 x = t0x⊗x + x⊗s0x
        let x = Cell::new(2, 0);
        let t0 = Cell::new(0, 1);
        let s0 = Cell::new(0, 0);
        let delta = TensorChain::<BigInt>::pure(t0, x).add(&TensorChain::pure(x, s0));
        assert_eq!(project(x, Side::Plus, &delta), Chain::from_cell(t0));
        assert_eq!(project(x, Side::Minus, &delta), Chain::from_cell(s0));
        assert!(project(x, Side::Minus, &TensorChain::<BigInt>::zero()).is_zero());
    }

    #[test]
    fn minus_projection_carries_koszul_sign() {
        let x = Cell::new(1, 0);
        let y = Cell::new(1, 1);
        let t = TensorChain::<BigInt>::pure(x, y);
        assert_eq!(project(x, Side::Minus, &t), Chain::term(y, z(-1)));
    }

    fn point() -> BasedComplex<F2> {
        let mut b = BasedComplex::builder();
        b.cell("p", 0, Vec::<(&str, F2)>::new()).unwrap();
        b.cell("q", 0, Vec::<(&str, F2)>::new()).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn planted_non_group_like_cell() {
        let complex = point();
        let p = complex.require("p").unwrap();
        let q = complex.require("q").unwrap();
        let mut c = TableCoalgebra::new(complex);
        c.set(p, 0, TensorChain::pure(p, p));
        c.set(q, 0, TensorChain::pure(q, q));
        assert!(is_group_like(&c, p, 2));
        c.set(p, 0, TensorChain::pure(p, p).add(&TensorChain::pure(q, q)));
        assert!(!is_group_like(&c, p, 2));
        assert!(matches!(atom(&c, p), Err(Error::NotGroupLike(_))));
    }

    #[test]
    fn degree_zero_atom() {
        let complex = point();
        let p = complex.require("p").unwrap();
        let mut c = TableCoalgebra::new(complex);
        c.set(p, 0, TensorChain::pure(p, p));
        let a = atom(&c, p).unwrap();
        assert_eq!(a, MuElement::new(vec![Chain::from_cell(p)], vec![Chain::from_cell(p)]));
    }
}
