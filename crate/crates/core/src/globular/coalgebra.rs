use super::map::{validate_globular_map, GlobularMap};
use super::set::{validate_globular, Globe, GlobularSet};
use crate::chain::{BasedComplex, Cell, Chain, TensorChain};
use crate::coalgebra::{classify_basis_image, validate_coalgebra_map, Coalgebra, CoalgebraMap};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// The globular coalgebra of a finite globular set: normalized chains with
/// `∂x = t x - s x` and
///
/// ```text
/// Δ_k x = 0                                    n < k
///       = x ⊗ x                                n = k
///       = t_k x ⊗ x + (-1)^{(n+1)k} x ⊗ s_k x  k < n
/// ```
///
/// for a non-degenerate `x` of dimension `n`; identity cells vanish.
#[derive(Clone, Debug)]
pub struct GlobularCoalgebra<R: Ring> {
    set: GlobularSet,
    complex: BasedComplex<R>,
    basis: Vec<Vec<Option<usize>>>,
    globes: Vec<Vec<usize>>,
}

impl<R: Ring> GlobularCoalgebra<R> {
    /// Fails unless the globular relations hold.
    pub fn new(set: &GlobularSet) -> Result<Self> {
        let report = validate_globular(set);
        if !report.pass {
            return Err(Error::InvalidGlobular(report.summary()));
        }
        let levels = set.truncation() + 1;
        let mut basis = vec![Vec::new(); levels];
        let mut globes = vec![Vec::new(); levels];
        for d in 0..levels {
            for x in set.cells(d) {
                if set.is_degenerate(x) {
                    basis[d].push(None);
                } else {
                    basis[d].push(Some(globes[d].len()));
                    globes[d].push(x.index);
                }
            }
        }
        let mut builder = BasedComplex::builder();
        for d in 0..levels {
            for x in set.nondegenerate(d) {
                let mut boundary: Vec<(&str, R)> = Vec::new();
                if d > 0 {
                    for (face, sign) in [(set.t(x), R::one()), (set.s(x), R::one().neg())] {
                        if !set.is_degenerate(face) {
                            boundary.push((set.name(face), sign));
                        }
                    }
                }
                builder.cell(set.name(x), d, boundary)?;
            }
        }
        let complex = builder.build()?;
        Ok(GlobularCoalgebra { set: set.clone(), complex, basis, globes })
    }

    pub fn set(&self) -> &GlobularSet {
        &self.set
    }

    /// The basis cell of a non-degenerate globe.
    pub fn basis_cell(&self, x: Globe) -> Option<Cell> {
        self.basis[x.dim][x.index].map(|i| Cell::new(x.dim, i))
    }

    pub fn globe(&self, cell: Cell) -> Globe {
        Globe::new(cell.degree(), self.globes[cell.degree()][cell.index()])
    }

    /// The class of a globe in the normalized chains: the basis cell, or
    /// zero for an identity cell.
    pub fn class(&self, x: Globe) -> Chain<R> {
        self.basis_cell(x).map(Chain::from_cell).unwrap_or_default()
    }

    /// `Δ_k x` on a globe; identity cells have no coproduct of their own.
    pub fn coproduct(&self, x: Globe, k: usize) -> Result<TensorChain<R>> {
        let cell = self.basis_cell(x).ok_or_else(|| Error::DegenerateCell(self.set.name(x).to_string()))?;
        Ok(self.delta_cell(cell, k))
    }
}

impl<R: Ring> Coalgebra<R> for GlobularCoalgebra<R> {
    fn complex(&self) -> &BasedComplex<R> {
        &self.complex
    }

    fn delta_cell(&self, cell: Cell, k: usize) -> TensorChain<R> {
        let n = cell.degree();
        if n < k {
            return TensorChain::zero();
        }
        if n == k {
            return TensorChain::pure(cell, cell);
        }
        let x = self.globe(cell);
        let me = Chain::from_cell(cell);
        let mut out = TensorChain::tensor(&self.class(self.set.target_at(x, k)), &me);
        out.add_tensor(&me, &self.class(self.set.source_at(x, k)), &R::sign_power((n + 1) * k));
        out
    }
}

/// `C_•(F)`: a non-degenerate `x` goes to `F(x)` when that is
/// non-degenerate, and to zero otherwise.
pub fn chains_of_map<R: Ring>(
    f: &GlobularMap,
    domain: &GlobularCoalgebra<R>,
    codomain: &GlobularCoalgebra<R>,
) -> CoalgebraMap<R> {
    CoalgebraMap::from_fn(domain.complex(), |cell| codomain.class(f.image(domain.globe(cell))))
}

/// Rebuilds the globular map `F` with `C_•(F) = f`.
///
/// `f` is validated as a coalgebra map first. Then, by increasing dimension:
/// `F(x) = f(x)` when `f(x)` is a basis cell, `F(x) = i F(t x)` when
/// `f(x) = 0`, and `F(i y) = i F(y)` on identity cells. The result is checked
/// to be a globular map with `C_•(F) = f`.
pub fn reconstruct_map<R: Ring>(
    f: &CoalgebraMap<R>,
    domain: &GlobularCoalgebra<R>,
    codomain: &GlobularCoalgebra<R>,
) -> Result<GlobularMap> {
    let x = domain.set();
    let y = codomain.set();
    if x.truncation() != y.truncation() {
        return Err(Error::NotCoalgebraMap("domain and codomain have different truncations".into()));
    }
    let kmax = domain.default_kmax().max(codomain.default_kmax());
    let report = validate_coalgebra_map(f, domain, codomain, kmax);
    if !report.pass {
        return Err(Error::NotCoalgebraMap(report.summary()));
    }
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(x.truncation() + 1);
    for d in 0..=x.truncation() {
        let mut row = Vec::with_capacity(x.count(d));
        for c in x.cells(d) {
            let image = if x.is_degenerate(c) {
                let below = Globe::new(d - 1, images[d - 1][x.t(c).index]);
                y.i(below)
            } else {
                let cell = domain.basis_cell(c).expect("non-degenerate");
                match classify_basis_image(f, cell, domain, codomain)? {
                    Some(b) => codomain.globe(b),
                    None if d == 0 => {
                        return Err(Error::NotCoalgebraMap(format!("point `{}` is sent to zero", x.name(c))));
                    }
                    None => {
                        let below = Globe::new(d - 1, images[d - 1][x.t(c).index]);
                        y.i(below)
                    }
                }
            };
            row.push(image.index);
        }
        images.push(row);
    }
    let map = GlobularMap::from_images(images);
    let report = validate_globular_map(&map, x, y);
    if !report.pass {
        return Err(Error::Contract(format!("reconstructed map is not globular: {}", report.summary())));
    }
    if chains_of_map(&map, domain, codomain) != *f {
        return Err(Error::Contract("reconstructed map does not induce the given coalgebra map".into()));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{atom, is_group_like, validate_cosymmetric};
    use crate::globular::{boundary_representable, representable, GlobularBuilder};
    use crate::omega::{mu_validate, MuElement};
    use crate::ring::F2;
    use num_bigint::BigInt;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ranks_and_boundary() {
        let g1 = GlobularCoalgebra::<BigInt>::new(&representable(1, 1).unwrap()).unwrap();
        let c = g1.complex();
        assert_eq!(c.ranks(), vec![2, 1]);
        let expected = Chain::from_terms([(c.require("t0x").unwrap(), z(1)), (c.require("s0x").unwrap(), z(-1))]);
        assert_eq!(c.boundary_of(c.require("x").unwrap()), &expected);
        let g2 = GlobularCoalgebra::<BigInt>::new(&representable(2, 3).unwrap()).unwrap();
        assert_eq!(g2.complex().ranks(), vec![2, 2, 1]);
        let point = GlobularCoalgebra::<BigInt>::new(&representable(0, 0).unwrap()).unwrap();
        assert_eq!(point.complex().augment_cell(Cell::new(0, 0)), z(1));
    }

    #[test]
    fn coproduct_cases() {
        let g = GlobularCoalgebra::<BigInt>::new(&representable(2, 2).unwrap()).unwrap();
        let c = g.complex();
        let x = c.require("x").unwrap();
        let t1 = c.require("t1x").unwrap();
        let s1 = c.require("s1x").unwrap();
        assert_eq!(g.delta_cell(x, 2), TensorChain::pure(x, x));
        assert!(g.delta_cell(x, 3).is_zero());
        let expected = TensorChain::pure(t1, x).sub(&TensorChain::pure(x, s1));
        assert_eq!(g.delta_cell(x, 1), expected);
        let degenerate = g.set().require("1(t0x)").unwrap();
        assert!(matches!(g.coproduct(degenerate, 0), Err(Error::DegenerateCell(_))));
    }

    #[test]
    fn representables_are_cosymmetric() {
        for n in 0..=3 {
            let x = representable(n, 4).unwrap();
            let gz = GlobularCoalgebra::<BigInt>::new(&x).unwrap();
            assert!(validate_cosymmetric(&gz, 6).pass, "𝔾_{n} over ℤ");
            let gf = GlobularCoalgebra::<F2>::new(&x).unwrap();
            assert!(validate_cosymmetric(&gf, 6).pass, "𝔾_{n} over 𝔽₂");
            let b = GlobularCoalgebra::<BigInt>::new(&boundary_representable(n, 4).unwrap()).unwrap();
            assert!(validate_cosymmetric(&b, 6).pass, "∂𝔾_{}", n + 1);
        }
    }

    #[test]
    fn atom_of_the_top_two_cell() {
        let g = GlobularCoalgebra::<BigInt>::new(&representable(2, 2).unwrap()).unwrap();
        let c = g.complex();
        let cell = |s: &str| Chain::from_cell(c.require(s).unwrap());
        let x = c.require("x").unwrap();
        assert!(is_group_like(&g, x, 4));
        let a = atom(&g, x).unwrap();
        let expected = MuElement::new(
            vec![cell("s0x"), cell("s1x"), cell("x")],
            vec![cell("t0x"), cell("t1x"), cell("x")],
        );
        assert_eq!(a, expected);
        assert!(mu_validate(&a, c).pass);
    }

    fn collapse_arrow() -> (GlobularSet, GlobularSet, GlobularMap) {
        let x = representable(1, 1).unwrap();
        let mut b = GlobularBuilder::new(1);
        b.point("p").unwrap();
        let p = b.build().unwrap();
        let images = vec![vec![0, 0], vec![0, 0, 0]];
        (x, p, GlobularMap::from_images(images))
    }

    #[test]
    fn collapsing_map_kills_the_arrow_and_reconstructs() {
        let (x, p, f) = collapse_arrow();
        assert!(validate_globular_map(&f, &x, &p).pass);
        let cx = GlobularCoalgebra::<BigInt>::new(&x).unwrap();
        let cp = GlobularCoalgebra::<BigInt>::new(&p).unwrap();
        let chains = chains_of_map(&f, &cx, &cp);
        assert!(chains.image(cx.complex().require("x").unwrap()).is_zero());
        assert_eq!(reconstruct_map(&chains, &cx, &cp).unwrap(), f);
    }

    #[test]
    fn two_cell_sent_to_zero_becomes_an_identity() {
        // 𝔾₂ → 𝔾₁ sending both arrows to the arrow and the 2-cell to 0
        let x = representable(2, 2).unwrap();
        let mut b = GlobularBuilder::new(2);
        let s = b.point("s0x").unwrap();
        let t = b.point("t0x").unwrap();
        b.cell("x", s, t).unwrap();
        let y = b.build().unwrap();
        let cx = GlobularCoalgebra::<BigInt>::new(&x).unwrap();
        let cy = GlobularCoalgebra::<BigInt>::new(&y).unwrap();
        let arrow = Chain::from_cell(cy.complex().require("x").unwrap());
        let f = CoalgebraMap::from_fn(cx.complex(), |cell| match cx.complex().name(cell) {
            "s1x" | "t1x" => arrow.clone(),
            "x" => Chain::zero(),
            name => Chain::from_cell(cy.complex().require(name).unwrap()),
        });
        let map = reconstruct_map(&f, &cx, &cy).unwrap();
        let top = x.require("x").unwrap();
        assert_eq!(y.name(map.image(top)), "1(x)");
    }

    #[test]
    fn non_coalgebra_maps_are_rejected() {
        let x = representable(1, 1).unwrap();
        let cx = GlobularCoalgebra::<BigInt>::new(&x).unwrap();
        let c = cx.complex();
        let s = c.require("s0x").unwrap();
        let t = c.require("t0x").unwrap();
        let arrow = c.require("x").unwrap();
        let mut f = CoalgebraMap::identity(c);
        f.set_image(arrow, Chain::from_cell(arrow).scale(&z(2)));
        assert!(matches!(reconstruct_map(&f, &cx, &cx), Err(Error::NotCoalgebraMap(_))));
        let mut g = CoalgebraMap::identity(c);
        g.set_image(s, Chain::from_cell(t));
        assert!(reconstruct_map(&g, &cx, &cx).is_err());
    }
}
