use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Coalgebra;
use crate::chain::{BasedComplex, Cell, Chain, ChainDoc, TensorChain};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::ring::Ring;

/// A linear map between based complexes, stored as the image of every
/// basis cell of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMap<R: Ring> {
    images: Vec<Vec<Chain<R>>>,
}

impl<R: Ring> CoalgebraMap<R> {
    /// Builds a map from a closure on basis cells of `domain`.
    pub fn from_fn(domain: &BasedComplex<R>, mut image: impl FnMut(Cell) -> Chain<R>) -> Self {
        let degrees = domain.max_degree().map_or(0, |d| d + 1);
        let images = (0..degrees).map(|d| domain.cells(d).map(&mut image).collect()).collect();
        CoalgebraMap { images }
    }

    pub fn identity(domain: &BasedComplex<R>) -> Self {
        Self::from_fn(domain, Chain::from_cell)
    }

    pub fn image(&self, cell: Cell) -> &Chain<R> {
        &self.images[cell.degree()][cell.index()]
    }

    pub fn set_image(&mut self, cell: Cell, image: Chain<R>) {
        self.images[cell.degree()][cell.index()] = image;
    }

    pub fn apply(&self, chain: &Chain<R>) -> Chain<R> {
        let mut out = Chain::zero();
        for (cell, coeff) in chain.terms() {
            out.add_scaled(self.image(*cell), coeff);
        }
        out
    }

    pub fn apply_tensor(&self, t: &TensorChain<R>) -> TensorChain<R> {
        t.map_factors(|c| self.image(c).clone(), |c| self.image(c).clone())
    }

    /// `after ∘ self`
    pub fn then(&self, after: &CoalgebraMap<R>) -> CoalgebraMap<R> {
        CoalgebraMap {
            images: self.images.iter().map(|cells| cells.iter().map(|c| after.apply(c)).collect()).collect(),
        }
    }

    /// Whether the map has an image for every basis cell of `domain`.
    pub fn fits(&self, domain: &BasedComplex<R>) -> bool {
        domain.all_cells().all(|c| self.images.get(c.degree()).is_some_and(|v| c.index() < v.len()))
            && self.images.iter().enumerate().all(|(d, v)| v.len() == domain.rank(d))
    }

    pub fn to_doc(&self, domain: &BasedComplex<R>, codomain: &BasedComplex<R>) -> CoalgebraMapDoc {
        CoalgebraMapDoc {
            images: domain
                .all_cells()
                .map(|c| (domain.name(c).to_string(), codomain.chain_to_doc(self.image(c))))
                .collect(),
        }
    }

    pub fn from_doc(doc: &CoalgebraMapDoc, domain: &BasedComplex<R>, codomain: &BasedComplex<R>) -> Result<Self> {
        for name in doc.images.keys() {
            domain.require(name)?;
        }
        let mut missing = None;
        let mut parsed = Vec::new();
        for cell in domain.all_cells() {
            match doc.images.get(domain.name(cell)) {
                Some(chain) => parsed.push(codomain.chain_from_doc(chain)?),
                None => {
                    missing.get_or_insert_with(|| domain.name(cell).to_string());
                    parsed.push(Chain::zero());
                }
            }
        }
        if let Some(name) = missing {
            return Err(Error::Parse(format!("map has no image for `{name}`")));
        }
        let mut parsed = parsed.into_iter();
        Ok(Self::from_fn(domain, |_| parsed.next().expect("one image per cell")))
    }
}

/// JSON form: `{ "images": { "cell": chain, ... } }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoalgebraMapDoc {
    pub images: BTreeMap<String, ChainDoc>,
}

/// Checks that `f` is an augmented chain map commuting with every `Δ_k`,
/// `k ≤ kmax`.
pub fn validate_coalgebra_map<R: Ring>(
    f: &CoalgebraMap<R>,
    domain: &impl Coalgebra<R>,
    codomain: &impl Coalgebra<R>,
    kmax: usize,
) -> Report {
    let dom = domain.complex();
    let cod = codomain.complex();
    let mut report = Report::new();
    if !f.fits(dom) {
        report.push(Violation::new("shape: map does not assign an image to exactly the domain basis"));
        return report;
    }
    for cell in dom.all_cells() {
        let name = dom.name(cell);
        let image = f.image(cell);
        if !image.cells().all(|c| cod.contains(c)) {
            report.push(Violation::new("image outside the codomain basis").cell(name));
            continue;
        }
        if !image.is_homogeneous_of(cell.degree()) {
            report.push(Violation::new("degree not preserved").cell(name).sides(cod.format_chain(image), format!("degree {}", cell.degree())));
            continue;
        }

        let lhs = cod.boundary(image).expect("checked cells");
        let rhs = f.apply(dom.boundary_of(cell));
        if lhs != rhs {
            report.push(Violation::new("chain map: ∂f = f∂").cell(name).sides(cod.format_chain(&lhs), cod.format_chain(&rhs)));
        }

        let eps_image = cod.augment(image).expect("checked cells");
        let eps = dom.augment_cell(cell);
        if eps_image != eps {
            report.push(Violation::new("augmentation: εf = ε").cell(name).sides(eps_image.to_string(), eps.to_string()));
        }

        for k in 0..=kmax {
            let lhs = f.apply_tensor(&domain.delta_cell(cell, k));
            let rhs = codomain.delta(image, k);
            if lhs != rhs {
                report.push(
                    Violation::new("coproduct: (f⊗f)Δ_k = Δ_k f")
                        .cell(name)
                        .k(k)
                        .sides(cod.format_tensor(&lhs), cod.format_tensor(&rhs)),
                );
            }
        }
    }
    report
}
