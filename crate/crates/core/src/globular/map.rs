use std::collections::BTreeMap;

use super::set::{Globe, GlobularSet};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};

/// A morphism of globular sets, stored dimension by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlobularMap {
    images: Vec<Vec<usize>>,
}

/// JSON form: one `{ name: name }` object per dimension. Identity cells may
/// be omitted; they are sent to the identity of the image of their face.
pub type GlobularMapDoc = Vec<BTreeMap<String, String>>;

impl GlobularMap {
    pub fn from_images(images: Vec<Vec<usize>>) -> Self {
        GlobularMap { images }
    }

    pub fn identity(x: &GlobularSet) -> Self {
        GlobularMap { images: (0..=x.truncation()).map(|d| (0..x.count(d)).collect()).collect() }
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    pub fn image(&self, x: Globe) -> Globe {
        Globe::new(x.dim, self.images[x.dim][x.index])
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &GlobularMap) -> GlobularMap {
        GlobularMap {
            images: self
                .images
                .iter()
                .enumerate()
                .map(|(d, level)| level.iter().map(|&y| after.images[d][y]).collect())
                .collect(),
        }
    }

    pub fn to_doc(&self, domain: &GlobularSet, codomain: &GlobularSet) -> GlobularMapDoc {
        (0..=domain.truncation())
            .map(|d| {
                domain
                    .cells(d)
                    .map(|x| (domain.name(x).to_string(), codomain.name(self.image(x)).to_string()))
                    .collect()
            })
            .collect()
    }

    pub fn from_doc(doc: &GlobularMapDoc, domain: &GlobularSet, codomain: &GlobularSet) -> Result<Self> {
        if doc.len() != domain.truncation() + 1 {
            return Err(Error::Parse(format!("map lists {} dimensions, the domain has {}", doc.len(), domain.truncation() + 1)));
        }
        let mut images: Vec<Vec<usize>> = Vec::with_capacity(doc.len());
        for (d, level) in doc.iter().enumerate() {
            if let Some(key) = level.keys().find(|k| domain.cell(k).is_none_or(|g| g.dim != d)) {
                return Err(Error::Parse(format!("`{key}` is not a cell of dimension {d} of the domain")));
            }
            let mut row = Vec::with_capacity(domain.count(d));
            for x in domain.cells(d) {
                let image = match level.get(domain.name(x)) {
                    Some(name) => match codomain.cell(name) {
                        Some(g) if g.dim == d => g.index,
                        _ => return Err(Error::Parse(format!("`{name}` is not a cell of dimension {d} of the codomain"))),
                    },
                    None if domain.is_degenerate(x) => {
                        let face = domain.t(x);
                        let below = Globe::new(d - 1, images[d - 1][face.index]);
                        codomain.i(below).index
                    }
                    None => return Err(Error::Parse(format!("no image given for `{}`", domain.name(x)))),
                };
                row.push(image);
            }
            images.push(row);
        }
        Ok(GlobularMap { images })
    }
}

/// Checks that `f` is a morphism `X → Y`: right shape, and commuting with
/// `t`, `s` and `i` in every dimension.
pub fn validate_globular_map(f: &GlobularMap, x: &GlobularSet, y: &GlobularSet) -> Report {
    let mut report = Report::new();
    if x.truncation() != y.truncation() || f.images.len() != x.truncation() + 1 {
        report.push(Violation::new("domain and codomain share the truncation of the map"));
        return report;
    }
    for d in 0..=x.truncation() {
        if f.images[d].len() != x.count(d) || f.images[d].iter().any(|&i| i >= y.count(d)) {
            report.push(Violation::new("map is defined on every cell").k(d));
            return report;
        }
    }
    for c in x.all_cells() {
        let fc = f.image(c);
        if c.dim > 0 {
            if f.image(x.t(c)) != y.t(fc) {
                report.push(Violation::new("F t = t F").cell(x.name(c)).sides(y.name(f.image(x.t(c))), y.name(y.t(fc))));
            }
            if f.image(x.s(c)) != y.s(fc) {
                report.push(Violation::new("F s = s F").cell(x.name(c)).sides(y.name(f.image(x.s(c))), y.name(y.s(fc))));
            }
        }
        if c.dim < x.truncation() && f.image(x.i(c)) != y.i(fc) {
            report.push(Violation::new("F i = i F").cell(x.name(c)).sides(y.name(f.image(x.i(c))), y.name(y.i(fc))));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::globular::{boundary_representable, representable};

    #[test]
    fn identity_is_valid_and_neutral() {
        let x = representable(2, 3).unwrap();
        let id = GlobularMap::identity(&x);
        assert!(validate_globular_map(&id, &x, &x).pass);
        assert_eq!(id.then(&id), id);
    }

    #[test]
    fn boundary_inclusion_json() {
        let x = boundary_representable(0, 1).unwrap();
        let y = representable(1, 1).unwrap();
        let doc: GlobularMapDoc = vec![
            [("s0x", "s0x"), ("t0x", "t0x")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            BTreeMap::new(),
        ];
        let f = GlobularMap::from_doc(&doc, &x, &y).unwrap();
        assert!(validate_globular_map(&f, &x, &y).pass);
        assert_eq!(f.to_doc(&x, &y)[1].get("1(t0x)").map(String::as_str), Some("1(t0x)"));
    }

    #[test]
    fn swapping_endpoints_breaks_commutation() {
        let x = representable(1, 1).unwrap();
        let mut images = GlobularMap::identity(&x).images().to_vec();
        images[0].swap(0, 1);
        let report = validate_globular_map(&GlobularMap::from_images(images), &x, &x);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.cell.as_deref() == Some("x")));
    }
}
