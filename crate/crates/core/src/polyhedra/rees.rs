use serde::Serialize;

use super::dd::{dd_facets, HalfspaceSystem, RayList};
use crate::covers::{CoverVector, GeneratorSet};
use crate::error::{invalid, Error, Result};
use crate::graph::Clutter;
use crate::limits::Limits;
use crate::linalg::IntVec;

fn unit(d: usize, i: usize) -> IntVec {
    (0..d).map(|k| i64::from(k == i)).collect()
}

fn lifted(incidence: &[u32], last: i64) -> IntVec {
    incidence
        .iter()
        .map(|&x| x as i64)
        .chain(std::iter::once(last))
        .collect()
}

/// The Rees cone `ℝ₊(I(𝒞))`: rays `e_1..e_n` and `(v_i, 1)` in dimension
/// `n + 1`.
pub fn rees_cone(c: &Clutter) -> Result<RayList> {
    if c.edges().is_empty() {
        return Err(invalid("the Rees cone needs at least one edge"));
    }
    let d = c.n() + 1;
    let mut rays: Vec<IntVec> = (0..c.n()).map(|i| unit(d, i)).collect();
    rays.extend(c.incidence_vectors().iter().map(|v| lifted(v, 1)));
    RayList::new(d, rays)
}

/// The Simis cone `Cn(I(𝒞))`: coordinate halfspaces and `(u_k, -1)` for
/// every minimal vertex cover `u_k`.
pub fn simis_cone(c: &Clutter, limits: &Limits) -> Result<HalfspaceSystem> {
    let covers = c.blocker(limits)?;
    let d = c.n() + 1;
    let mut normals: Vec<IntVec> = (0..d).map(|i| unit(d, i)).collect();
    normals.extend(covers.incidence_vectors().iter().map(|u| lifted(u, -1)));
    HalfspaceSystem::new(d, normals)
}

/// The cone of covers `{(a, b) ≥ 0 : ⟨v_i, a⟩ ≥ b}` of `𝒞`, i.e. the Simis
/// cone of the ideal of covers, built straight from the edges.
pub fn cover_cone(c: &Clutter) -> Result<HalfspaceSystem> {
    if c.edges().is_empty() {
        return Err(invalid("the cover cone needs at least one edge"));
    }
    let d = c.n() + 1;
    let mut normals: Vec<IntVec> = (0..d).map(|i| unit(d, i)).collect();
    normals.extend(c.incidence_vectors().iter().map(|v| lifted(v, -1)));
    HalfspaceSystem::new(d, normals)
}

/// The irredundant facet description of a Rees cone, split by the last
/// coordinate of each normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReesRepresentation {
    pub n: usize,
    /// Indices `i` (1-based, up to `n + 1`) of the coordinate halfspaces
    /// `H_{e_i}⁺` that are facets.
    pub coordinate: Vec<usize>,
    /// Coordinate halfspaces implied by the others.
    pub dropped_coordinates: Vec<usize>,
    /// Normals `(a, -1)`; `a` is a minimal vertex cover.
    pub cover_normals: Vec<IntVec>,
    /// Normals `(a, -d)` with `d ≥ 2`.
    pub deep_normals: Vec<IntVec>,
}

impl ReesRepresentation {
    /// All facet normals, coordinate ones included, in canonical order.
    pub fn normals(&self) -> Vec<IntVec> {
        let d = self.n + 1;
        let mut all: Vec<IntVec> = self.coordinate.iter().map(|&i| unit(d, i - 1)).collect();
        all.extend(self.cover_normals.iter().cloned());
        all.extend(self.deep_normals.iter().cloned());
        all.sort();
        all
    }

    /// Whether `(a, -b)` is one of the facet normals.
    pub fn has_facet(&self, a: &[u32], b: u32) -> bool {
        let v = lifted(a, -(b as i64));
        match b {
            0 => self.normals().contains(&v),
            1 => self.cover_normals.contains(&v),
            _ => self.deep_normals.contains(&v),
        }
    }
}

/// Facets of `ℝ₊(I(𝒞))` as a [`ReesRepresentation`].
pub fn irreducible_representation(c: &Clutter) -> Result<ReesRepresentation> {
    let n = c.n();
    let facets = dd_facets(&rees_cone(c)?)?;
    let mut coordinate = Vec::new();
    let mut cover_normals = Vec::new();
    let mut deep_normals = Vec::new();
    for v in facets.normals() {
        let last = v[n];
        let head = &v[..n];
        if let Some(i) = unit_index(v) {
            coordinate.push(i + 1);
        } else if last == -1 {
            cover_normals.push(v.clone());
        } else if last <= -2 && head.iter().all(|&x| x >= 0) {
            deep_normals.push(v.clone());
        } else {
            return Err(Error::Consistency(format!(
                "unexpected Rees cone facet normal {v:?}"
            )));
        }
    }
    coordinate.sort_unstable();
    let dropped_coordinates = (1..=n + 1).filter(|i| !coordinate.contains(i)).collect();
    Ok(ReesRepresentation {
        n,
        coordinate,
        dropped_coordinates,
        cover_normals,
        deep_normals,
    })
}

fn unit_index(v: &[i64]) -> Option<usize> {
    let mut idx = None;
    for (i, &x) in v.iter().enumerate() {
        match x {
            0 => {}
            1 if idx.is_none() => idx = Some(i),
            _ => return None,
        }
    }
    idx
}

/// The image of the facet-to-generator map: `(a, -d) ↦ x^a t^d` and
/// `e_i ↦ x_i`; the facet `H_{e_{n+1}}` has no image.
pub fn psi_image(rep: &ReesRepresentation) -> Result<GeneratorSet> {
    let n = rep.n;
    let mut out = Vec::new();
    for &i in &rep.coordinate {
        if i <= n {
            let a = (0..n).map(|k| u32::from(k + 1 == i)).collect();
            out.push(CoverVector::new(a, 0)?);
        }
    }
    for v in rep.cover_normals.iter().chain(&rep.deep_normals) {
        let a = v[..n].iter().map(|&x| x as u32).collect();
        out.push(CoverVector::new(a, (-v[n]) as u32)?);
    }
    Ok(GeneratorSet::new(out))
}
