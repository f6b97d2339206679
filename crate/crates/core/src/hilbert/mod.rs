//! Minimal integral Hilbert bases of pointed rational cones.
//!
//! The cone is triangulated by placing its extreme rays; every simplicial
//! piece contributes its rays and the lattice points of its half-open
//! fundamental parallelepiped, and the union is reduced to the minimal
//! basis. Cones that are not full-dimensional are handled in the lattice
//! `ℤ^d ∩ span`.

mod triangulation;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::limits::Limits;
use crate::linalg::{dot, smith_normal_form, IntVec};
use crate::polyhedra::{dd_facets, dd_rays, HalfspaceSystem, RayList};

use triangulation::{parallelepiped_points, placing_triangulation};

/// Coordinates on the lattice `ℤ^d ∩ span(vectors)`.
#[derive(Debug, Clone)]
pub struct LatticeProjection {
    dim: usize,
    rank: usize,
    /// First `rank` rows of a unimodular `U` mapping the span onto the first
    /// `rank` coordinate axes.
    forward: Vec<IntVec>,
    /// Full `U`, used to check that a vector lies in the span.
    full: Vec<IntVec>,
    /// Columns `0..rank` of `U⁻¹`, stored as `d` rows.
    back: Vec<IntVec>,
}

impl LatticeProjection {
    pub fn new(vectors: &[IntVec], dim: usize) -> Result<Self> {
        // matrix with the vectors as columns
        let rows: Vec<IntVec> = (0..dim)
            .map(|r| vectors.iter().map(|v| v[r]).collect())
            .collect();
        let snf = smith_normal_form(&rows, vectors.len())?;
        let rank = snf.rank();
        Ok(LatticeProjection {
            dim,
            rank,
            forward: snf.u[..rank].to_vec(),
            full: snf.u.clone(),
            back: snf.u_inv.iter().map(|r| r[..rank].to_vec()).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Local coordinates of `v`; an error if `v` is off the span.
    pub fn to_local(&self, v: &[i64]) -> Result<IntVec> {
        for row in &self.full[self.rank..] {
            if dot(row, v) != 0 {
                return Err(invalid(format!("{v:?} is not in the linear span of the cone")));
            }
        }
        self.forward
            .iter()
            .map(|row| i64::try_from(dot(row, v)).map_err(|_| Error::Overflow("lattice projection")))
            .collect()
    }

    pub fn to_global(&self, y: &[i64]) -> Result<IntVec> {
        self.back
            .iter()
            .map(|row| i64::try_from(dot(row, y)).map_err(|_| Error::Overflow("lattice projection")))
            .collect()
    }

    /// True when `v` lies in the linear span.
    pub fn in_span(&self, v: &[i64]) -> bool {
        self.full[self.rank..].iter().all(|row| dot(row, v) == 0)
    }
}

/// A cone in either representation.
#[derive(Debug, Clone, Copy)]
pub enum Cone<'a> {
    Halfspaces(&'a HalfspaceSystem),
    Rays(&'a RayList),
}

impl<'a> From<&'a HalfspaceSystem> for Cone<'a> {
    fn from(h: &'a HalfspaceSystem) -> Self {
        Cone::Halfspaces(h)
    }
}

impl<'a> From<&'a RayList> for Cone<'a> {
    fn from(r: &'a RayList) -> Self {
        Cone::Rays(r)
    }
}

/// The minimal Hilbert basis, sorted by last coordinate and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HilbertBasis {
    pub dim: usize,
    pub elements: Vec<IntVec>,
}

impl HilbertBasis {
    fn new(dim: usize, mut elements: Vec<IntVec>) -> Self {
        elements.sort_by(|a, b| (a.last(), a).cmp(&(b.last(), b)));
        HilbertBasis { dim, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.elements.iter().any(|e| e == v)
    }
}

/// A pointed cone in local lattice coordinates.
struct LocalCone {
    proj: LatticeProjection,
    rays: Vec<IntVec>,
    facets: Vec<IntVec>,
    grading: IntVec,
}

impl LocalCone {
    fn from_cone(cone: Cone<'_>) -> Result<Self> {
        let (dim, rays) = match cone {
            Cone::Halfspaces(h) => (h.dim(), dd_rays(h)?.rays().to_vec()),
            Cone::Rays(r) => (r.dim(), r.rays().to_vec()),
        };
        Self::from_rays(dim, &rays)
    }

    fn from_rays(dim: usize, rays: &[IntVec]) -> Result<Self> {
        if rays.is_empty() {
            return Ok(LocalCone {
                proj: LatticeProjection::new(&[], dim)?,
                rays: Vec::new(),
                facets: Vec::new(),
                grading: Vec::new(),
            });
        }
        let proj = LatticeProjection::new(rays, dim)?;
        let k = proj.rank();
        let local: Vec<IntVec> = rays.iter().map(|v| proj.to_local(v)).collect::<Result<_>>()?;
        let local = RayList::new(k, local)?;
        let facets = dd_facets(&local)?.normals().to_vec();
        // a cone with a line has a lower-dimensional dual
        if crate::linalg::rank(&facets)? < k {
            return Err(Error::UnsupportedCone("the cone contains a line".into()));
        }
        let extreme = dd_rays(&HalfspaceSystem::new(k, facets.clone())?)?;
        // canonical order is that of the rays in ambient coordinates
        let mut keyed: Vec<(IntVec, IntVec)> = extreme
            .rays()
            .iter()
            .map(|y| Ok((proj.to_global(y)?, y.clone())))
            .collect::<Result<_>>()?;
        keyed.sort();
        let mut grading = vec![0i64; k];
        for f in &facets {
            for (g, &x) in grading.iter_mut().zip(f) {
                *g = g.checked_add(x).ok_or(Error::Overflow("grading"))?;
            }
        }
        Ok(LocalCone {
            proj,
            rays: keyed.into_iter().map(|(_, y)| y).collect(),
            facets,
            grading,
        })
    }

    fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, x) >= 0)
    }

    fn degree(&self, x: &[i64]) -> i128 {
        dot(&self.grading, x)
    }
}

/// The unique minimal Hilbert basis of a pointed cone.
pub fn hilbert_basis<'a>(cone: impl Into<Cone<'a>>, limits: &Limits) -> Result<HilbertBasis> {
    let cone = cone.into();
    let local = LocalCone::from_cone(cone)?;
    let order: Vec<usize> = (0..local.rays.len()).collect();
    basis_of(&local, dim_of(cone), &order, limits)
}

/// As [`hilbert_basis`], placing the extreme rays (in canonical order) in
/// the permuted order `order`. The result does not depend on it.
pub fn hilbert_basis_with_insertion_order<'a>(
    cone: impl Into<Cone<'a>>,
    order: &[usize],
    limits: &Limits,
) -> Result<HilbertBasis> {
    let cone = cone.into();
    let local = LocalCone::from_cone(cone)?;
    let mut seen = order.to_vec();
    seen.sort_unstable();
    if seen != (0..local.rays.len()).collect::<Vec<_>>() {
        return Err(invalid(format!(
            "insertion order must be a permutation of 0..{}",
            local.rays.len()
        )));
    }
    basis_of(&local, dim_of(cone), order, limits)
}

/// Extreme rays of the cone, in canonical order.
pub fn extreme_rays<'a>(cone: impl Into<Cone<'a>>) -> Result<RayList> {
    let cone = cone.into();
    let local = LocalCone::from_cone(cone)?;
    let rays = local
        .rays
        .iter()
        .map(|y| local.proj.to_global(y))
        .collect::<Result<_>>()?;
    RayList::new(dim_of(cone), rays)
}

fn dim_of(cone: Cone<'_>) -> usize {
    match cone {
        Cone::Halfspaces(h) => h.dim(),
        Cone::Rays(r) => r.dim(),
    }
}

fn basis_of(local: &LocalCone, dim: usize, order: &[usize], limits: &Limits) -> Result<HilbertBasis> {
    if local.rays.is_empty() {
        return Ok(HilbertBasis::new(dim, Vec::new()));
    }
    let k = local.proj.rank();
    let simplices = placing_triangulation(&local.rays, order, k)?;
    let pieces: Vec<Vec<IntVec>> = simplices
        .par_iter()
        .map(|s| {
            let cols: Vec<IntVec> = s.iter().map(|&i| local.rays[i].clone()).collect();
            parallelepiped_points(&cols, limits)
        })
        .collect::<Result<_>>()?;
    let mut candidates: HashSet<IntVec> = local.rays.iter().cloned().collect();
    for piece in pieces {
        candidates.extend(piece);
    }
    let kept = reduce(local, candidates.into_iter().collect());
    let elements = kept
        .iter()
        .map(|y| local.proj.to_global(y))
        .collect::<Result<_>>()?;
    Ok(HilbertBasis::new(dim, elements))
}

/// Keeps the candidates that are not `y + z` with `y` an earlier kept
/// element and `z` a nonzero point of the cone.
fn reduce(local: &LocalCone, mut candidates: Vec<IntVec>) -> Vec<IntVec> {
    candidates.sort_by_cached_key(|x| (local.degree(x), x.clone()));
    let mut kept: Vec<(i128, IntVec)> = Vec::new();
    for x in candidates {
        let dx = local.degree(&x);
        let reducible = kept.iter().any(|(dy, y)| {
            *dy < dx && {
                let diff: IntVec = x.iter().zip(y).map(|(a, b)| a - b).collect();
                local.contains(&diff)
            }
        });
        if !reducible {
            kept.push((dx, x));
        }
    }
    kept.into_iter().map(|(_, x)| x).collect()
}

/// The semigroup generated by a finite set of vectors spanning a pointed
/// cone, with an exact membership test.
pub struct Semigroup {
    cone: LocalCone,
    generators: Vec<IntVec>,
}

impl Semigroup {
    pub fn new(dim: usize, generators: &[IntVec]) -> Result<Self> {
        let nonzero: Vec<IntVec> = generators
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        for g in &nonzero {
            if g.len() != dim {
                return Err(invalid(format!("generator {g:?} has the wrong length")));
            }
        }
        let rays = RayList::new(dim, nonzero.clone())?;
        let cone = LocalCone::from_rays(dim, rays.rays())?;
        let generators = nonzero
            .iter()
            .map(|g| cone.proj.to_local(g))
            .collect::<Result<_>>()?;
        Ok(Semigroup { cone, generators })
    }

    /// True when `p` is a nonnegative integer combination of the
    /// generators. The search descends along the grading, so it
    /// terminates.
    pub fn contains(&self, p: &[i64]) -> Result<bool> {
        if p.len() != self.cone.proj.dim() {
            return Err(invalid("point has the wrong length"));
        }
        if p.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if self.generators.is_empty() || !self.cone.proj.in_span(p) {
            return Ok(false);
        }
        let q = self.cone.proj.to_local(p)?;
        let mut failed = HashSet::new();
        Ok(self.search(&q, &mut failed))
    }

    fn search(&self, p: &[i64], failed: &mut HashSet<IntVec>) -> bool {
        if p.iter().all(|&x| x == 0) {
            return true;
        }
        if !self.cone.contains(p) || failed.contains(p) {
            return false;
        }
        for g in &self.generators {
            let rest: IntVec = p.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.search(&rest, failed) {
                return true;
            }
        }
        failed.insert(p.to_vec());
        false
    }
}

/// Whether `p` lies in the semigroup generated by `basis`.
pub fn in_semigroup(basis: &HilbertBasis, p: &[i64]) -> Result<bool> {
    Semigroup::new(basis.dim, &basis.elements)?.contains(p)
}
