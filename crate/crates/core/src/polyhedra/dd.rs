//! Double description conversion between rays and facet normals.

use crate::error::{invalid, Error, Result};
use crate::linalg::{dot, dual_directions, make_primitive, primitive_from_wide, rank, IntVec};

/// Generators of a cone: primitive, nonzero, pairwise distinct, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayList {
    dim: usize,
    rays: Vec<IntVec>,
}

/// Intersection of halfspaces `{x : ⟨x, a⟩ ≥ 0}`, primitive normals,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfspaceSystem {
    dim: usize,
    normals: Vec<IntVec>,
    irredundant: bool,
}

fn canonical(dim: usize, mut vs: Vec<IntVec>, what: &str) -> Result<Vec<IntVec>> {
    if dim == 0 {
        return Err(invalid("cones of dimension 0 are not supported"));
    }
    for v in vs.iter_mut() {
        if v.len() != dim {
            return Err(invalid(format!(
                "{what} {v:?} has length {}, expected {dim}",
                v.len()
            )));
        }
        if v.iter().all(|&x| x == 0) {
            return Err(invalid(format!("zero {what}")));
        }
        make_primitive(v);
    }
    vs.sort();
    vs.dedup();
    Ok(vs)
}

impl RayList {
    /// Scales every ray to be primitive, sorts and deduplicates. Zero rays
    /// are rejected.
    pub fn new(dim: usize, rays: Vec<IntVec>) -> Result<Self> {
        Ok(RayList {
            dim,
            rays: canonical(dim, rays, "ray")?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }
}

impl HalfspaceSystem {
    pub fn new(dim: usize, normals: Vec<IntVec>) -> Result<Self> {
        Ok(HalfspaceSystem {
            dim,
            normals: canonical(dim, normals, "normal")?,
            irredundant: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[IntVec] {
        &self.normals
    }

    /// True when produced by [`dd_facets`]: no normal can be dropped.
    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.normals.iter().all(|a| dot(a, x) >= 0)
    }
}

/// Extreme rays of a pointed cone given by halfspaces.
///
/// Constraints are inserted in their canonical order, starting from the
/// simplicial cone of the first `dim` linearly independent ones; a pair of
/// rays on opposite sides of a new constraint is combined only when the
/// two are adjacent (combinatorial test on their tight sets).
pub fn dd_rays(h: &HalfspaceSystem) -> Result<RayList> {
    let dim = h.dim;
    let normals = &h.normals;
    if rank(normals)? < dim {
        return Err(Error::UnsupportedCone(
            "the halfspace system contains a line (rank below the dimension)".into(),
        ));
    }
    let mut initial: Vec<usize> = Vec::with_capacity(dim);
    let mut chosen: Vec<IntVec> = Vec::with_capacity(dim);
    for (i, a) in normals.iter().enumerate() {
        chosen.push(a.clone());
        if rank(&chosen)? == chosen.len() {
            initial.push(i);
            if initial.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    // rays of the simplicial cone: ⟨a_i, x_j⟩ > 0 iff i = j
    let inv_rows = dual_directions(&chosen)?
        .ok_or_else(|| Error::Consistency("initial constraints are singular".into()))?;
    let words = normals.len().div_ceil(64);
    let mut rays: Vec<Ray> = inv_rows
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let mut tight = vec![0u64; words];
            for (k, &i) in initial.iter().enumerate() {
                if k != j {
                    tight[i / 64] |= 1 << (i % 64);
                }
            }
            Ray { v, tight }
        })
        .collect();

    let mut is_initial = vec![false; normals.len()];
    for &i in &initial {
        is_initial[i] = true;
    }
    for (i, a) in normals.iter().enumerate() {
        if is_initial[i] {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if vals.iter().all(|&x| x >= 0) {
            for (r, &x) in rays.iter_mut().zip(&vals) {
                if x == 0 {
                    r.tight[i / 64] |= 1 << (i % 64);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] < 0).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&rays, p, q, dim) {
                    continue;
                }
                let (vp, vq) = (vals[p], -vals[q]);
                let wide: Vec<i128> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(&x, &y)| {
                        vq.checked_mul(x as i128)
                            .and_then(|s| vp.checked_mul(y as i128).and_then(|t| s.checked_add(t)))
                            .ok_or(Error::Overflow("double description"))
                    })
                    .collect::<Result<_>>()?;
                let v = primitive_from_wide(&wide, "double description")?;
                let mut tight: Vec<u64> = rays[p]
                    .tight
                    .iter()
                    .zip(&rays[q].tight)
                    .map(|(x, y)| x & y)
                    .collect();
                tight[i / 64] |= 1 << (i % 64);
                next.push(Ray { v, tight });
            }
        }
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k] >= 0 {
                if vals[k] == 0 {
                    r.tight[i / 64] |= 1 << (i % 64);
                }
                next.push(r);
            }
        }
        rays = next;
    }
    let out: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    if out.is_empty() {
        return Ok(RayList { dim, rays: out });
    }
    RayList::new(dim, out)
}

struct Ray {
    v: IntVec,
    tight: Vec<u64>,
}

fn adjacent(rays: &[Ray], p: usize, q: usize, dim: usize) -> bool {
    let common: Vec<u64> = rays[p]
        .tight
        .iter()
        .zip(&rays[q].tight)
        .map(|(x, y)| x & y)
        .collect();
    let count: u32 = common.iter().map(|w| w.count_ones()).sum();
    if (count as usize) + 2 < dim {
        return false;
    }
    !rays.iter().enumerate().any(|(k, r)| {
        k != p && k != q && common.iter().zip(&r.tight).all(|(c, t)| c & !t == 0)
    })
}

/// Irredundant facet normals of a full-dimensional cone given by rays.
pub fn dd_facets(r: &RayList) -> Result<HalfspaceSystem> {
    if r.rays.is_empty() || rank(&r.rays)? < r.dim {
        return Err(Error::UnsupportedCone(
            "facet enumeration needs a full-dimensional cone".into(),
        ));
    }
    let dual = HalfspaceSystem {
        dim: r.dim,
        normals: r.rays.clone(),
        irredundant: false,
    };
    let facets = dd_rays(&dual)?;
    Ok(HalfspaceSystem {
        dim: r.dim,
        normals: facets.rays,
        irredundant: true,
    })
}

/// True when the cone spanned by `r` contains no line.
pub fn is_pointed(r: &RayList) -> Result<bool> {
    if r.rays.is_empty() {
        return Ok(true);
    }
    // pointed iff the dual cone is full-dimensional; the dual is described
    // by the rays themselves, so test for a line in that description by
    // checking the rank of the dual's extreme rays within the span
    let span = rank(&r.rays)?;
    let proj = crate::hilbert::LatticeProjection::new(r.rays(), r.dim)?;
    let local: Vec<IntVec> = r.rays.iter().map(|v| proj.to_local(v)).collect::<Result<_>>()?;
    let local = RayList::new(span, local)?;
    let f = dd_facets(&local)?;
    Ok(rank(&f.normals)? == span)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: usize, i: usize) -> IntVec {
        (0..d).map(|k| i64::from(k == i)).collect()
    }

    #[test]
    fn orthant_rays() {
        let h = HalfspaceSystem::new(3, (0..3).map(|i| unit(3, i)).collect()).unwrap();
        let r = dd_rays(&h).unwrap();
        assert_eq!(r.rays(), &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn facets_of_small_cone() {
        let r = RayList::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]).unwrap();
        let h = dd_facets(&r).unwrap();
        assert_eq!(
            h.normals(),
            &[vec![0, 0, 1], vec![0, 1, -1], vec![1, 0, -1]]
        );
        assert!(h.is_irredundant());
        assert_eq!(dd_rays(&h).unwrap(), r);
    }

    #[test]
    fn square_pyramid() {
        // a cone over a square: four facets, none redundant
        let r = RayList::new(
            3,
            vec![vec![1, 1, 1], vec![-1, 1, 1], vec![1, -1, 1], vec![-1, -1, 1]],
        )
        .unwrap();
        let h = dd_facets(&r).unwrap();
        assert_eq!(h.normals().len(), 4);
        assert_eq!(dd_rays(&h).unwrap(), r);
    }

    #[test]
    fn redundant_input_rays_are_dropped() {
        let r = RayList::new(2, vec![vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let back = dd_rays(&dd_facets(&r).unwrap()).unwrap();
        assert_eq!(back.rays(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn rejects_lines_and_degenerate_input() {
        let h = HalfspaceSystem::new(2, vec![vec![1, 0]]).unwrap();
        assert!(matches!(dd_rays(&h), Err(Error::UnsupportedCone(_))));
        let r = RayList::new(3, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(matches!(dd_facets(&r), Err(Error::UnsupportedCone(_))));
        assert!(RayList::new(0, vec![]).is_err());
        assert!(RayList::new(2, vec![vec![0, 0]]).is_err());
        let line = RayList::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(!is_pointed(&line).unwrap());
        assert!(is_pointed(&RayList::new(2, vec![vec![1, 0], vec![1, 2]]).unwrap()).unwrap());
    }

    #[test]
    fn infeasible_system_gives_zero_cone() {
        // x ≥ 0, -x ≥ 0, y ≥ 0, -y ≥ 0
        let h = HalfspaceSystem::new(
            2,
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        )
        .unwrap();
        assert!(dd_rays(&h).unwrap().is_empty());
    }
}
