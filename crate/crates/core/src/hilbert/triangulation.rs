//! Placing triangulation of a full-dimensional pointed cone and lattice
//! points of fundamental parallelepipeds.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{dot, make_primitive, rank, scaled_inverse, smith_normal_form, IntVec};

/// A simplicial cone, given by indices into the ray list.
pub(crate) type Simplex = Vec<usize>;

/// Places `rays` in the given order. The rays must span the whole space of
/// dimension `dim` and generate a pointed cone; each returned simplex is a
/// sorted list of `dim` ray indices.
pub(crate) fn placing_triangulation(rays: &[IntVec], order: &[usize], dim: usize) -> Result<Vec<Simplex>> {
    let mut initial: Vec<usize> = Vec::with_capacity(dim);
    let mut chosen: Vec<IntVec> = Vec::with_capacity(dim);
    for &i in order {
        chosen.push(rays[i].clone());
        if rank(&chosen)? == chosen.len() {
            initial.push(i);
            if initial.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    if initial.len() < dim {
        return Err(Error::Consistency("rays do not span the space".into()));
    }
    let mut simplices: Vec<Simplex> = Vec::new();
    // boundary facets keyed by their sorted ray indices, with inward normals
    let mut boundary: HashMap<Vec<usize>, IntVec> = HashMap::new();
    add_simplex(rays, &initial, None, &mut simplices, &mut boundary)?;

    for &p in order {
        if initial.contains(&p) {
            continue;
        }
        let mut visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, n)| dot(n, &rays[p]) < 0)
            .map(|(f, _)| f.clone())
            .collect();
        visible.sort();
        for f in visible {
            boundary.remove(&f);
            let mut s = f.clone();
            s.push(p);
            add_simplex(rays, &s, Some(p), &mut simplices, &mut boundary)?;
        }
    }
    Ok(simplices)
}

/// Records the simplex `s` and toggles its facets through `p` in the
/// boundary map (all of its facets when `p` is `None`).
fn add_simplex(
    rays: &[IntVec],
    s: &[usize],
    p: Option<usize>,
    simplices: &mut Vec<Simplex>,
    boundary: &mut HashMap<Vec<usize>, IntVec>,
) -> Result<()> {
    let cols: Vec<IntVec> = s.iter().map(|&i| rays[i].clone()).collect();
    let (d, rows) = scaled_inverse(&cols)?
        .ok_or_else(|| Error::Consistency("degenerate simplex in triangulation".into()))?;
    for (k, row) in rows.into_iter().enumerate() {
        if p.is_some_and(|p| s[k] == p) {
            continue;
        }
        let mut facet: Vec<usize> = s.iter().copied().filter(|&i| i != s[k]).collect();
        facet.sort_unstable();
        let mut n: IntVec = row.into_iter().map(|x| x * d.signum()).collect();
        make_primitive(&mut n);
        if boundary.remove(&facet).is_none() {
            boundary.insert(facet, n);
        }
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    simplices.push(sorted);
    Ok(())
}

/// Nonzero lattice points of the half-open parallelepiped
/// `{Σ λ_i r_i : 0 ≤ λ_i < 1}` spanned by the linearly independent `cols`.
pub(crate) fn parallelepiped_points(cols: &[IntVec], limits: &Limits) -> Result<Vec<IntVec>> {
    let k = cols.len();
    let (d, adj) = scaled_inverse(cols)?
        .ok_or_else(|| Error::Consistency("singular simplex".into()))?;
    let (det, adj): (i128, Vec<Vec<i128>>) = {
        let s = d.signum() as i128;
        (
            (d as i128).abs(),
            adj.iter()
                .map(|r| r.iter().map(|&x| x as i128 * s).collect())
                .collect(),
        )
    };
    if det as u64 > limits.max_parallelepiped {
        return Err(Error::ResourceLimit(format!(
            "fundamental parallelepiped has {det} lattice points, cap is {}",
            limits.max_parallelepiped
        )));
    }
    if det == 1 {
        return Ok(Vec::new());
    }
    // rows of the matrix whose columns are the rays
    let m_rows: Vec<IntVec> = (0..k).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let snf = smith_normal_form(&m_rows, k)?;
    // coset representatives x = U⁻¹ y with 0 ≤ y_i < s_i; only the factors
    // above one contribute
    let factors: Vec<(i128, Vec<i128>)> = snf
        .diagonal
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .map(|(i, &s)| {
            // adj · (column i of U⁻¹) mod det
            let step: Vec<i128> = adj
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&snf.u_inv)
                        .map(|(&a, ur)| a * ur[i] as i128)
                        .sum::<i128>()
                        .rem_euclid(det)
                })
                .collect();
            (s as i128, step)
        })
        .collect();

    let mut out = Vec::with_capacity(det as usize - 1);
    let mut counter = vec![0i128; factors.len()];
    let mut nu = vec![0i128; k];
    loop {
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == factors.len() {
                return Ok(out);
            }
            counter[pos] += 1;
            for (x, s) in nu.iter_mut().zip(&factors[pos].1) {
                *x = (*x + s) % det;
            }
            if counter[pos] < factors[pos].0 {
                break;
            }
            counter[pos] = 0;
            // the full cycle returned nu to its previous value
            pos += 1;
        }
        let point = (0..k)
            .map(|r| {
                let num: i128 = cols.iter().zip(&nu).map(|(c, &l)| c[r] as i128 * l).sum();
                if num % det != 0 {
                    return Err(Error::Consistency("non-integral parallelepiped point".into()));
                }
                i64::try_from(num / det).map_err(|_| Error::Overflow("parallelepiped point"))
            })
            .collect::<Result<IntVec>>()?;
        out.push(point);
    }
}
