use num_rational::Rational64;

use crate::error::{invalid, Error, Result};
use crate::graph::{Clutter, Graph};
use crate::limits::Limits;

/// Minimal generators of the symbolic power `I(𝒞)^{(b)}`: the
/// componentwise-minimal `a` with `⟨a, u⟩ ≥ b` for every minimal vertex
/// cover `u`, sorted lexicographically.
pub fn symbolic_power_generators(c: &Clutter, b: u32, limits: &Limits) -> Result<Vec<Vec<u32>>> {
    if b == 0 {
        return Err(invalid("the symbolic power must have b ≥ 1"));
    }
    let n = c.n();
    let covers: Vec<Vec<usize>> = c.blocker(limits)?.edge_lists();
    let size = (b as u64 + 1)
        .checked_pow(n as u32)
        .filter(|&s| s <= limits.max_subsets)
        .ok_or_else(|| {
            Error::ResourceLimit(format!(
                "{}^{n} exponent vectors exceeds cap {}",
                b + 1,
                limits.max_subsets
            ))
        })?;
    let mut feasible: Vec<Vec<u32>> = Vec::new();
    let mut a = vec![0u32; n];
    for _ in 0..size {
        if covers
            .iter()
            .all(|u| u.iter().map(|&v| a[v - 1]).sum::<u32>() >= b)
        {
            feasible.push(a.clone());
        }
        for x in a.iter_mut().rev() {
            if *x < b {
                *x += 1;
                break;
            }
            *x = 0;
        }
    }
    feasible.sort_by_key(|v| v.iter().sum::<u32>());
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for v in feasible {
        if !minimal.iter().any(|m| m.iter().zip(&v).all(|(x, y)| x <= y)) {
            minimal.push(v);
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// Membership in the edge cone `ℝ₊{e_i + e_j : {i,j} ∈ E}` of a connected
/// graph: `a ≥ 0` and `Σ_{N(A)} a_i ≥ Σ_A a_i` for every independent set
/// `A`.
pub fn edge_cone_member(g: &Graph, a: &[Rational64], limits: &Limits) -> Result<bool> {
    if a.len() != g.n() {
        return Err(invalid(format!("vector has length {}, expected {}", a.len(), g.n())));
    }
    if !g.is_connected() {
        return Err(invalid("the edge cone description needs a connected graph"));
    }
    if a.iter().any(|x| *x < Rational64::from_integer(0)) {
        return Ok(false);
    }
    for s in g.independent_sets(limits)? {
        let nb = g.neighbor_set(&s)?;
        let inside: Rational64 = s.iter().map(|v| a[v - 1]).sum();
        let around: Rational64 = nb.iter().map(|v| a[v - 1]).sum();
        if around < inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hall's condition `|A| ≤ |N(A)|` over every independent set of a
/// connected bipartite graph.
pub fn bipartite_has_perfect_matching(g: &Graph, limits: &Limits) -> Result<bool> {
    if !g.is_bipartite() {
        return Err(invalid("the graph is not bipartite"));
    }
    if !g.is_connected() {
        return Err(invalid("the graph is not connected"));
    }
    for s in g.independent_sets(limits)? {
        if g.neighbor_set(&s)?.len() < s.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
