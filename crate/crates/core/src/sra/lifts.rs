use crate::covers::{is_irreducible_graph, CoverVector};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::polyhedra::irreducible_representation;

fn require_facet(g: &Graph, a: &[u32], b: u32, limits: &Limits) -> Result<()> {
    let rep = irreducible_representation(&g.to_clutter().blocker(limits)?)?;
    if !rep.has_facet(a, b) {
        return Err(invalid(format!(
            "({a:?}, -{b}) is not a facet normal of the Rees cone of the cover ideal"
        )));
    }
    Ok(())
}

/// Lifts a facet `(a, -b)` of the Rees cone of `I_c(G)` with every
/// `a_i ≥ 1` to the generator `(a, Σa - b)` of degree `Σa` for the cone
/// over `G`.
pub fn cone_lift_facet(g: &Graph, alpha: &CoverVector, limits: &Limits) -> Result<CoverVector> {
    if alpha.n() != g.n() {
        return Err(invalid(format!(
            "vector has length {}, the graph has {} vertices",
            alpha.n(),
            g.n()
        )));
    }
    if let Some(i) = alpha.a.iter().position(|&x| x == 0) {
        return Err(invalid(format!("entry a_{} is 0, every entry must be at least 1", i + 1)));
    }
    require_facet(g, &alpha.a, alpha.b, limits)?;
    let sum: u32 = alpha.a.iter().sum();
    if sum < alpha.b {
        return Err(invalid("the degree exceeds the entry sum"));
    }
    let mut a = alpha.a.clone();
    a.push(sum - alpha.b);
    CoverVector::new(a, sum)
}

/// The `r`-fold cone `G_r` over `G`; the new apexes are `x_{n+1}..x_{n+r}`.
pub fn cone_tower(g: &Graph, r: usize) -> Result<Graph> {
    let mut h = g.clone();
    for _ in 0..r {
        h = h.cone_over()?;
    }
    Ok(h)
}

/// `(1, …, 1, n-g, …, n-g)` with `r` trailing copies of `n - g`, at degree
/// `n + (r - 1)(n - g)`, over the cone tower `G_r`. Here `g = α₀(G)` and
/// `(1, …, 1, -g)` must be a facet normal of the Rees cone of `I_c(G)`.
pub fn cone_tower_generator(g: &Graph, r: usize, limits: &Limits) -> Result<CoverVector> {
    let n = g.n();
    let alpha = g.alpha0();
    require_facet(g, &vec![1; n], alpha as u32, limits)?;
    let step = (n - alpha) as u32;
    let mut a = vec![1u32; n];
    a.extend(std::iter::repeat_n(step, r));
    let degree = n as i64 + (r as i64 - 1) * step as i64;
    CoverVector::new(a, degree as u32)
}

/// All ones on `H = G + x_{n+1}`, where the new vertex is joined to
/// `neighbors`, at degree `α₀(G) + 1`. Requires `G` irreducible and
/// `α₀(H) = α₀(G) + 1`.
pub fn building_lemma_lift(g: &Graph, neighbors: &VertexSet) -> Result<CoverVector> {
    if !is_irreducible_graph(g) {
        return Err(invalid(
            "hypothesis failed: the all-ones vector is not an irreducible cover of the blocker of G (G is not irreducible)",
        ));
    }
    let h = g.join_vertex(neighbors)?;
    let (ag, ah) = (g.alpha0(), h.alpha0());
    if ah != ag + 1 {
        return Err(invalid(format!(
            "hypothesis failed: the covering number of H is {ah}, expected {}",
            ag + 1
        )));
    }
    CoverVector::new(vec![1; g.n() + 1], ah as u32)
}
