//! Generators of symbolic Rees algebras of edge ideals and cover ideals,
//! and the graph detectors built on them.

mod edge_cone;
mod lifts;
mod shape;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::covers::{classify_irreducible_graph_covers, irreducible_binary_blocker_covers, CoverVector, GeneratorSet};
use crate::error::{Error, Result};
use crate::graph::{Clutter, Graph, VertexSet};
use crate::hilbert::{hilbert_basis, HilbertBasis};
use crate::limits::Limits;
use crate::polyhedra::{cover_cone, simis_cone};

pub use edge_cone::{bipartite_has_perfect_matching, edge_cone_member, symbolic_power_generators};
pub use lifts::{building_lemma_lift, cone_lift_facet, cone_tower, cone_tower_generator};
pub use shape::{classify_shape, is_isomorphic, is_odd_antihole, is_odd_hole, Shape};

/// Where a generator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    HilbertBasis,
    Classification,
    ConeLift,
}

/// Minimal algebra generators `x^a t^b`, each with its provenance tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SraGenerators {
    generators: GeneratorSet,
    tags: Vec<BTreeSet<Provenance>>,
}

impl SraGenerators {
    fn new(generators: GeneratorSet, tag: &[Provenance]) -> Self {
        let tags = vec![tag.iter().copied().collect(); generators.len()];
        SraGenerators { generators, tags }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn provenance(&self, v: &CoverVector) -> Option<&BTreeSet<Provenance>> {
        let i = self.generators.as_slice().binary_search(v).ok()?;
        Some(&self.tags[i])
    }

    /// Tags `v` as predicted by a cone-lift construction; false when `v`
    /// is not a generator.
    pub fn mark_predicted(&mut self, v: &CoverVector) -> bool {
        match self.generators.as_slice().binary_search(v) {
            Ok(i) => {
                self.tags[i].insert(Provenance::ConeLift);
                true
            }
            Err(_) => false,
        }
    }

    /// Generators tagged with `p`.
    pub fn tagged(&self, p: Provenance) -> Vec<&CoverVector> {
        self.generators
            .iter()
            .zip(&self.tags)
            .filter(|(_, t)| t.contains(&p))
            .map(|(v, _)| v)
            .collect()
    }
}

fn basis_to_covers(basis: &HilbertBasis) -> Result<GeneratorSet> {
    let n = basis.dim - 1;
    let mut out = Vec::with_capacity(basis.len());
    for e in &basis.elements {
        if e.iter().any(|&x| x < 0) {
            return Err(Error::Consistency(format!("negative Hilbert basis element {e:?}")));
        }
        let a: Vec<u32> = e[..n].iter().map(|&x| x as u32).collect();
        out.push(CoverVector::new(a, e[n] as u32)?);
    }
    Ok(GeneratorSet::new(out))
}

/// Generators of the symbolic Rees algebra of the edge ideal `I(𝒞)`: the
/// Hilbert basis of the Simis cone, `(a, b) ↦ x^a t^b`.
pub fn sra_edge_ideal(c: &Clutter, limits: &Limits) -> Result<SraGenerators> {
    let basis = hilbert_basis(&simis_cone(c, limits)?, limits)?;
    Ok(SraGenerators::new(basis_to_covers(&basis)?, &[Provenance::HilbertBasis]))
}

/// Generators of the symbolic Rees algebra of the cover ideal `I_c(G)`,
/// computed from the classification of irreducible covers and from the
/// Hilbert basis of the cover cone. The two must agree.
pub fn sra_cover_ideal(g: &Graph, limits: &Limits) -> Result<SraGenerators> {
    g.require_no_isolated()?;
    let (classified, basis) = rayon::join(
        || classify_irreducible_graph_covers(g, limits),
        || -> Result<HilbertBasis> { hilbert_basis(&cover_cone(&g.to_clutter())?, limits) },
    );
    let classified = classified?.generators();
    let from_basis = basis_to_covers(&basis?)?;
    if classified != from_basis {
        return Err(Error::Consistency(format!(
            "cover generators disagree: classification only {:?}, Hilbert basis only {:?}",
            classified.difference(&from_basis).iter().map(|v| v.monomial()).collect::<Vec<_>>(),
            from_basis.difference(&classified).iter().map(|v| v.monomial()).collect::<Vec<_>>(),
        )));
    }
    Ok(SraGenerators::new(
        from_basis,
        &[Provenance::HilbertBasis, Provenance::Classification],
    ))
}

/// True when every generator of the edge ideal's symbolic Rees algebra is
/// a clique monomial `x_S t^{|S|-1}`.
pub fn is_perfect(g: &Graph, limits: &Limits) -> Result<bool> {
    g.require_no_isolated()?;
    let gens = sra_edge_ideal(&g.to_clutter(), limits)?;
    Ok(gens.generators().iter().all(|v| is_clique_generator(g, v)))
}

fn is_clique_generator(g: &Graph, v: &CoverVector) -> bool {
    let s = v.support();
    v.is_binary() && g.is_clique(&s) && v.b as usize + 1 == s.len()
}

/// An irreducible induced subgraph `⟨S⟩` with `|S| ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleSubgraphReport {
    pub vertices: Vec<usize>,
    pub alpha0: usize,
    #[serde(flatten)]
    pub shape: Shape,
    #[serde(skip)]
    pub odd_hole: bool,
    #[serde(skip)]
    pub odd_antihole: bool,
}

/// Irreducible induced subgraphs, read off the binary Hilbert basis
/// elements of the Simis cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleSubgraphs {
    /// Vertices `x_i`, each giving the degree-0 generator.
    pub singletons: Vec<usize>,
    pub subgraphs: Vec<IrreducibleSubgraphReport>,
}

/// The binary generators of `R_s(I(G))` with support of size at least two,
/// as induced subgraphs. Cross-checked against the direct partition search
/// over all induced subgraphs.
pub fn irreducible_induced_subgraphs(g: &Graph, limits: &Limits) -> Result<IrreducibleSubgraphs> {
    g.require_no_isolated()?;
    let gens = sra_edge_ideal(&g.to_clutter(), limits)?;
    let binary = GeneratorSet::new(gens.generators().iter().filter(|v| v.is_binary()).cloned().collect());
    let direct = irreducible_binary_blocker_covers(g, limits)?;
    if binary != direct {
        return Err(Error::Consistency(format!(
            "binary generators disagree with the induced subgraph scan: {:?} vs {:?}",
            binary.difference(&direct).iter().map(|v| v.monomial()).collect::<Vec<_>>(),
            direct.difference(&binary).iter().map(|v| v.monomial()).collect::<Vec<_>>(),
        )));
    }
    let mut singletons = Vec::new();
    let mut subgraphs = Vec::new();
    for v in &binary {
        let s = v.support();
        if s.len() == 1 {
            singletons.extend(s.iter());
            continue;
        }
        let h = g.induced_subgraph(&s)?.graph;
        subgraphs.push(IrreducibleSubgraphReport {
            vertices: s.to_vec(),
            alpha0: h.alpha0(),
            shape: classify_shape(&h),
            odd_hole: is_odd_hole(&h),
            odd_antihole: is_odd_antihole(&h),
        });
    }
    singletons.sort_unstable();
    subgraphs.sort_by(|x, y| {
        VertexSet::from_vertices(g.n(), &x.vertices)
            .ok()
            .cmp(&VertexSet::from_vertices(g.n(), &y.vertices).ok())
    });
    Ok(IrreducibleSubgraphs { singletons, subgraphs })
}

/// Induced odd cycles of length at least five.
pub fn odd_holes(g: &Graph, limits: &Limits) -> Result<Vec<IrreducibleSubgraphReport>> {
    Ok(irreducible_induced_subgraphs(g, limits)?
        .subgraphs
        .into_iter()
        .filter(|r| r.odd_hole)
        .collect())
}

/// Induced complements of odd cycles of length at least five.
pub fn odd_antiholes(g: &Graph, limits: &Limits) -> Result<Vec<IrreducibleSubgraphReport>> {
    Ok(irreducible_induced_subgraphs(g, limits)?
        .subgraphs
        .into_iter()
        .filter(|r| r.odd_antihole)
        .collect())
}

/// Summary of the edge ideal's symbolic Rees algebra of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SraReport {
    pub generators: GeneratorSet,
    pub by_degree: std::collections::BTreeMap<String, usize>,
    pub perfect: bool,
    pub odd_holes: Vec<Vec<usize>>,
    pub odd_antiholes: Vec<Vec<usize>>,
}

pub fn sra_report(g: &Graph, limits: &Limits) -> Result<SraReport> {
    g.require_no_isolated()?;
    let gens = sra_edge_ideal(&g.to_clutter(), limits)?;
    let sub = irreducible_induced_subgraphs(g, limits)?;
    let generators = gens.generators().clone();
    let by_degree = generators
        .by_degree()
        .into_iter()
        .enumerate()
        .filter(|(_, k)| *k > 0)
        .map(|(b, k)| (b.to_string(), k))
        .collect();
    let perfect = generators.iter().all(|v| is_clique_generator(g, v));
    Ok(SraReport {
        generators,
        by_degree,
        perfect,
        odd_holes: sub.subgraphs.iter().filter(|r| r.odd_hole).map(|r| r.vertices.clone()).collect(),
        odd_antiholes: sub
            .subgraphs
            .iter()
            .filter(|r| r.odd_antihole)
            .map(|r| r.vertices.clone())
            .collect(),
    })
}
