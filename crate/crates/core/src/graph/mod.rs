//! Graphs, clutters and the vertex-set machinery underneath the cover
//! computations.

mod catalog;
mod clutter;
mod io;
mod vertex_set;

pub use catalog::{
    canonical_code, complete, complete_bipartite, cycle, graphs_up_to_isomorphism, path,
    triangle_strip, wheel,
};
pub use clutter::{parallel_labels, Clutter};
pub use io::{parse_clutter_json, parse_graph, parse_graph_json, parse_graph_text, GraphJson};
pub use vertex_set::{VertexSet, MAX_VERTICES};

use crate::error::{invalid, Error, Result};
use crate::limits::Limits;
use vertex_set::full_mask;

/// A simple undirected graph on the vertices `x_1..x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// An induced subgraph relabelled to `1..=k`, remembering the parent labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent label of vertex `i + 1`.
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    /// Edges expressed in the parent graph's labels.
    pub fn parent_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(i, j)| (self.vertices[i - 1], self.vertices[j - 1]))
            .collect()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices; rejects loops, repeated edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "{n} vertices exceeds the supported {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(invalid(format!("edge {{{i},{j}}} is outside 1..={n}")));
            }
            if i == j {
                return Err(invalid(format!("loop at vertex {i}")));
            }
            if adj[i - 1] >> (j - 1) & 1 == 1 {
                return Err(invalid(format!("repeated edge {{{i},{j}}}")));
            }
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let mut m = self.adj[i] & !full_mask(i + 1);
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.n, self.adj[v - 1])
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.mask() & !full_mask(self.n) != 0 || s.ground_size() > self.n {
            return Err(invalid(format!(
                "vertex set {s} is not contained in 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// `N_G(S)`: vertices adjacent to at least one vertex of `s`.
    pub fn neighbor_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mask = s.iter().fold(0u64, |m, v| m | self.adj[v - 1]);
        Ok(VertexSet::from_mask(self.n, mask))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v - 1] & s.mask() == 0)
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        // complement independent
        self.is_independent(&s.complement())
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| (self.adj[v - 1] | 1 << (v - 1)) & s.mask() == s.mask())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// Fails with [`Error::IsolatedVertex`] naming the first isolated vertex.
    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertices().first() {
            Some(&v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// The maximal subgraph on `s`, relabelled to `1..=|s|` in increasing
    /// label order. Isolated vertices are kept.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let vertices = s.to_vec();
        let adj = vertices
            .iter()
            .map(|&v| compress(self.adj[v - 1], s.mask()))
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_adjacency(adj),
            vertices,
        })
    }

    /// Induced subgraph without the relabelling bookkeeping; `s` must be
    /// within range.
    pub(crate) fn induced(&self, mask: u64) -> Graph {
        let adj = VertexSet::from_mask(self.n, mask)
            .iter()
            .map(|v| compress(self.adj[v - 1], mask))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// `C(G)`: a new vertex `x_{n+1}` joined to every vertex.
    pub fn cone_over(&self) -> Result<Graph> {
        self.join_vertex(&self.vertices())
    }

    /// Adds vertex `x_{n+1}` adjacent to exactly `neighbors`.
    pub fn join_vertex(&self, neighbors: &VertexSet) -> Result<Graph> {
        self.check_set(neighbors)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(invalid("too many vertices"));
        }
        let mut adj = self.adj.clone();
        for v in neighbors.iter() {
            adj[v - 1] |= 1 << self.n;
        }
        adj.push(neighbors.mask());
        Ok(Graph::from_adjacency(adj))
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n)
            .map(|i| full & !self.adj[i] & !(1 << i))
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn delete_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if !self.has_edge(i, j) {
            return Err(invalid(format!("{{{i},{j}}} is not an edge")));
        }
        let mut adj = self.adj.clone();
        adj[i - 1] &= !(1 << (j - 1));
        adj[j - 1] &= !(1 << (i - 1));
        Ok(Graph::from_adjacency(adj))
    }

    /// The edge clutter of the graph (isolated vertices stay in the ground
    /// set).
    pub fn to_clutter(&self) -> Clutter {
        let edges = self
            .edges()
            .into_iter()
            .map(|(i, j)| VertexSet::from_mask(self.n, 1 << (i - 1) | 1 << (j - 1)))
            .collect();
        Clutter::from_sorted_unchecked(self.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        component_of(&self.adj, 1, full_mask(self.n)) == full_mask(self.n)
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = component_of(&self.adj, 1 << left.trailing_zeros(), left);
            out.push(VertexSet::from_mask(self.n, c));
            left &= !c;
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A proper 2-colouring `(side0, side1)` when one exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                let mut m = self.adj[v];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let side1 = (0..self.n)
            .filter(|&v| color[v] == Some(true))
            .fold(0u64, |m, v| m | 1 << v);
        Some((
            VertexSet::from_mask(self.n, full_mask(self.n) & !side1),
            VertexSet::from_mask(self.n, side1),
        ))
    }

    /// Vertex covering number: size of a smallest vertex cover; 0 for
    /// edgeless graphs.
    pub fn alpha0(&self) -> usize {
        alpha0_mask(&self.adj, full_mask(self.n))
    }

    /// `α₀(⟨S⟩)` for the subgraph induced on `s`, without relabelling.
    pub fn alpha0_on(&self, s: &VertexSet) -> usize {
        alpha0_mask(&self.adj, s.mask() & full_mask(self.n))
    }

    /// All independent sets (including `∅`) in shortlex order.
    pub fn independent_sets(&self, limits: &Limits) -> Result<Vec<VertexSet>> {
        limits.check_subsets(self.n, "independent set enumeration")?;
        let mut out = Vec::new();
        collect_independent(&self.adj, 0, full_mask(self.n), self.n, &mut out);
        out.sort_unstable_by(|&a, &b| vertex_set::shortlex(a, b));
        Ok(out
            .into_iter()
            .map(|m| VertexSet::from_mask(self.n, m))
            .collect())
    }

    /// `α₀(G ∖ x) < α₀(G)` for every vertex `x`.
    pub fn is_vertex_critical(&self) -> bool {
        let a = self.alpha0();
        let full = full_mask(self.n);
        self.n > 0 && (0..self.n).all(|i| alpha0_mask(&self.adj, full & !(1 << i)) < a)
    }

    /// `α₀(G ∖ e) < α₀(G)` for every edge `e`.
    pub fn is_edge_critical(&self) -> bool {
        let a = self.alpha0();
        self.edges()
            .into_iter()
            .all(|(i, j)| self.delete_edge(i, j).map(|h| h.alpha0() < a).unwrap_or(false))
    }
}

/// Packs the bits of `m` selected by `sel` into the low positions.
fn compress(m: u64, sel: u64) -> u64 {
    let mut out = 0u64;
    let mut k = 0;
    let mut s = sel;
    while s != 0 {
        let i = s.trailing_zeros();
        s &= s - 1;
        if m >> i & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
    }
    out
}

fn component_of(adj: &[u64], seed: u64, within: u64) -> u64 {
    let mut seen = seed & within;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & within & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

pub(crate) fn alpha0_mask(adj: &[u64], within: u64) -> usize {
    within.count_ones() as usize - max_independent(adj, within)
}

/// Size of a maximum independent set inside `cand`.
fn max_independent(adj: &[u64], cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    let mut m = cand;
    let mut pivot = 0;
    let mut pivot_deg = 0;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & cand).count_ones();
        // a vertex of degree <= 1 belongs to some maximum independent set
        if d <= 1 {
            return 1 + max_independent(adj, cand & !(1 << v) & !adj[v]);
        }
        if d > pivot_deg {
            pivot_deg = d;
            pivot = v;
        }
    }
    let with = 1 + max_independent(adj, cand & !(1 << pivot) & !adj[pivot]);
    let without = max_independent(adj, cand & !(1 << pivot));
    with.max(without)
}

fn collect_independent(adj: &[u64], chosen: u64, allowed: u64, n: usize, out: &mut Vec<u64>) {
    out.push(chosen);
    // extend only with vertices above the current maximum to avoid repeats
    let start = if chosen == 0 {
        0
    } else {
        64 - chosen.leading_zeros() as usize
    };
    for v in start..n {
        if allowed >> v & 1 == 1 {
            collect_independent(adj, chosen | 1 << v, allowed & !adj[v] & !(1 << v), n, out);
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
