use super::vertex_set::{full_mask, shortlex};
use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{invalid, Error, Result};
use crate::limits::Limits;

/// A clutter: an antichain of nonempty subsets (edges) of `x_1..x_n`.
///
/// Edges are kept in shortlex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Clutter {
    /// Validates and canonicalises a clutter given by 1-based edge lists.
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "{n} vertices exceeds the supported {MAX_VERTICES}"
            )));
        }
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if e.is_empty() {
                return Err(invalid("clutter edges must be nonempty"));
            }
            let s = VertexSet::from_vertices(n, e)?;
            if s.len() != e.len() {
                return Err(invalid(format!("edge {e:?} repeats a vertex")));
            }
            sets.push(s);
        }
        sets.sort();
        for w in sets.windows(2) {
            if w[0] == w[1] {
                return Err(invalid(format!("duplicate edge {}", w[0])));
            }
        }
        for a in &sets {
            for b in &sets {
                if a != b && a.is_subset(b) {
                    return Err(invalid(format!("edge {a} is contained in edge {b}")));
                }
            }
        }
        Ok(Clutter { n, edges: sets })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort();
        Clutter { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    /// The incidence vectors `v_i`, one per edge.
    pub fn incidence_vectors(&self) -> Vec<Vec<u32>> {
        self.edges.iter().map(|e| e.incidence()).collect()
    }

    /// Reads the clutter back as a graph when every edge has two vertices.
    pub fn as_graph(&self) -> Option<Graph> {
        let mut pairs = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let v = e.to_vec();
            if v.len() != 2 {
                return None;
            }
            pairs.push((v[0], v[1]));
        }
        Graph::new(self.n, &pairs).ok()
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_disjoint(s))
    }

    /// The blocker `Υ(𝒞)`: all minimal vertex covers, in shortlex order.
    ///
    /// Exhaustive include/exclude search over the ground set, pruned when an
    /// edge can no longer be hit or a chosen vertex loses every private
    /// edge.
    pub fn blocker(&self, limits: &Limits) -> Result<Clutter> {
        if self.edges.is_empty() {
            return Err(invalid(
                "the blocker of an edgeless clutter is {∅}, which is not a clutter",
            ));
        }
        limits.check_subsets(self.n, "blocker")?;
        let masks: Vec<u64> = self.edges.iter().map(|e| e.mask()).collect();
        let mut out = Vec::new();
        transversals(&masks, self.n, 0, 0, 0, &mut out);
        out.sort_unstable_by(|&a, &b| shortlex(a, b));
        let edges = out
            .into_iter()
            .map(|m| VertexSet::from_mask(self.n, m))
            .collect();
        Ok(Clutter { n: self.n, edges })
    }

    /// Vertex covering number `α₀`; 0 when there are no edges.
    pub fn alpha0(&self) -> usize {
        let masks: Vec<u64> = self.edges.iter().map(|e| e.mask()).collect();
        let mut best = self.n;
        min_transversal(&masks, 0, 0, &mut best);
        best
    }

    /// The parallelization `𝒞^w`.
    ///
    /// Surviving vertices (`w_i ≥ 1`) are relabelled `1..m` in order; the
    /// `w_i - 1` copies of each are appended as `m+1, m+2, ...` ordered by
    /// (original index, copy number). See [`parallel_labels`].
    pub fn parallelization(&self, w: &[u32]) -> Result<Clutter> {
        if w.len() != self.n {
            return Err(invalid(format!(
                "weight vector has length {}, expected {}",
                w.len(),
                self.n
            )));
        }
        let labels = parallel_labels(w);
        let total = labels.len();
        if total > MAX_VERTICES {
            return Err(invalid(format!(
                "parallelization has {total} vertices, more than {MAX_VERTICES}"
            )));
        }
        // copies[i] = new labels (0-based) standing for x_{i+1}
        let mut copies: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (new, &(orig, _)) in labels.iter().enumerate() {
            copies[orig - 1].push(new);
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let verts = e.to_vec();
            if verts.iter().any(|&v| w[v - 1] == 0) {
                continue;
            }
            // one copy per vertex of e, in every combination
            let mut partial: Vec<u64> = vec![0];
            for &v in &verts {
                let mut next = Vec::with_capacity(partial.len() * copies[v - 1].len());
                for &m in &partial {
                    for &c in &copies[v - 1] {
                        next.push(m | 1 << c);
                    }
                }
                partial = next;
            }
            edges.extend(partial.into_iter().map(|m| VertexSet::from_mask(total, m)));
        }
        Ok(Clutter::from_sorted_unchecked(total, edges))
    }

    /// True when the incidence matrix has no square submatrix of odd order
    /// `r ≥ 3` with exactly two ones in every row and column.
    pub fn is_balanced(&self, limits: &Limits) -> Result<bool> {
        let ones: usize = self.edges.iter().map(|e| e.len()).sum();
        if ones > limits.max_incidence_ones {
            return Err(Error::ResourceLimit(format!(
                "odd-cycle search: incidence matrix has {ones} ones, cap is {}",
                limits.max_incidence_ones
            )));
        }
        let masks: Vec<u64> = self.edges.iter().map(|e| e.mask()).collect();
        for start in 0..self.n {
            let mut search = CycleSearch {
                edges: &masks,
                start,
                vertices: 1 << start,
                used_edges: 0,
                covered: 0,
            };
            if search.extend(start, 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Labels of the vertices of `𝒞^w` as `(original index, copy number)`,
/// copy number 1 being the surviving original.
pub fn parallel_labels(w: &[u32]) -> Vec<(usize, u32)> {
    let mut labels: Vec<(usize, u32)> = w
        .iter()
        .enumerate()
        .filter(|(_, &k)| k >= 1)
        .map(|(i, _)| (i + 1, 1))
        .collect();
    for (i, &k) in w.iter().enumerate() {
        for c in 2..=k {
            labels.push((i + 1, c));
        }
    }
    labels
}

fn transversals(edges: &[u64], n: usize, v: usize, chosen: u64, excluded: u64, out: &mut Vec<u64>) {
    if edges.iter().any(|&e| e & !excluded == 0) {
        return;
    }
    if !every_vertex_has_private_edge(edges, chosen) {
        return;
    }
    if v == n {
        out.push(chosen);
        return;
    }
    // a vertex in no edge never belongs to a minimal cover
    if edges.iter().any(|&e| e >> v & 1 == 1) {
        transversals(edges, n, v + 1, chosen | 1 << v, excluded, out);
    }
    transversals(edges, n, v + 1, chosen, excluded | 1 << v, out);
}

fn every_vertex_has_private_edge(edges: &[u64], chosen: u64) -> bool {
    let mut m = chosen;
    while m != 0 {
        let v = m.trailing_zeros();
        m &= m - 1;
        let bit = 1u64 << v;
        let others = chosen & !bit;
        if !edges.iter().any(|&e| e & bit != 0 && e & others == 0) {
            return false;
        }
    }
    true
}

fn min_transversal(edges: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // branch on the uncovered edge with the fewest vertices
    let pick = edges
        .iter()
        .filter(|&&e| e & chosen == 0)
        .min_by_key(|e| e.count_ones());
    match pick {
        None => *best = size,
        Some(&e) => {
            let mut m = e;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                min_transversal(edges, chosen | 1 << v, size + 1, best);
            }
        }
    }
}

/// Depth-first search for an odd cycle submatrix through `start`, the
/// smallest vertex (row) of the cycle.
struct CycleSearch<'a> {
    edges: &'a [u64],
    start: usize,
    vertices: u64,
    used_edges: u64,
    /// union of the chosen edges
    covered: u64,
}

impl CycleSearch<'_> {
    fn extend(&mut self, current: usize, len: usize) -> bool {
        let allowed_low = full_mask(self.start + 1) & !(1 << self.start);
        for (k, &e) in self.edges.iter().enumerate() {
            if self.used_edges >> k & 1 == 1 || e >> current & 1 == 0 {
                continue;
            }
            // e may meet the chosen rows only in `current` (and `start` when
            // it closes the cycle)
            let touched = e & self.vertices & !(1 << current);
            if touched & !(1 << self.start) != 0 {
                continue;
            }
            if touched != 0 {
                // closes the cycle; rows beyond the two are excluded by
                // construction
                if len >= 3 && len % 2 == 1 && e & self.vertices == 1 << current | 1 << self.start
                {
                    return true;
                }
                continue;
            }
            let mut next = e & !self.vertices & !allowed_low;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                // the new row may not meet earlier chosen edges
                if self.covered >> w & 1 == 1 {
                    continue;
                }
                self.vertices |= 1 << w;
                self.used_edges |= 1 << k;
                let saved = self.covered;
                self.covered |= e;
                let found = self.extend(w, len + 1);
                self.covered = saved;
                self.used_edges &= !(1 << k);
                self.vertices &= !(1 << w);
                if found {
                    return true;
                }
            }
        }
        false
    }
}

impl std::fmt::Debug for Clutter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Clutter(n={}, edges={:?})", self.n, self.edge_lists())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    fn clutter(n: usize, e: &[&[usize]]) -> Clutter {
        Clutter::new(n, &e.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_nested_and_duplicate_edges() {
        assert!(Clutter::new(3, &[vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(Clutter::new(3, &[vec![1, 2], vec![2, 1]]).is_err());
        assert!(Clutter::new(3, &[vec![]]).is_err());
    }

    #[test]
    fn blockers() {
        let l = Limits::default();
        let b = clutter(2, &[&[1, 2]]).blocker(&l).unwrap();
        assert_eq!(b.edge_lists(), vec![vec![1], vec![2]]);
        let b = complete(3).to_clutter().blocker(&l).unwrap();
        assert_eq!(b.edge_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let b = clutter(3, &[&[1, 2], &[2, 3]]).blocker(&l).unwrap();
        assert_eq!(b.edge_lists(), vec![vec![2], vec![1, 3]]);
    }

    #[test]
    fn blocker_respects_cap() {
        let big = cycle(21).to_clutter();
        assert!(matches!(
            big.blocker(&Limits::default()),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn alpha0_of_clutters() {
        assert_eq!(clutter(2, &[&[1, 2]]).alpha0(), 1);
        assert_eq!(cycle(5).to_clutter().alpha0(), 3);
        assert_eq!(Clutter::new(4, &[]).unwrap().alpha0(), 0);
        assert_eq!(clutter(4, &[&[1, 2, 3], &[2, 4], &[3, 4]]).alpha0(), 2);
    }

    #[test]
    fn parallelizations() {
        let k2 = clutter(2, &[&[1, 2]]);
        let k33 = k2.parallelization(&[3, 3]).unwrap();
        assert_eq!(k33.n(), 6);
        assert_eq!(k33.edges().len(), 9);
        let g = k33.as_graph().unwrap();
        assert!(g.is_bipartite());
        assert!((1..=6).all(|v| g.degree(v) == 3));
        assert_eq!(k2.parallelization(&[1, 1]).unwrap(), k2);
        let p = clutter(3, &[&[1, 2], &[2, 3]]);
        let d = p.parallelization(&[1, 0, 1]).unwrap();
        assert_eq!(d.n(), 2);
        assert!(d.edges().is_empty());
        assert!(p.parallelization(&[1, 1]).is_err());
        assert_eq!(
            parallel_labels(&[2, 0, 3]),
            vec![(1, 1), (3, 1), (1, 2), (3, 2), (3, 3)]
        );
    }

    #[test]
    fn balancedness() {
        let l = Limits::default();
        assert!(cycle(4).to_clutter().is_balanced(&l).unwrap());
        assert!(!cycle(5).to_clutter().is_balanced(&l).unwrap());
        assert!(clutter(2, &[&[1, 2]]).is_balanced(&l).unwrap());
        // a triangle hidden inside a clutter with a 3-edge
        let c = clutter(4, &[&[1, 2, 4], &[2, 3], &[1, 3]]);
        assert!(!c.is_balanced(&l).unwrap());
        let tight = Limits {
            max_incidence_ones: 5,
            ..l
        };
        assert!(matches!(
            cycle(5).to_clutter().is_balanced(&tight),
            Err(Error::ResourceLimit(_))
        ));
    }
}
