//! `b`-covers, their irreducibility, and the classification of the
//! irreducible covers of a graph.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Clutter, Graph, VertexSet};
use crate::limits::Limits;

/// A nonzero vector `a ∈ ℕⁿ` with a degree `b`, standing for the monomial
/// `x^a t^b`.
///
/// Ordered by `b` first and then lexicographically on `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCover")]
pub struct CoverVector {
    pub a: Vec<u32>,
    pub b: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    a: Vec<u32>,
    b: u32,
}

impl TryFrom<RawCover> for CoverVector {
    type Error = Error;

    fn try_from(raw: RawCover) -> Result<Self> {
        CoverVector::new(raw.a, raw.b)
    }
}

impl CoverVector {
    /// Rejects the zero vector.
    pub fn new(a: Vec<u32>, b: u32) -> Result<Self> {
        if a.iter().all(|&x| x == 0) {
            return Err(invalid("a cover vector must be nonzero"));
        }
        Ok(CoverVector { a, b })
    }

    /// The unit vector `e_i` (1-based) at degree 0.
    pub fn unit(n: usize, i: usize) -> Self {
        let a = (1..=n).map(|k| u32::from(k == i)).collect();
        CoverVector { a, b: 0 }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// True when every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.a.iter().all(|&x| x <= 1)
    }

    /// The vertices with a positive entry.
    pub fn support(&self) -> VertexSet {
        let mask = self
            .a
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        VertexSet::from_mask(self.a.len(), mask)
    }

    pub fn total_degree(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }

    /// The monomial in the form `x1*x2^2*t^3`.
    pub fn monomial(&self) -> String {
        let mut parts: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| match x {
                1 => format!("x{}", i + 1),
                _ => format!("x{}^{x}", i + 1),
            })
            .collect();
        match self.b {
            0 => {}
            1 => parts.push("t".into()),
            b => parts.push(format!("t^{b}")),
        }
        parts.join("*")
    }
}

impl PartialOrd for CoverVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CoverVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, &self.a).cmp(&(other.b, &other.a))
    }
}

impl fmt::Display for CoverVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial())
    }
}

/// A canonically ordered set of cover vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<CoverVector>")]
pub struct GeneratorSet(Vec<CoverVector>);

impl From<Vec<CoverVector>> for GeneratorSet {
    fn from(v: Vec<CoverVector>) -> Self {
        GeneratorSet::new(v)
    }
}

impl GeneratorSet {
    /// Sorts by `(b, a)` and removes duplicates.
    pub fn new(mut v: Vec<CoverVector>) -> Self {
        v.sort();
        v.dedup();
        GeneratorSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CoverVector> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[CoverVector] {
        &self.0
    }

    pub fn contains(&self, v: &CoverVector) -> bool {
        self.0.binary_search(v).is_ok()
    }

    /// Element counts indexed by degree `b`.
    pub fn by_degree(&self) -> Vec<usize> {
        let top = self.0.iter().map(|v| v.b as usize).max().map_or(0, |b| b + 1);
        let mut out = vec![0; top];
        for v in &self.0 {
            out[v.b as usize] += 1;
        }
        out
    }

    /// Elements of degree `b`.
    pub fn of_degree(&self, b: u32) -> impl Iterator<Item = &CoverVector> + '_ {
        self.0.iter().filter(move |v| v.b == b)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.0.last().map(|v| v.b)
    }

    /// Elements of `self` that are not in `other`.
    pub fn difference(&self, other: &GeneratorSet) -> GeneratorSet {
        GeneratorSet(self.0.iter().filter(|v| !other.contains(v)).cloned().collect())
    }

    pub fn is_subset(&self, other: &GeneratorSet) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a CoverVector;
    type IntoIter = std::slice::Iter<'a, CoverVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// The four shapes of an irreducible cover of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverKind {
    /// `e_i` at degree 0.
    Unit { vertex: usize },
    /// A minimal vertex cover at degree 1.
    MinimalCover { cover: Vec<usize> },
    /// All ones at degree 2 (non-bipartite graphs).
    AllOnes,
    /// 0 on the independent set `A`, 2 on `N(A)`, 1 elsewhere, at degree 2.
    TypeD {
        independent: Vec<usize>,
        neighbors: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedCover {
    pub cover: CoverVector,
    pub kind: CoverKind,
}

/// Irreducible covers of a graph, each tagged with its shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub entries: Vec<ClassifiedCover>,
}

impl Classification {
    pub fn generators(&self) -> GeneratorSet {
        GeneratorSet::new(self.entries.iter().map(|e| e.cover.clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn check_len(c: &Clutter, v: &CoverVector) -> Result<()> {
    if v.a.len() != c.n() {
        return Err(invalid(format!(
            "cover vector has length {}, the clutter has {} vertices",
            v.a.len(),
            c.n()
        )));
    }
    if v.a.iter().all(|&x| x == 0) {
        return Err(invalid("a cover vector must be nonzero"));
    }
    Ok(())
}

/// `min_i ⟨v_i, a⟩` over the edges; the largest `b` for which `a` is a
/// `b`-cover. `u32::MAX` for an edgeless clutter.
pub fn cover_degree(c: &Clutter, a: &[u32]) -> u32 {
    c.edges()
        .iter()
        .map(|e| e.iter().map(|v| a[v - 1]).sum::<u32>())
        .min()
        .unwrap_or(u32::MAX)
}

/// `⟨v_i, a⟩ ≥ b` for every edge.
pub fn is_b_cover(c: &Clutter, v: &CoverVector) -> Result<bool> {
    check_len(c, v)?;
    Ok(cover_degree(c, &v.a) >= v.b)
}

/// True when the `b`-cover `v` is not the sum of an `i`-cover and a
/// `j`-cover with `i + j = b`.
///
/// Summands `c' ≤ a` are scanned in lexicographic order and the search
/// stops at the first decomposition.
pub fn is_irreducible_cover(c: &Clutter, v: &CoverVector) -> Result<bool> {
    if !is_b_cover(c, v)? {
        return Err(invalid(format!("{} is not a {}-cover", v.monomial(), v.b)));
    }
    let a = &v.a;
    let n = a.len();
    let mut part = vec![0u32; n];
    let mut rest = a.clone();
    loop {
        // next c' in lexicographic order (last coordinate fastest)
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if part[i] < a[i] {
                part[i] += 1;
                rest[i] -= 1;
                break;
            }
            rest[i] = a[i];
            part[i] = 0;
        }
        if part == *a {
            continue;
        }
        let d1 = cover_degree(c, &part) as u64;
        let d2 = cover_degree(c, &rest) as u64;
        if d1 + d2 >= v.b as u64 {
            return Ok(false);
        }
    }
}

/// All irreducible covers of a graph without isolated vertices, by shape:
/// unit vectors at degree 0, minimal vertex covers at degree 1, and for a
/// non-bipartite graph the all-ones vector and the vectors built from
/// independent sets at degree 2.
pub fn classify_irreducible_graph_covers(g: &Graph, limits: &Limits) -> Result<Classification> {
    g.require_no_isolated()?;
    if g.n() == 0 {
        return Err(invalid("the graph has no vertices"));
    }
    let n = g.n();
    let mut entries: Vec<ClassifiedCover> = (1..=n)
        .map(|i| ClassifiedCover {
            cover: CoverVector::unit(n, i),
            kind: CoverKind::Unit { vertex: i },
        })
        .collect();
    for cover in g.to_clutter().blocker(limits)?.edges() {
        entries.push(ClassifiedCover {
            cover: CoverVector::new(cover.incidence(), 1)?,
            kind: CoverKind::MinimalCover {
                cover: cover.to_vec(),
            },
        });
    }
    if !g.is_bipartite() {
        entries.push(ClassifiedCover {
            cover: CoverVector::new(vec![1; n], 2)?,
            kind: CoverKind::AllOnes,
        });
        let full = g.vertices();
        let mut seen = std::collections::HashSet::new();
        for a in g.independent_sets(limits)? {
            if a.is_empty() {
                continue;
            }
            let nb = g.neighbor_set(&a)?;
            let closed = a.union(&nb);
            if g.is_vertex_cover(&nb) || closed == full {
                continue;
            }
            let rest = g.induced(full.difference(&closed).mask());
            if !rest.isolated_vertices().is_empty() || rest.is_bipartite() {
                continue;
            }
            let vec: Vec<u32> = (1..=n)
                .map(|v| match (a.contains(v), nb.contains(v)) {
                    (true, _) => 0,
                    (_, true) => 2,
                    _ => 1,
                })
                .collect();
            if !seen.insert(vec.clone()) {
                continue;
            }
            entries.push(ClassifiedCover {
                cover: CoverVector::new(vec, 2)?,
                kind: CoverKind::TypeD {
                    independent: a.to_vec(),
                    neighbors: nb.to_vec(),
                },
            });
        }
    }
    entries.sort_by(|x, y| x.cover.cmp(&y.cover));
    Ok(Classification { entries })
}

/// True when no partition `V = V₁ ⊎ V₂` into nonempty parts has
/// `α₀(G) = α₀(⟨V₁⟩) + α₀(⟨V₂⟩)`.
///
/// A single vertex is irreducible; an edgeless graph on two or more
/// vertices, and the empty graph, are not.
pub fn is_irreducible_graph(g: &Graph) -> bool {
    let n = g.n();
    match n {
        0 => return false,
        1 => return true,
        _ => {}
    }
    if g.edge_count() == 0 || !g.is_connected() {
        return false;
    }
    let total = g.alpha0();
    let full = VertexSet::full(n).mask();
    // V₁ always holds vertex 1, V₂ is nonempty
    let rest = full & !1;
    let parts = 1u64 << (n - 1);
    !(0..parts - 1).into_par_iter().any(|bits| {
        let v1 = 1 | deposit(bits, rest);
        let v2 = full & !v1;
        g.alpha0_on(&VertexSet::from_mask(n, v1)) + g.alpha0_on(&VertexSet::from_mask(n, v2)) == total
    })
}

/// Spreads the low bits of `bits` over the set bits of `mask`.
fn deposit(bits: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if bits >> k & 1 == 1 {
            out |= low;
        }
        m &= m - 1;
        k += 1;
    }
    out
}

/// The only degree at which the incidence vector of `s` can be an
/// irreducible cover of the blocker: `α₀(⟨s⟩)`.
pub fn binary_cover_degree(g: &Graph, s: &VertexSet) -> Result<u32> {
    if s.is_empty() {
        return Err(invalid("the vertex set must be nonempty"));
    }
    if s.ground_size() != g.n() {
        return Err(invalid("vertex set and graph have different ground sets"));
    }
    Ok(g.alpha0_on(s) as u32)
}

/// All binary irreducible covers of the blocker of `g`: singletons at
/// degree 0 and the vertex sets of irreducible induced subgraphs `H` at
/// degree `α₀(H)`.
pub fn irreducible_binary_blocker_covers(g: &Graph, limits: &Limits) -> Result<GeneratorSet> {
    g.require_no_isolated()?;
    let n = g.n();
    limits.check_subsets(n, "induced subgraph scan")?;
    let out: Vec<CoverVector> = (1..1u64 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let s = VertexSet::from_mask(n, mask);
            let b = if s.len() == 1 {
                0
            } else if is_irreducible_graph(&g.induced(mask)) {
                g.alpha0_on(&s) as u32
            } else {
                return None;
            };
            Some(CoverVector { a: s.incidence(), b })
        })
        .collect();
    Ok(GeneratorSet::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, triangle_strip};

    fn cv(a: &[u32], b: u32) -> CoverVector {
        CoverVector::new(a.to_vec(), b).unwrap()
    }

    #[test]
    fn b_covers() {
        let c5 = cycle(5).to_clutter();
        assert!(is_b_cover(&c5, &cv(&[1; 5], 2)).unwrap());
        let strip = triangle_strip(4).to_clutter();
        assert!(is_b_cover(&strip, &cv(&[1, 1, 2, 0, 2, 1, 1, 1, 1], 2)).unwrap());
        let edge = Clutter::new(2, &[vec![1, 2]]).unwrap();
        assert!(!is_b_cover(&edge, &cv(&[1, 0], 2)).unwrap());
        assert!(CoverVector::new(vec![0, 0], 0).is_err());
        assert!(is_b_cover(&edge, &CoverVector { a: vec![0, 0], b: 0 }).is_err());
    }

    #[test]
    fn irreducible_covers() {
        let c4 = cycle(4).to_clutter();
        assert!(!is_irreducible_cover(&c4, &cv(&[1; 4], 2)).unwrap());
        let c5 = cycle(5).to_clutter();
        assert!(is_irreducible_cover(&c5, &cv(&[1; 5], 2)).unwrap());
        assert!(is_irreducible_cover(&c5, &CoverVector::unit(5, 1)).unwrap());
        assert!(!is_irreducible_cover(&c5, &cv(&[1, 1, 0, 0, 0], 0)).unwrap());
        assert!(is_irreducible_cover(&c5, &cv(&[1, 0, 1, 1, 0], 1)).unwrap());
        assert!(!is_irreducible_cover(&c5, &cv(&[1, 1, 1, 1, 0], 1)).unwrap());
        assert!(is_irreducible_cover(&c5, &cv(&[1, 0, 2, 0, 0], 5)).is_err());
    }

    #[test]
    fn classify_small_graphs() {
        let limits = Limits::default();
        let c4 = classify_irreducible_graph_covers(&cycle(4), &limits).unwrap();
        assert_eq!(c4.generators().by_degree(), vec![4, 2]);
        let c5 = classify_irreducible_graph_covers(&cycle(5), &limits).unwrap();
        assert_eq!(c5.len(), 11);
        assert_eq!(c5.generators().by_degree(), vec![5, 5, 1]);
        assert_eq!(c5.entries[10].kind, CoverKind::AllOnes);
        let strip = classify_irreducible_graph_covers(&triangle_strip(4), &limits).unwrap();
        let target = cv(&[1, 1, 2, 0, 2, 1, 1, 1, 1], 2);
        let hit = strip.entries.iter().find(|e| e.cover == target).unwrap();
        assert_eq!(
            hit.kind,
            CoverKind::TypeD {
                independent: vec![4],
                neighbors: vec![3, 5]
            }
        );
        let mut g = cycle(5);
        g = g.join_vertex(&VertexSet::empty(5)).unwrap();
        assert!(matches!(
            classify_irreducible_graph_covers(&g, &limits),
            Err(Error::IsolatedVertex(6))
        ));
    }

    #[test]
    fn classification_outputs_are_irreducible() {
        let g = triangle_strip(4);
        let c = g.to_clutter();
        for e in classify_irreducible_graph_covers(&g, &Limits::default()).unwrap().entries {
            assert!(is_irreducible_cover(&c, &e.cover).unwrap(), "{}", e.cover);
        }
    }

    #[test]
    fn irreducible_graphs() {
        assert!(is_irreducible_graph(&cycle(5)));
        assert!(!is_irreducible_graph(&path(3)));
        assert!(is_irreducible_graph(&complete(4)));
        assert!(!is_irreducible_graph(&cycle(4)));
        assert!(is_irreducible_graph(&Graph::new(1, &[]).unwrap()));
        assert!(!is_irreducible_graph(&Graph::new(2, &[]).unwrap()));
        assert!(!is_irreducible_graph(&Graph::new(0, &[]).unwrap()));
    }

    #[test]
    fn binary_degrees() {
        let g = cycle(5);
        let s = |v: &[usize]| VertexSet::from_vertices(5, v).unwrap();
        assert_eq!(binary_cover_degree(&g, &VertexSet::full(5)).unwrap(), 3);
        assert_eq!(binary_cover_degree(&g, &s(&[1, 2])).unwrap(), 1);
        assert_eq!(binary_cover_degree(&g, &s(&[3])).unwrap(), 0);
        assert!(binary_cover_degree(&g, &VertexSet::empty(5)).is_err());
    }

    #[test]
    fn binary_blocker_covers() {
        let limits = Limits::default();
        let c5 = irreducible_binary_blocker_covers(&cycle(5), &limits).unwrap();
        assert_eq!(c5.by_degree(), vec![5, 5, 0, 1]);
        let k3 = irreducible_binary_blocker_covers(&complete(3), &limits).unwrap();
        assert_eq!(k3.by_degree(), vec![3, 3, 1]);
        let c4 = irreducible_binary_blocker_covers(&cycle(4), &limits).unwrap();
        assert_eq!(c4.by_degree(), vec![4, 4]);
    }

    #[test]
    fn json_shape() {
        let v = cv(&[1, 0, 2], 2);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"a":[1,0,2],"b":2}"#);
        let set: GeneratorSet = serde_json::from_str(r#"[{"a":[1,1],"b":1},{"a":[1,0],"b":0}]"#).unwrap();
        assert_eq!(set.as_slice()[0], cv(&[1, 0], 0));
        assert!(serde_json::from_str::<CoverVector>(r#"{"a":[0,0],"b":1}"#).is_err());
        assert_eq!(v.monomial(), "x1*x3^2*t^2");
    }
}
