//! Named graph families and exhaustive generation up to isomorphism.

use std::collections::HashSet;

use super::vertex_set::full_mask;
use super::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).expect("path")
}

/// The cycle `C_n` on `1-2-...-n-1`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::new(n, &edges).expect("cycle")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).expect("complete graph")
}

/// `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in a + 1..=a + b {
            edges.push((i, j));
        }
    }
    Graph::new(a + b, &edges).expect("complete bipartite graph")
}

/// The wheel: a cone over `C_k`, hub `x_{k+1}`.
pub fn wheel(k: usize) -> Graph {
    cycle(k).cone_over().expect("wheel")
}

/// `k` triangles glued along a bottom path `x_1 x_3 ... x_{2k+1}`; the apex
/// of the `i`-th triangle is `x_{2i}`.
///
/// `triangle_strip(4)` is the 9-vertex graph whose cover algebra has a
/// degree-2 generator outside the image of the Rees-cone facets.
pub fn triangle_strip(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        let (l, apex, r) = (2 * i + 1, 2 * i + 2, 2 * i + 3);
        edges.push((l, r));
        edges.push((l, apex));
        edges.push((apex, r));
    }
    Graph::new(2 * k + 1, &edges).expect("triangle strip")
}

/// A labelling-invariant code: two graphs on the same number of vertices
/// are isomorphic exactly when their codes agree.
///
/// Colour refinement orders the vertices into cells; the code is the
/// smallest upper-triangle adjacency string over all orderings that respect
/// the cells.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let adj = g.adjacency();
    let cells = refined_cells(adj, n);
    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut order, &mut |ord| {
        let code = adjacency_code(adj, ord);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn adjacency_code(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut words = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                // most significant first so that Vec comparison is lexicographic
                words[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    words
}

/// Ordered cells of vertices after colour refinement to a stable partition.
fn refined_cells(adj: &[u64], n: usize) -> Vec<Vec<usize>> {
    let mut color: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                c += 1;
            }
            next[sigs[k].2] = c;
        }
        let classes_before = color.iter().collect::<HashSet<_>>().len();
        let classes_after = if n == 0 { 0 } else { c + 1 };
        color = next;
        if classes_after == classes_before {
            break;
        }
    }
    let k = color.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn permute_cells(
    cells: &[Vec<usize>],
    idx: usize,
    order: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == cells.len() {
        visit(order);
        return;
    }
    let mut cell = cells[idx].clone();
    let len = cell.len();
    heap_permutations(&mut cell, len, &mut |perm| {
        let mark = order.len();
        order.extend_from_slice(perm);
        permute_cells(cells, idx + 1, order, visit);
        order.truncate(mark);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices satisfying `keep`.
///
/// `keep` must be hereditary (closed under deleting a vertex): classes are
/// grown one vertex at a time from the survivors of the previous size.
/// Representatives are returned sorted by canonical code.
pub fn graphs_up_to_isomorphism(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut level = vec![Graph::from_adjacency(Vec::new())];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0..=full_mask(size - 1) {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                adj.push(nb);
                let h = Graph::from_adjacency(adj);
                if !keep(&h) {
                    continue;
                }
                let code = canonical_code(&h);
                if seen.insert(code.clone()) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_tables() {
        // graphs up to isomorphism on n vertices: 1, 2, 4, 11, 34, 156
        let counts: Vec<usize> = (1..=6)
            .map(|n| graphs_up_to_isomorphism(n, |_| true).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        // connected ones: 1, 1, 2, 6, 21, 112
        let connected: Vec<usize> = (1..=6)
            .map(|n| {
                graphs_up_to_isomorphism(n, |_| true)
                    .iter()
                    .filter(|g| g.is_connected())
                    .count()
            })
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let a = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let b = Graph::new(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&path(5)));
        // C5 is self-complementary
        assert_eq!(canonical_code(&a), canonical_code(&a.complement()));
    }

    #[test]
    fn named_families() {
        assert_eq!(triangle_strip(4).edge_count(), 12);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(wheel(5).edge_count(), 10);
    }
}
