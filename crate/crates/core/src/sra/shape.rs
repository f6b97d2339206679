use serde::Serialize;

use crate::graph::{complete, cycle, Graph};

/// Shape of an irreducible induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "shape", content = "size", rename_all = "snake_case")]
pub enum Shape {
    Clique(usize),
    OddHole(usize),
    OddAntihole(usize),
    Other,
}

/// Backtracking isomorphism test with a degree-sequence pre-filter.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (1..=n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    extend(g, h, 1, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let n = g.n();
    if v > n {
        return true;
    }
    for w in 1..=n {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if (1..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// `C_m` for odd `m ≥ 5`.
pub fn is_odd_hole(g: &Graph) -> bool {
    let m = g.n();
    m >= 5 && m % 2 == 1 && is_isomorphic(g, &cycle(m))
}

/// The complement of `C_m` for odd `m ≥ 5`.
pub fn is_odd_antihole(g: &Graph) -> bool {
    let m = g.n();
    m >= 5 && m % 2 == 1 && is_isomorphic(g, &cycle(m).complement())
}

/// Cliques first, then odd holes, then odd antiholes; `C_5` is recorded as
/// an odd hole.
pub fn classify_shape(g: &Graph) -> Shape {
    let m = g.n();
    if is_isomorphic(g, &complete(m)) {
        Shape::Clique(m)
    } else if is_odd_hole(g) {
        Shape::OddHole(m)
    } else if is_odd_antihole(g) {
        Shape::OddAntihole(m)
    } else {
        Shape::Other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn isomorphism() {
        let relabelled = Graph::new(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert!(is_isomorphic(&relabelled, &cycle(5)));
        assert!(!is_isomorphic(&path(5), &cycle(5)));
        // same degree sequence, different graphs
        let two_triangles = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!is_isomorphic(&two_triangles, &cycle(6)));
    }

    #[test]
    fn shapes() {
        assert_eq!(classify_shape(&complete(2)), Shape::Clique(2));
        assert_eq!(classify_shape(&cycle(5)), Shape::OddHole(5));
        assert!(is_odd_antihole(&cycle(5)));
        assert_eq!(classify_shape(&cycle(7).complement()), Shape::OddAntihole(7));
        assert_eq!(classify_shape(&cycle(7)), Shape::OddHole(7));
        assert_eq!(classify_shape(&cycle(3)), Shape::Clique(3));
        assert_eq!(classify_shape(&path(4)), Shape::Other);
    }
}
