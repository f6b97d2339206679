//! Brute-force oracles shared by the integration tests. None of them call
//! the library's own enumeration code.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rees_covers::graph::graphs_up_to_isomorphism;
use rees_covers::Graph;

/// Minimal transversals of `edges` (bitmasks over `n` vertices), by
/// scanning every subset.
pub fn brute_blocker(n: usize, edges: &[u64]) -> Vec<u64> {
    let covers: Vec<u64> = (0..1u64 << n)
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .collect();
    covers
        .iter()
        .copied()
        .filter(|&s| !covers.iter().any(|&t| t != s && t & s == t))
        .collect()
}

pub fn graph_edge_masks(g: &Graph) -> Vec<u64> {
    g.edges()
        .into_iter()
        .map(|(i, j)| 1u64 << (i - 1) | 1u64 << (j - 1))
        .collect()
}

/// Smallest vertex cover by subset scan.
pub fn brute_alpha0(n: usize, edges: &[u64]) -> u32 {
    (0..1u64 << n)
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .map(|s| s.count_ones())
        .min()
        .unwrap_or(0)
}

fn degree(edges: &[u64], a: &[u32]) -> u32 {
    edges
        .iter()
        .map(|&e| (0..a.len()).filter(|&i| e >> i & 1 == 1).map(|i| a[i]).sum())
        .min()
        .unwrap_or(u32::MAX)
}

/// Whether `a` is an irreducible `b`-cover of the clutter `edges`: no
/// `0 ≠ c < a` splits `a` into an `i`-cover and a `(b-i)`-cover. Every
/// summand is listed explicitly.
pub fn brute_irreducible(edges: &[u64], a: &[u32], b: u32) -> bool {
    assert!(degree(edges, a) >= b, "not a {b}-cover");
    let mut summands: Vec<Vec<u32>> = vec![vec![]];
    for &x in a {
        summands = summands
            .into_iter()
            .flat_map(|s| {
                (0..=x).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    !summands.iter().any(|c| {
        let zero = c.iter().all(|&x| x == 0);
        let full = c.as_slice() == a;
        let rest: Vec<u32> = a.iter().zip(c).map(|(x, y)| x - y).collect();
        !zero && !full && degree(edges, c) as u64 + degree(edges, &rest) as u64 >= b as u64
    })
}

/// Perfect matching by recursive search on the lowest unmatched vertex.
pub fn brute_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, used: u64) -> bool {
        let n = g.n();
        let Some(v) = (0..n).find(|&i| used >> i & 1 == 0) else {
            return true;
        };
        (v + 1..n).any(|w| used >> w & 1 == 0 && g.has_edge(v + 1, w + 1) && go(g, used | 1 << v | 1 << w))
    }
    go(g, 0)
}

/// Membership of `p` in the monoid generated by `gens`, by dynamic
/// programming over the box below `p`. All vectors are nonnegative.
pub fn brute_monoid_member(gens: &[Vec<i64>], p: &[i64], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if p.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&r) = memo.get(p) {
        return r;
    }
    let r = gens.iter().any(|g| {
        g.iter().any(|&x| x != 0) && g.iter().zip(p).all(|(x, y)| x <= y) && {
            let q: Vec<i64> = p.iter().zip(g).map(|(y, x)| y - x).collect();
            brute_monoid_member(gens, &q, memo)
        }
    });
    memo.insert(p.to_vec(), r);
    r
}

/// Every graph on `n` vertices without isolated vertices, up to
/// isomorphism.
pub fn graphs_without_isolated(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n, |_| true)
        .into_iter()
        .filter(|g| g.isolated_vertices().is_empty())
        .collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n, |_| true)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

pub fn bipartite_graphs_without_isolated(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n, |g| g.is_bipartite())
        .into_iter()
        .filter(|g| g.isolated_vertices().is_empty())
        .collect()
}

/// A random graph with edge probability `p` and no isolated vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.isolated_vertices().is_empty() {
            return g;
        }
    }
}

/// Nonempty cliques, by subset scan.
pub fn brute_clique_count(g: &Graph) -> usize {
    let n = g.n();
    (1..1u64 << n)
        .filter(|&s| {
            (0..n).all(|i| {
                s >> i & 1 == 0 || (i + 1..n).all(|j| s >> j & 1 == 0 || g.has_edge(i + 1, j + 1))
            })
        })
        .count()
}

pub fn as_set<T: std::hash::Hash + Eq + Clone>(v: &[T]) -> HashSet<T> {
    v.iter().cloned().collect()
}
