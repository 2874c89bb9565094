//! Strategies and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;

use pivotwidth::{Graph, VertexSet};

/// Integration tests keep no regression files.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Labelled graph number `mask` on `n` vertices, pairs in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|i| mask >> i & 1 == 1).collect();
    graph_from_bits(n, &bits)
}

pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Connected: a random tree (parent of `v` below `v`) plus random extra edges.
pub fn arb_connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo.max(1)..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, mut bits)| {
                for (i, p) in parents.iter().enumerate() {
                    let (u, v) = (p.index(i + 1), i + 1);
                    bits[u * (2 * n - u - 1) / 2 + (v - u - 1)] = true;
                }
                graph_from_bits(n, &bits)
            })
    })
}

pub fn arb_bipartite(hi_side: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    (1..=hi_side, 1..=hi_side).prop_flat_map(|(a, b)| {
        proptest::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
            let mut edges = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    if bits[i * b + j] {
                        edges.push((i, a + j));
                    }
                }
            }
            let g = Graph::from_edges(a + b, &edges).unwrap();
            let left: VertexSet = (0..a).collect();
            let right: VertexSet = (a..a + b).collect();
            (g, left, right)
        })
    })
}

pub fn arb_tree(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo.max(1)..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |parents| {
            let edges: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn subset_of(g: &Graph, mask: u64) -> VertexSet {
    (0..g.n()).filter(|&v| mask >> (v % 64) & 1 == 1).collect()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Rank over GF(2) of the `x` by `V - x` adjacency block, by elimination on
/// plain `u64` rows.
pub fn cutrank_oracle(g: &Graph, x: &[usize]) -> usize {
    let n = g.n();
    let inside: Vec<bool> = (0..n).map(|v| x.contains(&v)).collect();
    let mut rows: Vec<u64> = x
        .iter()
        .map(|&u| {
            (0..n)
                .filter(|&v| !inside[v] && g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();
    let mut rank = 0;
    for bit in 0..n {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
    }
    rank
}

pub fn ordering_width_oracle(g: &Graph, order: &[usize]) -> usize {
    (1..order.len())
        .map(|i| cutrank_oracle(g, &order[..i]))
        .max()
        .unwrap_or(0)
}

/// Linear rank-width by trying every ordering.
pub fn lrw_oracle(g: &Graph) -> usize {
    permutations(g.n())
        .iter()
        .map(|p| ordering_width_oracle(g, p))
        .min()
        .unwrap()
}

/// Vertex separation number by trying every ordering; equals path-width.
pub fn pathwidth_oracle(g: &Graph) -> usize {
    permutations(g.n())
        .iter()
        .map(|p| {
            (1..=p.len())
                .map(|i| {
                    p[..i]
                        .iter()
                        .filter(|&&u| p[i..].iter().any(|&v| g.has_edge(u, v)))
                        .count()
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap()
}

/// Smallest adjacency string over all relabellings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    permutations(n)
        .iter()
        .map(|p| {
            let mut s = Vec::with_capacity(n * n);
            for u in 0..n {
                for v in u + 1..n {
                    s.push(g.has_edge(p[u], p[v]));
                }
            }
            s
        })
        .min()
        .unwrap()
}

/// Whether `h` is an induced subgraph of `g`, by trying every injection.
pub fn induced_oracle(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.n(), h.n());
    if k > n {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if used[v] || (0..i).any(|j| g.has_edge(map[j], v) != h.has_edge(j, i)) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Every labelled graph reachable by pivots, without pruning.
pub fn pivot_orbit(g: &Graph) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![g.clone()];
    let mut out = Vec::new();
    seen.insert(g.clone());
    while let Some(h) = stack.pop() {
        for (u, v) in h.edges() {
            let p = h.pivot(u, v).unwrap();
            if seen.insert(p.clone()) {
                stack.push(p);
            }
        }
        out.push(h);
    }
    out
}

/// Pivot-minor containment: deletions commute with pivots on the surviving
/// vertices, so `h` is a pivot-minor of `g` exactly when some graph of the
/// pivot orbit has `h` as an induced subgraph.
pub fn pivot_minor_oracle(g: &Graph, h: &Graph) -> bool {
    pivot_orbit(g).iter().any(|p| induced_oracle(p, h))
}

pub fn is_bipartite_oracle(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|mask| {
        g.edges()
            .iter()
            .all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
    })
}
