//! Graphs up to isomorphism: exhaustive for small orders, sampled above.

use std::collections::HashSet;

use rand::Rng;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::random::{gnp, rng};

/// Largest order enumerated exhaustively.
pub const EXHAUSTIVE_CAP: usize = 7;

fn check_cap(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::SizeCap {
            what: "exhaustive enumeration",
            size: n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(())
}

/// Adds a vertex `k` with each allowed neighbourhood to every graph of the
/// level, keeping the first graph of each isomorphism class.
fn grow(level: &[Graph], k: usize, allow_isolated: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let start = if allow_isolated { 0 } else { 1 };
    for g in level {
        for mask in start..1u64 << k {
            let mut h = g.disjoint_union(&Graph::empty(1)).expect("fits");
            for v in 0..k {
                if mask >> v & 1 == 1 {
                    h.set_edge(v, k, true);
                }
            }
            if seen.insert(canonical_form(&h)) {
                out.push(h);
            }
        }
    }
    out
}

/// Every graph on `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap(n)?;
    let mut level = vec![Graph::empty(0)];
    for k in 0..n {
        level = grow(&level, k, true);
    }
    Ok(level)
}

/// Every connected graph on `n` vertices, one per isomorphism class.
///
/// A connected graph always has a vertex whose removal keeps it connected,
/// so each class is reached from a connected graph one vertex smaller.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        level = grow(&level, k, false);
    }
    Ok(level)
}

/// Connected graphs on `1..=max_n` vertices, smallest first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

/// Up to `count` pairwise non-isomorphic connected graphs on `n` vertices,
/// sampled from `G(n, p)` with `p` uniform in `[0.2, 0.8]`.
pub fn sample_connected(seed: u64, n: usize, count: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count * 50 {
        if out.len() == count {
            break;
        }
        let p = r.gen_range(0.2..0.8);
        let g = gnp(&mut r, n, p);
        if g.is_connected() && seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts isomorphism classes of labelled graphs directly: a graph is
    /// counted when its edge mask is the smallest over all relabellings.
    fn classes_by_permutation(n: usize, connected_only: bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let index = |u: usize, v: usize| {
            pairs
                .iter()
                .position(|&p| p == (u.min(v), u.max(v)))
                .unwrap()
        };
        let mut perms = vec![vec![]];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=k).map(move |i| {
                        let mut q = p.clone();
                        q.insert(i, k);
                        q
                    })
                })
                .collect();
        }
        let mut count = 0;
        for mask in 0u64..1 << pairs.len() {
            let minimal = perms.iter().all(|p| {
                let mut image = 0u64;
                for (e, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> e & 1 == 1 {
                        image |= 1 << index(p[u], p[v]);
                    }
                }
                image >= mask
            });
            if !minimal {
                continue;
            }
            let edges: Vec<_> = (0..pairs.len())
                .filter(|e| mask >> e & 1 == 1)
                .map(|e| pairs[e])
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !connected_only || g.is_connected() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_permutation_oracle() {
        for n in 1..=5 {
            assert_eq!(
                connected_graphs(n).unwrap().len(),
                classes_by_permutation(n, true)
            );
            assert_eq!(
                all_graphs(n).unwrap().len(),
                classes_by_permutation(n, false)
            );
        }
    }

    #[test]
    fn frozen_counts() {
        let connected: Vec<usize> = (1..=7)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112, 853]);
        let all: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, [1, 1, 2, 4, 11, 34, 156]);
        assert!(connected_graphs(8).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_connected(9, 8, 20);
        assert_eq!(a.len(), 20);
        assert_eq!(a, sample_connected(9, 8, 20));
    }
}
