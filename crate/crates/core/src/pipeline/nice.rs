//! Width-3 orderings of nice 3-partite graphs.
//!
//! With parts `P_0, P_1, P_2`, orient every pair `x in P_p`, `y in P_{p+1}`
//! (indices mod 3) as `x -> y` when adjacent and `y -> x` otherwise. A
//! shortest directed cycle of such an orientation has length 3 or 4; a
//! 3-cycle is a `K3` or `3P1` transversal and a 4-cycle alternates between
//! two parts along an induced `2P2`. On a nice graph the orientation is
//! therefore acyclic, and in any topological order `x_i x_j` is an edge
//! exactly when `i < j` and the parts of `x_i, x_j` are `(p, p+1)`. Every
//! cut then has at most three distinct rows.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::width::WidthCertificate;

use super::certify;

/// Whether the bipartite graph between `x` and `y` has no induced `2P2`,
/// i.e. the neighbourhoods in `y` of the vertices of `x` form a chain.
pub(crate) fn is_chain_between(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    let mut rows: Vec<VertexSet> = x.iter().map(|v| g.neighbors(v).intersection(y)).collect();
    rows.sort_by_key(|r| r.len());
    rows.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// Checks that `parts` partition the vertices into independent sets and
/// that conditions (a) no transversal `K3` or `3P1` and (b) each pair of
/// parts `2P2`-free hold.
pub fn check_nice(g: &Graph, parts: &[VertexSet; 3]) -> Result<()> {
    let mut union = VertexSet::empty();
    for p in parts {
        g.check_set(p)?;
        if p.intersects(&union) {
            return Err(Error::OverlappingSets);
        }
        union = union.union(p);
        if !g.is_independent(p) {
            return Err(Error::precondition("a part is not independent"));
        }
    }
    if union != g.vertices() {
        return Err(Error::precondition("parts do not cover the vertex set"));
    }
    for i in 0..3 {
        let (x, y) = (&parts[i], &parts[(i + 1) % 3]);
        if !is_chain_between(g, x, y) {
            return Err(Error::precondition(format!(
                "parts {i} and {} contain an induced 2P2",
                (i + 1) % 3
            )));
        }
    }
    for a in parts[0].iter() {
        let na = g.neighbors(a);
        for b in parts[1].iter() {
            let ab = na.contains(b);
            let nb = g.neighbors(b);
            for c in parts[2].iter() {
                let ac = na.contains(c);
                let bc = nb.contains(c);
                if ab == ac && ac == bc {
                    return Err(Error::precondition(format!(
                        "{a}, {b}, {c} induce a {}",
                        if ab { "K3" } else { "3P1" }
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A certificate of width at most 3 for a nice 3-partite graph.
///
/// The ordering is the topological order of the orientation above that
/// always takes the smallest available vertex.
pub fn nice_3partite_ordering(
    g: &Graph,
    v1: &VertexSet,
    v2: &VertexSet,
    v3: &VertexSet,
) -> Result<WidthCertificate> {
    let parts = [*v1, *v2, *v3];
    check_nice(g, &parts)?;
    let n = g.n();
    let mut part = vec![0; n];
    for (p, set) in parts.iter().enumerate() {
        for v in set.iter() {
            part[v] = p;
        }
    }
    let mut out = vec![VertexSet::empty(); n];
    let mut indegree = vec![0usize; n];
    for x in 0..n {
        for y in parts[(part[x] + 1) % 3].iter() {
            let (from, to) = if g.has_edge(x, y) { (x, y) } else { (y, x) };
            out[from].insert(to);
            indegree[to] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut ordering = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        ordering.push(v);
        for w in out[v].iter() {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    if ordering.len() != n {
        return Err(Error::structure(
            "orientation of a nice graph has a directed cycle",
        ));
    }
    certify(g, &ordering, 3, "nice 3-partite ordering")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random::rng;
    use crate::width::exact_lrw;
    use rand::Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn rejects_transversals() {
        let empty = Graph::empty(3);
        let parts = [set(&[0]), set(&[1]), set(&[2])];
        assert!(check_nice(&empty, &parts).is_err());
        let k3 = crate::constructions::named::complete(3);
        assert!(nice_3partite_ordering(&k3, &parts[0], &parts[1], &parts[2]).is_err());
        let p3 = crate::constructions::named::path(3);
        assert_eq!(
            nice_3partite_ordering(&p3, &parts[0], &parts[1], &parts[2])
                .unwrap()
                .width,
            1
        );
    }

    /// Random 3-partite graphs, kept when nice, against the DP.
    #[test]
    fn random_nice_graphs() {
        let mut r = rng(7);
        let mut kept = 0;
        for _ in 0..4000 {
            let n = r.gen_range(3..=11);
            let mut part = vec![0; n];
            for p in part.iter_mut() {
                *p = r.gen_range(0..3);
            }
            let mut g = Graph::empty(n);
            let dens = r.gen_range(0.2..0.8);
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] && r.gen_bool(dens) {
                        g.set_edge(u, v, true);
                    }
                }
            }
            let parts = [0, 1, 2].map(|p| (0..n).filter(|&v| part[v] == p).collect::<VertexSet>());
            if check_nice(&g, &parts).is_err() {
                continue;
            }
            kept += 1;
            let cert = nice_3partite_ordering(&g, &parts[0], &parts[1], &parts[2]).unwrap();
            assert!(cert.verify(&g) && cert.width <= 3);
            assert!(exact_lrw(&g).unwrap().0 <= cert.width);
        }
        assert!(kept > 50, "{kept}");
    }
}
