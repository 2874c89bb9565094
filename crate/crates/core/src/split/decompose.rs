//! Computing canonical split decompositions.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{merge_bags, Bag, BagKind, Node, SplitDecomposition};

/// One side `X` of a split of a connected graph, if the graph has one.
///
/// Pendant vertices and twin pairs give splits directly. Otherwise every
/// split `(X, Y)` is oriented so that vertex 0 lies in `X`, and searched for
/// from a seed `a ∈ X` adjacent to `y0 ∈ Y` plus a second vertex `b ∈ X`.
pub fn find_split(h: &Graph) -> Option<VertexSet> {
    let n = h.n();
    if n < 4 || !h.is_connected() {
        return None;
    }
    for v in 0..n {
        if h.degree(v) == 1 {
            let u = h.neighbors(v).first().unwrap();
            return Some([u, v].iter().collect());
        }
    }
    for v in 0..n {
        for w in v + 1..n {
            if h.are_twins(v, w) {
                return Some([v, w].iter().collect());
            }
        }
    }
    let r = 0;
    for y0 in h.neighbors(r).iter() {
        for b in (0..n).filter(|&b| b != r && b != y0) {
            if let Some(x) = grow_split(h, r, y0, b) {
                return Some(x);
            }
        }
    }
    for a in 1..n {
        for y0 in h.neighbors(a).iter().filter(|&y| y != r) {
            if let Some(x) = grow_split(h, a, y0, r) {
                return Some(x);
            }
        }
    }
    None
}

/// Smallest `X ⊇ {a, b}` with `y0 ∉ X` such that `(X, V - X)` could be a
/// split where `a` and `y0` are on the frontier.
///
/// A vertex of `X` not adjacent to `y0` has all neighbours in `X`; one
/// adjacent to `y0` has the same neighbours outside `X` as `a`.
fn grow_split(h: &Graph, a: usize, y0: usize, b: usize) -> Option<VertexSet> {
    let na = h.neighbors(a);
    let mut x: VertexSet = [a, b].iter().collect();
    let mut stack = vec![a, b];
    while let Some(v) = stack.pop() {
        let nv = h.neighbors(v);
        let forced = if nv.contains(y0) {
            nv.symmetric_difference(&na).without(a).without(v)
        } else {
            nv
        };
        let new = forced.difference(&x);
        if new.contains(y0) {
            return None;
        }
        for w in new.iter() {
            stack.push(w);
        }
        x = x.union(&new);
    }
    if h.n() - x.len() < 2 {
        return None;
    }
    debug_assert!(is_split(h, &x));
    Some(x)
}

/// Whether `(x, V - x)` is a split.
pub(crate) fn is_split(h: &Graph, x: &VertexSet) -> bool {
    let y = h.vertices().difference(x);
    if x.len() < 2 || y.len() < 2 {
        return false;
    }
    let x1: VertexSet = x
        .iter()
        .filter(|&v| h.neighbors(v).intersects(&y))
        .collect();
    let y1: VertexSet = y.iter().filter(|&v| h.neighbors(v).intersects(x)).collect();
    x1.iter().all(|v| h.neighbors(v).intersection(&y) == y1)
}

/// Replaces a bag by its simple decomposition along the split `(x, V - x)`.
fn split_bag(bag: &Bag, x: &VertexSet, next_marker: usize) -> (Bag, Bag) {
    let h = &bag.graph;
    let y = h.vertices().difference(x);
    let side = |s: &VertexSet, other: &VertexSet, id: usize| -> Bag {
        let frontier: VertexSet = s
            .iter()
            .filter(|&v| h.neighbors(v).intersects(other))
            .collect();
        let (sub, map) = h.induced_mapped(s);
        let k = sub.n();
        let mut edges = sub.edges();
        edges.extend(frontier.iter().map(|v| (map.old_to_new[v].unwrap(), k)));
        let g = Graph::from_edges(k + 1, &edges).expect("bag fits");
        let mut nodes: Vec<Node> = map.new_to_old.iter().map(|&v| bag.nodes[v]).collect();
        nodes.push(Node::Marker(id));
        Bag::new(nodes, g)
    };
    (side(x, &y, next_marker), side(&y, x, next_marker + 1))
}

/// The canonical split decomposition of a connected graph.
///
/// A graph on one or two vertices is a single complete bag.
pub fn decompose_canonical(g: &Graph) -> Result<SplitDecomposition> {
    if g.n() == 0 {
        return Err(Error::precondition(
            "the empty graph has no split decomposition",
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let whole = Bag::new((0..g.n()).map(Node::Vertex).collect(), g.clone());
    let mut done: Vec<Bag> = Vec::new();
    let mut todo = vec![whole];
    let mut next_marker = 0;
    while let Some(bag) = todo.pop() {
        let split = match bag.kind {
            BagKind::Prime => find_split(&bag.graph),
            _ => None,
        };
        match split {
            Some(x) => {
                let (bx, by) = split_bag(&bag, &x, next_marker);
                next_marker += 2;
                todo.push(by);
                todo.push(bx);
            }
            None => done.push(bag),
        }
    }
    let mut bags = done;
    // Merge neighbouring degenerate bags until none fit together.
    loop {
        let d = SplitDecomposition::normalized(g.n(), bags)?;
        let Some(pair) = (0..d.marked_edge_count()).find(|&p| mergeable(&d, p)) else {
            debug_assert!(d.is_canonical());
            return Ok(d);
        };
        let (ba, ia) = d.locate_marker(2 * pair);
        let (bb, ib) = d.locate_marker(2 * pair + 1);
        let merged = merge_bags(&d.bags()[ba], ia, &d.bags()[bb], ib);
        bags = d
            .bags()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != bb)
            .map(|(i, b)| if i == ba { merged.clone() } else { b.clone() })
            .collect();
    }
}

fn mergeable(d: &SplitDecomposition, pair: usize) -> bool {
    let (ba, ia) = d.locate_marker(2 * pair);
    let (bb, ib) = d.locate_marker(2 * pair + 1);
    match (d.bags()[ba].kind, d.bags()[bb].kind) {
        (BagKind::Complete, BagKind::Complete) => true,
        (BagKind::Star { center: ca }, BagKind::Star { center: cb }) => (ca == ia) != (cb == ib),
        _ => false,
    }
}

/// Builds the canonical split decomposition of a tree directly: every
/// internal edge `uv` becomes `u - m - m' - v` with `mm'` marked, leaving one
/// star bag per internal vertex.
pub fn tree_canonical_sd(t: &Graph) -> Result<SplitDecomposition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let internal: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
    if internal.is_empty() {
        // K1 or K2.
        return decompose_canonical(t);
    }
    let mut marker_of = std::collections::HashMap::new();
    let mut next = 0;
    for &(u, v) in t.edges().iter() {
        if t.degree(u) >= 2 && t.degree(v) >= 2 {
            marker_of.insert((u, v), next);
            marker_of.insert((v, u), next + 1);
            next += 2;
        }
    }
    let mut bags = Vec::new();
    for &c in &internal {
        let mut nodes = vec![Node::Vertex(c)];
        for w in t.neighbors(c).iter() {
            nodes.push(match marker_of.get(&(c, w)) {
                Some(&id) => Node::Marker(id),
                None => Node::Vertex(w),
            });
        }
        let edges: Vec<(usize, usize)> = (1..nodes.len()).map(|i| (0, i)).collect();
        let g = Graph::from_edges(nodes.len(), &edges)?;
        bags.push(Bag::new(nodes, g));
    }
    SplitDecomposition::normalized(n, bags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Exhaustive split test over all bipartitions.
    fn has_split_brute(h: &Graph) -> bool {
        let n = h.n();
        (1u64..(1 << n) - 1).any(|m| is_split(h, &VertexSet::from_mask(m)))
    }

    #[test]
    fn split_finder_agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut found = [0, 0];
        for _ in 0..400 {
            let n = rng.gen_range(4..=9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.set_edge(u, v, true);
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            let fast = find_split(&g);
            if let Some(x) = fast {
                assert!(is_split(&g, &x));
            }
            assert_eq!(fast.is_some(), has_split_brute(&g), "{g:?}");
            found[fast.is_some() as usize] += 1;
        }
        assert!(found[0] > 0 && found[1] > 0, "{found:?}");
    }

    #[test]
    fn small_examples() {
        let k5 = Graph::empty(5).complement();
        let d = decompose_canonical(&k5).unwrap();
        assert_eq!(d.bags().len(), 1);
        assert_eq!(d.bags()[0].kind, BagKind::Complete);

        let d = decompose_canonical(&cycle(5)).unwrap();
        assert_eq!(d.bags().len(), 1);
        assert_eq!(d.bags()[0].kind, BagKind::Prime);

        let d = decompose_canonical(&path(4)).unwrap();
        assert_eq!(d.bags().len(), 2);
        assert_eq!(d.marked_edge_count(), 1);
        assert!(d
            .bags()
            .iter()
            .all(|b| matches!(b.kind, BagKind::Star { .. })));
        assert_eq!(d.recompose(), path(4));
        assert!(d.is_canonical());

        assert_eq!(
            decompose_canonical(&Graph::empty(1)).unwrap().bags().len(),
            1
        );
        assert_eq!(
            decompose_canonical(&path(2)).unwrap().bags()[0].kind,
            BagKind::Complete
        );
        assert_eq!(
            decompose_canonical(&Graph::empty(2)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn tree_construction_matches() {
        let s222 = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let direct = tree_canonical_sd(&s222).unwrap();
        assert_eq!(direct.bags().len(), 4);
        let computed = decompose_canonical(&s222).unwrap();
        assert!(direct.is_isomorphic_to(&computed).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_canonical_sd(&star).unwrap().bags().len(), 1);
        let d = tree_canonical_sd(&path(4)).unwrap();
        assert!(d
            .is_isomorphic_to(&decompose_canonical(&path(4)).unwrap())
            .unwrap());
    }

    #[test]
    fn json_round_trip() {
        let d = decompose_canonical(&path(6)).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        let back: SplitDecomposition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn classify_shapes() {
        use crate::split::classify;
        assert_eq!(classify(&path(3)), BagKind::Star { center: 1 });
        assert_eq!(classify(&cycle(3)), BagKind::Complete);
        assert_eq!(classify(&cycle(4)), BagKind::Prime);
    }
}
