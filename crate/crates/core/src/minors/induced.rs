//! Induced-subgraph search.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Pattern vertices in an order where each one, after the first of its
/// component, has as many already placed neighbours as possible.
fn placement_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::empty();
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    h.neighbors(v).intersection(&placed).len(),
                    h.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

/// An induced copy of `h` in `g`: entry `i` is the vertex of `g` playing the
/// role of vertex `i` of `h`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    let order = placement_order(h);
    let mut image = vec![usize::MAX; h.n()];
    let mut used = VertexSet::empty();
    if extend(g, h, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut candidates = g.vertices().difference(used);
    for &y in &order[..depth] {
        let ny = g.neighbors(image[y]);
        candidates = if h.has_edge(x, y) {
            candidates.intersection(&ny)
        } else {
            candidates.difference(&ny)
        };
    }
    let need = h.degree(x);
    for v in candidates.iter() {
        if g.degree(v) < need {
            continue;
        }
        image[x] = v;
        used.insert(v);
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used.remove(v);
    }
    false
}

/// No induced subgraph of `g` is isomorphic to any of the patterns.
pub fn is_h_free(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|h| find_induced(g, h).is_none())
}
