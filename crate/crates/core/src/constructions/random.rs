//! Seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::split::{Bag, Node, SplitDecomposition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize, p: f64) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffle<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
        .expect("shuffled identity is a permutation")
}

/// Random cograph: recursively a disjoint union or a join of two smaller
/// random cographs.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let k = rng.gen_range(1..n);
    let a = random_cograph(rng, k);
    let b = random_cograph(rng, n - k);
    let mut g = a.disjoint_union(&b).expect("fits");
    if rng.gen_bool(0.5) {
        for u in 0..k {
            for v in k..n {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Bag size `geometric(1/2) + 3`.
fn bag_size<R: Rng>(rng: &mut R) -> usize {
    let mut s = 3;
    while rng.gen_bool(0.5) {
        s += 1;
    }
    s
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Star,
    Complete,
}

struct Growing {
    shape: Shape,
    nodes: Vec<Node>,
}

impl Growing {
    /// Star bags keep their centre at local index 0.
    fn graph(&self) -> Graph {
        let k = self.nodes.len();
        match self.shape {
            Shape::Complete => Graph::empty(k).complement(),
            Shape::Star => {
                let edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
                Graph::from_edges(k, &edges).expect("star fits")
            }
        }
    }
}

/// A random connected distance-hereditary graph on exactly `n` vertices.
///
/// A tree of star and complete bags is grown so that no marked edge can be
/// recomposed, recomposed into a graph, and relabelled at random.
pub fn random_dh(seed: u64, n: usize) -> Graph {
    random_dh_with(&mut rng(seed), n)
}

pub fn random_dh_with<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return Graph::empty(n).complement();
    }
    let pick_shape = |rng: &mut R| {
        if rng.gen_bool(0.5) {
            Shape::Star
        } else {
            Shape::Complete
        }
    };
    let first = bag_size(rng).min(n);
    let mut bags = vec![Growing {
        shape: pick_shape(rng),
        nodes: (0..first).map(Node::Vertex).collect(),
    }];
    let mut next_vertex = first;
    let mut next_marker = 0;
    while next_vertex < n {
        let gain = (bag_size(rng) - 2).min(n - next_vertex);
        let size = gain + 2;
        // Attach at a random unmarked node; its vertex moves into the new bag.
        let slots: Vec<(usize, usize)> = bags
            .iter()
            .enumerate()
            .flat_map(|(b, bag)| {
                bag.nodes
                    .iter()
                    .enumerate()
                    .filter(|(_, node)| !node.is_marker())
                    .map(move |(i, _)| (b, i))
            })
            .collect();
        let (b, i) = *slots.choose(rng).expect("some node is unmarked");
        let Node::Vertex(moved) = bags[b].nodes[i] else {
            unreachable!()
        };
        let host_centre = bags[b].shape == Shape::Star && i == 0;
        let mut shape = pick_shape(rng);
        if bags[b].shape == Shape::Complete {
            shape = Shape::Star;
        }
        bags[b].nodes[i] = Node::Marker(next_marker);
        let mut nodes = vec![Node::Vertex(moved)];
        nodes.extend((0..gain).map(|k| Node::Vertex(next_vertex + k)));
        // A star hanging off a star joins centre to centre or leaf to leaf.
        let at = if shape == Shape::Star && !host_centre {
            rng.gen_range(1..size)
        } else {
            0
        };
        nodes.insert(at, Node::Marker(next_marker + 1));
        next_marker += 2;
        next_vertex += gain;
        bags.push(Growing { shape, nodes });
    }
    let bags: Vec<Bag> = bags
        .iter()
        .map(|g| Bag::new(g.nodes.clone(), g.graph()))
        .collect();
    let d = SplitDecomposition::from_bags(n, bags).expect("grown decomposition is valid");
    debug_assert!(d.is_canonical());
    shuffle(rng, &d.recompose())
}

/// Random connected graph from `G(n, p)` by rejection, giving up after
/// `tries` samples.
pub fn connected_gnp<R: Rng>(rng: &mut R, n: usize, p: f64, tries: usize) -> Option<Graph> {
    (0..tries)
        .map(|_| gnp(rng, n, p))
        .find(|g| g.is_connected())
}

/// A random set of vertices, each kept with probability `p`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::{decompose_canonical, is_distance_hereditary};

    #[test]
    fn random_dh_is_dh_and_stable() {
        for seed in 0..60 {
            let n = 1 + (seed as usize % 16);
            let g = random_dh(seed, n);
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
            assert!(is_distance_hereditary(&g));
            assert_eq!(g, random_dh(seed, n));
        }
    }

    #[test]
    fn random_dh_has_long_bag_paths_sometimes() {
        let longest = (0..40)
            .map(|s| {
                decompose_canonical(&random_dh(s, 16))
                    .unwrap()
                    .longest_bag_path()
                    .len()
            })
            .max()
            .unwrap();
        assert!(longest >= 5, "{longest}");
    }

    #[test]
    fn cographs_are_p4_free() {
        let p4 = crate::constructions::named::path(4);
        let mut r = rng(5);
        for _ in 0..30 {
            let g = random_cograph(&mut r, 8);
            assert!(crate::minors::find_induced(&g, &p4).is_none());
        }
    }
}
