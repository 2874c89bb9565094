//! Split decompositions as marked graphs.
//!
//! A decomposition is a list of bags. Each bag is a small graph whose nodes
//! are either original vertices or markers. Marker `2i` and marker `2i + 1`
//! are the two ends of marked edge `i`; they always lie in different bags.

mod decompose;
mod recognize;
mod rewrite;

pub use decompose::{decompose_canonical, find_split, tree_canonical_sd};
pub use recognize::{is_distance_hereditary, is_in_class_m, lrw_at_most_1};

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form_colored, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    /// An unmarked node standing for this original vertex.
    Vertex(usize),
    /// One end of a marked edge; its partner is `Marker(id ^ 1)`.
    Marker(usize),
}

impl Node {
    pub fn is_marker(&self) -> bool {
        matches!(self, Node::Marker(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BagKind {
    Prime,
    /// `center` is a local node index.
    Star {
        center: usize,
    },
    Complete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bag {
    pub nodes: Vec<Node>,
    pub graph: Graph,
    pub kind: BagKind,
}

impl Bag {
    pub(crate) fn new(nodes: Vec<Node>, graph: Graph) -> Bag {
        let kind = classify(&graph);
        Bag { nodes, graph, kind }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn markers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().enumerate().filter_map(|(i, n)| match n {
            Node::Marker(id) => Some((i, *id)),
            Node::Vertex(_) => None,
        })
    }

    pub fn marker_count(&self) -> usize {
        self.markers().count()
    }
}

/// Kind of a bag from its shape alone; graphs that are neither stars nor
/// complete are reported as prime.
pub fn classify(g: &Graph) -> BagKind {
    let n = g.n();
    if n <= 2 || g.edge_count() == n * (n - 1) / 2 {
        return BagKind::Complete;
    }
    if g.edge_count() == n - 1 {
        if let Some(c) = (0..n).find(|&v| g.degree(v) == n - 1) {
            return BagKind::Star { center: c };
        }
    }
    BagKind::Prime
}

/// A split decomposition of a connected graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDecomposition", into = "RawDecomposition")]
pub struct SplitDecomposition {
    n: usize,
    bags: Vec<Bag>,
    vertex_at: Vec<(usize, usize)>,
    marker_at: Vec<(usize, usize)>,
}

impl SplitDecomposition {
    /// Validates the marked-graph structure and indexes node locations.
    pub fn from_bags(n: usize, bags: Vec<Bag>) -> Result<SplitDecomposition> {
        let bad = |m: &str| Error::MalformedDecomposition(m.to_string());
        let mut vertex_at = vec![None; n];
        let mut markers: HashMap<usize, (usize, usize)> = HashMap::new();
        for (b, bag) in bags.iter().enumerate() {
            if bag.nodes.len() != bag.graph.n() {
                return Err(bad("bag node list does not match its graph"));
            }
            if !bag.graph.is_connected() || bag.is_empty() {
                return Err(bad("bag is empty or disconnected"));
            }
            for (i, node) in bag.nodes.iter().enumerate() {
                match *node {
                    Node::Vertex(v) => {
                        if v >= n || vertex_at[v].is_some() {
                            return Err(bad("vertex missing or repeated"));
                        }
                        vertex_at[v] = Some((b, i));
                    }
                    Node::Marker(id) => {
                        if markers.insert(id, (b, i)).is_some() {
                            return Err(bad("marker repeated"));
                        }
                    }
                }
            }
        }
        let vertex_at: Vec<(usize, usize)> = vertex_at
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| bad("vertex missing"))?;
        let k = markers.len();
        if k % 2 == 1 || (0..k).any(|id| !markers.contains_key(&id)) {
            return Err(bad("marker ids must be 0..2m"));
        }
        let marker_at: Vec<(usize, usize)> = (0..k).map(|id| markers[&id]).collect();
        for pair in 0..k / 2 {
            if marker_at[2 * pair].0 == marker_at[2 * pair + 1].0 {
                return Err(bad("marked edge inside one bag"));
            }
        }
        let d = SplitDecomposition {
            n,
            bags,
            vertex_at,
            marker_at,
        };
        let tree = d.tree();
        if !tree.is_tree() || d.marked_edge_count() + 1 != d.bags.len() {
            return Err(bad("decomposition tree is not a tree"));
        }
        Ok(d)
    }

    /// Like [`from_bags`](Self::from_bags) but renumbers markers in order of
    /// first appearance and recomputes every bag kind.
    pub(crate) fn normalized(n: usize, mut bags: Vec<Bag>) -> Result<SplitDecomposition> {
        let mut pair_of: HashMap<usize, usize> = HashMap::new();
        let mut seen_even: HashMap<usize, bool> = HashMap::new();
        for bag in bags.iter_mut() {
            for node in bag.nodes.iter_mut() {
                if let Node::Marker(id) = node {
                    let key = *id / 2;
                    let next = pair_of.len();
                    let pair = *pair_of.entry(key).or_insert(next);
                    let first = !seen_even.contains_key(&key);
                    seen_even.insert(key, true);
                    *id = 2 * pair + if first { 0 } else { 1 };
                }
            }
            bag.kind = classify(&bag.graph);
        }
        SplitDecomposition::from_bags(n, bags)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bags(&self) -> &[Bag] {
        &self.bags
    }

    pub fn marked_edge_count(&self) -> usize {
        self.marker_at.len() / 2
    }

    /// Bag and local index of original vertex `v`.
    pub fn locate_vertex(&self, v: usize) -> Option<(usize, usize)> {
        self.vertex_at.get(v).copied()
    }

    pub fn locate_marker(&self, id: usize) -> (usize, usize) {
        self.marker_at[id]
    }

    /// The node across the marked edge from marker `id`.
    pub fn partner(&self, id: usize) -> (usize, usize) {
        self.marker_at[id ^ 1]
    }

    /// For each marked edge, the two bags it joins.
    pub fn marked_edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        (0..self.marked_edge_count())
            .map(|i| (self.marker_at[2 * i], self.marker_at[2 * i + 1]))
            .collect()
    }

    /// The decomposition tree: one vertex per bag, one edge per marked edge.
    pub fn tree(&self) -> Graph {
        let mut t = Graph::empty(self.bags.len());
        for ((a, _), (b, _)) in self.marked_edges() {
            t.set_edge(a, b, true);
        }
        t
    }

    /// Bags on a longest path of the decomposition tree, in path order.
    pub fn longest_bag_path(&self) -> Vec<usize> {
        let t = self.tree();
        let far = |s: usize| -> (usize, Vec<usize>) {
            let mut parent = vec![usize::MAX; t.n()];
            let mut dist = vec![usize::MAX; t.n()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut last = s;
            while let Some(x) = queue.pop_front() {
                if dist[x] > dist[last] || (dist[x] == dist[last] && x < last) {
                    last = x;
                }
                for y in t.neighbors(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            (last, parent)
        };
        let (a, _) = far(0);
        let (b, parent) = far(a);
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    /// Merges the two bags joined by marked edge `pair`.
    pub fn recompose_edge(&self, pair: usize) -> Result<SplitDecomposition> {
        if pair >= self.marked_edge_count() {
            return Err(Error::MalformedDecomposition(format!(
                "no marked edge {pair}"
            )));
        }
        let (ba, ia) = self.marker_at[2 * pair];
        let (bb, ib) = self.marker_at[2 * pair + 1];
        let merged = merge_bags(&self.bags[ba], ia, &self.bags[bb], ib);
        let mut bags = Vec::with_capacity(self.bags.len() - 1);
        for (i, bag) in self.bags.iter().enumerate() {
            if i == ba {
                bags.push(merged.clone());
            } else if i != bb {
                bags.push(bag.clone());
            }
        }
        SplitDecomposition::normalized(self.n, bags)
    }

    /// The graph obtained by recomposing along every marked edge.
    pub fn recompose(&self) -> Graph {
        let mut bags = self.bags.clone();
        let mut at: HashMap<usize, (usize, usize)> = HashMap::new();
        let reindex = |bags: &[Option<Bag>], at: &mut HashMap<usize, (usize, usize)>| {
            at.clear();
            for (b, bag) in bags.iter().enumerate() {
                if let Some(bag) = bag {
                    for (i, id) in bag.markers() {
                        at.insert(id, (b, i));
                    }
                }
            }
        };
        let mut slots: Vec<Option<Bag>> = bags.drain(..).map(Some).collect();
        reindex(&slots, &mut at);
        for pair in 0..self.marked_edge_count() {
            let (ba, ia) = at[&(2 * pair)];
            let (bb, ib) = at[&(2 * pair + 1)];
            let a = slots[ba].take().unwrap();
            let b = slots[bb].take().unwrap();
            slots[ba] = Some(merge_bags(&a, ia, &b, ib));
            reindex(&slots, &mut at);
        }
        let bag = slots.into_iter().flatten().next().expect("one bag remains");
        let mut g = Graph::empty(self.n);
        for (i, j) in bag.graph.edges() {
            match (bag.nodes[i], bag.nodes[j]) {
                (Node::Vertex(u), Node::Vertex(v)) => g.set_edge(u, v, true),
                _ => unreachable!("all markers are recomposed"),
            }
        }
        g
    }

    fn bag_has_split(bag: &Bag) -> bool {
        find_split(&bag.graph).is_some()
    }

    /// Every bag is prime, a star or complete, and recomposing any single
    /// marked edge gives a bag that is none of the three.
    pub fn is_canonical(&self) -> bool {
        for bag in &self.bags {
            let ok = match bag.kind {
                BagKind::Prime => bag.len() >= 5 && !Self::bag_has_split(bag),
                kind => classify(&bag.graph) == kind,
            };
            if !ok {
                return false;
            }
        }
        for pair in 0..self.marked_edge_count() {
            let (ba, ia) = self.marker_at[2 * pair];
            let (bb, ib) = self.marker_at[2 * pair + 1];
            let merged = merge_bags(&self.bags[ba], ia, &self.bags[bb], ib);
            // The merged bag always has a split, so only star and complete shapes are excluded.
            if merged.kind != BagKind::Prime {
                return false;
            }
        }
        true
    }

    /// Renames original vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SplitDecomposition> {
        if !crate::graph::is_permutation(perm, self.n) {
            return Err(Error::NotAPermutation);
        }
        let bags = self
            .bags
            .iter()
            .map(|bag| Bag {
                nodes: bag
                    .nodes
                    .iter()
                    .map(|node| match *node {
                        Node::Vertex(v) => Node::Vertex(perm[v]),
                        m => m,
                    })
                    .collect(),
                graph: bag.graph.clone(),
                kind: bag.kind,
            })
            .collect();
        SplitDecomposition::from_bags(self.n, bags)
    }

    /// The marked graph with each marked edge subdivided by a coloured node.
    ///
    /// With `keep_labels`, unmarked nodes are coloured by their original
    /// vertex so isomorphisms must fix them.
    pub fn marked_graph(&self, keep_labels: bool) -> Result<(Graph, Vec<u32>)> {
        let total: usize = self.bags.iter().map(Bag::len).sum::<usize>() + self.marked_edge_count();
        if total > crate::bitset::MAX_VERTICES {
            return Err(Error::SizeCap {
                what: "marked graph",
                size: total,
                cap: crate::bitset::MAX_VERTICES,
            });
        }
        let mut offset = Vec::with_capacity(self.bags.len());
        let mut colors = Vec::with_capacity(total);
        for bag in &self.bags {
            offset.push(colors.len());
            for node in &bag.nodes {
                colors.push(match node {
                    Node::Vertex(v) if keep_labels => 2 + *v as u32,
                    Node::Vertex(_) => 2,
                    Node::Marker(_) => 1,
                });
            }
        }
        let mut edges = Vec::new();
        for (b, bag) in self.bags.iter().enumerate() {
            edges.extend(
                bag.graph
                    .edges()
                    .into_iter()
                    .map(|(i, j)| (offset[b] + i, offset[b] + j)),
            );
        }
        for ((ba, ia), (bb, ib)) in self.marked_edges() {
            let mid = colors.len();
            colors.push(0);
            edges.push((offset[ba] + ia, mid));
            edges.push((mid, offset[bb] + ib));
        }
        Ok((Graph::from_edges(total, &edges)?, colors))
    }

    pub fn marked_canonical_form(&self, keep_labels: bool) -> Result<CanonicalForm> {
        let (g, colors) = self.marked_graph(keep_labels)?;
        Ok(canonical_form_colored(&g, &colors))
    }

    /// Isomorphism of marked graphs that maps each original vertex to itself.
    pub fn is_isomorphic_to(&self, other: &SplitDecomposition) -> Result<bool> {
        if self.n != other.n || self.bags.len() != other.bags.len() {
            return Ok(false);
        }
        Ok(self.marked_canonical_form(true)? == other.marked_canonical_form(true)?)
    }
}

/// Recomposes `a` and `b` along markers at local indices `ia` and `ib`.
pub(crate) fn merge_bags(a: &Bag, ia: usize, b: &Bag, ib: usize) -> Bag {
    let mut nodes = Vec::with_capacity(a.len() + b.len() - 2);
    let mut index_a = vec![usize::MAX; a.len()];
    let mut index_b = vec![usize::MAX; b.len()];
    for (i, node) in a.nodes.iter().enumerate().filter(|(i, _)| *i != ia) {
        index_a[i] = nodes.len();
        nodes.push(*node);
    }
    for (i, node) in b.nodes.iter().enumerate().filter(|(i, _)| *i != ib) {
        index_b[i] = nodes.len();
        nodes.push(*node);
    }
    let mut g = Graph::empty(nodes.len());
    for (i, j) in a.graph.edges() {
        if i != ia && j != ia {
            g.set_edge(index_a[i], index_a[j], true);
        }
    }
    for (i, j) in b.graph.edges() {
        if i != ib && j != ib {
            g.set_edge(index_b[i], index_b[j], true);
        }
    }
    for x in a.graph.neighbors(ia).iter() {
        for y in b.graph.neighbors(ib).iter() {
            g.set_edge(index_a[x], index_b[y], true);
        }
    }
    Bag::new(nodes, g)
}

/// JSON layout: vertex count, then bags with nodes, local edges and kind.
#[derive(Serialize, Deserialize)]
struct RawDecomposition {
    vertices: usize,
    bags: Vec<RawBag>,
}

#[derive(Serialize, Deserialize)]
struct RawBag {
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    kind: BagKind,
}

impl From<SplitDecomposition> for RawDecomposition {
    fn from(d: SplitDecomposition) -> Self {
        RawDecomposition {
            vertices: d.n,
            bags: d
                .bags
                .into_iter()
                .map(|b| RawBag {
                    edges: b.graph.edges(),
                    nodes: b.nodes,
                    kind: b.kind,
                })
                .collect(),
        }
    }
}

impl TryFrom<RawDecomposition> for SplitDecomposition {
    type Error = Error;
    fn try_from(raw: RawDecomposition) -> Result<Self> {
        let mut bags = Vec::with_capacity(raw.bags.len());
        for b in raw.bags {
            let graph = Graph::from_edges(b.nodes.len(), &b.edges)?;
            let kind = classify(&graph);
            let claimed_ok = match (b.kind, kind) {
                (BagKind::Prime, BagKind::Prime) => true,
                (claimed, actual) => claimed == actual,
            };
            if !claimed_ok {
                return Err(Error::MalformedDecomposition(
                    "bag kind does not match its graph".into(),
                ));
            }
            bags.push(Bag {
                nodes: b.nodes,
                graph,
                kind,
            });
        }
        SplitDecomposition::from_bags(raw.vertices, bags)
    }
}
