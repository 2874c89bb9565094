//! Simple undirected graphs with bitset adjacency rows over GF(2).

use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple graph on vertices `0..n`.
///
/// Row `v` of the adjacency matrix is stored as a [`VertexSet`]; rows are
/// symmetric and the diagonal is zero. Every operation returns a new graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Old-to-new index correspondence after deleting or contracting vertices.
///
/// Survivors keep their relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl IndexMap {
    fn from_survivors(n: usize, keep: &VertexSet) -> IndexMap {
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(keep.len());
        for v in keep.iter().filter(|&v| v < n) {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
        IndexMap {
            old_to_new,
            new_to_old,
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph exceeds {MAX_VERTICES} vertices");
        Graph {
            n,
            rows: vec![VertexSet::empty(); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::SizeCap {
                what: "graph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::precondition(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and the diagonal.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::SizeCap {
                what: "graph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(&full) || row.contains(v) {
                return Err(Error::precondition(format!("bad adjacency row {v}")));
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(Error::precondition(format!(
                        "adjacency not symmetric at {v},{u}"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            rows,
            labels: None,
        })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        if present {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        } else {
            self.rows[u].remove(v);
            self.rows[v].remove(u);
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::precondition("label count differs from vertex count"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Neighbours of `s` outside `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for v in s.iter() {
            out = out.union(&self.rows[v]);
        }
        out.difference(s)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// `G * u`: toggles every adjacency inside the neighbourhood of `u`.
    pub fn local_complement(&self, u: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        let mut g = self.clone();
        let nb = self.rows[u];
        for x in nb.iter() {
            // x keeps itself off the diagonal; the mask flips x's other neighbours in N(u).
            let flip = nb.without(x);
            g.rows[x] = g.rows[x].symmetric_difference(&flip);
        }
        Ok(g)
    }

    /// `G ∧ uv` for an edge `uv`.
    ///
    /// Toggles adjacency between each pair of the classes `N(u)∖N[v]`,
    /// `N(v)∖N[u]` and `N(u)∩N(v)`, then exchanges the neighbourhoods of `u`
    /// and `v`.
    pub fn pivot(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let nu = self.rows[u];
        let nv = self.rows[v];
        let only_u = nu.difference(&nv).without(v);
        let only_v = nv.difference(&nu).without(u);
        let both = nu.intersection(&nv);
        let mut g = self.clone();
        for (a, b) in [(only_u, only_v), (only_u, both), (only_v, both)] {
            for x in a.iter() {
                g.rows[x] = g.rows[x].symmetric_difference(&b);
            }
            for y in b.iter() {
                g.rows[y] = g.rows[y].symmetric_difference(&a);
            }
        }
        for x in only_u.iter() {
            g.set_edge(u, x, false);
            g.set_edge(v, x, true);
        }
        for y in only_v.iter() {
            g.set_edge(v, y, false);
            g.set_edge(u, y, true);
        }
        debug_assert!(
            {
                let three = self
                    .local_complement(u)
                    .and_then(|h| h.local_complement(v))
                    .and_then(|h| h.local_complement(u));
                three.map(|h| h == g).unwrap_or(false)
            },
            "pivot disagrees with three local complementations"
        );
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let mut g = self.clone();
        for v in 0..self.n {
            g.rows[v] = full.difference(&self.rows[v]).without(v);
        }
        g
    }

    /// `G × (A, B)`: toggles every adjacency between `a` and `b`.
    pub fn bipartite_complement(&self, a: &VertexSet, b: &VertexSet) -> Result<Graph> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.intersects(b) {
            return Err(Error::OverlappingSets);
        }
        let mut g = self.clone();
        for x in a.iter() {
            g.rows[x] = g.rows[x].symmetric_difference(b);
        }
        for y in b.iter() {
            g.rows[y] = g.rows[y].symmetric_difference(a);
        }
        Ok(g)
    }

    pub fn are_twins(&self, a: usize, b: usize) -> bool {
        self.rows[a].without(b) == self.rows[b].without(a)
    }

    /// `G // I_1 // ... // I_m`: keeps the smallest vertex of every part.
    ///
    /// Every pair inside a part must be twins.
    pub fn contract_twins(&self, parts: &[VertexSet]) -> Result<(Graph, IndexMap)> {
        let mut seen = VertexSet::empty();
        let mut drop = VertexSet::empty();
        for part in parts {
            self.check_set(part)?;
            if part.intersects(&seen) {
                return Err(Error::OverlappingSets);
            }
            seen = seen.union(part);
            let members = part.to_vec();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if !self.are_twins(a, b) {
                        return Err(Error::NotTwins { a, b });
                    }
                }
            }
            if let Some(rep) = part.first() {
                drop = drop.union(&part.without(rep));
            }
        }
        Ok(self.delete_vertices_mapped(&drop))
    }

    pub fn induced(&self, s: &VertexSet) -> Graph {
        self.induced_mapped(s).0
    }

    /// Induced subgraph on `s`; new indices follow the original order.
    pub fn induced_mapped(&self, s: &VertexSet) -> (Graph, IndexMap) {
        let keep = s.intersection(&self.vertices());
        let map = IndexMap::from_survivors(self.n, &keep);
        let mut g = Graph::empty(map.new_to_old.len());
        for (i, &old) in map.new_to_old.iter().enumerate() {
            g.rows[i] = self.rows[old]
                .intersection(&keep)
                .iter()
                .map(|w| map.old_to_new[w].expect("kept"))
                .collect();
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(map.new_to_old.iter().map(|&o| labels[o].clone()).collect());
        }
        (g, map)
    }

    pub fn delete_vertices(&self, s: &VertexSet) -> Graph {
        self.delete_vertices_mapped(s).0
    }

    pub fn delete_vertices_mapped(&self, s: &VertexSet) -> (Graph, IndexMap) {
        self.induced_mapped(&self.vertices().difference(s))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&VertexSet::singleton(v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if !is_permutation(perm, self.n) {
            return Err(Error::NotAPermutation);
        }
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            g.rows[perm[v]] = self.rows[v].iter().map(|w| perm[w]).collect();
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.n];
            for v in 0..self.n {
                out[perm[v]] = labels[v].clone();
            }
            g.labels = Some(out);
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeCap {
                what: "graph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + self.n, v + self.n)),
        );
        Graph::from_edges(n, &edges)
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn reachable(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for x in frontier.iter() {
                next = next.union(&self.rows[x]);
            }
            next = next.intersection(within).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
        }
        seen
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reachable(v, &left);
            left = left.difference(&c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable(0, &self.vertices()).len() == self.n
    }

    /// A proper 2-colouring `(side0, side1)`; in each component the smallest
    /// vertex goes on side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![u8::MAX; self.n];
        let mut a = VertexSet::empty();
        let mut b = VertexSet::empty();
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.rows[x].iter() {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        for (v, &s) in side.iter().enumerate() {
            if s == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.rows[v]))
    }

    /// Maximal classes of pairwise twins, ordered by smallest vertex.
    ///
    /// Vertices with equal open neighbourhoods form false-twin classes and
    /// vertices with equal closed neighbourhoods form true-twin classes; a
    /// vertex cannot have twins of both kinds.
    pub fn twin_classes(&self) -> Vec<VertexSet> {
        let mut assigned = VertexSet::empty();
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned.contains(v) {
                continue;
            }
            let mut class = VertexSet::singleton(v);
            for w in v + 1..self.n {
                if !assigned.contains(w) && self.are_twins(v, w) {
                    class.insert(w);
                }
            }
            // A twin pair {v,w} plus x twin to v only belongs with v if x is twin to w.
            let members = class.to_vec();
            let mut kept = VertexSet::singleton(v);
            for &w in &members[1..] {
                if kept.iter().all(|k| self.are_twins(k, w)) {
                    kept.insert(w);
                }
            }
            assigned = assigned.union(&kept);
            out.push(kept);
        }
        out
    }

    /// Maximal classes of vertices with identical open neighbourhoods.
    pub fn false_twin_classes(&self) -> Vec<VertexSet> {
        let mut assigned = VertexSet::empty();
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned.contains(v) {
                continue;
            }
            let class: VertexSet = (v..self.n)
                .filter(|&w| self.rows[w] == self.rows[v])
                .collect();
            assigned = assigned.union(&class);
            out.push(class);
        }
        out
    }

    /// Distances from `v` (usize::MAX when unreachable).
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut frontier = VertexSet::singleton(v);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::empty();
            for x in frontier.iter() {
                next = next.union(&self.rows[x]);
            }
            next = next.difference(&seen);
            for x in next.iter() {
                dist[x] = d;
            }
            seen = seen.union(&next);
            frontier = next;
        }
        dist
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}
