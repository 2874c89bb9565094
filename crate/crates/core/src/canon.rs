//! Canonical labeling by colour refinement and individualization.
//!
//! The search explores the individualize-refine tree, keeps the leaf with
//! the smallest certificate, and prunes children that lie in one orbit of
//! the automorphisms discovered so far (restricted to those fixing the
//! current path pointwise).

use std::cmp::Ordering;
use std::fmt;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Byte string that is equal for two graphs exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", hex::encode(&self.0))
    }
}

/// A canonical labeling: `position[v]` is the canonical index of vertex `v`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub position: Vec<usize>,
    pub form: CanonicalForm,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g, &vec![0; g.n()]).form
}

/// Canonical form of a vertex-coloured graph; isomorphisms must preserve colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    canonical_labeling(g, colors).form
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// An isomorphism `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_colored_isomorphism(g, &vec![0; g.n()], h, &vec![0; h.n()])
}

pub fn find_colored_isomorphism(
    g: &Graph,
    gc: &[u32],
    h: &Graph,
    hc: &[u32],
) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let lg = canonical_labeling(g, gc);
    let lh = canonical_labeling(h, hc);
    if lg.form != lh.form {
        return None;
    }
    let mut at = vec![0; h.n()];
    for (v, &p) in lh.position.iter().enumerate() {
        at[p] = v;
    }
    Some(lg.position.iter().map(|&p| at[p]).collect())
}

pub fn canonical_labeling(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    let n = g.n();
    let mut search = Search {
        g,
        input: colors,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    let mut cells = initial_cells(colors);
    let mut path = Vec::new();
    search.run(&mut cells, &mut path);
    let (cert, order) = search.best.expect("search visits at least one leaf");
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    Labeling {
        position,
        form: CanonicalForm(cert),
    }
}

const MAX_AUTOS: usize = 512;

/// An ordered partition: each cell is a sorted list of vertices.
type Cells = Vec<Vec<usize>>;

fn initial_cells(colors: &[u32]) -> Cells {
    let mut vs: Vec<usize> = (0..colors.len()).collect();
    vs.sort_by_key(|&v| (colors[v], v));
    let mut cells: Cells = Vec::new();
    for v in vs {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// Refines to the coarsest equitable partition finer than `cells`.
///
/// Each cell is split by the vector of neighbour counts into every cell;
/// sub-cells are ordered by that vector, which keeps the result invariant
/// under relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let sets: Vec<VertexSet> = cells.iter().map(|c| c.iter().collect()).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v);
                    let key = sets
                        .iter()
                        .map(|s| row.intersection(s).len() as u16)
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i > 0 && keyed[i - 1].0 == *key {
                    next.last_mut().unwrap().push(*v);
                } else {
                    next.push(vec![*v]);
                }
            }
            if next.len() - start > 1 {
                split = true;
            }
        }
        for cell in next.iter_mut() {
            cell.sort_unstable();
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    input: &'a [u32],
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, cells: &mut Cells, path: &mut Vec<usize>) {
        refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells);
            return;
        };
        let members = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() {
                let orbit = self.orbit_rep(path, v);
                if explored.iter().any(|&u| self.orbit_rep(path, u) == orbit) {
                    continue;
                }
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = members.iter().copied().filter(|&u| u != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            path.push(v);
            self.run(&mut child, path);
            path.pop();
            explored.push(v);
        }
    }

    /// Smallest vertex in the orbit of `v` under stored automorphisms fixing `path`.
    fn orbit_rep(&self, path: &[usize], v: usize) -> usize {
        let usable: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| path.iter().all(|&p| a[p] == p))
            .collect();
        if usable.is_empty() {
            return v;
        }
        let mut orbit = VertexSet::singleton(v);
        let mut frontier = vec![v];
        while let Some(x) = frontier.pop() {
            for a in &usable {
                let y = a[x];
                if !orbit.contains(y) {
                    orbit.insert(y);
                    frontier.push(y);
                }
            }
        }
        orbit.first().unwrap()
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(self.g, self.input, &order);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert {
                let mut auto = vec![0; order.len()];
                for (p, &v) in order.iter().enumerate() {
                    auto[v] = known.1[p];
                }
                if self.autos.len() < MAX_AUTOS && auto.iter().enumerate().any(|(i, &j)| i != j) {
                    self.autos.push(auto);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), order.clone()));
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert.cmp(b) == Ordering::Less,
        };
        if better {
            self.best = Some((cert, order));
        }
    }
}

fn certificate(g: &Graph, colors: &[u32], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(2 + 4 * n + n * n / 16 + 1);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    for &v in order {
        out.extend_from_slice(&colors[v].to_be_bytes());
    }
    let mut byte = 0u8;
    let mut bits = 0;
    for j in 1..n {
        let row = g.neighbors(order[j]);
        for &u in &order[..j] {
            byte = byte << 1 | row.contains(u) as u8;
            bits += 1;
            if bits == 8 {
                out.push(byte);
                byte = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(byte << (8 - bits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_isomorphic(&p4, &p4.complement()));
        let map = find_isomorphism(&p4, &p4.complement()).unwrap();
        let h = p4.complement();
        for (u, v) in p4.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn k3_vs_p3() {
        let k3 = cycle(3);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_isomorphic(&k3, &p3));
    }

    #[test]
    fn vertex_transitive_graphs() {
        // C6 against 2K3 shares degree sequence but not structure.
        let two_k3 = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert!(!is_isomorphic(&cycle(6), &two_k3));
        let perm = [3, 0, 4, 1, 5, 2];
        assert!(is_isomorphic(&cycle(6), &cycle(6).permute(&perm).unwrap()));
    }

    #[test]
    fn colours_are_respected() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_ne!(
            canonical_form_colored(&p3, &[1, 0, 0]),
            canonical_form_colored(&p3, &[0, 1, 0])
        );
        assert_eq!(
            canonical_form_colored(&p3, &[1, 0, 0]),
            canonical_form_colored(&p3, &[0, 0, 1])
        );
    }
}
