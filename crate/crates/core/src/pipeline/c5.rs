//! Orderings of `(K3, S_{1,2,2})`-free graphs containing an induced `C5`.
//!
//! The vertices off the cycle split into ten classes by their neighbours on
//! it. After 25 bipartite complementations and deleting the cycle, every
//! edge lies inside one of ten vertex-disjoint nice 3-partite groups, so
//! the reduced graph has width at most 3. Undoing the complementations
//! costs at most 50 and the cycle at most 5.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::constructions::named;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::width::{exact_lrw_with, ordering_width, ExactOptions};

use super::certify;
use super::nice::{check_nice, is_chain_between, nice_3partite_ordering};

pub const C5_CASE_BOUND: usize = 58;

/// The first induced `C5` in lexicographic order of vertex sets, listed
/// from its smallest vertex towards its smaller neighbour.
pub fn find_induced_c5(g: &Graph) -> Option<[usize; 5]> {
    fn extend(g: &Graph, chosen: &mut Vec<usize>, from: usize) -> bool {
        if chosen.len() == 5 {
            let set: VertexSet = chosen.iter().collect();
            return chosen
                .iter()
                .all(|&v| g.neighbors(v).intersection(&set).len() == 2)
                && g.reachable(chosen[0], &set) == set;
        }
        for v in from..g.n() {
            let set: VertexSet = chosen.iter().collect();
            let nv = g.neighbors(v).intersection(&set);
            if nv.len() > 2
                || chosen
                    .iter()
                    .any(|&u| g.neighbors(u).intersection(&set).len() == 2 && nv.contains(u))
            {
                continue;
            }
            chosen.push(v);
            if extend(g, chosen, v + 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(5);
    if !extend(g, &mut chosen, 0) {
        return None;
    }
    let set: VertexSet = chosen.iter().collect();
    let mut cycle = [chosen[0]; 5];
    let mut seen = VertexSet::singleton(chosen[0]);
    for k in 1..5 {
        let next = g
            .neighbors(cycle[k - 1])
            .intersection(&set)
            .difference(&seen)
            .first()?;
        cycle[k] = next;
        seen.insert(next);
    }
    Some(cycle)
}

/// Classes of the vertices off an induced `C5 = c_0 .. c_4`, indices mod 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Partition {
    pub cycle: [usize; 5],
    /// `v[i]`: the only cycle neighbour is `c_i`.
    pub v: [VertexSet; 5],
    /// `w[i]`: the cycle neighbours are exactly `c_{i-1}` and `c_{i+1}`.
    pub w: [VertexSet; 5],
    /// Has a non-neighbour in `W_{i+1}`.
    pub w_minus: [VertexSet; 5],
    /// Not in `W_i^-`, has a non-neighbour in `W_{i-1}`.
    pub w_plus: [VertexSet; 5],
    pub w_star: [VertexSet; 5],
    /// Has a neighbour in `W_{i+2}^*`.
    pub v1: [VertexSet; 5],
    /// Has a neighbour in `W_{i-2}^*`.
    pub v2: [VertexSet; 5],
    pub v3: [VertexSet; 5],
}

fn at(i: usize, d: isize) -> usize {
    (i as isize + d).rem_euclid(5) as usize
}

fn complete(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.iter().all(|v| y.is_subset(&g.neighbors(v)))
}

fn anticomplete(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    !g.neighborhood_of_set(x).intersects(y)
}

fn claim(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::structure(what()))
    }
}

impl C5Partition {
    /// Classifies the vertices of a connected graph around `cycle` and
    /// checks every structural claim the reduction relies on.
    pub fn build(g: &Graph, cycle: [usize; 5]) -> Result<C5Partition> {
        for (k, &c) in cycle.iter().enumerate() {
            g.check_vertex(c)?;
            for (l, &d) in cycle.iter().enumerate() {
                let adjacent = (k + 5 - l) % 5 == 1 || (l + 5 - k) % 5 == 1;
                if k != l && g.has_edge(c, d) != adjacent {
                    return Err(Error::precondition("cycle is not an induced C5"));
                }
            }
        }
        let cset: VertexSet = cycle.iter().collect();
        let mut v = [VertexSet::empty(); 5];
        let mut w = [VertexSet::empty(); 5];
        for x in g.vertices().difference(&cset).iter() {
            let on: Vec<usize> = (0..5).filter(|&i| g.has_edge(x, cycle[i])).collect();
            match on[..] {
                [i] => v[i].insert(x),
                [i, j] if j == i + 2 => w[i + 1].insert(x),
                [i, j] if j == i + 3 => w[at(i, -1)].insert(x),
                [] => {
                    return Err(Error::structure(format!(
                        "vertex {x} has no neighbour on the cycle"
                    )))
                }
                _ => {
                    return Err(Error::structure(format!(
                        "vertex {x} closes a triangle with the cycle"
                    )))
                }
            }
        }
        for i in 0..5 {
            claim(g.is_independent(&v[i]) && g.is_independent(&w[i]), || {
                format!("class {i} is not independent")
            })?;
        }
        for i in 0..5 {
            let (n1, n2) = (at(i, 1), at(i, 2));
            let (p1, p2) = (at(i, -1), at(i, -2));
            claim(complete(g, &v[i], &v[n1]), || {
                format!("(1) V{i} not complete to V{n1}")
            })?;
            claim(anticomplete(g, &v[i], &v[n2]), || {
                format!("(1) V{i} not anti-complete to V{n2}")
            })?;
            claim(anticomplete(g, &w[i], &w[n2]), || {
                format!("(2) W{i} meets W{n2}")
            })?;
            claim(complete(g, &w[i], &v[i]), || {
                format!("(3) W{i} not complete to V{i}")
            })?;
            claim(anticomplete(g, &w[i], &v[n1].union(&v[p1])), || {
                format!("(3) W{i} meets V{p1} or V{n1}")
            })?;
            claim(
                is_chain_between(g, &v[i], &w[n2])
                    && is_chain_between(g, &v[i], &w[p2])
                    && is_chain_between(g, &w[i], &w[n1]),
                || format!("(4) an induced 2P2 around V{i} or W{i}"),
            )?;
            for x in v[i].iter() {
                let nx = g.neighbors(x);
                for y in w[n2].difference(&nx).iter() {
                    let ny = g.neighbors(y);
                    claim(w[p2].difference(&nx).is_subset(&ny), || {
                        format!("(5) independent triple through {x} and {y}")
                    })?;
                }
            }
        }

        let non_nb = |x: usize, s: &VertexSet| !s.is_subset(&g.neighbors(x));
        let mut w_minus = [VertexSet::empty(); 5];
        let mut w_plus = [VertexSet::empty(); 5];
        let mut w_star = [VertexSet::empty(); 5];
        for i in 0..5 {
            for x in w[i].iter() {
                if non_nb(x, &w[at(i, 1)]) {
                    w_minus[i].insert(x);
                } else if non_nb(x, &w[at(i, -1)]) {
                    w_plus[i].insert(x);
                } else {
                    w_star[i].insert(x);
                }
            }
        }
        for i in 0..5 {
            let n1 = at(i, 1);
            claim(complete(g, &w_minus[i], &w_minus[n1]), || {
                format!("W{i}^- not complete to W{n1}^-")
            })?;
        }
        let mut v1 = [VertexSet::empty(); 5];
        let mut v2 = [VertexSet::empty(); 5];
        let mut v3 = [VertexSet::empty(); 5];
        for i in 0..5 {
            let (n2, p2) = (at(i, 2), at(i, -2));
            claim(
                anticomplete(g, &v[i], &w_plus[n2].union(&w_minus[p2])),
                || format!("(a) V{i} meets W{n2}^+ or W{p2}^-"),
            )?;
            for x in v[i].iter() {
                let nx = g.neighbors(x);
                let one = nx.intersects(&w_star[n2]);
                let two = nx.intersects(&w_star[p2]);
                if one {
                    claim(w_minus[n2].is_subset(&nx) && !nx.intersects(&w[p2]), || {
                        format!("(b) vertex {x} of V{i} against W{n2}^- or W{p2}")
                    })?;
                    v1[i].insert(x);
                }
                if two {
                    claim(w_plus[p2].is_subset(&nx) && !nx.intersects(&w[n2]), || {
                        format!("(b) vertex {x} of V{i} against W{p2}^+ or W{n2}")
                    })?;
                    v2[i].insert(x);
                }
                if !one && !two {
                    v3[i].insert(x);
                }
            }
            claim(!v1[i].intersects(&v2[i]), || format!("V{i}^1 meets V{i}^2"))?;
        }
        Ok(C5Partition {
            cycle,
            v,
            w,
            w_minus,
            w_plus,
            w_star,
            v1,
            v2,
            v3,
        })
    }

    /// The 25 bipartite complementations, five per index.
    pub fn complementations(&self) -> Vec<(VertexSet, VertexSet)> {
        let mut out = Vec::with_capacity(25);
        for i in 0..5 {
            let (n1, n2, p2) = (at(i, 1), at(i, 2), at(i, -2));
            out.push((self.v[i], self.v[n1].union(&self.w[i])));
            out.push((self.w_plus[i].union(&self.w_star[i]), self.w[n1]));
            out.push((self.w_minus[i], self.w_minus[n1].union(&self.w_star[n1])));
            out.push((self.v1[i], self.w_minus[n2]));
            out.push((self.v2[i], self.w_plus[p2]));
        }
        out
    }

    /// The vertex-disjoint groups `[V_i^1, V_{i-1}^2, W_{i+2}^*]` and
    /// `[V_i^3, W_{i+2}^-, W_{i-2}^+]` for each `i`, keyed by `(i, j)` with
    /// `j` 1 or 3. The groups `[V_i^2, V_{i+1}^1, W_{i-2}^*]` repeat the first
    /// kind and are omitted.
    pub fn groups(&self) -> Vec<((usize, u8), [VertexSet; 3])> {
        let mut out = Vec::with_capacity(10);
        for i in 0..5 {
            out.push((
                (i, 1),
                [self.v1[i], self.v2[at(i, -1)], self.w_star[at(i, 2)]],
            ));
        }
        for i in 0..5 {
            out.push((
                (i, 3),
                [self.v3[i], self.w_minus[at(i, 2)], self.w_plus[at(i, -2)]],
            ));
        }
        out
    }
}

/// How one component of one group was ordered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Component {
    pub group: (usize, u8),
    /// Vertices of the input graph.
    pub vertices: VertexSet,
    /// `false` when the component was not nice and the exact solver ran.
    pub nice: bool,
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Evidence {
    pub partition: C5Partition,
    pub complementations: Vec<(VertexSet, VertexSet)>,
    pub components: Vec<C5Component>,
    /// Width of the reduced graph under the concatenated ordering.
    pub reduced_width: usize,
    pub fallbacks: usize,
}

/// A certificate of width at most 58 for a connected `(K3, S_{1,2,2})`-free
/// graph with an induced `C5`.
pub fn c5_case_ordering(g: &Graph) -> Result<(crate::width::WidthCertificate, C5Evidence)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !crate::minors::is_h_free(g, &[named::complete(3), named::spider(1, 2, 2)]) {
        return Err(Error::precondition("graph is not (K3, S122)-free"));
    }
    let cycle = find_induced_c5(g).ok_or_else(|| Error::precondition("graph has no induced C5"))?;
    c5_ordering_around(g, cycle)
}

/// The reduction around a given cycle; only the partition claims are checked.
pub(crate) fn c5_ordering_around(
    g: &Graph,
    cycle: [usize; 5],
) -> Result<(crate::width::WidthCertificate, C5Evidence)> {
    let partition = C5Partition::build(g, cycle)?;
    let complementations = partition.complementations();
    let mut h = g.clone();
    for (a, b) in &complementations {
        h = h.bipartite_complement(a, b)?;
    }
    let cset: VertexSet = cycle.iter().collect();
    let rest = g.vertices().difference(&cset);

    let groups = partition.groups();
    let mut group_of = vec![usize::MAX; g.n()];
    for (k, (_, parts)) in groups.iter().enumerate() {
        for p in parts {
            for x in p.iter() {
                claim(group_of[x] == usize::MAX, || {
                    format!("vertex {x} lies in two groups")
                })?;
                group_of[x] = k;
            }
        }
    }
    for x in rest.iter() {
        claim(group_of[x] != usize::MAX, || {
            format!("vertex {x} lies in no group")
        })?;
    }
    for x in rest.iter() {
        for y in h.neighbors(x).intersection(&rest).iter() {
            claim(group_of[x] == group_of[y], || {
                format!("reduced edge {x}{y} crosses groups")
            })?;
        }
    }

    let mut ordering = Vec::with_capacity(g.n());
    let mut components = Vec::new();
    let mut fallbacks = 0;
    for (key, parts) in &groups {
        let all = parts[0].union(&parts[1]).union(&parts[2]);
        let (sub, map) = h.induced_mapped(&all);
        for comp in sub.components() {
            let (c, cmap) = sub.induced_mapped(&comp);
            let local = |s: &VertexSet| -> VertexSet {
                s.iter()
                    .filter_map(|x| map.old_to_new[x].and_then(|y| cmap.old_to_new[y]))
                    .collect()
            };
            let cparts = [local(&parts[0]), local(&parts[1]), local(&parts[2])];
            let nice = check_nice(&c, &cparts).is_ok();
            let cert = if nice {
                nice_3partite_ordering(&c, &cparts[0], &cparts[1], &cparts[2])?
            } else {
                fallbacks += 1;
                exact_lrw_with(&c, ExactOptions::default())?.1
            };
            let vertices: VertexSet = cert
                .ordering
                .iter()
                .map(|&x| map.new_to_old[cmap.new_to_old[x]])
                .collect();
            ordering.extend(
                cert.ordering
                    .iter()
                    .map(|&x| map.new_to_old[cmap.new_to_old[x]]),
            );
            components.push(C5Component {
                group: *key,
                vertices,
                nice,
                width: cert.width,
            });
        }
    }
    let (reduced, rmap) = h.induced_mapped(&rest);
    let local: Vec<usize> = ordering
        .iter()
        .map(|&x| rmap.old_to_new[x].expect("off the cycle"))
        .collect();
    let reduced_width = ordering_width(&reduced, &local)?.width;
    claim(reduced_width <= 3, || {
        format!("reduced graph has width {reduced_width}")
    })?;
    ordering.extend(cycle);
    let cert = certify(g, &ordering, C5_CASE_BOUND, "C5 case")?;
    Ok((
        cert,
        C5Evidence {
            partition,
            complementations,
            components,
            reduced_width,
            fallbacks,
        },
    ))
}
