//! Seeded instances of the restricted classes the ordering builders accept.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::minors::{claw_pm_free_by_patterns, is_h_free};

use super::named;
use super::random::{random_bipartite, rng, shuffle};

/// `K3` and `S_{1,2,2}`.
pub fn k3_s122() -> [Graph; 2] {
    [named::complete(3), named::spider(1, 2, 2)]
}

pub fn is_k3_s122_free(g: &Graph) -> bool {
    is_h_free(g, &k3_s122())
}

/// How a `(K3, S_{1,2,2})`-free instance was grown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// Bipartite chain graph.
    Chain,
    /// Dense random bipartite graph.
    Bipartite,
    /// Even cycle or long path with false twins added.
    LongBipartite,
    /// Odd cycle of length at least 7 with false twins added.
    OddCycle,
    /// Induced `C5` plus vertices seeing one or two cycle vertices.
    C5Growth,
}

impl Shape {
    pub const ALL: [Shape; 5] = [
        Shape::Chain,
        Shape::Bipartite,
        Shape::LongBipartite,
        Shape::OddCycle,
        Shape::C5Growth,
    ];
}

/// Connected bipartite chain graph: `a_i` sees `b_0 .. b_{t_i}`.
fn chain<R: Rng>(r: &mut R, max_n: usize) -> Graph {
    let n = r.gen_range(2..=max_n.max(2));
    let a = r.gen_range(1..n);
    let b = n - a;
    let mut g = Graph::empty(n);
    for i in 0..a {
        let t = if i == 0 { b } else { r.gen_range(1..=b) };
        for j in 0..t {
            g.set_edge(i, a + j, true);
        }
    }
    g
}

/// Adds false twins of randomly chosen vertices until `n` vertices.
fn blow_up<R: Rng>(r: &mut R, base: &Graph, n: usize) -> Graph {
    let mut g = base.clone();
    while g.n() < n {
        let v = r.gen_range(0..base.n());
        let k = g.n();
        let mut h = g.disjoint_union(&Graph::empty(1)).expect("fits");
        for w in g.neighbors(v).iter() {
            h.set_edge(w, k, true);
        }
        g = h;
    }
    g
}

/// Grows `C5 = 0 1 2 3 4` by vertices that see only `c_i` (type `V_i`) or
/// exactly `c_{i-1}, c_{i+1}` (type `W_i`). Adjacencies the class forces are
/// set, the others are random, and a vertex is kept only if the graph stays
/// `(K3, S_{1,2,2})`-free.
fn c5_growth<R: Rng>(r: &mut R, max_n: usize) -> Graph {
    let target = r.gen_range(5..=max_n.max(5));
    // kind[v] = (is_w, i) for added vertices.
    let mut g = named::cycle(5).expect("C5");
    let mut kind: Vec<(bool, usize)> = Vec::new();
    let mut attempts = 0;
    while g.n() < target && attempts < 40 * target {
        attempts += 1;
        let is_w = r.gen_bool(0.6);
        let i = r.gen_range(0..5);
        let k = g.n();
        let mut h = g.disjoint_union(&Graph::empty(1)).expect("fits");
        if is_w {
            h.set_edge((i + 4) % 5, k, true);
            h.set_edge((i + 1) % 5, k, true);
        } else {
            h.set_edge(i, k, true);
        }
        for (idx, &(ow, j)) in kind.iter().enumerate() {
            let other = 5 + idx;
            let d = (j + 5 - i) % 5;
            let edge = match (is_w, ow) {
                // V_i is complete to V_{i±1} and anticomplete to V_{i±2}.
                (false, false) => d == 1 || d == 4,
                // W_i is complete to V_i and anticomplete to V_{i±1}.
                (true, false) => d == 0 || (d != 1 && d != 4 && r.gen_bool(0.5)),
                (false, true) => d == 0 || (d != 1 && d != 4 && r.gen_bool(0.5)),
                // W_i is anticomplete to W_i and W_{i±2}.
                (true, true) => (d == 1 || d == 4) && r.gen_bool(0.8),
            };
            if edge {
                h.set_edge(other, k, true);
            }
        }
        if is_k3_s122_free(&h) {
            g = h;
            kind.push((is_w, i));
        }
    }
    g
}

fn candidate<R: Rng>(r: &mut R, shape: Shape, max_n: usize) -> Graph {
    match shape {
        Shape::Chain => chain(r, max_n),
        Shape::Bipartite => {
            let n = r.gen_range(4..=max_n.max(4));
            let a = r.gen_range(2..=n - 2);
            let p = r.gen_range(0.5..0.9);
            random_bipartite(r, a, n - a, p)
        }
        Shape::LongBipartite => {
            let len = r.gen_range(7..=max_n.clamp(7, 12));
            let base = if r.gen_bool(0.5) && len >= 8 {
                named::cycle(len - len % 2).expect("even cycle")
            } else {
                named::path(len)
            };
            let n = r.gen_range(base.n()..=max_n.max(base.n()));
            blow_up(r, &base, n)
        }
        Shape::OddCycle => {
            let top = max_n.clamp(7, 13);
            let lengths: Vec<usize> = [7, 9, 11, 13].into_iter().filter(|&l| l <= top).collect();
            let len = *lengths.choose(r).expect("7 fits");
            let n = r.gen_range(len..=max_n.max(len));
            blow_up(r, &named::cycle(len).expect("odd cycle"), n)
        }
        Shape::C5Growth => c5_growth(r, max_n),
    }
}

/// A connected `(K3, S_{1,2,2})`-free graph on at most `max_n` vertices of
/// the given shape, relabelled at random.
///
/// Candidates are drawn until one passes; a chain graph is the fallback.
pub fn k3_s122_free_instance(seed: u64, shape: Shape, max_n: usize) -> Graph {
    let mut r = rng(seed);
    for _ in 0..200 {
        let g = candidate(&mut r, shape, max_n);
        if g.is_connected() && g.n() <= max_n && is_k3_s122_free(&g) {
            return shuffle(&mut r, &g);
        }
    }
    let fallback = chain(&mut r, max_n);
    shuffle(&mut r, &fallback)
}

/// A connected claw-pivot-minor-free graph on at most `max_n` vertices.
///
/// Built as the complement of a `(K3, P1 + 2P2)`-free graph, which is
/// `(3P1, W4)`-free, and kept when it is also `bw3`-free and connected.
pub fn claw_pm_free_instance(seed: u64, max_n: usize) -> Graph {
    let mut r = rng(seed);
    let forbidden = [named::complete(3), named::p1_plus_2p2()];
    for attempt in 0..400 {
        let h = match (seed as usize + attempt) % 3 {
            0 => {
                let n = r.gen_range(5..=max_n.max(5));
                blow_up(&mut r, &named::cycle(5).expect("C5"), n)
            }
            1 => {
                let n = r.gen_range(3..=max_n.max(3));
                let a = r.gen_range(1..n);
                let p = r.gen_range(0.5..0.95);
                random_bipartite(&mut r, a, n - a, p)
            }
            _ => c5_growth(&mut r, max_n),
        };
        if !is_h_free(&h, &forbidden) {
            continue;
        }
        let g = h.complement();
        if g.is_connected() && claw_pm_free_by_patterns(&g) {
            return shuffle(&mut r, &g);
        }
    }
    named::complete(max_n.clamp(1, 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_in_class() {
        for seed in 0..40 {
            for shape in Shape::ALL {
                let g = k3_s122_free_instance(seed, shape, 16);
                assert!(g.is_connected() && g.n() <= 16);
                assert!(is_k3_s122_free(&g), "{shape:?}");
            }
            let g = claw_pm_free_instance(seed, 12);
            assert!(g.is_connected() && claw_pm_free_by_patterns(&g));
        }
    }

    #[test]
    fn c5_growth_grows() {
        let mut r = rng(1);
        let sizes: Vec<usize> = (0..20).map(|_| c5_growth(&mut r, 16).n()).collect();
        assert!(sizes.iter().any(|&s| s >= 10), "{sizes:?}");
    }
}
