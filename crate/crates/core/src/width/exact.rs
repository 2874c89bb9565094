//! Exact linear rank-width by dynamic programming over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

use super::{ordering_width, WidthCertificate};

pub const DEFAULT_EXACT_CAP: usize = 22;

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Largest connected component the DP accepts.
    pub cap: usize,
    pub exec: Exec,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            cap: DEFAULT_EXACT_CAP,
            exec: Exec::default(),
        }
    }
}

/// Optimal linear rank-width with a witnessing ordering.
pub fn exact_lrw(g: &Graph) -> Result<(usize, WidthCertificate)> {
    exact_lrw_with(g, ExactOptions::default())
}

/// Components are solved separately and their orderings concatenated in
/// order of smallest vertex.
pub fn exact_lrw_with(g: &Graph, opts: ExactOptions) -> Result<(usize, WidthCertificate)> {
    let comps = g.components();
    if let Some(big) = comps.iter().find(|c| c.len() > opts.cap.min(31)) {
        return Err(Error::SizeCap {
            what: "exact linear rank-width",
            size: big.len(),
            cap: opts.cap.min(31),
        });
    }
    let mut ordering = Vec::with_capacity(g.n());
    for comp in &comps {
        let (sub, map) = g.induced_mapped(comp);
        ordering.extend(
            solve_connected(&sub, opts.exec)
                .into_iter()
                .map(|v| map.new_to_old[v]),
        );
    }
    let cert = ordering_width(g, &ordering)?;
    Ok((cert.width, cert))
}

fn small_rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).low_mask() as u32)
        .collect()
}

/// Cut-rank of `mask` using rows restricted to the complement.
#[inline]
fn cutrank_mask(rows: &[u32], mask: u32, full: u32) -> u8 {
    let other = full & !mask;
    let (side, target) = if mask.count_ones() <= other.count_ones() {
        (mask, other)
    } else {
        (other, mask)
    };
    let mut basis = [0u32; 32];
    let mut rank = 0u8;
    let mut rest = side;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut r = rows[v] & target;
        while r != 0 {
            let p = r.trailing_zeros() as usize;
            if basis[p] == 0 {
                basis[p] = r;
                rank += 1;
                break;
            }
            r ^= basis[p];
        }
    }
    rank
}

/// Returns an optimal ordering of a graph on at most 31 vertices.
fn solve_connected(g: &Graph, exec: Exec) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let rows = small_rows(g);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut cr = vec![0u8; size];
    exec.fill(&mut cr, 1 << 12, |m| cutrank_mask(&rows, m as u32, full));

    // f[S] = max(cr[S], min over v in S of f[S - v]); every S - v precedes S.
    let mut f = vec![0u8; size];
    for m in 1..size {
        let mut best = u8::MAX;
        let mut rest = m;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            best = best.min(f[m & !(1 << v)]);
        }
        f[m] = best.max(cr[m]);
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full as usize;
    while s != 0 {
        let mut rest = s;
        let last = loop {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if f[s & !(1 << v)] <= f[s] {
                break v;
            }
        };
        order.push(last);
        s &= !(1 << last);
    }
    order.reverse();
    order
}

/// Reference implementation: minimum width over all orderings.
#[cfg(test)]
pub(crate) fn brute_force_lrw(g: &Graph) -> usize {
    use crate::bitset::VertexSet;

    fn rec(g: &Graph, prefix: VertexSet, best_so_far: usize, best: &mut usize) {
        if prefix.len() == g.n() {
            *best = (*best).min(best_so_far);
            return;
        }
        for v in g.vertices().difference(&prefix).iter() {
            let next = prefix.with(v);
            let w = best_so_far.max(super::cutrank(g, &next));
            if w < *best {
                rec(g, next, w, best);
            }
        }
    }
    let mut best = usize::MAX;
    rec(g, VertexSet::empty(), 0, &mut best);
    if g.n() == 0 {
        0
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(exact_lrw(&cycle(5)).unwrap().0, 2);
        assert_eq!(exact_lrw(&Graph::empty(6).complement()).unwrap().0, 1);
        assert_eq!(exact_lrw(&Graph::empty(3)).unwrap().0, 0);
        assert_eq!(exact_lrw(&Graph::empty(0)).unwrap().0, 0);
        // S_{2,2,2}: centre 0, legs 0-1-2, 0-3-4, 0-5-6.
        let s222 = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(exact_lrw(&s222).unwrap().0, 2);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.set_edge(u, v, true);
                    }
                }
            }
            let (w, cert) = exact_lrw(&g).unwrap();
            assert_eq!(w, brute_force_lrw(&g), "{g:?}");
            assert!(cert.verify(&g));
        }
    }

    #[test]
    fn deterministic_across_strategies() {
        let g = cycle(9).complement();
        let seq = exact_lrw_with(
            &g,
            ExactOptions {
                exec: Exec::Sequential,
                ..Default::default()
            },
        );
        let par = exact_lrw_with(
            &g,
            ExactOptions {
                exec: Exec::Parallel,
                ..Default::default()
            },
        );
        assert_eq!(seq.unwrap(), par.unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = cycle(24);
        assert!(matches!(exact_lrw(&g), Err(Error::SizeCap { .. })));
        // Two components of 12 fit.
        let two = cycle(12).disjoint_union(&cycle(12)).unwrap();
        assert_eq!(exact_lrw(&two).unwrap().0, 2);
    }
}
