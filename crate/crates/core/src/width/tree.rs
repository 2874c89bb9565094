//! Exact path-width of forests.
//!
//! A rooted piece `(x, removed)` is the subtree at `x` with the subtrees of
//! every vertex in `removed` cut away. For each piece we compute its
//! path-width `p` together with whether some path starting at `x` leaves
//! only components of path-width below `p`. When it does not, a *critical*
//! vertex `w` is recorded: every such path then passes through `w` into two
//! of its child branches, each of path-width `p`.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path-width of a forest.
pub fn tree_pathwidth(t: &Graph) -> Result<usize> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut best = 0;
    for comp in t.components() {
        let root = comp.first().unwrap();
        let rooted = Rooted::new(t, root);
        let mut memo = HashMap::new();
        best = best.max(rooted.info(root, VertexSet::empty(), &mut memo).pw);
    }
    Ok(best)
}

/// Linear rank-width of a forest, which equals its path-width.
pub fn tree_lrw(t: &Graph) -> Result<usize> {
    tree_pathwidth(t)
}

#[derive(Clone, Copy, Debug)]
struct Info {
    pw: usize,
    critical: Option<usize>,
}

struct Rooted {
    children: Vec<Vec<usize>>,
}

impl Rooted {
    fn new(t: &Graph, root: usize) -> Rooted {
        let mut children = vec![Vec::new(); t.n()];
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            for w in t.neighbors(v).iter().filter(|&w| w != parent) {
                children[v].push(w);
                stack.push((w, v));
            }
        }
        Rooted { children }
    }

    fn info(
        &self,
        x: usize,
        removed: VertexSet,
        memo: &mut HashMap<(usize, VertexSet), Info>,
    ) -> Info {
        // Only removed vertices below x matter; keying on the full set is still correct.
        if let Some(&hit) = memo.get(&(x, removed)) {
            return hit;
        }
        let kids: Vec<(usize, Info)> = self.children[x]
            .iter()
            .filter(|c| !removed.contains(**c))
            .map(|&c| (c, self.info(c, removed, memo)))
            .collect();
        let result = if kids.is_empty() {
            Info {
                pw: 0,
                critical: None,
            }
        } else {
            let m = kids.iter().map(|k| k.1.pw).max().unwrap();
            let top: Vec<Info> = kids.iter().filter(|k| k.1.pw == m).map(|k| k.1).collect();
            if m == 0 {
                Info {
                    pw: 1,
                    critical: None,
                }
            } else if top.len() >= 3 {
                Info {
                    pw: m + 1,
                    critical: None,
                }
            } else if top.len() == 2 {
                if top.iter().any(|i| i.critical.is_some()) {
                    Info {
                        pw: m + 1,
                        critical: None,
                    }
                } else {
                    Info {
                        pw: m,
                        critical: Some(x),
                    }
                }
            } else {
                match top[0].critical {
                    None => Info {
                        pw: m,
                        critical: None,
                    },
                    Some(w) => {
                        let rest = self.info(x, removed.with(w), memo);
                        if rest.pw >= m {
                            Info {
                                pw: m + 1,
                                critical: None,
                            }
                        } else {
                            Info {
                                pw: m,
                                critical: Some(w),
                            }
                        }
                    }
                }
            }
        };
        memo.insert((x, removed), result);
        result
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Vertex separation number by subset DP; equals path-width.
    pub(crate) fn vertex_separation(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 20);
        let size = 1usize << n;
        let rows: Vec<u32> = (0..n).map(|v| g.neighbors(v).low_mask() as u32).collect();
        let mut f = vec![0u8; size];
        for m in 1..size {
            let boundary = (0..n)
                .filter(|&v| m >> v & 1 == 1 && (rows[v] as usize) & !m != 0)
                .count() as u8;
            let mut best = u8::MAX;
            for v in 0..n {
                if m >> v & 1 == 1 {
                    best = best.min(f[m & !(1 << v)]);
                }
            }
            f[m] = best.max(boundary);
        }
        f[size - 1] as usize
    }

    fn random_tree(seed: u64, n: usize) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn binary_tree(h: usize) -> Graph {
        let n = (1 << (h + 1)) - 1;
        let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_families() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(tree_pathwidth(&p5).unwrap(), 1);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tree_pathwidth(&star).unwrap(), 1);
        assert_eq!(tree_pathwidth(&Graph::empty(1)).unwrap(), 0);
        assert_eq!(tree_pathwidth(&binary_tree(3)).unwrap(), 2);
        let c3 = Graph::empty(3).complement();
        assert_eq!(tree_pathwidth(&c3), Err(Error::NotAForest));
    }

    #[test]
    fn matches_vertex_separation() {
        for seed in 0..300 {
            let n = 1 + (seed as usize % 16);
            let t = random_tree(seed, n);
            assert_eq!(tree_pathwidth(&t).unwrap(), vertex_separation(&t), "{t:?}");
        }
    }

    #[test]
    fn root_choice_is_irrelevant() {
        for seed in 0..40 {
            let t = random_tree(1000 + seed, 18);
            let expected = tree_pathwidth(&t).unwrap();
            for root in 0..t.n() {
                let rooted = Rooted::new(&t, root);
                let pw = rooted
                    .info(root, VertexSet::empty(), &mut HashMap::new())
                    .pw;
                assert_eq!(pw, expected);
            }
        }
    }

    #[test]
    fn binary_tree_growth() {
        let pws: Vec<usize> = (0..=7)
            .map(|h| tree_pathwidth(&binary_tree(h)).unwrap())
            .collect();
        // Path-width of the complete binary tree of height h is ceil(h / 2).
        assert_eq!(pws, vec![0, 1, 1, 2, 2, 3, 3, 4]);
    }
}
