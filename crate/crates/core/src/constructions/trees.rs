//! Trees: caterpillars, random trees, subdivisions and class `C` members.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A spine path with a number of pendant legs at each spine vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarSpec {
    pub legs: Vec<usize>,
}

/// Spine `0..s` in path order, then the legs of each spine vertex in turn.
pub fn caterpillar(spec: &CaterpillarSpec) -> Result<Graph> {
    let s = spec.legs.len();
    if s == 0 {
        return Err(Error::precondition("a caterpillar needs a spine vertex"));
    }
    let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
    let mut next = s;
    for (i, &k) in spec.legs.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// Uniformly random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(seed: u64, n: usize) -> Graph {
    random_tree_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn random_tree_with<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Graph::from_edges(n, &edges).expect("tiny tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding gives a tree")
}

/// Whether removing all leaves of the tree leaves a path (or nothing).
pub fn is_caterpillar(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let inner: crate::VertexSet = (0..t.n()).filter(|&v| t.degree(v) >= 2).collect();
    let spine = t.induced(&inner);
    Ok((0..spine.n()).all(|v| spine.degree(v) <= 2))
}

/// The 1-subdivision: original vertices keep their numbers and the `k`-th
/// edge of [`Graph::edges`] gets the new vertex `n + k`.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .enumerate()
        .flat_map(|(k, (u, v))| [(u, n + k), (n + k, v)])
        .collect();
    Graph::from_edges(n + g.edge_count(), &edges).expect("subdivision fits")
}

/// The class `C` member of a tree: its 1-subdivision, locally complemented
/// at every original vertex of degree at least three.
pub fn class_c_member(t: &Graph) -> Result<Graph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut g = subdivide(t);
    for v in (0..t.n()).filter(|&v| t.degree(v) >= 3) {
        g = g.local_complement(v)?;
    }
    Ok(g)
}

/// Largest `n` for which [`all_trees`] enumerates.
pub const TREE_ENUMERATION_CAP: usize = 14;

/// Every tree on `n` vertices up to isomorphism, built by leaf addition.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n > TREE_ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "tree enumeration",
            size: n,
            cap: TREE_ENUMERATION_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..k {
                let mut edges = t.edges();
                edges.push((v, k));
                let grown = Graph::from_edges(k + 1, &edges)?;
                if seen.insert(canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Vertices on a longest path of a tree, in path order.
pub fn longest_path(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() == 0 {
        return Ok(Vec::new());
    }
    let far = |s: usize| -> usize {
        let d = t.distances_from(s);
        (0..t.n())
            .max_by_key(|&v| (d[v], std::cmp::Reverse(v)))
            .unwrap()
    };
    let a = far(0);
    let b = far(a);
    let da = t.distances_from(a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = t
            .neighbors(cur)
            .iter()
            .find(|&w| da[w] + 1 == da[cur])
            .unwrap();
        path.push(cur);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named;

    #[test]
    fn tree_counts() {
        // Unlabelled trees, n = 1..=10.
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..50 {
            let n = 1 + seed as usize % 20;
            let t = random_tree(seed, n);
            assert!(t.is_tree());
            assert_eq!(t, random_tree(seed, n));
        }
    }

    #[test]
    fn caterpillar_recognition() {
        assert!(is_caterpillar(&named::path(6)).unwrap());
        assert!(!is_caterpillar(&named::spider(2, 2, 2)).unwrap());
        let c = caterpillar(&CaterpillarSpec {
            legs: vec![2, 0, 3],
        })
        .unwrap();
        assert!(c.is_tree());
        assert!(is_caterpillar(&c).unwrap());
        assert_eq!(
            is_caterpillar(&named::cycle(4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn class_c_of_claw() {
        // Direct construction: centre 0, leaves 1..3, subdivision vertices
        // 4..6 on the edges to 1..3; local complementation at 0 makes the
        // subdivision vertices a triangle.
        let member = class_c_member(&named::claw()).unwrap();
        let direct = Graph::from_edges(
            7,
            &[
                (0, 4),
                (0, 5),
                (0, 6),
                (4, 1),
                (5, 2),
                (6, 3),
                (4, 5),
                (5, 6),
                (4, 6),
            ],
        )
        .unwrap();
        assert_eq!(member, direct);
        assert_eq!(class_c_member(&named::path(4)).unwrap().n(), 7);
        assert!(crate::is_isomorphic(
            &class_c_member(&named::path(4)).unwrap(),
            &named::path(7)
        ));
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_path(&named::path(5)).unwrap().len(), 5);
        assert_eq!(longest_path(&named::spider(1, 2, 3)).unwrap().len(), 6);
    }
}
