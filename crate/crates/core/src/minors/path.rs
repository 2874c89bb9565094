//! Long induced paths reached by pivoting along a path of bags.
//!
//! Along a path of bags in a canonical split decomposition at least half
//! the bags are stars. Pivots are chosen star by star until no star centre
//! points along the path; the centres then form an induced path, extended
//! by one leaf at each end.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{decompose_canonical, BagKind, Node, SplitDecomposition};

use super::search::{ContainmentWitness, PivotSequence, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathExtraction {
    pub sequence: PivotSequence,
    /// An induced path of the replayed graph, in path order.
    pub path: Vec<usize>,
    /// Number of star bags on the bag path.
    pub stars: usize,
}

impl PathExtraction {
    /// Witness that `P_k` is a pivot-minor of the source, keeping the first
    /// `k` path vertices.
    pub fn witness(&self, n: usize, k: usize) -> Result<ContainmentWitness> {
        if k > self.path.len() {
            return Err(Error::precondition("path is shorter than requested"));
        }
        let keep: crate::VertexSet = self.path[..k].iter().collect();
        let mut steps = self.sequence.steps.clone();
        steps.extend(PivotSequence::delete_all_but(n, &keep));
        let iso = keep
            .iter()
            .map(|v| self.path.iter().position(|&p| p == v).unwrap())
            .collect();
        Ok(ContainmentWitness {
            sequence: PivotSequence::new(steps),
            iso,
        })
    }
}

/// Local indices of the markers of `path[p]` that point to the previous and
/// the next bag of the path.
fn path_markers(
    d: &SplitDecomposition,
    path: &[usize],
    p: usize,
) -> (Option<usize>, Option<usize>) {
    let mut prev = None;
    let mut next = None;
    for (local, id) in d.bags()[path[p]].markers() {
        let other = d.partner(id).0;
        if p > 0 && other == path[p - 1] {
            prev = Some(local);
        }
        if p + 1 < path.len() && other == path[p + 1] {
            next = Some(local);
        }
    }
    (prev, next)
}

/// Lowest unmarked vertex represented by node `local` of bag `b`.
fn represented(d: &SplitDecomposition, b: usize, local: usize) -> Result<usize> {
    if let Node::Vertex(x) = d.bags()[b].nodes[local] {
        return Ok(x);
    }
    for x in 0..d.vertex_count() {
        if d.representatives(x)?.contains(&(b, local)) {
            return Ok(x);
        }
    }
    Err(Error::structure("marker represents no vertex"))
}

fn off_path(d: &SplitDecomposition, path: &[usize], p: usize) -> Vec<usize> {
    let (prev, next) = path_markers(d, path, p);
    (0..d.bags()[path[p]].len())
        .filter(|&i| Some(i) != prev && Some(i) != next)
        .collect()
}

fn star_centre(d: &SplitDecomposition, b: usize) -> Option<usize> {
    match d.bags()[b].kind {
        BagKind::Star { center } => Some(center),
        _ => None,
    }
}

/// Whether the centre of the star `path[p]` points along the path.
fn centre_on_path(d: &SplitDecomposition, path: &[usize], p: usize) -> Result<bool> {
    let c =
        star_centre(d, path[p]).ok_or_else(|| Error::structure("pivoting changed a star bag"))?;
    let (prev, next) = path_markers(d, path, p);
    Ok(Some(c) == prev || Some(c) == next)
}

/// Pivots `g` until a canonical split decomposition path of `2n - 4` bags
/// yields an induced path on at least `n` vertices.
///
/// The whole longest bag path is used, so the path may be longer than
/// `n`. Among valid choices the lowest-numbered vertex is taken.
pub fn extract_induced_path_by_pivots(g: &Graph, n: usize) -> Result<PathExtraction> {
    if n < 3 {
        return Err(Error::precondition("path length must be at least 3"));
    }
    let mut d = decompose_canonical(g)?;
    if d.bags().iter().any(|b| b.kind == BagKind::Prime) {
        return Err(Error::precondition("graph is not distance-hereditary"));
    }
    let path = d.longest_bag_path();
    if path.len() < 2 * n - 4 {
        return Err(Error::precondition(format!(
            "longest bag path has {} bags, fewer than {}",
            path.len(),
            2 * n - 4
        )));
    }
    let stars: Vec<usize> = (0..path.len())
        .filter(|&p| star_centre(&d, path[p]).is_some())
        .collect();
    let mut steps = Vec::new();
    for (k, &p) in stars.iter().enumerate() {
        if !centre_on_path(&d, &path, p)? {
            continue;
        }
        let b = path[p];
        let c = star_centre(&d, b).unwrap();
        let (prev, _) = path_markers(&d, &path, p);
        let (v, w) = if k == 0 {
            (
                represented(&d, b, off_path(&d, &path, p)[0])?,
                represented(&d, b, c)?,
            )
        } else if Some(c) == prev {
            let before = path[p - 1];
            if d.bags()[before].kind != BagKind::Complete {
                return Err(Error::structure(
                    "a star centre points at a neighbouring star leaf",
                ));
            }
            (
                represented(&d, before, off_path(&d, &path, p - 1)[0])?,
                represented(&d, b, off_path(&d, &path, p)[0])?,
            )
        } else {
            let after = path[p + 1];
            let (towards, _) = path_markers(&d, &path, p + 1);
            let towards = towards.expect("the next bag points back");
            let bag = &d.bags()[after].graph;
            let start = off_path(&d, &path, p + 1)
                .into_iter()
                .find(|&i| bag.has_edge(i, towards))
                .ok_or_else(|| Error::structure("no node of the next bag is linked back"))?;
            (
                represented(&d, after, start)?,
                represented(&d, b, off_path(&d, &path, p)[0])?,
            )
        };
        d = d.pivot(v, w)?;
        steps.push(Step::Pivot { u: v, v: w });
        if centre_on_path(&d, &path, p)? {
            return Err(Error::structure(
                "pivot did not move the star centre off the path",
            ));
        }
    }
    for &p in &stars {
        if centre_on_path(&d, &path, p)? {
            return Err(Error::structure(
                "a later pivot moved an earlier star centre",
            ));
        }
    }
    let (first, last) = (stars[0], *stars.last().unwrap());
    let leaf = |p: usize, avoid: Option<usize>, skip: Option<usize>| -> Option<usize> {
        let c = star_centre(&d, path[p]).unwrap();
        (0..d.bags()[path[p]].len()).find(|&i| i != c && Some(i) != avoid && Some(i) != skip)
    };
    // End leaves must not point towards the other stars; a lone star only
    // needs two distinct leaves.
    let lone = first == last;
    let start_leaf = leaf(
        first,
        path_markers(&d, &path, first).1.filter(|_| !lone),
        None,
    )
    .ok_or_else(|| Error::structure("first star has no free leaf"))?;
    let end_leaf = leaf(
        last,
        path_markers(&d, &path, last).0.filter(|_| !lone),
        lone.then_some(start_leaf),
    )
    .ok_or_else(|| Error::structure("last star has no free leaf"))?;
    let mut vertices = vec![represented(&d, path[first], start_leaf)?];
    for &p in &stars {
        vertices.push(represented(&d, path[p], star_centre(&d, path[p]).unwrap())?);
    }
    vertices.push(represented(&d, path[last], end_leaf)?);

    let sequence = PivotSequence::new(steps);
    let h = sequence.replay(g)?;
    debug_assert_eq!(h, d.recompose());
    if !is_induced_path(&h, &vertices) {
        return Err(Error::structure(
            "extracted vertices do not form an induced path",
        ));
    }
    Ok(PathExtraction {
        sequence,
        path: vertices,
        stars: stars.len(),
    })
}

/// Whether the listed vertices form an induced path in this order.
pub fn is_induced_path(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    let distinct: crate::VertexSet = vertices.iter().collect();
    distinct.len() == k
        && (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(vertices[i], vertices[j]) == (j == i + 1)))
}
