//! Cut-rank, ordering widths and linear rank-width.

mod exact;
mod lift;
mod tree;

pub use exact::{exact_lrw, exact_lrw_with, ExactOptions, DEFAULT_EXACT_CAP};
pub use lift::{lift_ordering, LiftKind, Lifted};
pub use tree::{tree_lrw, tree_pathwidth};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{is_permutation, Graph};

/// GF(2) rank of a list of bit rows.
pub fn gf2_rank(rows: impl IntoIterator<Item = VertexSet>) -> usize {
    let mut basis: Vec<(usize, VertexSet)> = Vec::new();
    for mut row in rows {
        for &(pivot, b) in &basis {
            if row.contains(pivot) {
                row = row.symmetric_difference(&b);
            }
        }
        if let Some(pivot) = row.last() {
            // Keep the basis reduced so later rows only need one pass.
            for entry in basis.iter_mut() {
                if entry.1.contains(pivot) {
                    entry.1 = entry.1.symmetric_difference(&row);
                }
            }
            basis.push((pivot, row));
        }
    }
    basis.len()
}

/// Rank over GF(2) of the adjacency block between `x` and its complement.
pub fn cutrank(g: &Graph, x: &VertexSet) -> usize {
    let x = x.intersection(&g.vertices());
    let y = g.vertices().difference(&x);
    let (small, other) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    gf2_rank(small.iter().map(|v| g.neighbors(v).intersection(&other)))
}

/// A vertex ordering with its prefix cut-ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthCertificate {
    pub ordering: Vec<usize>,
    /// Entry `i` is the cut-rank of the first `i + 1` vertices; `n - 1` entries.
    pub prefix_cutranks: Vec<usize>,
    pub width: usize,
}

impl WidthCertificate {
    /// Recomputes every prefix cut-rank on `g` and compares.
    pub fn verify(&self, g: &Graph) -> bool {
        ordering_width(g, &self.ordering).is_ok_and(|c| c == *self)
    }
}

/// Certifies the width of `ordering`, the maximum cut-rank over its prefixes.
pub fn ordering_width(g: &Graph, ordering: &[usize]) -> Result<WidthCertificate> {
    if !is_permutation(ordering, g.n()) {
        return Err(Error::NotAPermutation);
    }
    let mut prefix = VertexSet::empty();
    let mut ranks = Vec::with_capacity(g.n().saturating_sub(1));
    for &v in ordering.iter().take(g.n().saturating_sub(1)) {
        prefix.insert(v);
        ranks.push(cutrank(g, &prefix));
    }
    let width = ranks.iter().copied().max().unwrap_or(0);
    Ok(WidthCertificate {
        ordering: ordering.to_vec(),
        prefix_cutranks: ranks,
        width,
    })
}
