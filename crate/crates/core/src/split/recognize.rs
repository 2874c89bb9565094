//! Recognizers read off canonical split decompositions, one component at a time.

use crate::error::Result;
use crate::graph::Graph;

use super::{decompose_canonical, BagKind, SplitDecomposition};

fn per_component(g: &Graph, test: impl Fn(&SplitDecomposition) -> bool) -> Result<bool> {
    for comp in g.components() {
        let d = decompose_canonical(&g.induced(&comp))?;
        if !test(&d) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn no_prime(d: &SplitDecomposition) -> bool {
    d.bags().iter().all(|b| b.kind != BagKind::Prime)
}

/// Every bag of every component is a star or complete.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    per_component(g, no_prime).expect("components are connected")
}

/// Distance-hereditary with a path as decomposition tree, per component.
pub fn lrw_at_most_1(g: &Graph) -> bool {
    per_component(g, |d| {
        no_prime(d) && (0..d.bags().len()).all(|b| d.tree().degree(b) <= 2)
    })
    .expect("components are connected")
}

/// Distance-hereditary and every bag with at least three marked edges is complete.
pub fn is_in_class_m(g: &Graph) -> bool {
    per_component(g, |d| {
        no_prime(d)
            && d.bags()
                .iter()
                .all(|b| b.marker_count() < 3 || b.kind == BagKind::Complete)
    })
    .expect("components are connected")
}
