//! Constructive orderings with certified width bounds.
//!
//! Every builder returns a [`WidthCertificate`] recomputed from scratch on
//! its input graph and checked against the bound of its route.

mod bipartite;
mod c5;
mod chain;
mod dh_bound;
mod dispatch;
mod nice;

pub use bipartite::{bipartite_s122_ordering, p1_2p2_free_ordering};
pub use c5::{c5_case_ordering, find_induced_c5, C5Evidence, C5Partition, C5_CASE_BOUND};
pub use chain::{chain_ordering, chain_ordering_with_blocks, ChainBlocks};
pub use dh_bound::{pn_pm_free_dh_bound, DhBoundOutcome, DhBoundRecord};
pub use dispatch::{
    claw_pm_free_ordering, k3_s122_ordering, Artifacts, ComponentEvidence, DispatchEvidence, Route,
    CLAW_BOUND,
};
pub use nice::{check_nice, nice_3partite_ordering};

use crate::error::{Error, Result};
use crate::graph::{Graph, IndexMap};
use crate::width::{ordering_width, WidthCertificate};

/// Recomputes the width of `ordering` on `g` and checks it against `bound`.
pub(crate) fn certify(
    g: &Graph,
    ordering: &[usize],
    bound: usize,
    what: &str,
) -> Result<WidthCertificate> {
    let cert = ordering_width(g, ordering)?;
    if cert.width > bound {
        return Err(Error::structure(format!(
            "{what}: width {} exceeds the bound {bound}",
            cert.width
        )));
    }
    Ok(cert)
}

/// Runs `f` on each component (in order of smallest vertex) and
/// concatenates the component orderings, translated back to `g`.
pub(crate) fn on_components<T>(
    g: &Graph,
    mut f: impl FnMut(&Graph, &IndexMap) -> Result<(Vec<usize>, T)>,
) -> Result<(Vec<usize>, Vec<T>)> {
    let mut ordering = Vec::with_capacity(g.n());
    let mut extra = Vec::new();
    for comp in g.components() {
        let (c, map) = g.induced_mapped(&comp);
        let (local, t) = f(&c, &map)?;
        ordering.extend(local.iter().map(|&v| map.new_to_old[v]));
        extra.push(t);
    }
    Ok((ordering, extra))
}

/// Walk order of a connected graph of maximum degree at most 2, starting
/// at an end of the path or at vertex 0 of the cycle. Width at most 2.
pub(crate) fn walk_order(g: &Graph) -> Result<Vec<usize>> {
    if g.max_degree() > 2 || !g.is_connected() {
        return Err(Error::structure("expected a path or a cycle"));
    }
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut seen = crate::VertexSet::singleton(start);
    while let Some(next) = g
        .neighbors(*order.last().unwrap())
        .difference(&seen)
        .first()
    {
        seen.insert(next);
        order.push(next);
    }
    Ok(order)
}
