//! Width-3 orderings of bipartite `S_{1,2,2}`-free graphs and of graphs
//! that reduce to a path or cycle after contracting false twins.

use crate::constructions::named;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::is_h_free;
use crate::width::{lift_ordering, ordering_width, LiftKind, WidthCertificate};

use super::chain::{chain_blocks, chain_ordering_with_blocks, check_bipartite};
use super::dispatch::{Artifacts, Route};
use super::{certify, on_components, walk_order};

/// `c` connected bipartite `(P1 + 2P2)`-free: complement across the
/// bipartition, chain-order each component, lift back.
pub(crate) fn p1_2p2_component(c: &Graph) -> Result<(Vec<usize>, Artifacts)> {
    let (a, b) = c
        .bipartition()
        .ok_or_else(|| Error::precondition("graph is not bipartite"))?;
    let h = c.bipartite_complement(&a, &b)?;
    let (base, blocks) = chain_ordering_with_blocks(&h).map_err(|e| match e {
        Error::Precondition(msg) => Error::structure(format!("bipartite complement: {msg}")),
        other => other,
    })?;
    let lifted = lift_ordering(&LiftKind::BipartiteComplement { a, b }, &h, &base, c)?;
    let cert = lifted.certificate;
    if cert.width > 3 {
        return Err(Error::structure(format!(
            "lifted chain ordering has width {}",
            cert.width
        )));
    }
    Ok((
        cert.ordering,
        Artifacts::ComplementedChain { a, b, blocks, base },
    ))
}

/// `c` connected: contract false-twin classes, walk the resulting path or
/// cycle and expand the classes back.
pub(crate) fn twin_walk_component(
    c: &Graph,
    expect_cycle: bool,
) -> Result<(Vec<usize>, Artifacts)> {
    let classes = c.false_twin_classes();
    let (reduced, _) = c.contract_twins(&classes)?;
    if reduced.max_degree() > 2 {
        return Err(Error::structure(format!(
            "twin-reduced graph has a vertex of degree {}",
            reduced.max_degree()
        )));
    }
    if expect_cycle && (reduced.n() < 3 || (0..reduced.n()).any(|v| reduced.degree(v) != 2)) {
        return Err(Error::structure(
            "false-twin reduction is not an induced cycle",
        ));
    }
    let base = ordering_width(&reduced, &walk_order(&reduced)?)?;
    let lifted = lift_ordering(
        &LiftKind::TwinExpansion {
            parts: classes.clone(),
        },
        &reduced,
        &base,
        c,
    )?;
    let cert = lifted.certificate;
    if cert.width > 3 {
        return Err(Error::structure(format!(
            "twin expansion has width {}",
            cert.width
        )));
    }
    Ok((cert.ordering, Artifacts::TwinWalk { classes, base }))
}

/// Route for one connected bipartite `S_{1,2,2}`-free component.
pub(crate) fn bipartite_component(c: &Graph) -> Result<(Vec<usize>, Route, Artifacts)> {
    if is_h_free(c, &[named::two_p2()]) {
        let blocks = chain_blocks(c)?;
        return Ok((
            blocks.ordering(),
            Route::Bipartite2P2,
            Artifacts::Chain { blocks },
        ));
    }
    if is_h_free(c, &[named::path(7)]) {
        if !is_h_free(c, &[named::p1_plus_2p2()]) {
            return Err(Error::structure(
                "connected P7-free component contains P1 + 2P2",
            ));
        }
        let (ord, art) = p1_2p2_component(c)?;
        return Ok((ord, Route::BipartiteP1Plus2P2, art));
    }
    let (ord, art) = twin_walk_component(c, false)?;
    Ok((ord, Route::BipartiteS122P7, art))
}

/// A certificate of width at most 3 for a bipartite `(P1 + 2P2)`-free graph.
pub fn p1_2p2_free_ordering(g: &Graph) -> Result<WidthCertificate> {
    check_bipartite(g)?;
    if !is_h_free(g, &[named::p1_plus_2p2()]) {
        return Err(Error::precondition("graph contains an induced P1 + 2P2"));
    }
    let (ordering, _) = on_components(g, |c, _| p1_2p2_component(c))?;
    certify(g, &ordering, 3, "P1 + 2P2 route")
}

/// A certificate of width at most 3 for a bipartite `S_{1,2,2}`-free graph.
pub fn bipartite_s122_ordering(g: &Graph) -> Result<WidthCertificate> {
    check_bipartite(g)?;
    if !is_h_free(g, &[named::spider(1, 2, 2)]) {
        return Err(Error::precondition("graph contains an induced S122"));
    }
    let (ordering, _) = on_components(g, |c, _| {
        let (ord, _, art) = bipartite_component(c)?;
        Ok((ord, art))
    })?;
    certify(g, &ordering, 3, "bipartite S122 route")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::random::{random_bipartite, rng};
    use crate::constructions::trees;
    use crate::width::exact_lrw;

    #[test]
    fn examples() {
        let c4 = named::cycle(4).unwrap();
        let cert = p1_2p2_free_ordering(&c4).unwrap();
        assert!(cert.width <= 3);
        assert_eq!(exact_lrw(&c4).unwrap().0, 1);
        assert!(
            p1_2p2_free_ordering(&named::complete_bipartite(3, 5))
                .unwrap()
                .width
                <= 3
        );
        assert!(p1_2p2_free_ordering(&named::complete(3)).is_err());
        assert!(p1_2p2_free_ordering(&named::path(6)).is_ok());
        assert!(p1_2p2_free_ordering(&named::path(7)).is_err());

        let c8 = named::cycle(8).unwrap();
        let (_, route, _) = bipartite_component(&c8).unwrap();
        assert_eq!(route, Route::BipartiteS122P7);
        assert_eq!(bipartite_s122_ordering(&c8).unwrap().width, 2);
        assert_eq!(exact_lrw(&c8).unwrap().0, 2);

        let cat = trees::caterpillar(&trees::CaterpillarSpec {
            legs: vec![2, 0, 0, 2],
        })
        .unwrap();
        assert!(bipartite_s122_ordering(&cat).unwrap().width <= 3);
        assert_eq!(exact_lrw(&cat).unwrap().0, 1);

        let p6 = named::path(6);
        let (_, route, _) = bipartite_component(&p6).unwrap();
        assert_eq!(route, Route::BipartiteP1Plus2P2);
        assert!(bipartite_s122_ordering(&p6).unwrap().width <= 3);
        assert!(bipartite_s122_ordering(&named::spider(1, 2, 2)).is_err());
    }

    #[test]
    fn random_p1_2p2_free_against_dp() {
        let mut r = rng(3);
        let mut checked = 0;
        for _ in 0..600 {
            let g = random_bipartite(&mut r, 5, 7, 0.7);
            if !is_h_free(&g, &[named::p1_plus_2p2()]) {
                continue;
            }
            checked += 1;
            let cert = p1_2p2_free_ordering(&g).unwrap();
            assert!(cert.width <= 3);
            assert!(exact_lrw(&g).unwrap().0 <= cert.width);
        }
        assert!(checked > 20, "{checked}");
    }
}
