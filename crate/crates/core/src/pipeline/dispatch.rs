//! Per-component route selection for `(K3, S_{1,2,2})`-free graphs and
//! the complement route for claw-pivot-minor-free graphs.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::constructions::families::is_k3_s122_free;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::claw_pm_free_by_patterns;
use crate::width::{lift_ordering, LiftKind, WidthCertificate};

use super::bipartite::{bipartite_component, twin_walk_component};
use super::c5::{c5_ordering_around, find_induced_c5, C5Evidence, C5_CASE_BOUND};
use super::chain::ChainBlocks;
use super::{certify, on_components};

pub const CLAW_BOUND: usize = 59;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "bipartite-2p2")]
    Bipartite2P2,
    #[serde(rename = "bipartite-p1+2p2")]
    BipartiteP1Plus2P2,
    #[serde(rename = "bipartite-s122-p7")]
    BipartiteS122P7,
    #[serde(rename = "non-bipartite-c5-free")]
    NonBipartiteC5Free,
    #[serde(rename = "c5-case")]
    C5Case,
}

impl Route {
    /// Width bound the route guarantees.
    pub fn bound(self) -> usize {
        match self {
            Route::Bipartite2P2 => 1,
            Route::C5Case => C5_CASE_BOUND,
            _ => 3,
        }
    }
}

/// Intermediate objects of a route, in the component's own numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Artifacts {
    Chain {
        blocks: ChainBlocks,
    },
    /// Chain blocks of `G x (a, b)` and the base certificate there.
    ComplementedChain {
        a: VertexSet,
        b: VertexSet,
        blocks: Vec<ChainBlocks>,
        base: WidthCertificate,
    },
    /// False-twin classes and the walk certificate of the contraction.
    TwinWalk {
        classes: Vec<VertexSet>,
        base: WidthCertificate,
    },
    C5(Box<C5Evidence>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEvidence {
    /// Vertices of the input graph; the `k`-th smallest is vertex `k` of
    /// the component.
    pub vertices: VertexSet,
    pub route: Route,
    pub artifacts: Artifacts,
    /// Width of the component ordering on the component.
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DispatchEvidence {
    /// `true` when the input was complemented first.
    pub complemented: bool,
    pub components: Vec<ComponentEvidence>,
    /// The bound the returned certificate was checked against.
    pub bound: usize,
}

fn component_route(c: &Graph) -> Result<(Vec<usize>, Route, Artifacts)> {
    if c.is_bipartite() {
        return bipartite_component(c);
    }
    match find_induced_c5(c) {
        None => {
            let (ord, art) = twin_walk_component(c, true)?;
            Ok((ord, Route::NonBipartiteC5Free, art))
        }
        Some(cycle) => {
            let (cert, ev) = c5_ordering_around(c, cycle)?;
            Ok((cert.ordering, Route::C5Case, Artifacts::C5(Box::new(ev))))
        }
    }
}

fn dispatch(g: &Graph) -> Result<(Vec<usize>, Vec<ComponentEvidence>)> {
    on_components(g, |c, map| {
        let (ord, route, artifacts) = component_route(c)?;
        let width = certify(c, &ord, route.bound(), "component route")?.width;
        let vertices = map.new_to_old.iter().collect();
        Ok((
            ord,
            ComponentEvidence {
                vertices,
                route,
                artifacts,
                width,
            },
        ))
    })
}

/// A certificate of width at most 58 (at most 3 without an induced `C5`)
/// for a `(K3, S_{1,2,2})`-free graph.
pub fn k3_s122_ordering(g: &Graph) -> Result<(WidthCertificate, DispatchEvidence)> {
    if !is_k3_s122_free(g) {
        return Err(Error::precondition("graph is not (K3, S122)-free"));
    }
    let (ordering, components) = dispatch(g)?;
    let bound = components
        .iter()
        .map(|c| c.route.bound())
        .max()
        .unwrap_or(0);
    let cert = certify(g, &ordering, bound, "dispatch")?;
    Ok((
        cert,
        DispatchEvidence {
            complemented: false,
            components,
            bound,
        },
    ))
}

/// A certificate of width at most 59 for a connected claw-pivot-minor-free
/// graph, built on its complement.
pub fn claw_pm_free_ordering(g: &Graph) -> Result<(WidthCertificate, DispatchEvidence)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !claw_pm_free_by_patterns(g) {
        return Err(Error::precondition("graph has a claw pivot-minor"));
    }
    let h = g.complement();
    if !is_k3_s122_free(&h) {
        return Err(Error::structure("complement is not (K3, S122)-free"));
    }
    let (base, mut evidence) = k3_s122_ordering(&h)?;
    let lifted = lift_ordering(&LiftKind::Complement, &h, &base, g)?;
    evidence.complemented = true;
    evidence.bound = CLAW_BOUND.min(evidence.bound + 1);
    let cert = certify(
        g,
        &lifted.certificate.ordering,
        evidence.bound,
        "complement route",
    )?;
    Ok((cert, evidence))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{claw_pm_free_instance, k3_s122_free_instance, Shape};
    use crate::constructions::named;
    use crate::width::exact_lrw;

    #[test]
    fn examples() {
        let c7 = named::cycle(7).unwrap();
        let (cert, ev) = k3_s122_ordering(&c7).unwrap();
        assert_eq!(ev.components[0].route, Route::NonBipartiteC5Free);
        assert!(cert.width <= 3);
        assert_eq!(exact_lrw(&c7).unwrap().0, 2);
        let (_, ev) = k3_s122_ordering(&named::cycle(4).unwrap()).unwrap();
        assert_eq!(ev.components[0].route, Route::Bipartite2P2);
        assert!(k3_s122_ordering(&named::complete(3)).is_err());

        let c5 = named::cycle(5).unwrap();
        let (cert, ev) = claw_pm_free_ordering(&c5).unwrap();
        assert!(ev.complemented && cert.width <= CLAW_BOUND);
        assert_eq!(exact_lrw(&c5).unwrap().0, 2);
        for n in 1..7 {
            let (cert, _) = claw_pm_free_ordering(&named::complete(n)).unwrap();
            assert!(cert.width <= 1);
        }
        assert!(claw_pm_free_ordering(&named::claw()).is_err());
    }

    #[test]
    fn generated_against_dp() {
        for seed in 0..40 {
            for shape in Shape::ALL {
                let g = k3_s122_free_instance(seed, shape, 14);
                let (cert, ev) = k3_s122_ordering(&g).unwrap();
                assert!(cert.verify(&g) && cert.width <= ev.bound);
                assert!(exact_lrw(&g).unwrap().0 <= cert.width);
            }
            let g = claw_pm_free_instance(seed, 12);
            let (cert, _) = claw_pm_free_ordering(&g).unwrap();
            assert!(cert.width <= CLAW_BOUND);
            assert!(exact_lrw(&g).unwrap().0 <= 3);
        }
    }

    #[test]
    fn evidence_serializes() {
        let g = k3_s122_free_instance(5, Shape::C5Growth, 12);
        let (_, ev) = k3_s122_ordering(&g).unwrap();
        let json = serde_json::to_string(&ev).unwrap();
        let back: DispatchEvidence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ev);
    }
}
