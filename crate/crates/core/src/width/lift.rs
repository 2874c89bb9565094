//! Transporting an ordering across complementation, bipartite
//! complementation and twin expansion.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{ordering_width, WidthCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LiftKind {
    /// `target` is the complement of the base graph.
    Complement,
    /// `target` is the base graph with adjacency toggled between `a` and `b`.
    BipartiteComplement { a: VertexSet, b: VertexSet },
    /// The base graph is `target // parts`, with parts indexed in `target`.
    TwinExpansion { parts: Vec<VertexSet> },
}

impl LiftKind {
    /// How much the width may grow.
    pub fn slack(&self) -> usize {
        match self {
            LiftKind::Complement => 1,
            LiftKind::BipartiteComplement { .. } => 2,
            LiftKind::TwinExpansion { .. } => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lifted {
    /// Certificate recomputed on the target graph.
    pub certificate: WidthCertificate,
    /// `base.width + slack`; the recomputed width never exceeds it.
    pub bound: usize,
}

pub fn lift_ordering(
    kind: &LiftKind,
    base_graph: &Graph,
    base: &WidthCertificate,
    target: &Graph,
) -> Result<Lifted> {
    if !base.verify(base_graph) {
        return Err(Error::precondition(
            "base certificate does not match its graph",
        ));
    }
    let ordering = match kind {
        LiftKind::Complement => {
            if target.complement() != *base_graph {
                return Err(Error::precondition(
                    "target is not the complement of the base graph",
                ));
            }
            base.ordering.clone()
        }
        LiftKind::BipartiteComplement { a, b } => {
            if base_graph.bipartite_complement(a, b)? != *target {
                return Err(Error::precondition(
                    "target is not the bipartite complement of the base graph",
                ));
            }
            base.ordering.clone()
        }
        LiftKind::TwinExpansion { parts } => {
            let (contracted, map) = target.contract_twins(parts)?;
            if contracted != *base_graph {
                return Err(Error::precondition(
                    "base graph is not the twin contraction of the target",
                ));
            }
            let mut class_of = vec![None; target.n()];
            for part in parts {
                if let Some(rep) = part.first() {
                    class_of[rep] = Some(*part);
                }
            }
            let mut ordering = Vec::with_capacity(target.n());
            for &w in &base.ordering {
                let old = map.new_to_old[w];
                match class_of[old] {
                    Some(part) => ordering.extend(part.iter()),
                    None => ordering.push(old),
                }
            }
            ordering
        }
    };
    let certificate = ordering_width(target, &ordering)?;
    let bound = base.width + kind.slack();
    if certificate.width > bound {
        return Err(Error::structure(format!(
            "lifted width {} exceeds bound {bound}",
            certificate.width
        )));
    }
    Ok(Lifted { certificate, bound })
}
