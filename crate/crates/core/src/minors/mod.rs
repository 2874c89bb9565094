//! Pivot-minors, vertex-minors and induced subgraphs.

mod induced;
mod path;
mod search;

pub use induced::{find_induced, is_h_free};
pub use path::{extract_induced_path_by_pivots, is_induced_path, PathExtraction};
pub use search::{
    contains_minor_with, contains_pivot_minor, contains_vertex_minor, equivalence_class,
    ContainmentWitness, MinorKind, MinorOptions, PivotSequence, Step, DEFAULT_MINOR_CAP,
};

use crate::constructions::named;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The induced subgraphs whose absence characterizes connected
/// claw-pivot-minor-free graphs.
pub fn claw_obstructions() -> [Graph; 3] {
    [
        named::independent(3),
        named::wheel(4).expect("W4"),
        named::bw3(),
    ]
}

/// Every component is `(3P1, W4, bw3)`-free.
pub fn claw_pm_free_by_patterns(g: &Graph) -> bool {
    let patterns = claw_obstructions();
    g.components()
        .iter()
        .all(|c| is_h_free(&g.induced(c), &patterns))
}

/// No pivot-minor of `g` is a claw.
pub fn claw_pm_free_by_search(g: &Graph, opts: MinorOptions) -> Result<bool> {
    Ok(contains_minor_with(g, &named::claw(), MinorKind::Pivot, opts)?.is_none())
}

/// Claw-pivot-minor-freeness, computed both ways; disagreement is an error.
pub fn claw_pm_free(g: &Graph) -> Result<bool> {
    let a = claw_pm_free_by_patterns(g);
    let b = claw_pm_free_by_search(g, MinorOptions::default())?;
    if a != b {
        return Err(Error::structure(format!(
            "pattern test says {a} but pivot-minor search says {b}"
        )));
    }
    Ok(a)
}
