//! Pivot-minors, canonical split decompositions and linear rank-width.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`], [`canon`], [`codec`]: the graph value type, its elementary
//!   rewrites (local complementation, pivoting, bipartite complementation,
//!   twin contraction), isomorphism and text formats.
//! - [`width`]: cut-rank, certified orderings, exact linear rank-width and
//!   tree path-width.
//! - [`split`]: canonical split decompositions and recognizers built on them.
//! - [`minors`]: pivot-minor and vertex-minor containment with replayable
//!   witnesses, and induced-subgraph tests.
//! - [`constructions`]: named graphs and seeded generators.
//! - [`pipeline`]: constructive ordering builders with certified bounds.
//! - [`harness`]: verification campaigns, reports and corpora.
//!
//! Loops that may run on the rayon pool take an [`Exec`] argument.

pub mod bitset;
pub mod canon;
pub mod codec;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod minors;
pub mod par;
pub mod pipeline;
pub mod split;
pub mod width;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use canon::{canonical_form, find_isomorphism, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, IndexMap};
pub use par::Exec;
