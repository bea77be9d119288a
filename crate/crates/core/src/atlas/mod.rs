//! A reduction atlas over a rectangle of shapes `(m, n)`: the largest
//! disjoint family on each shape (so the strongest `id_k` below it), and
//! the reductions between shapes with machine-checkable certificates.
//!
//! Arrows follow the usual drawing convention: an edge `from -> to` means
//! RPHP(to) reduces to RPHP(from).

mod build;
mod dot;
mod edges;
mod jump_levels;
mod types;

pub use build::{atlas_build, atlas_build_cached, verify_entry, AtlasConfig};
pub use dot::{emit_dot, emit_json, landmark_nodes, DotOptions};
pub use edges::verify_edge;
pub use jump_levels::{emit_jump_levels_dot, jump_level_rows, JumpLevelRow};
pub use types::{Atlas, AtlasEntry, EdgeKind, Node, RelationEdge, UpperSource};
