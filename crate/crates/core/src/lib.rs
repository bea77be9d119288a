//! Constructions, exact search and certificate checking for reductions
//! among the finite pigeonhole problems RPHP(m,n) and the identity problems
//! `id_k`.
//!
//! - [`php`]: color functions, solution sets, families, explicit problems
//!   and counting bounds.
//! - [`designs`]: finite fields, Latin squares, graph factorizations and
//!   resolvable designs.
//! - [`bridges`]: translations between designs, families and reduction
//!   witnesses.
//! - [`jumps`]: finite witness conditions for the jump-level problems.
//! - [`search`]: exact search for disjoint families, witnesses and
//!   backward maps.
//! - [`atlas`]: a reduction atlas over a rectangle of shapes.
//! - [`io`]: JSON file formats.

pub mod error;
pub mod atlas;
pub mod bridges;
pub mod designs;
pub mod jumps;
pub mod php;
pub mod io;
pub mod search;

pub use error::{Error, Result};
