//! Exact search: maximum disjoint families, AUC/ACC witnesses and backward
//! maps between finite problems.

mod auc;
mod bits;
mod budget;
mod colorings;
mod packing;
mod reduction;

pub use auc::{search_acc_witness, search_auc_witness};
pub use budget::{Decision, ExhaustionDigest, SearchBudget, SearchStatus};
pub use colorings::{
    canonical_count, enumerate_colorings, enumerate_colorings_with_limit, Colorings,
    DEFAULT_COLORING_LIMIT,
};
pub use packing::{
    decide_id_k, exhaustive_max_disjoint_family, family_upper_bound, max_disjoint_family,
    SearchOutcome,
};
pub use reduction::decide_reduction;

pub(crate) use packing::climb;
