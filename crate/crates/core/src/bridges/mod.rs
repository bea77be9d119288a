//! Translations between designs, disjoint families and reduction
//! witnesses.

mod builtin;
mod graph;
mod lower;
mod mols;
mod product;
mod rbibd;
mod reduce;

pub use builtin::{builtin_family, BuiltinFamilyId};
pub use lower::constructive_family;
pub use graph::{alpha, decomposition_family_at, graph_decomp_family, k_value};
pub use mols::{family_to_mols, mols_to_family};
pub use product::{digit_family, product_family};
pub use rbibd::{family_to_rbibd, rbibd_to_family};
pub use reduce::{
    pad_family, pad_function, padding_witness, restrict_family, restriction_witness,
    transport_family,
};
