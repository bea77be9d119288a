//! Finite fields, Latin squares, factorizations of complete graphs and
//! resolvable block designs.

mod design;
mod factorization;
mod field;
mod latin;

pub use design::{
    affine_plane, affine_plane_from_mols, kirkman_system, verify_design, DesignViolation,
    ResolvableDesign,
};
pub use factorization::{
    hamiltonian_decomposition, near_one_factorization, one_factorization, DecompositionKind,
    DecompositionViolation, EdgeDecomposition,
};
pub use field::{gf_build, gf_of_order, prime_power, FieldTable};
pub use latin::{mols_from_field, verify_mols, LatinSquare, MolsViolation};
