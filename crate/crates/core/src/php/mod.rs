//! Color functions, solution sets, function families, explicit finite
//! problems and the counting bounds that tie them together.

mod bounds;
mod coloring;
mod family;
mod pair;
mod problem;
mod shape;
mod solutions;

pub use bounds::{
    choose2, exceeds_square, max_k_upper_bound, min_solution_count, php_le_idk_threshold,
};
pub use coloring::ColorFunction;
pub use family::{common_solutions, is_disjoint_family, FunctionFamily, SharedSolution};
pub use pair::{all_pairs, pair_from_index, pair_index, Pair};
pub use problem::{
    id_problem, pair_collapse, pair_identity_to_php, php_problem, php_problem_with_limit,
    php_to_pair_identity, solution_pair, verify_reduction_witness, Code, FiniteProblem,
    ProblemKind, ReductionWitness, WitnessFailure, DEFAULT_ENUMERATION_LIMIT,
};
pub use shape::PhpShape;
pub use solutions::SolutionSet;

/// Solutions of `f`.
pub fn solutions(f: &ColorFunction) -> SolutionSet {
    f.solutions()
}

/// The reduction `id_k <= RPHP(m,n)` induced by a family: `l -> f_l`, and a
/// pair goes back to the first member it solves. Valid iff the family is
/// disjoint.
pub fn family_witness(family: &FunctionFamily) -> ReductionWitness {
    let mut w = ReductionWitness::default();
    for (l, f) in family.functions().iter().enumerate() {
        w.forward.insert(l as Code + 1, f.code() as Code);
    }
    for p in all_pairs(family.shape().m()) {
        if let Some(l) = family.solver_of(p) {
            w.backward.insert(p.index() as Code, l as Code + 1);
        }
    }
    w
}
