//! Explicit finite problems and reduction witnesses between them.
//!
//! Instance and solution codes are plain integers. For RPHP(m,n) an instance
//! code is the base-n encoding of the function ([`ColorFunction::code`]) and a
//! solution code is the colex pair index; for `id_k` both are `1..=k`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::coloring::ColorFunction;
use super::pair::{all_pairs, pair_from_index, Pair};
use super::shape::PhpShape;
use crate::error::{Error, Result};

pub type Code = u64;

/// Default cap on `n^m` when tabulating RPHP(m,n).
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemKind {
    Php(PhpShape),
    Identity(usize),
    Table,
}

/// A finite problem given by explicit tables.
#[derive(Debug, Clone)]
pub struct FiniteProblem {
    kind: ProblemKind,
    instances: Vec<Code>,
    solutions: Vec<Vec<Code>>,
    index: HashMap<Code, usize>,
    /// Orbit label of each solution code under the problem's automorphisms,
    /// used by search to seed the first branching decision.
    solution_orbits: BTreeMap<Code, u32>,
}

impl FiniteProblem {
    /// Builds a problem from `(instance, solutions)` rows. Every instance
    /// needs at least one solution.
    pub fn from_table(rows: Vec<(Code, Vec<Code>)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Precondition("a problem needs at least one instance".into()));
        }
        let mut instances = Vec::with_capacity(rows.len());
        let mut solutions = Vec::with_capacity(rows.len());
        let mut index = HashMap::with_capacity(rows.len());
        for (code, mut sols) in rows {
            if sols.is_empty() {
                return Err(Error::Precondition(format!("instance {code} has no solution")));
            }
            sols.sort_unstable();
            sols.dedup();
            if index.insert(code, instances.len()).is_some() {
                return Err(Error::Precondition(format!("instance {code} listed twice")));
            }
            instances.push(code);
            solutions.push(sols);
        }
        let solution_orbits = solutions
            .iter()
            .flatten()
            .map(|&c| (c, c as u32))
            .collect();
        Ok(FiniteProblem {
            kind: ProblemKind::Table,
            instances,
            solutions,
            index,
            solution_orbits,
        })
    }

    pub fn kind(&self) -> &ProblemKind {
        &self.kind
    }

    pub fn instances(&self) -> &[Code] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn solutions_at(&self, position: usize) -> &[Code] {
        &self.solutions[position]
    }

    pub fn solutions_of(&self, instance: Code) -> Option<&[Code]> {
        self.index.get(&instance).map(|&k| self.solutions[k].as_slice())
    }

    pub fn position(&self, instance: Code) -> Option<usize> {
        self.index.get(&instance).copied()
    }

    /// Every solution code that occurs for some instance, ascending.
    pub fn solution_codes(&self) -> Vec<Code> {
        self.solution_orbits.keys().copied().collect()
    }

    pub fn solution_orbit(&self, code: Code) -> Option<u32> {
        self.solution_orbits.get(&code).copied()
    }

    fn with_transitive_solutions(mut self, kind: ProblemKind) -> Self {
        for orbit in self.solution_orbits.values_mut() {
            *orbit = 0;
        }
        self.kind = kind;
        self
    }
}

/// Tabulates RPHP(m,n) with the default enumeration limit.
pub fn php_problem(shape: PhpShape) -> Result<FiniteProblem> {
    php_problem_with_limit(shape, DEFAULT_ENUMERATION_LIMIT)
}

pub fn php_problem_with_limit(shape: PhpShape, limit: u64) -> Result<FiniteProblem> {
    let total = (shape.n() as u128).checked_pow(shape.m() as u32).unwrap_or(u128::MAX);
    if total > limit as u128 {
        return Err(Error::Budget {
            what: format!("instances of RPHP{shape}"),
            needed: total,
            limit: limit as u128,
        });
    }
    let rows = (0..total as u64)
        .map(|code| {
            let f = ColorFunction::from_code(shape, code as u128).expect("code in range");
            let sols = f.solutions().indices().map(|i| i as Code).collect();
            (code, sols)
        })
        .collect();
    // point relabelings act transitively on pairs
    Ok(FiniteProblem::from_table(rows)?.with_transitive_solutions(ProblemKind::Php(shape)))
}

/// Tabulates `id_k`: instances `1..=k`, each its own unique solution.
pub fn id_problem(k: usize) -> Result<FiniteProblem> {
    if k == 0 {
        return Err(Error::Parameter("id_k needs k >= 1".into()));
    }
    let rows = (1..=k as Code).map(|j| (j, vec![j])).collect();
    Ok(FiniteProblem::from_table(rows)?.with_transitive_solutions(ProblemKind::Identity(k)))
}

/// Forward map on instances and an instance-oblivious backward map on
/// solutions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionWitness {
    pub forward: BTreeMap<Code, Code>,
    pub backward: BTreeMap<Code, Code>,
}

impl ReductionWitness {
    pub fn identity(problem: &FiniteProblem) -> Self {
        ReductionWitness {
            forward: problem.instances().iter().map(|&c| (c, c)).collect(),
            backward: problem.solution_codes().into_iter().map(|c| (c, c)).collect(),
        }
    }

    /// Drops backward entries that no forward image can reach.
    pub fn prune_backward(&mut self, target: &FiniteProblem) {
        let reachable: BTreeSet<Code> = self
            .forward
            .values()
            .filter_map(|&y| target.solutions_of(y))
            .flatten()
            .copied()
            .collect();
        self.backward.retain(|c, _| reachable.contains(c));
    }
}

/// Why a reduction witness fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessFailure {
    #[error("forward map undefined on instance {instance}")]
    ForwardUndefined { instance: Code },
    #[error("forward image {image} of instance {instance} is not a target instance")]
    ForwardNotInstance { instance: Code, image: Code },
    #[error("backward map undefined on solution {solution} of {image} = forward({instance})")]
    BackwardUndefined {
        instance: Code,
        image: Code,
        solution: Code,
    },
    #[error("backward({solution}) = {mapped} does not solve instance {instance} (via {image})")]
    WrongSolution {
        instance: Code,
        image: Code,
        solution: Code,
        mapped: Code,
    },
}

/// Checks `source <= target` via `witness`: for every source instance `x` and
/// every target solution `y` of `forward(x)`, `backward(y)` solves `x`.
pub fn verify_reduction_witness(
    source: &FiniteProblem,
    target: &FiniteProblem,
    witness: &ReductionWitness,
) -> std::result::Result<(), WitnessFailure> {
    for (pos, &instance) in source.instances().iter().enumerate() {
        let image = *witness
            .forward
            .get(&instance)
            .ok_or(WitnessFailure::ForwardUndefined { instance })?;
        let target_sols = target
            .solutions_of(image)
            .ok_or(WitnessFailure::ForwardNotInstance { instance, image })?;
        let allowed = source.solutions_at(pos);
        for &solution in target_sols {
            let mapped = *witness.backward.get(&solution).ok_or(WitnessFailure::BackwardUndefined {
                instance,
                image,
                solution,
            })?;
            if allowed.binary_search(&mapped).is_err() {
                return Err(WitnessFailure::WrongSolution {
                    instance,
                    image,
                    solution,
                    mapped,
                });
            }
        }
    }
    Ok(())
}

/// `RPHP(n+1, n) <= id_{C(n+1,2)}`: send `f` to the index of its least
/// colliding pair (plus one, since `id_k` instances start at 1).
pub fn php_to_pair_identity(n: usize) -> Result<(FiniteProblem, FiniteProblem, ReductionWitness)> {
    let shape = PhpShape::new(n + 1, n)?;
    let php = php_problem(shape)?;
    let k = shape.pair_count();
    let id = id_problem(k)?;
    let mut w = ReductionWitness::default();
    for (pos, &code) in php.instances().iter().enumerate() {
        let least = php.solutions_at(pos)[0];
        w.forward.insert(code, least + 1);
    }
    for idx in 0..k as Code {
        w.backward.insert(idx + 1, idx);
    }
    Ok((php, id, w))
}

/// `id_{C(n+1,2)} <= RPHP(n+1, n)`: the instance for pair `{i,j}` merges `j`
/// into `i` and keeps the remaining points distinct.
pub fn pair_identity_to_php(n: usize) -> Result<(FiniteProblem, FiniteProblem, ReductionWitness)> {
    let shape = PhpShape::new(n + 1, n)?;
    let php = php_problem(shape)?;
    let k = shape.pair_count();
    let id = id_problem(k)?;
    let mut w = ReductionWitness::default();
    for p in all_pairs(n + 1) {
        let f = pair_collapse(shape, p)?;
        w.forward.insert(p.index() as Code + 1, f.code() as Code);
        w.backward.insert(p.index() as Code, p.index() as Code + 1);
    }
    Ok((id, php, w))
}

/// The function on `n+1` points whose only solution is `pair`.
pub fn pair_collapse(shape: PhpShape, pair: Pair) -> Result<ColorFunction> {
    if shape.m() != shape.n() + 1 {
        return Err(Error::Parameter(format!("pair collapse needs m = n+1, got {shape}")));
    }
    ColorFunction::from_fn(shape, |x| match x.cmp(&pair.j) {
        std::cmp::Ordering::Less => x,
        std::cmp::Ordering::Equal => pair.i,
        std::cmp::Ordering::Greater => x - 1,
    })
}

/// Decodes a solution code of RPHP into its pair.
pub fn solution_pair(code: Code) -> Pair {
    pair_from_index(code as usize)
}
