use crate::bridges::constructive_family;
use crate::error::{Error, Result};
use crate::php::{
    exceeds_square, max_k_upper_bound, min_solution_count, ColorFunction, FunctionFamily,
    PhpShape,
};

use super::bits;
use super::budget::{Decision, ExhaustionDigest, Meter, OutOfBudget, SearchBudget, SearchStatus};
use super::colorings::{canonical_count, enumerate_colorings, DEFAULT_COLORING_LIMIT};

/// Result of a maximum-family computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Size of the best family found.
    pub value: usize,
    /// Best proven upper bound.
    pub upper: usize,
    pub witness: FunctionFamily,
    /// Where the witness came from: a construction tag or `"search"`.
    pub source: String,
    pub digest: ExhaustionDigest,
}

/// Best available upper bound on disjoint family size: the counting bound,
/// or 1 once `m > n²` (two functions pair up on `n² + 1` points).
pub fn family_upper_bound(shape: PhpShape) -> usize {
    if exceeds_square(shape) {
        1
    } else {
        max_k_upper_bound(shape)
    }
}

/// Partitions of `m` into at most `n` parts, parts nonincreasing, in
/// lexicographic order of the part sequence.
pub(crate) fn fiber_partitions(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in 1..=max.min(rest) {
            cur.push(part);
            rec(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, n, &mut Vec::new(), &mut out);
    out
}

/// The function whose fibers are consecutive blocks of the given sizes.
pub(crate) fn block_function(shape: PhpShape, sizes: &[usize]) -> ColorFunction {
    let mut colors = Vec::with_capacity(shape.m());
    for (c, &s) in sizes.iter().enumerate() {
        colors.extend(std::iter::repeat(c as u32).take(s));
    }
    ColorFunction::new(shape, colors).expect("partition of m into at most n parts")
}

struct Candidate {
    f: ColorFunction,
    sol: Vec<u64>,
    cost: usize,
}

struct Packer<'a> {
    k: usize,
    min_sol: usize,
    slack: usize,
    edges: usize,
    by_min_edge: Vec<Vec<&'a Candidate>>,
    meter: Meter,
}

impl Packer<'_> {
    fn dfs(
        &mut self,
        blocked: &mut Vec<u64>,
        chosen: &mut Vec<ColorFunction>,
        cost: usize,
    ) -> std::result::Result<bool, OutOfBudget> {
        self.meter.tick()?;
        if chosen.len() == self.k {
            return Ok(true);
        }
        let free = self.edges - bits::count(blocked);
        if free < (self.k - chosen.len()) * self.min_sol {
            self.meter.pruned += 1;
            return Ok(false);
        }
        let Some(e) = bits::first_clear(blocked, self.edges) else {
            return Ok(false);
        };
        let cands = self.by_min_edge[e].clone();
        for c in cands {
            if cost + c.cost > self.slack || !bits::disjoint(&c.sol, blocked) {
                continue;
            }
            let saved = blocked.clone();
            bits::or_into(blocked, &c.sol);
            chosen.push(c.f.clone());
            if self.dfs(blocked, chosen, cost + c.cost)? {
                return Ok(true);
            }
            chosen.pop();
            *blocked = saved;
        }
        // leave e uncovered for good
        if cost < self.slack {
            bits::set(blocked, e);
            let found = self.dfs(blocked, chosen, cost + 1)?;
            bits::clear(blocked, e);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Decides `id_k <= RPHP(m,n)` by searching for `k` functions with pairwise
/// disjoint solution sets.
///
/// Any family can be relabeled so that one member has consecutive fibers,
/// so that member is fixed first. The rest are packed edge by edge: the
/// least undecided edge is either covered by a function whose least
/// solution it is, or left uncovered. Every function costs its excess over
/// the minimum solution count and every uncovered edge costs one; the total
/// may not exceed `C(m,2) - k·min`.
pub fn decide_id_k(shape: PhpShape, k: usize, budget: &SearchBudget) -> Result<Decision<FunctionFamily>> {
    if k == 0 {
        return Err(Error::Parameter("id_k needs k >= 1".into()));
    }
    let meter = budget.meter();
    if k == 1 {
        return Ok(Decision::Yes(FunctionFamily::new(vec![ColorFunction::constant(shape)])?));
    }
    let edges = shape.pair_count();
    let min_sol = min_solution_count(shape);
    if k * min_sol > edges || exceeds_square(shape) {
        return Ok(Decision::No(meter.digest()));
    }
    let slack = edges - k * min_sol;
    let count = canonical_count(shape);
    if count > DEFAULT_COLORING_LIMIT {
        return Err(Error::Budget {
            what: format!("canonical colorings of {shape}"),
            needed: count,
            limit: DEFAULT_COLORING_LIMIT,
        });
    }
    let mut candidates: Vec<Candidate> = enumerate_colorings(shape)?
        .filter_map(|f| {
            let s = f.solutions();
            let cost = s.len() - min_sol;
            (cost <= slack).then(|| Candidate {
                sol: s.words().to_vec(),
                f,
                cost,
            })
        })
        .collect();
    candidates.sort_by(|a, b| a.cost.cmp(&b.cost).then_with(|| a.f.cmp(&b.f)));
    let mut by_min_edge: Vec<Vec<&Candidate>> = vec![Vec::new(); edges];
    for c in &candidates {
        if let Some(e) = c.f.solutions().first() {
            by_min_edge[e.index()].push(c);
        }
    }
    let mut packer = Packer {
        k,
        min_sol,
        slack,
        edges,
        by_min_edge,
        meter,
    };
    for sizes in fiber_partitions(shape.m(), shape.n()) {
        let first = block_function(shape, &sizes);
        let sol = first.solutions();
        let cost = sol.len() - min_sol;
        if cost > slack {
            continue;
        }
        let mut blocked = sol.words().to_vec();
        let mut chosen = vec![first];
        match packer.dfs(&mut blocked, &mut chosen, cost) {
            Ok(true) => return Ok(Decision::Yes(FunctionFamily::new(chosen)?)),
            Ok(false) => {}
            Err(OutOfBudget) => return Ok(Decision::BudgetExhausted(packer.meter.digest())),
        }
    }
    Ok(Decision::No(packer.meter.digest()))
}

/// Maximum disjoint family. Constructions are tried first; if one meets
/// the upper bound the answer is bounds-matched, otherwise sizes above it
/// are decided by search until the first "no".
pub fn max_disjoint_family(shape: PhpShape, budget: &SearchBudget) -> Result<SearchOutcome> {
    let upper = family_upper_bound(shape);
    let (family, source) = constructive_family(shape)?;
    if family.len() >= upper {
        return Ok(SearchOutcome {
            status: SearchStatus::BoundsMatched,
            value: family.len(),
            upper,
            witness: family,
            source,
            digest: ExhaustionDigest::default(),
        });
    }
    if canonical_count(shape) > DEFAULT_COLORING_LIMIT {
        return Ok(SearchOutcome {
            status: SearchStatus::Bracketed,
            value: family.len(),
            upper,
            witness: family,
            source,
            digest: ExhaustionDigest::default(),
        });
    }
    climb(shape, family, source, upper, budget)
}

/// Maximum disjoint family by search alone, climbing from `k = 1`.
pub fn exhaustive_max_disjoint_family(shape: PhpShape, budget: &SearchBudget) -> Result<SearchOutcome> {
    let upper = family_upper_bound(shape);
    let start = FunctionFamily::new(vec![ColorFunction::constant(shape)])?;
    climb(shape, start, "search".into(), upper, budget)
}

pub(crate) fn climb(
    shape: PhpShape,
    mut best: FunctionFamily,
    mut source: String,
    upper: usize,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    for k in best.len() + 1..=upper + 1 {
        let decision = decide_id_k(shape, k, budget)?;
        let (status, digest) = match decision {
            Decision::Yes(f) => {
                best = f;
                source = "search".into();
                continue;
            }
            Decision::No(d) => (SearchStatus::Exact, d),
            Decision::BudgetExhausted(d) => (SearchStatus::BudgetExhausted, d),
        };
        return Ok(SearchOutcome {
            status,
            value: best.len(),
            upper: if status == SearchStatus::Exact { best.len() } else { upper },
            witness: best,
            source,
            digest,
        });
    }
    unreachable!("a family above the counting bound cannot exist")
}
