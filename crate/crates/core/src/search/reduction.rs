use std::collections::BTreeMap;

use crate::bridges::restriction_witness;
use crate::error::{Error, Result};
use crate::php::{verify_reduction_witness, Code, FiniteProblem, ProblemKind, ReductionWitness};

use super::bits;
use super::budget::{Decision, Meter, OutOfBudget, SearchBudget};

struct Model {
    /// Source solution codes; bit `b` of a domain stands for `p_codes[b]`.
    p_codes: Vec<Code>,
    /// Target solution codes, one variable each.
    q_codes: Vec<Code>,
    /// Inclusion-minimal source solution masks.
    p_masks: Vec<u64>,
    /// Inclusion-minimal target solution sets, as variable lists.
    q_sets: Vec<Vec<usize>>,
    /// Whether all source solutions form one orbit.
    p_transitive: bool,
}

impl Model {
    fn build(p: &FiniteProblem, q: &FiniteProblem) -> Result<Self> {
        let p_codes = p.solution_codes();
        if p_codes.len() > 64 {
            return Err(Error::Budget {
                what: "source solution codes".into(),
                needed: p_codes.len() as u128,
                limit: 64,
            });
        }
        let p_pos: BTreeMap<Code, usize> = p_codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let raw_p: Vec<Vec<u64>> = (0..p.len())
            .map(|i| vec![p.solutions_at(i).iter().fold(0u64, |m, c| m | 1 << p_pos[c])])
            .collect();
        let p_masks = bits::minimal_positions(&raw_p)
            .into_iter()
            .map(|i| raw_p[i][0])
            .collect();

        let q_codes = q.solution_codes();
        let q_pos: BTreeMap<Code, usize> = q_codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let words = q_codes.len().div_ceil(64);
        let raw_q: Vec<Vec<u64>> = (0..q.len())
            .map(|i| {
                let mut w = vec![0u64; words];
                for c in q.solutions_at(i) {
                    bits::set(&mut w, q_pos[c]);
                }
                w
            })
            .collect();
        let q_sets = bits::minimal_positions(&raw_q)
            .into_iter()
            .map(|i| q.solutions_at(i).iter().map(|c| q_pos[c]).collect())
            .collect();

        let orbit0 = p_codes.first().and_then(|&c| p.solution_orbit(c));
        let p_transitive = p_codes.iter().all(|&c| p.solution_orbit(c) == orbit0);
        Ok(Model {
            p_codes,
            q_codes,
            p_masks,
            q_sets,
            p_transitive,
        })
    }

    fn full(&self) -> u64 {
        if self.p_codes.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.p_codes.len()) - 1
        }
    }

    fn covers(&self, dom: &[u64], set: &[usize], mask: u64) -> bool {
        set.iter().all(|&y| dom[y] & mask != 0)
    }

    /// Narrows domains until every source instance has a viable target
    /// instance and no instance has exactly one that is not yet forced.
    fn propagate(&self, dom: &mut [u64]) -> bool {
        loop {
            let mut changed = false;
            for &mask in &self.p_masks {
                let mut viable = self.q_sets.iter().filter(|g| self.covers(dom, g, mask));
                let Some(g) = viable.next() else {
                    return false;
                };
                if viable.next().is_none() {
                    for &y in g {
                        let narrowed = dom[y] & mask;
                        if narrowed != dom[y] {
                            dom[y] = narrowed;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&self, dom: &mut Vec<u64>, meter: &mut Meter, root: bool) -> std::result::Result<bool, OutOfBudget> {
        meter.tick()?;
        if !self.propagate(dom) {
            meter.pruned += 1;
            return Ok(false);
        }
        let open = (0..dom.len())
            .filter(|&y| dom[y].count_ones() > 1)
            .min_by_key(|&y| (dom[y].count_ones(), y));
        let Some(y) = open else {
            return Ok(true);
        };
        let mut values: Vec<usize> = (0..64).filter(|b| dom[y] >> b & 1 == 1).collect();
        // one representative suffices when automorphisms move any source
        // solution to any other and nothing has been decided yet
        if root && self.p_transitive && dom[y] == self.full() {
            values.truncate(1);
        }
        for b in values {
            let mut next = dom.clone();
            next[y] = 1 << b;
            if self.search(&mut next, meter, false)? {
                *dom = next;
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn same_table(p: &FiniteProblem, q: &FiniteProblem) -> bool {
    p.instances() == q.instances() && (0..p.len()).all(|i| p.solutions_at(i) == q.solutions_at(i))
}

/// Known witnesses tried before searching.
fn shortcut(p: &FiniteProblem, q: &FiniteProblem) -> Option<ReductionWitness> {
    if same_table(p, q) {
        return Some(ReductionWitness::identity(p));
    }
    if let (ProblemKind::Php(a), ProblemKind::Php(b)) = (p.kind(), q.kind()) {
        if a.m() >= b.m() && a.n() <= b.n() {
            let w = restriction_witness(a.m(), a.n(), b.m(), b.n()).ok()?;
            return verify_reduction_witness(p, q, &w).is_ok().then_some(w);
        }
    }
    None
}

/// Decides `P <= Q` by searching for an instance-oblivious backward map.
///
/// The backward map is made total on target solution codes (extra values
/// are harmless). A partial map is viable when every source instance `x`
/// still has a target instance `g` each of whose solutions can be sent
/// into the solutions of `x`; a source instance with a single viable `g`
/// forces those domains. Only inclusion-minimal solution sets on both sides
/// matter. Branching picks the smallest open domain.
pub fn decide_reduction(
    p: &FiniteProblem,
    q: &FiniteProblem,
    budget: &SearchBudget,
) -> Result<Decision<ReductionWitness>> {
    let mut meter = budget.meter();
    if let Some(w) = shortcut(p, q) {
        return Ok(Decision::Yes(w));
    }
    let model = Model::build(p, q)?;
    let mut dom = vec![model.full(); model.q_codes.len()];
    match model.search(&mut dom, &mut meter, true) {
        Err(OutOfBudget) => Ok(Decision::BudgetExhausted(meter.digest())),
        Ok(false) => Ok(Decision::No(meter.digest())),
        Ok(true) => {
            let psi: Vec<Code> = dom
                .iter()
                .map(|d| model.p_codes[d.trailing_zeros() as usize])
                .collect();
            let mut w = ReductionWitness::default();
            for (y, &code) in model.q_codes.iter().enumerate() {
                w.backward.insert(code, psi[y]);
            }
            let q_pos: BTreeMap<Code, usize> =
                model.q_codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            for (i, &x) in p.instances().iter().enumerate() {
                let allowed = p.solutions_at(i);
                let g = (0..q.len())
                    .find(|&j| {
                        q.solutions_at(j)
                            .iter()
                            .all(|c| allowed.binary_search(&psi[q_pos[c]]).is_ok())
                    })
                    .expect("search guarantees a viable target instance");
                w.forward.insert(x, q.instances()[g]);
            }
            if let Err(e) = verify_reduction_witness(p, q, &w) {
                return Err(Error::Precondition(format!("search produced a bad witness: {e}")));
            }
            Ok(Decision::Yes(w))
        }
    }
}
