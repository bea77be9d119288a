use crate::error::{Error, Result};
use crate::jumps::AucWitness;
use crate::php::{ColorFunction, PhpShape};

use super::bits;
use super::budget::{Decision, Meter, OutOfBudget, SearchBudget};
use super::colorings::enumerate_colorings;
use super::packing::{block_function, fiber_partitions};

/// Picks `k` pairwise disjoint sets among `sets` (positions returned).
fn disjoint_choice(
    sets: &[Vec<u64>],
    k: usize,
    meter: &mut Meter,
) -> std::result::Result<Option<Vec<usize>>, OutOfBudget> {
    fn rec(
        sets: &[Vec<u64>],
        k: usize,
        from: usize,
        used: &mut Vec<u64>,
        chosen: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<bool, OutOfBudget> {
        meter.tick()?;
        if chosen.len() == k {
            return Ok(true);
        }
        if sets.len() - from < k - chosen.len() {
            meter.pruned += 1;
            return Ok(false);
        }
        for i in from..sets.len() {
            if !bits::disjoint(&sets[i], used) {
                continue;
            }
            let saved = used.clone();
            bits::or_into(used, &sets[i]);
            chosen.push(i);
            if rec(sets, k, i + 1, used, chosen, meter)? {
                return Ok(true);
            }
            chosen.pop();
            *used = saved;
        }
        Ok(false)
    }
    let mut used = vec![0u64; sets.first().map_or(0, Vec::len)];
    let mut chosen = Vec::new();
    Ok(rec(sets, k, 0, &mut used, &mut chosen, meter)?.then_some(chosen))
}

/// Searches for an AUC_k witness on `shape`.
///
/// Point relabelings preserve the condition, so `g` ranges over functions
/// with consecutive fibers. Each `f` only matters through its trace
/// `sol(f) ∩ sol(g)`: an empty trace lets `f` repeat `k` times, otherwise
/// `k` pairwise disjoint inclusion-minimal traces are needed.
pub fn search_auc_witness(shape: PhpShape, k: usize, budget: &SearchBudget) -> Result<Decision<AucWitness>> {
    if k == 0 {
        return Err(Error::Parameter("AUC_k needs k >= 1".into()));
    }
    let mut meter = budget.meter();
    let fs: Vec<ColorFunction> = enumerate_colorings(shape)?.collect();
    let sols: Vec<Vec<u64>> = fs.iter().map(|f| f.solutions().words().to_vec()).collect();
    for sizes in fiber_partitions(shape.m(), shape.n()) {
        let g = block_function(shape, &sizes);
        let gs = g.solutions();
        let traces: Vec<Vec<u64>> = sols.iter().map(|s| bits::and(s, gs.words())).collect();
        if let Some(i) = traces.iter().position(|t| bits::is_zero(t)) {
            return Ok(Decision::Yes(AucWitness::new(g, vec![fs[i].clone(); k])?));
        }
        let keep = bits::minimal_positions(&traces);
        let minimal: Vec<Vec<u64>> = keep.iter().map(|&i| traces[i].clone()).collect();
        match disjoint_choice(&minimal, k, &mut meter) {
            Err(OutOfBudget) => return Ok(Decision::BudgetExhausted(meter.digest())),
            Ok(Some(picked)) => {
                let f_list = picked.iter().map(|&p| fs[keep[p]].clone()).collect();
                return Ok(Decision::Yes(AucWitness::new(g, f_list)?));
            }
            Ok(None) => {}
        }
    }
    Ok(Decision::No(meter.digest()))
}

/// Searches for `k + 1` functions on `shape` with no common solution. The
/// first function is taken with consecutive fibers, the rest as a
/// nondecreasing run of canonical functions.
pub fn search_acc_witness(
    shape: PhpShape,
    k: usize,
    budget: &SearchBudget,
) -> Result<Decision<Vec<ColorFunction>>> {
    if k < 1 {
        return Err(Error::Parameter("ACC_k needs k >= 1".into()));
    }
    let mut meter = budget.meter();
    let fs: Vec<ColorFunction> = enumerate_colorings(shape)?.collect();
    let sols: Vec<Vec<u64>> = fs.iter().map(|f| f.solutions().words().to_vec()).collect();

    fn rec(
        sols: &[Vec<u64>],
        left: usize,
        from: usize,
        common: &[u64],
        chosen: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> std::result::Result<bool, OutOfBudget> {
        meter.tick()?;
        if bits::is_zero(common) {
            // repeat the last choice to fill the tuple
            let last = *chosen.last().unwrap_or(&0);
            chosen.extend(std::iter::repeat(last).take(left));
            return Ok(true);
        }
        if left == 0 {
            return Ok(false);
        }
        for i in from..sols.len() {
            chosen.push(i);
            if rec(sols, left - 1, i, &bits::and(common, &sols[i]), chosen, meter)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    for sizes in fiber_partitions(shape.m(), shape.n()) {
        let first = block_function(shape, &sizes);
        let mut chosen = Vec::new();
        match rec(&sols, k, 0, first.solutions().words(), &mut chosen, &mut meter) {
            Err(OutOfBudget) => return Ok(Decision::BudgetExhausted(meter.digest())),
            Ok(true) => {
                let mut out = vec![first];
                out.extend(chosen.iter().map(|&i| fs[i].clone()));
                out.truncate(k + 1);
                while out.len() < k + 1 {
                    out.push(out[out.len() - 1].clone());
                }
                return Ok(Decision::Yes(out));
            }
            Ok(false) => {}
        }
    }
    Ok(Decision::No(meter.digest()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jumps::{check_acc_witness, check_auc_witness};

    fn shape(m: usize, n: usize) -> PhpShape {
        PhpShape::new(m, n).unwrap()
    }

    #[test]
    fn auc_on_five_two() {
        let b = SearchBudget::secs(60.0);
        for k in [2, 3] {
            let d = search_auc_witness(shape(5, 2), k, &b).unwrap();
            assert_eq!(check_auc_witness(d.witness().unwrap()), Ok(()), "k = {k}");
        }
        assert!(search_auc_witness(shape(5, 2), 4, &b).unwrap().is_no());
    }

    #[test]
    fn auc_on_eight_two() {
        let d = search_auc_witness(shape(8, 2), 3, &SearchBudget::secs(60.0)).unwrap();
        assert_eq!(check_auc_witness(d.witness().unwrap()), Ok(()));
    }

    #[test]
    fn acc_threshold() {
        let b = SearchBudget::secs(60.0);
        let d = search_acc_witness(shape(8, 2), 2, &b).unwrap();
        assert_eq!(d.witness().unwrap().len(), 3);
        assert_eq!(check_acc_witness(d.witness().unwrap()).unwrap(), Ok(()));
        assert!(search_acc_witness(shape(9, 2), 2, &b).unwrap().is_no());
    }
}
