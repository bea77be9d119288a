use crate::error::{Error, Result};
use crate::php::{choose2, PhpShape};
use crate::search::{search_acc_witness, search_auc_witness, Decision, SearchBudget};

use super::AucWitness;
use crate::php::ColorFunction;

/// Exhausts canonical tuples on `(n²+1, n)` for an AUC_k witness. Only the
/// `n = 2` regime is within the declared budget.
pub fn auc_impossibility_scan(n: usize, k: usize) -> Result<Decision<AucWitness>> {
    if n != 2 {
        return Err(Error::Budget {
            what: format!("AUC scan on ({},{n})", n * n + 1),
            needed: n as u128,
            limit: 2,
        });
    }
    let shape = PhpShape::new(n * n + 1, n)?;
    search_auc_witness(shape, k, &SearchBudget::unbounded_nodes())
}

/// The default target `k = C(n+1, 2) + 1`.
pub fn auc_impossibility_default(n: usize) -> Result<Decision<AucWitness>> {
    auc_impossibility_scan(n, choose2(n + 1) + 1)
}

/// Exhausts canonical `(k+1)`-tuples on `(n^{k+1}+1, n)` for an ACC_k
/// witness; `n = 2, k = 2` only.
pub fn acc_impossibility_scan(n: usize, k: usize) -> Result<Decision<Vec<ColorFunction>>> {
    if (n, k) != (2, 2) {
        return Err(Error::Budget {
            what: format!("ACC_{k} scan for n = {n}"),
            needed: (n as u128).saturating_pow(k as u32 + 1) + 1,
            limit: 9,
        });
    }
    let shape = PhpShape::new(n.pow(k as u32 + 1) + 1, n)?;
    search_acc_witness(shape, k, &SearchBudget::unbounded_nodes())
}
