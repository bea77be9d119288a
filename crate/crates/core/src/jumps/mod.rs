//! Finite witness conditions for the jump-level problems AUC_k, ACC_k and
//! C_k relative to RPHP′(m,n).

mod auc;
mod ck;
mod scan;

pub use auc::{check_acc_witness, check_auc_witness, AucWitness, TripleViolation};
pub use ck::{check_ck_tree, injections, stored_c3_tree, CkTree, CkViolation, Injection};
pub use scan::{acc_impossibility_scan, auc_impossibility_default, auc_impossibility_scan};
