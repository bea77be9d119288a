use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::Result;
use crate::jumps::{check_acc_witness, check_auc_witness, check_ck_tree, stored_c3_tree, CkTree};
use crate::php::PhpShape;
use crate::search::{search_acc_witness, search_auc_witness, Decision, SearchBudget};

/// Jump-level strength of RPHP′(m, n) as established by verified witnesses
/// and exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpLevelRow {
    pub m: usize,
    pub n: usize,
    /// Largest `k <= cap` with a verified AUC_k witness.
    pub auc: Option<usize>,
    pub cap: usize,
    /// Least `k` for which AUC_k witnesses were ruled out.
    pub auc_refuted: Option<usize>,
    /// Least `k` in `2..=cap` with a verified ACC_k witness.
    pub acc: Option<usize>,
    /// ACC_2: found and verified, ruled out, or undecided.
    pub acc2: Option<bool>,
    /// The stored C_3 tree, cut down to `m` points, passes the checker.
    pub c3: bool,
}

fn restricted_c3(shape: PhpShape) -> Result<Option<CkTree>> {
    let tree = stored_c3_tree();
    if shape.m() > tree.shape().m() || shape.n() != tree.shape().n() {
        return Ok(None);
    }
    let nodes = tree
        .nodes()
        .iter()
        .map(|(s, f)| Ok((s.clone(), f.restrict(shape)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(Some(CkTree::new(tree.k(), shape, nodes)?))
}

pub fn jump_level_rows(n: usize, ms: &[usize], cap: usize, budget: &SearchBudget) -> Result<Vec<JumpLevelRow>> {
    ms.iter().map(|&m| jump_level_row(PhpShape::new(m, n)?, cap, budget)).collect()
}

fn jump_level_row(shape: PhpShape, cap: usize, budget: &SearchBudget) -> Result<JumpLevelRow> {
    let mut row = JumpLevelRow {
        m: shape.m(),
        n: shape.n(),
        auc: None,
        cap,
        auc_refuted: None,
        acc: None,
        acc2: None,
        c3: false,
    };
    for k in 1..=cap {
        match search_auc_witness(shape, k, budget)? {
            Decision::Yes(w) if check_auc_witness(&w).is_ok() => row.auc = Some(k),
            Decision::No(_) => {
                row.auc_refuted = Some(k);
                break;
            }
            _ => break,
        }
    }
    for k in 2..=cap.max(2) {
        match search_acc_witness(shape, k, budget)? {
            Decision::Yes(fs) if check_acc_witness(&fs)?.is_ok() => {
                row.acc = Some(k);
                if k == 2 {
                    row.acc2 = Some(true);
                }
                break;
            }
            Decision::No(_) if k == 2 => row.acc2 = Some(false),
            _ => {}
        }
    }
    row.c3 = restricted_c3(shape)?.is_some_and(|t| check_ck_tree(&t, false).is_ok());
    Ok(row)
}

pub fn emit_jump_levels_dot(rows: &[JumpLevelRow]) -> String {
    let mut out = String::from("digraph jump_levels {\n");
    if !rows.is_empty() {
        out.push_str("  rankdir=LR;\n  node [shape=box];\n");
    }
    for r in rows {
        let mut lines = vec![format!("({},{})'", r.m, r.n)];
        match (r.auc, r.auc_refuted) {
            (Some(k), Some(no)) => lines.push(format!("AUC_{k}, no AUC_{no}")),
            (Some(k), None) if k == r.cap => lines.push(format!("AUC_{k} (search cap)")),
            (Some(k), None) => lines.push(format!("AUC_{k}")),
            (None, Some(no)) => lines.push(format!("no AUC_{no}")),
            (None, None) => {}
        }
        match (r.acc, r.acc2) {
            (_, Some(true)) => lines.push("ACC_2".into()),
            (Some(k), Some(false)) => lines.push(format!("ACC_{k}, no ACC_2")),
            (None, Some(false)) => lines.push("no ACC_2".into()),
            (Some(k), None) => lines.push(format!("ACC_{k}")),
            (None, None) => {}
        }
        if r.c3 {
            lines.push("C_3".into());
        }
        let _ = writeln!(out, "  \"m{}\" [label=\"{}\"];", r.m, lines.join("\\n"));
    }
    for w in rows.windows(2) {
        let _ = writeln!(out, "  \"m{}\" -> \"m{}\";", w[0].m, w[1].m);
    }
    out.push_str("}\n");
    out
}
