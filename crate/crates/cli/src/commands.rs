use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use rphp::atlas::{
    atlas_build_cached, emit_dot, emit_jump_levels_dot, emit_json, landmark_nodes, jump_level_rows, Atlas,
    AtlasConfig, DotOptions,
};
use rphp::bridges::{
    builtin_family, mols_to_family, pad_family, padding_witness, product_family, rbibd_to_family,
    BuiltinFamilyId,
};
use rphp::designs::{
    affine_plane, gf_of_order, hamiltonian_decomposition, kirkman_system, mols_from_field,
    near_one_factorization, one_factorization, verify_design, verify_mols,
};
use rphp::io::{
    design_from_json, family_to_json, latin_from_json, latin_to_json, to_json, witness_from_json,
    witness_to_json, FamilyFile,
};
use rphp::jumps::{check_acc_witness, check_auc_witness, check_ck_tree, stored_c3_tree};
use rphp::php::{
    exceeds_square, id_problem, max_k_upper_bound, min_solution_count, php_le_idk_threshold,
    php_problem, verify_reduction_witness, FiniteProblem, FunctionFamily, PhpShape,
};
use rphp::search::{
    exhaustive_max_disjoint_family, family_upper_bound, max_disjoint_family, search_acc_witness,
    search_auc_witness, Decision, SearchBudget, SearchStatus,
};
use rphp::Error;

use crate::{AtlasArgs, AtlasCmd, BridgeCmd, Cli, Command, DesignCmd, FactorKind, FamilyCmd, JumpCmd, ReduceCmd, ScanKind};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub fn error_kind(e: &CliError) -> &'static str {
    match e {
        CliError::Io { .. } => "io",
        CliError::Core(e) => match e {
            Error::Budget { .. } => "budget",
            Error::Malformed(_) => "malformed-input",
            Error::Unsupported(_) => "unsupported",
            Error::Precondition(_) => "precondition",
            _ => "invalid-input",
        },
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn json(value: &Value, holds: bool) -> Self {
        Output {
            text: to_json(value),
            code: if holds { 0 } else { 1 },
        }
    }

    fn text(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn budget(value: &Value) -> Self {
        Output {
            text: to_json(value),
            code: 2,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn json_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn budget(cli: &Cli) -> Result<SearchBudget> {
    Ok(match (cli.budget_secs, cli.budget_nodes) {
        (None, None) => SearchBudget::default(),
        (s, k) => SearchBudget::new(s, k)?,
    })
}

fn load_family(input: &str) -> Result<FunctionFamily> {
    if let Some(id) = input.strip_prefix("builtin:") {
        let id: BuiltinFamilyId = id.parse()?;
        return Ok(builtin_family(id)?);
    }
    let file: FamilyFile = serde_json::from_str(&read(Path::new(input))?).map_err(Error::from)?;
    Ok(file.to_family()?)
}

fn parse_problem(text: &str) -> Result<FiniteProblem> {
    let bad = || Error::Malformed(format!("problem {text:?}: expected php:m,n or id:k"));
    let (kind, args) = text.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect::<std::result::Result<_, _>>()?;
    Ok(match (kind, nums.as_slice()) {
        ("php", &[m, n]) => php_problem(PhpShape::new(m, n)?)?,
        ("id", &[k]) => id_problem(k)?,
        _ => return Err(bad().into()),
    })
}

pub fn run(cli: Cli) -> Result<Output> {
    let budget = budget(&cli)?;
    match cli.command {
        Command::Family(cmd) => family(cmd, &budget),
        Command::Design(cmd) => design(cmd),
        Command::Bridge(cmd) => bridge(cmd),
        Command::Bound(s) => {
            let shape = PhpShape::new(s.m, s.n)?;
            Ok(Output::json(
                &json!({
                    "m": s.m,
                    "n": s.n,
                    "minSolutions": min_solution_count(shape),
                    "maxKUpper": max_k_upper_bound(shape),
                    "familyUpper": family_upper_bound(shape),
                    "exceedsSquare": exceeds_square(shape),
                    "idThreshold": php_le_idk_threshold(s.n),
                }),
                true,
            ))
        }
        Command::Reduce(cmd) => reduce(cmd, &budget),
        Command::Jump(cmd) => jump(cmd, &budget),
        Command::Atlas(cmd) => atlas(cmd, &budget),
    }
}

fn family(cmd: FamilyCmd, budget: &SearchBudget) -> Result<Output> {
    match cmd {
        FamilyCmd::Verify { input } => {
            let fam = load_family(&input)?;
            let shape = fam.shape();
            let mut out = json!({"m": shape.m(), "n": shape.n(), "size": fam.len()});
            let verdict = fam.check_disjoint();
            out["disjoint"] = json!(verdict.is_ok());
            if let Err(shared) = verdict {
                out["shared"] = json!({
                    "first": shared.first,
                    "second": shared.second,
                    "pair": [shared.pair.i, shared.pair.j],
                });
            }
            Ok(Output::json(&out, verdict.is_ok()))
        }
        FamilyCmd::Search { shape, exhaustive } => {
            let shape = PhpShape::new(shape.m, shape.n)?;
            let out = if exhaustive {
                exhaustive_max_disjoint_family(shape, budget)?
            } else {
                max_disjoint_family(shape, budget)?
            };
            let body = json!({
                "m": shape.m(),
                "n": shape.n(),
                "maxK": out.value,
                "upper": out.upper,
                "status": out.status,
                "source": out.source,
                "nodes": out.digest.nodes,
                "family": json_value(&FamilyFile::from_family(&out.witness)),
            });
            Ok(if out.status == SearchStatus::BudgetExhausted {
                Output::budget(&body)
            } else {
                Output::json(&body, true)
            })
        }
        FamilyCmd::Builtin { id } => {
            let id: BuiltinFamilyId = id.parse()?;
            Ok(Output::text(family_to_json(&builtin_family(id)?)))
        }
    }
}

fn design(cmd: DesignCmd) -> Result<Output> {
    let text = match cmd {
        DesignCmd::Mols { order } => {
            let squares = mols_from_field(&gf_of_order(order)?);
            if let Err(v) = verify_mols(&squares)? {
                return Err(Error::Precondition(format!("constructed squares fail: {v}")).into());
            }
            latin_to_json(order, &squares)
        }
        DesignCmd::Plane { order } => to_json(&affine_plane(order)?),
        DesignCmd::Ktr { order } => to_json(&kirkman_system(order)?),
        DesignCmd::Factorize { m, kind } => {
            let d = match kind {
                FactorKind::One => one_factorization(m)?,
                FactorKind::Near => near_one_factorization(m)?,
                FactorKind::Hamiltonian => hamiltonian_decomposition(m)?,
            };
            if let Err(v) = d.verify() {
                return Err(Error::Precondition(format!("constructed decomposition fails: {v}")).into());
            }
            to_json(&d)
        }
        DesignCmd::Verify { input } => {
            let d = design_from_json(&read(&input)?)?;
            let verdict = verify_design(&d);
            let mut out = json!({"v": d.v, "blockSize": d.block_size, "valid": verdict.is_ok()});
            if let Err(v) = &verdict {
                out["violation"] = json!(v.to_string());
            }
            return Ok(Output::json(&out, verdict.is_ok()));
        }
    };
    Ok(Output::text(text))
}

fn bridge(cmd: BridgeCmd) -> Result<Output> {
    let text = match cmd {
        BridgeCmd::MolsToFamily { input } => {
            let (order, squares) = latin_from_json(&read(&input)?)?;
            family_to_json(&mols_to_family(order, &squares)?)
        }
        BridgeCmd::RbibdToFamily { input } => {
            family_to_json(&rbibd_to_family(&design_from_json(&read(&input)?)?)?)
        }
        BridgeCmd::Product { input } => {
            let fam = load_family(&input.to_string_lossy())?;
            to_json(&FamilyFile::from_auc(&product_family(&fam)?))
        }
        BridgeCmd::Padding { shape, q, r, family } => match family {
            Some(path) => {
                let fam = load_family(&path.to_string_lossy())?;
                if (fam.shape().m(), fam.shape().n()) != (shape.m, shape.n) {
                    return Err(Error::Parameter(format!(
                        "family lives on {}, not ({},{})",
                        fam.shape(),
                        shape.m,
                        shape.n
                    ))
                    .into());
                }
                family_to_json(&pad_family(&fam, q, r)?)
            }
            None => witness_to_json(&padding_witness(shape.m, shape.n, q, r)?),
        },
    };
    Ok(Output::text(text))
}

fn reduce(cmd: ReduceCmd, budget: &SearchBudget) -> Result<Output> {
    match cmd {
        ReduceCmd::Decide { from, to, witness_out } => {
            let p = parse_problem(&from)?;
            let q = parse_problem(&to)?;
            let decision = rphp::search::decide_reduction(&p, &q, budget)?;
            let mut body = json!({"from": from, "to": to, "decision": decision.label()});
            match &decision {
                Decision::Yes(w) => {
                    body["witnessVerified"] = json!(verify_reduction_witness(&p, &q, w).is_ok());
                    if let Some(path) = witness_out {
                        write(&path, &witness_to_json(w))?;
                    }
                }
                Decision::No(d) | Decision::BudgetExhausted(d) => {
                    body["nodes"] = json!(d.nodes);
                    body["pruned"] = json!(d.pruned);
                }
            }
            Ok(match decision {
                Decision::BudgetExhausted(_) => Output::budget(&body),
                d => Output::json(&body, d.is_yes()),
            })
        }
        ReduceCmd::Verify { from, to, witness } => {
            let p = parse_problem(&from)?;
            let q = parse_problem(&to)?;
            let w = witness_from_json(&read(&witness)?)?;
            let verdict = verify_reduction_witness(&p, &q, &w);
            let mut body = json!({"from": from, "to": to, "valid": verdict.is_ok()});
            if let Err(f) = &verdict {
                body["failure"] = json!(f.to_string());
            }
            Ok(Output::json(&body, verdict.is_ok()))
        }
    }
}

fn jump(cmd: JumpCmd, budget: &SearchBudget) -> Result<Output> {
    match cmd {
        JumpCmd::CheckAuc { input } => {
            let file: FamilyFile = serde_json::from_str(&read(&input)?).map_err(Error::from)?;
            let w = file.to_auc()?;
            let verdict = check_auc_witness(&w);
            let mut body = json!({"k": w.k(), "valid": verdict.is_ok()});
            if let Err(v) = &verdict {
                body["violation"] = json!({
                    "first": v.first,
                    "second": v.second,
                    "pair": [v.pair.i, v.pair.j],
                });
            }
            Ok(Output::json(&body, verdict.is_ok()))
        }
        JumpCmd::CheckAcc { input } => {
            let file: FamilyFile = serde_json::from_str(&read(&input)?).map_err(Error::from)?;
            let fs = file.functions()?;
            let verdict = check_acc_witness(&fs)?;
            let mut body = json!({"k": fs.len() - 1, "valid": verdict.is_ok()});
            if let Err(p) = &verdict {
                body["commonSolution"] = json!([p.i, p.j]);
            }
            Ok(Output::json(&body, verdict.is_ok()))
        }
        JumpCmd::CheckCk { input, stored, strict } => {
            let tree = match (input, stored) {
                (Some(path), false) => rphp::io::ck_tree_from_json(&read(&path)?)?,
                (None, true) => stored_c3_tree(),
                _ => {
                    return Err(Error::Parameter("give either a tree file or --stored".into()).into())
                }
            };
            let verdict = check_ck_tree(&tree, strict);
            let mut body = json!({
                "k": tree.k(),
                "m": tree.shape().m(),
                "n": tree.shape().n(),
                "strict": strict,
                "valid": verdict.is_ok(),
            });
            if let Err(v) = &verdict {
                body["violation"] = json!({"pair": [v.pair.i, v.pair.j], "sigma": v.sigma});
            }
            Ok(Output::json(&body, verdict.is_ok()))
        }
        JumpCmd::Scan { kind, n, k, m } => {
            let (m, decision) = match kind {
                ScanKind::Auc => {
                    let m = m.unwrap_or(n * n + 1);
                    let d = search_auc_witness(PhpShape::new(m, n)?, k, budget)?;
                    (m, d.map(|w| json_value(&FamilyFile::from_auc(&w))))
                }
                ScanKind::Acc => {
                    let m = m.unwrap_or_else(|| n.saturating_pow(k as u32 + 1).saturating_add(1));
                    let d = search_acc_witness(PhpShape::new(m, n)?, k, budget)?;
                    (m, d.map(|fs| {
                        json!({"m": m, "n": n, "functions": fs.iter().map(|f| f.colors().to_vec()).collect::<Vec<_>>()})
                    }))
                }
            };
            let kind = match kind {
                ScanKind::Auc => "auc",
                ScanKind::Acc => "acc",
            };
            let mut body = json!({"kind": kind, "m": m, "n": n, "k": k, "decision": decision.label()});
            match decision {
                Decision::Yes(w) => {
                    body["witness"] = w;
                    Ok(Output::json(&body, true))
                }
                Decision::No(d) => {
                    body["nodes"] = json!(d.nodes);
                    Ok(Output::json(&body, false))
                }
                Decision::BudgetExhausted(d) => {
                    body["nodes"] = json!(d.nodes);
                    Ok(Output::budget(&body))
                }
            }
        }
    }
}

fn build_atlas(args: &AtlasArgs, budget: &SearchBudget) -> Result<Atlas> {
    let config = AtlasConfig::new(args.max_n, args.max_m, *budget);
    let cache = match &args.cache {
        Some(path) if path.exists() => Some(Atlas::from_json(&read(path)?)?),
        _ => None,
    };
    let atlas = atlas_build_cached(&config, cache.as_ref())?;
    if let Some(path) = &args.cache {
        write(path, &emit_json(&atlas))?;
    }
    Ok(atlas)
}

fn dot_options(args: &AtlasArgs) -> DotOptions {
    DotOptions {
        strict_only: args.strict_only,
        nodes: args.landmarks.then(landmark_nodes),
    }
}

fn atlas(cmd: AtlasCmd, budget: &SearchBudget) -> Result<Output> {
    match cmd {
        AtlasCmd::Build { atlas, dot } => {
            let built = build_atlas(&atlas, budget)?;
            if let Some(path) = dot {
                write(&path, &emit_dot(&built, &dot_options(&atlas)))?;
            }
            Ok(Output::text(emit_json(&built)))
        }
        AtlasCmd::Dot { atlas, jump_levels, n, ms, cap } => {
            if jump_levels {
                return Ok(Output::text(emit_jump_levels_dot(&jump_level_rows(n, &ms, cap, budget)?)));
            }
            let built = build_atlas(&atlas, budget)?;
            Ok(Output::text(emit_dot(&built, &dot_options(&atlas))))
        }
    }
}
