use std::collections::BTreeMap;

use crate::bridges::{padding_witness, restriction_witness};
use crate::error::{Error, Result};
use crate::io::WitnessFile;
use crate::php::{php_le_idk_threshold, php_problem, verify_reduction_witness, ReductionWitness};
use crate::search::{decide_reduction, Decision};

use super::build::{padding_factors, verify_entry, AtlasConfig};
use super::types::{Atlas, AtlasEntry, EdgeKind, Node, RelationEdge};

// Separations proved by hand in the literature; drawn dashed unless the
// search settles them.
const CLAIMED_SEPARATIONS: [((usize, usize), (usize, usize)); 3] =
    [((5, 2), (6, 2)), ((6, 2), (7, 2)), ((5, 3), (6, 3))];

fn table_size(node: Node) -> u128 {
    (node.n as u128).checked_pow(node.m as u32).unwrap_or(u128::MAX)
}

fn relation(from: &AtlasEntry, to: Node) -> Option<(EdgeKind, String)> {
    let f = from.node();
    if to.m >= f.m && to.n <= f.n {
        return Some((EdgeKind::Restriction, "restriction-witness".into()));
    }
    if let Some((q, r)) = padding_factors(to, f) {
        return Some((EdgeKind::Padding, format!("padding-witness:q={q},r={r}")));
    }
    let k = php_le_idk_threshold(to.n);
    (from.max_k >= k).then(|| (EdgeKind::IdLevelDerived, format!("id-level:k={k}")))
}

fn new_edge(from: Node, to: Node, kind: EdgeKind, certificate: String) -> RelationEdge {
    RelationEdge {
        from,
        to,
        kind,
        strict: None,
        reason: None,
        certificate,
        claimed: false,
        witness: None,
    }
}

pub(crate) fn build_edges(
    entries: &[AtlasEntry],
    config: &AtlasConfig,
    cache: Option<&Atlas>,
) -> Result<Vec<RelationEdge>> {
    let by_node: BTreeMap<Node, &AtlasEntry> = entries.iter().map(|e| (e.node(), e)).collect();
    let mut edges: BTreeMap<(Node, Node), RelationEdge> = BTreeMap::new();
    for from in entries {
        for to in entries {
            if from.node() == to.node() {
                continue;
            }
            if let Some((kind, cert)) = relation(from, to.node()) {
                edges.insert((from.node(), to.node()), new_edge(from.node(), to.node(), kind, cert));
            }
        }
    }

    let keys: Vec<(Node, Node)> = edges.keys().copied().collect();
    let mut found: Vec<RelationEdge> = Vec::new();
    for &(x, y) in &keys {
        let (ex, ey) = (by_node[&x], by_node[&y]);
        let (strict, reason) = if let Some(back) = edges.get(&(y, x)) {
            (Some(false), format!("equivalent: {y} -> {x} by {}", back.kind.as_str()))
        } else if ex.max_k > ey.upper_bound {
            (
                Some(true),
                format!(
                    "id_{} reduces to {x} but {y} has at most {} disjoint functions",
                    ex.max_k, ey.upper_bound
                ),
            )
        } else if x.n > y.n {
            let k = php_le_idk_threshold(y.n);
            (Some(true), format!("{y} reduces to id_{k} but {x} does not"))
        } else if table_size(x) <= config.search_table_limit as u128
            && table_size(y) <= config.search_table_limit as u128
        {
            match cached_decision(cache, x, y) {
                Some((strict, reason, back)) => {
                    found.extend(back);
                    (strict, reason)
                }
                None => {
                    let (strict, reason, back) = search_strictness(x, y, config)?;
                    found.extend(back);
                    (strict, reason)
                }
            }
        } else {
            (None, String::new())
        };
        let e = edges.get_mut(&(x, y)).expect("key present");
        e.strict = strict;
        e.reason = (!reason.is_empty()).then_some(reason);
    }
    for e in found {
        edges.entry((e.from, e.to)).or_insert(e);
    }
    for ((a, b), (c, d)) in CLAIMED_SEPARATIONS {
        if let Some(e) = edges.get_mut(&(Node::new(a, b), Node::new(c, d))) {
            if e.strict.is_none() {
                e.claimed = true;
                e.reason = Some("claimed separation, not machine-checked".into());
            }
        }
    }
    Ok(edges.into_values().collect())
}

type Strictness = (Option<bool>, String, Option<RelationEdge>);

fn cached_decision(cache: Option<&Atlas>, x: Node, y: Node) -> Option<Strictness> {
    let e = cache?.edge(x, y)?;
    let reason = e.reason.clone()?;
    if !reason.starts_with("search") {
        return None;
    }
    let back = match e.strict {
        Some(false) => Some(cache?.edge(y, x)?.clone()).filter(|b| b.kind == EdgeKind::Searched),
        _ => None,
    };
    if e.strict == Some(false) && back.is_none() {
        return None;
    }
    Some((e.strict, reason, back))
}

/// Asks the search whether RPHP(x) reduces back to RPHP(y) along a known
/// edge `x -> y`.
fn search_strictness(x: Node, y: Node, config: &AtlasConfig) -> Result<Strictness> {
    let p = php_problem(x.shape()?)?;
    let q = php_problem(y.shape()?)?;
    let decision = match decide_reduction(&p, &q, &config.budget) {
        Err(Error::Budget { .. }) => return Ok((None, String::new(), None)),
        other => other?,
    };
    Ok(match decision {
        Decision::Yes(w) => {
            let mut back = new_edge(y, x, EdgeKind::Searched, "search-witness".into());
            back.strict = Some(false);
            back.reason = Some(format!("equivalent: {x} -> {y}"));
            back.witness = Some(WitnessFile::from_witness(&w));
            (Some(false), format!("search: {x} reduces to {y}"), Some(back))
        }
        Decision::No(d) => (
            Some(true),
            format!("search: no reduction from {x} to {y} ({} nodes)", d.nodes),
            None,
        ),
        Decision::BudgetExhausted(_) => (None, "search: budget exhausted".into(), None),
    })
}

fn small(node: Node, limit: u64) -> bool {
    table_size(node) <= limit as u128
}

fn check_witness(source: Node, target: Node, w: &ReductionWitness) -> Result<()> {
    let p = php_problem(source.shape()?)?;
    let q = php_problem(target.shape()?)?;
    verify_reduction_witness(&p, &q, w)
        .map_err(|f| Error::Precondition(format!("witness {source} <= {target} fails: {f}")))
}

fn cert_number(cert: &str, key: &str) -> Result<usize> {
    cert.split([':', ','])
        .find_map(|t| t.strip_prefix(key)?.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Malformed(format!("certificate {cert:?} lacks {key}")))
}

/// Re-checks the certificate of an edge. Restriction and padding witnesses
/// are tabulated and verified when both tables have at most `table_limit`
/// instances; otherwise only their shape conditions are checked.
pub fn verify_edge(atlas: &Atlas, edge: &RelationEdge, table_limit: u64) -> Result<()> {
    let (x, y) = (edge.from, edge.to);
    let bad = |msg: String| Err(Error::Precondition(format!("edge {x} -> {y}: {msg}")));
    let tabulate = small(x, table_limit) && small(y, table_limit);
    match edge.kind {
        EdgeKind::Restriction => {
            if y.m < x.m || y.n > x.n {
                return bad("not a restriction".into());
            }
            if tabulate {
                check_witness(y, x, &restriction_witness(y.m, y.n, x.m, x.n)?)?;
            }
        }
        EdgeKind::Padding => {
            let q = cert_number(&edge.certificate, "q")?;
            let r = cert_number(&edge.certificate, "r")?;
            if x != Node::new(y.m * q + r, y.n * q + r) {
                return bad(format!("shapes do not match q={q}, r={r}"));
            }
            if tabulate {
                check_witness(y, x, &padding_witness(y.m, y.n, q, r)?)?;
            }
        }
        EdgeKind::IdLevelDerived => {
            let k = cert_number(&edge.certificate, "k")?;
            let Some(entry) = atlas.entry(x.m, x.n) else {
                return bad("source entry missing".into());
            };
            verify_entry(entry)?;
            if entry.max_k < k || k < php_le_idk_threshold(y.n) {
                return bad(format!("id_{k} does not sit between the two shapes"));
            }
        }
        EdgeKind::Searched => {
            let Some(w) = &edge.witness else {
                return bad("searched edge without witness".into());
            };
            check_witness(y, x, &w.to_witness()?)?;
        }
    }
    Ok(())
}
