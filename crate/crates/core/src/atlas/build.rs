use std::collections::BTreeMap;

use crate::bridges::{constructive_family, pad_family, restrict_family};
use crate::error::{Error, Result};
use crate::php::{exceeds_square, FunctionFamily, PhpShape};
use crate::search::{canonical_count, family_upper_bound, SearchBudget, SearchStatus, DEFAULT_COLORING_LIMIT};

use super::edges::build_edges;
use super::types::{Atlas, AtlasEntry, Node, UpperSource};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq)]
pub struct AtlasConfig {
    pub max_n: usize,
    /// Largest `m` for every `n`; `None` means `n² + 1`.
    pub max_m: Option<usize>,
    pub budget: SearchBudget,
    /// Largest table size `n^m` for which strictness questions are sent to
    /// the reduction search.
    pub search_table_limit: u64,
}

impl AtlasConfig {
    pub fn new(max_n: usize, max_m: Option<usize>, budget: SearchBudget) -> Self {
        AtlasConfig {
            max_n,
            max_m,
            budget,
            search_table_limit: 1024,
        }
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for n in 2..=self.max_n {
            let top = self.max_m.unwrap_or(n * n + 1);
            out.extend((n + 1..=top).map(|m| Node::new(m, n)));
        }
        out
    }

    pub fn budget_class(&self) -> String {
        let b = &self.budget;
        match (b.time_limit(), b.node_limit()) {
            (Some(s), Some(k)) => format!("secs={s},nodes={k}"),
            (Some(s), None) => format!("secs={s}"),
            (None, Some(k)) => format!("nodes={k}"),
            (None, None) => "unbounded".into(),
        }
    }
}

impl Default for AtlasConfig {
    fn default() -> Self {
        Self::new(5, None, SearchBudget::default())
    }
}

pub fn atlas_build(config: &AtlasConfig) -> Result<Atlas> {
    atlas_build_cached(config, None)
}

/// Builds the atlas, reusing entries and search decisions from `cache` when
/// it was written by the same toolkit version. Reused entries have their
/// witnesses re-checked; searches are not re-run. Unsettled entries are only
/// reused under the same budget class.
pub fn atlas_build_cached(config: &AtlasConfig, cache: Option<&Atlas>) -> Result<Atlas> {
    if config.max_n < 2 {
        return Ok(Atlas {
            version: TOOLKIT_VERSION.into(),
            ..Atlas::default()
        });
    }
    let cache = cache.filter(|c| c.version == TOOLKIT_VERSION);
    let class = config.budget_class();
    let mut entries: BTreeMap<Node, AtlasEntry> = BTreeMap::new();
    for node in config.nodes() {
        let reusable = cache
            .and_then(|c| c.entry(node.m, node.n))
            .filter(|e| (e.is_settled() || e.budget_class == class) && verify_entry(e).is_ok());
        let entry = match reusable {
            Some(e) => e.clone(),
            None => constructive_entry(node, &class)?,
        };
        entries.insert(node, entry);
    }
    transport_lower_bounds(&mut entries)?;
    for entry in entries.values_mut() {
        if !entry.is_settled() && entry.status != SearchStatus::BudgetExhausted {
            search_entry(entry, config)?;
        }
    }
    let entries: Vec<AtlasEntry> = entries.into_values().collect();
    let edges = build_edges(&entries, config, cache)?;
    Ok(Atlas {
        version: TOOLKIT_VERSION.into(),
        entries,
        edges,
    })
}

fn upper_source(shape: PhpShape) -> UpperSource {
    if exceeds_square(shape) {
        UpperSource::SquarePigeonhole
    } else {
        UpperSource::CountingLemma
    }
}

fn set_family(entry: &mut AtlasEntry, family: &FunctionFamily, tag: String) {
    entry.max_k = family.len();
    entry.lower = tag;
    entry.witness = family.functions().iter().map(|f| f.colors().to_vec()).collect();
    entry.status = if entry.max_k >= entry.upper_bound {
        SearchStatus::BoundsMatched
    } else {
        SearchStatus::Bracketed
    };
}

fn constructive_entry(node: Node, class: &str) -> Result<AtlasEntry> {
    let shape = node.shape()?;
    let (family, tag) = constructive_family(shape)?;
    let mut entry = AtlasEntry {
        m: node.m,
        n: node.n,
        max_k: 0,
        status: SearchStatus::Bracketed,
        lower: String::new(),
        upper: upper_source(shape),
        upper_bound: family_upper_bound(shape),
        budget_class: class.into(),
        witness: Vec::new(),
    };
    set_family(&mut entry, &family, tag);
    Ok(entry)
}

/// Pushes families along restriction and padding reductions between atlas
/// shapes until nothing improves.
fn transport_lower_bounds(entries: &mut BTreeMap<Node, AtlasEntry>) -> Result<()> {
    loop {
        let mut changed = false;
        let nodes: Vec<Node> = entries.keys().copied().collect();
        for &to in &nodes {
            if entries[&to].is_settled() {
                continue;
            }
            let shape = to.shape()?;
            for &from in &nodes {
                if from == to || entries[&from].max_k <= entries[&to].max_k {
                    continue;
                }
                let source = entries[&from].family()?;
                let moved = if from.m >= to.m && from.n <= to.n {
                    Some(restrict_family(&source, shape)?)
                } else if let Some((q, r)) = padding_factors(from, to) {
                    Some(pad_family(&source, q, r)?)
                } else {
                    None
                };
                if let Some(fam) = moved {
                    let e = entries.get_mut(&to).expect("node present");
                    set_family(e, &fam, format!("transport:{from}"));
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// `(q, r)` with `to = (from.m·q + r, from.n·q + r)`, other than `(1, 0)`.
pub(crate) fn padding_factors(from: Node, to: Node) -> Option<(usize, usize)> {
    let (dm, dn) = (from.m - from.n, to.m.checked_sub(to.n)?);
    if dn % dm != 0 {
        return None;
    }
    let q = dn / dm;
    let r = to.n.checked_sub(q * from.n)?;
    (q >= 1 && r < from.m && (q, r) != (1, 0)).then_some((q, r))
}

fn search_entry(entry: &mut AtlasEntry, config: &AtlasConfig) -> Result<()> {
    let shape = entry.node().shape()?;
    if canonical_count(shape) > DEFAULT_COLORING_LIMIT {
        return Ok(());
    }
    let start = entry.family()?;
    let out = crate::search::climb(shape, start, entry.lower.clone(), entry.upper_bound, &config.budget)?;
    entry.max_k = out.value;
    entry.lower = out.source;
    entry.witness = out.witness.functions().iter().map(|f| f.colors().to_vec()).collect();
    entry.status = out.status;
    if out.status == SearchStatus::Exact {
        entry.upper = UpperSource::Exhaustion;
        entry.upper_bound = out.value;
    }
    Ok(())
}

/// Re-checks an entry: the witness is a disjoint family of size `maxK`, the
/// recorded upper bound matches its source, and the status is consistent.
pub fn verify_entry(e: &AtlasEntry) -> Result<()> {
    let bad = |msg: String| Err(Error::Precondition(format!("entry {}: {msg}", e.node())));
    let shape = e.node().shape()?;
    let family = e.family()?;
    if let Err(shared) = family.check_disjoint() {
        return bad(format!("witness is not disjoint: {shared}"));
    }
    if family.len() != e.max_k {
        return bad(format!("witness has {} functions, maxK is {}", family.len(), e.max_k));
    }
    let bound = family_upper_bound(shape);
    match e.upper {
        UpperSource::CountingLemma | UpperSource::SquarePigeonhole => {
            if e.upper != upper_source(shape) || e.upper_bound != bound {
                return bad(format!("upper bound {} does not match {bound}", e.upper_bound));
            }
        }
        UpperSource::Exhaustion => {
            if e.upper_bound > bound || e.status != SearchStatus::Exact {
                return bad("exhaustion bound is inconsistent".into());
            }
        }
    }
    let matched = e.max_k == e.upper_bound;
    let ok = match e.status {
        SearchStatus::Exact | SearchStatus::BoundsMatched => matched,
        SearchStatus::Bracketed | SearchStatus::BudgetExhausted => e.max_k < e.upper_bound,
    };
    if !ok {
        return bad(format!("status {} with maxK {} and bound {}", e.status.as_str(), e.max_k, e.upper_bound));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_factors_invert_padding() {
        let n = |m, n| Node::new(m, n);
        assert_eq!(padding_factors(n(9, 3), n(10, 4)), Some((1, 1)));
        assert_eq!(padding_factors(n(3, 2), n(6, 4)), Some((2, 0)));
        assert_eq!(padding_factors(n(3, 2), n(7, 5)), Some((2, 1)));
        assert_eq!(padding_factors(n(3, 2), n(3, 2)), None);
        assert_eq!(padding_factors(n(3, 2), n(9, 5)), None);
        // r must stay below m
        assert_eq!(padding_factors(n(3, 2), n(4, 3)), Some((1, 1)));
        assert_eq!(padding_factors(n(3, 2), n(6, 5)), None);
    }

    #[test]
    fn rectangle_and_budget_class() {
        let c = AtlasConfig::new(3, None, SearchBudget::nodes(10));
        assert_eq!(c.nodes().len(), 3 + 7);
        assert_eq!(c.budget_class(), "nodes=10");
        let c = AtlasConfig::new(3, Some(5), SearchBudget::secs(2.5));
        assert_eq!(c.nodes(), vec![Node::new(3, 2), Node::new(4, 2), Node::new(5, 2), Node::new(4, 3), Node::new(5, 3)]);
        assert_eq!(c.budget_class(), "secs=2.5");
    }

    #[test]
    fn entries_verify_and_detect_tampering() {
        let mut e = constructive_entry(Node::new(9, 4), "secs=1").unwrap();
        assert_eq!((e.max_k, e.status), (6, SearchStatus::BoundsMatched));
        verify_entry(&e).unwrap();
        e.upper_bound = 7;
        assert!(verify_entry(&e).is_err());
    }
}
