use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wall-clock and node limits for a search; at least one is finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    secs: Option<f64>,
    nodes: Option<u64>,
}

impl SearchBudget {
    pub fn new(secs: Option<f64>, nodes: Option<u64>) -> Result<Self> {
        if secs.is_none() && nodes.is_none() {
            return Err(Error::Parameter("a budget needs a time or node limit".into()));
        }
        if secs.is_some_and(|s| !(s > 0.0)) {
            return Err(Error::Parameter("time limit must be positive".into()));
        }
        Ok(SearchBudget { secs, nodes })
    }

    pub fn secs(secs: f64) -> Self {
        SearchBudget {
            secs: Some(secs),
            nodes: None,
        }
    }

    pub fn nodes(nodes: u64) -> Self {
        SearchBudget {
            secs: None,
            nodes: Some(nodes),
        }
    }

    /// A node limit no desk-scale search reaches.
    pub fn unbounded_nodes() -> Self {
        Self::nodes(u64::MAX)
    }

    pub fn time_limit(&self) -> Option<f64> {
        self.secs
    }

    pub fn node_limit(&self) -> Option<u64> {
        self.nodes
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            deadline: self.secs.map(|s| Instant::now() + Duration::from_secs_f64(s)),
            node_limit: self.nodes.unwrap_or(u64::MAX),
            nodes: 0,
            pruned: 0,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::secs(600.0)
    }
}

#[derive(Debug)]
pub(crate) struct OutOfBudget;

/// Node counter shared by one search.
#[derive(Debug)]
pub(crate) struct Meter {
    deadline: Option<Instant>,
    node_limit: u64,
    pub nodes: u64,
    pub pruned: u64,
}

impl Meter {
    pub fn tick(&mut self) -> std::result::Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(OutOfBudget);
        }
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(OutOfBudget);
                }
            }
        }
        Ok(())
    }

    pub fn digest(&self) -> ExhaustionDigest {
        ExhaustionDigest {
            nodes: self.nodes,
            pruned: self.pruned,
        }
    }
}

/// Search statistics attached to "no" and budget-exhausted answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExhaustionDigest {
    pub nodes: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No(ExhaustionDigest),
    BudgetExhausted(ExhaustionDigest),
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No(_) => "no",
            Decision::BudgetExhausted(_) => "budget-exhausted",
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Decision<V> {
        match self {
            Decision::Yes(w) => Decision::Yes(f(w)),
            Decision::No(d) => Decision::No(d),
            Decision::BudgetExhausted(d) => Decision::BudgetExhausted(d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Exact,
    BoundsMatched,
    Bracketed,
    BudgetExhausted,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Exact => "exact",
            SearchStatus::BoundsMatched => "bounds-matched",
            SearchStatus::Bracketed => "bracketed",
            SearchStatus::BudgetExhausted => "budget-exhausted",
        }
    }
}
