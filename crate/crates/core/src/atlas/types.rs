use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::io::WitnessFile;
use crate::php::{FunctionFamily, PhpShape};
use crate::search::SearchStatus;

/// A shape `(m, n)`. Ordered by `n`, then `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub m: usize,
    pub n: usize,
}

impl Node {
    pub fn new(m: usize, n: usize) -> Self {
        Node { m, n }
    }

    pub fn shape(self) -> Result<PhpShape> {
        PhpShape::new(self.m, self.n)
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.m).cmp(&(other.n, other.m))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperSource {
    CountingLemma,
    SquarePigeonhole,
    Exhaustion,
}

/// Best known family size on one shape. `maxK` is the size of the stored
/// witness; it is the exact maximum unless the status is `bracketed` or
/// `budget-exhausted`, in which case the maximum lies in
/// `maxK..=upperBound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AtlasEntry {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "maxK")]
    pub max_k: usize,
    pub status: SearchStatus,
    pub lower: String,
    pub upper: UpperSource,
    pub upper_bound: usize,
    pub budget_class: String,
    pub witness: Vec<Vec<u32>>,
}

impl AtlasEntry {
    pub fn node(&self) -> Node {
        Node::new(self.m, self.n)
    }

    pub fn family(&self) -> Result<FunctionFamily> {
        FunctionFamily::from_colors(self.node().shape()?, self.witness.clone())
    }

    /// Whether `maxK` is known to be the exact maximum.
    pub fn is_settled(&self) -> bool {
        matches!(self.status, SearchStatus::Exact | SearchStatus::BoundsMatched)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    Restriction,
    Padding,
    IdLevelDerived,
    Searched,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Restriction => "restriction",
            EdgeKind::Padding => "padding",
            EdgeKind::IdLevelDerived => "id-level-derived",
            EdgeKind::Searched => "searched",
        }
    }
}

/// `from -> to`: RPHP(to) reduces to RPHP(from).
///
/// `strict` is `Some(true)` when RPHP(from) is machine-verified not to reduce
/// back, `Some(false)` when it does, and absent when unknown. `claimed`
/// marks a separation asserted in the literature but not confirmed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEdge {
    pub from: Node,
    pub to: Node,
    pub kind: EdgeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub certificate: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub claimed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Atlas {
    pub version: String,
    pub entries: Vec<AtlasEntry>,
    pub edges: Vec<RelationEdge>,
}

impl Atlas {
    pub fn entry(&self, m: usize, n: usize) -> Option<&AtlasEntry> {
        self.entries.iter().find(|e| e.m == m && e.n == n)
    }

    pub fn edge(&self, from: Node, to: Node) -> Option<&RelationEdge> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
