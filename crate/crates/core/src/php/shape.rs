use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Domain size `m` and color count `n` of a pigeonhole problem, `m > n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct PhpShape {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    m: usize,
    n: usize,
}

impl TryFrom<RawShape> for PhpShape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        PhpShape::new(raw.m, raw.n)
    }
}

impl From<PhpShape> for RawShape {
    fn from(s: PhpShape) -> Self {
        RawShape { m: s.m, n: s.n }
    }
}

impl PhpShape {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n < 2 || m <= n {
            return Err(Error::InvalidShape { m, n });
        }
        Ok(PhpShape { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `floor(m / n)`.
    pub fn q(&self) -> usize {
        self.m / self.n
    }

    /// `m mod n`.
    pub fn r(&self) -> usize {
        self.m % self.n
    }

    /// Number of unordered pairs of points, `C(m, 2)`.
    pub fn pair_count(&self) -> usize {
        self.m * (self.m - 1) / 2
    }
}

impl std::fmt::Display for PhpShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}
