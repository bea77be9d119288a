use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair of distinct points, stored with `i < j`.
///
/// Pairs are indexed in colex order, `j(j-1)/2 + i`, so that the index of a
/// pair does not depend on the domain size it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
}

impl Pair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j {
            return Err(Error::PairOrder { i, j });
        }
        Ok(Pair { i, j })
    }

    /// Builds the pair from two distinct points given in any order.
    pub fn unordered(a: usize, b: usize) -> Result<Self> {
        if a < b {
            Pair::new(a, b)
        } else {
            Pair::new(b, a)
        }
    }

    pub fn index(&self) -> usize {
        self.j * (self.j - 1) / 2 + self.i
    }

    pub fn from_index(index: usize) -> Self {
        pair_from_index(index)
    }

    pub fn contains(&self, point: usize) -> bool {
        self.i == point || self.j == point
    }

    pub fn touches(&self, other: &Pair) -> bool {
        self.contains(other.i) || self.contains(other.j)
    }
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

pub fn pair_index(i: usize, j: usize) -> Result<usize> {
    Ok(Pair::new(i, j)?.index())
}

pub fn pair_from_index(index: usize) -> Pair {
    // largest j with j(j-1)/2 <= index
    let mut j = ((1.0 + (1.0 + 8.0 * index as f64).sqrt()) / 2.0) as usize;
    while j * (j - 1) / 2 > index {
        j -= 1;
    }
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    Pair {
        i: index - j * (j - 1) / 2,
        j,
    }
}

/// All pairs over `m` points in index order.
pub fn all_pairs(m: usize) -> impl Iterator<Item = Pair> {
    (1..m).flat_map(|j| (0..j).map(move |i| Pair { i, j }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_convention() {
        assert_eq!(pair_index(0, 1).unwrap(), 0);
        assert_eq!(pair_index(1, 2).unwrap(), 2);
        assert_eq!(pair_index(2, 3).unwrap(), 5);
    }

    #[test]
    fn rejects_bad_order() {
        assert_eq!(pair_index(2, 2), Err(Error::PairOrder { i: 2, j: 2 }));
        assert!(pair_index(3, 1).is_err());
    }

    #[test]
    fn round_trip_up_to_64_points() {
        for (expected, p) in all_pairs(64).enumerate() {
            assert_eq!(p.index(), expected);
            assert_eq!(pair_from_index(expected), p);
        }
    }
}
