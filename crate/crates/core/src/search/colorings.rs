use crate::error::{Error, Result};
use crate::php::{ColorFunction, PhpShape};

/// Default cap on the number of canonical colorings a search enumerates.
pub const DEFAULT_COLORING_LIMIT: u128 = 1 << 22;

/// Number of set partitions of `m` points into at most `n` blocks.
pub fn canonical_count(shape: PhpShape) -> u128 {
    let (m, n) = (shape.m(), shape.n());
    // Stirling numbers of the second kind, row by row
    let mut row = vec![0u128; n + 1];
    row[0] = 1;
    for _ in 0..m {
        for j in (1..=n).rev() {
            row[j] = row[j].saturating_mul(j as u128).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// Restricted-growth strings of length `m` with values below `n`, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Colorings {
    shape: PhpShape,
    current: Option<Vec<u32>>,
}

impl Iterator for Colorings {
    type Item = ColorFunction;

    fn next(&mut self) -> Option<ColorFunction> {
        let cur = self.current.take()?;
        let out = ColorFunction::new(self.shape, cur.clone()).expect("valid colors");
        let n = self.shape.n() as u32;
        let mut next = cur;
        // prefix maxima decide how far each position may grow
        let mut prefix_max = Vec::with_capacity(next.len());
        let mut mx = 0u32;
        for &c in &next {
            mx = mx.max(c);
            prefix_max.push(mx);
        }
        let mut i = next.len();
        while i > 1 {
            i -= 1;
            let limit = (prefix_max[i - 1] + 1).min(n - 1);
            if next[i] < limit {
                next[i] += 1;
                for c in &mut next[i + 1..] {
                    *c = 0;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// Canonical colorings of `shape`, one per color-relabeling class.
pub fn enumerate_colorings(shape: PhpShape) -> Result<Colorings> {
    enumerate_colorings_with_limit(shape, DEFAULT_COLORING_LIMIT)
}

pub fn enumerate_colorings_with_limit(shape: PhpShape, limit: u128) -> Result<Colorings> {
    let count = canonical_count(shape);
    if count > limit {
        return Err(Error::Budget {
            what: format!("canonical colorings of {shape}"),
            needed: count,
            limit,
        });
    }
    Ok(Colorings {
        shape,
        current: Some(vec![0; shape.m()]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(m: usize, n: usize) -> Vec<Vec<u32>> {
        enumerate_colorings(PhpShape::new(m, n).unwrap())
            .unwrap()
            .map(|f| f.colors().to_vec())
            .collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(all(3, 2), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        assert_eq!(all(4, 2).len(), 8);
        assert_eq!(all(4, 3).len(), 14);
    }

    #[test]
    fn counts_match_stirling_sums() {
        for (m, n) in [(5, 2), (6, 3), (7, 5), (9, 4)] {
            let shape = PhpShape::new(m, n).unwrap();
            let fs: Vec<_> = enumerate_colorings(shape).unwrap().collect();
            assert_eq!(fs.len() as u128, canonical_count(shape));
            assert!(fs.iter().all(|f| f.is_canonical()));
            assert!(fs.windows(2).all(|w| w[0].colors() < w[1].colors()));
        }
    }

    #[test]
    fn limit_enforced() {
        let shape = PhpShape::new(20, 5).unwrap();
        assert!(enumerate_colorings_with_limit(shape, 1000).is_err());
    }
}
