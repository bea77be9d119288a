use serde::{Deserialize, Serialize};

use super::factorization::{DecompositionKind, EdgeDecomposition};
use super::field::gf_of_order;
use super::latin::{mols_from_field, LatinSquare};
use crate::error::{Error, Result};
use crate::php::Pair;

/// Points `0..v`, blocks of size `block_size`, grouped into parallel classes.
/// Every unordered point pair is covered by exactly `lambda` blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResolvableDesign {
    pub v: usize,
    pub block_size: usize,
    pub lambda: usize,
    pub classes: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignViolation {
    #[error("block {block} of class {class} has size {size}, expected {expected}")]
    BlockSize {
        class: usize,
        block: usize,
        size: usize,
        expected: usize,
    },
    #[error("point {point} in class {class} is out of range")]
    PointOutOfRange { class: usize, point: usize },
    #[error("class {class} does not partition the points: point {point} appears {count} times")]
    NotPartition { class: usize, point: usize, count: usize },
    #[error("pair {pair} lies in {count} blocks, expected {expected}")]
    Multiplicity { pair: Pair, count: usize, expected: usize },
}

impl ResolvableDesign {
    /// Sorts points within blocks, blocks within classes by minimum element.
    pub fn normalized(mut self) -> Self {
        for class in &mut self.classes {
            for block in class.iter_mut() {
                block.sort_unstable();
            }
            class.sort();
        }
        self
    }

    /// Views a one-factorization as an RBIBD(2n,2,1).
    pub fn from_one_factorization(d: &EdgeDecomposition) -> Result<Self> {
        if d.kind != DecompositionKind::OneFactorization {
            return Err(Error::Parameter(
                "only a one-factorization is a resolvable design".into(),
            ));
        }
        let classes = d
            .classes
            .iter()
            .map(|class| class.iter().map(|p| vec![p.i, p.j]).collect())
            .collect();
        Ok(ResolvableDesign {
            v: d.m,
            block_size: 2,
            lambda: 1,
            classes,
        }
        .normalized())
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().flatten()
    }
}

/// Checks block sizes, that each class partitions the points, and exact
/// pair multiplicity. Reports the first violation in that order.
pub fn verify_design(d: &ResolvableDesign) -> std::result::Result<(), DesignViolation> {
    let v = d.v;
    let mut cover = vec![0usize; v * v.saturating_sub(1) / 2];
    for (c, class) in d.classes.iter().enumerate() {
        let mut seen = vec![0usize; v];
        for (b, block) in class.iter().enumerate() {
            if block.len() != d.block_size {
                return Err(DesignViolation::BlockSize {
                    class: c,
                    block: b,
                    size: block.len(),
                    expected: d.block_size,
                });
            }
            for &x in block {
                if x >= v {
                    return Err(DesignViolation::PointOutOfRange { class: c, point: x });
                }
                seen[x] += 1;
            }
            for (s, &x) in block.iter().enumerate() {
                for &y in &block[s + 1..] {
                    if let Ok(p) = Pair::unordered(x, y) {
                        cover[p.index()] += 1;
                    }
                }
            }
        }
        if let Some(point) = seen.iter().position(|&k| k != 1) {
            return Err(DesignViolation::NotPartition {
                class: c,
                point,
                count: seen[point],
            });
        }
    }
    if let Some(idx) = cover.iter().position(|&k| k != d.lambda) {
        return Err(DesignViolation::Multiplicity {
            pair: Pair::from_index(idx),
            count: cover[idx],
            expected: d.lambda,
        });
    }
    Ok(())
}

/// Classes of the affine plane built from rows, columns and the given MOLS;
/// point `x` is cell `(x / n, x % n)`.
pub fn affine_plane_from_mols(n: usize, squares: &[LatinSquare]) -> ResolvableDesign {
    let mut classes = Vec::with_capacity(squares.len() + 2);
    classes.push((0..n).map(|r| (0..n).map(|c| r * n + c).collect()).collect());
    classes.push((0..n).map(|c| (0..n).map(|r| r * n + c).collect()).collect());
    for sq in squares {
        let mut blocks = vec![Vec::with_capacity(n); n];
        for x in 0..n * n {
            blocks[sq.get(x / n, x % n)].push(x);
        }
        classes.push(blocks);
    }
    ResolvableDesign {
        v: n * n,
        block_size: n,
        lambda: 1,
        classes,
    }
    .normalized()
}

/// The affine plane of order `n`, an RBIBD(n², n, 1) with `n + 1` classes.
pub fn affine_plane(n: usize) -> Result<ResolvableDesign> {
    if !matches!(n, 2 | 3 | 4 | 5 | 7 | 8 | 9) {
        return Err(Error::Unsupported(format!(
            "affine plane of order {n} is not constructed (supported: 2,3,4,5,7,8,9)"
        )));
    }
    let field = gf_of_order(n)?;
    Ok(affine_plane_from_mols(n, &mols_from_field(&field)))
}

// A classical KTS(15), each row one parallel class.
const KTS15: [[[usize; 3]; 5]; 7] = [
    [[0, 1, 2], [3, 7, 11], [4, 9, 14], [5, 10, 12], [6, 8, 13]],
    [[0, 3, 4], [1, 7, 9], [2, 12, 13], [5, 8, 14], [6, 10, 11]],
    [[0, 5, 6], [1, 8, 10], [2, 11, 14], [3, 9, 13], [4, 7, 12]],
    [[0, 7, 8], [1, 11, 13], [2, 4, 5], [3, 10, 14], [6, 9, 12]],
    [[0, 9, 10], [1, 12, 14], [2, 3, 6], [4, 8, 11], [5, 7, 13]],
    [[0, 11, 12], [1, 3, 5], [2, 8, 9], [4, 10, 13], [6, 7, 14]],
    [[0, 13, 14], [1, 4, 6], [2, 7, 10], [3, 8, 12], [5, 9, 11]],
];

/// A Kirkman triple system of order 9 or 15. Other orders have to be
/// imported from a design file.
pub fn kirkman_system(v: usize) -> Result<ResolvableDesign> {
    match v {
        9 => affine_plane(3),
        15 => Ok(ResolvableDesign {
            v: 15,
            block_size: 3,
            lambda: 1,
            classes: KTS15
                .iter()
                .map(|class| class.iter().map(|b| b.to_vec()).collect())
                .collect(),
        }
        .normalized()),
        _ => Err(Error::Unsupported(format!(
            "Kirkman triple system of order {v} is not constructed; supply it via import"
        ))),
    }
}
