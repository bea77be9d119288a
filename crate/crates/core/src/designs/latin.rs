use serde::{Deserialize, Serialize};

use super::field::FieldTable;
use crate::error::{Error, Result};

/// An `order x order` array in which every symbol `< order` occurs once per
/// row and once per column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MolsViolation {
    #[error("square {square} is not Latin: symbol {symbol} repeats in {line}")]
    NotLatin {
        square: usize,
        line: String,
        symbol: usize,
    },
    #[error("squares {first} and {second} repeat the symbol pair {symbols:?} at cell {cell:?}")]
    NotOrthogonal {
        first: usize,
        second: usize,
        cell: (usize, usize),
        symbols: (usize, usize),
    },
}

impl LatinSquare {
    /// Wraps a grid; the Latin property is checked by [`LatinSquare::check`].
    pub fn from_grid(grid: Vec<Vec<usize>>) -> Result<Self> {
        let order = grid.len();
        if order == 0 || grid.iter().any(|row| row.len() != order) {
            return Err(Error::Malformed("Latin square grid must be square and nonempty".into()));
        }
        if grid.iter().flatten().any(|&s| s >= order) {
            return Err(Error::Malformed(format!("symbol out of range for order {order}")));
        }
        Ok(LatinSquare { order, grid })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn grid(&self) -> &[Vec<usize>] {
        &self.grid
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.grid[row][col]
    }

    /// Returns `(line description, repeated symbol)` for the first row or
    /// column with a repeat.
    pub fn check(&self) -> std::result::Result<(), (String, usize)> {
        let n = self.order;
        for r in 0..n {
            let mut seen = vec![false; n];
            for c in 0..n {
                let s = self.grid[r][c];
                if std::mem::replace(&mut seen[s], true) {
                    return Err((format!("row {r}"), s));
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for r in 0..n {
                let s = self.grid[r][c];
                if std::mem::replace(&mut seen[s], true) {
                    return Err((format!("column {c}"), s));
                }
            }
        }
        Ok(())
    }
}

/// Checks that every square is Latin and every two are orthogonal. An empty
/// list is vacuously fine; mixed orders are an input error.
pub fn verify_mols(squares: &[LatinSquare]) -> Result<std::result::Result<(), MolsViolation>> {
    let Some(first) = squares.first() else {
        return Ok(Ok(()));
    };
    let n = first.order();
    if let Some(bad) = squares.iter().find(|s| s.order() != n) {
        return Err(Error::Parameter(format!(
            "mixed square orders {n} and {}",
            bad.order()
        )));
    }
    for (k, sq) in squares.iter().enumerate() {
        if let Err((line, symbol)) = sq.check() {
            return Ok(Err(MolsViolation::NotLatin {
                square: k,
                line,
                symbol,
            }));
        }
    }
    for a in 0..squares.len() {
        for b in a + 1..squares.len() {
            let mut seen = vec![false; n * n];
            for r in 0..n {
                for c in 0..n {
                    let (x, y) = (squares[a].get(r, c), squares[b].get(r, c));
                    if std::mem::replace(&mut seen[x * n + y], true) {
                        return Ok(Err(MolsViolation::NotOrthogonal {
                            first: a,
                            second: b,
                            cell: (r, c),
                            symbols: (x, y),
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// The `q - 1` squares `L_a(x, y) = a*x + y`, `a` running over the nonzero
/// field elements in table order.
pub fn mols_from_field(field: &FieldTable) -> Vec<LatinSquare> {
    let q = field.order();
    (1..q)
        .map(|a| {
            let grid = (0..q)
                .map(|x| (0..q).map(|y| field.add(field.mul(a, x), y)).collect())
                .collect();
            LatinSquare { order: q, grid }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::field::gf_of_order;

    #[test]
    fn small_orders() {
        assert_eq!(mols_from_field(&gf_of_order(2).unwrap()).len(), 1);
        for q in [3, 4, 5] {
            let sq = mols_from_field(&gf_of_order(q).unwrap());
            assert_eq!(sq.len(), q - 1);
            assert_eq!(verify_mols(&sq).unwrap(), Ok(()));
        }
    }

    #[test]
    fn a_square_is_not_orthogonal_to_itself() {
        let sq = mols_from_field(&gf_of_order(3).unwrap()).remove(0);
        let res = verify_mols(&[sq.clone(), sq]).unwrap();
        assert!(matches!(res, Err(MolsViolation::NotOrthogonal { first: 0, second: 1, .. })));
    }

    #[test]
    fn empty_and_mixed() {
        assert_eq!(verify_mols(&[]).unwrap(), Ok(()));
        let a = mols_from_field(&gf_of_order(3).unwrap()).remove(0);
        let b = mols_from_field(&gf_of_order(4).unwrap()).remove(0);
        assert!(verify_mols(&[a, b]).is_err());
    }

    #[test]
    fn detects_non_latin() {
        let sq = LatinSquare::from_grid(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(matches!(verify_mols(&[sq]).unwrap(), Err(MolsViolation::NotLatin { .. })));
        assert!(LatinSquare::from_grid(vec![vec![0, 2], vec![1, 0]]).is_err());
    }
}
