use crate::designs::{verify_mols, LatinSquare};
use crate::error::{Error, Result};
use crate::php::{ColorFunction, FunctionFamily, PhpShape};

/// Row function, column function, then one function per square, on
/// `(n², n)`. Point `x` is cell `(x / n, x % n)`.
pub fn mols_to_family(n: usize, squares: &[LatinSquare]) -> Result<FunctionFamily> {
    if let Some(sq) = squares.iter().find(|s| s.order() != n) {
        return Err(Error::Parameter(format!(
            "square of order {} given for order {n}",
            sq.order()
        )));
    }
    if let Err(v) = verify_mols(squares)? {
        return Err(Error::Precondition(format!("not a set of MOLS: {v}")));
    }
    let shape = PhpShape::new(n * n, n)?;
    let mut functions = vec![
        ColorFunction::from_fn(shape, |x| x / n)?,
        ColorFunction::from_fn(shape, |x| x % n)?,
    ];
    for sq in squares {
        functions.push(ColorFunction::from_fn(shape, |x| sq.get(x / n, x % n))?);
    }
    FunctionFamily::new(functions)
}

/// Inverse of [`mols_to_family`]: cell `(i, j)` of square `l` is the value
/// of member `l + 2` at the point where the first two members take `(i, j)`.
pub fn family_to_mols(family: &FunctionFamily) -> Result<Vec<LatinSquare>> {
    let shape = family.shape();
    let n = shape.n();
    if shape.m() != n * n {
        return Err(Error::Parameter(format!("MOLS need shape (n², n), got {shape}")));
    }
    if family.len() < 2 {
        return Err(Error::Precondition("need at least two members".into()));
    }
    if let Err(v) = family.check_disjoint() {
        return Err(Error::Precondition(format!("family is not disjoint: {v}")));
    }
    let fs = family.functions();
    let mut cell_point = vec![usize::MAX; n * n];
    for x in 0..n * n {
        let cell = fs[0].color(x) * n + fs[1].color(x);
        if cell_point[cell] != usize::MAX {
            return Err(Error::Precondition(
                "first two members are not jointly injective".into(),
            ));
        }
        cell_point[cell] = x;
    }
    let squares = fs[2..]
        .iter()
        .map(|f| {
            let grid = (0..n)
                .map(|i| (0..n).map(|j| f.color(cell_point[i * n + j])).collect())
                .collect();
            LatinSquare::from_grid(grid)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Err(v) = verify_mols(&squares)? {
        return Err(Error::Precondition(format!("recovered squares fail: {v}")));
    }
    Ok(squares)
}
