use crate::error::{Error, Result};
use crate::jumps::AucWitness;
use crate::php::{ColorFunction, FunctionFamily, PhpShape};

/// The `l` base-n digits of `x < n^l`, most significant first. When
/// `n^l <= n` the domain is widened to `n + 1` points so that the shape is
/// valid; digits are then taken of `x mod n^l`.
pub fn digit_family(n: usize, l: usize) -> Result<FunctionFamily> {
    if n < 2 || l == 0 {
        return Err(Error::Parameter(format!("digit family needs n >= 2, l >= 1, got ({n},{l})")));
    }
    let size = (n as u64)
        .checked_pow(l as u32)
        .filter(|&s| s <= 1 << 20)
        .ok_or_else(|| Error::Budget {
            what: format!("{n}^{l} points"),
            needed: (n as u128).saturating_pow(l as u32),
            limit: 1 << 20,
        })? as usize;
    let shape = PhpShape::new(size.max(n + 1), n)?;
    let functions = (0..l)
        .map(|k| {
            let weight = n.pow((l - 1 - k) as u32);
            ColorFunction::from_fn(shape, |x| (x % size) / weight % n)
        })
        .collect::<Result<Vec<_>>>()?;
    FunctionFamily::new(functions)
}

/// From a disjoint family `h` on `(m, n)` with `m <= n²`, the witness on
/// `(mn, n)` with `g(x) = x / m` and `f_l(x) = h_l(x mod m)`.
pub fn product_family(h: &FunctionFamily) -> Result<AucWitness> {
    let shape = h.shape();
    let (m, n) = (shape.m(), shape.n());
    if m > n * n {
        return Err(Error::Parameter(format!("product needs m <= n², got {shape}")));
    }
    if let Err(v) = h.check_disjoint() {
        return Err(Error::Precondition(format!("family is not disjoint: {v}")));
    }
    let big = PhpShape::new(m * n, n)?;
    let g = ColorFunction::from_fn(big, |x| x / m)?;
    let f_list = h
        .functions()
        .iter()
        .map(|hl| ColorFunction::from_fn(big, |x| hl.color(x % m)))
        .collect::<Result<Vec<_>>>()?;
    AucWitness::new(g, f_list)
}
