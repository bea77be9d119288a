use crate::error::{Error, Result};
use crate::php::{
    all_pairs, php_problem, ColorFunction, FunctionFamily, PhpShape, ReductionWitness,
};

/// `f` on `(m, n)` padded to `(mq + r, nq + r)`: block `b < q` of `m` points
/// is colored `b·n + f(x mod m)` and the last `r` points get fresh colors.
pub fn pad_function(f: &ColorFunction, q: usize, r: usize) -> Result<ColorFunction> {
    let shape = f.shape();
    let (m, n) = (shape.m(), shape.n());
    let target = padded_shape(shape, q, r)?;
    ColorFunction::from_fn(target, |x| {
        if x < m * q {
            (x / m) * n + f.color(x % m)
        } else {
            n * q + (x - m * q)
        }
    })
}

fn padded_shape(shape: PhpShape, q: usize, r: usize) -> Result<PhpShape> {
    if q == 0 || r >= shape.m() {
        return Err(Error::Parameter(format!(
            "padding needs q >= 1 and r < m, got q = {q}, r = {r}"
        )));
    }
    PhpShape::new(shape.m() * q + r, shape.n() * q + r)
}

/// `RPHP(m,n) <= RPHP(mq+r, nq+r)`; backward sends `{i,j}` to
/// `{i mod m, j mod m}`.
pub fn padding_witness(m: usize, n: usize, q: usize, r: usize) -> Result<ReductionWitness> {
    let shape = PhpShape::new(m, n)?;
    let target = padded_shape(shape, q, r)?;
    let source = php_problem(shape)?;
    let mut w = ReductionWitness::default();
    for &code in source.instances() {
        let f = ColorFunction::from_code(shape, code as u128)?;
        w.forward.insert(code, pad_function(&f, q, r)?.code() as u64);
    }
    for p in all_pairs(target.m()) {
        let (a, b) = (p.i % m, p.j % m);
        if a != b {
            let back = crate::php::Pair::unordered(a, b)?;
            w.backward.insert(p.index() as u64, back.index() as u64);
        }
    }
    Ok(w)
}

fn check_restriction(from: PhpShape, to: PhpShape) -> Result<()> {
    if from.m() < to.m() || from.n() > to.n() {
        return Err(Error::Parameter(format!(
            "restriction needs m' >= m and n' <= n, got {from} -> {to}"
        )));
    }
    Ok(())
}

/// `RPHP(m',n') <= RPHP(m,n)` for `m' >= m > n >= n'`: restrict to the first
/// `m` points; pairs map back to themselves.
pub fn restriction_witness(mp: usize, np: usize, m: usize, n: usize) -> Result<ReductionWitness> {
    let from = PhpShape::new(mp, np)?;
    let to = PhpShape::new(m, n)?;
    check_restriction(from, to)?;
    let source = php_problem(from)?;
    let mut w = ReductionWitness::default();
    for &code in source.instances() {
        let f = ColorFunction::from_code(from, code as u128)?;
        w.forward.insert(code, f.restrict(to)?.code() as u64);
    }
    for p in all_pairs(m) {
        w.backward.insert(p.index() as u64, p.index() as u64);
    }
    Ok(w)
}

/// Pushes a disjoint family along a reduction given by its forward map on
/// functions; disjointness is preserved because backward maps are
/// instance-oblivious.
pub fn transport_family(
    family: &FunctionFamily,
    forward: impl Fn(&ColorFunction) -> Result<ColorFunction>,
) -> Result<FunctionFamily> {
    let functions = family
        .functions()
        .iter()
        .map(|f| forward(f).map(|g| g.canonical()))
        .collect::<Result<Vec<_>>>()?;
    FunctionFamily::new(functions)
}

pub fn restrict_family(family: &FunctionFamily, to: PhpShape) -> Result<FunctionFamily> {
    check_restriction(family.shape(), to)?;
    transport_family(family, |f| f.restrict(to))
}

pub fn pad_family(family: &FunctionFamily, q: usize, r: usize) -> Result<FunctionFamily> {
    transport_family(family, |f| pad_function(f, q, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::php::verify_reduction_witness;

    fn shape(m: usize, n: usize) -> PhpShape {
        PhpShape::new(m, n).unwrap()
    }

    #[test]
    fn padding_formula() {
        let f = ColorFunction::parse_fibers(shape(3, 2), "(01)(2)").unwrap();
        let g = pad_function(&f, 2, 1).unwrap();
        assert_eq!(g.shape(), shape(7, 5));
        assert_eq!(g.to_fibers(), "(01)(2)(34)(5)(6)");
    }

    #[test]
    fn padding_witnesses_verify() {
        for (m, n, q, r) in [(3, 2, 2, 1), (3, 2, 1, 0), (4, 2, 2, 0), (4, 3, 1, 2)] {
            let w = padding_witness(m, n, q, r).unwrap();
            let p = php_problem(shape(m, n)).unwrap();
            let t = php_problem(shape(m * q + r, n * q + r)).unwrap();
            assert_eq!(verify_reduction_witness(&p, &t, &w), Ok(()), "({m},{n},{q},{r})");
        }
    }

    #[test]
    fn identity_padding() {
        let w = padding_witness(3, 2, 1, 0).unwrap();
        assert!(w.forward.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn restriction_witnesses_verify() {
        for (mp, np, m, n) in [(5, 2, 4, 2), (4, 2, 4, 2), (6, 2, 5, 3), (5, 3, 4, 3)] {
            let w = restriction_witness(mp, np, m, n).unwrap();
            let p = php_problem(shape(mp, np)).unwrap();
            let t = php_problem(shape(m, n)).unwrap();
            assert_eq!(verify_reduction_witness(&p, &t, &w), Ok(()), "({mp},{np})->({m},{n})");
        }
        assert!(restriction_witness(4, 2, 5, 2).is_err());
        assert!(restriction_witness(5, 3, 4, 2).is_err());
    }

    #[test]
    fn restriction_to_same_shape_is_identity() {
        let w = restriction_witness(4, 2, 4, 2).unwrap();
        assert!(w.forward.iter().all(|(a, b)| a == b));
    }
}
