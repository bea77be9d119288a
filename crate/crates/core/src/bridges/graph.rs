use crate::designs::{hamiltonian_decomposition, near_one_factorization, one_factorization};
use crate::error::{Error, Result};
use crate::php::{ColorFunction, FunctionFamily, Pair, PhpShape, SolutionSet};

/// Closed form `α(m,n)` for `2n+1 >= m > n >= 2`.
///
/// At `m = 2n+1` the formula gives `n`, which the construction only reaches
/// for `n >= 3`; see [`graph_decomp_family`].
pub fn alpha(m: usize, n: usize) -> Result<usize> {
    check_range(m, n)?;
    let r = m - n;
    Ok(if m % 2 == 0 {
        (m - 1) * (m / (2 * r))
    } else {
        ((m - 1) / 2 * (m / r)).max(m * ((m - 1) / (2 * r)))
    })
}

/// `k(m,n) = max { α(m',n) : m' in [m, 2n+1] }`.
pub fn k_value(m: usize, n: usize) -> Result<usize> {
    check_range(m, n)?;
    (m..=2 * n + 1).map(|mp| alpha(mp, n)).try_fold(0, |a, b| Ok(a.max(b?)))
}

fn check_range(m: usize, n: usize) -> Result<()> {
    if n < 2 || m <= n || m > 2 * n + 1 {
        return Err(Error::Parameter(format!(
            "graph decomposition needs 2n+1 >= m > n >= 2, got ({m},{n})"
        )));
    }
    Ok(())
}

fn matching_function(shape: PhpShape, edges: &[Pair]) -> ColorFunction {
    let blocks: Vec<Vec<usize>> = edges.iter().map(|p| vec![p.i, p.j]).collect();
    ColorFunction::from_blocks(shape, &blocks).expect("a matching of size m - n")
}

/// Disjoint family on exactly `(m, n)` from a decomposition of `K_m`.
pub fn decomposition_family_at(m: usize, n: usize) -> Result<Vec<ColorFunction>> {
    check_range(m, n)?;
    let shape = PhpShape::new(m, n)?;
    let r = m - n;
    if m % 2 == 0 {
        let d = one_factorization(m)?;
        return Ok(d
            .classes
            .iter()
            .flat_map(|class| class.chunks_exact(r).map(|g| matching_function(shape, g)))
            .collect());
    }
    if m == 2 * n + 1 {
        return Ok(wide_odd_family(shape));
    }
    // every t-th edge of each Hamiltonian cycle, t = floor(m / r)
    let t = m / r;
    let ham = hamiltonian_decomposition(m)?;
    let from_cycles: Vec<ColorFunction> = ham
        .classes
        .iter()
        .flat_map(|cycle| {
            (0..t).map(move |s| {
                let edges: Vec<Pair> = (0..r).map(|u| cycle[s + u * t]).collect();
                matching_function(shape, &edges)
            })
        })
        .collect();
    let near = near_one_factorization(m)?;
    let from_near: Vec<ColorFunction> = near
        .classes
        .iter()
        .flat_map(|class| class.chunks_exact(r).map(|g| matching_function(shape, g)))
        .collect();
    Ok(if from_near.len() > from_cycles.len() {
        from_near
    } else {
        from_cycles
    })
}

/// `m = 2n+1`: a Hamiltonian cycle holds no matching of size `n+1`, so each
/// cycle `v_0 .. v_2n` instead contributes the fibers `{v_s-1, v_s, v_s+1}`
/// and alternate pairs after it. The triangle adds the chord
/// `{v_s-1, v_s+1}`, and the rotation `s` of each cycle is chosen by
/// backtracking so chords avoid every other function's solutions. For
/// `n = 2` no choice works and a single function is returned.
fn wide_odd_family(shape: PhpShape) -> Vec<ColorFunction> {
    let m = shape.m();
    let cycles = hamiltonian_decomposition(m)
        .expect("m is odd")
        .cycles()
        .expect("Hamiltonian");
    let candidate = |cycle: &[usize], s: usize| {
        let v = |a: usize| cycle[(s + a) % m];
        let mut blocks = vec![vec![v(m - 1), v(0), v(1)]];
        blocks.extend((2..m - 1).step_by(2).map(|a| vec![v(a), v(a + 1)]));
        ColorFunction::from_blocks(shape, &blocks).expect("blocks partition the cycle")
    };
    fn place(
        c: usize,
        cycles: &[Vec<usize>],
        used: &mut SolutionSet,
        chosen: &mut Vec<ColorFunction>,
        candidate: &dyn Fn(&[usize], usize) -> ColorFunction,
    ) -> bool {
        if c == cycles.len() {
            return true;
        }
        for s in 0..cycles[c].len() {
            let f = candidate(&cycles[c], s);
            let sol = f.solutions();
            if !sol.is_disjoint(used) {
                continue;
            }
            let saved = used.clone();
            *used = used.union(&sol);
            chosen.push(f);
            if place(c + 1, cycles, used, chosen, candidate) {
                return true;
            }
            chosen.pop();
            *used = saved;
        }
        false
    }
    let mut used = SolutionSet::empty(shape);
    let mut chosen = Vec::new();
    if place(0, &cycles, &mut used, &mut chosen, &candidate) {
        chosen
    } else {
        vec![candidate(&cycles[0], 0)]
    }
}

/// Largest graph-decomposition family on `(m, n)`: builds on each
/// `m' in [m, 2n+1]` and restricts to the first `m` points. The first
/// `m'` of maximal size wins.
pub fn graph_decomp_family(m: usize, n: usize) -> Result<FunctionFamily> {
    check_range(m, n)?;
    let shape = PhpShape::new(m, n)?;
    let mut best: Option<Vec<ColorFunction>> = None;
    for mp in m..=2 * n + 1 {
        let fs = decomposition_family_at(mp, n)?;
        if best.as_ref().map_or(true, |b| fs.len() > b.len()) {
            best = Some(fs);
        }
    }
    let functions = best
        .expect("interval is nonempty")
        .iter()
        .map(|f| f.restrict(shape).map(|g| g.canonical()))
        .collect::<Result<Vec<_>>>()?;
    FunctionFamily::new(functions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(alpha(10, 5).unwrap(), 9);
        assert_eq!(alpha(9, 4).unwrap(), 4);
        assert_eq!(k_value(7, 5).unwrap(), 9);
        assert!(alpha(12, 5).is_err());
    }

    #[test]
    fn examples() {
        for (m, n, size) in [(9, 4, 4), (7, 5, 9), (10, 5, 9)] {
            let fam = graph_decomp_family(m, n).unwrap();
            assert_eq!(fam.len(), size, "({m},{n})");
            assert!(fam.is_disjoint());
        }
    }

    #[test]
    fn five_two_falls_back_to_one_function() {
        assert_eq!(graph_decomp_family(5, 2).unwrap().len(), 1);
    }

    #[test]
    fn sizes_match_closed_form() {
        for n in 2..=8 {
            for m in n + 1..=2 * n + 1 {
                let fam = graph_decomp_family(m, n).unwrap();
                assert!(fam.is_disjoint(), "({m},{n})");
                let expected = if (m, n) == (5, 2) { 1 } else { k_value(m, n).unwrap() };
                assert_eq!(fam.len(), expected, "({m},{n})");
            }
        }
    }
}
