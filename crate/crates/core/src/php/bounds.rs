//! Counting bounds on solution sets and disjoint families.

use super::shape::PhpShape;

/// Least possible number of solutions of any `f: m -> n`, `q(m - n + r)/2`
/// where `m = qn + r`. Attained exactly when every fiber has size
/// `floor(m/n)` or `ceil(m/n)`.
pub fn min_solution_count(shape: PhpShape) -> usize {
    let (m, n, q, r) = (shape.m(), shape.n(), shape.q(), shape.r());
    q * (m - n + r) / 2
}

/// Upper bound on the size of a disjoint family on `shape`:
/// `floor(m(m-1) / (q(m - n + r)))`.
pub fn max_k_upper_bound(shape: PhpShape) -> usize {
    let (m, n, q, r) = (shape.m(), shape.n(), shape.q(), shape.r());
    m * (m - 1) / (q * (m - n + r))
}

/// Least `k` with RPHP(m,n) reducible to `id_k`, namely `C(n+1, 2)`.
pub fn php_le_idk_threshold(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Beyond `m = n^2` any two functions share a solution, so families have
/// at most one member.
pub fn exceeds_square(shape: PhpShape) -> bool {
    shape.m() > shape.n() * shape.n()
}

/// `binomial(a, 2)`.
pub fn choose2(a: usize) -> usize {
    a * a.saturating_sub(1) / 2
}
