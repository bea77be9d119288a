use crate::designs::{affine_plane, kirkman_system, prime_power};
use crate::error::Result;
use crate::php::{ColorFunction, FunctionFamily, PhpShape};

use super::builtin::{builtin_family, BuiltinFamilyId};
use super::graph::graph_decomp_family;
use super::rbibd::rbibd_to_family;
use super::reduce::restrict_family;

/// The largest disjoint family on `shape` obtainable from the stored
/// families and design constructions on any `(m', n')` with `m' >= m`,
/// `n' <= n`, restricted to `shape`. Returns the family and a source tag;
/// the first source of maximal size wins.
pub fn constructive_family(shape: PhpShape) -> Result<(FunctionFamily, String)> {
    let (m, n) = (shape.m(), shape.n());
    let mut best = (
        FunctionFamily::new(vec![ColorFunction::from_fn(shape, |x| x % n)?])?,
        "trivial".to_string(),
    );
    let mut offer = |fam: FunctionFamily, tag: String| -> Result<()> {
        if fam.len() > best.0.len() {
            best = (restrict_family(&fam, shape)?, tag);
        }
        Ok(())
    };
    for id in BuiltinFamilyId::ALL {
        let fam = builtin_family(id)?;
        let s = fam.shape();
        if s.m() >= m && s.n() <= n {
            offer(fam, format!("builtin:{id}"))?;
        }
    }
    for np in 2..=n {
        if m <= 2 * np + 1 {
            offer(graph_decomp_family(m.max(np + 1), np)?, format!("graph-decomp:{np}"))?;
        }
        if np * np >= m && prime_power(np).is_some() && np <= 9 {
            offer(rbibd_to_family(&affine_plane(np)?)?, format!("affine:{np}"))?;
        }
        if matches!(np, 3 | 5) && 3 * np >= m {
            offer(rbibd_to_family(&kirkman_system(3 * np)?)?, format!("kirkman:{}", 3 * np))?;
        }
    }
    debug_assert!(best.0.is_disjoint());
    Ok(best)
}
