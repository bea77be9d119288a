use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::php::{all_pairs, ColorFunction, Pair, PhpShape};

/// A sequence of distinct values below `k`, read as a partial injection
/// from an initial segment of `k`.
pub type Injection = Vec<usize>;

/// All injections of length `< k`, in lexicographic order.
pub fn injections(k: usize) -> Vec<Injection> {
    fn extend(k: usize, cur: &mut Injection, out: &mut Vec<Injection>) {
        out.push(cur.clone());
        if cur.len() + 1 >= k {
            return;
        }
        for v in 0..k {
            if !cur.contains(&v) {
                cur.push(v);
                extend(k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(k, &mut Vec::new(), &mut out);
    out
}

/// Functions `f_σ` indexed by every injection `σ` of length `< k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkTree {
    k: usize,
    shape: PhpShape,
    nodes: BTreeMap<Injection, ColorFunction>,
}

/// A pair solved by `f_σ` for which no label `l` is avoided by every
/// extension of `σ` that also solves it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pair {pair} at node {sigma:?} admits no label")]
pub struct CkViolation {
    pub pair: Pair,
    pub sigma: Injection,
}

impl CkTree {
    pub fn new(k: usize, shape: PhpShape, nodes: BTreeMap<Injection, ColorFunction>) -> Result<Self> {
        if k < 2 {
            return Err(Error::Parameter(format!("C_k trees need k >= 2, got {k}")));
        }
        for sigma in nodes.keys() {
            let distinct = sigma.iter().enumerate().all(|(i, v)| !sigma[..i].contains(v));
            if sigma.len() >= k || !distinct || sigma.iter().any(|&v| v >= k) {
                return Err(Error::Malformed(format!("{sigma:?} is not an injection below {k}")));
            }
        }
        if let Some(f) = nodes.values().find(|f| f.shape() != shape) {
            return Err(Error::MixedShapes {
                m0: shape.m(),
                n0: shape.n(),
                m1: f.shape().m(),
                n1: f.shape().n(),
            });
        }
        if let Some(missing) = injections(k).into_iter().find(|s| !nodes.contains_key(s)) {
            return Err(Error::Malformed(format!("tree has no node for {missing:?}")));
        }
        Ok(CkTree { k, shape, nodes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shape(&self) -> PhpShape {
        self.shape
    }

    pub fn nodes(&self) -> &BTreeMap<Injection, ColorFunction> {
        &self.nodes
    }

    pub fn get(&self, sigma: &[usize]) -> Option<&ColorFunction> {
        self.nodes.get(sigma)
    }

    pub fn set(&mut self, sigma: &[usize], f: ColorFunction) -> Result<()> {
        if f.shape() != self.shape {
            return Err(Error::Parameter("node function has the wrong shape".into()));
        }
        match self.nodes.get_mut(sigma) {
            Some(slot) => {
                *slot = f;
                Ok(())
            }
            None => Err(Error::Parameter(format!("no node {sigma:?}"))),
        }
    }

    /// Labels `l < k` such that every `τ` extending `σ` with `pair` solved by
    /// `f_τ` avoids `l`. With `strict`, `τ = σ` itself is not quantified.
    pub fn admissible_labels(&self, pair: Pair, sigma: &[usize], strict: bool) -> Vec<usize> {
        let mut allowed = vec![true; self.k];
        for (tau, f) in self.nodes.range(sigma.to_vec()..) {
            if !tau.starts_with(sigma) {
                break;
            }
            if (strict && tau.len() == sigma.len()) || !f.solves(pair) {
                continue;
            }
            for &v in tau {
                allowed[v] = false;
            }
        }
        (0..self.k).filter(|&l| allowed[l]).collect()
    }
}

/// Checks the C_k tree condition, pairs in index order and nodes in
/// lexicographic order; reports the first violation.
pub fn check_ck_tree(t: &CkTree, strict: bool) -> std::result::Result<(), CkViolation> {
    for pair in all_pairs(t.shape.m()) {
        for (sigma, f) in &t.nodes {
            if f.solves(pair) && t.admissible_labels(pair, sigma, strict).is_empty() {
                return Err(CkViolation {
                    pair,
                    sigma: sigma.clone(),
                });
            }
        }
    }
    Ok(())
}

/// A C_3 tree on (8,2) rooted at `(0123)(4567)`.
pub fn stored_c3_tree() -> CkTree {
    let shape = PhpShape::new(8, 2).expect("valid shape");
    let rows: [(&[usize], &str); 10] = [
        (&[], "(0123)(4567)"),
        (&[0], "(0145)(2367)"),
        (&[1], "(0246)(1357)"),
        (&[2], "(0347)(1256)"),
        (&[0, 1], "(0167)(2345)"),
        (&[0, 2], "(0347)(1256)"),
        (&[1, 0], "(0167)(2345)"),
        (&[1, 2], "(0257)(1346)"),
        (&[2, 0], "(0356)(1247)"),
        (&[2, 1], "(0246)(1357)"),
    ];
    let nodes = rows
        .iter()
        .map(|(s, f)| (s.to_vec(), ColorFunction::parse_fibers(shape, f).expect("stored fibers")))
        .collect();
    CkTree::new(3, shape, nodes).expect("stored tree is total")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injection_count() {
        assert_eq!(injections(3).len(), 10);
        assert_eq!(injections(4).len(), 1 + 4 + 12 + 24);
    }

    #[test]
    fn stored_tree_accepted_both_ways() {
        let t = stored_c3_tree();
        assert_eq!(check_ck_tree(&t, false), Ok(()));
        assert_eq!(check_ck_tree(&t, true), Ok(()));
    }

    #[test]
    fn worked_probe() {
        let t = stored_c3_tree();
        assert_eq!(t.admissible_labels(Pair::new(0, 6).unwrap(), &[1], false), vec![2]);
    }

    #[test]
    fn corrupted_tree() {
        let mut t = stored_c3_tree();
        t.set(&[1, 2], ColorFunction::constant(t.shape())).unwrap();
        let v = check_ck_tree(&t, false).unwrap_err();
        assert_eq!((v.pair, v.sigma), (Pair::new(0, 1).unwrap(), vec![]));
    }

    #[test]
    fn incomplete_tree_rejected() {
        let t = stored_c3_tree();
        let mut nodes = t.nodes().clone();
        nodes.remove(&vec![2, 1]);
        assert!(CkTree::new(3, t.shape(), nodes).is_err());
    }
}
