use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::php::Pair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    OneFactorization,
    NearOneFactorization,
    Hamiltonian,
}

/// A partition of the edges of `K_m` into classes of a given kind.
///
/// Hamiltonian classes list their edges in traversal order, so consecutive
/// entries share a vertex and the last edge closes the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecomposition {
    pub m: usize,
    pub kind: DecompositionKind,
    pub classes: Vec<Vec<Pair>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionViolation {
    #[error("edge {pair} appears in classes {first} and {second}")]
    Repeated { pair: Pair, first: usize, second: usize },
    #[error("edge {pair} is not covered")]
    Uncovered { pair: Pair },
    #[error("edge {pair} is outside K_{m}")]
    OutOfRange { pair: Pair, m: usize },
    #[error("class {class} has the wrong shape: {reason}")]
    BadClass { class: usize, reason: String },
}

impl EdgeDecomposition {
    /// Checks the partition property and the per-kind class shape.
    pub fn verify(&self) -> std::result::Result<(), DecompositionViolation> {
        let m = self.m;
        let mut owner: Vec<Option<usize>> = vec![None; m * m.saturating_sub(1) / 2];
        for (c, class) in self.classes.iter().enumerate() {
            for &pair in class {
                if pair.j >= m {
                    return Err(DecompositionViolation::OutOfRange { pair, m });
                }
                if let Some(first) = owner[pair.index()].replace(c) {
                    return Err(DecompositionViolation::Repeated {
                        pair,
                        first,
                        second: c,
                    });
                }
            }
            self.check_class(c, class)?;
        }
        if let Some(idx) = owner.iter().position(Option::is_none) {
            return Err(DecompositionViolation::Uncovered {
                pair: Pair::from_index(idx),
            });
        }
        Ok(())
    }

    fn check_class(&self, c: usize, class: &[Pair]) -> std::result::Result<(), DecompositionViolation> {
        let bad = |reason: String| DecompositionViolation::BadClass { class: c, reason };
        let mut degree = vec![0usize; self.m];
        for p in class {
            degree[p.i] += 1;
            degree[p.j] += 1;
        }
        match self.kind {
            DecompositionKind::OneFactorization => {
                if degree.iter().any(|&d| d != 1) {
                    return Err(bad("not a perfect matching".into()));
                }
            }
            DecompositionKind::NearOneFactorization => {
                let missing = degree.iter().filter(|&&d| d == 0).count();
                if degree.iter().any(|&d| d > 1) || missing != 1 {
                    return Err(bad("not a matching missing exactly one vertex".into()));
                }
            }
            DecompositionKind::Hamiltonian => {
                if degree.iter().any(|&d| d != 2) || class.len() != self.m {
                    return Err(bad("not a spanning 2-regular edge set".into()));
                }
                for (k, p) in class.iter().enumerate() {
                    let next = &class[(k + 1) % class.len()];
                    if !p.touches(next) {
                        return Err(bad(format!("edges {p} and {next} are not consecutive")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Vertex sequences of the cycles of a Hamiltonian decomposition.
    pub fn cycles(&self) -> Option<Vec<Vec<usize>>> {
        if self.kind != DecompositionKind::Hamiltonian {
            return None;
        }
        Some(
            self.classes
                .iter()
                .map(|class| {
                    let first = class[0];
                    let second = class[1];
                    let mut start = if second.contains(first.j) { first.i } else { first.j };
                    let mut seq = Vec::with_capacity(class.len());
                    for e in class {
                        seq.push(start);
                        start = if e.i == start { e.j } else { e.i };
                    }
                    seq
                })
                .collect(),
        )
    }
}

/// Circle method: vertex `2n-1` sits at the center and round `r` pairs it with
/// `r`, while `r+k` is paired with `r-k` (mod `2n-1`).
pub fn one_factorization(two_n: usize) -> Result<EdgeDecomposition> {
    if two_n % 2 != 0 || two_n < 4 {
        return Err(Error::Parameter(format!(
            "one-factorization needs an even vertex count >= 4, got {two_n}"
        )));
    }
    let ring = two_n - 1;
    let classes = (0..ring)
        .map(|r| {
            let mut class = vec![Pair::unordered(r, ring).expect("distinct")];
            for k in 1..two_n / 2 {
                let a = (r + k) % ring;
                let b = (r + ring - k) % ring;
                class.push(Pair::unordered(a, b).expect("distinct"));
            }
            class.sort();
            class
        })
        .collect();
    Ok(EdgeDecomposition {
        m: two_n,
        kind: DecompositionKind::OneFactorization,
        classes,
    })
}

/// One-factorization of `K_{m+1}` with the added vertex deleted; class `r`
/// misses vertex `r`.
pub fn near_one_factorization(m: usize) -> Result<EdgeDecomposition> {
    if m % 2 == 0 || m < 3 {
        return Err(Error::Parameter(format!(
            "near-one-factorization needs an odd vertex count >= 3, got {m}"
        )));
    }
    let full = one_factorization(m + 1)?;
    let classes = full
        .classes
        .into_iter()
        .map(|class| class.into_iter().filter(|p| p.j != m).collect())
        .collect();
    Ok(EdgeDecomposition {
        m,
        kind: DecompositionKind::NearOneFactorization,
        classes,
    })
}

/// Walecki decomposition of `K_m`, `m = 2k+1`, into `k` Hamiltonian cycles:
/// vertex `2k` is the hub and cycle `i` zigzags `i, i+1, i-1, i+2, ...,
/// i+k` around the ring `Z_{2k}`.
pub fn hamiltonian_decomposition(m: usize) -> Result<EdgeDecomposition> {
    if m % 2 == 0 || m < 3 {
        return Err(Error::Parameter(format!(
            "Hamiltonian decomposition needs an odd vertex count >= 3, got {m}"
        )));
    }
    let k = (m - 1) / 2;
    let ring = 2 * k;
    let hub = ring;
    let classes = (0..k)
        .map(|i| {
            let mut seq = vec![hub, i];
            for t in 1..=k {
                seq.push((i + t) % ring);
                if seq.len() < m {
                    seq.push((i + ring - t) % ring);
                }
            }
            seq.truncate(m);
            (0..m)
                .map(|s| Pair::unordered(seq[s], seq[(s + 1) % m]).expect("distinct"))
                .collect()
        })
        .collect();
    Ok(EdgeDecomposition {
        m,
        kind: DecompositionKind::Hamiltonian,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_factorizations_partition() {
        for two_n in (4..=16).step_by(2) {
            let d = one_factorization(two_n).unwrap();
            assert_eq!(d.classes.len(), two_n - 1);
            assert_eq!(d.verify(), Ok(()), "K_{two_n}");
        }
        assert!(one_factorization(2).is_err());
        assert!(one_factorization(7).is_err());
    }

    #[test]
    fn near_one_factorizations_partition() {
        for m in (3..=15).step_by(2) {
            let d = near_one_factorization(m).unwrap();
            assert_eq!(d.classes.len(), m);
            assert!(d.classes.iter().all(|c| c.len() == (m - 1) / 2));
            assert_eq!(d.verify(), Ok(()), "K_{m}");
        }
        assert!(near_one_factorization(8).is_err());
    }

    #[test]
    fn hamiltonian_decompositions_partition() {
        for m in (3..=15).step_by(2) {
            let d = hamiltonian_decomposition(m).unwrap();
            assert_eq!(d.classes.len(), (m - 1) / 2);
            assert_eq!(d.verify(), Ok(()), "K_{m}");
            for cycle in d.cycles().unwrap() {
                let mut sorted = cycle.clone();
                sorted.sort();
                assert_eq!(sorted, (0..m).collect::<Vec<_>>());
            }
        }
        assert!(hamiltonian_decomposition(6).is_err());
    }

    #[test]
    fn verifier_catches_overlap() {
        let mut d = one_factorization(6).unwrap();
        let moved = d.classes[1].pop().unwrap();
        d.classes[0].push(moved);
        assert!(d.verify().is_err());
        let mut d = one_factorization(6).unwrap();
        d.classes.pop();
        assert!(matches!(d.verify(), Err(DecompositionViolation::Uncovered { .. })));
    }
}
