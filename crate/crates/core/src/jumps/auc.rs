use crate::error::{Error, Result};
use crate::php::{ColorFunction, Pair, PhpShape};

/// Functions `g, f_0, ..., f_{k-1}` on a common shape. `g` may coincide with
/// some `f_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AucWitness {
    shape: PhpShape,
    g: ColorFunction,
    f_list: Vec<ColorFunction>,
}

/// Members `first < second` whose solutions meet those of `g` in `pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("g, f_{first} and f_{second} share the solution {pair}")]
pub struct TripleViolation {
    pub first: usize,
    pub second: usize,
    pub pair: Pair,
}

impl AucWitness {
    pub fn new(g: ColorFunction, f_list: Vec<ColorFunction>) -> Result<Self> {
        let shape = g.shape();
        if f_list.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if let Some(f) = f_list.iter().find(|f| f.shape() != shape) {
            return Err(Error::MixedShapes {
                m0: shape.m(),
                n0: shape.n(),
                m1: f.shape().m(),
                n1: f.shape().n(),
            });
        }
        Ok(AucWitness { shape, g, f_list })
    }

    pub fn shape(&self) -> PhpShape {
        self.shape
    }

    pub fn g(&self) -> &ColorFunction {
        &self.g
    }

    pub fn f_list(&self) -> &[ColorFunction] {
        &self.f_list
    }

    pub fn k(&self) -> usize {
        self.f_list.len()
    }
}

/// For all `l < l'`: `g`, `f_l`, `f_l'` have no common solution.
pub fn check_auc_witness(w: &AucWitness) -> std::result::Result<(), TripleViolation> {
    let g = w.g.solutions();
    let traces: Vec<_> = w.f_list.iter().map(|f| f.solutions().intersection(&g)).collect();
    for a in 0..traces.len() {
        for b in a + 1..traces.len() {
            if let Some(pair) = traces[a].intersection(&traces[b]).first() {
                return Err(TripleViolation {
                    first: a,
                    second: b,
                    pair,
                });
            }
        }
    }
    Ok(())
}

/// The functions jointly have no common solution. Needs at least three
/// functions (`k + 1` with `k >= 2`) on one shape; the error side of the
/// inner result is the least shared pair.
pub fn check_acc_witness(functions: &[ColorFunction]) -> Result<std::result::Result<(), Pair>> {
    if functions.len() < 3 {
        return Err(Error::Parameter(format!(
            "an ACC_k witness has k + 1 >= 3 functions, got {}",
            functions.len()
        )));
    }
    let shape = functions[0].shape();
    if let Some(f) = functions.iter().find(|f| f.shape() != shape) {
        return Err(Error::MixedShapes {
            m0: shape.m(),
            n0: shape.n(),
            m1: f.shape().m(),
            n1: f.shape().n(),
        });
    }
    let common = functions
        .iter()
        .skip(1)
        .fold(functions[0].solutions(), |acc, f| acc.intersection(&f.solutions()));
    Ok(match common.first() {
        Some(p) => Err(p),
        None => Ok(()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridges::digit_family;

    #[test]
    fn repeated_non_rainbow_fails() {
        let shape = PhpShape::new(4, 2).unwrap();
        let f = ColorFunction::parse_fibers(shape, "(01)(23)").unwrap();
        let w = AucWitness::new(f.clone(), vec![f.clone(), f]).unwrap();
        let v = check_auc_witness(&w).unwrap_err();
        assert_eq!((v.first, v.second, v.pair), (0, 1, Pair::new(0, 1).unwrap()));
    }

    #[test]
    fn digits_are_acc_witnesses() {
        let fam = digit_family(2, 3).unwrap();
        assert_eq!(check_acc_witness(fam.functions()).unwrap(), Ok(()));
        let c = ColorFunction::constant(PhpShape::new(4, 2).unwrap());
        assert!(check_acc_witness(&[c.clone(), c.clone(), c.clone()]).unwrap().is_err());
        assert!(check_acc_witness(&[c.clone(), c]).is_err());
    }
}
