use super::coloring::ColorFunction;
use super::pair::Pair;
use super::shape::PhpShape;
use super::solutions::SolutionSet;
use crate::error::{Error, Result};

/// A nonempty ordered list of color functions on a common shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionFamily {
    shape: PhpShape,
    functions: Vec<ColorFunction>,
}

/// Two members of a family that share a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("functions {first} and {second} share the solution {pair}")]
pub struct SharedSolution {
    pub first: usize,
    pub second: usize,
    pub pair: Pair,
}

impl FunctionFamily {
    pub fn new(functions: Vec<ColorFunction>) -> Result<Self> {
        let first = functions.first().ok_or(Error::EmptyFamily)?;
        let shape = first.shape();
        if let Some(other) = functions.iter().find(|f| f.shape() != shape) {
            return Err(Error::MixedShapes {
                m0: shape.m(),
                n0: shape.n(),
                m1: other.shape().m(),
                n1: other.shape().n(),
            });
        }
        Ok(FunctionFamily { shape, functions })
    }

    pub fn from_colors(shape: PhpShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let functions = rows
            .into_iter()
            .map(|colors| ColorFunction::new(shape, colors))
            .collect::<Result<Vec<_>>>()?;
        if functions.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Self::new(functions)
    }

    pub fn parse_fibers(shape: PhpShape, rows: &[&str]) -> Result<Self> {
        let functions = rows
            .iter()
            .map(|r| ColorFunction::parse_fibers(shape, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(functions)
    }

    pub fn shape(&self) -> PhpShape {
        self.shape
    }

    pub fn functions(&self) -> &[ColorFunction] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn into_functions(self) -> Vec<ColorFunction> {
        self.functions
    }

    pub fn solution_sets(&self) -> Vec<SolutionSet> {
        self.functions.iter().map(ColorFunction::solutions).collect()
    }

    /// Pairs solved by every member.
    pub fn common_solutions(&self) -> SolutionSet {
        let mut sets = self.functions.iter().map(ColorFunction::solutions);
        let first = sets.next().expect("family is nonempty");
        sets.fold(first, |acc, s| acc.intersection(&s))
    }

    /// Checks that distinct members have disjoint solution sets; on failure
    /// reports the lexicographically least `(first, second)` and the least
    /// shared pair.
    pub fn check_disjoint(&self) -> std::result::Result<(), SharedSolution> {
        let sets = self.solution_sets();
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                if let Some(pair) = sets[a].intersection(&sets[b]).first() {
                    return Err(SharedSolution {
                        first: a,
                        second: b,
                        pair,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_disjoint(&self) -> bool {
        self.check_disjoint().is_ok()
    }

    /// Index of the unique member solving `pair` in a disjoint family.
    pub fn solver_of(&self, pair: Pair) -> Option<usize> {
        self.functions.iter().position(|f| f.solves(pair))
    }
}

pub fn common_solutions(family: &FunctionFamily) -> SolutionSet {
    family.common_solutions()
}

pub fn is_disjoint_family(family: &FunctionFamily) -> std::result::Result<(), SharedSolution> {
    family.check_disjoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize) -> PhpShape {
        PhpShape::new(m, n).unwrap()
    }

    #[test]
    fn warmup_triple_is_disjoint() {
        let fam = FunctionFamily::parse_fibers(shape(4, 2), &["(01)(23)", "(02)(13)", "(03)(12)"]).unwrap();
        assert!(fam.is_disjoint());
        let two = FunctionFamily::parse_fibers(shape(4, 2), &["(01)(23)", "(02)(13)"]).unwrap();
        assert!(two.common_solutions().is_empty());
    }

    #[test]
    fn single_common_solution() {
        let fam = FunctionFamily::parse_fibers(shape(5, 2), &["(012)(34)", "(023)(14)"]).unwrap();
        assert_eq!(fam.common_solutions().to_vec(), vec![Pair::new(0, 2).unwrap()]);
    }

    #[test]
    fn singleton_family() {
        let f = ColorFunction::parse_fibers(shape(4, 2), "(013)(2)").unwrap();
        let fam = FunctionFamily::new(vec![f.clone()]).unwrap();
        assert_eq!(fam.common_solutions(), f.solutions());
        assert!(fam.is_disjoint());
    }

    #[test]
    fn self_intersection_fails() {
        let f = ColorFunction::parse_fibers(shape(4, 2), "(01)(23)").unwrap();
        let fam = FunctionFamily::new(vec![f.clone(), f]).unwrap();
        assert_eq!(
            fam.check_disjoint(),
            Err(SharedSolution { first: 0, second: 1, pair: Pair::new(0, 1).unwrap() })
        );
    }

    #[test]
    fn rejects_mixed_or_empty() {
        assert_eq!(FunctionFamily::new(vec![]), Err(Error::EmptyFamily));
        let a = ColorFunction::constant(shape(4, 2));
        let b = ColorFunction::constant(shape(4, 3));
        assert!(matches!(FunctionFamily::new(vec![a, b]), Err(Error::MixedShapes { .. })));
    }
}
