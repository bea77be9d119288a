use super::pair::{pair_from_index, Pair};
use super::shape::PhpShape;

/// Set of pairs over `C(m, 2)` slots, stored as a bitset indexed by
/// [`Pair::index`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    shape: PhpShape,
    words: Vec<u64>,
}

impl SolutionSet {
    pub fn empty(shape: PhpShape) -> Self {
        let words = vec![0; shape.pair_count().div_ceil(64)];
        SolutionSet { shape, words }
    }

    pub fn full(shape: PhpShape) -> Self {
        let mut s = Self::empty(shape);
        for idx in 0..shape.pair_count() {
            s.insert_index(idx);
        }
        s
    }

    pub fn shape(&self) -> PhpShape {
        self.shape
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn capacity(&self) -> usize {
        self.shape.pair_count()
    }

    /// Inserts the pair; panics if it does not fit the shape.
    pub fn insert(&mut self, pair: Pair) {
        assert!(pair.j < self.shape.m(), "pair {pair} outside m={}", self.shape.m());
        self.insert_index(pair.index());
    }

    fn insert_index(&mut self, idx: usize) {
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    pub fn contains(&self, pair: Pair) -> bool {
        pair.j < self.shape.m() && self.contains_index(pair.index())
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        idx < self.capacity() && self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &SolutionSet) -> SolutionSet {
        debug_assert_eq!(self.shape.m(), other.shape.m());
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        SolutionSet {
            shape: self.shape,
            words,
        }
    }

    pub fn union(&self, other: &SolutionSet) -> SolutionSet {
        debug_assert_eq!(self.shape.m(), other.shape.m());
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        SolutionSet {
            shape: self.shape,
            words,
        }
    }

    pub fn is_disjoint(&self, other: &SolutionSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Least pair in index order, if any.
    pub fn first(&self) -> Option<Pair> {
        self.indices().next().map(pair_from_index)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.indices().map(pair_from_index)
    }

    pub fn to_vec(&self) -> Vec<Pair> {
        self.pairs().collect()
    }
}

impl std::fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
