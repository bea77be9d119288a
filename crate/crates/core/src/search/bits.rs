//! Word-level helpers over the bitsets of [`SolutionSet`](crate::php::SolutionSet).

pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn or_into(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x |= y;
    }
}

pub(crate) fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub(crate) fn count(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Least index not set in `a`, below `len`.
pub(crate) fn first_clear(a: &[u64], len: usize) -> Option<usize> {
    for (w, &x) in a.iter().enumerate() {
        if x != u64::MAX {
            let idx = w * 64 + (!x).trailing_zeros() as usize;
            return (idx < len).then_some(idx);
        }
    }
    None
}

pub(crate) fn set(a: &mut [u64], idx: usize) {
    a[idx / 64] |= 1 << (idx % 64);
}

pub(crate) fn clear(a: &mut [u64], idx: usize) {
    a[idx / 64] &= !(1 << (idx % 64));
}

/// Keeps the inclusion-minimal sets among `sets` (deduplicated), preserving
/// first-occurrence order. Returns their positions in `sets`.
pub(crate) fn minimal_positions(sets: &[Vec<u64>]) -> Vec<usize> {
    let mut keep: Vec<usize> = Vec::new();
    'outer: for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate() {
            if j == i {
                continue;
            }
            let strictly_smaller = subset(t, s) && t != s;
            let earlier_equal = t == s && j < i;
            if strictly_smaller || earlier_equal {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        assert_eq!(first_clear(&[0b1011], 10), Some(2));
        assert_eq!(first_clear(&[u64::MAX, 1], 70), Some(65));
        assert_eq!(first_clear(&[0b111], 3), None);
        assert_eq!(minimal_positions(&[vec![3], vec![1], vec![1], vec![4]]), vec![1, 3]);
    }
}
