//! Subsets of the ground set as 64-bit masks.
//!
//! Bit `i` stands for element `i + 1`: element labels are 1-based everywhere a
//! user can see them, indices are 0-based internally.

use std::cmp::Ordering;
use std::fmt;

pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        ElementSet(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElementSet(it.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|&l| l - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn insert(self, index: usize) -> Self {
        ElementSet(self.0 | (1u64 << index))
    }

    pub fn remove(self, index: usize) -> Self {
        ElementSet(self.0 & !(1u64 << index))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Least element index, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Ascending 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Image under an index map `perm[i]`.
    pub fn map(self, perm: &[usize]) -> Self {
        Self::from_indices(self.iter().map(|i| perm[i]))
    }

    /// Order by size, then lexicographically on the ascending element lists.
    pub fn size_lex_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }

    /// Lexicographic order on ascending element lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.iter(), other.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Indices {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Sorts sets by (size, lex), the storage order used for circuit lists.
pub fn sort_size_lex(sets: &mut [ElementSet]) {
    sets.sort_by(|a, b| a.size_lex_cmp(b));
}

/// All `k`-subsets of `{0..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElementSet> {
    use itertools::Itertools;
    if k > n {
        return Vec::new();
    }
    (0..n).combinations(k).map(ElementSet::from_indices).collect()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_one_based() {
        let s = ElementSet::from_labels(&[1, 3, 4]);
        assert_eq!(s.bits(), 0b1101);
        assert_eq!(s.labels(), vec![1, 3, 4]);
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.max(), Some(3));
    }

    #[test]
    fn size_lex_order() {
        let mut v = vec![
            ElementSet::from_labels(&[1, 2, 4, 5]),
            ElementSet::from_labels(&[3, 4, 5]),
            ElementSet::from_labels(&[1, 2, 3]),
        ];
        sort_size_lex(&mut v);
        assert_eq!(v[0], ElementSet::from_labels(&[1, 2, 3]));
        assert_eq!(v[2], ElementSet::from_labels(&[1, 2, 4, 5]));
    }

    #[test]
    fn k_subsets_lex() {
        let v = k_subsets(4, 2);
        assert_eq!(v.len(), 6);
        assert_eq!(v[0].labels(), vec![1, 2]);
        assert_eq!(v[1].labels(), vec![1, 3]);
        assert_eq!(v[5].labels(), vec![3, 4]);
        assert_eq!(binomial(12, 6), 924);
    }
}
