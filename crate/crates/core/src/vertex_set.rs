//! Fixed-width subsets of a ground set `{1, ..., n}` with `n <= 64`.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1, ..., 64}` stored as a bit vector; vertex `v` lives in bit `v - 1`.
///
/// The total order is by cardinality first, then lexicographic on the sorted
/// element lists, so `{3} < {1, 2} < {1, 3} < {2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `{1, ..., n}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based vertices. Panics if a vertex is outside `1..=64`;
    /// use [`VertexSet::try_from_vertices`] for untrusted input.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} outside 1..=64");
            bits |= 1u64 << (v - 1);
        }
        VertexSet(bits)
    }

    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(
        vertices: I,
        ground_size: usize,
    ) -> Result<Self, crate::Error> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > ground_size || v > MAX_VERTICES {
                return Err(crate::Error::VertexOutOfRange { vertex: v, ground_size });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 |= 1u64 << (v - 1);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 &= !(1u64 << (v - 1));
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// `{1, ..., n} \ self`.
    #[inline]
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(Self::full(n).0 & !self.0)
    }

    /// Largest element, if any.
    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every subset with exactly `k` elements, in increasing bit-pattern order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        let elems = self.to_vec();
        let m = elems.len();
        let mut combo: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
        std::iter::from_fn(move || {
            let current = combo.as_mut()?;
            let out = VertexSet::from_vertices(current.iter().map(|&i| elems[i]));
            // advance to next combination
            let mut i = k;
            loop {
                if i == 0 {
                    combo = None;
                    break;
                }
                i -= 1;
                if current[i] < m - k + i {
                    current[i] += 1;
                    for j in i + 1..k {
                        current[j] = current[j - 1] + 1;
                    }
                    break;
                }
            }
            Some(out)
        })
    }

    /// Applies a 0-based position map: element `v` goes to `map[v - 1] + 1`.
    pub fn map_positions(self, map: &[usize]) -> VertexSet {
        let mut bits = 0u64;
        for v in self.iter() {
            bits |= 1u64 << map[v - 1];
        }
        VertexSet(bits)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Equal cardinality: the set holding the smallest differing element
        // comes first in the sorted-list lexicographic order.
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subsets of a mask in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn order_is_size_then_lex() {
        let mut sets = vec![
            vs(&[2, 3]),
            vs(&[1, 2]),
            vs(&[3]),
            vs(&[1, 3]),
            vs(&[1, 2, 3]),
            vs(&[1]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                vs(&[1]),
                vs(&[3]),
                vs(&[1, 2]),
                vs(&[1, 3]),
                vs(&[2, 3]),
                vs(&[1, 2, 3])
            ]
        );
        // lexicographic on sorted lists, not numeric on bits
        assert!(vs(&[1, 4]) < vs(&[2, 3]));
        assert!(vs(&[1, 3, 9]) < vs(&[1, 4, 5]));
    }

    #[test]
    fn order_matches_sorted_list_comparison() {
        for a in 0u64..256 {
            for b in 0u64..256 {
                let (x, y) = (VertexSet(a), VertexSet(b));
                let expected = x.len().cmp(&y.len()).then_with(|| x.to_vec().cmp(&y.to_vec()));
                assert_eq!(x.cmp(&y), expected, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = vs(&[2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn k_subsets() {
        let s = vs(&[1, 3, 4, 6]);
        let twos: Vec<_> = s.subsets_of_size(2).collect();
        assert_eq!(twos.len(), 6);
        assert!(twos.iter().all(|x| x.len() == 2 && x.is_subset(s)));
        assert_eq!(s.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(s.subsets_of_size(5).count(), 0);
    }

    #[test]
    fn full_and_complement_at_width_limit() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(3).complement(3), VertexSet::EMPTY);
        assert_eq!(vs(&[1, 64]).complement(64).len(), 62);
        assert_eq!(vs(&[5, 9]).max(), Some(9));
        assert_eq!(vs(&[5, 9]).min(), Some(5));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(VertexSet::try_from_vertices([0], 3).is_err());
        assert!(VertexSet::try_from_vertices([4], 3).is_err());
        assert_eq!(VertexSet::try_from_vertices([3, 1], 3).unwrap(), vs(&[1, 3]));
    }
}
