//! Fixed-capacity bitsets over member indices.
//!
//! Adjacency rows and candidate sets in the search and peel modules are sets
//! of member indices; families in scope hold at most a few thousand members,
//! so a short `Vec<u64>` per row keeps the hot intersection loops cheap.

/// A set of indices in `0..len`, packed 64 per word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSet {
    words: Vec<u64>,
    len: usize,
}

impl IndexSet {
    /// Empty set over the universe `0..len`.
    pub fn empty(len: usize) -> Self {
        IndexSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Full set `{0, 1, ..., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            *w = if len - lo >= 64 {
                u64::MAX
            } else {
                (1u64 << (len - lo)) - 1
            };
        }
        s
    }

    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx / 64] |= 1 << (idx % 64);
    }

    pub fn remove(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx / 64] &= !(1 << (idx % 64));
    }

    pub fn contains(&self, idx: usize) -> bool {
        idx < self.len && self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest contained index, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn intersect_with(&mut self, other: &IndexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &IndexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &IndexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersection_count(&self, other: &IndexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Iterates contained indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&rest| {
                    let rest = rest & (rest - 1);
                    if rest == 0 {
                        None
                    } else {
                        Some(rest)
                    }
                },
            )
            .map(move |bits| i * 64 + bits.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        let s = IndexSet::full(70);
        assert_eq!(s.count(), 70);
        assert_eq!(s.to_vec(), (0..70).collect::<Vec<_>>());
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn ops() {
        let mut a = IndexSet::from_indices(130, &[0, 5, 64, 129]);
        let b = IndexSet::from_indices(130, &[5, 64]);
        assert!(b.is_subset_of(&a));
        assert_eq!(a.intersection_count(&b), 2);
        a.subtract(&b);
        assert_eq!(a.to_vec(), vec![0, 129]);
        assert!(a.is_disjoint(&b));
        a.remove(0);
        a.remove(129);
        assert!(a.is_empty());
        assert_eq!(a.first(), None);
    }
}
