//! k-subsets of `[n]`: encoding, colex ranking, enumeration, and exact
//! binomial arithmetic.
//!
//! A member is one machine word: bit `i-1` set means element `i` is in the
//! set, which caps the ground set at `n <= 64`. For equal-size sets the
//! numeric order of the words coincides with colexicographic order, so
//! sorting by bits is sorting by colex rank.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Exact nonnegative count, arbitrary precision.
pub type BigCount = BigUint;

/// Pascal triangle up to row 64; every entry fits in a `u64`.
const BINOM_TABLE: [[u64; 65]; 65] = {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n <= 64 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k <= n - 1 { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
};

/// `C(n, k)` as a `u64`; requires `n <= 64`.
pub(crate) fn binom_u64(n: usize, k: usize) -> u64 {
    debug_assert!(n <= 64);
    if k > n {
        0
    } else {
        BINOM_TABLE[n][k]
    }
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigCount::from(1u32);
    // Each intermediate product C(n-k+1..n-k+i) is divisible by i!, so the
    // running division stays exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Ground-set size and member size, `1 <= k <= n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct GroundParams {
    n: u32,
    k: u32,
}

impl GroundParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 || k > n || n > 64 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(GroundParams { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `C(n, k)`, the number of members of the full family.
    pub fn member_count(&self) -> u64 {
        binom_u64(self.n as usize, self.k as usize)
    }

    /// Bitmask with the `n` ground-element bits set.
    pub(crate) fn ground_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

impl std::fmt::Display for GroundParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={})", self.n, self.k)
    }
}

/// One k-subset of `[n]`, bitset-encoded (bit `i-1` = element `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FamilyMember {
    bits: u64,
    params: GroundParams,
}

impl FamilyMember {
    /// Builds a member from distinct elements of `1..=n`.
    pub fn from_elements(params: GroundParams, elems: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &e in elems {
            if e == 0 || e > params.n {
                return Err(Error::ElementOutOfRange { elem: e, n: params.n });
            }
            bits |= 1u64 << (e - 1);
        }
        Self::from_bits(params, bits)
    }

    /// Builds a member from a raw bitmask.
    pub fn from_bits(params: GroundParams, bits: u64) -> Result<Self> {
        if bits & !params.ground_mask() != 0 {
            let elem = 64 - bits.leading_zeros();
            return Err(Error::ElementOutOfRange { elem, n: params.n });
        }
        if bits.count_ones() != params.k {
            return Err(Error::WrongCardinality {
                got: bits.count_ones(),
                expected: params.k,
            });
        }
        Ok(FamilyMember { bits, params })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn params(&self) -> GroundParams {
        self.params
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.params.k as usize);
        let mut bits = self.bits;
        while bits != 0 {
            out.push(bits.trailing_zeros() + 1);
            bits &= bits - 1;
        }
        out
    }

    pub fn contains(&self, elem: u32) -> bool {
        elem >= 1 && elem <= 64 && self.bits >> (elem - 1) & 1 == 1
    }

    pub fn intersects(&self, other: &FamilyMember) -> bool {
        self.bits & other.bits != 0
    }

    /// Position of this member in the colex enumeration of all k-subsets.
    pub fn colex_rank(&self) -> u64 {
        let mut rank = 0u64;
        let mut bits = self.bits;
        let mut pos = 1usize;
        while bits != 0 {
            let elem = bits.trailing_zeros() as usize + 1;
            rank += binom_u64(elem - 1, pos);
            bits &= bits - 1;
            pos += 1;
        }
        rank
    }
}

impl std::fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Inverse of [`FamilyMember::colex_rank`].
pub fn colex_unrank(rank: u64, params: GroundParams) -> Result<FamilyMember> {
    let count = params.member_count();
    if rank >= count {
        return Err(Error::RankOutOfRange { rank, count });
    }
    let mut bits = 0u64;
    let mut r = rank;
    let mut c = params.n as usize - 1;
    for pos in (1..=params.k as usize).rev() {
        // Largest c with C(c, pos) <= r picks the element c+1.
        while binom_u64(c, pos) > r {
            c -= 1;
        }
        r -= binom_u64(c, pos);
        bits |= 1u64 << c;
        // Remaining elements are all smaller, so scan downward from c-1.
        c = c.saturating_sub(1);
    }
    debug_assert_eq!(r, 0);
    FamilyMember::from_bits(params, bits)
}

/// All k-subsets of `[n]` in colex order.
pub fn enumerate_all(params: GroundParams) -> ColexIter {
    let first = (1u64 << (params.k - 1) << 1).wrapping_sub(1);
    ColexIter {
        params,
        next_bits: first,
        remaining: params.member_count(),
    }
}

/// Iterator over members in colex (= numeric bitmask) order.
pub struct ColexIter {
    params: GroundParams,
    next_bits: u64,
    remaining: u64,
}

impl Iterator for ColexIter {
    type Item = FamilyMember;

    fn next(&mut self) -> Option<FamilyMember> {
        if self.remaining == 0 {
            return None;
        }
        let bits = self.next_bits;
        self.remaining -= 1;
        if self.remaining > 0 {
            // Gosper's hack: next-larger word with the same popcount.
            let low = bits & bits.wrapping_neg();
            let carry = bits + low;
            self.next_bits = carry | (((bits ^ carry) / low) >> 2);
        }
        Some(FamilyMember {
            bits,
            params: self.params,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for ColexIter {}

#[cfg(test)]
mod tests {
    use super::*;

    /// Factorial-free product/divide oracle, independent of `binom`.
    fn binom_oracle(n: u64, k: u64) -> BigUint {
        if k > n {
            return BigUint::ZERO;
        }
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for i in 0..k {
            num *= n - i;
            den *= i + 1;
        }
        num / den
    }

    #[test]
    fn binom_small_cases() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(4, 1), BigUint::from(4u32));
        assert_eq!(binom(99, 2), binom_oracle(99, 2));
        assert_eq!(binom(99, 2), BigUint::from(4851u32));
        assert_eq!(binom(3, 7), BigUint::ZERO);
        assert_eq!(binom(0, 0), BigUint::from(1u32));
    }

    #[test]
    fn binom_matches_oracle() {
        for n in 0..=60u64 {
            for k in 0..=n {
                assert_eq!(binom(n, k), binom_oracle(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn pascal_identity_up_to_200() {
        for n in 1..=200u64 {
            for k in 1..=n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }

    #[test]
    fn table_agrees_with_bignum() {
        for n in 0..=64usize {
            for k in 0..=n {
                assert_eq!(
                    BigUint::from(binom_u64(n, k)),
                    binom(n as u64, k as u64)
                );
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(GroundParams::new(5, 2).is_ok());
        assert!(GroundParams::new(64, 64).is_ok());
        assert!(GroundParams::new(65, 2).is_err());
        assert!(GroundParams::new(4, 0).is_err());
        assert!(GroundParams::new(3, 4).is_err());
    }

    #[test]
    fn member_construction() {
        let p = GroundParams::new(5, 2).unwrap();
        let m = FamilyMember::from_elements(p, &[2, 1]).unwrap();
        assert_eq!(m.elements(), vec![1, 2]);
        assert!(m.contains(1) && m.contains(2) && !m.contains(3));
        assert!(FamilyMember::from_elements(p, &[1, 6]).is_err());
        assert!(FamilyMember::from_elements(p, &[1, 1]).is_err());
        assert!(FamilyMember::from_elements(p, &[1, 2, 3]).is_err());
    }

    #[test]
    fn colex_rank_examples() {
        let p52 = GroundParams::new(5, 2).unwrap();
        let p63 = GroundParams::new(6, 3).unwrap();
        let rank = |p, e: &[u32]| FamilyMember::from_elements(p, e).unwrap().colex_rank();
        assert_eq!(rank(p52, &[1, 2]), 0);
        assert_eq!(rank(p52, &[4, 5]), 9);
        assert_eq!(rank(p63, &[1, 2, 3]), 0);
    }

    #[test]
    fn colex_rank_matches_enumeration_order() {
        // Independent oracle: generate all pairs in colex order by loops.
        let p = GroundParams::new(5, 2).unwrap();
        let mut expected = Vec::new();
        for hi in 2..=5u32 {
            for lo in 1..hi {
                expected.push(vec![lo, hi]);
            }
        }
        assert_eq!(expected.len(), 10);
        for (r, elems) in expected.iter().enumerate() {
            let m = FamilyMember::from_elements(p, elems).unwrap();
            assert_eq!(m.colex_rank(), r as u64);
            assert_eq!(colex_unrank(r as u64, p).unwrap(), m);
        }
    }

    #[test]
    fn unrank_edges() {
        let p = GroundParams::new(7, 3).unwrap();
        assert_eq!(
            colex_unrank(0, p).unwrap().elements(),
            vec![1, 2, 3],
        );
        let last = p.member_count() - 1;
        assert_eq!(colex_unrank(last, p).unwrap().elements(), vec![5, 6, 7]);
        assert!(matches!(
            colex_unrank(last + 1, p),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn enumerate_counts() {
        for (n, k, want) in [(4u32, 2u32, 6u64), (5, 2, 10), (10, 3, 120)] {
            let p = GroundParams::new(n, k).unwrap();
            assert_eq!(BigUint::from(want), binom(n as u64, k as u64));
            assert_eq!(enumerate_all(p).count() as u64, want);
        }
    }

    #[test]
    fn enumerate_is_colex_sorted_and_roundtrips() {
        // Exhaustive over a few shapes, including both boundary ks.
        for (n, k) in [(5u32, 2u32), (6, 3), (9, 4), (12, 1), (12, 12), (20, 3)] {
            let p = GroundParams::new(n, k).unwrap();
            let mut seen = 0u64;
            for (r, m) in enumerate_all(p).enumerate() {
                assert_eq!(m.colex_rank(), r as u64);
                assert_eq!(colex_unrank(r as u64, p).unwrap(), m);
                seen += 1;
            }
            assert_eq!(seen, p.member_count());
        }
    }

    #[test]
    fn full_width_ground_set() {
        let p = GroundParams::new(64, 2).unwrap();
        assert_eq!(enumerate_all(p).count(), 64 * 63 / 2);
        let last = colex_unrank(p.member_count() - 1, p).unwrap();
        assert_eq!(last.elements(), vec![63, 64]);
    }

    proptest::proptest! {
        #[test]
        fn rank_unrank_roundtrip(n in 1u32..=64, seed in 0u64..1_000_000) {
            let k = 1 + (seed % n as u64) as u32;
            let p = GroundParams::new(n, k).unwrap();
            let rank = seed % p.member_count();
            let m = colex_unrank(rank, p).unwrap();
            proptest::prop_assert_eq!(m.colex_rank(), rank);
            proptest::prop_assert_eq!(m.bits().count_ones(), k);
        }
    }
}
