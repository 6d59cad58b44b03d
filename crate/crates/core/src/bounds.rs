//! Closed-form bound and threshold calculators.
//!
//! Bounds are exact big integers. Thresholds that involve real exponents
//! are evaluated in double precision and reported with an explicit ceiling;
//! since every threshold is a sufficient condition, rounding up is safe.

use crate::error::{Error, Result};
use crate::pattern::{self, PatternGraph};
use crate::setcore::{binom, binom_u64, BigCount};
use serde::ser::SerializeStruct;
use std::collections::BTreeMap;

/// A real threshold on `n` with its integer ceiling.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Threshold {
    pub raw: f64,
    pub ceil: u64,
}

impl Threshold {
    fn new(raw: f64) -> Self {
        Threshold {
            raw,
            ceil: raw.ceil() as u64,
        }
    }
}

/// An evaluated bound: which statement it instantiates, the parameters it
/// was evaluated at, the exact bound, and the threshold status when the
/// statement carries one.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub theorem: &'static str,
    pub params: BTreeMap<&'static str, u64>,
    pub bound: BigCount,
    pub threshold: Option<Threshold>,
    pub threshold_met: Option<bool>,
}

impl BoundReport {
    fn new(theorem: &'static str, params: &[(&'static str, u64)], bound: BigCount) -> Self {
        BoundReport {
            theorem,
            params: params.iter().copied().collect(),
            bound,
            threshold: None,
            threshold_met: None,
        }
    }

    fn with_threshold(mut self, raw: f64, n: u64) -> Self {
        let t = Threshold::new(raw);
        self.threshold_met = Some(n >= t.ceil);
        self.threshold = Some(t);
        self
    }
}

impl serde::Serialize for BoundReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundReport", 6)?;
        s.serialize_field("theorem", self.theorem)?;
        s.serialize_field("params", &self.params)?;
        s.serialize_field("bound", &self.bound.to_string())?;
        s.serialize_field("threshold", &self.threshold.map(|t| t.ceil))?;
        s.serialize_field("threshold_raw", &self.threshold.map(|t| t.raw))?;
        s.serialize_field("threshold_met", &self.threshold_met)?;
        s.end()
    }
}

/// Independence number of the full Kneser graph: `C(n-1, k-1)` for
/// `n >= 2k`. Below that the bound is not asserted and an error is raised.
pub fn ekr_bound(n: u64, k: u64) -> Result<BigCount> {
    if n < 2 * k {
        return Err(Error::OutsideTheoremRange {
            theorem: "Erdos-Ko-Rado bound",
            requirement: "n >= 2k",
            n: n as u32,
            k: k as u32,
        });
    }
    Ok(binom(n - 1, k - 1))
}

/// `M = C(n-1,k-1) - C(n-k-1,k-1)`, the count of k-subsets containing a
/// fixed element and meeting a fixed disjoint k-subset. Requires `n > 2k`.
pub fn m_value(n: u64, k: u64) -> Result<BigCount> {
    if n <= 2 * k {
        return Err(Error::OutsideTheoremRange {
            theorem: "M",
            requirement: "n > 2k",
            n: n as u32,
            k: k as u32,
        });
    }
    Ok(binom(n - 1, k - 1) - binom(n - k - 1, k - 1))
}

/// Hilton-Milner bound `M + 1` on a nontrivial intersecting family, for
/// `n > 2k`.
pub fn hm_bound(n: u64, k: u64) -> Result<BigCount> {
    Ok(m_value(n, k)? + 1u32)
}

/// Largest clique-free family (no `s+1` pairwise disjoint members):
/// `C(n,k) - C(n-s,k)`, attained by s-constellations once
/// `n >= (2s+1)k - s`.
pub fn frankl_bound(n: u64, k: u64, s: u64) -> BoundReport {
    let bound = binom(n, k) - binom(n.saturating_sub(s), k);
    let threshold = ((2 * s + 1) * k).saturating_sub(s) as f64;
    BoundReport::new("frankl", &[("n", n), ("k", k), ("s", s)], bound)
        .with_threshold(threshold, n)
}

/// General forbidden-pattern bound `C(n,k) - C(n-q+1,k) + eta - 1` where
/// `q = chi(g)` and `eta = eta(g)`. The threshold above which it is
/// guaranteed is not computable from the statement, so none is reported.
pub fn pattern_free_bound(n: u64, k: u64, g: &PatternGraph) -> BoundReport {
    let stats = pattern::eta(g);
    let q = stats.q as u64;
    let eta = stats.eta as u64;
    let bound = binom(n, k) - binom(n.saturating_sub(q - 1), k) + eta - 1u32;
    BoundReport::new(
        "pattern-free",
        &[("n", n), ("k", k), ("q", q), ("eta", eta)],
        bound,
    )
}

/// Bound `C(n-1,k-1) + s - 1` on an (s,t)-union intersecting family, with
/// the explicit sufficient threshold
/// `n >= 1 + max{2(sk(k-1)+t-1), 2^(2s(1+3/(2k-2))) (t-1)^(1/(k-1)) (k-1)}`.
pub fn union_intersecting_bound(n: u64, k: u64, s: u64, t: u64) -> Result<BoundReport> {
    if k < 2 || s < 1 || t < s {
        return Err(Error::InvalidArgument(format!(
            "need k >= 2 and t >= s >= 1, got k={k}, s={s}, t={t}"
        )));
    }
    let bound = binom(n - 1, k - 1) + (s - 1);
    let linear = (2 * (s * k * (k - 1) + t - 1)) as f64;
    let exponent = 2.0 * s as f64 * (1.0 + 3.0 / (2.0 * k as f64 - 2.0));
    let power = 2f64.powf(exponent)
        * ((t - 1) as f64).powf(1.0 / (k as f64 - 1.0))
        * (k as f64 - 1.0);
    let threshold = 1.0 + linear.max(power);
    Ok(
        BoundReport::new(
            "union-intersecting",
            &[("n", n), ("k", k), ("s", s), ("t", t)],
            bound,
        )
        .with_threshold(threshold, n),
    )
}

/// Star-containment bound for (1,t)-union intersecting families: any such
/// family of size at least
/// `C(n-1,k-1) - C(n-k-1,k-1) + (t-1) C(2k-1,k-1) + t`
/// is contained in a star. The reported threshold
/// `n >= (3k/2)(1 + (t-1+t/C(2k-1,k-1))^(1/(k-1)))` makes the star bound
/// `C(n-1,k-1)` dominate, so equality then forces a full star.
pub fn star_containment_bound(n: u64, k: u64, t: u64) -> Result<BoundReport> {
    if k < 2 || t < 2 {
        return Err(Error::InvalidArgument(format!(
            "need k >= 2 and t >= 2, got k={k}, t={t}"
        )));
    }
    let chain_cap = binom(2 * k - 1, k - 1);
    let bound = binom(n - 1, k - 1) - binom(n.saturating_sub(k + 1), k - 1)
        + (t - 1) * chain_cap.clone()
        + t;
    let cap_f = binom_u64(2 * k as usize - 1, k as usize - 1) as f64;
    let inner = (t - 1) as f64 + t as f64 / cap_f;
    let threshold = 1.5 * k as f64 * (1.0 + inner.powf(1.0 / (k as f64 - 1.0)));
    Ok(
        BoundReport::new(
            "star-containment",
            &[("n", n), ("k", k), ("t", t)],
            bound,
        )
        .with_threshold(threshold, n),
    )
}

/// Explicit Kovari-Sos-Turan form: a K_{s,t}-free graph on `nv` vertices
/// has at most `(1/2 + (s-1)/nv^(1-1/s)) (t-1)^(1/s) nv^(2-1/s)` edges.
pub fn kst_edge_bound(nv: u64, s: u64, t: u64) -> Result<f64> {
    if s < 1 || t < s || nv < 1 {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= t and nv >= 1, got s={s}, t={t}, nv={nv}"
        )));
    }
    let nvf = nv as f64;
    let sf = s as f64;
    Ok((0.5 + (sf - 1.0) / nvf.powf(1.0 - 1.0 / sf))
        * ((t - 1) as f64).powf(1.0 / sf)
        * nvf.powf(2.0 - 1.0 / sf))
}

/// Edge-count lower bound certified by the peeling procedure:
/// `ceil(ell^2 / C(2k,k))`.
pub fn edge_lower_bound(ell: u64, k: u64) -> BigCount {
    if ell == 0 {
        return BigCount::ZERO;
    }
    let r = binom(2 * k, k);
    (BigCount::from(ell) * ell + &r - 1u32) / r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Naive Pascal recursion, memoized; independent of the product form.
    fn naive_binom(n: u64, k: u64, memo: &mut std::collections::HashMap<(u64, u64), BigUint>) -> BigUint {
        if k > n {
            return BigUint::ZERO;
        }
        if k == 0 || k == n {
            return big(1);
        }
        if let Some(v) = memo.get(&(n, k)) {
            return v.clone();
        }
        let v = naive_binom(n - 1, k - 1, memo) + naive_binom(n - 1, k, memo);
        memo.insert((n, k), v.clone());
        v
    }

    #[test]
    fn ekr_examples() {
        assert_eq!(ekr_bound(5, 2).unwrap(), big(4));
        assert_eq!(ekr_bound(9, 3).unwrap(), big(28));
        for k in 1..=6u64 {
            assert_eq!(ekr_bound(2 * k, k).unwrap(), binom(2 * k - 1, k - 1));
        }
        assert!(ekr_bound(3, 2).is_err());
    }

    #[test]
    fn hm_examples() {
        assert_eq!(m_value(5, 2).unwrap(), big(2));
        assert_eq!(hm_bound(5, 2).unwrap(), big(3));
        assert_eq!(m_value(7, 3).unwrap(), big(12));
        assert_eq!(hm_bound(7, 3).unwrap(), big(13));
        assert!(hm_bound(4, 2).is_err());
    }

    #[test]
    fn m_never_exceeds_k_choose_shifted() {
        for n in 1..=40u64 {
            for k in 1..=n / 2 {
                if n <= 2 * k {
                    continue;
                }
                let m = m_value(n, k).unwrap();
                let cap = if k >= 2 {
                    big(k) * binom(n - 2, k - 2)
                } else {
                    BigUint::ZERO
                };
                assert!(m <= cap, "M({n},{k}) > k*C(n-2,k-2)");
            }
        }
    }

    #[test]
    fn frankl_examples() {
        let r = frankl_bound(8, 2, 2);
        assert_eq!(r.bound, big(13));
        assert_eq!(r.threshold.unwrap().ceil, 8);
        assert_eq!(r.threshold_met, Some(true));

        let r = frankl_bound(9, 2, 2);
        assert_eq!(r.bound, big(15));
        assert_eq!(r.threshold_met, Some(true));

        // s = 1 recovers the Erdos-Ko-Rado bound via Pascal.
        for (n, k) in [(5u64, 2u64), (8, 3), (12, 4), (40, 6)] {
            assert_eq!(frankl_bound(n, k, 1).bound, ekr_bound(n, k).unwrap());
        }
    }

    #[test]
    fn pattern_free_examples() {
        // Complete patterns recover the constellation bound.
        for s in 1..=3u64 {
            let g = PatternGraph::complete(s as usize + 1).unwrap();
            for (n, k) in [(8u64, 2u64), (9, 3), (12, 2)] {
                assert_eq!(pattern_free_bound(n, k, &g).bound, frankl_bound(n, k, s).bound);
            }
        }
        let k2 = PatternGraph::complete(2).unwrap();
        assert_eq!(pattern_free_bound(5, 2, &k2).bound, big(4));

        let k23 = PatternGraph::complete_bipartite(2, 3).unwrap();
        let r = pattern_free_bound(9, 2, &k23);
        assert_eq!(r.bound, big(9));
        assert_eq!(r.params["q"], 2);
        assert_eq!(r.params["eta"], 2);
        assert!(r.threshold.is_none());
        assert_eq!(r.threshold_met, None);
    }

    #[test]
    fn union_intersecting_examples() {
        let r = union_intersecting_bound(33, 2, 1, 2).unwrap();
        assert_eq!(r.bound, big(32));
        assert_eq!(r.threshold.unwrap().ceil, 33);
        assert_eq!(r.threshold_met, Some(true));
        assert_eq!(union_intersecting_bound(32, 2, 1, 2).unwrap().threshold_met, Some(false));

        let r = union_intersecting_bound(100, 3, 2, 3).unwrap();
        assert_eq!(r.bound, big(4852));

        // s = 1, t = 1 is not in range (t >= s >= 1 but k >= 2, t >= s): s=1,t=1 allowed.
        let r = union_intersecting_bound(10, 2, 1, 1).unwrap();
        assert_eq!(r.bound, ekr_bound(10, 2).unwrap());
        assert!(union_intersecting_bound(10, 1, 1, 1).is_err());
        assert!(union_intersecting_bound(10, 2, 2, 1).is_err());
    }

    #[test]
    fn star_containment_examples() {
        let r = star_containment_bound(10, 2, 2).unwrap();
        assert_eq!(r.bound, big(7)); // C(9,1)-C(7,1)+3+2

        let r = star_containment_bound(12, 3, 2).unwrap();
        // C(n-1,2)-C(n-4,2)+10+2 at n=12: 55-28+12 = 39.
        assert_eq!(r.bound, big(39));
        assert_eq!(r.threshold.unwrap().ceil, 10);
        assert!((r.threshold.unwrap().raw - 9.429).abs() < 0.01);

        // Threshold is monotone increasing in t for fixed k.
        for k in 2..=5u64 {
            let mut prev = 0.0;
            for t in 2..=8u64 {
                let raw = star_containment_bound(20, k, t).unwrap().threshold.unwrap().raw;
                assert!(raw > prev);
                prev = raw;
            }
        }
        assert!(star_containment_bound(10, 2, 1).is_err());
    }

    #[test]
    fn kst_edge_examples() {
        assert_eq!(kst_edge_bound(100, 2, 2).unwrap(), 600.0);
        // Degenerate s = 1 case: (1/2)(t-1) nv.
        assert_eq!(kst_edge_bound(40, 1, 3).unwrap(), 40.0);
        assert!(kst_edge_bound(0, 1, 1).is_err());
        assert!(kst_edge_bound(10, 3, 2).is_err());
    }

    #[test]
    fn edge_lower_examples() {
        assert_eq!(edge_lower_bound(6, 2), big(6));
        assert_eq!(edge_lower_bound(0, 2), BigUint::ZERO);
        assert_eq!(edge_lower_bound(7, 2), big(9)); // ceil(49/6)
        assert_eq!(edge_lower_bound(5, 3), big(2)); // ceil(25/20)
    }

    #[test]
    fn closed_forms_match_naive_binomials() {
        let mut memo = std::collections::HashMap::new();
        for n in 2..=40u64 {
            for k in 1..=6u64.min(n) {
                if n >= 2 * k {
                    assert_eq!(ekr_bound(n, k).unwrap(), naive_binom(n - 1, k - 1, &mut memo));
                }
                if n > 2 * k {
                    assert_eq!(
                        hm_bound(n, k).unwrap(),
                        naive_binom(n - 1, k - 1, &mut memo) - naive_binom(n - k - 1, k - 1, &mut memo)
                            + big(1)
                    );
                }
                for s in 1..=3u64 {
                    assert_eq!(
                        frankl_bound(n, k, s).bound,
                        naive_binom(n, k, &mut memo)
                            - naive_binom(n.saturating_sub(s), k, &mut memo)
                    );
                    if k >= 2 {
                        for t in s..=(s + 2) {
                            assert_eq!(
                                union_intersecting_bound(n, k, s, t).unwrap().bound,
                                naive_binom(n - 1, k - 1, &mut memo) + big(s - 1)
                            );
                        }
                    }
                }
                if k >= 2 {
                    for t in 2..=4u64 {
                        assert_eq!(
                            star_containment_bound(n, k, t).unwrap().bound,
                            naive_binom(n - 1, k - 1, &mut memo)
                                - naive_binom(n.saturating_sub(k + 1), k - 1, &mut memo)
                                + big(t - 1) * naive_binom(2 * k - 1, k - 1, &mut memo)
                                + big(t)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let r = frankl_bound(8, 2, 2);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["bound"], "13");
        assert_eq!(json["threshold"], 8);
        assert_eq!(json["threshold_met"], true);
        assert_eq!(json["params"]["n"], 8);
        assert_eq!(json["theorem"], "frankl");

        let g = PatternGraph::complete(2).unwrap();
        let r = pattern_free_bound(5, 2, &g);
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["threshold"].is_null());
        assert!(json["threshold_met"].is_null());
    }
}
