//! Generators for the named extremal families, each paired with the checks
//! that make it trustworthy as a test witness.

use crate::error::{Error, Result};
use crate::kneser::{induce, Family};
use crate::pattern::{self, PatternGraph, SpecialSet};
use crate::setcore::{enumerate_all, FamilyMember, GroundParams};

/// The star `S_i`: all k-subsets containing `i`. Size `C(n-1, k-1)`.
pub fn star(params: GroundParams, i: u32) -> Result<Family> {
    if i == 0 || i > params.n() {
        return Err(Error::ElementOutOfRange {
            elem: i,
            n: params.n(),
        });
    }
    Family::new(params, enumerate_all(params).filter(|m| m.contains(i)).collect())
}

/// The constellation `C(L)`: all k-subsets meeting `L`. Size
/// `C(n,k) - C(n-|L|, k)`.
pub fn constellation(params: GroundParams, l: &[u32]) -> Result<Family> {
    if l.is_empty() {
        return Err(Error::InvalidArgument("constellation needs a nonempty L".into()));
    }
    let mut mask = 0u64;
    for &e in l {
        if e == 0 || e > params.n() {
            return Err(Error::ElementOutOfRange {
                elem: e,
                n: params.n(),
            });
        }
        if mask >> (e - 1) & 1 == 1 {
            return Err(Error::InvalidArgument(format!("repeated element {e} in L")));
        }
        mask |= 1 << (e - 1);
    }
    Family::new(
        params,
        enumerate_all(params)
            .filter(|m| m.bits() & mask != 0)
            .collect(),
    )
}

/// The Hilton-Milner family: every k-subset containing 1 that meets
/// `{2,...,k+1}`, plus `{2,...,k+1}` itself. Size
/// `C(n-1,k-1) - C(n-k-1,k-1) + 1`; intersecting but contained in no star.
/// Requires `n > 2k` and `k >= 2` (for `k = 1` no nontrivial intersecting
/// family exists).
pub fn hilton_milner(params: GroundParams) -> Result<Family> {
    let (n, k) = (params.n(), params.k());
    if n <= 2 * k || k < 2 {
        return Err(Error::OutsideTheoremRange {
            theorem: "Hilton-Milner construction",
            requirement: "n > 2k and k >= 2",
            n,
            k,
        });
    }
    let blocker_mask: u64 = ((1u64 << k) - 1) << 1; // elements 2..=k+1
    let mut members: Vec<FamilyMember> = enumerate_all(params)
        .filter(|m| m.contains(1) && m.bits() & blocker_mask != 0)
        .collect();
    members.push(FamilyMember::from_bits(params, blocker_mask)?);
    Family::new(params, members)
}

/// A star plus `s-1` extra members avoiding its center. The extras must be
/// pairwise distinct and none may contain `i`.
pub fn star_plus(params: GroundParams, i: u32, extras: &[FamilyMember]) -> Result<Family> {
    let mut members = star(params, i)?.members().to_vec();
    for e in extras {
        if e.params() != params {
            return Err(Error::ParamsMismatch(
                params.n(),
                params.k(),
                e.params().n(),
                e.params().k(),
            ));
        }
        if e.contains(i) {
            return Err(Error::InvalidArgument(format!(
                "extra member {e} intersects the star center {i}"
            )));
        }
        members.push(*e);
    }
    // Family::new rejects duplicate extras.
    Family::new(params, members)
}

/// Validity report for [`constellation_plus`]: whether the extras avoid
/// every minimal special subgraph of the forbidden pattern.
#[derive(Clone, Debug)]
pub struct ExtrasValidity {
    pub valid: bool,
    /// First violated special set and the embedding found, if any.
    pub violation: Option<(SpecialSet, Vec<usize>)>,
}

/// The Turan-type extremal candidate: `C(L)` together with `eta - 1` extra
/// members outside it, validated against the pattern's special subgraphs.
///
/// Preconditions: `|L| = chi(g) - 1`, `|extras| = eta(g) - 1`, and every
/// extra avoids `L` entirely. The returned report says whether the induced
/// graph on the extras avoids every minimal special subgraph of `g`, which
/// is the equality condition for extremality.
pub fn constellation_plus(
    params: GroundParams,
    l: &[u32],
    extras: &[FamilyMember],
    g: &PatternGraph,
) -> Result<(Family, ExtrasValidity)> {
    let stats = pattern::eta(g);
    if l.len() != stats.q - 1 {
        return Err(Error::InvalidArgument(format!(
            "|L| must be chi(g)-1 = {}, got {}",
            stats.q - 1,
            l.len()
        )));
    }
    if extras.len() != stats.eta - 1 {
        return Err(Error::InvalidArgument(format!(
            "need eta(g)-1 = {} extras, got {}",
            stats.eta - 1,
            extras.len()
        )));
    }
    let mut l_mask = 0u64;
    for &e in l {
        if e == 0 || e > params.n() {
            return Err(Error::ElementOutOfRange {
                elem: e,
                n: params.n(),
            });
        }
        l_mask |= 1 << (e - 1);
    }
    let mut members: Vec<FamilyMember> = enumerate_all(params)
        .filter(|m| m.bits() & l_mask != 0)
        .collect();
    for e in extras {
        if e.params() != params {
            return Err(Error::ParamsMismatch(
                params.n(),
                params.k(),
                e.params().n(),
                e.params().k(),
            ));
        }
        if e.bits() & l_mask != 0 {
            return Err(Error::InvalidArgument(format!(
                "extra member {e} meets L, so it lies inside C(L)"
            )));
        }
        members.push(*e);
    }
    let family = Family::new(params, members)?;

    let extras_family = Family::new(params, extras.to_vec())?;
    let extras_graph = induce(&extras_family);
    let mut validity = ExtrasValidity {
        valid: true,
        violation: None,
    };
    for special in pattern::special_sets(g, true) {
        if let Some(hit) = pattern::contains_pattern(&extras_graph, &special.induced) {
            validity.valid = false;
            validity.violation = Some((special, hit));
            break;
        }
    }
    Ok((family, validity))
}

/// Exhaustively enumerates all choices of `eta - 1` extras outside `C(L)`
/// that pass the special-subgraph check. Only for tiny instances: errors
/// when more than `cap` candidate combinations would be scanned.
pub fn valid_extras_candidates(
    params: GroundParams,
    l: &[u32],
    g: &PatternGraph,
    cap: u64,
) -> Result<Vec<Vec<FamilyMember>>> {
    let stats = pattern::eta(g);
    let want = stats.eta - 1;
    let mut l_mask = 0u64;
    for &e in l {
        if e == 0 || e > params.n() {
            return Err(Error::ElementOutOfRange {
                elem: e,
                n: params.n(),
            });
        }
        l_mask |= 1 << (e - 1);
    }
    let outside: Vec<FamilyMember> = enumerate_all(params)
        .filter(|m| m.bits() & l_mask == 0)
        .collect();
    let total = crate::setcore::binom(outside.len() as u64, want as u64);
    if total > cap.into() {
        return Err(Error::InstanceTooLarge {
            size: outside.len() as u64,
            cap,
            mode: "extras enumeration",
        });
    }
    let specials = pattern::special_sets(g, true);
    let mut picks = Vec::new();
    let mut out = Vec::new();
    enumerate_combinations(&outside, want, 0, &mut picks, &mut |combo: &[FamilyMember]| {
        let fam = Family::new(params, combo.to_vec()).expect("distinct by construction");
        let graph = induce(&fam);
        if specials
            .iter()
            .all(|s| pattern::contains_pattern(&graph, &s.induced).is_none())
        {
            out.push(combo.to_vec());
        }
    });
    Ok(out)
}

fn enumerate_combinations(
    pool: &[FamilyMember],
    want: usize,
    from: usize,
    picks: &mut Vec<FamilyMember>,
    visit: &mut impl FnMut(&[FamilyMember]),
) {
    if picks.len() == want {
        visit(picks);
        return;
    }
    for i in from..pool.len() {
        picks.push(pool[i]);
        enumerate_combinations(pool, want, i + 1, picks, visit);
        picks.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::setcore::binom;
    use num_bigint::BigUint;

    #[test]
    fn star_examples() {
        let p = GroundParams::new(5, 2).unwrap();
        let s = star(p, 1).unwrap();
        let elems: Vec<Vec<u32>> = s.members().iter().map(|m| m.elements()).collect();
        assert_eq!(elems, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 5]]);
        assert!(induce(&s).is_edgeless());

        let p93 = GroundParams::new(9, 3).unwrap();
        assert_eq!(
            BigUint::from(star(p93, 4).unwrap().len()),
            binom(8, 2)
        );
        assert!(star(p, 0).is_err());
        assert!(star(p, 6).is_err());
    }

    #[test]
    fn constellation_examples() {
        let p52 = GroundParams::new(5, 2).unwrap();
        assert_eq!(constellation(p52, &[1, 2]).unwrap().len(), 7);
        let p82 = GroundParams::new(8, 2).unwrap();
        assert_eq!(constellation(p82, &[1, 2]).unwrap().len(), 13);
        let all: Vec<u32> = (1..=5).collect();
        assert_eq!(constellation(p52, &all).unwrap(), Family::full(p52));
        assert!(constellation(p52, &[]).is_err());
        assert!(constellation(p52, &[2, 2]).is_err());
        assert!(constellation(p52, &[9]).is_err());
    }

    #[test]
    fn constellation_is_clique_free() {
        // C(L) contains no K_{|L|+1}: among |L|+1 pairwise disjoint sets,
        // some member would have to avoid L entirely.
        for (n, k, l) in [(6u32, 2u32, vec![1u32, 2]), (8, 2, vec![1, 2]), (7, 2, vec![3])] {
            let p = GroundParams::new(n, k).unwrap();
            let fam = constellation(p, &l).unwrap();
            let g = induce(&fam);
            let clique = PatternGraph::complete(l.len() + 1).unwrap();
            assert!(pattern::contains_pattern(&g, &clique).is_none());
            // One larger clique does fit in the full family when room allows.
            if (l.len() as u32 + 2) * k <= n {
                let bigger = PatternGraph::complete(l.len() + 2).unwrap();
                assert!(pattern::contains_pattern(&induce(&Family::full(p)), &bigger).is_some());
            }
        }
    }

    #[test]
    fn hilton_milner_examples() {
        let hm52 = hilton_milner(GroundParams::new(5, 2).unwrap()).unwrap();
        assert_eq!(hm52.len(), 3);
        assert!(families::is_intersecting(&hm52));
        assert_eq!(families::star_center(&hm52), None);

        let hm73 = hilton_milner(GroundParams::new(7, 3).unwrap()).unwrap();
        assert_eq!(hm73.len(), 13);
        assert!(families::is_intersecting(&hm73));
        assert_eq!(families::star_center(&hm73), None);

        assert!(hilton_milner(GroundParams::new(4, 2).unwrap()).is_err());
        assert!(hilton_milner(GroundParams::new(5, 1).unwrap()).is_err());
    }

    #[test]
    fn star_plus_examples() {
        let p = GroundParams::new(9, 2).unwrap();
        let extra = FamilyMember::from_elements(p, &[2, 3]).unwrap();
        let f = star_plus(p, 1, &[extra]).unwrap();
        assert_eq!(f.len(), 9);
        assert!(families::is_union_intersecting(&f, 2, 2).unwrap());

        // No extras: plain star.
        let s = star_plus(p, 1, &[]).unwrap();
        assert_eq!(s, star(p, 1).unwrap());

        let bad = FamilyMember::from_elements(p, &[1, 3]).unwrap();
        assert!(star_plus(p, 1, &[bad]).is_err());
        assert!(star_plus(p, 1, &[extra, extra]).is_err());
    }

    #[test]
    fn constellation_plus_reductions() {
        // g = K_{s+1}: eta = 1, no extras, family is the s-constellation.
        let p = GroundParams::new(8, 2).unwrap();
        let k3 = PatternGraph::complete(3).unwrap();
        let (fam, validity) = constellation_plus(p, &[1, 2], &[], &k3).unwrap();
        assert!(validity.valid);
        assert_eq!(fam, constellation(p, &[1, 2]).unwrap());

        // g = K2: reduces to a star.
        let k2 = PatternGraph::complete(2).unwrap();
        let (fam, validity) = constellation_plus(p, &[3], &[], &k2).unwrap();
        assert!(validity.valid);
        assert_eq!(fam, star(p, 3).unwrap());

        // g = K_{2,2}: one extra avoiding a single-point L; a single extra
        // cannot contain the two-vertex special subgraph.
        let k22 = PatternGraph::complete_bipartite(2, 2).unwrap();
        let extra = FamilyMember::from_elements(p, &[2, 3]).unwrap();
        let (fam, validity) = constellation_plus(p, &[1], &[extra], &k22).unwrap();
        assert!(validity.valid);
        assert_eq!(fam.len(), star(p, 1).unwrap().len() + 1);

        // Wrong arities and overlapping extras are rejected.
        assert!(constellation_plus(p, &[1, 2], &[], &k22).is_err());
        assert!(constellation_plus(p, &[1], &[], &k22).is_err());
        let overlapping = FamilyMember::from_elements(p, &[1, 3]).unwrap();
        assert!(constellation_plus(p, &[1], &[overlapping], &k22).is_err());
    }

    #[test]
    fn extras_enumeration_tiny() {
        // (n,k) = (5,2), g = K_{2,2}, L = {1}: extras are single members of
        // the K_5 on {2..5}; all six pass (E_2 needs two vertices).
        let p = GroundParams::new(5, 2).unwrap();
        let k22 = PatternGraph::complete_bipartite(2, 2).unwrap();
        let all = valid_extras_candidates(p, &[1], &k22, 10_000).unwrap();
        assert_eq!(all.len(), 6);
        for combo in &all {
            assert_eq!(combo.len(), 1);
            assert!(!combo[0].contains(1));
        }
        // Cap respected.
        assert!(valid_extras_candidates(p, &[1], &k22, 1).is_err());
    }

    #[test]
    fn generator_sizes_match_closed_forms() {
        for (n, k) in [(5u32, 2u32), (7, 2), (7, 3), (9, 3), (10, 4)] {
            let p = GroundParams::new(n, k).unwrap();
            let (n64, k64) = (n as u64, k as u64);
            assert_eq!(
                BigUint::from(star(p, 1).unwrap().len()),
                binom(n64 - 1, k64 - 1)
            );
            for ls in 1..=3u64.min(n64) {
                let l: Vec<u32> = (1..=ls as u32).collect();
                assert_eq!(
                    BigUint::from(constellation(p, &l).unwrap().len()),
                    binom(n64, k64) - binom(n64 - ls, k64)
                );
            }
            if n > 2 * k {
                assert_eq!(
                    BigUint::from(hilton_milner(p).unwrap().len()),
                    binom(n64 - 1, k64 - 1) - binom(n64 - k64 - 1, k64 - 1) + 1u32
                );
            }
        }
    }
}
