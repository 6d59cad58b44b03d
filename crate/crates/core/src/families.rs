//! Property checkers for families: intersecting, star, union-intersecting,
//! and the statistic `ell(A)` measuring the distance from the largest
//! intersecting subfamily.

use crate::error::{Error, Result};
use crate::kneser::{induce, Family};
use crate::mis;
use crate::pattern::{self, PatternGraph};

/// Largest family size accepted by [`ell`]; beyond this the exact maximum
/// independent set search is not attempted and callers should fall back to
/// bound-only reasoning.
pub const MAX_ELL_MEMBERS: usize = 2048;

/// Two disjoint groups of member indices whose unions are disjoint,
/// witnessing failure of the (s,t)-union intersecting property. For the
/// plain intersecting property both sides are singletons.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ViolationWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// `None` when the family is intersecting; otherwise one disjoint pair.
pub fn intersecting_violation(family: &Family) -> Option<ViolationWitness> {
    let members = family.members();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if !members[i].intersects(&members[j]) {
                return Some(ViolationWitness {
                    left: vec![i],
                    right: vec![j],
                });
            }
        }
    }
    None
}

pub fn is_intersecting(family: &Family) -> bool {
    intersecting_violation(family).is_none()
}

/// Least element contained in every member, or `None` when the common
/// intersection is empty. The empty family reports center 1 by convention
/// (it is vacuously a subfamily of every star).
pub fn star_center(family: &Family) -> Option<u32> {
    let mask = family.common_elements_mask();
    if mask == 0 {
        None
    } else {
        Some(mask.trailing_zeros() + 1)
    }
}

pub fn is_star(family: &Family) -> bool {
    star_center(family).is_some()
}

/// Checks the (s,t)-union intersecting property: no `s` members and `t`
/// further members whose two unions are disjoint. Equivalently, the induced
/// Kneser subgraph contains no `K_{s,t}`, which is how the check runs.
pub fn union_intersecting_violation(
    family: &Family,
    s: usize,
    t: usize,
) -> Result<Option<ViolationWitness>> {
    if s < 1 || t < s {
        return Err(Error::InvalidArgument(format!(
            "need t >= s >= 1, got s={s}, t={t}"
        )));
    }
    let g = PatternGraph::complete_bipartite(s, t)?;
    let graph = induce(family);
    Ok(pattern::contains_pattern(&graph, &g).map(|hit| ViolationWitness {
        left: hit[..s].to_vec(),
        right: hit[s..].to_vec(),
    }))
}

pub fn is_union_intersecting(family: &Family, s: usize, t: usize) -> Result<bool> {
    Ok(union_intersecting_violation(family, s, t)?.is_none())
}

/// The `ell` statistic and its witnesses.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EllReport {
    /// Size of a maximum intersecting subfamily (independence number of the
    /// induced graph).
    pub alpha: usize,
    /// `|A| - alpha`.
    pub ell: usize,
    /// Common element when the reported maximum intersecting subfamily is
    /// a star.
    pub witness_star_center: Option<u32>,
    /// Lexicographically least maximum intersecting subfamily, as member
    /// indices.
    pub astar_indices: Vec<usize>,
}

/// Exact `ell(A) = |A| - alpha(KG[A])` with a deterministic witness.
pub fn ell(family: &Family) -> Result<EllReport> {
    if family.len() > MAX_ELL_MEMBERS {
        return Err(Error::InstanceTooLarge {
            size: family.len() as u64,
            cap: MAX_ELL_MEMBERS as u64,
            mode: "exact ell",
        });
    }
    let graph = induce(family);
    let (alpha, _) = mis::independence_number(graph.rows());
    let astar_indices = mis::lex_least_independent_set(graph.rows(), alpha)
        .expect("alpha is attained");
    let astar = family.subfamily(&astar_indices)?;
    Ok(EllReport {
        alpha,
        ell: family.len() - alpha,
        witness_star_center: star_center(&astar),
        astar_indices,
    })
}
