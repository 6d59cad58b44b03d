//! Constructive peeling certificates for the edge-count lower bound.
//!
//! The peel removes one carefully chosen vertex per round. Each round grows
//! a chain of disjoint pairs `(A_j, B_j)` with the skew property (`A_i`
//! meets `B_j` for `i < j`); mirroring the chain shows it can never exceed
//! `C(2k-1, k-1)` pairs, so some chain vertex has degree at least
//! `|C| / m`, where `C` collects all neighbors of chain A-vertices. Summing
//! those degrees over rounds certifies
//! `|E(KG[A])| >= ceil(ell(A)^2 / C(2k,k))`. The transcript records enough
//! to re-check every step without re-running the peel.

use crate::bitset::IndexSet;
use crate::error::{Error, Result};
use crate::families;
use crate::kneser::{induce, Family, InducedGraph};
use crate::setcore::{binom, BigCount, FamilyMember};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Ordered pairs `(A_j, B_j)`, both k-sets here, intended to satisfy the
/// skew cross-intersecting conditions.
pub type SkewPairSequence = Vec<(FamilyMember, FamilyMember)>;

/// Outcome of checking a pair sequence against the skew conditions.
#[derive(Clone, Debug, Serialize)]
pub struct SkewReport {
    /// Both conditions hold: `A_i` disjoint `B_i`, and `A_i` meets `B_j`
    /// for all `i < j`.
    pub valid: bool,
    /// Index of the first failing pair condition, if any.
    pub first_failure: Option<String>,
    /// Number of pairs.
    pub h: usize,
    /// `C(k+l, k)`, the maximum possible `h` for a valid sequence.
    pub cap: String,
    /// `h <= C(k+l,k)`; must hold whenever `valid` does.
    pub within_cap: bool,
}

/// Checks the skew conditions on raw bitmask pairs with `|A_i| = k`,
/// `|B_i| = l`. Errors on a size mismatch; condition failures are reported
/// in the result, not as errors.
pub fn verify_skew(pairs: &[(u64, u64)], k: u32, l: u32) -> Result<SkewReport> {
    for &(a, b) in pairs {
        if a.count_ones() != k {
            return Err(Error::WrongCardinality {
                got: a.count_ones(),
                expected: k,
            });
        }
        if b.count_ones() != l {
            return Err(Error::WrongCardinality {
                got: b.count_ones(),
                expected: l,
            });
        }
    }
    let mut valid = true;
    let mut first_failure = None;
    'scan: for i in 0..pairs.len() {
        if pairs[i].0 & pairs[i].1 != 0 {
            valid = false;
            first_failure = Some(format!("pair {i}: A and B intersect"));
            break;
        }
        for j in (i + 1)..pairs.len() {
            if pairs[i].0 & pairs[j].1 == 0 {
                valid = false;
                first_failure = Some(format!("pairs {i} < {j}: A_{i} misses B_{j}"));
                break 'scan;
            }
        }
    }
    let cap = binom((k + l) as u64, k as u64);
    let within_cap = BigCount::from(pairs.len() as u64) <= cap;
    Ok(SkewReport {
        valid,
        first_failure,
        h: pairs.len(),
        cap: cap.to_string(),
        within_cap,
    })
}

/// Convenience for member pairs (`l = k`).
pub fn verify_skew_members(pairs: &SkewPairSequence) -> Result<SkewReport> {
    let k = match pairs.first() {
        Some((a, _)) => a.params().k(),
        None => {
            return Ok(SkewReport {
                valid: true,
                first_failure: None,
                h: 0,
                cap: binom(0, 0).to_string(),
                within_cap: true,
            })
        }
    };
    let raw: Vec<(u64, u64)> = pairs.iter().map(|(a, b)| (a.bits(), b.bits())).collect();
    verify_skew(&raw, k, k)
}

/// Extends an m-pair chain to 2m pairs by the mirror rule
/// `A_{m+j} = B_{m-j+1}`, `B_{m+j} = A_{m-j+1}`.
pub fn mirror_chain(chain: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let m = chain.len();
    let mut out = chain.to_vec();
    for j in (0..m).rev() {
        out.push((chain[j].1, chain[j].0));
    }
    out
}

/// One peel round, as recorded in the transcript. Member indices refer to
/// the colex-sorted input family; chain members are stored by value as
/// sorted element arrays.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PeelRound {
    /// The chain pairs `(A_j, B_j)` in order, as element lists.
    pub chain: Vec<(Vec<u32>, Vec<u32>)>,
    /// Chain length `m`.
    pub m: usize,
    /// Indices of all members of the current round family adjacent to some
    /// chain A-vertex.
    #[serde(rename = "C")]
    pub c: Vec<usize>,
    /// Index of the removed vertex: the chain A-vertex of maximum degree in
    /// the current round family (least index on ties).
    pub chosen: usize,
    /// Its degree within the current round family.
    pub degree: u64,
}

/// The full record of a peeling run.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PeelTranscript {
    pub n: u32,
    pub k: u32,
    pub rounds: Vec<PeelRound>,
    /// Number of rounds.
    pub p: usize,
    /// Indices of the residual (intersecting) family.
    pub residual: Vec<usize>,
}

impl PeelTranscript {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: format!("transcript: {e}"),
        })
    }
}

/// Colex-least edge within `alive`: smallest first endpoint, then smallest
/// second endpoint. At the first vertex with any alive neighbor, every
/// neighbor is larger (a smaller one would have stopped the scan earlier).
fn least_edge(graph: &InducedGraph, alive: &IndexSet) -> Option<(usize, usize)> {
    for a in alive.iter() {
        if let Some(b) = graph.row(a).intersection(alive).first() {
            debug_assert!(b > a);
            return Some((a, b));
        }
    }
    None
}

fn degree_in(graph: &InducedGraph, v: usize, alive: &IndexSet) -> usize {
    graph.row(v).intersection_count(alive)
}

fn has_edge(graph: &InducedGraph, alive: &IndexSet) -> bool {
    alive.iter().any(|v| degree_in(graph, v, alive) > 0)
}

/// Runs the deterministic peel: per round, build the chain by repeatedly
/// taking the colex-least remaining edge and deleting the neighborhood of
/// its A-endpoint; collect the chain A-vertices' neighbors as `C`; remove
/// the max-degree chain A-vertex; repeat until the residual is edgeless.
pub fn peel_decompose(family: &Family) -> PeelTranscript {
    let graph = induce(family);
    let mut alive = IndexSet::full(family.len());
    let mut rounds = Vec::new();

    while has_edge(&graph, &alive) {
        // Chain construction within this round.
        let mut surviving = alive.clone();
        let mut chain_idx: Vec<(usize, usize)> = Vec::new();
        while let Some((a, b)) = least_edge(&graph, &surviving) {
            chain_idx.push((a, b));
            surviving.subtract(graph.row(a));
        }
        let m = chain_idx.len();
        debug_assert!(m >= 1);

        // C: all vertices of the round family adjacent to a chain A-vertex.
        let mut c_set = IndexSet::empty(family.len());
        for &(a, _) in &chain_idx {
            c_set.union_with(&graph.row(a).intersection(&alive));
        }

        // Chosen vertex: chain A-vertex of maximum degree, least on ties.
        let (chosen, degree) = chain_idx
            .iter()
            .map(|&(a, _)| (a, degree_in(&graph, a, &alive)))
            .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
            .expect("nonempty chain");

        rounds.push(PeelRound {
            chain: chain_idx
                .iter()
                .map(|&(a, b)| {
                    (
                        family.members()[a].elements(),
                        family.members()[b].elements(),
                    )
                })
                .collect(),
            m,
            c: c_set.to_vec(),
            chosen,
            degree: degree as u64,
        });
        alive.remove(chosen);
    }

    PeelTranscript {
        n: family.params().n(),
        k: family.params().k(),
        p: rounds.len(),
        residual: alive.to_vec(),
        rounds,
    }
}

/// A named failed check from transcript verification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranscriptViolation {
    #[error("parameters: transcript says (n={0}, k={1}), family is {2}")]
    Params(u32, u32, String),
    #[error("round {round}: chain member {member} not alive in this round's family")]
    ChainMember { round: usize, member: String },
    #[error("round {round}: chain length (m={m} exceeds C(2k-1,k-1)={cap})")]
    ChainLength { round: usize, m: usize, cap: String },
    #[error("round {round}: skew condition ({detail})")]
    SkewCondition { round: usize, detail: String },
    #[error("round {round}: m field is {stored}, chain has {actual} pairs")]
    ChainCount {
        round: usize,
        stored: usize,
        actual: usize,
    },
    #[error("round {round}: neighbor set C mismatch")]
    NeighborSet { round: usize },
    #[error("round {round}: |C|={c_len} is below exact ell={ell} of the round family")]
    NeighborCount {
        round: usize,
        c_len: usize,
        ell: usize,
    },
    #[error("round {round}: chosen vertex {chosen} is not a chain A-vertex")]
    ChosenVertex { round: usize, chosen: usize },
    #[error("round {round}: chosen degree {stored} differs from recomputed {actual}")]
    ChosenDegree {
        round: usize,
        stored: u64,
        actual: u64,
    },
    #[error("round {round}: degree {degree} below ceil(|C|/m) = {need}")]
    DegreePigeonhole {
        round: usize,
        degree: u64,
        need: u64,
    },
    #[error("residual: stored indices differ from family minus chosen vertices")]
    Residual,
    #[error("residual family is not intersecting")]
    ResidualNotIntersecting,
    #[error("round count p={p} differs from {actual} recorded rounds")]
    RoundCount { p: usize, actual: usize },
    #[error("round count p={p} is below exact ell={ell}")]
    TooFewRounds { p: usize, ell: usize },
    #[error("sum of chosen degrees {sum} exceeds edge count {edges}")]
    DegreeSum { sum: u64, edges: u64 },
    #[error("edge count {edges} below certified lower bound {bound}")]
    EdgeLowerBound { edges: u64, bound: String },
    #[error("index {idx} out of range")]
    BadIndex { idx: usize },
}

/// Independently re-checks every invariant of a transcript against the
/// family alone. Returns the first failed check; a tampered transcript is a
/// verification failure, never a panic.
pub fn verify_transcript(t: &PeelTranscript, family: &Family) -> std::result::Result<(), TranscriptViolation> {
    let params = family.params();
    if t.n != params.n() || t.k != params.k() {
        return Err(TranscriptViolation::Params(
            t.n,
            t.k,
            params.to_string(),
        ));
    }
    if t.p != t.rounds.len() {
        return Err(TranscriptViolation::RoundCount {
            p: t.p,
            actual: t.rounds.len(),
        });
    }
    let graph = induce(family);
    let k = params.k() as u64;
    let chain_cap_big = binom(2 * k - 1, k - 1);

    // Reconstruct the alive set entering each round.
    let mut alive_sets: Vec<IndexSet> = Vec::with_capacity(t.rounds.len() + 1);
    let mut alive = IndexSet::full(family.len());
    for round in &t.rounds {
        alive_sets.push(alive.clone());
        if round.chosen >= family.len() {
            return Err(TranscriptViolation::BadIndex { idx: round.chosen });
        }
        alive.remove(round.chosen);
    }
    let final_alive = alive;

    let per_round = |(round_no, (round, alive)): (usize, (&PeelRound, &IndexSet))| -> std::result::Result<u64, TranscriptViolation> {
        if round.m != round.chain.len() {
            return Err(TranscriptViolation::ChainCount {
                round: round_no,
                stored: round.m,
                actual: round.chain.len(),
            });
        }
        // Resolve chain members to family indices; all must be alive.
        let mut chain_idx: Vec<(usize, usize)> = Vec::with_capacity(round.chain.len());
        let mut chain_raw: Vec<(u64, u64)> = Vec::with_capacity(round.chain.len());
        for (a_elems, b_elems) in &round.chain {
            let resolve = |elems: &Vec<u32>| -> std::result::Result<usize, TranscriptViolation> {
                let member = FamilyMember::from_elements(params, elems).map_err(|_| {
                    TranscriptViolation::ChainMember {
                        round: round_no,
                        member: format!("{elems:?}"),
                    }
                })?;
                match family.position(&member) {
                    Some(idx) if alive.contains(idx) => Ok(idx),
                    _ => Err(TranscriptViolation::ChainMember {
                        round: round_no,
                        member: member.to_string(),
                    }),
                }
            };
            let ai = resolve(a_elems)?;
            let bi = resolve(b_elems)?;
            chain_idx.push((ai, bi));
            chain_raw.push((
                family.members()[ai].bits(),
                family.members()[bi].bits(),
            ));
        }
        // Mirrored chain must satisfy the skew conditions with l = k.
        let mirrored = mirror_chain(&chain_raw);
        let report = verify_skew(&mirrored, params.k(), params.k())
            .map_err(|e| TranscriptViolation::SkewCondition {
                round: round_no,
                detail: e.to_string(),
            })?;
        if !report.valid {
            return Err(TranscriptViolation::SkewCondition {
                round: round_no,
                detail: report.first_failure.unwrap_or_default(),
            });
        }
        // 2m <= C(2k,k), i.e. m <= C(2k-1,k-1).
        if BigCount::from(round.m as u64) > chain_cap_big {
            return Err(TranscriptViolation::ChainLength {
                round: round_no,
                m: round.m,
                cap: chain_cap_big.to_string(),
            });
        }
        // C must be exactly the alive neighbors of chain A-vertices.
        let mut c_set = IndexSet::empty(family.len());
        for &(a, _) in &chain_idx {
            c_set.union_with(&graph.row(a).intersection(alive));
        }
        let stored_c = round.c.clone();
        if c_set.to_vec() != {
            let mut s = stored_c.clone();
            s.sort_unstable();
            s.dedup();
            s
        } {
            return Err(TranscriptViolation::NeighborSet { round: round_no });
        }
        // |C| >= ell of the round family, with ell exact.
        let round_family = family
            .subfamily(&alive.to_vec())
            .map_err(|_| TranscriptViolation::NeighborSet { round: round_no })?;
        let ell_report = families::ell(&round_family)
            .map_err(|_| TranscriptViolation::NeighborSet { round: round_no })?;
        if c_set.count() < ell_report.ell {
            return Err(TranscriptViolation::NeighborCount {
                round: round_no,
                c_len: c_set.count(),
                ell: ell_report.ell,
            });
        }
        // Chosen vertex: a chain A-vertex with the stored degree, which is
        // at least ceil(|C| / m).
        if !chain_idx.iter().any(|&(a, _)| a == round.chosen) {
            return Err(TranscriptViolation::ChosenVertex {
                round: round_no,
                chosen: round.chosen,
            });
        }
        let actual_degree = degree_in(&graph, round.chosen, alive) as u64;
        if actual_degree != round.degree {
            return Err(TranscriptViolation::ChosenDegree {
                round: round_no,
                stored: round.degree,
                actual: actual_degree,
            });
        }
        let need = (c_set.count() as u64).div_ceil(round.m as u64);
        if round.degree < need {
            return Err(TranscriptViolation::DegreePigeonhole {
                round: round_no,
                degree: round.degree,
                need,
            });
        }
        Ok(round.degree)
    };

    let results: Vec<std::result::Result<u64, TranscriptViolation>> = t
        .rounds
        .par_iter()
        .zip(alive_sets.par_iter())
        .enumerate()
        .map(per_round)
        .collect();
    let mut degree_sum = 0u64;
    for r in results {
        degree_sum += r?;
    }

    // Residual: exactly the untouched indices, inducing an edgeless graph.
    if final_alive.to_vec() != t.residual {
        return Err(TranscriptViolation::Residual);
    }
    if has_edge(&graph, &final_alive) {
        return Err(TranscriptViolation::ResidualNotIntersecting);
    }

    // Family-level inequalities, with ell exact.
    let edges = graph.edge_count() as u64;
    if degree_sum > edges {
        return Err(TranscriptViolation::DegreeSum {
            sum: degree_sum,
            edges,
        });
    }
    let ell_report = families::ell(family).map_err(|_| TranscriptViolation::Residual)?;
    if t.p < ell_report.ell {
        return Err(TranscriptViolation::TooFewRounds {
            p: t.p,
            ell: ell_report.ell,
        });
    }
    let bound = crate::bounds::edge_lower_bound(ell_report.ell as u64, k);
    if BigCount::from(edges) < bound {
        return Err(TranscriptViolation::EdgeLowerBound {
            edges,
            bound: bound.to_string(),
        });
    }
    Ok(())
}

/// Report for the single-chain variant used by the star-containment
/// argument for (1,t)-union intersecting families.
#[derive(Clone, Debug, Serialize)]
pub struct HmChainReport {
    /// Chain pairs as member indices `(A_j, B_j)`.
    pub chain: Vec<(usize, usize)>,
    pub m: usize,
    /// Indices of all neighbors of chain A-vertices.
    pub c: Vec<usize>,
    /// `m <= C(2k-1, k-1)`.
    pub chain_within_cap: bool,
    /// Maximum degree of the induced graph.
    pub max_degree: usize,
    /// `|C| <= (t-1) m`, reported when the max degree is at most `t-1`.
    pub neighbor_bound_ok: Option<bool>,
    /// Whether the family minus `C` is intersecting (it always must be).
    pub residual_intersecting: bool,
}

/// Builds the one-pass chain: same removal dynamics as a single peel round.
/// `C` collects the chain A-vertices' neighbors; `family - C` must be
/// intersecting, and when the max degree is below `t`, `|C| <= (t-1) m`.
pub fn hm_chain(family: &Family, t: u32) -> HmChainReport {
    let graph = induce(family);
    let all = IndexSet::full(family.len());
    let mut surviving = all.clone();
    let mut chain: Vec<(usize, usize)> = Vec::new();
    while let Some((a, b)) = least_edge(&graph, &surviving) {
        chain.push((a, b));
        surviving.subtract(graph.row(a));
    }
    let m = chain.len();
    let mut c_set = IndexSet::empty(family.len());
    for &(a, _) in &chain {
        c_set.union_with(graph.row(a));
    }
    let k = family.params().k() as u64;
    let chain_within_cap = BigCount::from(m as u64) <= binom(2 * k - 1, k - 1);
    let max_degree = graph.max_degree();
    let neighbor_bound_ok = if max_degree + 1 <= t as usize {
        Some(c_set.count() <= (t as usize - 1) * m)
    } else {
        None
    };
    let mut residual = all;
    residual.subtract(&c_set);
    let residual_family = family
        .subfamily(&residual.to_vec())
        .expect("indices in range");
    HmChainReport {
        chain,
        m,
        c: c_set.to_vec(),
        chain_within_cap,
        max_degree,
        neighbor_bound_ok,
        residual_intersecting: families::is_intersecting(&residual_family),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::{enumerate_all, GroundParams};

    fn fam(n: u32, k: u32, sets: &[&[u32]]) -> Family {
        let p = GroundParams::new(n, k).unwrap();
        Family::new(
            p,
            sets.iter()
                .map(|s| FamilyMember::from_elements(p, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn member(p: GroundParams, elems: &[u32]) -> FamilyMember {
        FamilyMember::from_elements(p, elems).unwrap()
    }

    #[test]
    fn skew_examples() {
        let p = GroundParams::new(8, 2).unwrap();
        let pair = |a: &[u32], b: &[u32]| (member(p, a).bits(), member(p, b).bits());

        let r = verify_skew(&[pair(&[1, 2], &[3, 4])], 2, 2).unwrap();
        assert!(r.valid && r.within_cap && r.h == 1);

        let r = verify_skew(
            &[pair(&[1, 2], &[3, 4]), pair(&[3, 4], &[1, 2])],
            2,
            2,
        )
        .unwrap();
        assert!(r.valid);

        let r = verify_skew(
            &[pair(&[1, 2], &[3, 4]), pair(&[5, 6], &[7, 8])],
            2,
            2,
        )
        .unwrap();
        assert!(!r.valid);
        assert!(r.first_failure.unwrap().contains("misses"));

        assert!(verify_skew(&[pair(&[1, 2], &[3, 4])], 3, 2).is_err());
    }

    #[test]
    fn mirrored_chain_is_skew_valid() {
        // A genuine removal chain from KG(5,2), mirrored.
        let f = Family::full(GroundParams::new(5, 2).unwrap());
        let t = peel_decompose(&f);
        for round in &t.rounds {
            let raw: Vec<(u64, u64)> = round
                .chain
                .iter()
                .map(|(a, b)| {
                    (
                        member(f.params(), a).bits(),
                        member(f.params(), b).bits(),
                    )
                })
                .collect();
            let mirrored = mirror_chain(&raw);
            let rep = verify_skew(&mirrored, 2, 2).unwrap();
            assert!(rep.valid, "round chain must be skew-valid");
            assert!(rep.within_cap);
            assert!(2 * round.m <= 6);
        }
    }

    #[test]
    fn peel_edgeless_family() {
        let f = fam(5, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        let t = peel_decompose(&f);
        assert_eq!(t.p, 0);
        assert_eq!(t.residual, vec![0, 1, 2]);
        assert!(verify_transcript(&t, &f).is_ok());
    }

    #[test]
    fn peel_two_disjoint_members() {
        let f = fam(5, 2, &[&[1, 2], &[3, 4]]);
        let t = peel_decompose(&f);
        assert_eq!(t.p, 1);
        assert_eq!(t.rounds[0].m, 1);
        assert_eq!(t.rounds[0].chain, vec![(vec![1, 2], vec![3, 4])]);
        assert_eq!(t.residual.len(), 1);
        assert!(verify_transcript(&t, &f).is_ok());
    }

    #[test]
    fn peel_full_petersen() {
        let f = Family::full(GroundParams::new(5, 2).unwrap());
        let t = peel_decompose(&f);
        assert!(verify_transcript(&t, &f).is_ok());
        let degree_sum: u64 = t.rounds.iter().map(|r| r.degree).sum();
        // ell = 6, C(4,2) = 6: the certified bound is 6.
        assert!(degree_sum >= 6);
        assert!(degree_sum <= 15);
        for round in &t.rounds {
            assert!(2 * round.m <= 6);
        }
    }

    #[test]
    fn peel_deterministic() {
        let f = Family::full(GroundParams::new(6, 2).unwrap());
        let t1 = peel_decompose(&f);
        let t2 = peel_decompose(&f);
        assert_eq!(t1, t2);
        assert_eq!(t1.to_json(), t2.to_json());
    }

    #[test]
    fn transcript_json_roundtrip() {
        let f = Family::full(GroundParams::new(5, 2).unwrap());
        let t = peel_decompose(&f);
        let parsed = PeelTranscript::from_json(&t.to_json()).unwrap();
        assert_eq!(parsed, t);
        assert!(verify_transcript(&parsed, &f).is_ok());
    }

    #[test]
    fn tampered_transcripts_are_rejected() {
        let f = Family::full(GroundParams::new(5, 2).unwrap());
        let good = peel_decompose(&f);

        // Tamper 1: make A_1 intersect B_1.
        let mut bad = good.clone();
        bad.rounds[0].chain[0].1 = bad.rounds[0].chain[0].0.clone();
        assert!(matches!(
            verify_transcript(&bad, &f),
            Err(TranscriptViolation::SkewCondition { .. })
        ));

        // Tamper 2: forge the chain length beyond C(2k-1,k-1) by repeating
        // pairs (also breaks skew, so force just the m field).
        let mut bad = good.clone();
        bad.rounds[0].m = 99;
        assert!(matches!(
            verify_transcript(&bad, &f),
            Err(TranscriptViolation::ChainCount { .. })
        ));

        // Tamper 3: wrong chosen vertex.
        let mut bad = good.clone();
        bad.rounds[0].chosen = bad.residual[0];
        let err = verify_transcript(&bad, &f);
        assert!(err.is_err());

        // Tamper 4: wrong degree.
        let mut bad = good.clone();
        bad.rounds[0].degree += 1;
        assert!(matches!(
            verify_transcript(&bad, &f),
            Err(TranscriptViolation::ChosenDegree { .. })
        ));

        // Tamper 5: drop a residual index.
        let mut bad = good.clone();
        bad.residual.pop();
        assert!(matches!(
            verify_transcript(&bad, &f),
            Err(TranscriptViolation::Residual)
        ));

        // Tamper 6: drop a round entirely.
        let mut bad = good.clone();
        bad.rounds.pop();
        bad.p -= 1;
        assert!(verify_transcript(&bad, &f).is_err());

        // Tamper 7: wrong parameters.
        let mut bad = good.clone();
        bad.k = 3;
        assert!(matches!(
            verify_transcript(&bad, &f),
            Err(TranscriptViolation::Params(..))
        ));
    }

    #[test]
    fn hm_chain_examples() {
        // Edgeless family: empty chain.
        let star = fam(5, 2, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5]]);
        let r = hm_chain(&star, 2);
        assert_eq!(r.m, 0);
        assert!(r.c.is_empty());
        assert!(r.residual_intersecting);

        // Star plus one outside member: a single chain pair.
        let mut members: Vec<FamilyMember> = star.members().to_vec();
        members.push(member(star.params(), &[3, 4]));
        let f = Family::new(star.params(), members).unwrap();
        let r = hm_chain(&f, 3);
        assert_eq!(r.m, 1);
        assert!(r.residual_intersecting);
        assert!(r.chain_within_cap);

        // Full KG(5,2) with t = 4 (max degree 3 <= t-1): |C| <= 3m.
        let full = Family::full(GroundParams::new(5, 2).unwrap());
        let r = hm_chain(&full, 4);
        assert_eq!(r.max_degree, 3);
        assert_eq!(r.neighbor_bound_ok, Some(true));
        assert!(r.residual_intersecting);
        assert!(r.chain_within_cap);
    }

    #[test]
    fn random_families_verify() {
        // Light determinism-plus-validity sweep; the heavy randomized suite
        // lives in the acceptance tests.
        let p = GroundParams::new(6, 2).unwrap();
        let all: Vec<FamilyMember> = enumerate_all(p).collect();
        for seed in 0u32..200 {
            let mask = seed.wrapping_mul(2654435761) % (1 << 15);
            let members: Vec<FamilyMember> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| *m)
                .collect();
            let f = Family::new(p, members).unwrap();
            let t = peel_decompose(&f);
            assert!(verify_transcript(&t, &f).is_ok(), "seed {seed}");
        }
    }
}
