//! Exact maximum pattern-free family search, with an exhaustive oracle as
//! independent ground truth.
//!
//! The branch-and-bound decides members in colex order and keeps the chosen
//! family pattern-free incrementally: only embeddings through the newly
//! added member are searched. The upper bound is the trivial
//! `size + remaining`; for the independent-set case (pattern `K_2`) a
//! greedy clique cover tightens it. The oracle simply scans all subfamilies
//! by descending size, so agreement between the two engines is a meaningful
//! check on both.

use crate::bitset::IndexSet;
use crate::bounds;
use crate::error::{Error, Result};
use crate::kneser::{induce, Family};
use crate::pattern::{self, PatternGraph};
use crate::setcore::{enumerate_all, BigCount, FamilyMember, GroundParams};
use serde::Serialize;

/// Vertex cap for branch-and-bound instances.
pub const BNB_VERTEX_CAP: u64 = 3000;
/// Vertex cap for the exhaustive oracle (it scans all `2^N` subfamilies).
pub const ORACLE_VERTEX_CAP: u64 = 24;
/// Maximum number of optimum families stored when enumerating; the count
/// keeps running past it and the certificate flags the truncation.
pub const EXTREMA_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    BranchAndBound,
    ExhaustiveOracle,
}

/// Result of an exact search: the optimum, one witness, optionally every
/// optimum, and enough metadata to audit the run.
#[derive(Clone, Debug, Serialize)]
pub struct SearchCertificate {
    pub params: GroundParams,
    pub pattern: String,
    pub optimum: usize,
    pub witness: Family,
    pub all_extrema: Option<Vec<Family>>,
    /// Total number of optima found while enumerating (may exceed the
    /// stored list when truncated).
    pub extrema_count: Option<u64>,
    pub extrema_truncated: bool,
    pub nodes_explored: u64,
    pub mode: SearchMode,
}

impl SearchCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn universe_rows(params: GroundParams) -> (Vec<FamilyMember>, Vec<IndexSet>) {
    let universe: Vec<FamilyMember> = enumerate_all(params).collect();
    let n = universe.len();
    let mut rows = vec![IndexSet::empty(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if !universe[i].intersects(&universe[j]) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    (universe, rows)
}

fn clique_cover_bound(rows: &[IndexSet], cand: &IndexSet, order: &[usize]) -> usize {
    let mut cliques: Vec<IndexSet> = Vec::new();
    for &v in order {
        if !cand.contains(v) {
            continue;
        }
        let mut placed = false;
        for clique in cliques.iter_mut() {
            if clique.is_subset_of(&rows[v]) {
                clique.insert(v);
                placed = true;
                break;
            }
        }
        if !placed {
            let mut c = IndexSet::empty(rows.len());
            c.insert(v);
            cliques.push(c);
        }
    }
    cliques.len()
}

struct Engine<'a> {
    rows: &'a [IndexSet],
    pattern: &'a PatternGraph,
    /// Pattern is a single edge: maintain candidate filtering and the
    /// clique-cover bound instead of embedding checks.
    independent_mode: bool,
    cover_order: Vec<usize>,
    chosen_mask: IndexSet,
    chosen: Vec<usize>,
    nodes: u64,
}

impl<'a> Engine<'a> {
    fn new(rows: &'a [IndexSet], pattern: &'a PatternGraph) -> Self {
        let mut cover_order: Vec<usize> = (0..rows.len()).collect();
        cover_order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count()));
        let independent_mode = pattern.order() == 2 && pattern.edge_count() == 1;
        Engine {
            rows,
            pattern,
            independent_mode,
            cover_order,
            chosen_mask: IndexSet::empty(rows.len()),
            chosen: Vec::new(),
            nodes: 0,
        }
    }

    /// Can the colex-least available member join the chosen family without
    /// completing a pattern copy? Mutates nothing on failure.
    fn try_include(&mut self, v: usize) -> bool {
        self.chosen_mask.insert(v);
        if self.independent_mode {
            // Availability filtering already excludes conflicting members.
            return true;
        }
        if pattern::embed_masked(self.rows, &self.chosen_mask, self.pattern, Some(v)).is_none() {
            true
        } else {
            self.chosen_mask.remove(v);
            false
        }
    }

    fn undo_include(&mut self, v: usize) {
        self.chosen_mask.remove(v);
    }

    fn optimize(
        &mut self,
        avail: IndexSet,
        size: usize,
        best: &mut usize,
        witness: &mut Vec<usize>,
    ) {
        self.nodes += 1;
        if size > *best {
            *best = size;
            *witness = self.chosen.clone();
        }
        let v = match avail.first() {
            Some(v) => v,
            None => return,
        };
        if size + avail.count() <= *best {
            return;
        }
        if self.independent_mode
            && size + clique_cover_bound(self.rows, &avail, &self.cover_order) <= *best
        {
            return;
        }
        let mut included = avail.clone();
        included.remove(v);
        if self.independent_mode {
            included.subtract(&self.rows[v]);
        }
        if self.try_include(v) {
            self.chosen.push(v);
            self.optimize(included, size + 1, best, witness);
            self.chosen.pop();
            self.undo_include(v);
        }
        let mut excluded = avail;
        excluded.remove(v);
        self.optimize(excluded, size, best, witness);
    }

    fn enumerate(
        &mut self,
        avail: IndexSet,
        size: usize,
        target: usize,
        out: &mut Vec<Vec<usize>>,
        count: &mut u64,
        truncated: &mut bool,
    ) {
        self.nodes += 1;
        if size == target {
            *count += 1;
            if out.len() < EXTREMA_CAP {
                out.push(self.chosen.clone());
            } else {
                *truncated = true;
            }
            return;
        }
        if size + avail.count() < target {
            return;
        }
        if self.independent_mode
            && size + clique_cover_bound(self.rows, &avail, &self.cover_order) < target
        {
            return;
        }
        let v = match avail.first() {
            Some(v) => v,
            None => return,
        };
        let mut included = avail.clone();
        included.remove(v);
        if self.independent_mode {
            included.subtract(&self.rows[v]);
        }
        if self.try_include(v) {
            self.chosen.push(v);
            self.enumerate(included, size + 1, target, out, count, truncated);
            self.chosen.pop();
            self.undo_include(v);
        }
        let mut excluded = avail;
        excluded.remove(v);
        self.enumerate(excluded, size, target, out, count, truncated);
    }
}

/// Exact maximum size of a family whose induced Kneser subgraph contains no
/// copy of `g`, by branch and bound; optionally enumerates every optimum.
pub fn max_pattern_free(
    params: GroundParams,
    g: &PatternGraph,
    enumerate_extrema: bool,
) -> Result<SearchCertificate> {
    let n_vertices = params.member_count();
    if n_vertices > BNB_VERTEX_CAP {
        return Err(Error::InstanceTooLarge {
            size: n_vertices,
            cap: BNB_VERTEX_CAP,
            mode: "branch-and-bound search",
        });
    }
    let (universe, rows) = universe_rows(params);
    let mut engine = Engine::new(&rows, g);
    let mut best = 0usize;
    let mut witness_idx: Vec<usize> = Vec::new();
    engine.optimize(IndexSet::full(universe.len()), 0, &mut best, &mut witness_idx);

    let mut all_extrema = None;
    let mut extrema_count = None;
    let mut truncated = false;
    if enumerate_extrema {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut count = 0u64;
        engine.enumerate(
            IndexSet::full(universe.len()),
            0,
            best,
            &mut sets,
            &mut count,
            &mut truncated,
        );
        sets.sort();
        let families: Result<Vec<Family>> = sets
            .iter()
            .map(|idxs| {
                Family::new(params, idxs.iter().map(|&i| universe[i]).collect())
            })
            .collect();
        all_extrema = Some(families?);
        extrema_count = Some(count);
    }

    let witness = Family::new(
        params,
        witness_idx.iter().map(|&i| universe[i]).collect(),
    )?;
    Ok(SearchCertificate {
        params,
        pattern: g.label().to_string(),
        optimum: best,
        witness,
        all_extrema,
        extrema_count,
        extrema_truncated: truncated,
        nodes_explored: engine.nodes,
        mode: SearchMode::BranchAndBound,
    })
}

/// Independent ground truth: scans all subfamilies by descending size; the
/// first size admitting a pattern-free subfamily is the optimum, and every
/// optimum at that size is collected.
pub fn exhaustive_oracle(params: GroundParams, g: &PatternGraph) -> Result<SearchCertificate> {
    let n_vertices = params.member_count();
    if n_vertices > ORACLE_VERTEX_CAP {
        return Err(Error::InstanceTooLarge {
            size: n_vertices,
            cap: ORACLE_VERTEX_CAP,
            mode: "exhaustive oracle",
        });
    }
    let (universe, rows) = universe_rows(params);
    let nv = universe.len();
    let mut nodes = 0u64;

    for size in (0..=nv).rev() {
        let mut hits: Vec<Vec<usize>> = Vec::new();
        let mut truncated = false;
        let mut count = 0u64;
        let mut mask: u64 = if size == 0 { 0 } else { (1u64 << size) - 1 };
        loop {
            nodes += 1;
            let allowed = IndexSet::from_indices(
                nv,
                &(0..nv).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>(),
            );
            if pattern::embed_masked(&rows, &allowed, g, None).is_none() {
                count += 1;
                if hits.len() < EXTREMA_CAP {
                    hits.push(allowed.to_vec());
                } else {
                    truncated = true;
                }
            }
            if size == 0 {
                break;
            }
            // Gosper's hack, stopping once the next mask leaves the range.
            let low = mask & mask.wrapping_neg();
            let carry = mask + low;
            let next = carry | (((mask ^ carry) / low) >> 2);
            if next >= 1u64 << nv {
                break;
            }
            mask = next;
        }
        if !hits.is_empty() {
            hits.sort();
            let witness = Family::new(
                params,
                hits[0].iter().map(|&i| universe[i]).collect(),
            )?;
            let families: Result<Vec<Family>> = hits
                .iter()
                .map(|idxs| Family::new(params, idxs.iter().map(|&i| universe[i]).collect()))
                .collect();
            return Ok(SearchCertificate {
                params,
                pattern: g.label().to_string(),
                optimum: size,
                witness,
                all_extrema: Some(families?),
                extrema_count: Some(count),
                extrema_truncated: truncated,
                nodes_explored: nodes,
                mode: SearchMode::ExhaustiveOracle,
            });
        }
    }
    unreachable!("the empty family is always pattern-free");
}

/// Exact maximum intersecting family contained in no star.
pub fn max_intersecting_nontrivial(params: GroundParams) -> Result<SearchCertificate> {
    let n_vertices = params.member_count();
    if n_vertices > BNB_VERTEX_CAP {
        return Err(Error::InstanceTooLarge {
            size: n_vertices,
            cap: BNB_VERTEX_CAP,
            mode: "branch-and-bound search",
        });
    }
    let (universe, rows) = universe_rows(params);
    let nv = universe.len();
    let mut cover_order: Vec<usize> = (0..nv).collect();
    cover_order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count()));

    struct State<'a> {
        universe: &'a [FamilyMember],
        rows: &'a [IndexSet],
        cover_order: &'a [usize],
        chosen: Vec<usize>,
        best: usize,
        witness: Vec<usize>,
        nodes: u64,
        ground: u64,
    }
    // `common` is the AND of chosen members' element masks: zero exactly
    // when no single element hits every chosen member, i.e. nontrivial.
    fn rec(st: &mut State, avail: IndexSet, size: usize, common: u64) {
        st.nodes += 1;
        if common == 0 && size > st.best {
            st.best = size;
            st.witness = st.chosen.clone();
        }
        let v = match avail.first() {
            Some(v) => v,
            None => return,
        };
        if size + avail.count() <= st.best {
            return;
        }
        if size + clique_cover_bound(st.rows, &avail, st.cover_order) <= st.best {
            return;
        }
        // If some element common to the chosen members sits in every
        // available member too, this subtree only produces stars.
        if common != 0 {
            let all_avail = avail
                .iter()
                .fold(st.ground, |acc, i| acc & st.universe[i].bits());
            if common & all_avail != 0 {
                return;
            }
        }
        let mut included = avail.clone();
        included.remove(v);
        included.subtract(&st.rows[v]);
        st.chosen.push(v);
        rec(st, included, size + 1, common & st.universe[v].bits());
        st.chosen.pop();
        let mut excluded = avail;
        excluded.remove(v);
        rec(st, excluded, size, common);
    }

    let ground = if params.n() == 64 {
        u64::MAX
    } else {
        (1u64 << params.n()) - 1
    };
    let mut st = State {
        universe: &universe,
        rows: &rows,
        cover_order: &cover_order,
        chosen: Vec::new(),
        best: 0,
        witness: Vec::new(),
        nodes: 0,
        ground,
    };
    rec(&mut st, IndexSet::full(nv), 0, ground);

    let witness = Family::new(
        params,
        st.witness.iter().map(|&i| universe[i]).collect(),
    )?;
    Ok(SearchCertificate {
        params,
        pattern: "nontrivial-intersecting".to_string(),
        optimum: st.best,
        witness,
        all_extrema: None,
        extrema_count: None,
        extrema_truncated: false,
        nodes_explored: st.nodes,
        mode: SearchMode::BranchAndBound,
    })
}

/// The extremal decomposition of a bound-attaining pattern-free family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureWitness {
    /// The `(q-1)`-set whose constellation carries the bulk of the family.
    pub l: Vec<u32>,
    /// Indices of the `eta - 1` members outside the constellation.
    pub extras: Vec<usize>,
}

/// For a family attaining the pattern-free bound, searches all `(q-1)`-sets
/// `L` (in lexicographic order) for one with exactly `eta - 1` members
/// outside `C(L)` whose induced graph avoids every minimal special subgraph
/// of `g`. Errors if the family size differs from the bound.
pub fn verify_extremal_structure(
    family: &Family,
    g: &PatternGraph,
) -> Result<Option<StructureWitness>> {
    let params = family.params();
    let report = bounds::pattern_free_bound(params.n() as u64, params.k() as u64, g);
    if BigCount::from(family.len() as u64) != report.bound {
        return Err(Error::InvalidArgument(format!(
            "family has {} members but the pattern-free bound is {}",
            family.len(),
            report.bound
        )));
    }
    let stats = pattern::eta(g);
    let want_extras = stats.eta - 1;
    let specials = pattern::special_sets(g, true);

    let mut combo: Vec<u32> = Vec::with_capacity(stats.q - 1);
    fn search(
        family: &Family,
        specials: &[pattern::SpecialSet],
        combo: &mut Vec<u32>,
        from: u32,
        left: usize,
        want_extras: usize,
    ) -> Result<Option<StructureWitness>> {
        if left == 0 {
            let l_mask: u64 = combo.iter().fold(0, |acc, &e| acc | 1 << (e - 1));
            let extras: Vec<usize> = (0..family.len())
                .filter(|&i| family.members()[i].bits() & l_mask == 0)
                .collect();
            if extras.len() != want_extras {
                return Ok(None);
            }
            let extras_family = family.subfamily(&extras)?;
            let graph = induce(&extras_family);
            let clean = specials
                .iter()
                .all(|s| pattern::contains_pattern(&graph, &s.induced).is_none());
            return Ok(if clean {
                Some(StructureWitness {
                    l: combo.clone(),
                    extras,
                })
            } else {
                None
            });
        }
        for e in from..=(family.params().n() - left as u32 + 1) {
            combo.push(e);
            if let Some(hit) = search(family, specials, combo, e + 1, left - 1, want_extras)? {
                return Ok(Some(hit));
            }
            combo.pop();
        }
        Ok(None)
    }
    search(family, &specials, &mut combo, 1, stats.q - 1, want_extras)
}
