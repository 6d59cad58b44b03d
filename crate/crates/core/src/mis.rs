//! Exact maximum independent set over adjacency bitset rows.
//!
//! Branch and bound with a greedy clique-cover upper bound: any clique
//! meets an independent set in at most one vertex, so the number of cliques
//! in a cover of the candidate set bounds what the branch can still add.

use crate::bitset::IndexSet;

/// Static vertex order for the greedy cover, by degree descending.
fn cover_order(rows: &[IndexSet]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count()));
    order
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

/// Candidate vertex of maximum degree within `cand`, least index on ties.
fn max_degree_vertex(rows: &[IndexSet], cand: &IndexSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in cand.iter() {
        let d = rows[v].intersection_count(cand);
        match best {
            Some((_, bd)) if bd >= d => {}
            _ => best = Some((v, d)),
        }
    }
    best.map(|(v, _)| v)
}

/// Exact independence number; also counts explored nodes.
pub(crate) fn independence_number(rows: &[IndexSet]) -> (usize, u64) {
    let order = cover_order(rows);
    let mut best = 0usize;
    let mut nodes = 0u64;
    fn rec(
        rows: &[IndexSet],
        order: &[usize],
        cand: IndexSet,
        size: usize,
        best: &mut usize,
        nodes: &mut u64,
    ) {
        *nodes += 1;
        if size > *best {
            *best = size;
        }
        if cand.is_empty() || size + cand.count() <= *best {
            return;
        }
        if size + clique_cover_bound(rows, &cand, order) <= *best {
            return;
        }
        let v = max_degree_vertex(rows, &cand).expect("cand nonempty");
        let mut with_v = cand.clone();
        with_v.subtract(&rows[v]);
        with_v.remove(v);
        rec(rows, order, with_v, size + 1, best, nodes);
        let mut without_v = cand;
        without_v.remove(v);
        rec(rows, order, without_v, size, best, nodes);
    }
    rec(
        rows,
        &order,
        IndexSet::full(rows.len()),
        0,
        &mut best,
        &mut nodes,
    );
    (best, nodes)
}

/// Lexicographically least independent set of exactly `target` vertices
/// (compared as increasing index sequences), or `None`.
pub(crate) fn lex_least_independent_set(
    rows: &[IndexSet],
    target: usize,
) -> Option<Vec<usize>> {
    if target == 0 {
        return Some(Vec::new());
    }
    let order = cover_order(rows);
    let mut chosen = Vec::with_capacity(target);
    fn rec(
        rows: &[IndexSet],
        order: &[usize],
        cand: IndexSet,
        chosen: &mut Vec<usize>,
        target: usize,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        let missing = target - chosen.len();
        if cand.count() < missing {
            return false;
        }
        if clique_cover_bound(rows, &cand, order) < missing {
            return false;
        }
        let v = match cand.first() {
            Some(v) => v,
            None => return false,
        };
        // Taking the smallest available index first makes the first full
        // solution the lexicographically least one.
        let mut with_v = cand.clone();
        with_v.subtract(&rows[v]);
        with_v.remove(v);
        chosen.push(v);
        if rec(rows, order, with_v, chosen, target) {
            return true;
        }
        chosen.pop();
        let mut without_v = cand;
        without_v.remove(v);
        rec(rows, order, without_v, chosen, target)
    }
    if rec(
        rows,
        &order,
        IndexSet::full(rows.len()),
        &mut chosen,
        target,
    ) {
        Some(chosen)
    } else {
        None
    }
}
