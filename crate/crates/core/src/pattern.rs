//! Forbidden pattern graphs: chromatic data and subgraph containment.
//!
//! A [`PatternGraph`] is the small graph `G` whose copies are forbidden
//! inside an induced Kneser subgraph. The quantities that drive the bounds
//! are its chromatic number `q`, the minimum color-class size `eta` over
//! all proper q-colorings, and its special vertex sets (sets whose removal
//! drops the chromatic number by exactly one). Containment is monotone
//! (non-induced) subgraph isomorphism, which is the notion under which
//! forbidding a pattern is a hereditary property.

use crate::bitset::IndexSet;
use crate::error::{Error, Result};
use crate::kneser::InducedGraph;

/// Largest supported pattern order.
pub const MAX_PATTERN_ORDER: usize = 12;

/// A small simple graph, adjacency stored as one bitmask row per vertex.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    label: String,
    m: usize,
    adj: Vec<u16>,
}

impl PartialEq for PatternGraph {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.adj == other.adj
    }
}
impl Eq for PatternGraph {}

impl PatternGraph {
    /// Builds a pattern from 0-indexed edges. Loops are rejected; duplicate
    /// edges collapse.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if m == 0 || m > MAX_PATTERN_ORDER {
            return Err(Error::PatternTooLarge { m });
        }
        let mut adj = vec![0u16; m];
        for &(u, v) in edges {
            if u >= m || v >= m {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {m} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut g = PatternGraph {
            label: String::new(),
            m,
            adj,
        };
        g.label = g.edge_list_label();
        Ok(g)
    }

    pub fn complete(m: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..m {
            for v in (u + 1)..m {
                edges.push((u, v));
            }
        }
        let mut g = Self::from_edges(m, &edges)?;
        g.label = format!("K{m}");
        Ok(g)
    }

    /// `K_{s,t}`: vertices `0..s` on one side, `s..s+t` on the other.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidArgument(
                "bipartite sides must be nonempty".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..s {
            for v in 0..t {
                edges.push((u, s + v));
            }
        }
        let mut g = Self::from_edges(s + t, &edges)?;
        g.label = format!("K_{{{s},{t}}}");
        Ok(g)
    }

    /// Path on `m` vertices.
    pub fn path(m: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..m).map(|v| (v - 1, v)).collect();
        let mut g = Self::from_edges(m, &edges)?;
        g.label = format!("P{m}");
        Ok(g)
    }

    /// Cycle on `m >= 3` vertices.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "cycle needs at least 3 vertices, got {m}"
            )));
        }
        let mut edges: Vec<(usize, usize)> = (1..m).map(|v| (v - 1, v)).collect();
        edges.push((m - 1, 0));
        let mut g = Self::from_edges(m, &edges)?;
        g.label = format!("C{m}");
        Ok(g)
    }

    /// Edgeless graph on `m` vertices.
    pub fn edgeless(m: usize) -> Result<Self> {
        let mut g = Self::from_edges(m, &[])?;
        g.label = format!("E{m}");
        Ok(g)
    }

    /// Parses a shorthand like `K3`, `K_{2,3}`, `C5`, `P4`, `E3`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let bad = |msg: &str| Error::PatternSpec {
            spec: spec.to_string(),
            msg: msg.to_string(),
        };
        let s = spec.trim();
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(|| bad("empty spec"))?;
        let rest: String = chars
            .as_str()
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect();
        let nums: Vec<usize> = rest
            .split(',')
            .map(|tok| tok.parse::<usize>().map_err(|_| bad("expected integers")))
            .collect::<Result<_>>()?;
        match (kind.to_ascii_uppercase(), nums.as_slice()) {
            ('K', [m]) => Self::complete(*m),
            ('K', [s, t]) => Self::complete_bipartite(*s, *t),
            ('C', [m]) => Self::cycle(*m),
            ('P', [m]) => Self::path(*m),
            ('E', [m]) => Self::edgeless(*m),
            _ => Err(bad("expected K<m>, K_{s,t}, C<m>, P<m>, or E<m>")),
        }
    }

    /// Parses the pattern file format: first line the order `m`, then one
    /// 1-indexed edge `u v` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input, expected order m".into(),
        })?;
        let m: usize = header.trim().parse().map_err(|e| Error::Parse {
            line: 1,
            msg: format!("bad order: {e}"),
        })?;
        let mut edges = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected an edge \"u v\"".into(),
                });
            }
            let parse = |tok: &str| -> Result<usize> {
                let v: usize = tok.parse().map_err(|e| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex {tok:?}: {e}"),
                })?;
                if v == 0 || v > m {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {v} out of range 1..={m}"),
                    });
                }
                Ok(v - 1)
            };
            edges.push((parse(toks[0])?, parse(toks[1])?));
        }
        Self::from_edges(m, &edges)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.m && v < self.m && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 0-indexed pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.m {
            for v in (u + 1)..self.m {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn edge_list_label(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        format!("G(m={};{})", self.m, edges.join(","))
    }

    /// Induced subgraph on `vertices`, relabelled to `0..vertices.len()`.
    pub fn induced_on(&self, vertices: &[usize]) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            if u >= self.m {
                return Err(Error::InvalidArgument(format!("vertex {u} out of range")));
            }
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a, b));
                }
            }
        }
        Self::from_edges(vertices.len(), &edges)
    }

    fn full_mask(&self) -> u16 {
        ((1u32 << self.m) - 1) as u16
    }

    /// Exact size of a maximum clique inside `mask`.
    fn max_clique_masked(&self, mask: u16) -> usize {
        fn rec(adj: &[u16], mut cand: u16, size: usize, best: &mut usize) {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                rec(adj, cand & adj[v], size + 1, best);
            }
        }
        let mut best = 0;
        rec(&self.adj, mask, 0, &mut best);
        best
    }

    fn colorable_masked(&self, mask: u16, q: usize) -> bool {
        let verts: Vec<usize> = (0..self.m).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.is_empty() {
            return true;
        }
        fn rec(g: &PatternGraph, verts: &[usize], colors: &mut [usize], at: usize, q: usize) -> bool {
            if at == verts.len() {
                return true;
            }
            let v = verts[at];
            // Introducing colors in order kills permutation symmetry.
            let max_used = colors[..at].iter().copied().max().map_or(0, |c| c + 1);
            for c in 0..q.min(max_used + 1) {
                let clash = (0..at).any(|j| colors[j] == c && g.has_edge(verts[j], v));
                if !clash {
                    colors[at] = c;
                    if rec(g, verts, colors, at + 1, q) {
                        return true;
                    }
                }
            }
            false
        }
        let mut colors = vec![0usize; verts.len()];
        rec(self, &verts, &mut colors, 0, q)
    }

    /// Chromatic number of the subgraph induced on `mask` (0 when empty).
    fn chromatic_masked(&self, mask: u16) -> usize {
        if mask == 0 {
            return 0;
        }
        let mut q = self.max_clique_masked(mask);
        while !self.colorable_masked(mask, q) {
            q += 1;
        }
        q
    }
}

impl std::fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label)
    }
}

/// Exact chromatic number of the pattern.
pub fn chromatic_number(g: &PatternGraph) -> usize {
    g.chromatic_masked(g.full_mask())
}

/// Chromatic number `q`, minimum color-class size `eta`, and a witness
/// proper q-coloring attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringStats {
    pub q: usize,
    pub eta: usize,
    pub witness: Vec<Vec<usize>>,
}

/// Minimum color-class size over all proper `chi(G)`-colorings.
pub fn eta(g: &PatternGraph) -> ColoringStats {
    let q = chromatic_number(g);
    let m = g.order();
    let mut best = m + 1;
    let mut witness: Vec<Vec<usize>> = Vec::new();

    fn rec(
        g: &PatternGraph,
        colors: &mut Vec<usize>,
        used: usize,
        q: usize,
        best: &mut usize,
        witness: &mut Vec<Vec<usize>>,
    ) {
        if *best == 1 {
            return;
        }
        let at = colors.len();
        let m = g.order();
        if at == m {
            if used == q {
                let mut sizes = vec![0usize; q];
                for &c in colors.iter() {
                    sizes[c] += 1;
                }
                let min = *sizes.iter().min().unwrap();
                if min < *best {
                    *best = min;
                    let mut classes = vec![Vec::new(); q];
                    for (v, &c) in colors.iter().enumerate() {
                        classes[c].push(v);
                    }
                    *witness = classes;
                }
            }
            return;
        }
        // All classes, once present, only grow; prune when they already
        // dominate the incumbent and no new class can appear smaller.
        if used == q && *best <= m {
            let mut sizes = vec![0usize; q];
            for &c in colors.iter() {
                sizes[c] += 1;
            }
            if *sizes.iter().min().unwrap() >= *best {
                return;
            }
        }
        // Unused colors must still fit in the remaining vertices.
        if q - used > m - at {
            return;
        }
        for c in 0..q.min(used + 1) {
            let clash = (0..at).any(|u| colors[u] == c && g.has_edge(u, at));
            if !clash {
                colors.push(c);
                rec(g, colors, used.max(c + 1), q, best, witness);
                colors.pop();
            }
        }
    }

    let mut colors = Vec::with_capacity(m);
    rec(g, &mut colors, 0, q, &mut best, &mut witness);
    debug_assert!(best <= m);
    ColoringStats {
        q,
        eta: best,
        witness,
    }
}

/// A vertex set whose removal drops the chromatic number by exactly one,
/// together with the subgraph it induces.
#[derive(Clone, Debug)]
pub struct SpecialSet {
    pub vertices: Vec<usize>,
    pub induced: PatternGraph,
}

/// All (or only the inclusion-minimal) special vertex sets of `g`.
pub fn special_sets(g: &PatternGraph, minimal_only: bool) -> Vec<SpecialSet> {
    let q = chromatic_number(g);
    let full = g.full_mask();
    let mut masks: Vec<u16> = Vec::new();
    for sub in 1..=(full as u32) {
        let sub = sub as u16;
        if sub & !full != 0 {
            continue;
        }
        if g.chromatic_masked(full & !sub) + 1 == q {
            masks.push(sub);
        }
    }
    if minimal_only {
        masks = masks
            .iter()
            .copied()
            .filter(|&s| {
                !masks
                    .iter()
                    .any(|&t| t != s && t & !s == 0)
            })
            .collect();
    }
    masks
        .into_iter()
        .map(|mask| {
            let vertices: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
            let induced = g.induced_on(&vertices).expect("vertices in range");
            SpecialSet { vertices, induced }
        })
        .collect()
}

/// Searches for a monotone (non-induced) embedding of `pat` into the host
/// graph given by adjacency `rows`, with images restricted to `allowed`.
///
/// When `anchor` is set, the returned embedding uses that host vertex as
/// the image of some pattern vertex. Without an anchor the embedding is
/// the lexicographically least map (by image of vertex 0, then 1, ...).
pub(crate) fn embed_masked(
    rows: &[IndexSet],
    allowed: &IndexSet,
    pat: &PatternGraph,
    anchor: Option<usize>,
) -> Option<Vec<usize>> {
    let m = pat.order();
    if allowed.count() < m {
        return None;
    }
    if let Some(a) = anchor {
        if !allowed.contains(a) {
            return None;
        }
        for av in 0..m {
            if let Some(hit) = embed_fixed(rows, allowed, pat, Some((av, a))) {
                return Some(hit);
            }
        }
        None
    } else {
        embed_fixed(rows, allowed, pat, None)
    }
}

fn embed_fixed(
    rows: &[IndexSet],
    allowed: &IndexSet,
    pat: &PatternGraph,
    pin: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let m = pat.order();
    let mut assign = vec![usize::MAX; m];

    fn rec(
        rows: &[IndexSet],
        allowed: &IndexSet,
        pat: &PatternGraph,
        pin: Option<(usize, usize)>,
        assign: &mut Vec<usize>,
        u: usize,
    ) -> bool {
        let m = pat.order();
        if u == m {
            return true;
        }
        let want_deg = pat.degree(u);
        let try_vertex = |assign: &mut Vec<usize>, w: usize| -> bool {
            if assign[..u].contains(&w) {
                return false;
            }
            if rows[w].intersection_count(allowed) < want_deg {
                return false;
            }
            for p in 0..u {
                if pat.has_edge(p, u) && !rows[w].contains(assign[p]) {
                    return false;
                }
            }
            assign[u] = w;
            if rec(rows, allowed, pat, pin, assign, u + 1) {
                return true;
            }
            assign[u] = usize::MAX;
            false
        };
        if let Some((av, host)) = pin {
            if av == u {
                return allowed.contains(host) && try_vertex(assign, host);
            }
        }
        for w in allowed.iter() {
            if let Some((_, host)) = pin {
                if w == host {
                    continue;
                }
            }
            if try_vertex(assign, w) {
                return true;
            }
        }
        false
    }

    if rec(rows, allowed, pat, pin, &mut assign, 0) {
        Some(assign)
    } else {
        None
    }
}

/// Monotone subgraph containment: an injective map from the pattern's
/// vertices to family indices preserving every pattern edge, or `None`.
pub fn contains_pattern(graph: &InducedGraph, g: &PatternGraph) -> Option<Vec<usize>> {
    let allowed = IndexSet::full(graph.vertex_count());
    embed_masked(graph.rows(), &allowed, g, None)
}

/// Like [`contains_pattern`] but only reports embeddings whose image uses
/// the given family index. Sound for incremental pattern-freeness checks:
/// adding one vertex can only create pattern copies through it.
pub fn contains_pattern_anchored(
    graph: &InducedGraph,
    g: &PatternGraph,
    anchor: usize,
) -> Option<Vec<usize>> {
    let allowed = IndexSet::full(graph.vertex_count());
    embed_masked(graph.rows(), &allowed, g, Some(anchor))
}
