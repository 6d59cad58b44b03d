//! Kneser-graph adjacency and induced subgraphs over a family of k-subsets.
//!
//! Two members are adjacent exactly when the underlying sets are disjoint.
//! A [`Family`] is the vertex set of the induced subgraph; members are kept
//! in colex order so that every certificate can reference them by rank.

use crate::bitset::IndexSet;
use crate::error::{Error, Result};
use crate::setcore::{enumerate_all, FamilyMember, GroundParams};

/// True when the two members' sets are disjoint (i.e. adjacent in the
/// Kneser graph). Errors on mismatched ground parameters.
pub fn adjacent(a: &FamilyMember, b: &FamilyMember) -> Result<bool> {
    if a.params() != b.params() {
        return Err(Error::ParamsMismatch(
            a.params().n(),
            a.params().k(),
            b.params().n(),
            b.params().k(),
        ));
    }
    Ok(!a.intersects(b))
}

/// An ordered, duplicate-free family of k-subsets over fixed `(n, k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Family {
    params: GroundParams,
    members: Vec<FamilyMember>,
}

impl Family {
    /// Builds a family, sorting members into colex order. Duplicates and
    /// mixed ground parameters are rejected.
    pub fn new(params: GroundParams, mut members: Vec<FamilyMember>) -> Result<Self> {
        for m in &members {
            if m.params() != params {
                return Err(Error::ParamsMismatch(
                    params.n(),
                    params.k(),
                    m.params().n(),
                    m.params().k(),
                ));
            }
        }
        // For equal popcount, numeric order on the bit words is colex order.
        members.sort_by_key(|m| m.bits());
        for w in members.windows(2) {
            if w[0].bits() == w[1].bits() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate member {}",
                    w[0]
                )));
            }
        }
        Ok(Family { params, members })
    }

    pub fn empty(params: GroundParams) -> Self {
        Family {
            params,
            members: Vec::new(),
        }
    }

    /// The full family of all `C(n, k)` members.
    pub fn full(params: GroundParams) -> Self {
        Family {
            params,
            members: enumerate_all(params).collect(),
        }
    }

    pub fn params(&self) -> GroundParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn member(&self, idx: usize) -> Result<&FamilyMember> {
        self.members.get(idx).ok_or(Error::IndexOutOfRange {
            idx,
            len: self.members.len(),
        })
    }

    /// Index of `m` in this family, if present.
    pub fn position(&self, m: &FamilyMember) -> Option<usize> {
        self.members
            .binary_search_by_key(&m.bits(), |x| x.bits())
            .ok()
    }

    pub fn contains_member(&self, m: &FamilyMember) -> bool {
        self.position(m).is_some()
    }

    /// Subfamily picked out by member indices (any order, deduplicated).
    pub fn subfamily(&self, indices: &[usize]) -> Result<Family> {
        let mut picked = Vec::with_capacity(indices.len());
        for &i in indices {
            picked.push(*self.member(i)?);
        }
        picked.sort_by_key(|m| m.bits());
        picked.dedup();
        Ok(Family {
            params: self.params,
            members: picked,
        })
    }

    /// Bitwise AND over all members; the full mask when empty.
    pub fn common_elements_mask(&self) -> u64 {
        self.members
            .iter()
            .fold(self.params.ground_mask(), |acc, m| acc & m.bits())
    }

    /// Parses the family file format: first line `n k`, then one member per
    /// line as strictly increasing space-separated elements.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: "empty input, expected header \"n k\"".into(),
            })?;
        let mut it = header.split_whitespace();
        let parse_u32 = |tok: Option<&str>, what: &str| -> Result<u32> {
            tok.ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("missing {what} in header"),
            })?
            .parse::<u32>()
            .map_err(|e| Error::Parse {
                line: 1,
                msg: format!("bad {what}: {e}"),
            })
        };
        let n = parse_u32(it.next(), "n")?;
        let k = parse_u32(it.next(), "k")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be exactly \"n k\"".into(),
            });
        }
        let params = GroundParams::new(n, k)?;

        let mut members = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut elems = Vec::with_capacity(k as usize);
            for tok in line.split_whitespace() {
                let e: u32 = tok.parse().map_err(|e| Error::Parse {
                    line: lineno,
                    msg: format!("bad element {tok:?}: {e}"),
                })?;
                if let Some(&last) = elems.last() {
                    if e <= last {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: "elements must be strictly increasing".into(),
                        });
                    }
                }
                elems.push(e);
            }
            let member =
                FamilyMember::from_elements(params, &elems).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
            if !seen.insert(member.bits()) {
                return Err(Error::DuplicateMember { line: lineno });
            }
            members.push(member);
        }
        Family::new(params, members)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// Renders the family file format accepted by [`Family::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.params.n(), self.params.k());
        for m in &self.members {
            let elems: Vec<String> = m.elements().iter().map(u32::to_string).collect();
            out.push_str(&elems.join(" "));
            out.push('\n');
        }
        out
    }
}

impl serde::Serialize for Family {
    /// Serializes as a JSON array of members, each a sorted element array.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.members.len()))?;
        for m in &self.members {
            seq.serialize_element(&m.elements())?;
        }
        seq.end()
    }
}

/// The Kneser subgraph induced by a family: explicit sorted edge list plus
/// one adjacency bitset per vertex.
#[derive(Clone, Debug)]
pub struct InducedGraph {
    family: Family,
    edges: Vec<(usize, usize)>,
    rows: Vec<IndexSet>,
}

/// Builds the induced subgraph `KG[A]`.
pub fn induce(family: &Family) -> InducedGraph {
    let n = family.len();
    let mut rows = vec![IndexSet::empty(n); n];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if !family.members()[i].intersects(&family.members()[j]) {
                edges.push((i, j));
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    InducedGraph {
        family: family.clone(),
        edges,
        rows,
    }
}

impl InducedGraph {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.family.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn degree(&self, idx: usize) -> Result<usize> {
        if idx >= self.family.len() {
            return Err(Error::IndexOutOfRange {
                idx,
                len: self.family.len(),
            });
        }
        Ok(self.rows[idx].count())
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(IndexSet::count).max().unwrap_or(0)
    }

    pub fn neighbors(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[idx].iter()
    }

    pub(crate) fn row(&self, idx: usize) -> &IndexSet {
        &self.rows[idx]
    }

    pub(crate) fn rows(&self) -> &[IndexSet] {
        &self.rows
    }
}

/// Number of members of `family` disjoint from `family[idx]`.
pub fn degree_in_family(family: &Family, idx: usize) -> Result<usize> {
    let target = family.member(idx)?;
    Ok(family
        .members()
        .iter()
        .filter(|m| !m.intersects(target))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::binom_u64;

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

    #[test]
    fn adjacency() {
        let f = fam(5, 2, &[&[1, 2], &[3, 4], &[2, 3]]);
        let m = f.members();
        let get = |e: &[u32]| *m.iter().find(|x| x.elements() == e).unwrap();
        assert!(adjacent(&get(&[1, 2]), &get(&[3, 4])).unwrap());
        assert!(!adjacent(&get(&[1, 2]), &get(&[2, 3])).unwrap());
        assert!(!adjacent(&get(&[1, 2]), &get(&[1, 2])).unwrap());
        let other = FamilyMember::from_elements(GroundParams::new(6, 2).unwrap(), &[1, 2]).unwrap();
        assert!(adjacent(&get(&[1, 2]), &other).is_err());
    }

    #[test]
    fn petersen() {
        // KG(5,2) is the Petersen graph: 10 vertices, 3-regular, 15 edges.
        let p = GroundParams::new(5, 2).unwrap();
        let g = induce(&Family::full(p));
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        for i in 0..10 {
            assert_eq!(g.degree(i).unwrap(), binom_u64(3, 2) as usize);
        }
    }

    #[test]
    fn star_is_edgeless_and_triangle_has_three_edges() {
        let p = GroundParams::new(5, 2).unwrap();
        let star: Vec<FamilyMember> = enumerate_all(p).filter(|m| m.contains(1)).collect();
        let star = Family::new(p, star).unwrap();
        assert!(induce(&star).is_edgeless());
        assert_eq!(degree_in_family(&star, 0).unwrap(), 0);

        let tri = fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(induce(&tri).edge_count(), 3);
    }

    #[test]
    fn degree_example() {
        let f = fam(5, 2, &[&[1, 2], &[3, 4], &[3, 5]]);
        let idx = f
            .position(&FamilyMember::from_elements(f.params(), &[1, 2]).unwrap())
            .unwrap();
        assert_eq!(degree_in_family(&f, idx).unwrap(), 2);
        assert!(degree_in_family(&f, 3).is_err());
    }

    #[test]
    fn members_sorted_by_colex_and_duplicates_rejected() {
        let f = fam(5, 2, &[&[4, 5], &[1, 2], &[2, 3]]);
        let ranks: Vec<u64> = f.members().iter().map(|m| m.colex_rank()).collect();
        assert!(ranks.windows(2).all(|w| w[0] < w[1]));

        let p = GroundParams::new(5, 2).unwrap();
        let m = FamilyMember::from_elements(p, &[1, 2]).unwrap();
        assert!(Family::new(p, vec![m, m]).is_err());
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let f = fam(5, 2, &[&[1, 2], &[3, 4]]);
        let text = f.to_text();
        assert_eq!(Family::parse(&text).unwrap(), f);

        let dup = "5 2\n1 2\n1 2\n";
        assert!(matches!(
            Family::parse(dup),
            Err(Error::DuplicateMember { line: 3 })
        ));
        let decreasing = "5 2\n2 1\n";
        assert!(matches!(Family::parse(decreasing), Err(Error::Parse { line: 2, .. })));
        let out_of_range = "5 2\n1 6\n";
        assert!(matches!(Family::parse(out_of_range), Err(Error::Parse { line: 2, .. })));
        let wrong_size = "5 2\n1 2 3\n";
        assert!(matches!(Family::parse(wrong_size), Err(Error::Parse { line: 2, .. })));
        assert!(Family::parse("").is_err());
        assert!(Family::parse("5\n").is_err());
    }

    #[test]
    fn full_family_degree_invariant() {
        for (n, k) in [(5u32, 2u32), (6, 2), (7, 3)] {
            let p = GroundParams::new(n, k).unwrap();
            let g = induce(&Family::full(p));
            let want = binom_u64((n - k) as usize, k as usize) as usize;
            for i in 0..g.vertex_count() {
                assert_eq!(g.degree(i).unwrap(), want);
            }
        }
    }

    proptest::proptest! {
        /// Removing a member never adds an edge.
        #[test]
        fn induce_monotone(mask in 0u32..1024, drop in 0usize..10) {
            let p = GroundParams::new(5, 2).unwrap();
            let all: Vec<FamilyMember> = enumerate_all(p).collect();
            let members: Vec<FamilyMember> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| *m)
                .collect();
            let f = Family::new(p, members).unwrap();
            let g = induce(&f);
            if f.len() > 0 {
                let drop = drop % f.len();
                let kept: Vec<usize> = (0..f.len()).filter(|&i| i != drop).collect();
                let sub = f.subfamily(&kept).unwrap();
                let gs = induce(&sub);
                proptest::prop_assert!(gs.edge_count() <= g.edge_count());
                // Every surviving edge of the subfamily exists in the parent.
                for &(a, b) in gs.edges() {
                    let ma = gs.family().members()[a];
                    let mb = gs.family().members()[b];
                    let ia = f.position(&ma).unwrap();
                    let ib = f.position(&mb).unwrap();
                    proptest::prop_assert!(g.are_adjacent(ia, ib));
                }
            }
        }
    }
}
