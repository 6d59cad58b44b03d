//! Exact extremal combinatorics in Kneser graphs.
//!
//! The Kneser graph `KG(n,k)` has the k-subsets of `{1,...,n}` as vertices,
//! with two subsets adjacent exactly when they are disjoint. This crate
//! verifies, constructs, and searches for families of k-subsets that are
//! extremal for forbidden-subgraph conditions on the induced Kneser
//! subgraph: intersecting families, union-intersecting families, and
//! general pattern-free families, together with the closed-form bounds and
//! thresholds that govern them and constructive peeling certificates for
//! the edge-count lower bound.
//!
//! Everything is exact: binomials are arbitrary precision, searches are
//! complete (branch-and-bound cross-checked by exhaustive oracles), and
//! every certificate can be re-verified independently of the code that
//! produced it.
//!
//! The accompanying guide in `book/` walks through the concepts; its code
//! snippets compile and run as doc-tests of this crate.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod families;
pub mod kneser;
mod mis;
pub mod pattern;
pub mod peel;
pub mod search;
pub mod setcore;

pub use error::{Error, Result};
pub use kneser::{adjacent, induce, Family, InducedGraph};
pub use pattern::PatternGraph;
pub use setcore::{binom, colex_unrank, enumerate_all, BigCount, FamilyMember, GroundParams};
