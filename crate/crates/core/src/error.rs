//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, parsing, and search preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ground parameters: need 1 <= k <= n <= 64, got n={n}, k={k}")]
    InvalidParams { n: u32, k: u32 },

    #[error("element {elem} out of range 1..={n}")]
    ElementOutOfRange { elem: u32, n: u32 },

    #[error("member has {got} elements, expected {expected}")]
    WrongCardinality { got: u32, expected: u32 },

    #[error("rank {rank} out of range: only {count} members exist")]
    RankOutOfRange { rank: u64, count: u64 },

    #[error("ground parameter mismatch: ({0}, {1}) vs ({2}, {3})")]
    ParamsMismatch(u32, u32, u32, u32),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: duplicate member")]
    DuplicateMember { line: usize },

    #[error("index {idx} out of range for family of {len} members")]
    IndexOutOfRange { idx: usize, len: usize },

    #[error("pattern graph has {m} vertices, maximum supported is 12")]
    PatternTooLarge { m: usize },

    #[error("cannot parse pattern spec {spec:?}: {msg}")]
    PatternSpec { spec: String, msg: String },

    #[error("instance with {size} vertices exceeds the cap {cap} for {mode}")]
    InstanceTooLarge {
        size: u64,
        cap: u64,
        mode: &'static str,
    },

    #[error("{theorem} requires {requirement}, got n={n}, k={k}")]
    OutsideTheoremRange {
        theorem: &'static str,
        requirement: &'static str,
        n: u32,
        k: u32,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
