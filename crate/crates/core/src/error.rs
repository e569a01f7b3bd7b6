//! Error type shared by all core operations.

use thiserror::Error;

/// Errors reported by coloring construction, verification, and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("color count must be positive")]
    NoColors,
    #[error("matrix has {rows} rows ({cols} columns in row {bad_row}), expected {n}x{n}")]
    ShapeMismatch {
        n: usize,
        rows: usize,
        cols: usize,
        bad_row: usize,
    },
    #[error("matrix entry ({i},{j}) = {a} differs from ({j},{i}) = {b}")]
    AsymmetricMatrix { i: usize, j: usize, a: u32, b: u32 },
    #[error("edge {{{i},{j}}} has color {color}, expected 1..={ell}")]
    ColorOutOfRange {
        i: usize,
        j: usize,
        color: u32,
        ell: u32,
    },
    #[error("diagonal entry ({i},{i}) = {value}, expected 0")]
    BadDiagonal { i: usize, value: u32 },
    #[error("self-loop query at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("outer coloring uses {outer} colors but inner uses {inner}")]
    ColorCountMismatch { outer: u32, inner: u32 },
    #[error("power exponent must be at least 1")]
    ZeroExponent,
    #[error("{n}^{k} = {vertices} vertices exceeds the cap of {cap}")]
    SizeOverflow {
        n: usize,
        k: u32,
        vertices: u128,
        cap: usize,
    },
    #[error("clique size {q} exceeds vertex count {n}")]
    QTooLarge { q: usize, n: usize },
    #[error("clique size {q} is below 2")]
    QTooSmall { q: usize },
    #[error("{ell} colors exceed the 64-color limit of the rainbow scanners")]
    TooManyColors { ell: u32 },
    #[error("pattern has {m} vertices but the host has only {n}")]
    PatternTooLarge { m: usize, n: usize },
    #[error("invalid pattern: {0}")]
    PatternInvalid(String),
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
