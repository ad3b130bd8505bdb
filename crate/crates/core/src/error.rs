//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible. The message names both shapes so the
    /// caller can see which dimension failed to line up.
    #[error("{op}: dimension mismatch: left operand is {lhs_rows}x{lhs_cols}, right operand is {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("entry ({row}, {col}) out of bounds for a {nrows}x{ncols} matrix")]
    IndexOutOfBounds {
        row: usize,
        col: usize,
        nrows: usize,
        ncols: usize,
    },

    /// Intersection-based multiplication is only correct when the additive
    /// identity annihilates under multiplication; callers holding a
    /// non-annihilating semiring must use `spgemm_union`.
    #[error("{op}: semiring `{semiring}` is not annihilating; use spgemm_union instead")]
    NonAnnihilating {
        op: &'static str,
        semiring: &'static str,
    },

    #[error("{op}: semiring `{semiring}` has no multiplicative identity")]
    NoMulIdentity {
        op: &'static str,
        semiring: &'static str,
    },

    #[error("invalid matrix structure: {0}")]
    InvalidStructure(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
