//! Semiring-generic sparse matrix multiplication and its applications.
//!
//! The crate is organized around one sparse container ([`SparseMatrix`],
//! compressed rows), one dense container ([`DenseMatrix`]), structure-only
//! output masks ([`MaskSpec`]), and a family of multiplication kernels
//! generic over a [`Semiring`]:
//!
//! - [`kernels::spgemm`] — sparse × sparse, sparse output, with flop and
//!   compression-ratio statistics;
//! - [`kernels::spgemm_union`] — union-iteration variant for semirings
//!   whose null element does not annihilate (e.g. Manhattan distances);
//! - [`kernels::masked_spgemm`] — sparse × sparse restricted to a mask;
//! - [`kernels::spmm`] / [`kernels::spdm3`] — sparse × dense, dense output;
//! - [`kernels::sddmm`] — dense × dense sampled at a mask, sparse output;
//! - [`kernels::triple_product`] — the R·A·P contraction.
//!
//! On top of the kernels sit graph algorithms ([`graph`]), randomized
//! sketching estimators ([`estimators`]), a sparse attention pipeline
//! ([`attention`]), Matrix Market I/O and generators ([`io`]), and
//! brute-force reference implementations ([`reference`]) used by tests and
//! the CLI's `--oracle` mode.

pub mod attention;
pub mod dense;
pub mod error;
pub mod estimators;
pub mod graph;
pub mod io;
pub mod kernels;
pub mod mask;
pub mod reference;
pub mod scalar;
pub mod semiring;
pub mod sparse;

pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use mask::MaskSpec;
pub use scalar::Scalar;
pub use semiring::{
    ArithF64, ArithI64, Boolean, Manhattan, MaxMin, MinPlus, Select2ndMin, Select2ndMinI64,
    Semiring, SEMIRING_LABELS,
};
pub use sparse::SparseMatrix;
