//! The multiplication kernels: SpGEMM (intersection and union flavors),
//! masked SpGEMM, SpMM, SDDMM, SpDM3 and the triple product.
//!
//! All kernels are pure functions of their operands, deterministic down to
//! the bit: per-output-entry accumulation always proceeds in ascending
//! contraction index, and per-row results are flushed in ascending column
//! order.

mod dense_out;
mod masked;
mod sddmm;
mod spgemm;
mod triple;
mod union;

pub use dense_out::{spdm3, spmm};
pub use masked::{masked_spgemm, MaskedStrategy};
pub use sddmm::sddmm;
pub use spgemm::spgemm;
pub use triple::triple_product;
pub use union::spgemm_union;

use crate::error::Result;
use crate::semiring::Semiring;
use crate::sparse::SparseMatrix;

/// Work counters for an SpGEMM call.
///
/// `flops` counts the nontrivial scalar multiplications, i.e. `a[i,k] ⊗
/// x[k,j]` pairs where both operands are stored. The compression ratio
/// (flops per surviving output entry) is the standard proxy for the
/// kernel's operational intensity; it is reported as 0 when the output is
/// empty.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpgemmStats {
    pub flops: u64,
    pub output_nnz: usize,
    pub compression_ratio: f64,
}

impl SpgemmStats {
    pub(crate) fn new(flops: u64, output_nnz: usize) -> Self {
        let compression_ratio = if output_nnz == 0 {
            0.0
        } else {
            flops as f64 / output_nnz as f64
        };
        SpgemmStats {
            flops,
            output_nnz,
            compression_ratio,
        }
    }
}

/// Gram product `A · Aᵀ`, picking the iteration scheme the semiring needs:
/// intersection SpGEMM when the null element annihilates, union iteration
/// otherwise (the Manhattan-distance case).
pub fn gram<S: Semiring>(a: &SparseMatrix<S::Elem>, sr: S) -> Result<SparseMatrix<S::Elem>> {
    let at = a.transpose();
    if S::annihilating() {
        Ok(spgemm(a, &at, sr)?.0)
    } else {
        spgemm_union(a, &at, sr)
    }
}
