//! Row-by-row (Gustavson) SpGEMM with a per-row sparse accumulator.

use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::sparse::SparseMatrix;

use super::SpgemmStats;

/// `Y ← A · X` over an annihilating semiring, all matrices sparse.
///
/// `Y[i,j] = ⊕_k A[i,k] ⊗ X[k,j]` over the intersection of stored entries.
/// The output size is not known in advance, so each row is accumulated in a
/// dynamically grown sparse accumulator keyed by column index and flushed
/// in ascending column order; contributions to one output entry arrive in
/// ascending `k`, which pins the floating-point addition order.
pub fn spgemm<S: Semiring>(
    a: &SparseMatrix<S::Elem>,
    x: &SparseMatrix<S::Elem>,
    _sr: S,
) -> Result<(SparseMatrix<S::Elem>, SpgemmStats)> {
    if a.ncols() != x.nrows() {
        return Err(Error::DimensionMismatch {
            op: "spgemm",
            lhs_rows: a.nrows(),
            lhs_cols: a.ncols(),
            rhs_rows: x.nrows(),
            rhs_cols: x.ncols(),
        });
    }
    if !S::annihilating() {
        return Err(Error::NonAnnihilating {
            op: "spgemm",
            semiring: S::NAME,
        });
    }

    let id = S::add_identity();
    let mut acc = vec![id; x.ncols()];
    let mut occupied = vec![false; x.ncols()];
    let mut touched: Vec<usize> = Vec::new();

    let mut row_ptr = Vec::with_capacity(a.nrows() + 1);
    let mut col_idx = Vec::new();
    let mut values = Vec::new();
    row_ptr.push(0);
    let mut flops = 0u64;

    for i in 0..a.nrows() {
        let (acols, avals) = a.row(i);
        for (&k, &av) in acols.iter().zip(avals) {
            let (xcols, xvals) = x.row(k);
            for (&j, &xv) in xcols.iter().zip(xvals) {
                flops += 1;
                let t = S::mul(av, xv);
                if occupied[j] {
                    acc[j] = S::add(acc[j], t);
                } else {
                    occupied[j] = true;
                    touched.push(j);
                    acc[j] = t;
                }
            }
        }
        touched.sort_unstable();
        for &j in &touched {
            if !S::is_null(acc[j]) {
                col_idx.push(j);
                values.push(acc[j]);
            }
            occupied[j] = false;
            acc[j] = id;
        }
        touched.clear();
        row_ptr.push(col_idx.len());
    }

    let stats = SpgemmStats::new(flops, col_idx.len());
    let y = SparseMatrix::from_csr_parts(a.nrows(), x.ncols(), row_ptr, col_idx, values)
        .expect("gustavson assembly yields valid structure");
    Ok((y, stats))
}
