//! Union-iteration SpGEMM for non-annihilating semirings.

use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::sparse::SparseMatrix;

/// `Y ← A · X` where the contraction at each output position runs over the
/// union of stored positions in row `i` of `A` and column `j` of `X`,
/// substituting the additive identity for the absent side. This reproduces
/// the result of computing on densified inputs, which is what algebras like
/// the Manhattan distance (`null ⊗ a = a`) require; intersection SpGEMM
/// would silently drop those terms.
///
/// Worst-case cost is `O(nrows(A) · ncols(X) · union-size)` — the accepted
/// price of correctness here.
pub fn spgemm_union<S: Semiring>(
    a: &SparseMatrix<S::Elem>,
    x: &SparseMatrix<S::Elem>,
    _sr: S,
) -> Result<SparseMatrix<S::Elem>> {
    if a.ncols() != x.nrows() {
        return Err(Error::DimensionMismatch {
            op: "spgemm_union",
            lhs_rows: a.nrows(),
            lhs_cols: a.ncols(),
            rhs_rows: x.nrows(),
            rhs_cols: x.ncols(),
        });
    }
    let id = S::add_identity();
    let xt = x.transpose();

    let mut row_ptr = Vec::with_capacity(a.nrows() + 1);
    let mut col_idx = Vec::new();
    let mut values = Vec::new();
    row_ptr.push(0);

    for i in 0..a.nrows() {
        let (acols, avals) = a.row(i);
        for j in 0..x.ncols() {
            let (xcols, xvals) = xt.row(j);
            let (mut p, mut q) = (0usize, 0usize);
            let mut acc = id;
            while p < acols.len() || q < xcols.len() {
                let ka = acols.get(p).copied().unwrap_or(usize::MAX);
                let kx = xcols.get(q).copied().unwrap_or(usize::MAX);
                let term = if ka == kx {
                    let t = S::mul(avals[p], xvals[q]);
                    p += 1;
                    q += 1;
                    t
                } else if ka < kx {
                    p += 1;
                    S::mul(avals[p - 1], id)
                } else {
                    q += 1;
                    S::mul(id, xvals[q - 1])
                };
                acc = S::add(acc, term);
            }
            if !S::is_null(acc) {
                col_idx.push(j);
                values.push(acc);
            }
        }
        row_ptr.push(col_idx.len());
    }

    Ok(
        SparseMatrix::from_csr_parts(a.nrows(), x.ncols(), row_ptr, col_idx, values)
            .expect("union assembly yields valid structure"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::spgemm;
    use crate::reference;
    use crate::semiring::{ArithI64, Manhattan};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn manhattan_row_times_column() {
        // u = [1, 0, 3] against v = [0, 2, 0]: |1-0| + |0-2| + |3-0| = 6
        let a = SparseMatrix::from_coo(1, 3, &[(0, 0, 1.0), (0, 2, 3.0)], Manhattan).unwrap();
        let x = SparseMatrix::from_coo(3, 1, &[(1, 0, 2.0)], Manhattan).unwrap();
        let y = spgemm_union(&a, &x, Manhattan).unwrap();
        assert_eq!(y.get(0, 0), Some(6.0));
    }

    #[test]
    fn empty_inputs_yield_empty_output() {
        let a = SparseMatrix::<f64>::empty(4, 3);
        let x = SparseMatrix::<f64>::empty(3, 5);
        let y = spgemm_union(&a, &x, Manhattan).unwrap();
        assert_eq!(y.nnz(), 0);
        assert_eq!((y.nrows(), y.ncols()), (4, 5));
    }

    #[test]
    fn gram_manhattan_matches_dense_l1() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = reference::random_sparse_f64(&mut rng, 16, 8, 0.4);
        let y = spgemm_union(&a, &a.transpose(), Manhattan).unwrap();
        // densified pairwise-L1 oracle
        let grid = reference::sparse_grid(&a, Manhattan);
        for u in 0..16 {
            for v in 0..16 {
                let l1: f64 = (0..8).map(|k| (grid[u][k] - grid[v][k]).abs()).sum();
                let got = y.get(u, v).unwrap_or(0.0);
                assert!(
                    (got - l1).abs() <= 1e-12 * l1.abs().max(1.0),
                    "({u},{v}): {got} vs {l1}"
                );
            }
        }
    }

    #[test]
    fn agrees_with_intersection_spgemm_on_annihilating_semiring() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = reference::random_sparse_i64(&mut rng, 12, 9, 0.25);
        let x = reference::random_sparse_i64(&mut rng, 9, 14, 0.25);
        let via_union = spgemm_union(&a, &x, ArithI64).unwrap();
        let (via_intersection, _) = spgemm(&a, &x, ArithI64).unwrap();
        assert!(via_union.bit_eq(&via_intersection));
    }
}
