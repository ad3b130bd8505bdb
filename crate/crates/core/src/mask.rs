//! Output masks: sparse patterns restricting which positions get computed.
//!
//! A mask is structure-only — it carries no values, so one mask serves
//! kernels over any semiring. (Value-dependent masks, which some interfaces
//! also allow, are deliberately not supported.)

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct MaskSpec {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
}

impl MaskSpec {
    /// Takes the sparsity pattern of a matrix, ignoring its values.
    pub fn from_pattern<T: Scalar>(m: &SparseMatrix<T>) -> Self {
        let mut row_ptr = Vec::with_capacity(m.nrows() + 1);
        let mut col_idx = Vec::with_capacity(m.nnz());
        row_ptr.push(0);
        for i in 0..m.nrows() {
            col_idx.extend_from_slice(m.row(i).0);
            row_ptr.push(col_idx.len());
        }
        MaskSpec {
            nrows: m.nrows(),
            ncols: m.ncols(),
            row_ptr,
            col_idx,
        }
    }

    /// Builds from `(row, col)` pairs; duplicates collapse.
    pub fn from_pairs(nrows: usize, ncols: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        for &(r, c) in pairs {
            if r >= nrows || c >= ncols {
                return Err(Error::IndexOutOfBounds {
                    row: r,
                    col: c,
                    nrows,
                    ncols,
                });
            }
        }
        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut row_ptr = Vec::with_capacity(nrows + 1);
        let mut col_idx = Vec::with_capacity(sorted.len());
        row_ptr.push(0);
        let mut cur = 0usize;
        for (r, c) in sorted {
            while cur < r {
                row_ptr.push(col_idx.len());
                cur += 1;
            }
            col_idx.push(c);
        }
        while cur < nrows {
            row_ptr.push(col_idx.len());
            cur += 1;
        }
        Ok(MaskSpec {
            nrows,
            ncols,
            row_ptr,
            col_idx,
        })
    }

    /// Every position present.
    pub fn full(nrows: usize, ncols: usize) -> Self {
        let mut row_ptr = Vec::with_capacity(nrows + 1);
        let mut col_idx = Vec::with_capacity(nrows * ncols);
        row_ptr.push(0);
        for _ in 0..nrows {
            col_idx.extend(0..ncols);
            row_ptr.push(col_idx.len());
        }
        MaskSpec {
            nrows,
            ncols,
            row_ptr,
            col_idx,
        }
    }

    /// Diagonal positions only.
    pub fn identity(n: usize) -> Self {
        MaskSpec {
            nrows: n,
            ncols: n,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n).collect(),
        }
    }

    pub fn empty(nrows: usize, ncols: usize) -> Self {
        MaskSpec {
            nrows,
            ncols,
            row_ptr: vec![0; nrows + 1],
            col_idx: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    /// Sorted columns present in row `i`.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.row(i).binary_search(&j).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nrows).flat_map(move |i| self.row(i).iter().map(move |&j| (i, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::ArithF64;

    #[test]
    fn pattern_ignores_values() {
        let m = SparseMatrix::from_coo(2, 3, &[(0, 1, 5.0), (1, 2, -1.0)], ArithF64).unwrap();
        let mask = MaskSpec::from_pattern(&m);
        assert!(mask.contains(0, 1));
        assert!(mask.contains(1, 2));
        assert!(!mask.contains(0, 0));
        assert_eq!(mask.nnz(), 2);
    }

    #[test]
    fn from_pairs_dedups_and_sorts() {
        let mask = MaskSpec::from_pairs(3, 3, &[(2, 1), (0, 2), (2, 1), (2, 0)]).unwrap();
        assert_eq!(mask.nnz(), 3);
        assert_eq!(mask.row(2), &[0, 1]);
    }

    #[test]
    fn full_and_identity_counts() {
        assert_eq!(MaskSpec::full(4, 5).nnz(), 20);
        assert_eq!(MaskSpec::identity(4).nnz(), 4);
    }
}
