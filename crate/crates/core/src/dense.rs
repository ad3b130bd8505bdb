//! Row-major dense matrix.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::Semiring;
use crate::sparse::SparseMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    nrows: usize,
    ncols: usize,
    values: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn new_fill(nrows: usize, ncols: usize, fill: T) -> Self {
        DenseMatrix {
            nrows,
            ncols,
            values: vec![fill; nrows * ncols],
        }
    }

    pub fn from_vec(nrows: usize, ncols: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != nrows * ncols {
            return Err(Error::InvalidStructure(format!(
                "dense matrix needs {} values for {}x{}, got {}",
                nrows * ncols,
                nrows,
                ncols,
                values.len()
            )));
        }
        Ok(DenseMatrix {
            nrows,
            ncols,
            values,
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.values[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.values[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.values[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.values[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.values.clone();
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out[j * self.nrows + i] = self.get(i, j);
            }
        }
        DenseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            values: out,
        }
    }

    pub fn map<F: Fn(T) -> T>(&self, f: F) -> Self {
        DenseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Sparsifies by dropping positions holding the semiring's null element.
    pub fn to_sparse<S>(&self, sr: S) -> SparseMatrix<T>
    where
        S: Semiring<Elem = T>,
    {
        let mut row_ptr = Vec::with_capacity(self.nrows + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let v = self.get(i, j);
                if !S::is_null(v) {
                    col_idx.push(j);
                    values.push(v);
                }
            }
            row_ptr.push(col_idx.len());
        }
        let _ = sr;
        SparseMatrix::from_csr_parts(self.nrows, self.ncols, row_ptr, col_idx, values)
            .expect("dense scan yields valid structure")
    }

    pub fn bit_eq(&self, other: &Self) -> bool {
        self.nrows == other.nrows
            && self.ncols == other.ncols
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| a.bit_eq(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::ArithF64;

    #[test]
    fn roundtrip_through_sparse() {
        let d = DenseMatrix::from_vec(2, 3, vec![1.0, 0.0, 2.0, 0.0, 0.0, 3.0]).unwrap();
        let s = d.to_sparse(ArithF64);
        assert_eq!(s.nnz(), 3);
        assert!(s.to_dense(ArithF64).bit_eq(&d));
    }

    #[test]
    fn transpose_swaps_dims() {
        let d = DenseMatrix::from_vec(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let t = d.transpose();
        assert_eq!((t.nrows(), t.ncols()), (3, 2));
        assert_eq!(t.get(2, 1), 6.0);
        assert!(t.transpose().bit_eq(&d));
    }

    #[test]
    fn from_vec_length_check() {
        assert!(DenseMatrix::from_vec(2, 2, vec![1.0]).is_err());
    }
}
