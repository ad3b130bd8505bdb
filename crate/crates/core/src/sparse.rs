//! Compressed row-oriented sparse matrix, the single internal sparse format.
//!
//! Invariants, enforced by every constructor and checkable via [`SparseMatrix::validate`]:
//! `row_ptr` is nondecreasing with `row_ptr[0] = 0` and
//! `row_ptr[nrows] = nnz`; column indices are strictly increasing within each
//! row; and no stored value equals the constructing semiring's additive
//! identity (the explicit-null policy). Matrices are immutable after
//! construction; every operation allocates a fresh output.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::Semiring;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<T>,
}

impl<T: Scalar> SparseMatrix<T> {
    /// Matrix with no stored entries.
    pub fn empty(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            row_ptr: vec![0; nrows + 1],
            col_idx: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Diagonal matrix with `one` at every diagonal position.
    pub fn identity(n: usize, one: T) -> Self {
        SparseMatrix {
            nrows: n,
            ncols: n,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n).collect(),
            values: vec![one; n],
        }
    }

    /// Builds from coordinate triples. Duplicate coordinates are combined
    /// with the semiring's addition (in a canonical order, so the result is
    /// independent of triple order), and entries equal to the additive
    /// identity are dropped.
    pub fn from_coo<S>(
        nrows: usize,
        ncols: usize,
        triples: &[(usize, usize, T)],
        _sr: S,
    ) -> Result<Self>
    where
        S: Semiring<Elem = T>,
    {
        for &(r, c, _) in triples {
            if r >= nrows || c >= ncols {
                return Err(Error::IndexOutOfBounds {
                    row: r,
                    col: c,
                    nrows,
                    ncols,
                });
            }
        }
        let mut sorted: Vec<(usize, usize, T)> = triples.to_vec();
        sorted.sort_unstable_by(|a, b| {
            (a.0, a.1)
                .cmp(&(b.0, b.1))
                .then_with(|| a.2.total_order(b.2))
        });

        let mut row_ptr = Vec::with_capacity(nrows + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        let mut cur_row = 0usize;
        let mut i = 0usize;
        while i < sorted.len() {
            let (r, c, mut acc) = sorted[i];
            i += 1;
            while i < sorted.len() && sorted[i].0 == r && sorted[i].1 == c {
                acc = S::add(acc, sorted[i].2);
                i += 1;
            }
            while cur_row < r {
                row_ptr.push(col_idx.len());
                cur_row += 1;
            }
            if !S::is_null(acc) {
                col_idx.push(c);
                values.push(acc);
            }
        }
        while cur_row < nrows {
            row_ptr.push(col_idx.len());
            cur_row += 1;
        }
        Ok(SparseMatrix {
            nrows,
            ncols,
            row_ptr,
            col_idx,
            values,
        })
    }

    /// Builds directly from CSR arrays, validating structure only. Callers
    /// use this when the stored values are not tied to a semiring (e.g.
    /// traversal levels, where 0 is a meaningful stored value).
    pub fn from_csr_parts(
        nrows: usize,
        ncols: usize,
        row_ptr: Vec<usize>,
        col_idx: Vec<usize>,
        values: Vec<T>,
    ) -> Result<Self> {
        let m = SparseMatrix {
            nrows,
            ncols,
            row_ptr,
            col_idx,
            values,
        };
        m.validate_structure().map(|()| m)
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

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[T]) {
        let (lo, hi) = (self.row_ptr[i], self.row_ptr[i + 1]);
        (&self.col_idx[lo..hi], &self.values[lo..hi])
    }

    pub fn row_nnz(&self, i: usize) -> usize {
        self.row_ptr[i + 1] - self.row_ptr[i]
    }

    /// Stored value at `(i, j)`, if present.
    pub fn get(&self, i: usize, j: usize) -> Option<T> {
        let (cols, vals) = self.row(i);
        cols.binary_search(&j).ok().map(|p| vals[p])
    }

    /// Iterates stored entries as `(row, col, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (0..self.nrows).flat_map(move |i| {
            let (cols, vals) = self.row(i);
            cols.iter().zip(vals).map(move |(&j, &v)| (i, j, v))
        })
    }

    /// `result[j][i] = self[i][j]`; a fresh matrix, sorted per row.
    pub fn transpose(&self) -> Self {
        let mut counts = vec![0usize; self.ncols + 1];
        for &j in &self.col_idx {
            counts[j + 1] += 1;
        }
        for j in 0..self.ncols {
            counts[j + 1] += counts[j];
        }
        let row_ptr = counts.clone();
        let mut col_idx = vec![0usize; self.nnz()];
        let mut values = self.values.clone();
        let mut next = counts;
        for (i, j, v) in self.iter() {
            let pos = next[j];
            col_idx[pos] = i;
            values[pos] = v;
            next[j] += 1;
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Element-wise combination. In union mode the result has an entry
    /// wherever either input does, with the absent side standing in as the
    /// additive identity; in intersection mode only positions present in
    /// both are combined. Results equal to the additive identity are
    /// dropped either way.
    pub fn elementwise_combine<S, F>(
        &self,
        other: &Self,
        op: F,
        union_mode: bool,
        _sr: S,
    ) -> Result<Self>
    where
        S: Semiring<Elem = T>,
        F: Fn(T, T) -> T,
    {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                op: "elementwise_combine",
                lhs_rows: self.nrows,
                lhs_cols: self.ncols,
                rhs_rows: other.nrows,
                rhs_cols: other.ncols,
            });
        }
        let id = S::add_identity();
        let mut row_ptr = Vec::with_capacity(self.nrows + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        for i in 0..self.nrows {
            let (ac, av) = self.row(i);
            let (bc, bv) = other.row(i);
            let (mut p, mut q) = (0usize, 0usize);
            let mut push = |j: usize, v: T| {
                if !S::is_null(v) {
                    col_idx.push(j);
                    values.push(v);
                }
            };
            while p < ac.len() || q < bc.len() {
                let ja = ac.get(p).copied().unwrap_or(usize::MAX);
                let jb = bc.get(q).copied().unwrap_or(usize::MAX);
                if ja == jb {
                    push(ja, op(av[p], bv[q]));
                    p += 1;
                    q += 1;
                } else if ja < jb {
                    if union_mode {
                        push(ja, op(av[p], id));
                    }
                    p += 1;
                } else {
                    if union_mode {
                        push(jb, op(id, bv[q]));
                    }
                    q += 1;
                }
            }
            row_ptr.push(col_idx.len());
        }
        Ok(SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr,
            col_idx,
            values,
        })
    }

    /// Keeps only entries satisfying the predicate.
    pub fn prune<F>(&self, keep: F) -> Self
    where
        F: Fn(T) -> bool,
    {
        let mut row_ptr = Vec::with_capacity(self.nrows + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                if keep(v) {
                    col_idx.push(j);
                    values.push(v);
                }
            }
            row_ptr.push(col_idx.len());
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Maps every stored entry through `f(row, col, value)`, dropping
    /// results equal to the semiring's additive identity.
    pub fn map_prune<S, F>(&self, f: F, _sr: S) -> Self
    where
        S: Semiring<Elem = T>,
        F: Fn(usize, usize, T) -> T,
    {
        let mut row_ptr = Vec::with_capacity(self.nrows + 1);
        let mut col_idx = Vec::new();
        let mut values = Vec::new();
        row_ptr.push(0);
        for (i, j, v) in self.iter() {
            while row_ptr.len() <= i {
                row_ptr.push(col_idx.len());
            }
            let w = f(i, j, v);
            if !S::is_null(w) {
                col_idx.push(j);
                values.push(w);
            }
        }
        while row_ptr.len() <= self.nrows {
            row_ptr.push(col_idx.len());
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr,
            col_idx,
            values,
        }
    }

    /// Replaces every stored value with `f(value)`, preserving structure.
    /// The caller must ensure `f` never produces the target semiring's
    /// null element; used to retype patterns (e.g. weights to `true`).
    pub fn with_values<U, F>(&self, f: F) -> SparseMatrix<U>
    where
        U: Scalar,
        F: Fn(T) -> U,
    {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr: self.row_ptr.clone(),
            col_idx: self.col_idx.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Structure-only checks: pointer monotonicity and sorted-unique
    /// columns per row.
    pub fn validate_structure(&self) -> Result<()> {
        if self.row_ptr.len() != self.nrows + 1 {
            return Err(Error::InvalidStructure(format!(
                "row_ptr length {} for {} rows",
                self.row_ptr.len(),
                self.nrows
            )));
        }
        if self.row_ptr[0] != 0 {
            return Err(Error::InvalidStructure("row_ptr[0] != 0".into()));
        }
        if *self.row_ptr.last().unwrap() != self.col_idx.len()
            || self.col_idx.len() != self.values.len()
        {
            return Err(Error::InvalidStructure(
                "row_ptr end, col_idx and values lengths disagree".into(),
            ));
        }
        for i in 0..self.nrows {
            if self.row_ptr[i] > self.row_ptr[i + 1] {
                return Err(Error::InvalidStructure(format!(
                    "row_ptr decreases at row {i}"
                )));
            }
            let cols = &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]];
            for w in cols.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidStructure(format!(
                        "columns not strictly increasing in row {i}"
                    )));
                }
            }
            if let Some(&last) = cols.last() {
                if last >= self.ncols {
                    return Err(Error::InvalidStructure(format!(
                        "column {last} out of range in row {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Full invariant check against a semiring: structure plus the
    /// explicit-null policy (no stored value bit-equals the additive
    /// identity).
    pub fn validate<S>(&self, _sr: S) -> Result<()>
    where
        S: Semiring<Elem = T>,
    {
        self.validate_structure()?;
        for (i, j, v) in self.iter() {
            if S::is_null(v) {
                return Err(Error::InvalidStructure(format!(
                    "stored null element at ({i}, {j})"
                )));
            }
        }
        Ok(())
    }

    /// Bitwise equality of shape, structure and values.
    pub fn bit_eq(&self, other: &Self) -> bool {
        self.nrows == other.nrows
            && self.ncols == other.ncols
            && self.row_ptr == other.row_ptr
            && self.col_idx == other.col_idx
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(&a, &b)| a.bit_eq(b))
    }

    /// Densifies, filling absent positions with the additive identity.
    pub fn to_dense<S>(&self, _sr: S) -> crate::dense::DenseMatrix<T>
    where
        S: Semiring<Elem = T>,
    {
        let mut d =
            crate::dense::DenseMatrix::new_fill(self.nrows, self.ncols, S::add_identity());
        for (i, j, v) in self.iter() {
            d.set(i, j, v);
        }
        d
    }
}

impl SparseMatrix<f64> {
    /// Largest absolute difference over the union of stored positions,
    /// absent positions counting as 0.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut worst = 0.0f64;
        for i in 0..self.nrows {
            let (ac, av) = self.row(i);
            let (bc, bv) = other.row(i);
            let (mut p, mut q) = (0usize, 0usize);
            while p < ac.len() || q < bc.len() {
                let ja = ac.get(p).copied().unwrap_or(usize::MAX);
                let jb = bc.get(q).copied().unwrap_or(usize::MAX);
                let d = if ja == jb {
                    let d = (av[p] - bv[q]).abs();
                    p += 1;
                    q += 1;
                    d
                } else if ja < jb {
                    p += 1;
                    av[p - 1].abs()
                } else {
                    q += 1;
                    bv[q - 1].abs()
                };
                worst = worst.max(d);
            }
        }
        worst
    }
}
