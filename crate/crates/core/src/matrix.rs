//! Matrices of multivariate polynomials: exact determinants, maximal minors
//! with a fixed sign convention, and kernel/rank for constant matrices.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::MultiPoly;
use crate::scalar::{FieldSpec, Scalar};

/// Maximum square size accepted by the Laplace expansion. The matrices in
/// this crate are at most 5x5.
const MAX_DET_SIZE: usize = 8;

/// A row-major matrix of polynomials sharing one variable set.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    vars: Arc<Vec<String>>,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<PolyMatrix> {
        assert!(rows > 0 && cols > 0, "empty matrix");
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let vars = entries[0].vars().clone();
        let mut field = entries[0].field().clone();
        for e in &entries {
            if e.vars() != &vars && **e.vars() != *vars {
                return Err(Error::VariableMismatch {
                    expected: vars.len(),
                    got: e.vars().len(),
                });
            }
            field = field.join(e.field())?;
        }
        Ok(PolyMatrix {
            rows,
            cols,
            field,
            vars,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn entry(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    /// Apply a variable substitution entrywise.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<PolyMatrix> {
        let entries: Vec<MultiPoly> = self
            .entries
            .iter()
            .map(|e| e.substitute(images))
            .collect::<Result<_>>()?;
        PolyMatrix::new(self.rows, self.cols, entries)
    }

    /// Exact determinant by Laplace expansion along the first remaining row,
    /// memoized on the active column set.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(Error::MatrixTooLarge(self.rows, MAX_DET_SIZE));
        }
        let full_mask: u32 = (1u32 << self.cols) - 1;
        let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
        Ok(self.det_rec(full_mask, &mut memo))
    }

    fn det_rec(&self, col_mask: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
        if let Some(p) = memo.get(&col_mask) {
            return p.clone();
        }
        let active: Vec<usize> = (0..self.cols).filter(|c| col_mask & (1 << c) != 0).collect();
        let row = self.rows - active.len(); // rows consumed top-down
        let result = if active.is_empty() {
            MultiPoly::constant(self.field.clone(), self.vars.clone(), self.field.one())
        } else {
            let mut acc = MultiPoly::zero(self.field.clone(), self.vars.clone());
            for (pos, &c) in active.iter().enumerate() {
                let e = self.entry(row, c);
                if e.is_zero() {
                    continue;
                }
                let sub = self.det_rec(col_mask & !(1 << c), memo);
                let term = e.mul(&sub);
                acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        };
        memo.insert(col_mask, result.clone());
        result
    }

    fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> PolyMatrix {
        let entries: Vec<MultiPoly> = keep_rows
            .iter()
            .flat_map(|&r| keep_cols.iter().map(move |&c| self.entry(r, c).clone()))
            .collect();
        PolyMatrix::new(keep_rows.len(), keep_cols.len(), entries).expect("submatrix")
    }

    /// All `size x size` minors, ordered lexicographically by (deleted rows,
    /// deleted columns). For an (n+1) x n matrix with `size = n` the minors
    /// carry the sign `(-1)^j` for deleted row `j` (0-based), so that the
    /// minor row vector composed with the matrix is identically zero.
    pub fn maximal_minors(&self, size: usize) -> Result<Vec<MultiPoly>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::MinorSize {
                size,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let hilbert_burch = size == self.cols && self.rows == self.cols + 1;
        let row_dels = combinations(self.rows, self.rows - size);
        let col_dels = combinations(self.cols, self.cols - size);
        let mut out = Vec::new();
        for dr in &row_dels {
            let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !dr.contains(r)).collect();
            for dc in &col_dels {
                let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !dc.contains(c)).collect();
                let mut minor = self.submatrix(&keep_rows, &keep_cols).determinant()?;
                if hilbert_burch && dr[0] % 2 == 1 {
                    minor = minor.neg();
                }
                out.push(minor);
            }
        }
        Ok(out)
    }

    /// Extract the constant scalars when every entry has degree zero.
    pub fn constant_entries(&self) -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                let e = self.entry(r, c);
                match e.total_degree() {
                    None => row.push(self.field.zero()),
                    Some(0) => row.push(e.coefficient(&vec![0; self.vars.len()])),
                    Some(_) => return Err(Error::NonConstantEntries),
                }
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Basis of the right kernel for a constant matrix.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        let m = self.constant_entries()?;
        Ok(linalg::kernel_basis(&m, &self.field))
    }

    /// Rank of a constant matrix.
    pub fn rank(&self) -> Result<usize> {
        let m = self.constant_entries()?;
        Ok(linalg::rank(&m))
    }

    /// Evaluate every entry at a scalar point, producing a constant matrix.
    pub fn eval(&self, point: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(self.entry(r, c).eval(point)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// All strictly increasing index tuples of length `k` from `0..n`,
/// lexicographically ordered.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in start..=(n - k) {
            prefix.push(i);
            rec(i + 1, n, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
