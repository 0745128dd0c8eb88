//! Exact Gaussian elimination over a scalar field.
//!
//! Matrices here are plain `Vec<Vec<Scalar>>` rows. Everything is exact;
//! pivots prefer entries of small representation only as a heuristic, the
//! echelon structure itself is deterministic (first usable column, first
//! usable row).

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref(mat: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        // prefer a unit pivot to limit coefficient growth
        let mut choice: Option<usize> = None;
        for i in r..rows {
            if mat[i][c].is_zero() {
                continue;
            }
            if choice.is_none() {
                choice = Some(i);
            }
            if mat[i][c].is_one() {
                choice = Some(i);
                break;
            }
        }
        let Some(i) = choice else { continue };
        mat.swap(r, i);
        let inv = mat[r][c].inv().expect("nonzero pivot");
        if !mat[r][c].is_one() {
            for j in c..cols {
                if !mat[r][j].is_zero() {
                    mat[r][j] = mat[r][j].mul(&inv);
                }
            }
        }
        for i in 0..rows {
            if i == r || mat[i][c].is_zero() {
                continue;
            }
            let factor = mat[i][c].clone();
            for j in c..cols {
                if mat[r][j].is_zero() {
                    continue;
                }
                let delta = factor.mul(&mat[r][j]);
                mat[i][j] = mat[i][j].sub(&delta);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mat: &[Vec<Scalar>]) -> usize {
    let mut work: Vec<Vec<Scalar>> = mat.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel `{v : M v = 0}`, one vector per free column of
/// the reduced echelon form, free columns in ascending order.
pub fn kernel_basis(mat: &[Vec<Scalar>], field: &FieldSpec) -> Vec<Vec<Scalar>> {
    let cols = if mat.is_empty() { 0 } else { mat[0].len() };
    let mut work: Vec<Vec<Scalar>> = mat.to_vec();
    let pivots = rref(&mut work);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            // pivot variable = -entry at the free column
            v[pc] = work[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` for a unique-solution system; `None` when inconsistent.
/// Columns without a pivot get value zero.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar], field: &FieldSpec) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut work: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut work);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![field.zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = work[row][cols].clone();
    }
    Some(x)
}

/// Incrementally maintained row span in reduced echelon form; used for rank
/// bookkeeping and membership tests.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current span; the remainder is zero exactly
    /// when `v` already lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for j in pc..self.cols {
                if row[j].is_zero() {
                    continue;
                }
                let delta = factor.mul(&row[j]);
                v[j] = v[j].sub(&delta);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[pc].inv().expect("nonzero leading entry");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&inv);
            }
        }
        // keep reduced form: eliminate the new pivot column from earlier rows
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for j in pc..self.cols {
                if v[j].is_zero() {
                    continue;
                }
                let delta = factor.mul(&v[j]);
                row[j] = row[j].sub(&delta);
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pc)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }
}

/// 3x3 determinant of constant scalars.
pub fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let t = |a: &Scalar, b: &Scalar| a.mul(b);
    let mut acc = t(&m[0][0], &t(&m[1][1], &m[2][2]));
    acc = acc.add(&t(&m[0][1], &t(&m[1][2], &m[2][0])));
    acc = acc.add(&t(&m[0][2], &t(&m[1][0], &m[2][1])));
    acc = acc.sub(&t(&m[0][2], &t(&m[1][1], &m[2][0])));
    acc = acc.sub(&t(&m[0][0], &t(&m[1][2], &m[2][1])));
    acc = acc.sub(&t(&m[0][1], &t(&m[1][0], &m[2][2])));
    acc
}

/// Inverse transpose of an exact 3x3 matrix, via the adjugate.
pub fn inverse_transpose3(m: &[[Scalar; 3]; 3]) -> Result<[[Scalar; 3]; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return Err(Error::InvalidArgument("singular 3x3 matrix".into()));
    }
    let inv_det = det.inv()?;
    let cof = |r: usize, c: usize| -> Scalar {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let minor = m[rs[0]][cs[0]]
            .mul(&m[rs[1]][cs[1]])
            .sub(&m[rs[0]][cs[1]].mul(&m[rs[1]][cs[0]]));
        if (r + c) % 2 == 0 {
            minor
        } else {
            minor.neg()
        }
    };
    // inverse = adjugate / det, adjugate[i][j] = cofactor(j, i);
    // the inverse transpose is therefore cofactor(i, j) / det.
    let mut out: [[Scalar; 3]; 3] = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = cof(i, j).mul(&inv_det);
        }
    }
    Ok(out)
}
