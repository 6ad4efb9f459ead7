//! Exact dense linear algebra over the rationals: solving square systems and
//! maintaining an incremental row space in reduced row-echelon form.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solves the square system `matrix * x = rhs` by Gaussian elimination with
/// exact arithmetic. Returns [`Error::Singular`] when no unique solution
/// exists.
pub fn solve(matrix: &[Vec<Scalar>], rhs: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::BadShape(format!(
            "expected a square {n} x {n} system with a length-{n} right-hand side"
        )));
    }
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inverse().expect("pivot nonzero");
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for c in col..n {
                    let bump = &factor * &a[col][c];
                    a[row][c] -= &bump;
                }
                let bump = &factor * &b[col];
                b[row] -= &bump;
            }
        }
    }
    Ok(b)
}

/// An incrementally grown subspace of Q^ambient, kept in reduced
/// row-echelon form: each stored row has a leading 1 in its pivot column,
/// and every pivot column is zero in all other rows.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The residual of `v` after eliminating against the stored rows.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ambient {
            return Err(Error::SizeMismatch(format!(
                "vector length {} does not match ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut out = v.to_vec();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            if !out[pivot].is_zero() {
                let factor = out[pivot].clone();
                for (entry, r) in out.iter_mut().zip(row) {
                    let bump = &factor * r;
                    *entry -= &bump;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Adds `v` to the span. Returns true when v was independent of the
    /// stored rows (the rank grew), false when it already lay in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        let mut residual = self.reduce(v)?;
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = residual[pivot].inverse().expect("pivot nonzero");
        for entry in residual.iter_mut() {
            *entry = &*entry * &inv;
        }
        // Back-eliminate the new pivot from the existing rows to stay in
        // reduced row-echelon form.
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (entry, r) in row.iter_mut().zip(&residual) {
                    let bump = &factor * r;
                    *entry -= &bump;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, residual);
        Ok(true)
    }
}
