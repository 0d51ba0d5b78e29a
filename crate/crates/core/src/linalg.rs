//! Dense Gauss–Jordan elimination over a [`Scalar`] field.
//!
//! Over exact rationals every step is exact, so a zero residual really is zero.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("singular system: rank {rank} < {unknowns} unknowns")]
    Singular { rank: usize, unknowns: usize },
    #[error("inconsistent system: row {row} reduces to 0 = nonzero")]
    Inconsistent { row: usize },
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rank(&self) -> usize {
        let mut tracker = RankTracker::new(self.cols);
        (0..self.rows).filter(|&r| tracker.insert(self.row(r).to_vec())).count()
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Solves `self · x = rhs` for a system of full column rank.
    ///
    /// Extra rows are allowed; they must be consistent with the rest.
    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: rhs.len() });
        }
        let n = self.cols;
        let mut aug: Vec<Vec<T>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();

        let mut pivot_row = 0;
        for col in 0..n {
            let Some(best) = (pivot_row..aug.len())
                .filter(|&r| !aug[r][col].is_negligible())
                .max_by(|&a, &b| aug[a][col].magnitude().total_cmp(&aug[b][col].magnitude()))
            else {
                return Err(LinalgError::Singular { rank: pivot_row, unknowns: n });
            };
            aug.swap(pivot_row, best);
            let inv = T::one() / aug[pivot_row][col].clone();
            for v in aug[pivot_row].iter_mut().skip(col) {
                *v = v.clone() * inv.clone();
            }
            let pivot = aug[pivot_row].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
            pivot_row += 1;
        }

        for (r, row) in aug.iter().enumerate().skip(n) {
            if !row[n].is_negligible() {
                return Err(LinalgError::Inconsistent { row: r });
            }
        }
        Ok(aug.into_iter().take(n).map(|mut row| row.pop().expect("augmented column")).collect())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

/// Incrementally maintained row echelon basis; reports whether each new row
/// raises the rank.
#[derive(Clone, Debug)]
pub struct RankTracker<T> {
    cols: usize,
    // (pivot column, row normalised so the pivot is one)
    basis: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> RankTracker<T> {
    pub fn new(cols: usize) -> Self {
        Self { cols, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.cols
    }

    /// Reduces `row` against the basis without inserting it.
    fn reduce(&self, mut row: Vec<T>) -> Vec<T> {
        for (pc, b) in &self.basis {
            if row[*pc].is_negligible() {
                continue;
            }
            let factor = row[*pc].clone();
            for (v, x) in row.iter_mut().zip(b) {
                *v = v.clone() - factor.clone() * x.clone();
            }
        }
        row
    }

    pub fn is_independent(&self, row: &[T]) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        self.reduce(row.to_vec()).iter().any(|v| !v.is_negligible())
    }

    /// Inserts the row if it is independent of the basis; returns whether it was.
    pub fn insert(&mut self, row: Vec<T>) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        let reduced = self.reduce(row);
        let Some(pc) = reduced.iter().position(|v| !v.is_negligible()) else {
            return false;
        };
        let inv = T::one() / reduced[pc].clone();
        let normalised: Vec<T> = reduced.into_iter().map(|v| v * inv.clone()).collect();
        // keep the basis fully reduced so `reduce` stays a single pass
        for (_, b) in self.basis.iter_mut() {
            if b[pc].is_negligible() {
                continue;
            }
            let factor = b[pc].clone();
            for (v, x) in b.iter_mut().zip(&normalised) {
                *v = v.clone() - factor.clone() * x.clone();
            }
        }
        self.basis.push((pc, normalised));
        true
    }
}
