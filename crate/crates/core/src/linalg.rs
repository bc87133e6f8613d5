//! Dense exact linear algebra over the field: reduced row echelon form,
//! rank, kernel bases, determinants and linear solves.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::FieldElem;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: Vec<Vec<FieldElem>>,
    ncols: usize,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Matrix {
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { rows, ncols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            rows: vec![vec![FieldElem::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = FieldElem::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElem {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.rows[r][c] = v;
    }

    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].inverse().expect("nonzero pivot");
            for c in col..self.ncols {
                self.rows[row][c] = &self.rows[row][c] * &inv;
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let f = self.rows[r][col].clone();
                    for c in col..self.ncols {
                        let delta = &f * &self.rows[row][c];
                        self.rows[r][c] = &self.rows[r][c] - &delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_rows: Vec<(usize, usize)> = pivots
            .iter()
            .copied()
            .enumerate()
            .map(|(r, c)| (c, r))
            .collect();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![FieldElem::zero(); self.ncols];
            v[fc] = FieldElem::one();
            for &(pc, pr) in &pivot_rows {
                v[pc] = -&m.rows[pr][fc];
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> FieldElem {
        assert_eq!(
            self.rows.len(),
            self.ncols,
            "determinant of non-square matrix"
        );
        let mut m = self.rows.clone();
        let n = self.ncols;
        let mut det = FieldElem::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return FieldElem::zero();
            };
            if p != col {
                m.swap(col, p);
                det = -&det;
            }
            let pivot = m[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inverse().unwrap();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let delta = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        det
    }

    /// Solves `Ax = b`; `None` when inconsistent. Free coordinates are set to 0.
    pub fn solve(&self, b: &[FieldElem]) -> Option<Vec<FieldElem>> {
        assert_eq!(b.len(), self.rows.len());
        let mut aug = self.clone();
        aug.ncols += 1;
        for (row, rhs) in aug.rows.iter_mut().zip(b.iter()) {
            row.push(rhs.clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![FieldElem::zero(); self.ncols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.rows[r][self.ncols].clone();
        }
        Some(x)
    }

    /// Expresses `v` in terms of the rows of an RREF matrix, or `None` when
    /// `v` is outside the row span.
    pub fn mul_vec(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(x.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                let mut acc = FieldElem::zero();
                for (a, b) in row.iter().zip(x.iter()) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Do the two row spans coincide?
pub fn same_row_span(a: &Matrix, b: &Matrix) -> bool {
    let mut ra = a.clone();
    let mut rb = b.clone();
    ra.rref();
    rb.rref();
    let nonzero = |m: &Matrix| {
        m.rows()
            .iter()
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .cloned()
            .collect::<Vec<_>>()
    };
    nonzero(&ra) == nonzero(&rb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> FieldElem {
        FieldElem::from_integer(n)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(FieldElem::is_zero));
        }
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(3), int(1)]]);
        assert_eq!(m.det(), int(-6));
        assert_eq!(Matrix::identity(4).det(), int(1));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);
        let x = m.solve(&[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let sing = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(2), int(2)]]);
        assert!(sing.solve(&[int(0), int(1)]).is_none());
    }

    #[test]
    fn row_span_comparison() {
        let a = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
        let b = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);
        assert!(same_row_span(&a, &b));
        let c = Matrix::from_rows(vec![vec![int(1), int(1)]]);
        assert!(!same_row_span(&a, &c));
    }
}
