//! Dense matrices over ℚ(q) with fraction-free elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::RatFunc;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::NotSquare {
                rank: c,
                detail: "ragged rows".into(),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFunc) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[RatFunc] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<RatFunc>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::RankMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Bareiss determinant; errors on non-square input.
    pub fn determinant(&self) -> Result<RatFunc> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rank: self.rows,
                detail: format!("{}x{}", self.rows, self.cols),
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RatFunc::one());
        }
        let mut m = self.to_rows();
        let mut prev = RatFunc::one();
        let mut negate = false;
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(RatFunc::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = v.checked_div(&prev).expect("Bareiss pivot is nonzero");
                }
                m[i][k] = RatFunc::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Rank by fraction-free row reduction with column skipping.
    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut rank = 0;
        let mut prev = RatFunc::one();
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                if m[i][c].is_zero() {
                    for j in c + 1..self.cols {
                        let v = &m[rank][c] * &m[i][j];
                        m[i][j] = v.checked_div(&prev).expect("nonzero pivot");
                    }
                    continue;
                }
                for j in c + 1..self.cols {
                    let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                    m[i][j] = v.checked_div(&prev).expect("nonzero pivot");
                }
                m[i][c] = RatFunc::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Solves `self * x = b` when a solution exists; returns one solution.
    pub fn solve(&self, b: &[RatFunc]) -> Option<Vec<RatFunc>> {
        assert_eq!(b.len(), self.rows);
        let mut m: Vec<Vec<RatFunc>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][c].inverse().expect("nonzero pivot");
            for v in m[rank].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..self.rows {
                if i != rank && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let pivot_row = m[rank].clone();
                    for (v, p) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                        *v = &*v - &f * p;
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        if m[rank..].iter().any(|row| !row[self.cols].is_zero()) {
            return None;
        }
        let mut x = vec![RatFunc::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = m[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_strings()).finish()
    }
}
