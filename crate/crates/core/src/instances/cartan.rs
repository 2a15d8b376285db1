//! Symmetric integer matrices `A_{ij} = ⟨i,j⟩` indexing colored instances.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::{q_int_sym, RatFunc};

/// A symmetric integer matrix over the colors `1..=ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CartanData {
    rows: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Config("the matrix needs at least one color".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rank: n,
                detail: format!("row of length {}", r.len()),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().take(i) {
                if v != rows[j][i] {
                    return Err(Error::Config(format!(
                        "matrix is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanData { rows })
    }

    /// Finite type `A_n`.
    pub fn finite_a(n: usize) -> Self {
        let mut rows = vec![vec![0; n]; n];
        for i in 0..n {
            rows[i][i] = 2;
            if i + 1 < n {
                rows[i][i + 1] = -1;
                rows[i + 1][i] = -1;
            }
        }
        CartanData { rows }
    }

    /// Affine type `A_n^{(1)}` on `n + 1` nodes in a cycle, `n ≥ 2`.
    pub fn affine_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange("affine type A needs n >= 2 here".into()));
        }
        let m = n + 1;
        let mut rows = vec![vec![0; m]; m];
        for i in 0..m {
            rows[i][i] = 2;
            rows[i][(i + 1) % m] = -1;
            rows[(i + 1) % m][i] = -1;
        }
        Ok(CartanData { rows })
    }

    /// Affine type `D₄^{(1)}`: node 3 joined to nodes 1, 2, 4, 5.
    pub fn affine_d4() -> Self {
        let mut rows = vec![vec![0; 5]; 5];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for leaf in [0, 1, 3, 4] {
            rows[2][leaf] = -1;
            rows[leaf][2] = -1;
        }
        CartanData { rows }
    }

    /// `A2`, `A3_affine`, `D4_affine`, ...
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::Config(format!("unknown Cartan type {name:?}"));
        if name == "D4_affine" {
            return Ok(Self::affine_d4());
        }
        let (body, affine) = match name.strip_suffix("_affine") {
            Some(b) => (b, true),
            None => (name, false),
        };
        let n: usize = body
            .strip_prefix('A')
            .and_then(|s| s.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(unknown)?;
        if affine {
            Self::affine_a(n)
        } else {
            Ok(Self::finite_a(n))
        }
    }

    pub fn colors(&self) -> usize {
        self.rows.len()
    }

    /// `⟨i,j⟩` for 1-based colors.
    pub fn bracket(&self, i: u32, j: u32) -> i64 {
        self.rows[i as usize - 1][j as usize - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Exact integer determinant.
    pub fn determinant(&self) -> RatFunc {
        let m = Matrix::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&v| RatFunc::integer(v)).collect())
                .collect(),
        )
        .expect("square");
        m.determinant().expect("square")
    }

    /// `([k⟨i,j⟩])_{i,j}`.
    pub fn quantum_matrix(&self, k: u32) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| q_int_sym(k as i64 * v)).collect())
            .collect();
        Matrix::from_rows(rows).expect("square")
    }

    /// `det([k⟨i,j⟩])` for `k = 1..=kmax`.
    pub fn quantum_determinants(&self, kmax: u32) -> Vec<(u32, RatFunc)> {
        (1..=kmax)
            .map(|k| (k, self.quantum_matrix(k).determinant().expect("square")))
            .collect()
    }

    /// The first `k ≤ kmax` with `det([k⟨i,j⟩]) = 0`.
    pub fn first_singular(&self, kmax: u32) -> Option<u32> {
        (1..=kmax).find(|&k| self.quantum_matrix(k).determinant().expect("square").is_zero())
    }

    /// `[k⟨i,j⟩] · (1, …, 1)ᵀ`, the row sums of the quantum matrix.
    pub fn quantum_row_sums(&self, k: u32) -> Vec<RatFunc> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| q_int_sym(k as i64 * v)).sum())
            .collect()
    }
}

impl TryFrom<Vec<Vec<i64>>> for CartanData {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        CartanData::new(rows)
    }
}

impl From<CartanData> for Vec<Vec<i64>> {
    fn from(c: CartanData) -> Self {
        c.rows
    }
}

/// `det([k⟨i,j⟩]) ≠ 0` for every `k ≤ kmax`.
pub fn nonsingularity_check(cartan: &CartanData, kmax: u32, instance: &str) -> Report {
    let failure = cartan.first_singular(kmax).map(|k| format!("det([{k}⟨i,j⟩]) = 0"));
    Report::from_witness("nonsingularity_check", instance, kmax, failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders() {
        assert_eq!(CartanData::finite_a(2).rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(CartanData::named("A2").unwrap(), CartanData::finite_a(2));
        assert_eq!(CartanData::named("D4_affine").unwrap(), CartanData::affine_d4());
        assert_eq!(CartanData::named("A3_affine").unwrap().colors(), 4);
        assert!(CartanData::named("E8").is_err());
        assert!(CartanData::new(vec![vec![2, 1], vec![0, 2]]).is_err());
        assert!(CartanData::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn affine_cartan_determinant_vanishes() {
        assert!(CartanData::affine_d4().determinant().is_zero());
        assert!(CartanData::affine_a(3).unwrap().determinant().is_zero());
        assert_eq!(CartanData::finite_a(2).determinant(), RatFunc::integer(3));
    }
}
