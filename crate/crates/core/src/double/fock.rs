use serde_json::json;

use super::{DoubleElement, HeisenbergDouble};
use crate::error::{Error, Result};
use crate::hopf::GradedElement;
use crate::linalg::Matrix;

/// The matrix of a Fock operator between two degree windows of `H⁺`.
#[derive(Clone, Debug)]
pub struct FockMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: Matrix,
}

impl FockMatrix {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "matrix": self.matrix.to_strings(),
        })
    }
}

impl HeisenbergDouble {
    /// `(a # x)(b) = a · x^{R*}(b)` extended linearly.
    pub fn fock_apply(&self, u: &DoubleElement, b: &GradedElement) -> Result<GradedElement> {
        self.engine().check(u)?;
        self.plus().check_element(b)?;
        Ok(self.fock(u, b))
    }

    pub(crate) fn fock(&self, u: &DoubleElement, b: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for ((a, x), c) in u.iter() {
            let acted = self.act(&GradedElement::basis(x.clone()), b);
            if acted.is_zero() {
                continue;
            }
            out.add_scaled(&self.plus().mul(&GradedElement::basis(a.clone()), &acted), c);
        }
        out
    }

    /// Columns are labels of total degree `≤ n_in`, rows labels of total
    /// degree `≤ n_out`; fails if some image leaves the output window.
    pub fn fock_matrix(&self, u: &DoubleElement, n_in: u32, n_out: u32) -> Result<FockMatrix> {
        self.engine().check(u)?;
        let cols = self.plus().basis_upto(n_in);
        let rows = self.plus().basis_upto(n_out);
        let mut matrix = Matrix::zeros(rows.len(), cols.len());
        for (j, b) in cols.iter().enumerate() {
            let image = self.fock(u, &GradedElement::basis(b.clone()));
            for (label, c) in image.iter() {
                let Ok(i) = rows.binary_search(label) else {
                    return Err(Error::WindowTooSmall {
                        needed: label.total() as u64,
                        window: n_out as u64,
                    });
                };
                matrix.set(i, j, c.clone());
            }
        }
        let name = |l: &crate::hopf::BasisLabel| self.plus().label_name(l);
        Ok(FockMatrix {
            rows: rows.iter().map(name).collect(),
            cols: cols.iter().map(name).collect(),
            matrix,
        })
    }
}
