use rayon::prelude::*;

use super::{DoubleElement, HeisenbergDouble, SmashAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{BasisLabel, GradedElement};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::RatFunc;
use crate::twisting::{BiadditiveMap, GroupDegree, Shift};

type Pair = (BasisLabel, BasisLabel);

impl SmashAlgebra {
    fn name(&self) -> String {
        self.pairing().name().to_string()
    }

    fn element(&self, p: &Pair) -> DoubleElement {
        DoubleElement::pair(p.0.clone(), p.1.clone())
    }

    /// `x^{R*}(ab) = Σ_{(x)} q^{γ″(|a|,|x₂|) + ξ″(|a|−|x₁|,|x₂|)} x₁^{R*}(a) x₂^{R*}(b)`
    /// for `|a| + |b| ≤ n`, `|x| ≤ n`.
    pub fn verify_commutation(&self, n: u32) -> Report {
        let (plus, minus) = (self.plus(), self.minus());
        let mut cases = Vec::new();
        for (a, b) in plus.label_pairs(n) {
            for x in minus.basis_upto(a.total() + b.total()) {
                cases.push((x, a.clone(), b.clone()));
            }
        }
        let gamma2 = &self.pairing().gamma().doubleprime;
        let xi2 = &self.xi().doubleprime;
        let failure = cases.par_iter().find_map_first(|(x, a, b)| {
            let lhs = self.act(&GradedElement::basis(x.clone()), &plus.product_labels(a, b));
            let adeg = a.degree().signed();
            let mut rhs = GradedElement::zero();
            for ((x1, x2), c) in minus.coproduct_label(x).iter() {
                let left = self.action_label(x1, a);
                if left.is_zero() {
                    continue;
                }
                let right = self.action_label(x2, b);
                let x2deg = x2.degree().signed();
                let e = gamma2.eval(&adeg, &x2deg) + xi2.eval(&(&adeg - &x1.degree().signed()), &x2deg);
                rhs.add_scaled(&plus.mul(&left, &right), &c.mul_q_pow(e));
            }
            (lhs != rhs).then(|| {
                format!(
                    "{}^R*({}·{}) = {} but the twisted Leibniz side is {}",
                    minus.label_name(x),
                    plus.label_name(a),
                    plus.label_name(b),
                    plus.format(&lhs),
                    plus.format(&rhs)
                )
            })
        });
        Report::from_witness("verify_commutation", &self.name(), n, failure)
    }

    /// `(uv)w = u(vw)` on basis elements of combined total degree `≤ n`.
    pub fn check_associativity(&self, n: u32) -> Report {
        let basis = self.basis_upto(n);
        let weight = |p: &Pair| p.0.total() + p.1.total();
        let mut cases = Vec::new();
        for u in &basis {
            for v in &basis {
                if weight(u) + weight(v) > n {
                    continue;
                }
                for w in &basis {
                    if weight(u) + weight(v) + weight(w) <= n {
                        cases.push((u, v, w));
                    }
                }
            }
        }
        let failure = cases.par_iter().find_map_first(|(u, v, w)| {
            let (u, v, w) = (self.element(u), self.element(v), self.element(w));
            let lhs = self.mul(&self.mul(&u, &v), &w);
            let rhs = self.mul(&u, &self.mul(&v, &w));
            (lhs != rhs).then(|| {
                format!(
                    "(uv)w ≠ u(vw) for u={}, v={}, w={}",
                    self.format(&u),
                    self.format(&v),
                    self.format(&w)
                )
            })
        });
        Report::from_witness("check_associativity", &self.name(), n, failure)
    }
}

impl HeisenbergDouble {
    /// Kernel dimension, summed over degrees `1..=n`, of the stacked maps
    /// `x^{R*}` with `x` of positive degree.
    pub fn vacuum_kernel_dimension(&self, n: u32) -> usize {
        let (plus, minus) = (self.plus(), self.minus());
        (1..=n)
            .map(|d| {
                let cols = plus.basis(d);
                let mut rows: Vec<Vec<RatFunc>> = Vec::new();
                for x in minus.basis_upto(d).iter().filter(|x| !x.is_unit()) {
                    let targets = plus.basis(d - x.total());
                    let images: Vec<GradedElement> = cols.iter().map(|b| (*self.action_label(x, b)).clone()).collect();
                    for t in targets.iter() {
                        rows.push(images.iter().map(|img| img.coefficient(t)).collect());
                    }
                }
                if rows.is_empty() {
                    return cols.len();
                }
                let m = Matrix::from_rows(rows).expect("rows share the column count");
                cols.len() - m.rank()
            })
            .sum()
    }

    /// The Fock space is generated by `1`: `x^{R*}(1) = 0` for `|x| > 0`
    /// and no other vector below degree `n` is annihilated by all of them.
    pub fn verify_vacuum(&self, n: u32) -> Report {
        let name = self.name().to_string();
        let unit = self.plus().unit();
        for x in self.minus().basis_upto(n) {
            if !x.is_unit() && !self.action_label(&x, &unit).is_zero() {
                let witness = format!("{}^R*(1) ≠ 0", self.minus().label_name(&x));
                return Report::fail("verify_vacuum", &name, n, witness);
            }
        }
        match self.vacuum_kernel_dimension(n) {
            0 => Report::pass("verify_vacuum", &name, n),
            k => Report::fail(
                "verify_vacuum",
                &name,
                n,
                format!("common kernel of dimension {k} in degrees 1..={n}"),
            ),
        }
    }

    /// Basis of the weight space `𝔥_λ` with both sides of total degree `≤ n`.
    pub fn weight_basis(&self, lambda: &GroupDegree, n: u32) -> Result<Vec<DoubleElement>> {
        if lambda.rank() != self.plus().rank() {
            return Err(Error::RankMismatch {
                expected: self.plus().rank(),
                found: lambda.rank(),
            });
        }
        let plus = self.plus().basis_upto(n);
        let minus = self.minus().basis_upto(n);
        let mut out = Vec::new();
        for a in &plus {
            for x in &minus {
                if &(&a.degree().signed() - &x.degree().signed()) == lambda {
                    out.push(DoubleElement::pair(a.clone(), x.clone()));
                }
            }
        }
        Ok(out)
    }

    /// `(rank, dimension)` of the Fock operators of the `𝔥_λ` basis,
    /// flattened on the window `n_in = n`, `n_out = n + max|a|`.
    pub fn faithful_rank(&self, lambda: &GroupDegree, n: u32) -> Result<(usize, usize)> {
        let basis = self.weight_basis(lambda, n)?;
        let max_a = basis
            .iter()
            .flat_map(|u| u.iter().map(|((a, _), _)| a.total()))
            .max()
            .unwrap_or(0);
        let rows = basis
            .par_iter()
            .map(|u| {
                let m = self.fock_matrix(u, n, n + max_a)?.matrix;
                Ok(m.to_rows().into_iter().flatten().collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok((0, 0));
        }
        Ok((Matrix::from_rows(rows)?.rank(), basis.len()))
    }

    /// The Fock operators of the truncated `𝔥_λ` basis are linearly independent.
    pub fn verify_faithful(&self, lambda: &GroupDegree, n: u32) -> Result<Report> {
        let (rank, dim) = self.faithful_rank(lambda, n)?;
        let name = self.name().to_string();
        Ok(if rank == dim {
            Report::pass("verify_faithful", &name, n)
        } else {
            Report::fail(
                "verify_faithful",
                &name,
                n,
                format!("weight {lambda}: operator rank {rank} < dimension {dim}"),
            )
        })
    }

    /// The double built from the `(α, α, 0, 0)`-shifted pair has the same
    /// structure constants on basis pairs of combined total degree `≤ n`.
    pub fn verify_shift_invariance(&self, alpha: &BiadditiveMap, n: u32) -> Result<Report> {
        let shifted = self.pairing().shifted(&Shift::coproduct_only(alpha.clone()))?;
        let tilde = HeisenbergDouble::new(shifted)?;
        let basis = self.basis_upto(n);
        let weight = |p: &Pair| p.0.total() + p.1.total();
        let mut cases = Vec::new();
        for u in &basis {
            for v in &basis {
                if weight(u) + weight(v) <= n {
                    cases.push((u, v));
                }
            }
        }
        let failure = cases.par_iter().find_map_first(|(u, v)| {
            let (u, v) = (self.element(u), self.element(v));
            let ours = self.mul(&u, &v);
            let theirs = tilde.mul(&u, &v);
            (ours != theirs).then(|| {
                format!(
                    "({})({}) = {} but {} after shifting by {alpha}",
                    self.format(&u),
                    self.format(&v),
                    self.format(&ours),
                    self.format(&theirs)
                )
            })
        });
        Ok(Report::from_witness("verify_shift_invariance", self.name(), n, failure))
    }

    /// `(uv)(b) = u(v(b))` for basis `u, v` and `b` of combined degree `≤ n`.
    pub fn check_fock_action(&self, n: u32) -> Report {
        let basis = self.basis_upto(n);
        let weight = |p: &Pair| p.0.total() + p.1.total();
        let mut cases = Vec::new();
        for u in &basis {
            for v in &basis {
                let used = weight(u) + weight(v);
                if used > n {
                    continue;
                }
                for b in self.plus().basis_upto(n - used) {
                    cases.push((u, v, b));
                }
            }
        }
        let failure = cases.par_iter().find_map_first(|(u, v, b)| {
            let (u, v) = (self.element(u), self.element(v));
            let b = GradedElement::basis(b.clone());
            let lhs = self.fock(&self.mul(&u, &v), &b);
            let rhs = self.fock(&u, &self.fock(&v, &b));
            (lhs != rhs).then(|| {
                format!(
                    "({})({})·{} acts inconsistently",
                    self.format(&u),
                    self.format(&v),
                    self.plus().format(&b)
                )
            })
        });
        Report::from_witness("check_fock_action", self.name(), n, failure)
    }
}
