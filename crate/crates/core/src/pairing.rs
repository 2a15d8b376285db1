//! Twisted pairings `⟨H⁻, H⁺⟩` and their axiom checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{BasisLabel, GradedElement, HopfPresentation, TensorElement};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::RatFunc;
use crate::twisting::{dual_twisting, shift_twisting, Degree, Shift, TwistingDatum};

/// Values of a bilinear form on pairs of labels of equal degree.
pub trait PairingForm: Send + Sync + fmt::Debug {
    fn value(&self, minus: &BasisLabel, plus: &BasisLabel) -> RatFunc;
}

/// A Gram block `(⟨x_r, a_c⟩)` for one degree.
#[derive(Clone, Debug)]
pub struct GramBlock {
    pub degree: Degree,
    pub rows: Vec<BasisLabel>,
    pub cols: Vec<BasisLabel>,
    pub matrix: Matrix,
}

struct Inner {
    minus: HopfPresentation,
    plus: HopfPresentation,
    gamma: TwistingDatum,
    form: Arc<dyn PairingForm>,
    values: Arc<RwLock<HashMap<(BasisLabel, BasisLabel), RatFunc>>>,
    grams: RwLock<HashMap<Degree, Arc<GramBlock>>>,
}

/// A `(q, γ)`-twisted pairing `⟨−,−⟩ : H⁻ × H⁺ → ℚ(q)`.
#[derive(Clone)]
pub struct TwistedPairing {
    inner: Arc<Inner>,
}

impl fmt::Debug for TwistedPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedPairing")
            .field("minus", &self.inner.minus)
            .field("plus", &self.inner.plus)
            .field("gamma", &self.inner.gamma)
            .finish()
    }
}

impl TwistedPairing {
    pub fn new(
        minus: HopfPresentation,
        plus: HopfPresentation,
        gamma: TwistingDatum,
        form: Arc<dyn PairingForm>,
    ) -> Result<Self> {
        for r in [minus.rank(), gamma.rank()] {
            if r != plus.rank() {
                return Err(Error::RankMismatch {
                    expected: plus.rank(),
                    found: r,
                });
            }
        }
        Ok(TwistedPairing {
            inner: Arc::new(Inner {
                minus,
                plus,
                gamma,
                form,
                values: Default::default(),
                grams: Default::default(),
            }),
        })
    }

    pub fn minus(&self) -> &HopfPresentation {
        &self.inner.minus
    }

    pub fn plus(&self) -> &HopfPresentation {
        &self.inner.plus
    }

    pub fn gamma(&self) -> &TwistingDatum {
        &self.inner.gamma
    }

    pub fn name(&self) -> &str {
        self.inner.plus.name()
    }

    /// The same form between other presentations or with another declared γ.
    pub fn redeclared(&self, minus: HopfPresentation, plus: HopfPresentation, gamma: TwistingDatum) -> Result<Self> {
        let p = TwistedPairing::new(minus, plus, gamma, self.inner.form.clone())?;
        Ok(TwistedPairing {
            inner: Arc::new(Inner {
                values: self.inner.values.clone(),
                ..Arc::try_unwrap(p.inner).ok().expect("fresh pairing")
            }),
        })
    }

    /// `H̃±` shifted by `(α±, β±)` with `γ̃′ = γ′ − α⁺ + β⁻`, `γ̃″ = γ″ − α⁻ + β⁺`.
    pub fn shifted(&self, shift: &Shift) -> Result<Self> {
        let chi = self.plus().twisting();
        let xi = self.minus().twisting();
        let s = shift_twisting(chi, xi, &self.inner.gamma, shift)?;
        let plus = self.plus().shifted(&shift.alpha_plus, &shift.beta_plus)?;
        let minus = self.minus().shifted(&shift.alpha_minus, &shift.beta_minus)?;
        self.redeclared(minus, plus, s.gamma)
    }

    /// `⟨x, a⟩` on labels; zero across degrees.
    pub fn pair_labels(&self, x: &BasisLabel, a: &BasisLabel) -> RatFunc {
        if x.degree() != a.degree() {
            return RatFunc::zero();
        }
        if x.is_unit() {
            return RatFunc::one();
        }
        let key = (x.clone(), a.clone());
        if let Some(v) = self.inner.values.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.inner.form.value(x, a);
        self.inner.values.write().unwrap().insert(key, v.clone());
        v
    }

    pub(crate) fn pair_unchecked(&self, x: &GradedElement, a: &GradedElement) -> RatFunc {
        let mut s = RatFunc::zero();
        for (xl, c) in x.iter() {
            for (al, d) in a.iter() {
                let v = self.pair_labels(xl, al);
                if !v.is_zero() {
                    s += &(&v * &(c * d));
                }
            }
        }
        s
    }

    pub fn pair(&self, x: &GradedElement, a: &GradedElement) -> Result<RatFunc> {
        self.minus().check_element(x)?;
        self.plus().check_element(a)?;
        Ok(self.pair_unchecked(x, a))
    }

    /// `⟨x ⊗ y, a ⊗ b⟩ = ⟨x, a⟩⟨y, b⟩`, extended bilinearly.
    pub fn pair_tensor(&self, s: &TensorElement, t: &TensorElement) -> RatFunc {
        let mut out = RatFunc::zero();
        for ((x, y), c) in s.iter() {
            for ((a, b), d) in t.iter() {
                let v = self.pair_labels(x, a);
                if v.is_zero() {
                    continue;
                }
                let w = self.pair_labels(y, b);
                if !w.is_zero() {
                    out += &(&(&v * &w) * &(c * d));
                }
            }
        }
        out
    }

    /// Degrees of total degree `n` occurring in `H⁺` or `H⁻`.
    fn degrees(&self, n: u32) -> Vec<Degree> {
        let mut out: Vec<Degree> = self
            .plus()
            .basis(n)
            .iter()
            .chain(self.minus().basis(n).iter())
            .map(|l| l.degree().clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn gram_block(&self, degree: &Degree) -> Arc<GramBlock> {
        if let Some(g) = self.inner.grams.read().unwrap().get(degree) {
            return g.clone();
        }
        let n = degree.total();
        let rows: Vec<BasisLabel> = self
            .minus()
            .basis(n)
            .iter()
            .filter(|l| l.degree() == degree)
            .cloned()
            .collect();
        let cols: Vec<BasisLabel> = self
            .plus()
            .basis(n)
            .iter()
            .filter(|l| l.degree() == degree)
            .cloned()
            .collect();
        let entries: Vec<Vec<RatFunc>> = rows
            .par_iter()
            .map(|x| cols.iter().map(|a| self.pair_labels(x, a)).collect())
            .collect();
        let matrix = if rows.is_empty() || cols.is_empty() {
            Matrix::zeros(rows.len(), cols.len())
        } else {
            Matrix::from_rows(entries).expect("rectangular")
        };
        let g = Arc::new(GramBlock {
            degree: degree.clone(),
            rows,
            cols,
            matrix,
        });
        self.inner
            .grams
            .write()
            .unwrap()
            .entry(degree.clone())
            .or_insert(g)
            .clone()
    }

    /// All Gram blocks of total degree at most `n`.
    pub fn gram_blocks(&self, n: u32) -> Vec<Arc<GramBlock>> {
        (0..=n)
            .flat_map(|d| self.degrees(d))
            .map(|deg| self.gram_block(&deg))
            .collect()
    }

    /// `{degree: [[scalar strings]]}` for all blocks up to total degree `n`.
    pub fn gram_json(&self, n: u32) -> serde_json::Value {
        let mut map = BTreeMap::new();
        for g in self.gram_blocks(n) {
            map.insert(g.degree.to_string(), g.matrix.to_strings());
        }
        serde_json::to_value(map).expect("serializable")
    }

    /// Multiplicativity in both slots plus the unit/counit identities, on
    /// all basis triples of total degree at most `n`.
    pub fn check_pairing_axioms(&self, n: u32) -> Report {
        let failure = self
            .first_unit_failure(n)
            .or_else(|| self.first_product_failure(n))
            .or_else(|| self.first_coproduct_failure(n))
            .or_else(|| self.first_orthogonality_failure(n));
        Report::from_witness("check_pairing_axioms", self.name(), n, failure)
    }

    fn first_unit_failure(&self, n: u32) -> Option<String> {
        let (plus, minus) = (self.plus(), self.minus());
        for a in plus.basis_upto(n) {
            let expect = plus.counit(&GradedElement::basis(a.clone()));
            if self.pair_labels(&minus.unit(), &a) != expect {
                return Some(format!("⟨1, {}⟩ ≠ ε", plus.label_name(&a)));
            }
        }
        for x in minus.basis_upto(n) {
            let expect = minus.counit(&GradedElement::basis(x.clone()));
            if self.pair_labels(&x, &plus.unit()) != expect {
                return Some(format!("⟨{}, 1⟩ ≠ ε", minus.label_name(&x)));
            }
        }
        None
    }

    fn first_product_failure(&self, n: u32) -> Option<String> {
        let (plus, minus) = (self.plus(), self.minus());
        let gamma = &self.inner.gamma.prime;
        minus.label_pairs(n).par_iter().find_map_first(|(x, y)| {
            let d = x.total() + y.total();
            let xy = minus.product_labels(x, y);
            for a in plus.basis(d).iter() {
                let lhs = self.pair_unchecked(&xy, &GradedElement::basis(a.clone()));
                let rhs = self
                    .pair_tensor(&TensorElement::basis((x.clone(), y.clone())), &plus.coproduct_label(a))
                    .mul_q_pow(gamma.eval_deg(x.degree(), y.degree()));
                if lhs != rhs {
                    return Some(format!(
                        "⟨{}·{}, {}⟩ = {} but q^γ′⟨x⊗y, Δa⟩ = {}",
                        minus.label_name(x),
                        minus.label_name(y),
                        plus.label_name(a),
                        lhs,
                        rhs
                    ));
                }
            }
            None
        })
    }

    fn first_coproduct_failure(&self, n: u32) -> Option<String> {
        let (plus, minus) = (self.plus(), self.minus());
        let gamma = &self.inner.gamma.doubleprime;
        plus.label_pairs(n).par_iter().find_map_first(|(a, b)| {
            let d = a.total() + b.total();
            let ab = plus.product_labels(a, b);
            for x in minus.basis(d).iter() {
                let lhs = self.pair_unchecked(&GradedElement::basis(x.clone()), &ab);
                let rhs = self
                    .pair_tensor(&minus.coproduct_label(x), &TensorElement::basis((a.clone(), b.clone())))
                    .mul_q_pow(gamma.eval_deg(a.degree(), b.degree()));
                if lhs != rhs {
                    return Some(format!(
                        "⟨{}, {}·{}⟩ = {} but q^γ″⟨Δx, a⊗b⟩ = {}",
                        minus.label_name(x),
                        plus.label_name(a),
                        plus.label_name(b),
                        lhs,
                        rhs
                    ));
                }
            }
            None
        })
    }

    fn first_orthogonality_failure(&self, n: u32) -> Option<String> {
        let (plus, minus) = (self.plus(), self.minus());
        for x in minus.basis_upto(n) {
            for a in plus.basis_upto(n) {
                if x.degree() != a.degree() && !self.inner.form.value(&x, &a).is_zero() {
                    return Some(format!(
                        "⟨{}, {}⟩ ≠ 0 across degrees",
                        minus.label_name(&x),
                        plus.label_name(&a)
                    ));
                }
            }
        }
        None
    }

    /// Each Gram block up to total degree `n` is square with nonzero determinant.
    pub fn perfectness_check(&self, n: u32) -> Report {
        let blocks = self.gram_blocks(n);
        let failure = blocks.par_iter().find_map_first(|g| {
            if !g.matrix.is_square() {
                return Some(format!(
                    "degree {}: Gram block is {}x{}",
                    g.degree,
                    g.rows.len(),
                    g.cols.len()
                ));
            }
            match g.matrix.determinant() {
                Ok(d) if d.is_zero() => Some(format!("degree {}: determinant is 0", g.degree)),
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            }
        });
        Report::from_witness("perfectness_check", self.name(), n, failure)
    }

    /// Determinants of the Gram blocks up to total degree `n`.
    pub fn gram_determinants(&self, n: u32) -> Result<Vec<(Degree, RatFunc)>> {
        self.gram_blocks(n)
            .par_iter()
            .map(|g| Ok((g.degree.clone(), g.matrix.determinant()?)))
            .collect()
    }

    /// `⟨x, S(a)⟩ = ⟨S(x), a⟩`; refuses unless `γ′ = γ″`.
    pub fn antipode_adjointness_check(&self, n: u32) -> Result<Report> {
        if self.inner.gamma.prime != self.inner.gamma.doubleprime {
            return Err(Error::Hypothesis(format!(
                "antipode adjointness needs γ′ = γ″, got γ = {}",
                self.inner.gamma
            )));
        }
        let (plus, minus) = (self.plus(), self.minus());
        let mut pairs = Vec::new();
        for d in 0..=n {
            for x in minus.basis(d).iter() {
                for a in plus.basis(d).iter() {
                    pairs.push((x.clone(), a.clone()));
                }
            }
        }
        let failure = pairs.par_iter().find_map_first(|(x, a)| {
            let sa = match plus.antipode_label(a) {
                Ok(s) => s,
                Err(e) => return Some(e.to_string()),
            };
            let sx = match minus.antipode_label(x) {
                Ok(s) => s,
                Err(e) => return Some(e.to_string()),
            };
            let lhs = self.pair_unchecked(&GradedElement::basis(x.clone()), &sa);
            let rhs = self.pair_unchecked(&sx, &GradedElement::basis(a.clone()));
            (lhs != rhs).then(|| {
                format!(
                    "⟨{}, S({})⟩ = {} but ⟨S({}), {}⟩ = {}",
                    minus.label_name(x),
                    plus.label_name(a),
                    lhs,
                    minus.label_name(x),
                    plus.label_name(a),
                    rhs
                )
            })
        });
        Ok(Report::from_witness(
            "antipode_adjointness_check",
            self.name(),
            n,
            failure,
        ))
    }

    /// `H⁻` is declared with `ξ = dual_twisting(χ, γ)` and is a `(q, ξ)`-bialgebra.
    pub fn dual_presentation_check(&self, n: u32) -> Report {
        let name = self.name();
        let xi = match dual_twisting(self.plus().twisting(), &self.inner.gamma) {
            Ok(xi) => xi,
            Err(e) => return Report::fail("dual_presentation_check", name, n, e.to_string()),
        };
        if &xi != self.minus().twisting() {
            return Report::fail(
                "dual_presentation_check",
                name,
                n,
                format!(
                    "declared ξ = {} but dual_twisting gives {}",
                    self.minus().twisting(),
                    xi
                ),
            );
        }
        let r = self.minus().with_twisting(xi).expect("same rank").check_bialgebra(n);
        Report::from_witness("dual_presentation_check", name, n, r.witness)
    }

    /// Every Gram block up to total degree `n` is a symmetric matrix.
    pub fn gram_symmetric(&self, n: u32) -> bool {
        self.gram_blocks(n).iter().all(|g| g.matrix == g.matrix.transpose())
    }
}
