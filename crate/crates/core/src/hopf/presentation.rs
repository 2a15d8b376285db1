use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::{format_sum, tensor, BasisLabel, GradedElement, StructureConstants, TensorElement};
use crate::error::{Error, Result};
use crate::scalars::RatFunc;
use crate::twisting::{BiadditiveMap, TwistingDatum};

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn cached<K, V>(cache: &Cache<K, V>, key: &K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq + Clone,
{
    if let Some(v) = cache.read().unwrap().get(key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    cache.write().unwrap().entry(key.clone()).or_insert(v).clone()
}

/// Raw structure constants shared by a presentation and all of its shifts.
#[derive(Debug)]
struct ConstantCache {
    raw: Arc<dyn StructureConstants>,
    bases: Cache<u32, Vec<BasisLabel>>,
    products: Cache<(BasisLabel, BasisLabel), GradedElement>,
    coproducts: Cache<BasisLabel, TensorElement>,
}

struct Inner {
    name: String,
    constants: Arc<ConstantCache>,
    twisting: TwistingDatum,
    alpha: BiadditiveMap,
    beta: BiadditiveMap,
    products: Cache<(BasisLabel, BasisLabel), GradedElement>,
    coproducts: Cache<BasisLabel, TensorElement>,
    antipode: Cache<BasisLabel, GradedElement>,
}

/// A `(q, χ)`-bialgebra presented degreewise by cached structure constants,
/// possibly with shifted product `∇_β` and coproduct `Δ_α`.
#[derive(Clone)]
pub struct HopfPresentation {
    inner: Arc<Inner>,
}

impl fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfPresentation")
            .field("name", &self.inner.name)
            .field("space", &self.space())
            .field("twisting", &self.inner.twisting)
            .finish()
    }
}

impl HopfPresentation {
    pub fn new(
        name: impl Into<String>,
        constants: Arc<dyn StructureConstants>,
        twisting: TwistingDatum,
    ) -> Result<Self> {
        let rank = constants.rank();
        if twisting.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: twisting.rank(),
            });
        }
        let cache = ConstantCache {
            raw: constants,
            bases: Default::default(),
            products: Default::default(),
            coproducts: Default::default(),
        };
        Ok(Self::assemble(
            name.into(),
            Arc::new(cache),
            twisting,
            BiadditiveMap::zero(rank),
            BiadditiveMap::zero(rank),
        ))
    }

    fn assemble(
        name: String,
        constants: Arc<ConstantCache>,
        twisting: TwistingDatum,
        alpha: BiadditiveMap,
        beta: BiadditiveMap,
    ) -> Self {
        HopfPresentation {
            inner: Arc::new(Inner {
                name,
                constants,
                twisting,
                alpha,
                beta,
                products: Default::default(),
                coproducts: Default::default(),
                antipode: Default::default(),
            }),
        }
    }

    /// The same algebra and coalgebra declared with another twisting.
    pub fn with_twisting(&self, twisting: TwistingDatum) -> Result<Self> {
        if twisting.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: twisting.rank(),
            });
        }
        Ok(Self::assemble(
            self.inner.name.clone(),
            self.inner.constants.clone(),
            twisting,
            self.inner.alpha.clone(),
            self.inner.beta.clone(),
        ))
    }

    /// `(H, ∇_β, Δ_α)` with twisting `(χ′ + αᵀ + β, χ″ + α + β)`.
    pub fn shifted(&self, alpha: &BiadditiveMap, beta: &BiadditiveMap) -> Result<Self> {
        let chi = &self.inner.twisting;
        let twisting = TwistingDatum::new(
            chi.prime.try_add(&alpha.transpose())?.try_add(beta)?,
            chi.doubleprime.try_add(alpha)?.try_add(beta)?,
        )?;
        Ok(Self::assemble(
            self.inner.name.clone(),
            self.inner.constants.clone(),
            twisting,
            self.inner.alpha.try_add(alpha)?,
            self.inner.beta.try_add(beta)?,
        ))
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn space(&self) -> &str {
        self.inner.constants.raw.space()
    }

    pub fn rank(&self) -> usize {
        self.inner.constants.raw.rank()
    }

    pub fn twisting(&self) -> &TwistingDatum {
        &self.inner.twisting
    }

    pub fn alpha(&self) -> &BiadditiveMap {
        &self.inner.alpha
    }

    pub fn beta(&self) -> &BiadditiveMap {
        &self.inner.beta
    }

    pub fn unit(&self) -> BasisLabel {
        self.inner.constants.raw.unit()
    }

    pub fn one(&self) -> GradedElement {
        GradedElement::basis(self.unit())
    }

    pub fn label_name(&self, a: &BasisLabel) -> String {
        if a.is_unit() {
            "1".into()
        } else {
            self.inner.constants.raw.label_name(a)
        }
    }

    pub fn owns(&self, a: &BasisLabel) -> bool {
        a.space() == self.space() && a.degree().rank() == self.rank()
    }

    pub(crate) fn check_label(&self, a: &BasisLabel) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(Error::ForeignLabel {
                label: format!("{a:?}"),
                space: self.space().to_string(),
            })
        }
    }

    pub(crate) fn check_element(&self, u: &GradedElement) -> Result<()> {
        u.keys().try_for_each(|a| self.check_label(a))
    }

    fn check_tensor(&self, s: &TensorElement) -> Result<()> {
        s.keys().try_for_each(|(a, b)| {
            self.check_label(a)?;
            self.check_label(b)
        })
    }

    /// Labels of total degree `n`, in label order.
    pub fn basis(&self, n: u32) -> Arc<Vec<BasisLabel>> {
        let c = &self.inner.constants;
        cached(&c.bases, &n, || {
            let mut b = c.raw.basis(n);
            b.sort();
            b
        })
    }

    /// Labels of total degree at most `n`, in label order.
    pub fn basis_upto(&self, n: u32) -> Vec<BasisLabel> {
        (0..=n)
            .flat_map(|d| self.basis(d).iter().cloned().collect::<Vec<_>>())
            .collect()
    }

    fn raw_product(&self, a: &BasisLabel, b: &BasisLabel) -> Arc<GradedElement> {
        let c = &self.inner.constants;
        cached(&c.products, &(a.clone(), b.clone()), || c.raw.product(a, b))
    }

    fn raw_coproduct(&self, a: &BasisLabel) -> Arc<TensorElement> {
        let c = &self.inner.constants;
        cached(&c.coproducts, a, || c.raw.coproduct(a))
    }

    /// `∇_β(a ⊗ b)` on labels.
    pub fn product_labels(&self, a: &BasisLabel, b: &BasisLabel) -> Arc<GradedElement> {
        let beta = &self.inner.beta;
        if beta.is_zero() {
            return self.raw_product(a, b);
        }
        cached(&self.inner.products, &(a.clone(), b.clone()), || {
            let e = beta.eval_deg(a.degree(), b.degree());
            let raw = self.raw_product(a, b);
            raw.iter().map(|(l, c)| (l.clone(), c.mul_q_pow(e))).collect()
        })
    }

    /// `Δ_α(a)` on labels.
    pub fn coproduct_label(&self, a: &BasisLabel) -> Arc<TensorElement> {
        let alpha = &self.inner.alpha;
        if alpha.is_zero() {
            return self.raw_coproduct(a);
        }
        cached(&self.inner.coproducts, a, || {
            let raw = self.raw_coproduct(a);
            raw.iter()
                .map(|((l, r), c)| {
                    let e = alpha.eval_deg(l.degree(), r.degree());
                    ((l.clone(), r.clone()), c.mul_q_pow(e))
                })
                .collect()
        })
    }

    pub(crate) fn mul(&self, u: &GradedElement, v: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (a, c) in u.iter() {
            for (b, d) in v.iter() {
                out.add_scaled(&self.product_labels(a, b), &(c * d));
            }
        }
        out
    }

    pub fn multiply(&self, u: &GradedElement, v: &GradedElement) -> Result<GradedElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn comul(&self, u: &GradedElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (a, c) in u.iter() {
            out.add_scaled(&self.coproduct_label(a), c);
        }
        out
    }

    pub fn comultiply(&self, u: &GradedElement) -> Result<TensorElement> {
        self.check_element(u)?;
        Ok(self.comul(u))
    }

    pub fn counit(&self, u: &GradedElement) -> RatFunc {
        u.coefficient(&self.unit())
    }

    pub(crate) fn star(&self, s: &TensorElement, t: &TensorElement) -> TensorElement {
        let chi = &self.inner.twisting;
        let mut out = TensorElement::zero();
        for ((a1, a2), c) in s.iter() {
            for ((b1, b2), d) in t.iter() {
                let e =
                    chi.prime.eval_deg(a2.degree(), b1.degree()) + chi.doubleprime.eval_deg(a1.degree(), b2.degree());
                let left = self.product_labels(a1, b1);
                let right = self.product_labels(a2, b2);
                out.add_scaled(&tensor(&left, &right), &(c * d).mul_q_pow(e));
            }
        }
        out
    }

    /// `s *_χ t` on `H ⊗ H`.
    pub fn twisted_tensor_multiply(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        self.check_tensor(s)?;
        self.check_tensor(t)?;
        Ok(self.star(s, t))
    }

    /// `S(a) = −a − Σ a′S(a″)` over the strictly positive part of `Δ(a)`.
    pub fn antipode_label(&self, a: &BasisLabel) -> Result<Arc<GradedElement>> {
        if let Some(v) = self.inner.antipode.read().unwrap().get(a) {
            return Ok(v.clone());
        }
        let value = if a.is_unit() {
            GradedElement::basis(a.clone())
        } else {
            let delta = self.coproduct_label(a);
            let unit = self.unit();
            let mut out = GradedElement::term(a.clone(), RatFunc::integer(-1));
            for ((l, r), c) in delta.iter() {
                let edge = l.is_unit() || r.is_unit();
                if !edge {
                    let s = self.antipode_label(r)?;
                    out.add_scaled(&self.mul(&GradedElement::basis(l.clone()), &s), &-c);
                    continue;
                }
                let expected = (l == a && *r == unit) || (*l == unit && r == a);
                if !expected || !c.is_one() {
                    return Err(Error::Presentation(format!(
                        "coproduct of {} has the edge term {} ⊗ {} with coefficient {}",
                        self.label_name(a),
                        self.label_name(l),
                        self.label_name(r),
                        c
                    )));
                }
            }
            out
        };
        let value = Arc::new(value);
        self.inner.antipode.write().unwrap().insert(a.clone(), value.clone());
        Ok(value)
    }

    pub fn antipode(&self, u: &GradedElement) -> Result<GradedElement> {
        self.check_element(u)?;
        let mut out = GradedElement::zero();
        for (a, c) in u.iter() {
            out.add_scaled(&*self.antipode_label(a)?, c);
        }
        Ok(out)
    }

    pub fn format(&self, u: &GradedElement) -> String {
        let mut terms: Vec<(String, RatFunc)> = u.iter().map(|(a, c)| (self.label_name(a), c.clone())).collect();
        terms.reverse();
        format_sum(&terms)
    }

    pub fn format_tensor(&self, s: &TensorElement) -> String {
        let mut terms: Vec<(String, RatFunc)> = s
            .iter()
            .map(|((a, b), c)| (format!("{}⊗{}", self.label_name(a), self.label_name(b)), c.clone()))
            .collect();
        terms.reverse();
        format_sum(&terms)
    }
}
