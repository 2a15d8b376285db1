//! The twisted Heisenberg double `H⁺ # H⁻`, its Fock space and checks.

mod fock;
mod verify;
mod word;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::hopf::{format_sum, BasisLabel, GradedElement, HopfPresentation};
use crate::lincomb::LinComb;
use crate::pairing::TwistedPairing;
use crate::scalars::RatFunc;
use crate::twisting::{compatibility_check, dual_twisting, GroupDegree, TwistingDatum};

pub use fock::FockMatrix;
pub use word::{Generator, GeneratorSet, GeneratorWord, WordToken};

/// `Σ c · (a # x)` with `a ∈ H⁺`, `x ∈ H⁻` basis labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleElement(pub LinComb<(BasisLabel, BasisLabel)>);

impl DoubleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pair(a: BasisLabel, x: BasisLabel) -> Self {
        DoubleElement(LinComb::basis((a, x)))
    }

    /// `u ⊗ v` read as `Σ u_a v_x (a # x)`.
    pub fn from_parts(u: &GradedElement, v: &GradedElement) -> Self {
        let mut out = LinComb::zero();
        for (a, c) in u.iter() {
            for (x, d) in v.iter() {
                out.add_term((a.clone(), x.clone()), c * d);
            }
        }
        DoubleElement(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(BasisLabel, BasisLabel), &RatFunc)> + '_ {
        self.0.iter()
    }

    pub fn coefficient(&self, a: &BasisLabel, x: &BasisLabel) -> RatFunc {
        self.0.coefficient(&(a.clone(), x.clone()))
    }

    pub fn scaled(&self, c: &RatFunc) -> Self {
        DoubleElement(self.0.scaled(c))
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        self.0.add_scaled(&other.0, c);
    }

    /// The G(Λ)-degree `|a| − |x|` of every term, deduplicated.
    pub fn degrees(&self) -> Vec<GroupDegree> {
        let mut out: Vec<GroupDegree> = self
            .0
            .keys()
            .map(|(a, x)| &a.degree().signed() - &x.degree().signed())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Every coefficient lies in ℤ[q, q⁻¹].
    pub fn is_laurent(&self) -> bool {
        self.0.all_coefficients(RatFunc::is_laurent)
    }

    /// The `H⁺` part when every term has `x = 1`.
    pub fn as_plus(&self) -> Option<GradedElement> {
        self.0
            .iter()
            .map(|((a, x), c)| x.is_unit().then(|| (a.clone(), c.clone())))
            .collect()
    }

    /// The `H⁻` part when every term has `a = 1`.
    pub fn as_minus(&self) -> Option<GradedElement> {
        self.0
            .iter()
            .map(|((a, x), c)| a.is_unit().then(|| (x.clone(), c.clone())))
            .collect()
    }
}

impl std::ops::Add<&DoubleElement> for &DoubleElement {
    type Output = DoubleElement;

    fn add(self, rhs: &DoubleElement) -> DoubleElement {
        DoubleElement(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub<&DoubleElement> for &DoubleElement {
    type Output = DoubleElement;

    fn sub(self, rhs: &DoubleElement) -> DoubleElement {
        DoubleElement(&self.0 - &rhs.0)
    }
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

/// The smash product on `H⁺ ⊗ H⁻` given by a pairing, with no perfectness
/// or compatibility requirement of its own.
pub struct SmashAlgebra {
    pairing: TwistedPairing,
    xi: TwistingDatum,
    actions: Cache<(BasisLabel, BasisLabel), GradedElement>,
    commutators: Cache<(BasisLabel, BasisLabel), DoubleElement>,
}

impl fmt::Debug for SmashAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmashAlgebra")
            .field("pairing", &self.pairing)
            .field("xi", &self.xi)
            .finish()
    }
}

impl SmashAlgebra {
    pub fn new(pairing: TwistedPairing) -> Result<Self> {
        let xi = dual_twisting(pairing.plus().twisting(), pairing.gamma())?;
        Ok(SmashAlgebra {
            pairing,
            xi,
            actions: Default::default(),
            commutators: Default::default(),
        })
    }

    pub fn pairing(&self) -> &TwistedPairing {
        &self.pairing
    }

    pub fn plus(&self) -> &HopfPresentation {
        self.pairing.plus()
    }

    pub fn minus(&self) -> &HopfPresentation {
        self.pairing.minus()
    }

    /// `ξ` from the dual-twisting formula.
    pub fn xi(&self) -> &TwistingDatum {
        &self.xi
    }

    pub fn one(&self) -> DoubleElement {
        DoubleElement::pair(self.plus().unit(), self.minus().unit())
    }

    pub fn embed_plus(&self, u: &GradedElement) -> Result<DoubleElement> {
        self.plus().check_element(u)?;
        Ok(DoubleElement::from_parts(u, &self.minus().one()))
    }

    pub fn embed_minus(&self, x: &GradedElement) -> Result<DoubleElement> {
        self.minus().check_element(x)?;
        Ok(DoubleElement::from_parts(&self.plus().one(), x))
    }

    pub fn scalar(&self, c: RatFunc) -> DoubleElement {
        self.one().scaled(&c)
    }

    /// `x^{R*}(a) = Σ q^{γ′(|a₁|,|a₂|)} ⟨x, a₂⟩ a₁` on labels.
    pub fn action_label(&self, x: &BasisLabel, a: &BasisLabel) -> Arc<GradedElement> {
        let key = (x.clone(), a.clone());
        if let Some(v) = self.actions.read().unwrap().get(&key) {
            return v.clone();
        }
        let value = if x.is_unit() {
            GradedElement::basis(a.clone())
        } else if x.total() > a.total() {
            GradedElement::zero()
        } else {
            let gamma = &self.pairing.gamma().prime;
            let mut out = GradedElement::zero();
            for ((a1, a2), c) in self.plus().coproduct_label(a).iter() {
                if a2.degree() != x.degree() {
                    continue;
                }
                let v = self.pairing.pair_labels(x, a2);
                if v.is_zero() {
                    continue;
                }
                let e = gamma.eval_deg(a1.degree(), a2.degree());
                out.add_term(a1.clone(), (&v * c).mul_q_pow(e));
            }
            out
        };
        let value = Arc::new(value);
        self.actions.write().unwrap().insert(key, value.clone());
        value
    }

    pub(crate) fn act(&self, x: &GradedElement, a: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (xl, c) in x.iter() {
            for (al, d) in a.iter() {
                out.add_scaled(&self.action_label(xl, al), &(c * d));
            }
        }
        out
    }

    /// The left regular action of `H⁻` on `H⁺`.
    pub fn left_regular_action(&self, x: &GradedElement, a: &GradedElement) -> Result<GradedElement> {
        self.minus().check_element(x)?;
        self.plus().check_element(a)?;
        Ok(self.act(x, a))
    }

    /// `(1 # x)(b # 1) = Σ_{(x)} q^{γ″(|b|,|x₂|) + ξ″(|b|−|x₁|,|x₂|)} x₁^{R*}(b) # x₂`.
    pub fn commute_labels(&self, x: &BasisLabel, b: &BasisLabel) -> Arc<DoubleElement> {
        let key = (x.clone(), b.clone());
        if let Some(v) = self.commutators.read().unwrap().get(&key) {
            return v.clone();
        }
        let gamma2 = &self.pairing.gamma().doubleprime;
        let xi2 = &self.xi.doubleprime;
        let bdeg = b.degree().signed();
        let mut out = LinComb::zero();
        for ((x1, x2), c) in self.minus().coproduct_label(x).iter() {
            let acted = self.action_label(x1, b);
            if acted.is_zero() {
                continue;
            }
            let x2deg = x2.degree().signed();
            let e = gamma2.eval(&bdeg, &x2deg) + xi2.eval(&(&bdeg - &x1.degree().signed()), &x2deg);
            let coef = c.mul_q_pow(e);
            for (p, d) in acted.iter() {
                out.add_term((p.clone(), x2.clone()), d * &coef);
            }
        }
        let value = Arc::new(DoubleElement(out));
        self.commutators.write().unwrap().insert(key, value.clone());
        value
    }

    pub(crate) fn mul(&self, u: &DoubleElement, v: &DoubleElement) -> DoubleElement {
        let (plus, minus) = (self.plus(), self.minus());
        let mut out = LinComb::zero();
        for ((a, x), c) in u.iter() {
            for ((b, y), d) in v.iter() {
                let cd = c * d;
                for ((p, m), e) in self.commute_labels(x, b).iter() {
                    let left = plus.product_labels(a, p);
                    let right = minus.product_labels(m, y);
                    let coef = e * &cd;
                    for (l, f) in left.iter() {
                        let lf = f * &coef;
                        for (r, g) in right.iter() {
                            out.add_term((l.clone(), r.clone()), g * &lf);
                        }
                    }
                }
            }
        }
        DoubleElement(out)
    }

    fn check(&self, u: &DoubleElement) -> Result<()> {
        u.0.keys().try_for_each(|(a, x)| {
            self.plus().check_label(a)?;
            self.minus().check_label(x)
        })
    }

    pub fn smash_multiply(&self, u: &DoubleElement, v: &DoubleElement) -> Result<DoubleElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    /// The `#` normal form of a product of generator powers, folded left to right.
    pub fn normal_order(&self, gens: &dyn GeneratorSet, word: &GeneratorWord) -> Result<DoubleElement> {
        let mut acc = self.one();
        for token in &word.tokens {
            let g = gens.resolve(&token.generator)?;
            self.check(&g)?;
            for _ in 0..token.exponent {
                acc = self.mul(&acc, &g);
            }
        }
        Ok(acc)
    }

    /// Terms by descending total degree `|a| + |x|`, then label order.
    pub fn format(&self, u: &DoubleElement) -> String {
        let mut terms: Vec<_> = u.iter().collect();
        terms.sort_by(|((a, x), _), ((b, y), _)| {
            (b.total() + y.total())
                .cmp(&(a.total() + x.total()))
                .then_with(|| (a, x).cmp(&(b, y)))
        });
        let named: Vec<(String, RatFunc)> = terms
            .into_iter()
            .map(|((a, x), c)| {
                let name = match (a.is_unit(), x.is_unit()) {
                    (true, true) => "1".to_string(),
                    (false, true) => self.plus().label_name(a),
                    (true, false) => self.minus().label_name(x),
                    (false, false) => {
                        format!("{}#{}", self.plus().label_name(a), self.minus().label_name(x))
                    }
                };
                (name, c.clone())
            })
            .collect();
        format_sum(&named)
    }

    /// Basis elements `a # x` with `|a| + |x| ≤ n`.
    pub fn basis_upto(&self, n: u32) -> Vec<(BasisLabel, BasisLabel)> {
        let plus = self.plus().basis_upto(n);
        let minus = self.minus().basis_upto(n);
        let mut out = Vec::new();
        for a in &plus {
            for x in &minus {
                if a.total() + x.total() <= n {
                    out.push((a.clone(), x.clone()));
                }
            }
        }
        out
    }
}

/// A compatible dual pair with its Heisenberg double.
#[derive(Clone, Debug)]
pub struct HeisenbergDouble {
    engine: Arc<SmashAlgebra>,
}

impl HeisenbergDouble {
    /// Refuses dual pairs that fail `χ′ = −γ′ᵀ`.
    pub fn new(pairing: TwistedPairing) -> Result<Self> {
        if !compatibility_check(pairing.plus().twisting(), pairing.gamma()) {
            return Err(Error::Incompatible);
        }
        Ok(HeisenbergDouble {
            engine: Arc::new(SmashAlgebra::new(pairing)?),
        })
    }

    pub fn engine(&self) -> &SmashAlgebra {
        &self.engine
    }

    pub fn pairing(&self) -> &TwistedPairing {
        self.engine.pairing()
    }

    pub fn name(&self) -> &str {
        self.engine.pairing().name()
    }
}

impl std::ops::Deref for HeisenbergDouble {
    type Target = SmashAlgebra;

    fn deref(&self) -> &SmashAlgebra {
        &self.engine
    }
}

/// Relations of a smash product whose pairing is not perfect; no double.
#[derive(Clone, Debug)]
pub struct RelationContext {
    engine: Arc<SmashAlgebra>,
    reason: String,
}

impl RelationContext {
    pub fn new(pairing: TwistedPairing, reason: impl Into<String>) -> Result<Self> {
        Ok(RelationContext {
            engine: Arc::new(SmashAlgebra::new(pairing)?),
            reason: reason.into(),
        })
    }

    pub fn reason(&self) -> &str {
        &self.reason
    }
}

#[derive(Clone, Debug)]
pub enum DoubleContext {
    Double(HeisenbergDouble),
    PresentationOnly(RelationContext),
}

impl DoubleContext {
    pub fn engine(&self) -> &SmashAlgebra {
        match self {
            DoubleContext::Double(d) => &d.engine,
            DoubleContext::PresentationOnly(r) => &r.engine,
        }
    }

    pub fn as_double(&self) -> Result<&HeisenbergDouble> {
        match self {
            DoubleContext::Double(d) => Ok(d),
            DoubleContext::PresentationOnly(r) => Err(Error::NoDouble(r.reason.clone())),
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, DoubleContext::Double(_))
    }
}
