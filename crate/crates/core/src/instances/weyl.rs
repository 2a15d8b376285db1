//! The quantum Weyl algebra: `𝕜[x]` paired with `𝕜[∂]`.

use std::sync::Arc;

use crate::double::{DoubleElement, Generator, GeneratorSet, HeisenbergDouble};
use crate::error::{Error, Result};
use crate::hopf::{BasisLabel, GradedElement, HopfPresentation, StructureConstants, TensorElement};
use crate::pairing::{PairingForm, TwistedPairing};
use crate::scalars::{q_binomial, q_factorial, RatFunc};
use crate::twisting::{BiadditiveMap, Degree, TwistingDatum};

/// `𝕜[t]` with `Δ(tⁿ) = Σ_k [n k]_{q^±1} t^k ⊗ t^{n−k}`.
#[derive(Debug)]
pub struct QuantumPolynomial {
    space: Arc<str>,
    inverted: bool,
}

impl QuantumPolynomial {
    /// `inverted` selects Gaussian binomials at `q⁻¹`.
    pub fn new(variable: &str, inverted: bool) -> Self {
        QuantumPolynomial {
            space: Arc::from(variable),
            inverted,
        }
    }

    pub fn power(&self, n: u32) -> BasisLabel {
        let key = if n == 0 { Vec::new() } else { vec![n] };
        BasisLabel::new(&self.space, Degree::scalar(n), key)
    }

    fn binomial(&self, n: u32, k: u32) -> RatFunc {
        let b = q_binomial(n as i64, k as i64).expect("0 <= k <= n");
        if self.inverted {
            b.substitute_inverse()
        } else {
            b
        }
    }
}

impl StructureConstants for QuantumPolynomial {
    fn space(&self) -> &Arc<str> {
        &self.space
    }

    fn rank(&self) -> usize {
        1
    }

    fn basis(&self, total: u32) -> Vec<BasisLabel> {
        vec![self.power(total)]
    }

    fn product(&self, a: &BasisLabel, b: &BasisLabel) -> GradedElement {
        GradedElement::basis(self.power(a.total() + b.total()))
    }

    fn coproduct(&self, a: &BasisLabel) -> TensorElement {
        let n = a.total();
        (0..=n)
            .map(|k| ((self.power(k), self.power(n - k)), self.binomial(n, k)))
            .collect()
    }

    fn label_name(&self, a: &BasisLabel) -> String {
        match a.total() {
            0 => "1".into(),
            1 => self.space.to_string(),
            n => format!("{}^{n}", self.space),
        }
    }
}

/// `⟨∂ᵐ, xⁿ⟩ = δ_{mn} [n]_q!`.
#[derive(Debug)]
pub struct WeylForm;

impl PairingForm for WeylForm {
    fn value(&self, minus: &BasisLabel, plus: &BasisLabel) -> RatFunc {
        if minus.total() != plus.total() {
            return RatFunc::zero();
        }
        q_factorial(plus.total() as i64).expect("nonnegative degree")
    }
}

/// The compatible dual pair `(𝕜[x], 𝕜[∂])` and its double.
#[derive(Clone, Debug)]
pub struct Weyl {
    pub pairing: TwistedPairing,
    pub double: HeisenbergDouble,
}

/// `χ = (0, ζ)` on `𝕜[x]`, `ξ = (−ζ, 0)` on `𝕜[∂]`, `γ = (0, ζ)`.
pub fn weyl_pairing() -> Result<TwistedPairing> {
    let zeta = BiadditiveMap::scalar(1);
    let zero = BiadditiveMap::scalar(0);
    let plus = HopfPresentation::new(
        "weyl",
        Arc::new(QuantumPolynomial::new("x", false)),
        TwistingDatum::new(zero.clone(), zeta.clone())?,
    )?;
    let minus = HopfPresentation::new(
        "weyl-dual",
        Arc::new(QuantumPolynomial::new("d", true)),
        TwistingDatum::new(-&zeta, zero.clone())?,
    )?;
    TwistedPairing::new(minus, plus, TwistingDatum::new(zero, zeta)?, Arc::new(WeylForm))
}

pub fn build_weyl() -> Result<Weyl> {
    let pairing = weyl_pairing()?;
    let double = HeisenbergDouble::new(pairing.clone())?;
    Ok(Weyl { pairing, double })
}

/// `x` and `d` (for `∂`); resolves against the pair's own presentations.
#[derive(Clone, Debug)]
pub struct WeylGenerators {
    pairing: TwistedPairing,
}

impl WeylGenerators {
    pub fn new(pairing: TwistedPairing) -> Self {
        WeylGenerators { pairing }
    }
}

impl GeneratorSet for WeylGenerators {
    fn resolve(&self, g: &Generator) -> Result<DoubleElement> {
        if g.primed || !g.indices.is_empty() {
            return Err(Error::UnknownGenerator(g.to_string()));
        }
        let degree_one = |p: &HopfPresentation| p.basis(1)[0].clone();
        match g.name.as_str() {
            "x" => Ok(DoubleElement::pair(
                degree_one(self.pairing.plus()),
                self.pairing.minus().unit(),
            )),
            "d" => Ok(DoubleElement::pair(
                self.pairing.plus().unit(),
                degree_one(self.pairing.minus()),
            )),
            _ => Err(Error::UnknownGenerator(g.to_string())),
        }
    }
}
