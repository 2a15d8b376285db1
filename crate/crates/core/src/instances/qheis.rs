//! The quantum Heisenberg double of `Sym^⊗I` and its h-basis.

use std::sync::Arc;

use super::cartan::CartanData;
use super::partition::{check_color, partitions_of, ColoredSequence, MultiPartition, Partition};
use super::sym::{ColoredForm, ColoredPowerSums, FormKind};
use crate::double::{DoubleElement, Generator, GeneratorSet, HeisenbergDouble};
use crate::error::{Error, Result};
use crate::hopf::{BasisLabel, GradedElement, HopfPresentation};
use crate::pairing::TwistedPairing;
use crate::scalars::{q_int_sym, RatFunc};
use crate::twisting::{Degree, TwistingDatum};

/// `H⁺ = H⁻ = Sym^⊗I` with χ = ξ = γ = 0 and the given colored form.
pub fn colored_pairing(name: &str, cartan: &CartanData, kind: FormKind) -> Result<TwistedPairing> {
    let colors = cartan.colors();
    let plus = HopfPresentation::new(
        name,
        Arc::new(ColoredPowerSums::new("p", colors, false)),
        TwistingDatum::zero(1),
    )?;
    let minus = HopfPresentation::new(
        format!("{name}-dual"),
        Arc::new(ColoredPowerSums::new("p'", colors, true)),
        TwistingDatum::zero(1),
    )?;
    let form = ColoredForm::new(cartan.clone(), kind);
    TwistedPairing::new(minus, plus, TwistingDatum::zero(1), Arc::new(form))
}

/// The label `p_𝝀` of a colored sequence inside `presentation`.
pub fn sequence_label(presentation: &HopfPresentation, seq: &ColoredSequence) -> BasisLabel {
    BasisLabel::new(
        &Arc::from(presentation.space()),
        Degree::scalar(seq.size()),
        seq.to_key(),
    )
}

/// `p_{n,i}`; `n ≥ 1`.
pub fn power_sum(presentation: &HopfPresentation, colors: usize, n: u32, i: u32) -> Result<GradedElement> {
    check_color(colors, i)?;
    if n == 0 {
        return Err(Error::OutOfRange("power sums start at p[1,i]".into()));
    }
    let seq = ColoredSequence::new(vec![(n, i)]);
    Ok(GradedElement::basis(sequence_label(presentation, &seq)))
}

/// `h_{n,i} = Σ_{λ ⊢ n} p_{λ,i} / Z_λ`; zero for `n < 0`.
pub fn complete(presentation: &HopfPresentation, colors: usize, n: i64, i: u32) -> Result<GradedElement> {
    check_color(colors, i)?;
    if n < 0 {
        return Ok(GradedElement::zero());
    }
    let mut out = GradedElement::zero();
    for lambda in partitions_of(n as u32) {
        let seq = MultiPartition::single(colors, i, lambda.clone())?.colored_sequence();
        let coef = lambda.z_quantum().inverse()?;
        out.add_term(sequence_label(presentation, &seq), coef);
    }
    Ok(out)
}

/// The quantum Heisenberg double for a symmetric matrix `A`.
#[derive(Clone, Debug)]
pub struct QHeis {
    pub cartan: CartanData,
    pub pairing: TwistedPairing,
    pub double: HeisenbergDouble,
}

/// Refuses with the offending `k` when some `([k⟨i,j⟩])`, `k ≤ working_degree`,
/// is singular.
pub fn build_qheis(cartan: &CartanData, working_degree: u32) -> Result<QHeis> {
    if let Some(k) = cartan.first_singular(working_degree) {
        return Err(Error::SingularForm { k });
    }
    let pairing = colored_pairing("qheis", cartan, FormKind::Quantum)?;
    let double = HeisenbergDouble::new(pairing.clone())?;
    Ok(QHeis {
        cartan: cartan.clone(),
        pairing,
        double,
    })
}

/// `⟨p_𝝀, p_𝝁⟩` by the factored formula.
pub fn qheis_pair(cartan: &CartanData, lambda: &MultiPartition, mu: &MultiPartition) -> RatFunc {
    ColoredForm::new(cartan.clone(), FormKind::Quantum)
        .pair_sequences(&lambda.colored_sequence(), &mu.colored_sequence())
}

/// The derivation `φ_{k,i}` with `φ_{k,i}(p_{n,j}) = δ_{kn} [k⟨i,j⟩] [k]/k`.
pub fn phi_derivation(cartan: &CartanData, k: u32, i: u32, u: &GradedElement) -> Result<GradedElement> {
    if k == 0 {
        return Err(Error::OutOfRange("φ_{k,i} needs k >= 1".into()));
    }
    check_color(cartan.colors(), i)?;
    let form = ColoredForm::new(cartan.clone(), FormKind::Quantum);
    let mut out = GradedElement::zero();
    for (label, c) in u.iter() {
        let seq = ColoredPowerSums::sequence(label);
        for ((part, j), m) in seq.grouped() {
            if part != k {
                continue;
            }
            let rest = seq.without((part, j)).expect("entry present");
            let target = BasisLabel::new(&Arc::from(label.space()), Degree::scalar(rest.size()), rest.to_key());
            let coef = form.factor(k, i, j) * RatFunc::integer(m as i64) * c;
            out.add_term(target, coef);
        }
    }
    Ok(out)
}

impl QHeis {
    pub fn colors(&self) -> usize {
        self.cartan.colors()
    }

    pub fn plus(&self) -> &HopfPresentation {
        self.pairing.plus()
    }

    pub fn minus(&self) -> &HopfPresentation {
        self.pairing.minus()
    }

    pub fn p(&self, n: u32, i: u32) -> Result<GradedElement> {
        power_sum(self.plus(), self.colors(), n, i)
    }

    pub fn p_prime(&self, n: u32, i: u32) -> Result<GradedElement> {
        power_sum(self.minus(), self.colors(), n, i)
    }

    pub fn p_lambda(&self, lambda: &MultiPartition) -> GradedElement {
        GradedElement::basis(sequence_label(self.plus(), &lambda.colored_sequence()))
    }

    pub fn p_lambda_prime(&self, lambda: &MultiPartition) -> GradedElement {
        GradedElement::basis(sequence_label(self.minus(), &lambda.colored_sequence()))
    }

    pub fn h(&self, n: i64, i: u32) -> Result<GradedElement> {
        complete(self.plus(), self.colors(), n, i)
    }

    pub fn h_prime(&self, n: i64, i: u32) -> Result<GradedElement> {
        complete(self.minus(), self.colors(), n, i)
    }

    /// `φ_{k,i}(u)` for `u ∈ H⁺`.
    pub fn phi(&self, k: u32, i: u32, u: &GradedElement) -> Result<GradedElement> {
        phi_derivation(&self.cartan, k, i, u)
    }

    /// Closed form of `h_{k,i}^*(h_{n,j})` for `⟨i,j⟩ ∈ {2, −1, 0}`:
    /// `[k+1] h_{n−k,j}`; `h_{n−k,j}` for `k ≤ 1`, else 0; `h_{n,j}` for
    /// `k = 0`, else 0. `None` for other values of `⟨i,j⟩`.
    pub fn h_adjoint(&self, k: u32, i: u32, n: u32, j: u32) -> Result<Option<GradedElement>> {
        check_color(self.colors(), i)?;
        check_color(self.colors(), j)?;
        let (k, n) = (k as i64, n as i64);
        let shifted = |by: i64| self.h(n - by, j);
        Ok(match self.cartan.bracket(i, j) {
            2 => Some(shifted(k)?.scaled(&q_int_sym(k + 1))),
            -1 if k <= 1 => Some(shifted(k)?),
            -1 => Some(GradedElement::zero()),
            0 if k == 0 => Some(shifted(0)?),
            0 => Some(GradedElement::zero()),
            _ => None,
        })
    }

    pub fn generators(&self) -> ColoredGenerators {
        ColoredGenerators::new(self.pairing.clone(), self.colors(), true)
    }
}

/// `p[n,i]`, `p'[n,i]` and, when enabled, `h[n,i]`, `h'[n,i]`.
#[derive(Clone, Debug)]
pub struct ColoredGenerators {
    pairing: TwistedPairing,
    colors: usize,
    complete: bool,
}

impl ColoredGenerators {
    pub fn new(pairing: TwistedPairing, colors: usize, complete: bool) -> Self {
        ColoredGenerators {
            pairing,
            colors,
            complete,
        }
    }
}

impl GeneratorSet for ColoredGenerators {
    fn resolve(&self, g: &Generator) -> Result<DoubleElement> {
        let unknown = || Error::UnknownGenerator(g.to_string());
        let &[n, i] = g.indices.as_slice() else {
            return Err(unknown());
        };
        let i = u32::try_from(i).map_err(|_| unknown())?;
        check_color(self.colors, i).map_err(|_| unknown())?;
        let (plus, minus) = (self.pairing.plus(), self.pairing.minus());
        let side = if g.primed { minus } else { plus };
        let element = match g.name.as_str() {
            "p" => {
                let n = u32::try_from(n).ok().filter(|&n| n > 0).ok_or_else(unknown)?;
                power_sum(side, self.colors, n, i)?
            }
            "h" if self.complete => complete(side, self.colors, n, i)?,
            _ => return Err(unknown()),
        };
        Ok(if g.primed {
            DoubleElement::from_parts(&plus.one(), &element)
        } else {
            DoubleElement::from_parts(&element, &minus.one())
        })
    }
}

/// `p_{(n),i}` as a single-part partition in color `i`.
pub fn single_part(colors: usize, n: u32, i: u32) -> Result<MultiPartition> {
    MultiPartition::single(colors, i, Partition::new(vec![n])?)
}
