//! `Sym^⊗I` in the colored power-sum basis and its colored bilinear forms.

use std::sync::Arc;

use num_bigint::BigInt;

use super::cartan::CartanData;
use super::partition::{colored_sequences, ColoredSequence};
use crate::hopf::{BasisLabel, GradedElement, StructureConstants, TensorElement};
use crate::pairing::PairingForm;
use crate::scalars::{q_int_sym, RatFunc};
use crate::twisting::Degree;

/// Products concatenate colored sequences; every `p_{k,i}` is primitive.
#[derive(Debug)]
pub struct ColoredPowerSums {
    space: Arc<str>,
    prefix: String,
    colors: usize,
}

impl ColoredPowerSums {
    /// `primed` names labels `p'[k,i]` instead of `p[k,i]`.
    pub fn new(space: &str, colors: usize, primed: bool) -> Self {
        ColoredPowerSums {
            space: Arc::from(space),
            prefix: if primed { "p'".into() } else { "p".into() },
            colors,
        }
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn label(&self, seq: &ColoredSequence) -> BasisLabel {
        BasisLabel::new(&self.space, Degree::scalar(seq.size()), seq.to_key())
    }

    pub fn sequence(a: &BasisLabel) -> ColoredSequence {
        ColoredSequence::from_key(a.key())
    }
}

/// Every way to split a multiset of entries in two, with the multiplicity
/// `Π binom(m, s)` of each split.
pub(crate) fn splits(seq: &ColoredSequence) -> Vec<(ColoredSequence, ColoredSequence, BigInt)> {
    let groups = seq.grouped();
    let mut out = vec![(Vec::new(), Vec::new(), BigInt::from(1))];
    for (entry, m) in groups {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for (left, right, c) in &out {
            for s in 0..=m {
                let mut l: Vec<(u32, u32)> = left.clone();
                let mut r: Vec<(u32, u32)> = right.clone();
                l.extend(std::iter::repeat_n(entry, s));
                r.extend(std::iter::repeat_n(entry, m - s));
                next.push((l, r, c * binomial(m, s)));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r, c)| (ColoredSequence::new(l), ColoredSequence::new(r), c))
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

impl StructureConstants for ColoredPowerSums {
    fn space(&self) -> &Arc<str> {
        &self.space
    }

    fn rank(&self) -> usize {
        1
    }

    fn basis(&self, total: u32) -> Vec<BasisLabel> {
        colored_sequences(total, self.colors)
            .iter()
            .map(|s| self.label(s))
            .collect()
    }

    fn product(&self, a: &BasisLabel, b: &BasisLabel) -> GradedElement {
        GradedElement::basis(self.label(&Self::sequence(a).union(&Self::sequence(b))))
    }

    fn coproduct(&self, a: &BasisLabel) -> TensorElement {
        splits(&Self::sequence(a))
            .into_iter()
            .map(|(l, r, c)| ((self.label(&l), self.label(&r)), RatFunc::integer(c)))
            .collect()
    }

    fn label_name(&self, a: &BasisLabel) -> String {
        let seq = Self::sequence(a);
        if seq.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = seq
            .grouped()
            .into_iter()
            .map(|((k, c), m)| match m {
                1 => format!("{}[{k},{c}]", self.prefix),
                m => format!("{}[{k},{c}]^{m}", self.prefix),
            })
            .collect();
        parts.join("*")
    }
}

/// The scalar attached to a matched pair of entries `(k, i)`, `(k, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `[k⟨i,j⟩] [k] / k`.
    Quantum,
    /// `k ⟨i,j⟩`.
    Lattice,
}

/// `⟨p_𝝀, p_𝝁⟩ = Σ_σ Π_r δ f(prt_r, clr_r, clr_σ(r))`, evaluated block by
/// block over equal parts as permanents.
#[derive(Clone, Debug)]
pub struct ColoredForm {
    cartan: CartanData,
    kind: FormKind,
}

impl ColoredForm {
    pub fn new(cartan: CartanData, kind: FormKind) -> Self {
        ColoredForm { cartan, kind }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// The matched-entry factor for part `k` and colors `i`, `j`.
    pub fn factor(&self, k: u32, i: u32, j: u32) -> RatFunc {
        let kij = k as i64 * self.cartan.bracket(i, j);
        match self.kind {
            FormKind::Quantum => {
                let ratio = RatFunc::fraction(1, k).expect("k > 0");
                q_int_sym(kij) * q_int_sym(k as i64) * ratio
            }
            FormKind::Lattice => RatFunc::integer(kij),
        }
    }

    /// The factored evaluation on two colored sequences.
    pub fn pair_sequences(&self, lambda: &ColoredSequence, mu: &ColoredSequence) -> RatFunc {
        if lambda.len() != mu.len() || (0..lambda.len()).any(|r| lambda.prt(r) != mu.prt(r)) {
            return RatFunc::zero();
        }
        let mut out = RatFunc::one();
        let mut start = 0;
        while start < lambda.len() {
            let k = lambda.prt(start);
            let end = (start..lambda.len())
                .find(|&r| lambda.prt(r) != k)
                .unwrap_or(lambda.len());
            let block: Vec<Vec<RatFunc>> = (start..end)
                .map(|r| (start..end).map(|s| self.factor(k, lambda.clr(r), mu.clr(s))).collect())
                .collect();
            out = out * permanent(&block);
            if out.is_zero() {
                return out;
            }
            start = end;
        }
        out
    }
}

impl PairingForm for ColoredForm {
    fn value(&self, minus: &BasisLabel, plus: &BasisLabel) -> RatFunc {
        self.pair_sequences(&ColoredPowerSums::sequence(minus), &ColoredPowerSums::sequence(plus))
    }
}

/// Permanent by dynamic programming over column subsets.
pub(crate) fn permanent(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    let mut dp = vec![RatFunc::zero(); 1 << n];
    dp[0] = RatFunc::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) == 0 && !m[row][col].is_zero() {
                let add = &dp[mask] * &m[row][col];
                dp[mask | (1 << col)] += &add;
            }
        }
    }
    dp[(1 << n) - 1].clone()
}
