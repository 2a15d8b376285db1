//! Graded connected twisted bialgebras given by structure constants.

mod check;
mod presentation;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::lincomb::LinComb;
use crate::scalars::RatFunc;
use crate::twisting::Degree;

pub use presentation::HopfPresentation;

/// A basis vector of one graded piece of a presented algebra.
///
/// Labels are ordered by total degree, then degree, then the instance key.
#[derive(Clone)]
pub struct BasisLabel(Arc<LabelData>);

#[derive(PartialEq, Eq, Hash)]
struct LabelData {
    space: Arc<str>,
    degree: Degree,
    key: Vec<u32>,
}

impl BasisLabel {
    pub fn new(space: &Arc<str>, degree: Degree, key: Vec<u32>) -> Self {
        BasisLabel(Arc::new(LabelData {
            space: space.clone(),
            degree,
            key,
        }))
    }

    pub fn space(&self) -> &str {
        &self.0.space
    }

    pub fn degree(&self) -> &Degree {
        &self.0.degree
    }

    pub fn total(&self) -> u32 {
        self.0.degree.total()
    }

    pub fn key(&self) -> &[u32] {
        &self.0.key
    }

    pub fn is_unit(&self) -> bool {
        self.0.degree.is_zero()
    }
}

impl PartialEq for BasisLabel {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for BasisLabel {}

impl Hash for BasisLabel {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Ord for BasisLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        let (a, b) = (&self.0, &other.0);
        a.degree
            .total()
            .cmp(&b.degree.total())
            .then_with(|| a.degree.cmp(&b.degree))
            .then_with(|| a.key.cmp(&b.key))
            .then_with(|| a.space.cmp(&b.space))
    }
}

impl PartialOrd for BasisLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}@{}", self.0.space, self.0.key, self.0.degree)
    }
}

pub type GradedElement = LinComb<BasisLabel>;
pub type TensorElement = LinComb<(BasisLabel, BasisLabel)>;

/// `u ⊗ v`.
pub fn tensor(u: &GradedElement, v: &GradedElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (a, c) in u.iter() {
        for (b, d) in v.iter() {
            out.add_term((a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// The homogeneous component of total degree `n`.
pub fn component(u: &GradedElement, n: u32) -> GradedElement {
    u.filtered(|l| l.total() == n)
}

/// Structure constants of a Λ-graded connected bialgebra on a fixed basis.
///
/// `basis(0)` must be exactly the unit label; products and coproducts must
/// respect the grading.
pub trait StructureConstants: Send + Sync + fmt::Debug {
    fn space(&self) -> &Arc<str>;
    fn rank(&self) -> usize;
    /// All labels of the given total degree, in label order.
    fn basis(&self, total: u32) -> Vec<BasisLabel>;
    fn product(&self, a: &BasisLabel, b: &BasisLabel) -> GradedElement;
    fn coproduct(&self, a: &BasisLabel) -> TensorElement;
    fn label_name(&self, a: &BasisLabel) -> String;

    fn unit(&self) -> BasisLabel {
        BasisLabel::new(self.space(), Degree::zero(self.rank()), Vec::new())
    }

    fn counit(&self, a: &BasisLabel) -> RatFunc {
        if a.is_unit() {
            RatFunc::one()
        } else {
            RatFunc::zero()
        }
    }
}

/// Human-readable sum `c1*name1 + c2*name2 ...`; the unit's name is `"1"`.
pub(crate) fn format_sum(terms: &[(String, RatFunc)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    let several = terms.len() > 1;
    for (i, (name, c)) in terms.iter().enumerate() {
        let (neg, mag) = split_sign(c);
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let is_unit = name == "1";
        if is_unit {
            if mag.needs_parens() && several {
                out.push_str(&format!("({mag})"));
            } else {
                out.push_str(&mag.to_string());
            }
        } else if mag.is_one() {
            out.push_str(name);
        } else if mag.needs_parens() {
            out.push_str(&format!("({mag})*{name}"));
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    out
}

/// Splits off a leading minus sign from single-term Laurent coefficients.
fn split_sign(c: &RatFunc) -> (bool, RatFunc) {
    if let Some(p) = c.as_laurent() {
        let mut terms = p.terms();
        if let (Some((_, k)), None) = (terms.next(), terms.next()) {
            if k.sign() == num_bigint::Sign::Minus {
                return (true, -c);
            }
        }
    }
    (false, c.clone())
}
