use rayon::prelude::*;

use super::{BasisLabel, GradedElement, HopfPresentation, TensorElement};
use crate::lincomb::LinComb;
use crate::report::Report;
use crate::scalars::RatFunc;

type Triple = LinComb<(BasisLabel, BasisLabel, BasisLabel)>;

impl HopfPresentation {
    /// Pairs `(a, b)` of labels with `|a| + |b| ≤ n`.
    pub(crate) fn label_pairs(&self, n: u32) -> Vec<(BasisLabel, BasisLabel)> {
        let labels = self.basis_upto(n);
        let mut out = Vec::new();
        for a in &labels {
            for b in &labels {
                if a.total() + b.total() <= n {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn label_triples(&self, n: u32) -> Vec<(BasisLabel, BasisLabel, BasisLabel)> {
        let mut out = Vec::new();
        for (a, b) in self.label_pairs(n) {
            for c in self.basis_upto(n - a.total() - b.total()) {
                out.push((a.clone(), b.clone(), c));
            }
        }
        out
    }

    fn comul_left(&self, s: &TensorElement) -> Triple {
        let mut out = Triple::zero();
        for ((l, r), c) in s.iter() {
            for ((l1, l2), d) in self.coproduct_label(l).iter() {
                out.add_term((l1.clone(), l2.clone(), r.clone()), c * d);
            }
        }
        out
    }

    fn comul_right(&self, s: &TensorElement) -> Triple {
        let mut out = Triple::zero();
        for ((l, r), c) in s.iter() {
            for ((r1, r2), d) in self.coproduct_label(r).iter() {
                out.add_term((l.clone(), r1.clone(), r2.clone()), c * d);
            }
        }
        out
    }

    fn first_unit_failure(&self, n: u32) -> Option<String> {
        let unit = self.unit();
        let zero = self.basis(0);
        if zero.as_slice() != [unit.clone()] {
            return Some(format!(
                "degree-0 piece has {} labels, expected the unit alone",
                zero.len()
            ));
        }
        let delta = self.coproduct_label(&unit);
        if *delta != TensorElement::basis((unit.clone(), unit.clone())) {
            return Some(format!("Δ(1) = {}", self.format_tensor(&delta)));
        }
        for a in self.basis_upto(n) {
            let single = GradedElement::basis(a.clone());
            if *self.product_labels(&unit, &a) != single || *self.product_labels(&a, &unit) != single {
                return Some(format!("1 is not a two-sided unit on {}", self.label_name(&a)));
            }
            if !a.is_unit() && !self.inner_counit(&a).is_zero() {
                return Some(format!("ε({}) ≠ 0", self.label_name(&a)));
            }
        }
        None
    }

    fn inner_counit(&self, a: &BasisLabel) -> RatFunc {
        self.counit(&GradedElement::basis(a.clone()))
    }

    /// Verifies the twisted bialgebra and antipode axioms on all basis
    /// tuples of total degree at most `n`; reports the first failure.
    pub fn check_bialgebra(&self, n: u32) -> Report {
        let name = self.name().to_string();
        let failure = self
            .first_unit_failure(n)
            .or_else(|| self.first_multiplicativity_failure(n))
            .or_else(|| self.first_associativity_failure(n))
            .or_else(|| self.first_star_associativity_failure(n))
            .or_else(|| self.first_coassociativity_failure(n))
            .or_else(|| self.first_counit_failure(n))
            .or_else(|| self.first_antipode_failure(n));
        Report::from_witness("check_bialgebra", &name, n, failure)
    }

    fn first_multiplicativity_failure(&self, n: u32) -> Option<String> {
        self.label_pairs(n).par_iter().find_map_first(|(a, b)| {
            let lhs = self.comul(&self.product_labels(a, b));
            let rhs = self.star(&self.coproduct_label(a), &self.coproduct_label(b));
            (lhs != rhs).then(|| {
                format!(
                    "Δ({}·{}) = {} but Δ({}) *_χ Δ({}) = {}",
                    self.label_name(a),
                    self.label_name(b),
                    self.format_tensor(&lhs),
                    self.label_name(a),
                    self.label_name(b),
                    self.format_tensor(&rhs)
                )
            })
        })
    }

    fn first_associativity_failure(&self, n: u32) -> Option<String> {
        self.label_triples(n).par_iter().find_map_first(|(a, b, c)| {
            let one = |l: &BasisLabel| GradedElement::basis(l.clone());
            let lhs = self.mul(&self.product_labels(a, b), &one(c));
            let rhs = self.mul(&one(a), &self.product_labels(b, c));
            (lhs != rhs).then(|| {
                format!(
                    "(ab)c ≠ a(bc) for a={}, b={}, c={}",
                    self.label_name(a),
                    self.label_name(b),
                    self.label_name(c)
                )
            })
        })
    }

    fn first_star_associativity_failure(&self, n: u32) -> Option<String> {
        let pairs = self.label_pairs(n);
        let mut triples = Vec::new();
        for s in &pairs {
            for t in &pairs {
                let used = s.0.total() + s.1.total() + t.0.total() + t.1.total();
                if used > n {
                    continue;
                }
                for u in &pairs {
                    if used + u.0.total() + u.1.total() <= n {
                        triples.push((s, t, u));
                    }
                }
            }
        }
        triples.par_iter().find_map_first(|(s, t, u)| {
            let basis = |p: &(BasisLabel, BasisLabel)| TensorElement::basis(p.clone());
            let lhs = self.star(&self.star(&basis(s), &basis(t)), &basis(u));
            let rhs = self.star(&basis(s), &self.star(&basis(t), &basis(u)));
            (lhs != rhs).then(|| {
                let name =
                    |p: &(BasisLabel, BasisLabel)| format!("{}⊗{}", self.label_name(&p.0), self.label_name(&p.1));
                format!("*_χ is not associative on {}, {}, {}", name(s), name(t), name(u))
            })
        })
    }

    fn first_coassociativity_failure(&self, n: u32) -> Option<String> {
        self.basis_upto(n).par_iter().find_map_first(|a| {
            let delta = self.coproduct_label(a);
            (self.comul_left(&delta) != self.comul_right(&delta))
                .then(|| format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ on {}", self.label_name(a)))
        })
    }

    fn first_counit_failure(&self, n: u32) -> Option<String> {
        self.basis_upto(n).par_iter().find_map_first(|a| {
            let delta = self.coproduct_label(a);
            let mut left = GradedElement::zero();
            let mut right = GradedElement::zero();
            for ((l, r), c) in delta.iter() {
                left.add_term(r.clone(), c * &self.inner_counit(l));
                right.add_term(l.clone(), c * &self.inner_counit(r));
            }
            let single = GradedElement::basis(a.clone());
            (left != single || right != single).then(|| format!("counit axiom fails on {}", self.label_name(a)))
        })
    }

    fn first_antipode_failure(&self, n: u32) -> Option<String> {
        self.basis_upto(n).par_iter().find_map_first(|a| {
            let delta = self.coproduct_label(a);
            let target = GradedElement::basis(self.unit()).scaled(&self.inner_counit(a));
            let mut left = GradedElement::zero();
            let mut right = GradedElement::zero();
            for ((l, r), c) in delta.iter() {
                let (sl, sr) = match (self.antipode_label(l), self.antipode_label(r)) {
                    (Ok(sl), Ok(sr)) => (sl, sr),
                    (Err(e), _) | (_, Err(e)) => return Some(e.to_string()),
                };
                left.add_scaled(&self.mul(&GradedElement::basis(l.clone()), &sr), c);
                right.add_scaled(&self.mul(&sl, &GradedElement::basis(r.clone())), c);
            }
            if left != target {
                return Some(format!("∇(id⊗S)Δ({}) = {}", self.label_name(a), self.format(&left)));
            }
            (right != target).then(|| format!("∇(S⊗id)Δ({}) = {}", self.label_name(a), self.format(&right)))
        })
    }

    /// `∇_β(∇_β ⊗ id) = ∇_β(id ⊗ ∇_β)` on basis triples; the first violation.
    pub fn associativity_witness(&self, n: u32) -> Option<String> {
        self.first_associativity_failure(n)
    }

    /// `|S(a)| = |a|` for all labels of total degree at most `n`.
    pub fn antipode_preserves_degree(&self, n: u32) -> bool {
        self.basis_upto(n).iter().all(|a| {
            self.antipode_label(a)
                .map(|s| s.keys().all(|l| l.degree() == a.degree()))
                .unwrap_or(false)
        })
    }
}
