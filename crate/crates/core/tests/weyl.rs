use twisted_double::double::{DoubleElement, HeisenbergDouble};
use twisted_double::expr::parse_expression;
use twisted_double::hopf::GradedElement;
use twisted_double::instances::{build_weyl, Weyl, WeylGenerators};
use twisted_double::scalars::{q_factorial, q_int, RatFunc};
use twisted_double::twisting::{compatibility_check, dual_twisting, BiadditiveMap, GroupDegree, TwistingDatum};
use twisted_double::Error;

fn weyl() -> Weyl {
    build_weyl().unwrap()
}

fn s(text: &str) -> RatFunc {
    text.parse().unwrap()
}

fn x_pow(w: &Weyl, n: u32) -> GradedElement {
    GradedElement::basis(w.pairing.plus().basis(n)[0].clone())
}

fn d_pow(w: &Weyl, n: u32) -> GradedElement {
    GradedElement::basis(w.pairing.minus().basis(n)[0].clone())
}

fn eval(w: &Weyl, src: &str) -> DoubleElement {
    let gens = WeylGenerators::new(w.pairing.clone());
    parse_expression(src)
        .unwrap()
        .evaluate(w.double.engine(), &gens)
        .unwrap()
}

#[test]
fn both_presentations_are_twisted_bialgebras() {
    let w = weyl();
    let r = w.pairing.plus().check_bialgebra(8);
    assert!(r.passed(), "{r}");
    let r = w.pairing.minus().check_bialgebra(8);
    assert!(r.passed(), "{r}");
}

#[test]
fn coproduct_of_x_squared() {
    let w = weyl();
    let delta = w.pairing.plus().comultiply(&x_pow(&w, 2)).unwrap();
    assert_eq!(w.pairing.plus().format_tensor(&delta), "x^2⊗1 + (1 + q)*x⊗x + 1⊗x^2");
}

#[test]
fn antipode_values() {
    let w = weyl();
    let plus = w.pairing.plus();
    // S(x) = -x and S(x²) = -x² - (1+q) x S(x) = q x².
    assert_eq!(plus.antipode(&x_pow(&w, 1)).unwrap(), x_pow(&w, 1).scaled(&s("-1")));
    assert_eq!(plus.antipode(&x_pow(&w, 2)).unwrap(), x_pow(&w, 2).scaled(&s("q")));
    assert!(plus.antipode_preserves_degree(6));
}

#[test]
fn pairing_values() {
    let w = weyl();
    let p = &w.pairing;
    assert_eq!(p.pair(&d_pow(&w, 2), &x_pow(&w, 2)).unwrap(), s("1 + q"));
    assert_eq!(p.pair(&d_pow(&w, 3), &x_pow(&w, 3)).unwrap(), q_factorial(3).unwrap());
    assert!(p.pair(&d_pow(&w, 0), &x_pow(&w, 0)).unwrap().is_one());
    assert!(p.pair(&d_pow(&w, 2), &x_pow(&w, 3)).unwrap().is_zero());
    assert!(matches!(
        p.pair(&x_pow(&w, 1), &x_pow(&w, 1)),
        Err(Error::ForeignLabel { .. })
    ));
}

#[test]
fn pairing_axioms_hold_for_the_declared_gamma() {
    let w = weyl();
    let r = w.pairing.check_pairing_axioms(6);
    assert!(r.passed(), "{r}");
    assert!(w.pairing.check_pairing_axioms(0).passed());
}

#[test]
fn pairing_axioms_fail_with_gamma_zero() {
    let w = weyl();
    let p = &w.pairing;
    let wrong = p
        .redeclared(p.minus().clone(), p.plus().clone(), TwistingDatum::zero(1))
        .unwrap();
    let r = wrong.check_pairing_axioms(2);
    assert!(!r.passed());
    let witness = r.witness.unwrap();
    assert!(witness.contains("⟨d^2, x·x⟩"), "{witness}");
}

#[test]
fn dual_twisting_and_compatibility() {
    let w = weyl();
    let zeta = BiadditiveMap::scalar(1);
    let chi = TwistingDatum::new(BiadditiveMap::scalar(0), zeta.clone()).unwrap();
    let xi = dual_twisting(&chi, &chi).unwrap();
    assert_eq!(xi, TwistingDatum::new(-&zeta, BiadditiveMap::scalar(0)).unwrap());
    assert_eq!(&xi, w.pairing.minus().twisting());
    assert!(compatibility_check(w.pairing.plus().twisting(), w.pairing.gamma()));
    let r = w.pairing.dual_presentation_check(6);
    assert!(r.passed(), "{r}");
}

#[test]
fn redeclared_dual_twisting_is_reported() {
    let w = weyl();
    let p = &w.pairing;
    let minus = p.minus().with_twisting(TwistingDatum::zero(1)).unwrap();
    let wrong = p.redeclared(minus, p.plus().clone(), p.gamma().clone()).unwrap();
    let r = wrong.dual_presentation_check(3);
    assert!(!r.passed());
    assert!(r.witness.unwrap().contains("declared ξ"));
}

#[test]
fn antipode_adjointness_refuses_when_gamma_is_asymmetric() {
    let w = weyl();
    assert!(matches!(
        w.pairing.antipode_adjointness_check(3),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn gram_blocks_are_factorials() {
    let w = weyl();
    let dets = w.pairing.gram_determinants(8).unwrap();
    assert_eq!(dets.len(), 9);
    for (deg, det) in dets {
        assert_eq!(det, q_factorial(deg.total() as i64).unwrap());
    }
    assert!(w.pairing.perfectness_check(8).passed());
}

#[test]
fn left_regular_action_lowers_degree() {
    let w = weyl();
    let e = w.double.engine();
    for n in 0..6 {
        let got = e.left_regular_action(&d_pow(&w, 1), &x_pow(&w, n)).unwrap();
        let want = if n == 0 {
            GradedElement::zero()
        } else {
            x_pow(&w, n - 1).scaled(&q_int(n as i64).unwrap())
        };
        assert_eq!(got, want, "n = {n}");
        assert_eq!(
            e.left_regular_action(&d_pow(&w, 0), &x_pow(&w, n)).unwrap(),
            x_pow(&w, n)
        );
    }
}

#[test]
fn smash_relation() {
    let w = weyl();
    let e = w.double.engine();
    let dx = eval(&w, "d*x");
    assert_eq!(e.format(&dx), "q*x#d + 1");
    let xd = eval(&w, "x*d");
    assert_eq!(e.format(&xd), "x#d");
    // ∂∂x = ∂(qx∂ + 1) = q(qx∂ + 1)∂ + ∂.
    assert_eq!(e.format(&eval(&w, "d*d*x")), "q^2*x#d^2 + (1 + q)*d");
    let xx = eval(&w, "x*x");
    assert_eq!(e.format(&xx), "x^2");
}

#[test]
fn fock_space() {
    let w = weyl();
    let d = &w.double;
    let got = d.fock_apply(&eval(&w, "d"), &x_pow(&w, 3)).unwrap();
    assert_eq!(got, x_pow(&w, 2).scaled(&q_int(3).unwrap()));
    assert_eq!(d.fock_apply(&eval(&w, "x*d"), &x_pow(&w, 1)).unwrap(), x_pow(&w, 1));
    assert_eq!(d.fock_apply(&eval(&w, "1"), &x_pow(&w, 4)).unwrap(), x_pow(&w, 4));

    let m = d.fock_matrix(&eval(&w, "d"), 3, 3).unwrap();
    assert_eq!(m.cols, ["1", "x", "x^2", "x^3"]);
    for r in 0..4 {
        for c in 0..4 {
            let want = if c == r + 1 {
                q_int(c as i64).unwrap()
            } else {
                RatFunc::zero()
            };
            assert_eq!(m.matrix.get(r, c), &want);
        }
    }
    let id = d.fock_matrix(&eval(&w, "1"), 3, 3).unwrap();
    assert_eq!(id.matrix, twisted_double::linalg::Matrix::identity(4));
    assert!(matches!(
        d.fock_matrix(&eval(&w, "x"), 3, 3),
        Err(Error::WindowTooSmall { needed: 4, window: 3 })
    ));
}

#[test]
fn commutation_vacuum_and_faithfulness() {
    let w = weyl();
    let d = &w.double;
    assert!(d.verify_commutation(6).passed());
    assert!(d.verify_commutation(0).passed());
    assert_eq!(d.vacuum_kernel_dimension(6), 0);
    assert!(d.verify_vacuum(6).passed());
    let zero = GroupDegree(vec![0]);
    assert_eq!(d.faithful_rank(&zero, 1).unwrap(), (2, 2));
    assert!(d.verify_faithful(&zero, 2).unwrap().passed());
    assert!(d.verify_faithful(&GroupDegree(vec![1]), 2).unwrap().passed());
}

#[test]
fn shift_invariance() {
    let w = weyl();
    let r = w.double.verify_shift_invariance(&BiadditiveMap::scalar(1), 5).unwrap();
    assert!(r.passed(), "{r}");
    let r = w.double.verify_shift_invariance(&BiadditiveMap::scalar(0), 5).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn smash_product_is_associative_and_acts() {
    let w = weyl();
    assert!(w.double.check_associativity(6).passed());
    assert!(w.double.check_fock_action(5).passed());
}

#[test]
fn incompatible_pairs_are_refused() {
    let w = weyl();
    let p = &w.pairing;
    let chi = TwistingDatum::new(BiadditiveMap::scalar(1), BiadditiveMap::scalar(1)).unwrap();
    let plus = p.plus().with_twisting(chi).unwrap();
    let wrong = p.redeclared(p.minus().clone(), plus, p.gamma().clone()).unwrap();
    assert!(matches!(HeisenbergDouble::new(wrong), Err(Error::Incompatible)));
}

#[test]
fn grading_is_additive() {
    let w = weyl();
    let e = w.double.engine();
    let u = eval(&w, "d^2*x");
    let v = eval(&w, "x^3*d");
    let uv = e.smash_multiply(&u, &v).unwrap();
    let du = u.degrees();
    let dv = v.degrees();
    assert_eq!((du.len(), dv.len()), (1, 1));
    assert_eq!(uv.degrees(), vec![&du[0] + &dv[0]]);
}
