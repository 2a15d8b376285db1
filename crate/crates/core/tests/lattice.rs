use twisted_double::double::{DoubleContext, DoubleElement};
use twisted_double::expr::parse_expression;
use twisted_double::instances::{build_lattice, colored_sequences, CartanData, ColoredForm, FormKind, Lattice};
use twisted_double::scalars::RatFunc;
use twisted_double::Error;

fn lattice(rows: Vec<Vec<i64>>) -> Lattice {
    build_lattice(&CartanData::new(rows).unwrap()).unwrap()
}

fn eval(l: &Lattice, src: &str) -> DoubleElement {
    parse_expression(src)
        .unwrap()
        .evaluate(l.context.engine(), &l.generators())
        .unwrap()
}

fn check_commutators(l: &Lattice, max: i64) {
    let colors = l.form.colors() as u32;
    for m in 1..=max {
        for n in 1..=max {
            for i in 1..=colors {
                for j in 1..=colors {
                    let lhs = eval(l, &format!("p'[{m},{i}]*p[{n},{j}]"));
                    let mut rhs = eval(l, &format!("p[{n},{j}]*p'[{m},{i}]"));
                    if m == n {
                        let c = RatFunc::integer(n * l.form.bracket(i, j));
                        rhs = &rhs + &l.context.engine().scalar(c);
                    }
                    assert_eq!(lhs, rhs, "m={m} n={n} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn identity_form_gives_a_double() {
    let l = lattice(vec![vec![1, 0], vec![0, 1]]);
    assert!(l.context.is_double());
    check_commutators(&l, 5);
    assert!(l.pairing.perfectness_check(4).passed());
    assert!(l.pairing.gram_symmetric(4));
    assert!(l.is_q_free(4));
    let d = l.context.as_double().unwrap();
    assert!(d.verify_commutation(3).passed());
    assert!(d.verify_vacuum(3).passed());
}

#[test]
fn rank_one_lattice_is_the_classical_heisenberg_algebra() {
    let l = lattice(vec![vec![1]]);
    let e = l.context.engine();
    for n in 1..=5 {
        let lhs = eval(&l, &format!("p'[{n},1]*p[{n},1]"));
        let rhs = &eval(&l, &format!("p[{n},1]#p'[{n},1]")) + &e.scalar(RatFunc::integer(n));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn zero_form_has_no_double() {
    let l = lattice(vec![vec![0, 0], vec![0, 0]]);
    assert!(!l.context.is_double());
    assert!(matches!(l.context.as_double(), Err(Error::NoDouble(_))));
    check_commutators(&l, 5);
    let r = l.pairing.perfectness_check(2);
    assert!(!r.passed());
    assert!(r.witness.unwrap().starts_with("degree 1"));
}

#[test]
fn degenerate_rank_one_form_keeps_its_relations() {
    let l = lattice(vec![vec![1, 1], vec![1, 1]]);
    assert!(matches!(l.context, DoubleContext::PresentationOnly(_)));
    check_commutators(&l, 5);
    assert!(l.context.engine().verify_commutation(3).passed());
}

#[test]
fn lattice_form_is_the_quantum_form_with_integer_factors() {
    // For ⟨i,j⟩ ≥ 0 the lattice factor k⟨i,j⟩ is the q = 1 value of [k⟨i,j⟩][k]/k.
    let form = CartanData::new(vec![vec![2, -1], vec![-1, 3]]).unwrap();
    let lattice = ColoredForm::new(form.clone(), FormKind::Lattice);
    let quantum = ColoredForm::new(form.clone(), FormKind::Quantum);
    for k in 1..=3 {
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(lattice.factor(k, i, j), RatFunc::integer(k as i64 * form.bracket(i, j)));
                if form.bracket(i, j) < 0 {
                    continue;
                }
                let one = RatFunc::one().as_rational().unwrap();
                let classical = quantum.factor(k, i, j).specialize(&one).unwrap();
                assert_eq!(Some(classical), lattice.factor(k, i, j).as_rational());
            }
        }
    }
    for n in 0..=4 {
        let seqs = colored_sequences(n, 2);
        for a in &seqs {
            for b in &seqs {
                let v = lattice.pair_sequences(a, b);
                assert!(v.is_constant());
                if a.entries().iter().map(|e| e.0).ne(b.entries().iter().map(|e| e.0)) {
                    assert!(v.is_zero());
                }
            }
        }
    }
}
