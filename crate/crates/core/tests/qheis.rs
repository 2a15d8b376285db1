use twisted_double::double::{DoubleElement, Generator, GeneratorSet};
use twisted_double::expr::parse_expression;
use twisted_double::hopf::{tensor, GradedElement};
use twisted_double::instances::{
    build_qheis, colored_sequences, nonsingularity_check, partitions_of, phi_derivation, qheis_pair, CartanData,
    ColoredSequence, MultiPartition, Partition, QHeis,
};
use twisted_double::linalg::Matrix;
use twisted_double::scalars::{q_int_sym, RatFunc};
use twisted_double::twisting::{BiadditiveMap, GroupDegree};
use twisted_double::Error;

fn a2() -> QHeis {
    build_qheis(&CartanData::finite_a(2), 6).unwrap()
}

fn s(text: &str) -> RatFunc {
    text.parse().unwrap()
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn eval(h: &QHeis, src: &str) -> DoubleElement {
    parse_expression(src)
        .unwrap()
        .evaluate(h.double.engine(), &h.generators())
        .unwrap()
}

/// Permutation-sum definition of the form, independent of the factored path.
fn permutation_sum(cartan: &CartanData, lambda: &ColoredSequence, mu: &ColoredSequence) -> RatFunc {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    if lambda.len() != mu.len() {
        return RatFunc::zero();
    }
    let mut total = RatFunc::zero();
    for sigma in perms(lambda.len()) {
        let mut term = RatFunc::one();
        for (r, &t) in sigma.iter().enumerate() {
            if lambda.prt(r) != mu.prt(t) {
                term = RatFunc::zero();
                break;
            }
            let k = lambda.prt(r) as i64;
            let kij = k * cartan.bracket(lambda.clr(r), mu.clr(t));
            term = term * q_int_sym(kij) * q_int_sym(k) * RatFunc::fraction(1, k).unwrap();
        }
        total += &term;
    }
    total
}

#[test]
fn plus_side_is_a_bialgebra() {
    let h = a2();
    let r = h.plus().check_bialgebra(4);
    assert!(r.passed(), "{r}");
}

#[test]
fn antipode_is_signed_length() {
    let h = a2();
    for n in 0..=4 {
        for seq in colored_sequences(n, 2) {
            let p = h.p_lambda(&seq.to_multipartition(2).unwrap());
            let sign = if seq.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(h.plus().antipode(&p).unwrap(), p.scaled(&RatFunc::integer(sign)));
        }
    }
}

#[test]
fn degree_one_pairing_is_the_quantum_cartan_matrix() {
    let h = a2();
    let v = |i, j| h.pairing.pair(&h.p_prime(1, i).unwrap(), &h.p(1, j).unwrap()).unwrap();
    assert_eq!(v(1, 1), s("q^-1 + q"));
    assert_eq!(v(1, 2), RatFunc::one());
    assert_eq!(v(2, 1), RatFunc::one());
}

#[test]
fn two_color_pairing_example() {
    let cartan = CartanData::finite_a(2);
    let lambda = MultiPartition::new(vec![part(&[1]), part(&[1])]);
    assert_eq!(qheis_pair(&cartan, &lambda, &lambda), s("(q^-1 + q)^2 + 1"));
    let other = MultiPartition::new(vec![part(&[2]), part(&[])]);
    assert!(qheis_pair(&cartan, &lambda, &other).is_zero());
}

#[test]
fn single_color_closed_form() {
    let cartan = CartanData::finite_a(2);
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let l = MultiPartition::single(2, i, lambda.clone()).unwrap();
                    let m = MultiPartition::single(2, j, mu.clone()).unwrap();
                    let want = if lambda == mu {
                        lambda
                            .multiplicities()
                            .into_iter()
                            .map(|(k, mk)| {
                                let k = k as i64;
                                let f = q_int_sym(k * cartan.bracket(i, j))
                                    * q_int_sym(k)
                                    * RatFunc::fraction(1, k).unwrap();
                                let fact: i64 = (1..=mk as i64).product();
                                f.pow(mk as i64).unwrap() * RatFunc::integer(fact)
                            })
                            .product()
                    } else {
                        RatFunc::zero()
                    };
                    assert_eq!(qheis_pair(&cartan, &l, &m), want, "{lambda} {mu} colors {i},{j}");
                }
            }
        }
    }
}

#[test]
fn factored_form_matches_permutation_sum_on_three_colors() {
    let cartan = CartanData::finite_a(3);
    for n in 0..=4 {
        let seqs = colored_sequences(n, 3);
        for l in &seqs {
            for m in &seqs {
                let lp = l.to_multipartition(3).unwrap();
                let mp = m.to_multipartition(3).unwrap();
                assert_eq!(qheis_pair(&cartan, &lp, &mp), permutation_sum(&cartan, l, m));
            }
        }
    }
}

#[test]
fn pairing_axioms_symmetry_and_adjointness() {
    let h = a2();
    let r = h.pairing.check_pairing_axioms(4);
    assert!(r.passed(), "{r}");
    assert!(h.pairing.gram_symmetric(4));
    let r = h.pairing.antipode_adjointness_check(5).unwrap();
    assert!(r.passed(), "{r}");
    let r = h.pairing.dual_presentation_check(3);
    assert!(r.passed(), "{r}");
    assert!(h.pairing.perfectness_check(4).passed());
}

#[test]
fn power_sum_adjoint_action() {
    let h = a2();
    let e = h.double.engine();
    for k in 1..=3u32 {
        for n in 1..=3u32 {
            for (i, j) in [(1, 1), (1, 2), (2, 1)] {
                let got = e
                    .left_regular_action(&h.p_prime(k, i).unwrap(), &h.p(n, j).unwrap())
                    .unwrap();
                let want = if k == n {
                    let k = k as i64;
                    let c = q_int_sym(k * h.cartan.bracket(i, j)) * q_int_sym(k) * RatFunc::fraction(1, k).unwrap();
                    GradedElement::basis(h.plus().unit()).scaled(&c)
                } else {
                    GradedElement::zero()
                };
                assert_eq!(got, want);
            }
        }
    }
}

#[test]
fn phi_examples() {
    let h = a2();
    let cartan = &h.cartan;
    let p22 = h.p_lambda(&MultiPartition::single(2, 2, part(&[2, 2])).unwrap());
    let p2 = h.p(2, 2).unwrap();
    let got = phi_derivation(cartan, 2, 1, &p22).unwrap();
    let want = p2.scaled(&(RatFunc::integer(2) * q_int_sym(-2) * q_int_sym(2) * RatFunc::fraction(1, 2).unwrap()));
    assert_eq!(got, want);
    assert!(phi_derivation(cartan, 1, 1, &h.plus().one()).unwrap().is_zero());
    assert!(phi_derivation(cartan, 1, 1, &h.p(2, 1).unwrap()).unwrap().is_zero());
    assert!(matches!(phi_derivation(cartan, 0, 1, &p2), Err(Error::OutOfRange(_))));
}

#[test]
fn left_action_of_power_sums_is_phi() {
    let h = a2();
    let e = h.double.engine();
    for n in 0..=5 {
        for seq in colored_sequences(n, 2) {
            let u = h.p_lambda(&seq.to_multipartition(2).unwrap());
            for k in 1..=3 {
                for i in 1..=2 {
                    let action = e.left_regular_action(&h.p_prime(k, i).unwrap(), &u).unwrap();
                    assert_eq!(action, h.phi(k, i, &u).unwrap());
                }
            }
        }
    }
}

#[test]
fn multiplication_by_power_sums_is_adjoint_to_phi() {
    let h = a2();
    for n in 1..=5u32 {
        for j in 1..=2 {
            for lambda in partitions_of(n) {
                let p = h.p_lambda(&MultiPartition::single(2, j, lambda).unwrap());
                for k in 1..=n {
                    for i in 1..=2 {
                        for seq in colored_sequences(n - k, 2) {
                            let x = h.p_lambda_prime(&seq.to_multipartition(2).unwrap());
                            let px = h.minus().multiply(&h.p_prime(k, i).unwrap(), &x).unwrap();
                            let lhs = h.pairing.pair(&px, &p).unwrap();
                            let rhs = h.pairing.pair(&x, &h.phi(k, i, &p).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn h_examples_and_expansion() {
    let h = a2();
    let two = h.h(2, 1).unwrap();
    let want = &h.p(2, 1).unwrap().scaled(&q_int_sym(2).inverse().unwrap())
        + &h.p_lambda(&MultiPartition::single(2, 1, part(&[1, 1])).unwrap())
            .scaled(&RatFunc::fraction(1, 2).unwrap());
    assert_eq!(two, want);
    assert_eq!(h.h(0, 2).unwrap(), h.plus().one());
    assert!(h.h(-1, 1).unwrap().is_zero());
    for i in 1..=2 {
        for n in 1..=6i64 {
            let mut rhs = GradedElement::zero();
            for r in 1..=n {
                let c = RatFunc::integer(r) * q_int_sym(r).inverse().unwrap();
                let prod = h
                    .plus()
                    .multiply(&h.h(n - r, i).unwrap(), &h.p(r as u32, i).unwrap())
                    .unwrap();
                rhs.add_scaled(&prod, &c);
            }
            assert_eq!(h.h(n, i).unwrap().scaled(&RatFunc::integer(n)), rhs, "n = {n}");
        }
    }
}

#[test]
fn h_coproduct() {
    let h = a2();
    for n in 0..=5 {
        let delta = h.plus().comultiply(&h.h(n, 1).unwrap()).unwrap();
        let mut want = twisted_double::hopf::TensorElement::zero();
        for k in 0..=n {
            want = &want + &tensor(&h.h(k, 1).unwrap(), &h.h(n - k, 1).unwrap());
        }
        assert_eq!(delta, want);
    }
}

#[test]
fn power_sum_action_on_h() {
    let h = a2();
    let e = h.double.engine();
    for k in 1..=4u32 {
        for n in 0..=5i64 {
            for (i, j) in [(1, 1), (1, 2)] {
                let got = e
                    .left_regular_action(&h.p_prime(k, i).unwrap(), &h.h(n, j).unwrap())
                    .unwrap();
                let k = k as i64;
                let c = q_int_sym(k * h.cartan.bracket(i, j)) * RatFunc::fraction(1, k).unwrap();
                assert_eq!(got, h.h(n - k, j).unwrap().scaled(&c));
            }
        }
    }
}

#[test]
fn h_adjoint_closed_forms() {
    let h = build_qheis(&CartanData::finite_a(3), 5).unwrap();
    let e = h.double.engine();
    for (i, j) in [(1, 1), (1, 2), (1, 3), (2, 2), (3, 2)] {
        for k in 0..=5u32 {
            for n in 0..=5u32 {
                let closed = h.h_adjoint(k, i, n, j).unwrap().unwrap();
                let acted = e
                    .left_regular_action(&h.h_prime(k as i64, i).unwrap(), &h.h(n as i64, j).unwrap())
                    .unwrap();
                assert_eq!(closed, acted, "k={k} i={i} n={n} j={j}");
            }
        }
    }
    let odd = build_qheis(&CartanData::new(vec![vec![3]]).unwrap(), 2).unwrap();
    assert!(odd.h_adjoint(1, 1, 1, 1).unwrap().is_none());
}

#[test]
fn p_relations() {
    let h = a2();
    for m in 1..=3 {
        for n in 1..=3 {
            for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let lhs = eval(&h, &format!("p'[{m},{i}]*p[{n},{j}]"));
                let mut rhs = eval(&h, &format!("p[{n},{j}]*p'[{m},{i}]"));
                if m == n {
                    let k = n as i64;
                    let c = q_int_sym(k * h.cartan.bracket(i, j)) * q_int_sym(k) * RatFunc::fraction(1, k).unwrap();
                    rhs = &rhs + &h.double.engine().scalar(c);
                }
                assert_eq!(lhs, rhs);
                assert_eq!(
                    eval(&h, &format!("p[{m},{i}]*p[{n},{j}]")),
                    eval(&h, &format!("p[{n},{j}]*p[{m},{i}]"))
                );
                assert_eq!(
                    eval(&h, &format!("p'[{m},{i}]*p'[{n},{j}]")),
                    eval(&h, &format!("p'[{n},{j}]*p'[{m},{i}]"))
                );
            }
        }
    }
}

#[test]
fn normal_ordered_h_word() {
    let h = a2();
    let e = h.double.engine();
    let got = eval(&h, "h'[1,1]*h[1,1]");
    let want = &eval(&h, "h[1,1]#h'[1,1]") + &e.scalar(q_int_sym(2));
    assert_eq!(got, want);
    let gens = h.generators();
    let word = parse_expression("h'[1,1] h[1,1]").unwrap().as_word().unwrap();
    assert_eq!(e.normal_order(&gens, &word).unwrap(), want);
    assert!(matches!(
        gens.resolve(&Generator::new("p", false, vec![1, 3])),
        Err(Error::UnknownGenerator(_))
    ));
    assert!(matches!(
        gens.resolve(&Generator::plain("x")),
        Err(Error::UnknownGenerator(_))
    ));
}

#[test]
fn h_generate_low_degrees() {
    let h = a2();
    for n in 1..=4u32 {
        // All products h_{n1,i1} ... h_{nr,ir} of total degree n.
        let mut spans: Vec<GradedElement> = Vec::new();
        for seq in colored_sequences(n, 2) {
            let mut prod = h.plus().one();
            for &(k, c) in seq.entries() {
                prod = h.plus().multiply(&prod, &h.h(k as i64, c).unwrap()).unwrap();
            }
            spans.push(prod);
        }
        let basis = h.plus().basis(n);
        let rows: Vec<Vec<RatFunc>> = spans
            .iter()
            .map(|u| basis.iter().map(|l| u.coefficient(l)).collect())
            .collect();
        assert_eq!(Matrix::from_rows(rows).unwrap().rank(), basis.len(), "degree {n}");
    }
}

#[test]
fn nonsingularity() {
    let a1 = CartanData::new(vec![vec![2]]).unwrap();
    assert_eq!(a1.quantum_determinants(1), vec![(1, q_int_sym(2))]);
    let a2 = CartanData::finite_a(2);
    assert!(a2.quantum_determinants(4).iter().all(|(_, d)| !d.is_zero()));
    assert!(nonsingularity_check(&a2, 4, "A2").passed());
    for n in [2, 3, 4] {
        let affine = CartanData::affine_a(n).unwrap();
        for k in 1..=4u32 {
            let k = k as i64;
            let want = q_int_sym(2 * k) + q_int_sym(-k) * RatFunc::integer(2);
            assert!(affine.quantum_row_sums(k as u32).iter().all(|v| *v == want));
            assert!(!want.is_zero());
        }
    }
    assert!(CartanData::affine_d4()
        .quantum_determinants(4)
        .iter()
        .all(|(_, d)| !d.is_zero()));
    let zero = CartanData::new(vec![vec![0]]).unwrap();
    assert!(matches!(build_qheis(&zero, 3), Err(Error::SingularForm { k: 1 })));
    assert!(!nonsingularity_check(&zero, 2, "zero").passed());
}

#[test]
fn double_checks() {
    let h = a2();
    let d = &h.double;
    assert!(d.verify_commutation(4).passed());
    assert_eq!(d.vacuum_kernel_dimension(3), 0);
    assert!(d.verify_vacuum(3).passed());
    let zero = GroupDegree(vec![0]);
    let (rank, dim) = d.faithful_rank(&zero, 2).unwrap();
    assert_eq!((rank, dim), (30, 30));
    let r = d.verify_shift_invariance(&BiadditiveMap::scalar(1), 3).unwrap();
    assert!(r.passed(), "{r}");
    assert!(d.check_associativity(3).passed());
    assert!(d.check_fock_action(3).passed());
}

#[test]
fn fock_matrix_of_a_degree_one_annihilator() {
    let h = a2();
    for i in 1..=2 {
        let u = eval(&h, &format!("p'[1,{i}]"));
        let m = h.double.fock_matrix(&u, 1, 1).unwrap();
        assert_eq!(m.cols, ["1", "p[1,1]", "p[1,2]"]);
        for j in 1..=2u32 {
            assert_eq!(m.matrix.get(0, j as usize), &q_int_sym(h.cartan.bracket(i, j)));
        }
    }
}

#[test]
fn commutation_coefficients_do_not_depend_on_the_acted_element() {
    // (1#x)(b#1) = Σ c_{x₁,x₂} x₁^{R*}(b) # x₂: the coefficient attached to
    // each (x₁, x₂) is the same for two different b of equal degree.
    let h = a2();
    let e = h.double.engine();
    let b1 = h.plus().basis(2)[0].clone();
    let b2 = h.plus().basis(2)[3].clone();
    for x in h.minus().basis_upto(2) {
        let coefficients = |b: &twisted_double::hopf::BasisLabel| {
            let mut out = Vec::new();
            for ((x1, x2), c) in h.minus().coproduct_label(&x).iter() {
                let acted = e.action_label(x1, b);
                let full = e.commute_labels(&x, b);
                for (p, d) in acted.iter() {
                    let ratio = full.coefficient(p, x2).checked_div(&(d * c)).unwrap();
                    out.push(((x1.clone(), x2.clone()), ratio));
                }
            }
            out
        };
        let mut c1: Vec<RatFunc> = coefficients(&b1).into_iter().map(|(_, c)| c).collect();
        let mut c2: Vec<RatFunc> = coefficients(&b2).into_iter().map(|(_, c)| c).collect();
        c1.sort_by_key(|c| c.to_string());
        c1.dedup();
        c2.sort_by_key(|c| c.to_string());
        c2.dedup();
        assert_eq!(c1, c2);
    }
}
