use nqf_core::polyring::{self, Basis, CPoly, Constants};
use nqf_core::quantum::{self, BnGen, GradedOperator, QuantumEngine, YOperators};
use nqf_core::{CartanType, NicholsBasis, QMonomial, Rational, RingElem, RootSystem};

fn system(kind: CartanType, n: usize) -> RootSystem {
    RootSystem::new(kind, n).unwrap()
}

#[test]
fn eta_operators_commute() {
    for (kind, n, d) in [(CartanType::A, 2, None), (CartanType::B, 2, None), (CartanType::C, 2, None), (CartanType::A, 3, Some(6))] {
        let rs = system(kind, n);
        let nb = NicholsBasis::build(&rs, d);
        let qe = QuantumEngine::new(&nb, Constants::uniform(&rs));
        let etas = qe.etas();
        for i in 0..n {
            for j in i + 1..n {
                let l = etas[i].compose(&etas[j]);
                let r = etas[j].compose(&etas[i]);
                assert!(l.sub(&r).is_zero(), "{kind}{n}: eta{i} eta{j}");
            }
        }
    }
}

#[test]
fn quantized_root_squares() {
    let rs = system(CartanType::B, 2);
    let nb = NicholsBasis::build(&rs, None);
    for c in [Constants::uniform(&rs), Constants::by_length(&rs, Rational::ONE, Rational::from_int(2)).unwrap()] {
        let qe = QuantumEngine::new(&nb, c.clone());
        for a in 0..rs.num_positive() {
            let op = qe.quantize_root(a);
            let sq = op.compose(op);
            if rs.is_simple(a) {
                let s = RingElem::term(rs.q_of_root(a), c.get(a) * qe.d(a));
                assert!(sq.is_scalar(&s), "simple {}", rs.root_label(a));
            } else {
                assert!(sq.is_zero(), "{}", rs.root_label(a));
            }
        }
    }
}

#[test]
fn quantum_invariants_annihilate() {
    for (kind, n) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let rs = system(kind, n);
        let nb = NicholsBasis::build(&rs, None);
        let qe = QuantumEngine::new(&nb, Constants::uniform(&rs));
        for inv in quantum::quantum_invariants(&rs).unwrap() {
            let op = qe.mu_tilde_poly(&inv.poly);
            assert!(op.is_zero(), "{kind}{n} degree {}: {} nonzero at {:?}", inv.degree, inv.poly, op.first_nonzero());
        }
    }
}

#[test]
fn a2_invariants_match_tridiagonal_determinant() {
    let rs = system(CartanType::A, 2);
    let ys = YOperators::new(&rs);
    let by_len = quantum::elements_by_length(&rs).unwrap();
    for inv in quantum::quantum_invariants(&rs).unwrap() {
        let gk = quantum::givental_kim(&rs, inv.degree).unwrap();
        let gk = polyring::to_basis(&rs, &gk, Basis::Omega);
        assert!(quantum::in_invariant_ideal(&rs, &by_len, &ys.eval_at_one(&gk).unwrap()).unwrap());
        assert_eq!(gk, inv.poly, "degree {}", inv.degree);
    }
}

#[test]
fn quantized_schubert_classes_on_unit_a2() {
    let rs = system(CartanType::A, 2);
    let nb = NicholsBasis::build(&rs, None);
    let c = Constants::uniform(&rs);
    let qe = QuantumEngine::new(&nb, c.clone());
    let ys = YOperators::new(&rs);
    for w in rs.enumerate_weyl(100).unwrap() {
        let s = polyring::schubert_poly_a(&rs, &w).unwrap();
        let sq = ys.quantize(&s).unwrap();
        let lhs = qe.mu_tilde_apply(&sq, &nqf_core::BElem::one()).unwrap();
        let rhs = polyring::mu(&nb, &c, &s).unwrap();
        assert_eq!(lhs, rhs);
    }
}

fn bn_op(qe: &QuantumEngine<'_>, g: BnGen) -> GradedOperator {
    let (idx, sign) = g.root(qe.root_system());
    qe.quantize_root(idx).scale(&RingElem::from(sign))
}

#[test]
fn bn_relations_b2() {
    let rs = system(CartanType::B, 2);
    let nb = NicholsBasis::build(&rs, None);
    let qe = QuantumEngine::new(&nb, Constants::uniform(&rs));
    let mut failures = Vec::new();
    for rel in quantum::bn_relations(2) {
        let mut total = GradedOperator::zero(&nb);
        for (s, word) in &rel.terms {
            let mut op = GradedOperator::identity(&nb);
            for g in word.iter().rev() {
                op = bn_op(&qe, *g).compose(&op);
            }
            total = total.add(&op.scale(&RingElem::from(*s)));
        }
        let ok = match &rel.rhs {
            None => total.is_zero(),
            Some(e) => total.is_scalar(&RingElem::monomial(quantum::qmonomial_from_display(&rs, e).unwrap())),
        };
        if !ok {
            failures.push(rel.label.clone());
        }
    }
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn y_operators_commute_and_intertwine() {
    let rs = system(CartanType::B, 2);
    let nb = NicholsBasis::build(&rs, None);
    let c = Constants::uniform(&rs);
    let qe = QuantumEngine::new(&nb, c.clone());
    let ys = YOperators::new(&rs);
    let w = |i| CPoly::var(Basis::Omega, 2, i);
    let f = w(0).pow(2).mul(&w(1)).add(&w(1).pow(2).scale(&RingElem::from(3)));
    let l = ys.apply(0, &ys.apply(1, &f).unwrap()).unwrap();
    let r = ys.apply(1, &ys.apply(0, &f).unwrap()).unwrap();
    assert_eq!(l, r);
    for j in 0..2 {
        let lhs = qe.etas()[j].apply(&polyring::mu(&nb, &c, &f).unwrap()).unwrap();
        let rhs = polyring::mu(&nb, &c, &ys.apply(j, &f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
    let _ = QMonomial::var(0);
}
