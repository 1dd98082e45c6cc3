use nqf_core::{QMonomial, Rational, RingElem};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..25).prop_map(|(n, d)| Rational::new(n, d))
}

fn ring_elem() -> impl Strategy<Value = RingElem> {
    prop::collection::vec(((0i64..3, -1i64..3), rational()), 0..4).prop_map(|terms| {
        RingElem::from_terms(terms.into_iter().map(|((a, b), c)| (QMonomial::new(&[a, b]), c)))
    })
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_order_matches_cross_multiplication(a in (-40i64..40, 1i64..25), b in (-40i64..40, 1i64..25)) {
        let (x, y) = (Rational::new(a.0, a.1), Rational::new(b.0, b.1));
        prop_assert_eq!(x.cmp(&y), (a.0 * b.1).cmp(&(b.0 * a.1)));
    }

    #[test]
    fn ring_axioms(a in ring_elem(), b in ring_elem(), c in ring_elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RingElem::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ring_elem(), b in ring_elem(), x in 1i64..5, y in 1i64..5) {
        let v = [Rational::from_int(x), Rational::new(1, y)];
        prop_assert_eq!((&a * &b).evaluate(&v), &a.evaluate(&v) * &b.evaluate(&v));
        prop_assert_eq!((&a + &b).evaluate(&v), &a.evaluate(&v) + &b.evaluate(&v));
    }
}

#[test]
fn at_q_zero_keeps_constant_term() {
    let q1 = QMonomial::var(0);
    let x = RingElem::from_terms([(QMonomial::new(&[0, 0]), Rational::new(3, 2)), (q1, Rational::from_int(-2))]);
    assert_eq!(x.at_q_zero(), RingElem::constant(Rational::new(3, 2)));
    assert_eq!(x.constant_term(), Rational::new(3, 2));
}
