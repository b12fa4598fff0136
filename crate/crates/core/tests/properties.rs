use chroma_skein::poly::{LaurentPoly, Monomial, SkeinValue};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -3i32..=3, -3i32..=3), 0..6).prop_map(|ts| {
        LaurentPoly::from_terms(
            ts.into_iter()
                .map(|(c, ex, ew, et)| (Monomial::new(ex, ew, et), c)),
        )
    })
}

fn value() -> impl Strategy<Value = SkeinValue> {
    (poly(), 0u32..3).prop_map(|(p, k)| SkeinValue::new(p, k))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (1i64..6, 1i64..6, any::<bool>()).prop_map(|(n, d, neg)| {
        BigRational::new(BigInt::from(if neg { -n } else { n }), BigInt::from(d))
    })
}

fn point() -> impl Strategy<Value = [BigRational; 3]> {
    (nonzero_rational(), nonzero_rational(), nonzero_rational())
        .prop_filter("t = 1 is a pole", |(_, _, t)| {
            *t != BigRational::from_integer(1.into())
        })
        .prop_map(|(x, w, t)| [x, w, t])
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn normalize_is_idempotent(v in value()) {
        prop_assert!(v.is_normalized());
        prop_assert_eq!(v.clone().normalize(), v);
    }

    #[test]
    fn values_form_a_ring(a in value(), b in value(), c in value()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SkeinValue::one(), a.clone());
    }

    #[test]
    fn eval_is_a_homomorphism(a in value(), b in value(), [x, w, t] in point()) {
        let ea = a.eval(&x, &w, &t).unwrap();
        let eb = b.eval(&x, &w, &t).unwrap();
        prop_assert_eq!((&a + &b).eval(&x, &w, &t).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&x, &w, &t).unwrap(), &ea * &eb);
    }

    #[test]
    fn invert_w_t_is_an_involution(a in value(), b in value()) {
        prop_assert_eq!(a.invert_w_t().invert_w_t(), a.clone());
        prop_assert_eq!((&a * &b).invert_w_t(), &a.invert_w_t() * &b.invert_w_t());
    }

    #[test]
    fn display_is_injective(a in value(), b in value()) {
        prop_assert_eq!(a.to_string() == b.to_string(), a == b);
    }
}
