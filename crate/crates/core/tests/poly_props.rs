use std::collections::BTreeMap;

use graphpoly::poly::{integer, interpolate_bivariate, rational};
use graphpoly::Polynomial;
use num_rational::BigRational;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn arb_poly(int_only: bool) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(((0u32..4, 0u32..4, 0u32..3), -9i64..10, 1i64..5), 0..6).prop_map(move |ts| {
        Polynomial::from_terms(
            &VARS,
            ts.into_iter().map(|((a, b, c), n, d)| (vec![a, b, c], if int_only { integer(n) } else { rational(n, d) })),
        )
    })
}

fn arb_point() -> impl Strategy<Value = BTreeMap<String, BigRational>> {
    proptest::collection::vec((-5i64..6, 1i64..4), 3).prop_map(|v| {
        VARS.iter().zip(v).map(|(k, (n, d))| (k.to_string(), rational(n, d))).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_laws(a in arb_poly(false), b in arb_poly(false), c in arb_poly(false)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(a.scale(&rational(3, 2)), &a * &Polynomial::constant(rational(3, 2)));
    }

    #[test]
    fn normalization_is_idempotent(a in arb_poly(false)) {
        prop_assert_eq!(a.normalize().normalize(), a.normalize());
        prop_assert_eq!(a.normalize(), a);
    }

    #[test]
    fn integer_inputs_stay_integral(a in arb_poly(true), b in arb_poly(true), c in arb_poly(true)) {
        prop_assert!((&a + &b).is_integral());
        prop_assert!((&a * &b).is_integral());
        prop_assert!(a.subs(&[("x", b.clone()), ("z", c.clone())]).is_integral());
    }

    #[test]
    fn substitute_then_evaluate(a in arb_poly(false), b in arb_poly(false), pt in arb_point()) {
        let composed = a.subs(&[("y", b.clone())]).evaluate(&pt).unwrap();
        let mut inner = pt.clone();
        inner.insert("y".into(), b.evaluate(&pt).unwrap());
        prop_assert_eq!(composed, a.evaluate(&inner).unwrap());
    }

    #[test]
    fn zero_substitution_matches_evaluation(a in arb_poly(false), pt in arb_point()) {
        let mut at_zero = pt.clone();
        at_zero.insert("y".into(), integer(0));
        prop_assert_eq!(a.subs(&[("y", Polynomial::zero())]).evaluate(&pt).unwrap(), a.evaluate(&at_zero).unwrap());
    }

    #[test]
    fn text_and_json_round_trip(a in arb_poly(false)) {
        prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a.clone());
        prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn bivariate_interpolation_recovers(coeffs in proptest::collection::vec(-20i64..21, 25)) {
        let f = Polynomial::from_terms(
            &["x", "y"],
            coeffs.iter().enumerate().map(|(k, &c)| (vec![(k / 5) as u32, (k % 5) as u32], integer(c))),
        );
        let mut samples = Vec::new();
        for x in -2..3 {
            for y in 0..5 {
                let v = f.eval(&[("x", integer(x)), ("y", integer(y))]).unwrap();
                samples.push((integer(x), integer(y), v));
            }
        }
        prop_assert_eq!(interpolate_bivariate(&samples, 4, 4, "x", "y").unwrap(), f);
    }
}
