use proptest::prelude::*;
use qutrit_teleport::scalar::{parse_rational_literal, rational_literal};
use qutrit_teleport::ExtScalar;

fn coord() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..=30, 1i64..=12)
}

fn ext() -> impl Strategy<Value = ExtScalar> {
    (coord(), coord(), coord(), coord()).prop_map(|((a, b), (c, d), (e, f), (g, h))| {
        ExtScalar::ratio(a, b) + ExtScalar::surd(c, d, 2) + ExtScalar::surd(e, f, 3) + ExtScalar::surd(g, h, 6)
    })
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * (1.0 + x.abs().max(y.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_a_commutative_group(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &ExtScalar::zero(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &ExtScalar::one(), a.clone());
    }

    #[test]
    fn multiplication_distributes(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inverse_is_multiplicative(a in ext()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn to_f64_is_a_homomorphism(a in ext(), b in ext()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        prop_assert!(close((&a + &b).to_f64(), x + y));
        prop_assert!(close((&a * &b).to_f64(), x * y));
    }

    #[test]
    fn norm_is_multiplicative(a in ext(), b in ext()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn rational_literals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = ExtScalar::ratio(n, d).q1().clone();
        prop_assert_eq!(parse_rational_literal(&rational_literal(&q)).unwrap(), q);
    }

    #[test]
    fn json_round_trip(a in ext()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExtScalar>(&text).unwrap(), a);
    }
}

#[test]
fn zero_has_no_inverse() {
    assert!(ExtScalar::zero().inv().is_err());
}

#[test]
fn worked_values() {
    assert_eq!(ExtScalar::sqrt2() * ExtScalar::sqrt3(), ExtScalar::sqrt6());
    assert_eq!(
        ExtScalar::over_sqrt(1, 1, 2) * ExtScalar::over_sqrt(1, 1, 6),
        ExtScalar::surd(1, 6, 3)
    );
    let one_plus_root2 = ExtScalar::one() + ExtScalar::sqrt2();
    assert_eq!(one_plus_root2.inv().unwrap(), ExtScalar::integer(-1) + ExtScalar::sqrt2());
    assert!((ExtScalar::over_sqrt(1, 2, 3).to_f64() - 0.288_675_134_594_812_9).abs() < 1e-15);
}
