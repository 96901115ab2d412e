use motzkin::{rational, Rational, Series};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const ORDER: usize = 8;

fn series(constant: Option<i64>) -> impl Strategy<Value = Series> {
    prop::collection::vec((-6i64..=6, 1i64..=4), ORDER + 1).prop_map(move |cs| {
        let mut cs: Vec<Rational> = cs.into_iter().map(|(n, d)| rational(n, d)).collect();
        if let Some(c) = constant {
            cs[0] = rational(c, 1);
        }
        Series::from_coeffs(&cs, ORDER)
    })
}

fn lowest_terms(s: &Series) -> bool {
    s.coeffs()
        .iter()
        .all(|c| c.denom().is_positive() && c.numer().gcd(c.denom()).is_one())
}

proptest! {
    #[test]
    fn ring_laws(a in series(None), b in series(None), c in series(None)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.square(), &a * &a);
        prop_assert!(lowest_terms(&(&a * &b)));
    }

    #[test]
    fn sqrt_squares_back(s in series(Some(1))) {
        let root = s.sqrt().unwrap();
        prop_assert_eq!(&root * &root, s);
        prop_assert!(lowest_terms(&root));
    }

    #[test]
    fn inverse_is_inverse(s in series(None)) {
        prop_assume!(!s.coeff(0).is_zero());
        let inv = s.inv().unwrap();
        prop_assert_eq!(&s * &inv, Series::one(ORDER));
    }
}
