use proptest::prelude::*;
use triangle_forge_core::numerics::frac;
use triangle_forge_core::{rational_make, BigInt, Laurent, Polynomial, Rational, Ring};

const BOUND: i64 = 1_000_000;

fn rational() -> impl Strategy<Value = Rational> {
    (-BOUND..=BOUND, 1..=BOUND).prop_map(|(n, d)| frac(n, d))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..5).prop_map(Polynomial::from_coeffs)
}

fn laurent() -> impl Strategy<Value = Laurent> {
    (-3i64..3, prop::collection::vec(rational(), 0..4)).prop_map(|(d, c)| Laurent::from_parts(d, c))
}

fn check_axioms<R: Ring>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.add(&R::zero()), a.clone());
    prop_assert_eq!(a.mul(&R::one()), a.clone());
    prop_assert!(a.mul(&R::zero()).is_zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn polynomial_ring(a in polynomial(), b in polynomial(), c in polynomial()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn rational_make_is_scale_invariant(n in -BOUND..=BOUND, d in 1..=BOUND, k in prop_oneof![-BOUND..=-1, 1..=BOUND]) {
        let (n, d, k) = (BigInt::from(n), BigInt::from(d), BigInt::from(k));
        let q = rational_make(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(&q, &rational_make(&n * &k, &d * &k).unwrap());
        prop_assert!(q.denom() > &BigInt::from(0));
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in polynomial(), q in polynomial(), x in rational()) {
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn laurent_evaluation_is_a_homomorphism(p in laurent(), q in laurent(), x in rational()) {
        prop_assume!(x != frac(0, 1));
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), p.eval(&x).unwrap() * q.eval(&x).unwrap());
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), p.eval(&x).unwrap() + q.eval(&x).unwrap());
    }

    #[test]
    fn polynomials_stay_normalized(p in polynomial(), q in polynomial()) {
        let s = &p - &p;
        prop_assert!(s.is_zero());
        prop_assert_eq!(s.degree(), None);
        if let Some(last) = (&p * &q).coeffs().last() {
            prop_assert!(*last != frac(0, 1));
        }
    }
}

#[test]
fn zero_denominator_is_an_error() {
    assert!(rational_make(BigInt::from(1), BigInt::from(0)).is_err());
}
