//! Property-based invariants: field axioms for the ground scalars, the
//! algebra and commutation biconditionals for quaternions, and structural
//! facts about the rotation map.

use proptest::prelude::*;

use so3kit::quaternion::{self, Quaternion, Trichotomy};
use so3kit::rotation::theta;
use so3kit::scalar::{QuadScalar, Sign};

const AMBIENTS: [u64; 3] = [0, 3, 5];

fn scalar_strategy(d: u64) -> BoxedStrategy<QuadScalar> {
    let rat = || (-20i64..=20, 1i64..=10);
    if d == 0 {
        rat()
            .prop_map(move |(n, q)| QuadScalar::from_ratio(n, q, 0))
            .boxed()
    } else {
        (rat(), rat())
            .prop_map(move |((rn, rd), (sn, sd))| QuadScalar::from_parts(rn, rd, sn, sd, d))
            .boxed()
    }
}

fn any_scalar() -> BoxedStrategy<QuadScalar> {
    prop_oneof![
        scalar_strategy(AMBIENTS[0]),
        scalar_strategy(AMBIENTS[1]),
        scalar_strategy(AMBIENTS[2]),
    ]
    .boxed()
}

fn triple_same_ambient() -> BoxedStrategy<(QuadScalar, QuadScalar, QuadScalar)> {
    (0usize..AMBIENTS.len())
        .prop_flat_map(|i| {
            let d = AMBIENTS[i];
            (scalar_strategy(d), scalar_strategy(d), scalar_strategy(d))
        })
        .boxed()
}

fn quaternion_strategy(d: u64) -> BoxedStrategy<Quaternion> {
    (
        scalar_strategy(d),
        scalar_strategy(d),
        scalar_strategy(d),
        scalar_strategy(d),
    )
        .prop_map(|(a, b, c, e)| Quaternion::new(a, b, c, e))
        .boxed()
}

fn quaternion_pair() -> BoxedStrategy<(Quaternion, Quaternion)> {
    (0usize..AMBIENTS.len())
        .prop_flat_map(|i| {
            let d = AMBIENTS[i];
            (quaternion_strategy(d), quaternion_strategy(d))
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms((a, b, c) in triple_same_ambient()) {
        // associativity and commutativity
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // inverses
        prop_assert_eq!(&a - &a, QuadScalar::zero(a.ambient()));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), QuadScalar::one(a.ambient()));
        }
    }

    #[test]
    fn conjugation_is_a_ring_homomorphism((a, b, _c) in triple_same_ambient()) {
        prop_assert_eq!((&a + &b).surd_conjugate(), &a.surd_conjugate() + &b.surd_conjugate());
        prop_assert_eq!((&a * &b).surd_conjugate(), &a.surd_conjugate() * &b.surd_conjugate());
        prop_assert_eq!(a.surd_conjugate().surd_conjugate(), a.clone());
        if a.is_rational() {
            prop_assert_eq!(a.surd_conjugate(), a);
        }
    }

    #[test]
    fn sign_matches_numeric_oracle(a in any_scalar()) {
        // the distribution keeps nonzero magnitudes far above f64 error
        let numeric = a.to_f64();
        match a.sign() {
            Sign::Zero => prop_assert!(numeric.abs() < 1e-9),
            Sign::Positive => prop_assert!(numeric > 1e-9),
            Sign::Negative => prop_assert!(numeric < -1e-9),
        }
    }

    #[test]
    fn parse_display_round_trip(a in any_scalar()) {
        let text = a.to_string();
        prop_assert_eq!(QuadScalar::parse(&text, a.ambient()).unwrap(), a);
    }

    #[test]
    fn norm_is_multiplicative((x, y) in quaternion_pair()) {
        prop_assert_eq!((&x * &y).norm_sq(), &x.norm_sq() * &y.norm_sq());
        prop_assert_eq!(x.norm_sq().is_zero(), x.is_zero());
    }

    #[test]
    fn commutation_biconditionals((x, y) in quaternion_pair()) {
        prop_assert_eq!(
            quaternion::commutes(&x, &y),
            quaternion::vector_parts_dependent(&x, &y)
        );
        if !x.is_zero() && !y.is_zero() {
            prop_assert_eq!(
                quaternion::anticommutes(&x, &y).unwrap(),
                quaternion::anticommute_criterion(&x, &y)
            );
        }
    }

    #[test]
    fn rotation_map_is_a_homomorphism((x, y) in quaternion_pair()) {
        if !x.is_zero() && !y.is_zero() {
            let product = theta(&(&x * &y)).unwrap();
            prop_assert_eq!(product, &theta(&x).unwrap() * &theta(&y).unwrap());
            // the trichotomy decides commutation of the images
            let tri = quaternion::commutation_trichotomy(&x, &y).unwrap();
            let images_commute = theta(&x).unwrap().commutes_with(&theta(&y).unwrap());
            prop_assert_eq!(tri == Trichotomy::Neither, !images_commute);
        }
    }

    #[test]
    fn axis_is_fixed_by_the_rotation(x in quaternion_strategy(0)) {
        if !x.is_real() {
            let m = theta(&x).unwrap();
            if !m.is_identity() {
                let axis = m.axis().unwrap();
                prop_assert_eq!(&m.apply(axis.coordinates()), axis.coordinates());
            }
        }
    }

    #[test]
    fn pure_quaternions_map_to_half_turns(x in quaternion_strategy(0)) {
        if x.is_pure() && !x.is_zero() {
            let m = theta(&x).unwrap();
            prop_assert!(!m.is_identity());
            prop_assert!((&m * &m).is_identity());
        }
    }

    #[test]
    fn x_axis_centralizer_form(x in quaternion_strategy(0)) {
        // anything commuting with diag(1,-1,-1) fixes the x-axis line
        if !x.is_zero() {
            let m = theta(&x).unwrap();
            let a = so3kit::corpus::rot_x_half_turn(0);
            if m.commutes_with(&a) {
                let zero = QuadScalar::zero(0);
                let corner = m.entry(0, 0);
                prop_assert!(
                    corner == &QuadScalar::one(0) || corner == &QuadScalar::from_int(-1, 0)
                );
                prop_assert_eq!(m.entry(0, 1), &zero);
                prop_assert_eq!(m.entry(0, 2), &zero);
                prop_assert_eq!(m.entry(1, 0), &zero);
                prop_assert_eq!(m.entry(2, 0), &zero);
            }
        }
    }
}
