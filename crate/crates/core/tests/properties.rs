//! Randomised round trips and algebraic identities.

mod common;

use ciani_core::exactnum::{parse_rational, parse_rational_list, prime_power, rat};
use ciani_core::{format_rational, CianiTuple, Rational, StandardModel};
use common::*;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn model() -> impl Strategy<Value = StandardModel> {
    proptest::array::uniform6(rational()).prop_map(StandardModel::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_text_round_trip(q in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q.clone());
        let unicode = format_rational(&q).replace('-', "\u{2212}");
        prop_assert_eq!(parse_rational(&unicode).unwrap(), q);
    }

    #[test]
    fn tuple_json_round_trip(t in proptest::array::uniform4(rational())) {
        let t = CianiTuple::from_array(t);
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<CianiTuple>(&json).unwrap(), t.clone());
        let list = t.to_array().iter().map(format_rational).collect::<Vec<_>>().join(",");
        prop_assert_eq!(CianiTuple::from_slice(&parse_rational_list(&list).unwrap()).unwrap(), t);
    }

    #[test]
    fn model_json_round_trip(m in model()) {
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<StandardModel>(&json).unwrap(), m);
    }

    #[test]
    fn invariants_match_longhand(m in model()) {
        prop_assert_eq!(m.invariants().to_array(), oracle_invariants(&m));
        prop_assert_eq!(m.discriminant(), oracle_discriminant(&oracle_invariants(&m)));
    }

    #[test]
    fn discriminant_factors_through_pair_discriminants(m in model()) {
        let [da, db, dc] = m.pair_discriminants();
        prop_assert_eq!(m.invariants().i6, da * db * dc);
    }

    #[test]
    fn weighted_scaling_is_projective(t in proptest::array::uniform4(rational()), l in rational()) {
        let t = CianiTuple::from_array(t);
        prop_assume!(l != rat(0) && t.i3 != rat(0));
        prop_assert_eq!(t.projectively_equal(&t.weighted_scale(&l)), Ok(true));
    }

    #[test]
    fn normalisation_is_scale_invariant(
        t in proptest::array::uniform4(-500i64..500),
        k in -3i64..4,
        pi in 0usize..3,
    ) {
        let p = [5u64, 7, 11][pi];
        let t = CianiTuple::from_ints(t);
        prop_assume!(!t.is_zero());
        let a = t.normalize_at(p).unwrap();
        let b = t.weighted_scale(&prime_power(p, k)).normalize_at(p).unwrap();
        prop_assert_eq!(&a.valuations, &b.valuations);
        prop_assert_eq!(a.tuple, b.tuple);
        prop_assert_eq!(b.shift, a.shift + rat(k));
    }
}
