mod common;

use fdb::arith::Rational;
use fdb::series::{compose, revert, ExpSeries};
use num_traits::One;
use proptest::prelude::*;

use common::{compose_by_horner, revert_by_iteration};

fn series(order: usize, unital: bool) -> impl Strategy<Value = ExpSeries> {
    prop::collection::vec((-7i64..8, 1i64..5), order).prop_map(move |v| {
        let mut c: Vec<Rational> = v.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect();
        if unital {
            c[0] = Rational::one();
        }
        ExpSeries::new(c).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bell_composition_matches_horner(f in series(7, false), g in series(7, false)) {
        prop_assert_eq!(compose(&f, &g).unwrap(), compose_by_horner(&f, &g));
    }

    #[test]
    fn lagrange_reversion_matches_fixed_point(f in series(7, true)) {
        prop_assert_eq!(revert(&f).unwrap(), revert_by_iteration(&f));
    }
}
