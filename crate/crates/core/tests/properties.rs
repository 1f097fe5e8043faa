use filterpaths::closed_form::{count_c, multiplicity, poly_p, poly_q};
use filterpaths::lattice::{Arrangement, Direction, Restriction, RestrictionKind, Semantics};
use filterpaths::oracle::{dp_count, enumerate_weight_sum, PathQuery};
use filterpaths::ExactInt;
use proptest::prelude::*;

const KINDS: [RestrictionKind; 4] = [
    RestrictionKind::WallLeft,
    RestrictionKind::WallRight,
    RestrictionKind::Filter1,
    RestrictionKind::Filter2,
];

fn semantics() -> impl Strategy<Value = Semantics> {
    prop_oneof![
        Just(Semantics::LandingDoubled),
        Just(Semantics::PaperLiteral)
    ]
}

fn arrangement() -> impl Strategy<Value = Arrangement> {
    (
        prop::collection::vec((0..4usize, -6i64..=6), 0..=3),
        semantics(),
    )
        .prop_filter_map("restrictions must not overlap", |(raw, sem)| {
            let mut rs: Vec<_> = raw
                .into_iter()
                .map(|(k, axis)| Restriction {
                    kind: KINDS[k],
                    axis,
                })
                .collect();
            rs.sort_by_key(|r| r.axis);
            Arrangement::new(rs, sem).ok()
        })
}

/// A start column, a row, and an endpoint of matching parity.
fn endpoint(max_row: i64) -> impl Strategy<Value = (i64, i64, i64)> {
    (-3i64..=3, 0..=max_row)
        .prop_flat_map(|(start, n)| (Just(start), Just(n), 0..=n))
        .prop_map(|(start, n, i)| (start, start - n + 2 * i, n))
}

fn dp(arr: &Arrangement, start: i64, m: i64, n: i64) -> ExactInt {
    dp_count(&PathQuery::starting_at(start, m, n, arr.clone())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dp_matches_enumeration(arr in arrangement(), (start, m, n) in endpoint(14)) {
        let q = PathQuery::starting_at(start, m, n, arr);
        let dp = dp_count(&q).unwrap();
        prop_assert!(dp >= ExactInt::from(0));
        prop_assert_eq!(dp, enumerate_weight_sum(&q).unwrap());
    }

    #[test]
    fn translation_invariance(arr in arrangement(), (start, m, n) in endpoint(30), by in -20i64..=20) {
        let q = PathQuery::starting_at(start, m, n, arr);
        prop_assert_eq!(dp_count(&q).unwrap(), dp_count(&q.shifted(by)).unwrap());
    }

    #[test]
    fn wall_reflection(a in -6i64..=0, n in 0i64..=30, i in 0i64..=30) {
        let m = -n + 2 * (i % (n + 1));
        prop_assume!(m >= a);
        let walled = Arrangement::new(vec![Restriction::wall_left(a)], Semantics::LandingDoubled).unwrap();
        let free = Arrangement::unrestricted();
        let reflected_start = 2 * (a - 1);
        prop_assert_eq!(dp(&walled, 0, m, n), dp(&free, 0, m, n) - dp(&free, reflected_start, m, n));
    }

    #[test]
    fn row_recurrence(arr in arrangement(), (start, m, n) in endpoint(30)) {
        prop_assume!(n > 0);
        let mut expected = ExactInt::from(0);
        for (from, dir) in [(m - 1, Direction::Right), (m + 1, Direction::Left)] {
            if let Some(w) = arr.step_weight(from, dir) {
                expected += dp(&arr, start, from, n - 1) * w;
            }
        }
        prop_assert_eq!(dp(&arr, start, m, n), expected);
    }

    #[test]
    fn semantics_differ_only_next_to_type2_filters(arr in arrangement(), x in -10i64..=10) {
        let landing = arr.clone().with_semantics(Semantics::LandingDoubled);
        let literal = arr.clone().with_semantics(Semantics::PaperLiteral);
        let near_f2 = arr
            .restrictions()
            .iter()
            .any(|r| r.kind == RestrictionKind::Filter2 && (x == r.axis || x == r.axis - 1));
        let right_differs = landing.step_weight(x, Direction::Right) != literal.step_weight(x, Direction::Right);
        prop_assert_eq!(right_differs, near_f2);
        prop_assert_eq!(landing.step_weight(x, Direction::Left), literal.step_weight(x, Direction::Left));
    }

    #[test]
    fn type1_filters_ignore_semantics(d in -5i64..=5, (start, m, n) in endpoint(24)) {
        let landing = Arrangement::new(vec![Restriction::filter1(d)], Semantics::LandingDoubled).unwrap();
        let literal = landing.clone().with_semantics(Semantics::PaperLiteral);
        prop_assert_eq!(dp(&landing, start, m, n), dp(&literal, start, m, n));
    }

    #[test]
    fn empty_arrangement_is_binomial((start, m, n) in endpoint(40)) {
        prop_assert_eq!(dp(&Arrangement::unrestricted(), start, m, n), count_c(m - start, n));
    }

    #[test]
    fn pq_nondecreasing_in_k(j in 2i64..=10, k in 0i64..=25) {
        prop_assert!(poly_p(j, k + 1).unwrap() >= poly_p(j, k).unwrap());
        prop_assert!(poly_q(j, k + 1).unwrap() >= poly_q(j, k).unwrap());
    }

    #[test]
    fn multiplicity_nonnegative(l in 2i64..=6, n in 0i64..=60, i in 0i64..=60) {
        let m = i % (n + 1);
        prop_assume!((n - m) % 2 == 0);
        prop_assert!(multiplicity(l, m, n).unwrap() >= ExactInt::from(0));
    }

    #[test]
    fn arrangement_text_roundtrip(arr in arrangement()) {
        let text = arr.to_string();
        let parsed: Arrangement = text.parse().unwrap();
        prop_assert_eq!(parsed.restrictions(), arr.restrictions());
    }
}
