use gonal_bn::oracle::{certify, enumerate_vectors, window_count, EnumWindow};
use gonal_bn::SplittingVector;
use proptest::prelude::*;

fn vector_with(len: usize, degree: i64) -> impl Strategy<Value = SplittingVector> {
    prop::collection::vec(-8i64..=8, len - 1).prop_map(move |mut e| {
        let rest = degree - e.iter().sum::<i64>();
        e.push(rest);
        SplittingVector::new(e).unwrap()
    })
}

fn class() -> impl Strategy<Value = (usize, i64)> {
    (1usize..=6, -20i64..=20)
}

fn triple() -> impl Strategy<Value = (SplittingVector, SplittingVector, SplittingVector)> {
    class().prop_flat_map(|(n, d)| (vector_with(n, d), vector_with(n, d), vector_with(n, d)))
}

fn dom(a: &SplittingVector, b: &SplittingVector) -> bool {
    a.dominates(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn dominance_is_a_partial_order((a, b, c) in triple()) {
        prop_assert!(dom(&a, &a));
        if dom(&a, &b) && dom(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if dom(&a, &b) && dom(&b, &c) {
            prop_assert!(dom(&a, &c));
        }
    }

    #[test]
    fn balanced_is_the_unique_maximum((n, d) in class(), seed in any::<u64>()) {
        let bal = SplittingVector::balanced(n, d).unwrap();
        let mut e: Vec<i64> = (0..n as u64 - 1).map(|i| ((seed >> (i * 5)) % 17) as i64 - 8).collect();
        e.push(d - e.iter().sum::<i64>());
        let v = SplittingVector::new(e).unwrap();
        prop_assert!(dom(&bal, &v));
        prop_assert_eq!(dom(&v, &bal), v == bal);
        prop_assert!(bal.is_balanced());
        prop_assert!(bal.cover_moves_up().is_empty());
    }

    #[test]
    fn cohomology_monotone_under_cover_moves(v in class().prop_flat_map(|(n, d)| vector_with(n, d))) {
        for u in v.cover_moves_up() {
            prop_assert!(dom(&u, &v));
            prop_assert!(u.h0() <= v.h0());
            prop_assert!(u.h1() <= v.h1());
            prop_assert_eq!(u.magnitude() < v.magnitude(), true);
        }
    }

    #[test]
    fn euler_characteristic(v in class().prop_flat_map(|(n, d)| vector_with(n, d))) {
        prop_assert_eq!(v.h0() - v.h1(), v.degree() + v.len() as i64);
    }

    #[test]
    fn magnitude_zero_iff_balanced(v in class().prop_flat_map(|(n, d)| vector_with(n, d))) {
        prop_assert_eq!(v.magnitude() == 0, v.is_balanced());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_restricted_partition_count(
        len in 1usize..=5, lo in -4i64..=0, width in 0i64..=6, shift in 0i64..=30,
    ) {
        let hi = lo + width;
        let degree = len as i64 * lo + shift.min(len as i64 * width);
        let w = EnumWindow::new(len, degree, lo, hi).unwrap();
        let all: Vec<_> = enumerate_vectors(&w).collect();
        prop_assert!(all.windows(2).all(|p| p[0] < p[1]));
        prop_assert_eq!(all.len() as u128, window_count(&w));
    }

    #[test]
    fn certified_vectors_have_no_admissible_cover(
        v in class().prop_flat_map(|(n, d)| vector_with(n, d)), r in 0i64..=3,
    ) {
        if v.h0() > r && certify(&v, r) {
            prop_assert!(v.cover_moves_up().iter().all(|u| u.h0() < r + 1));
        }
    }
}
