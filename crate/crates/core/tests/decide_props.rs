mod common;

use common::closed_ideal;
use proptest::prelude::*;
use zlab::{
    check_pair, decide_rank3, enumerate_splits, exists_rank_r, MonomialIdeal, Reason, Verdict,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn check_pair_is_symmetric(j in closed_ideal(2, 4), k in closed_ideal(2, 4)) {
        let a = check_pair(&j, &k).unwrap();
        let b = check_pair(&k, &j).unwrap();
        prop_assert_eq!((a.cond_a, a.cond_b), (b.cond_a, b.cond_b));
        prop_assert_eq!([a.lengths[0], a.lengths[2], a.lengths[1], a.lengths[3]], b.lengths);
    }

    #[test]
    fn rank3_decision_matches_general_rank(i in closed_ideal(4, 4)) {
        let a = decide_rank3(&i).unwrap();
        let b = exists_rank_r(&i, 3).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.reason, b.reason);
    }

    #[test]
    fn order_above_rank_always_exists(i in closed_ideal(4, 4), r in 2usize..=5) {
        prop_assume!(i.order() as usize > r);
        prop_assert_eq!(exists_rank_r(&i, r).unwrap().verdict, Verdict::EXISTS);
    }

    #[test]
    fn splits_recompose(i in closed_ideal(4, 4)) {
        let ord = i.order();
        for r1 in 1..ord {
            for s in enumerate_splits(&i, r1, ord - r1).unwrap() {
                prop_assert_eq!(s.j.product(&s.k), i.clone());
                prop_assert_eq!((s.j.order(), s.k.order()), (r1, ord - r1));
                prop_assert!(s.j.is_integrally_closed() && s.k.is_integrally_closed());
            }
        }
    }

    #[test]
    fn verdicts_follow_the_splits(i in closed_ideal(4, 4), r in 2usize..=4) {
        prop_assume!(i.order() as usize == r);
        let d = exists_rank_r(&i, r).unwrap();
        let qualifying = d.splits.iter().any(|s| s.check.qualifies());
        let expected = match (qualifying, r) {
            (false, _) => (Verdict::EXISTS, Reason::NoQualifyingSplit),
            (true, 2 | 3) => (Verdict::NOT_EXISTS, Reason::QualifyingSplit),
            (true, _) => (Verdict::UNKNOWN, Reason::RankAbove3Inconclusive),
        };
        prop_assert_eq!((d.verdict, d.reason), expected);
    }
}

#[test]
fn maximal_powers_do_not_exist_in_low_rank() {
    assert_eq!(
        decide_rank3(&MonomialIdeal::mpower(3)).unwrap().verdict,
        Verdict::NOT_EXISTS
    );
    for r in 2..=3 {
        assert_eq!(
            exists_rank_r(&MonomialIdeal::mpower(r as u32), r)
                .unwrap()
                .verdict,
            Verdict::NOT_EXISTS
        );
    }
}
