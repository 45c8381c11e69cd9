mod common;

use common::{closed_ideal_of_order, monomials_up_to, unimodular};
use proptest::prelude::*;
use zlab::matrix::substitute;
use zlab::{
    build_mr, cofree_colength, member_mr, FreeVector, LocalIdeal, MonomialIdeal, Poly,
    DEFAULT_TRUNCATION_CAP,
};

fn rank_and_ideal() -> impl Strategy<Value = (usize, MonomialIdeal)> {
    (2usize..=4).prop_flat_map(|r| (Just(r), closed_ideal_of_order(r as u32)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fitting_ideals_are_maximal_powers_then_i((r, i) in rank_and_ideal()) {
        let m = build_mr(&i, r).unwrap();
        prop_assert!(m.entries_in_maximal());
        for k in 1..=r {
            let target = if k < r { MonomialIdeal::mpower(k as u32) } else { i.clone() };
            let fit = m.fitting_ideal(k).unwrap();
            prop_assert!(fit.equals(&LocalIdeal::from_monomial(&target), DEFAULT_TRUNCATION_CAP).unwrap(), "k = {}", k);
        }
    }

    #[test]
    fn modules_are_extremal((r, i) in rank_and_ideal()) {
        let m = build_mr(&i, r).unwrap();
        let by_truncation = m.cofree_colength_by_truncation(DEFAULT_TRUNCATION_CAP).unwrap();
        prop_assert_eq!(by_truncation, cofree_colength(&i, r).unwrap());
        prop_assert_eq!(i.colength() - by_truncation, (r * (r - 1) / 2) as u64);
    }

    #[test]
    fn membership_agrees_with_truncation(r in 2usize..=3, i in closed_ideal_of_order(3)) {
        let m = build_mr(&i, r).unwrap();
        let n = i.mem_index();
        prop_assert!(m.contains_mpower_free(n));
        for c in 0..r {
            for mono in monomials_up_to(n + 1) {
                let v = FreeVector::unit(r, c).scale(&Poly::monomial(mono));
                prop_assert_eq!(
                    member_mr(&v, &i, r).unwrap(),
                    m.contains_mod_mpower(&v, n).unwrap(),
                    "{} e{}", mono, c + 1
                );
            }
        }
    }

    #[test]
    fn coordinate_change_preserves_invariants(q in unimodular(), (r, i) in rank_and_ideal()) {
        prop_assume!(r <= 3);
        let m = build_mr(&i, r).unwrap();
        let moved = m.change_coords(&q).unwrap();
        prop_assert_eq!(
            moved.cofree_colength_by_truncation(DEFAULT_TRUNCATION_CAP).unwrap(),
            cofree_colength(&i, r).unwrap()
        );
        let image = LocalIdeal::new(
            i.generators().iter().map(|g| substitute(&Poly::monomial(*g), &q).unwrap()),
        ).unwrap();
        prop_assert!(moved.fitting_ideal(r).unwrap().equals(&image, DEFAULT_TRUNCATION_CAP).unwrap());
    }
}

#[test]
fn maximal_ideal_times_free_module_lies_in_m_r_of_powers() {
    for r in 2..=5 {
        let i = MonomialIdeal::mpower(r as u32);
        for c in 0..r {
            for var in [Poly::x(), Poly::y()] {
                assert!(member_mr(&FreeVector::unit(r, c).scale(&var), &i, r).unwrap());
            }
            assert!(!member_mr(&FreeVector::unit(r, c), &i, r).unwrap());
        }
    }
}
