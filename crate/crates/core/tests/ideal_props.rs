mod common;

use common::*;
use hhgabber_core::ideal::{is_groebner_basis, is_reduced_basis, normal_form, Ideal};
use hhgabber_core::poly::MonomialOrder;
use proptest::prelude::*;

fn orders() -> [MonomialOrder; 3] {
    [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Weighted(vec![1, 2, 1])]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bases_are_reduced_groebner(
        g1 in nonzero_poly(xyz(), 2, 3),
        g2 in nonzero_poly(xyz(), 2, 3),
    ) {
        let ideal = Ideal::new(&xyz(), vec![g1.clone(), g2.clone()]).unwrap();
        for o in orders() {
            let b = ideal.groebner_basis(&o);
            prop_assert!(is_groebner_basis(&b, &o));
            prop_assert!(is_reduced_basis(&b, &o));
            for g in [&g1, &g2] {
                prop_assert!(normal_form(g, &b, &o).is_zero());
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent(
        g1 in nonzero_poly(xy(), 2, 3),
        g2 in nonzero_poly(xy(), 2, 3),
        f in poly(xy(), 3, 5),
    ) {
        let ideal = Ideal::new(&xy(), vec![g1, g2]).unwrap();
        let o = MonomialOrder::GrevLex;
        let b = ideal.groebner_basis(&o);
        let r = normal_form(&f, &b, &o);
        prop_assert_eq!(normal_form(&r, &b, &o), r.clone());
        prop_assert!(ideal.contains(&(&f - &r), &o).unwrap());
    }

    #[test]
    fn membership_is_order_independent(
        g1 in nonzero_poly(xyz(), 2, 3),
        g2 in nonzero_poly(xyz(), 2, 3),
        h1 in poly(xyz(), 1, 2),
        h2 in poly(xyz(), 1, 2),
        r in poly(xyz(), 1, 2),
    ) {
        let ideal = Ideal::new(&xyz(), vec![g1.clone(), g2.clone()]).unwrap();
        let member = &(&h1 * &g1) + &(&h2 * &g2);
        let candidate = &member + &r;
        let verdicts: Vec<bool> = orders()
            .iter()
            .map(|o| ideal.contains(&candidate, o).unwrap())
            .collect();
        prop_assert!(verdicts.iter().all(|&v| v == verdicts[0]));
        for o in orders() {
            prop_assert!(ideal.contains(&member, &o).unwrap());
        }
    }

    #[test]
    fn radical_contains_the_ideal(g1 in nonzero_poly(xy(), 2, 2), k in 1u32..3) {
        let ideal = Ideal::new(&xy(), vec![g1.pow(k + 1)]).unwrap();
        prop_assert!(ideal.radical_contains(&g1).unwrap());
    }
}
