mod common;

use common::*;
use hhgabber_core::poly::{gcd, squarefree_part, MonomialOrder, Polynomial};
use proptest::prelude::*;

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Lex,
        MonomialOrder::GrevLex,
        MonomialOrder::Weighted(vec![2, 0, 1]),
        MonomialOrder::Weighted(vec![0, 1, 1]),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(f in poly(xyz(), 2, 4), g in poly(xyz(), 2, 4), h in poly(xyz(), 2, 4)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(f.ring()), f.clone());
    }

    #[test]
    fn leibniz(f in poly(xyz(), 3, 4), g in poly(xyz(), 3, 4), v in 0usize..3) {
        let lhs = (&f * &g).diff(v).unwrap();
        let rhs = &(&f.diff(v).unwrap() * &g) + &(&f * &g.diff(v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_orders(a in monomial(3, 3), b in monomial(3, 3), c in monomial(3, 3)) {
        for o in orders() {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert!(o.compare(&a, &a.mul(&c)) != std::cmp::Ordering::Greater);
            if ab.is_lt() && o.compare(&b, &c).is_lt() {
                prop_assert!(o.compare(&a, &c).is_lt());
            }
        }
    }

    #[test]
    fn squarefree(f in nonzero_poly(xy(), 2, 3), g in nonzero_poly(xy(), 1, 3)) {
        let s = squarefree_part(&f).unwrap();
        prop_assert!(f.div_exact(&s).is_some());
        prop_assert_eq!(squarefree_part(&s).unwrap(), s.clone());
        let sq = &(&f * &f) * &g;
        let lhs = squarefree_part(&sq).unwrap();
        let rhs = squarefree_part(&(&s * &squarefree_part(&g).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides(f in nonzero_poly(xy(), 2, 3), g in nonzero_poly(xy(), 2, 3), h in nonzero_poly(xy(), 1, 2)) {
        let d = gcd(&(&f * &h), &(&g * &h)).unwrap();
        prop_assert!((&f * &h).div_exact(&d).is_some());
        prop_assert!((&g * &h).div_exact(&d).is_some());
        prop_assert!(d.div_exact(&h.monic(&MonomialOrder::Lex)).is_some());
    }

    #[test]
    fn text_round_trip(f in poly(xyz(), 3, 5)) {
        prop_assert_eq!(Polynomial::parse(f.ring(), &f.to_string()).unwrap(), f);
    }
}
