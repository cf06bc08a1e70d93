mod common;

use common::*;
use hhgabber_core::hochschild::{
    binomial, koszul_tor, module_action, multiplicity, subquotient_dimension, tau_class,
    KoszulComplex,
};
use hhgabber_core::ideal::Ideal;
use hhgabber_core::poisson::{canonical_symplectic, Bivector};
use hhgabber_core::poly::{rat, PolyRing, Polynomial};
use proptest::prelude::*;

#[test]
fn koszul_complexes() {
    for n in 1..=3 {
        assert!(KoszulComplex::diagonal(n).d_squared_vanishes());
        for i in 0..=n + 1 {
            assert_eq!(koszul_tor(n, i).rank, binomial(n, i));
        }
    }
}

/// Chains `I ⊆ J` of ideals primary to the origin of the cotangent plane.
const CHAINS: [(&[&str], &[&str]); 6] = [
    (&["x^2", "xi"], &["x", "xi"]),
    (&["x^2", "x*xi", "xi^2"], &["x", "xi"]),
    (&["x^3", "xi^2"], &["x^2", "xi"]),
    (&["x^2", "xi^2"], &["x^2", "x*xi", "xi^2"]),
    (&["x^3", "x*xi", "xi^3"], &["x^2", "xi"]),
    (&["x^2 + xi^3", "x*xi"], &["x", "xi"]),
];

#[test]
fn devissage() {
    let ring = PolyRing::with_cotangent(["x", "xi"]).unwrap();
    for (small, big) in CHAINS {
        let i = Ideal::parse(&ring, small).unwrap();
        let j = Ideal::parse(&ring, big).unwrap();
        let quotient = subquotient_dimension(&j, &i).unwrap();
        assert_eq!(
            multiplicity(&i).unwrap(),
            multiplicity(&j).unwrap() + quotient,
            "{small:?} in {big:?}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_never_vanishes(q1 in poly(PolyRing::cotangent(2), 2, 3), q2 in poly(PolyRing::cotangent(2), 2, 3)) {
        // x1 - q1(xi1, xi2), x2 - q2(xi1, xi2)
        let ring = PolyRing::cotangent(2);
        let strip = |q: &Polynomial| q.map_monomials(&ring, |m| {
            let mut e = m.exponents().to_vec();
            e[0] = 0;
            e[1] = 0;
            hhgabber_core::poly::Monomial::new(e)
        });
        let fs = [
            &Polynomial::var(&ring, 0) - &strip(&q1),
            &Polynomial::var(&ring, 1) - &strip(&q2),
        ];
        let tau = tau_class(&fs).unwrap();
        prop_assert!(!tau.is_zero());
        prop_assert_eq!(tau.hh_degree(), 0);
    }

    #[test]
    fn action_is_linear(n in 1i64..6, c in poly(PolyRing::cotangent(1), 1, 2)) {
        let ring = PolyRing::cotangent(1);
        let fs = [Polynomial::var(&ring, 0), Polynomial::var(&ring, 1)];
        let tau = tau_class(&fs).unwrap();
        for th in [
            canonical_symplectic(&ring).unwrap(),
            Bivector::new(&ring, [(0, 1, c.clone())]).unwrap(),
        ] {
            let scaled = module_action(&th, &tau.scale(&rat(n, 1))).unwrap();
            let once = module_action(&th, &tau).unwrap();
            prop_assert_eq!(scaled.clone(), once.scale(&rat(n, 1)));
            prop_assert_eq!(scaled.is_zero(), once.is_zero());
        }
    }
}
