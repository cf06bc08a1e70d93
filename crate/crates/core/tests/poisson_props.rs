mod common;

use std::sync::Arc;

use common::*;
use hhgabber_core::ideal::{normal_form, Ideal};
use hhgabber_core::poisson::{
    canonical_symplectic, conormal_determinant, conormal_projection, contract_form,
    deformation_class, Bivector,
};
use hhgabber_core::poly::{MonomialOrder, PolyRing, Polynomial};
use proptest::prelude::*;

fn bivector(ring: Arc<PolyRing>) -> impl Strategy<Value = Bivector> {
    let n = ring.arity();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let k = pairs.len();
    prop::collection::vec(poly(ring.clone(), 1, 2), k).prop_map(move |cs| {
        Bivector::new(&ring, pairs.iter().zip(cs).map(|(&(i, j), c)| (i, j, c))).unwrap()
    })
}

fn t2() -> Arc<PolyRing> {
    PolyRing::cotangent(2)
}

/// `(x_{p_1} - q_1, ..., x_{p_l} - q_l)` with each `q_a` free of the pivots:
/// a regular sequence cutting out a graph.
fn graph_sequence(ring: Arc<PolyRing>) -> impl Strategy<Value = Vec<Polynomial>> {
    let n = ring.arity();
    (1usize..=n.min(3))
        .prop_flat_map(move |l| (Just(l), Just(prop::sample::subsequence((0..n).collect::<Vec<_>>(), l))))
        .prop_flat_map(move |(l, pivots)| {
            let ring = ring.clone();
            (pivots, prop::collection::vec(poly(ring.clone(), 2, 2), l)).prop_map(move |(pivots, qs)| {
                pivots
                    .iter()
                    .zip(qs)
                    .map(|(&p, q)| {
                        let q = q.map_monomials(&ring, |m| {
                            let mut e = m.exponents().to_vec();
                            for &k in &pivots {
                                e[k] = 0;
                            }
                            hhgabber_core::poly::Monomial::new(e)
                        });
                        &Polynomial::var(&ring, p) - &q
                    })
                    .collect()
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn biderivation_and_skew(
        th in bivector(xyz()),
        f in poly(xyz(), 2, 3),
        g in poly(xyz(), 2, 3),
        h in poly(xyz(), 2, 3),
    ) {
        let lhs = th.bracket(&(&f * &g), &h).unwrap();
        let rhs = &(&f * &th.bracket(&g, &h).unwrap()) + &(&g * &th.bracket(&f, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(th.bracket(&f, &g).unwrap(), -&th.bracket(&g, &f).unwrap());
    }

    #[test]
    fn canonical_jacobi(f in poly(t2(), 2, 3), g in poly(t2(), 2, 3), h in poly(t2(), 2, 3)) {
        let th = canonical_symplectic(&t2()).unwrap();
        let b = |a: &Polynomial, c: &Polynomial| th.bracket(a, c).unwrap();
        let sum = &(&b(&f, &b(&g, &h)) + &b(&g, &b(&h, &f))) + &b(&h, &b(&f, &g));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn table_round_trip(th in bivector(xyz())) {
        prop_assert_eq!(deformation_class(&th.table()), th);
    }

    #[test]
    fn generator_test_suffices(
        which in 0usize..4,
        h1 in poly(t2(), 2, 3),
        h2 in poly(t2(), 2, 3),
    ) {
        let fixtures: [&[&str]; 4] = [
            &["x1*xi1"],
            &["x1", "xi2"],
            &["xi1", "xi2^2"],
            &["x1*xi1", "x2*xi2"],
        ];
        let ring = t2();
        let th = canonical_symplectic(&ring).unwrap();
        let ideal = Ideal::parse(&ring, fixtures[which]).unwrap();
        prop_assert!(hhgabber_core::poisson::is_involutive(&ideal, &th).unwrap().is_involutive());
        let gens = ideal.generators();
        for gi in gens {
            for gj in gens {
                let br = th.bracket(&(&h1 * gi), &(&h2 * gj)).unwrap();
                prop_assert!(ideal.contains(&br, &MonomialOrder::GrevLex).unwrap());
            }
        }
    }

    #[test]
    fn projection_and_contraction_agree(th in bivector(t2()), fs in graph_sequence(t2())) {
        let omega = conormal_determinant(&fs).unwrap();
        let eta = conormal_projection(&th, &fs).unwrap();
        let basis = Ideal::new(&t2(), fs.clone()).unwrap().groebner_basis(&MonomialOrder::GrevLex);
        let contraction_zero = match contract_form(&th, &omega) {
            Ok(c) => c.entries().all(|(_, p)| normal_form(p, &basis, &MonomialOrder::GrevLex).is_zero()),
            Err(_) => fs.len() < 2,
        };
        prop_assert_eq!(eta.is_zero(), contraction_zero);
    }
}
