#![allow(dead_code)]

use std::sync::Arc;

use hhgabber_core::poly::{rat, Monomial, PolyRing, Polynomial};
use hhgabber_core::weyl::WeylOperator;
use proptest::prelude::*;

/// Up to `terms` terms, each variable's exponent at most `deg`, small
/// rational coefficients.
pub fn poly(ring: Arc<PolyRing>, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.arity();
    prop::collection::vec(
        (prop::collection::vec(0..=deg, n), -4i64..=4, 1i64..=3),
        0..=terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            &ring,
            ts.into_iter().map(|(e, a, b)| (Monomial::new(e), rat(a, b))),
        )
    })
}

pub fn nonzero_poly(ring: Arc<PolyRing>, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(ring, deg, terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// Operator in `D_n`, every exponent at most `deg`.
pub fn weyl(n: usize, deg: u32, terms: usize) -> impl Strategy<Value = WeylOperator> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, 2 * n), -4i64..=4, 1i64..=2),
        0..=terms,
    )
    .prop_map(move |ts| {
        WeylOperator::from_terms(n, ts.into_iter().map(|(e, a, b)| (Monomial::new(e), rat(a, b))))
    })
}

pub fn nonzero_weyl(n: usize, deg: u32, terms: usize) -> impl Strategy<Value = WeylOperator> {
    weyl(n, deg, terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn monomial(n: usize, deg: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=deg, n).prop_map(Monomial::new)
}

pub fn xy() -> Arc<PolyRing> {
    PolyRing::new(["x", "y"]).unwrap()
}

pub fn xyz() -> Arc<PolyRing> {
    PolyRing::new(["x", "y", "z"]).unwrap()
}
