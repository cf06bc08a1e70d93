//! Reduced Groebner bases frozen from an independent computer algebra system
//! (coefficients there are integral; compared here after making monic).

use std::sync::Arc;

use hhgabber_core::ideal::{is_groebner_basis, is_reduced_basis, Ideal};
use hhgabber_core::poly::{MonomialOrder, PolyRing, Polynomial};

fn check(names: &[&str], gens: &[&str], order: MonomialOrder, expected: &[&str]) {
    let ring: Arc<PolyRing> = PolyRing::new(names.iter().copied()).unwrap();
    let ideal = Ideal::parse(&ring, gens).unwrap();
    let got = ideal.groebner_basis(&order);
    let want: Vec<Polynomial> = expected
        .iter()
        .map(|s| Polynomial::parse(&ring, s).unwrap().monic(&order))
        .collect();
    assert_eq!(got.len(), want.len(), "basis size for {gens:?} under {order}");
    for w in &want {
        assert!(got.contains(w), "missing {w} in {got:?}");
    }
    assert!(is_groebner_basis(&got, &order));
    assert!(is_reduced_basis(&got, &order));
}

#[test]
fn coprime_pair_grevlex() {
    check(&["x", "y"], &["x^2 - y", "y^2 - x"], MonomialOrder::GrevLex, &["x^2 - y", "y^2 - x"]);
}

#[test]
fn coprime_pair_lex() {
    check(&["x", "y"], &["x^2 - y", "y^2 - x"], MonomialOrder::Lex, &["x - y^2", "y^4 - y"]);
}

#[test]
fn three_quadrics_grevlex() {
    check(
        &["x", "y", "z"],
        &["x^2 + y*z - 2", "y^2 + x*z - 3", "z^2 + x*y - 5"],
        MonomialOrder::GrevLex,
        &[
            "2*z^4 + 2*x*z + 3*y*z - 15*z^2 + 19",
            "2*x*z^2 - 5*x + 2*y - 3*z",
            "2*y*z^2 + 3*x - 5*y - 2*z",
            "x^2 + y*z - 2",
            "x*y + z^2 - 5",
            "y^2 + x*z - 3",
        ],
    );
}

#[test]
fn cyclic_binomials_lex() {
    check(
        &["x", "y", "z"],
        &["x*y - z", "y*z - x", "z*x - y"],
        MonomialOrder::Lex,
        &["x - y*z", "y^2 - z^2", "y*z^2 - y", "z^3 - z"],
    );
}

#[test]
fn twisted_cubic_lex() {
    check(
        &["t", "x", "y"],
        &["x - t^2", "y - t^3"],
        MonomialOrder::Lex,
        &["t^2 - x", "t*x - y", "t*y - x^2", "x^3 - y^2"],
    );
}

#[test]
fn textbook_pair_both_orders() {
    let gens = ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"];
    check(&["x", "y"], &gens, MonomialOrder::GrevLex, &["x^2", "x*y", "2*y^2 - x"]);
    check(&["x", "y"], &gens, MonomialOrder::Lex, &["x - 2*y^2", "y^3"]);
}

#[test]
fn elimination_recovers_the_cubic() {
    let ring = PolyRing::new(["t", "x", "y"]).unwrap();
    let ideal = Ideal::parse(&ring, &["x - t^2", "y - t^3"]).unwrap();
    let e = ideal.eliminate(&[0].into_iter().collect()).unwrap();
    let names: Vec<&str> = e.ring().names().iter().map(String::as_str).collect();
    assert_eq!(names, ["x", "y"]);
    let want = Polynomial::parse(e.ring(), "x^3 - y^2").unwrap();
    assert!(e.contains(&want, &MonomialOrder::GrevLex).unwrap());
    assert_eq!(e.groebner_basis(&MonomialOrder::GrevLex).len(), 1);
}
