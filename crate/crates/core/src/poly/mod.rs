//! Sparse multivariate polynomials over the rationals.

mod gcd;
mod order;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};
use crate::text;

pub use gcd::{gcd, squarefree_part};
pub use order::MonomialOrder;

pub type Rational = BigRational;

/// Variables of a polynomial ring, optionally split into base `x` and fiber
/// `xi` halves (the cotangent ring `k[x, xi]`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    cotangent: bool,
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::build(names.into_iter().map(Into::into).collect(), false)
    }

    /// Ring whose first half are base coordinates and second half the dual
    /// fiber coordinates, paired positionally.
    pub fn with_cotangent<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        Self::build(names.into_iter().map(Into::into).collect(), true)
    }

    /// `k[x1..xn, xi1..xin]` with the cotangent split.
    pub fn cotangent(n: usize) -> Arc<Self> {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("xi{i}")));
        Self::with_cotangent(names).expect("well-formed cotangent ring")
    }

    fn build(names: Vec<String>, cotangent: bool) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidRing("variable names must be distinct".into()));
        }
        if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
            return Err(Error::InvalidRing(format!("`{bad}` is not an identifier")));
        }
        if cotangent && names.len() % 2 != 0 {
            return Err(Error::InvalidRing(
                "a cotangent ring needs an even number of variables".into(),
            ));
        }
        Ok(Arc::new(Self { names, cotangent }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_cotangent(&self) -> bool {
        self.cotangent
    }

    /// Number of `(x_i, xi_i)` pairs, if the ring carries the cotangent split.
    pub fn cotangent_pairs(&self) -> Option<usize> {
        self.cotangent.then_some(self.names.len() / 2)
    }

    /// Append one variable whose name does not clash with existing ones.
    /// The new variable has index `arity()` in the returned ring.
    pub(crate) fn extend_fresh(&self, stem: &str) -> Arc<Self> {
        let mut candidate = stem.to_string();
        let mut k = 0;
        while self.index_of(&candidate).is_some() {
            k += 1;
            candidate = format!("{stem}{k}");
        }
        let mut names = self.names.clone();
        names.push(candidate);
        Arc::new(Self {
            names,
            cotangent: false,
        })
    }

    /// Ring on the variables not in `drop`, in their original order.
    pub(crate) fn without(&self, drop: &BTreeSet<usize>) -> Result<Arc<Self>> {
        let names = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, n)| n.clone())
            .collect::<Vec<_>>();
        Self::build(names, false)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; arity];
        e[index] = exp;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials. Panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, if exact.
    pub fn div(&self, divisor: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Text form `x^2*y` under the given names; empty for the unit monomial.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{e}", names[i])),
            }
        }
        parts.join("*")
    }
}

/// A polynomial with exact rational coefficients in a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.arity(), index, 1), Rational::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sum of terms; repeated monomials are combined and zeros dropped.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
            add_into(&mut map, m, c);
        }
        Self {
            ring: ring.clone(),
            terms: map,
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> std::result::Result<Self, ParseError> {
        let mut out = BTreeMap::new();
        for term in text::parse_terms(text)? {
            let mut exps = vec![0u32; ring.arity()];
            for f in &term.factors {
                let i = ring.index_of(&f.name).ok_or_else(|| {
                    ParseError::new(f.line, f.column, format!("unknown variable `{}`", f.name))
                })?;
                exps[i] = exps[i].checked_add(f.exp).ok_or_else(|| {
                    ParseError::new(f.line, f.column, "exponent overflow")
                })?;
            }
            add_into(&mut out, Monomial(exps), term.coef);
        }
        Ok(Self {
            ring: ring.clone(),
            terms: out,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Scale so the leading coefficient under `order` is 1. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Ok((_, lc)) => self.scale(&lc.recip()),
            Err(_) => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.names.join(" "),
                other.ring.names.join(" ")
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                add_into(&mut terms, m.mul(n), a * b);
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in variable `var`.
    pub fn diff(&self, var: usize) -> Result<Self> {
        if var >= self.ring.arity() {
            return Err(Error::IndexOutOfRange {
                index: var,
                arity: self.ring.arity(),
            });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            add_into(&mut terms, m2, c * Rational::from_integer(e.into()));
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let order = MonomialOrder::Lex;
        let (dm, dc) = divisor.leading_term(&order).ok()?;
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.ring);
        while let Ok((rm, rc)) = rem.leading_term(&order) {
            let q = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            add_into(&mut quo.terms, q, qc);
        }
        Some(quo)
    }

    /// Apply a monomial map into another ring, summing coefficients.
    pub fn map_monomials(
        &self,
        target: &Arc<PolyRing>,
        f: impl Fn(&Monomial) -> Monomial,
    ) -> Self {
        Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (f(m), c.clone())),
        )
    }

    /// Rebind to an equal ring (by value).
    pub fn in_ring(&self, ring: &Arc<PolyRing>) -> Result<Self> {
        if **ring != *self.ring {
            return Err(Error::RingMismatch("cannot rebind to a different ring".into()));
        }
        Ok(Self {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }
}

fn add_into(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Polynomial {
    /// Text form with terms in descending `order`.
    pub fn render(&self, order: &MonomialOrder) -> String {
        let sorted = self.sorted_terms(order);
        text::join_terms(
            sorted
                .iter()
                .map(|(m, c)| (c, m.render(&self.ring.names))),
        )
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending grevlex order, in the shared text grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

// The operator forms panic on ring mismatch; use the `checked_*` methods
// where the rings are not known to agree.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

/// Convenience for tests and fixtures: `rat(3, 2)` is `3/2`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let r = ring_xy();
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
        assert_eq!(&p(&r, "x+1") * &p(&r, "x+1"), p(&r, "x^2+2*x+1"));
        assert_eq!(&p(&r, "2/3*x") * &p(&r, "3/2*y"), p(&r, "x*y"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p(&ring_xy(), "x");
        let b = Polynomial::var(&PolyRing::new(["x", "z"]).unwrap(), 0);
        assert!(matches!(a.checked_mul(&b), Err(Error::RingMismatch(_))));
        // equal-by-value rings are compatible
        let c = p(&ring_xy(), "y");
        assert_eq!(a.checked_mul(&c).unwrap().to_string(), "x*y");
    }

    #[test]
    fn derivative_examples() {
        let r = ring_xy();
        assert_eq!(p(&r, "x^2*y").diff(0).unwrap(), p(&r, "2*x*y"));
        assert!(p(&r, "x^2").diff(1).unwrap().is_zero());
        assert_eq!(p(&r, "x^3+x").diff(0).unwrap(), p(&r, "3*x^2+1"));
        assert!(matches!(
            p(&r, "x").diff(2),
            Err(Error::IndexOutOfRange { index: 2, arity: 2 })
        ));
    }

    #[test]
    fn leading_term_examples() {
        let r = ring_xy();
        let (m, c) = p(&r, "x+y^2").leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!((m, c), (Monomial::new(vec![1, 0]), Rational::one()));

        let rx = PolyRing::new(["x", "xi"]).unwrap();
        let w = MonomialOrder::Weighted(vec![0, 1]);
        let (m, _) = p(&rx, "x^5+xi").leading_term(&w).unwrap();
        assert_eq!(m, Monomial::new(vec![0, 1]));

        let (m, c) = p(&r, "x^2*y+x*y^2")
            .leading_term(&MonomialOrder::GrevLex)
            .unwrap();
        assert_eq!((m, c), (Monomial::new(vec![2, 1]), Rational::one()));

        assert!(matches!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn display_round_trips() {
        let r = ring_xy();
        let f = p(&r, "x^2*y + 3/2*y - 1");
        assert_eq!(f.to_string(), "x^2*y + 3/2*y - 1");
        assert_eq!(p(&r, &f.to_string()), f);
        assert_eq!(p(&r, "-x + 0*y").to_string(), "-x");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn parse_reports_unknown_names() {
        let err = Polynomial::parse(&ring_xy(), "x + zz").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
    }

    #[test]
    fn exact_division() {
        let r = ring_xy();
        let f = p(&r, "x^2 - y^2");
        assert_eq!(f.div_exact(&p(&r, "x - y")).unwrap(), p(&r, "x + y"));
        assert!(f.div_exact(&p(&r, "x")).is_none());
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(["x", "x"]).is_err());
        assert!(PolyRing::with_cotangent(["x", "y", "z"]).is_err());
        assert!(PolyRing::new(Vec::<String>::new()).is_err());
        let r = PolyRing::cotangent(2);
        assert_eq!(r.names(), ["x1", "x2", "xi1", "xi2"]);
        assert_eq!(r.cotangent_pairs(), Some(2));
    }
}
