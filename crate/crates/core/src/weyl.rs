//! The Weyl algebra `D_n = k<x_1..x_n, d_1..d_n>` with `[d_i, x_j] = δ_ij`.
//!
//! Operators are stored in normal order `x^a d^b`; a term's key is the
//! exponent vector `(a, b)` of length `2n`, which is also the monomial of its
//! symbol in `k[x, xi]`. Left ideals get Groebner bases under the order
//! filtration weight `(0 | 1)` refined by grevlex, so the symbols of a basis
//! generate the associated graded ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};
use crate::gb::{self, LeftAlgebra, Term};
use crate::ideal::Ideal;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};
use crate::text;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylOperator {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// Names used to read and print operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylNames {
    pub x: Vec<String>,
    pub d: Vec<String>,
}

impl WeylNames {
    /// `x1..xn` and `d1..dn`.
    pub fn standard(n: usize) -> Self {
        Self {
            x: (1..=n).map(|i| format!("x{i}")).collect(),
            d: (1..=n).map(|i| format!("d{i}")).collect(),
        }
    }

    /// Base names from a cotangent ring, derivations `d1..dn`.
    pub fn from_ring(ring: &PolyRing) -> Result<Self> {
        let n = ring.cotangent_pairs().ok_or(Error::MissingCotangent)?;
        Ok(Self {
            x: ring.names()[..n].to_vec(),
            d: (1..=n).map(|i| format!("d{i}")).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    fn all(&self) -> Vec<String> {
        self.x.iter().chain(&self.d).cloned().collect()
    }
}

impl WeylOperator {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::from_terms(n, [(Monomial::one(2 * n), c)])
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// The coordinate `x_i` (0-based).
    pub fn x(n: usize, i: usize) -> Self {
        Self::from_terms(n, [(Monomial::var(2 * n, i, 1), Rational::one())])
    }

    /// The derivation `d_i` (0-based).
    pub fn d(n: usize, i: usize) -> Self {
        Self::from_terms(n, [(Monomial::var(2 * n, n + i, 1), Rational::one())])
    }

    /// Sum of normal-ordered terms `c * x^a d^b`, keyed by `(a, b)`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), 2 * n, "Weyl monomial has wrong length");
            accumulate(&mut map, m, c);
        }
        Self { n, terms: map }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(self.n, other.n))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    /// Product renormalized to `x^a d^b` order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut map = BTreeMap::new();
        for (m, a) in &self.terms {
            for (k, b) in &other.terms {
                for (mm, c) in monomial_product(self.n, m, k) {
                    accumulate(&mut map, mm, c * a * b);
                }
            }
        }
        Ok(Self {
            n: self.n,
            terms: map,
        })
    }

    /// `PQ - QP`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Maximal total degree in the derivations.
    pub fn order(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(|m| d_degree(self.n, m))
            .max()
            .ok_or(Error::ZeroOperator)
    }

    /// Top-order part with `d_i ↦ xi_i`, in `k[x1..xn, xi1..xin]`.
    pub fn principal_symbol(&self) -> Result<Polynomial> {
        self.principal_symbol_in(&PolyRing::cotangent(self.n))
    }

    /// As [`Self::principal_symbol`], in a caller-supplied cotangent ring.
    pub fn principal_symbol_in(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.cotangent_pairs() != Some(self.n) {
            return Err(Error::MissingCotangent);
        }
        let top = self.order()?;
        Ok(Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|(m, _)| d_degree(self.n, m) == top)
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// The terms of `d`-degree exactly `k`, as a polynomial in `k[x, xi]`.
    pub fn homogeneous_symbol(&self, k: u64) -> Polynomial {
        Polynomial::from_terms(
            &PolyRing::cotangent(self.n),
            self.terms
                .iter()
                .filter(|(m, _)| d_degree(self.n, m) == k)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Parse an operator; factors multiply left to right in the algebra, so
    /// `d1*x1` reads as `x1*d1 + 1`.
    pub fn parse(text: &str, names: &WeylNames) -> std::result::Result<Self, ParseError> {
        let n = names.n();
        let mut acc = Self::zero(n);
        for term in text::parse_terms(text)? {
            let mut prod = Self::constant(n, term.coef);
            for f in &term.factors {
                let gen = if let Some(i) = names.x.iter().position(|s| *s == f.name) {
                    Self::x(n, i)
                } else if let Some(i) = names.d.iter().position(|s| *s == f.name) {
                    Self::d(n, i)
                } else {
                    return Err(ParseError::new(
                        f.line,
                        f.column,
                        format!("unknown Weyl generator `{}`", f.name),
                    ));
                };
                for _ in 0..f.exp {
                    prod = prod.mul(&gen).expect("same size");
                }
            }
            acc = acc.add(&prod).expect("same size");
        }
        Ok(acc)
    }

    pub fn render(&self, names: &WeylNames) -> String {
        let all = names.all();
        let order = MonomialOrder::order_filtration(self.n);
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by(|a, b| order.compare(b.0, a.0));
        text::join_terms(sorted.into_iter().map(|(m, c)| (c, m.render(&all))))
    }

    fn to_sorted(&self, order: &MonomialOrder) -> Vec<Term> {
        let mut v: Vec<Term> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&WeylNames::standard(self.n)))
    }
}

impl fmt::Debug for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylOperator({self})")
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(m.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&m);
    }
}

fn d_degree(n: usize, m: &Monomial) -> u64 {
    m.exponents()[n..].iter().map(|&e| u64::from(e)).sum()
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `x^a d^b * x^c d^e = sum_k prod_i C(b_i,k_i) C(c_i,k_i) k_i! x^{a+c-k} d^{b+e-k}`.
fn monomial_product(n: usize, left: &Monomial, right: &Monomial) -> Vec<(Monomial, Rational)> {
    let (a, b) = left.exponents().split_at(n);
    let (c, e) = right.exponents().split_at(n);
    let bounds: Vec<u32> = (0..n).map(|i| b[i].min(c[i])).collect();
    let mut out = Vec::new();
    let mut k = vec![0u32; n];
    loop {
        let mut coef = BigInt::one();
        let mut exps = Vec::with_capacity(2 * n);
        for i in 0..n {
            coef *= binomial(b[i], k[i]) * binomial(c[i], k[i]) * factorial(k[i]);
            exps.push(
                a[i].checked_add(c[i] - k[i])
                    .expect("Weyl exponent overflow"),
            );
        }
        for i in 0..n {
            exps.push(e[i].checked_add(b[i] - k[i]).expect("Weyl exponent overflow"));
        }
        out.push((Monomial::new(exps), Rational::from_integer(coef)));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            k[i] += 1;
            if k[i] <= bounds[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

pub(crate) struct WeylAlgebra {
    pub n: usize,
}

impl LeftAlgebra for WeylAlgebra {
    fn left_mul(&self, m: &Monomial, c: &Rational, p: &[Term], order: &MonomialOrder) -> Vec<Term> {
        let mut map = BTreeMap::new();
        for (k, a) in p {
            for (mm, coef) in monomial_product(self.n, m, k) {
                accumulate(&mut map, mm, coef * a * c);
            }
        }
        let mut v: Vec<Term> = map.into_iter().collect();
        v.sort_by(|x, y| order.compare(&y.0, &x.0));
        v
    }

    fn coprime_criterion(&self) -> bool {
        false
    }
}

/// A cyclic left module `D_n / (D_n P_1 + ... + D_n P_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DModulePresentation {
    n: usize,
    generators: Vec<WeylOperator>,
}

impl DModulePresentation {
    pub fn new(n: usize, generators: Vec<WeylOperator>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Unsupported("a presentation needs at least one generator".into()));
        }
        for g in &generators {
            if g.n != n {
                return Err(Error::SizeMismatch(n, g.n));
            }
            if g.is_zero() {
                return Err(Error::ZeroOperator);
            }
        }
        Ok(Self { n, generators })
    }

    pub fn parse(names: &WeylNames, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| WeylOperator::parse(s, names))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(names.n(), gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[WeylOperator] {
        &self.generators
    }
}

/// The term order used for left ideals: weight `(0 | 1)` refined by grevlex.
pub fn filtration_order(n: usize) -> MonomialOrder {
    MonomialOrder::order_filtration(n)
}

/// Reduced left Groebner basis of the presentation's ideal.
pub fn weyl_groebner(pres: &DModulePresentation) -> Vec<WeylOperator> {
    let order = filtration_order(pres.n);
    let gens = pres.generators.iter().map(|g| g.to_sorted(&order)).collect();
    gb::buchberger(&WeylAlgebra { n: pres.n }, gens, &order)
        .into_iter()
        .map(|t| WeylOperator::from_terms(pres.n, t))
        .collect()
}

/// Every left S-polynomial of `basis` left-reduces to zero.
pub fn is_weyl_groebner(basis: &[WeylOperator]) -> bool {
    let Some(n) = basis.first().map(|b| b.n) else {
        return true;
    };
    let order = filtration_order(n);
    let b: Vec<Vec<Term>> = basis.iter().map(|g| g.to_sorted(&order)).collect();
    gb::is_groebner(&WeylAlgebra { n }, &b, &order) && gb::is_reduced(&b)
}

/// Left normal form against `basis` under the filtration order.
pub fn weyl_normal_form(p: &WeylOperator, basis: &[WeylOperator]) -> WeylOperator {
    let order = filtration_order(p.n);
    let b: Vec<Vec<Term>> = basis.iter().map(|g| g.to_sorted(&order)).collect();
    let r = gb::normal_form(&WeylAlgebra { n: p.n }, p.to_sorted(&order), &b, &order);
    WeylOperator::from_terms(p.n, r)
}

/// The characteristic ideal `J' = gr I` in `k[x1..xn, xi1..xin]`.
pub fn characteristic_ideal(pres: &DModulePresentation) -> Ideal {
    characteristic_ideal_in(pres, &PolyRing::cotangent(pres.n))
        .expect("standard cotangent ring fits")
}

/// As [`characteristic_ideal`], in a caller-supplied cotangent ring.
pub fn characteristic_ideal_in(pres: &DModulePresentation, ring: &Arc<PolyRing>) -> Result<Ideal> {
    let symbols = weyl_groebner(pres)
        .iter()
        .map(|g| g.principal_symbol_in(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, symbols)
}
