//! Multivariate gcd by recursive content / primitive-part splitting and
//! primitive pseudo-remainder sequences, one variable at a time.
//!
//! Not tuned: coefficient growth is tamed only by taking primitive parts.

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Monic (under lex) greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_ring(g)?;
    Ok(gcd_rec(f, g))
}

/// `f / gcd(f, df/dx_1, ..., df/dx_n)`, made monic under lex.
/// Generates the radical of the principal ideal `(f)` in characteristic 0.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = f.clone();
    for i in 0..f.ring().arity() {
        if g.is_constant() {
            break;
        }
        g = gcd_rec(&g, &f.diff(i)?);
    }
    let q = f.div_exact(&g).expect("gcd divides its argument");
    Ok(q.monic(&MonomialOrder::Lex))
}

fn normalize(f: &Polynomial) -> Polynomial {
    f.monic(&MonomialOrder::Lex)
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return normalize(g);
    }
    if g.is_zero() {
        return normalize(f);
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.ring());
    }
    let arity = f.ring().arity();
    let v = (0..arity)
        .rev()
        .find(|&i| f.uses_var(i) || g.uses_var(i))
        .expect("non-constant polynomial uses some variable");
    match (f.uses_var(v), g.uses_var(v)) {
        (false, _) => gcd_rec(f, &content(g, v)),
        (_, false) => gcd_rec(&content(f, v), g),
        _ => {
            let cf = content(f, v);
            let cg = content(g, v);
            let c = gcd_rec(&cf, &cg);
            let mut a = f.div_exact(&cf).expect("content divides");
            let mut b = g.div_exact(&cg).expect("content divides");
            if a.degree_in(v) < b.degree_in(v) {
                std::mem::swap(&mut a, &mut b);
            }
            while !b.is_zero() {
                let r = pseudo_remainder(&a, &b, v);
                a = b;
                b = if r.is_zero() { r } else { primitive_part(&r, v) };
            }
            normalize(&(&c * &primitive_part(&a, v)))
        }
    }
}

/// Coefficients of `f` viewed as a polynomial in `v`, indexed by `v`-degree.
fn coefficients_in(f: &Polynomial, v: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(f.ring()); f.degree_in(v) as usize + 1];
    for (m, c) in f.terms() {
        let k = m.exponents()[v] as usize;
        let mut e = m.exponents().to_vec();
        e[v] = 0;
        out[k] = &out[k] + &Polynomial::monomial(f.ring(), Monomial::new(e), c.clone());
    }
    out
}

fn content(f: &Polynomial, v: usize) -> Polynomial {
    let mut c = Polynomial::zero(f.ring());
    for coef in coefficients_in(f, v).into_iter().filter(|p| !p.is_zero()) {
        c = gcd_rec(&c, &coef);
        if c.is_constant() {
            break;
        }
    }
    c
}

fn primitive_part(f: &Polynomial, v: usize) -> Polynomial {
    let c = content(f, v);
    normalize(&f.div_exact(&c).expect("content divides"))
}

fn leading_coefficient_in(f: &Polynomial, v: usize) -> Polynomial {
    coefficients_in(f, v).pop().expect("nonzero polynomial")
}

fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = leading_coefficient_in(b, v);
    let arity = a.ring().arity();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let shift = Monomial::var(arity, v, r.degree_in(v) - db);
        let lr = leading_coefficient_in(&r, v);
        let t = (&lr * b).mul_monomial(&shift, &num_traits::One::one());
        r = &(&lb * &r) - &t;
    }
    r
}
