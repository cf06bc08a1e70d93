//! Buchberger engine shared by the commutative ring and the Weyl algebra.
//!
//! Elements are term lists sorted descending under the working order. The
//! only algebra-specific operation is left multiplication by a term; both
//! algebras satisfy `LM(m * p) = m * LM(p)`, which is all the engine needs.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Rational};

pub(crate) type Term = (Monomial, Rational);

pub(crate) trait LeftAlgebra {
    /// `c * m * p`, sorted descending under `order`.
    fn left_mul(&self, m: &Monomial, c: &Rational, p: &[Term], order: &MonomialOrder)
        -> Vec<Term>;

    /// Whether coprime leading monomials imply the S-pair reduces to zero.
    /// True for commutative rings only.
    fn coprime_criterion(&self) -> bool;
}

pub(crate) struct Commutative;

impl LeftAlgebra for Commutative {
    fn left_mul(&self, m: &Monomial, c: &Rational, p: &[Term], _: &MonomialOrder) -> Vec<Term> {
        // multiplicative orders keep the shifted list sorted
        p.iter().map(|(k, a)| (k.mul(m), a * c)).collect()
    }

    fn coprime_criterion(&self) -> bool {
        true
    }
}

/// `a - b` for descending term lists.
pub(crate) fn sub(a: &[Term], b: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.compare(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), -b[j].1.clone()));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 - &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), -c.clone())));
    out
}

pub(crate) fn make_monic(p: &mut [Term]) {
    if let Some(lc) = p.first().map(|t| t.1.clone()) {
        if !lc.is_one() {
            let inv = lc.recip();
            for t in p.iter_mut() {
                t.1 *= &inv;
            }
        }
    }
}

/// Full reduction of `p` by `basis`; divisors are tried in list order.
pub(crate) fn normal_form<A: LeftAlgebra>(
    alg: &A,
    p: Vec<Term>,
    basis: &[Vec<Term>],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut p = p;
    let mut rem = Vec::new();
    'outer: while !p.is_empty() {
        for g in basis.iter().filter(|g| !g.is_empty()) {
            if let Some(q) = p[0].0.div(&g[0].0) {
                let c = &p[0].1 / &g[0].1;
                let t = alg.left_mul(&q, &c, g, order);
                p = sub(&p, &t, order);
                continue 'outer;
            }
        }
        rem.push(p.remove(0));
    }
    rem
}

pub(crate) fn s_polynomial<A: LeftAlgebra>(
    alg: &A,
    f: &[Term],
    g: &[Term],
    order: &MonomialOrder,
) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let a = alg.left_mul(&lcm.div(&f[0].0).expect("lcm"), &f[0].1.recip(), f, order);
    let b = alg.left_mul(&lcm.div(&g[0].0).expect("lcm"), &g[0].1.recip(), g, order);
    sub(&a, &b, order)
}

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial
/// descending. Pairs are processed smallest-lcm first (ties by index), with
/// Buchberger's chain criterion and, where valid, the coprime criterion.
pub(crate) fn buchberger<A: LeftAlgebra>(
    alg: &A,
    gens: Vec<Vec<Term>>,
    order: &MonomialOrder,
) -> Vec<Vec<Term>> {
    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<Vec<Term>>, pending: &mut HashSet<(usize, usize)>, mut h: Vec<Term>| {
        make_monic(&mut h);
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pending.insert((i, k));
        }
    };

    for g in gens.into_iter().filter(|g| !g.is_empty()) {
        if g[0].0.is_one() {
            return vec![unit(&g[0].0)];
        }
        push(&mut basis, &mut pending, g);
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
        let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
        order.compare(&la, &lb).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if alg.coprime_criterion() && li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(alg, &basis[i], &basis[j], order);
        let h = normal_form(alg, s, &basis, order);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return vec![unit(&h[0].0)];
        }
        push(&mut basis, &mut pending, h);
    }

    reduce_basis(alg, basis, order)
}

fn unit(one: &Monomial) -> Vec<Term> {
    vec![(Monomial::one(one.arity()), Rational::one())]
}

/// Minimalize, interreduce and sort a Groebner basis.
pub(crate) fn reduce_basis<A: LeftAlgebra>(
    alg: &A,
    basis: Vec<Vec<Term>>,
    order: &MonomialOrder,
) -> Vec<Vec<Term>> {
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vec<Term>> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = normal_form(alg, minimal[i].clone(), &others, order);
        make_monic(&mut g);
        out.push(g);
    }
    out.sort_by(|a, b| order.compare(&b[0].0, &a[0].0));
    out
}

/// Post-hoc check: every S-polynomial reduces to zero (no criteria used).
pub(crate) fn is_groebner<A: LeftAlgebra>(
    alg: &A,
    basis: &[Vec<Term>],
    order: &MonomialOrder,
) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(alg, &basis[i], &basis[j], order);
            if !normal_form(alg, s, basis, order).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Reducedness: monic, and no term of any element divisible by another
/// element's leading monomial.
pub(crate) fn is_reduced(basis: &[Vec<Term>]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        !g.is_empty()
            && g[0].1.is_one()
            && basis.iter().enumerate().all(|(k, h)| {
                k == i || g.iter().all(|(m, _)| !h[0].0.divides(m))
            })
    })
}
