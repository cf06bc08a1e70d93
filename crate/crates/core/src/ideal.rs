//! Ideals of a commutative polynomial ring: Groebner bases, membership,
//! radical membership, elimination, quotient dimension and radicals.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::error::{Error, Result};
use crate::gb::{self, Commutative, Term};
use crate::poly::{same_ring, squarefree_part, Monomial, MonomialOrder, PolyRing, Polynomial};

/// An ideal given by generators, with a per-order cache of reduced bases.
/// An empty generator list denotes the zero ideal.
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb_cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb_cache: Mutex::new(self.gb_cache.lock().expect("gb cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; every generator must live in `ring`.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch(format!("generator `{g}` is not in the ideal's ring")));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            generators: Vec::new(),
            gb_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Parse each string as a generator.
    pub fn parse(ring: &Arc<PolyRing>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Groebner basis, sorted by leading monomial descending.
    /// Panics if a weighted order has the wrong length.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        assert!(order.fits(self.ring.arity()), "order `{order}` does not fit the ring");
        let mut cache = self.gb_cache.lock().expect("gb cache poisoned");
        if let Some(b) = cache.get(order) {
            return b.clone();
        }
        let gens = self.generators.iter().map(|g| g.sorted_terms(order)).collect();
        let basis = gb::buchberger(&Commutative, gens, order);
        let basis = Arc::new(
            basis
                .into_iter()
                .map(|t| Polynomial::from_terms(&self.ring, t))
                .collect::<Vec<_>>(),
        );
        cache.insert(order.clone(), basis.clone());
        basis
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        let b = self.groebner_basis(&MonomialOrder::GrevLex);
        b.len() == 1 && b[0].is_constant()
    }

    /// Ideal membership via the normal form against the reduced basis.
    pub fn contains(&self, f: &Polynomial, order: &MonomialOrder) -> Result<bool> {
        self.check(f)?;
        Ok(normal_form(f, &self.groebner_basis(order), order).is_zero())
    }

    /// `f` lies in the radical, decided by the Rabinowitsch trick: with a
    /// fresh variable `t`, `1` lies in `I + (1 - t*f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        let ext = self.ring.extend_fresh("t");
        let n = self.ring.arity();
        let lift = |p: &Polynomial| {
            p.map_monomials(&ext, |m| {
                let mut e = m.exponents().to_vec();
                e.push(0);
                Monomial::new(e)
            })
        };
        let t = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(lift).collect();
        gens.push(&Polynomial::one(&ext) - &(&t * &lift(f)));
        Ok(Ideal::new(&ext, gens)?.is_unit())
    }

    /// Generators of `I ∩ k[kept variables]`, as an ideal of the subring on
    /// the variables not in `drop` (original relative order).
    pub fn eliminate(&self, drop: &BTreeSet<usize>) -> Result<Ideal> {
        let n = self.ring.arity();
        if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, arity: n });
        }
        let order = MonomialOrder::eliminating(n, drop.iter().copied());
        let sub = self.ring.without(drop)?;
        let kept: Vec<Polynomial> = self
            .groebner_basis(&order)
            .iter()
            .filter(|g| drop.iter().all(|&i| !g.uses_var(i)))
            .map(|g| {
                g.map_monomials(&sub, |m| {
                    Monomial::new(
                        m.exponents()
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| !drop.contains(i))
                            .map(|(_, &e)| e)
                            .collect(),
                    )
                })
            })
            .collect();
        Ideal::new(&sub, kept)
    }

    /// Monomials outside the leading-term ideal, if finitely many.
    pub fn standard_monomials(&self, order: &MonomialOrder) -> Option<Vec<Monomial>> {
        let basis = self.groebner_basis(order);
        let n = self.ring.arity();
        let leads: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_term(order).expect("basis elements are nonzero").0)
            .collect();
        if leads.iter().any(Monomial::is_one) {
            return Some(Vec::new());
        }
        // a variable without a pure power among the leads spans an infinite cone
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            let pure = leads
                .iter()
                .filter(|m| m.exponents().iter().enumerate().all(|(k, &e)| k == i || e == 0))
                .map(|m| m.exponents()[i])
                .min()?;
            bounds.push(pure);
        }
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial::new(e.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer over the box prod [0, bound_i)
            let mut k = 0;
            loop {
                if k == n {
                    out.sort_by(|a, b| order.compare(b, a));
                    return Some(out);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    /// `dim_k A/I`: the number of standard monomials, or infinite.
    pub fn vector_space_dimension(&self, order: &MonomialOrder) -> Dimension {
        match self.standard_monomials(order) {
            Some(v) => Dimension::Finite(v.len()),
            None => Dimension::Infinite,
        }
    }

    /// Generators of the radical under the requested strategy.
    pub fn radical(&self, strategy: &RadicalStrategy) -> Result<Radical> {
        match strategy {
            RadicalStrategy::Monomial => self.radical_monomial(),
            RadicalStrategy::Principal => self.radical_principal(),
            RadicalStrategy::ZeroDimensional => self.radical_zero_dimensional(),
            RadicalStrategy::UserSupplied(gens) => {
                if gens.is_empty() || gens.iter().any(Polynomial::is_zero) {
                    return Err(Error::StrategyInapplicable {
                        strategy: "user".into(),
                        reason: "supplied generators must be nonzero".into(),
                    });
                }
                let r = Ideal::new(&self.ring, gens.clone())?;
                if !self.same_radical(&r)? {
                    return Err(Error::RadicalMismatch);
                }
                Ok(Radical {
                    ideal: r,
                    strategy: StrategyKind::UserSupplied,
                    trusted: false,
                })
            }
            RadicalStrategy::Auto => self
                .radical_monomial()
                .or_else(|_| self.radical_principal())
                .or_else(|_| self.radical_zero_dimensional())
                .map_err(|_| Error::StrategyInapplicable {
                    strategy: "auto".into(),
                    reason: "ideal is neither monomial, principal nor zero-dimensional".into(),
                }),
        }
    }

    fn radical_monomial(&self) -> Result<Radical> {
        let is_mono = |gs: &[Polynomial]| gs.iter().all(|g| g.num_terms() == 1);
        let source: Vec<Polynomial> = if is_mono(&self.generators) {
            self.generators.clone()
        } else {
            let b = self.groebner_basis(&MonomialOrder::GrevLex);
            if !is_mono(&b) {
                return Err(inapplicable("monomial", "generators are not monomials"));
            }
            b.to_vec()
        };
        let mut supports: Vec<Monomial> = source
            .iter()
            .map(|g| {
                let (m, _) = g.terms().next().expect("nonzero");
                Monomial::new(m.exponents().iter().map(|&e| e.min(1)).collect())
            })
            .collect();
        supports.sort_by(|a, b| MonomialOrder::GrevLex.compare(b, a));
        supports.dedup();
        let minimal: Vec<Monomial> = supports
            .iter()
            .filter(|m| !supports.iter().any(|o| o != *m && o.divides(m)))
            .cloned()
            .collect();
        let gens = minimal
            .into_iter()
            .map(|m| Polynomial::monomial(&self.ring, m, One::one()))
            .collect();
        Ok(Radical {
            ideal: Ideal::new(&self.ring, gens)?,
            strategy: StrategyKind::Monomial,
            trusted: true,
        })
    }

    fn radical_principal(&self) -> Result<Radical> {
        let generator = if self.generators.len() == 1 {
            self.generators[0].clone()
        } else {
            let b = self.groebner_basis(&MonomialOrder::GrevLex);
            if b.len() != 1 {
                return Err(inapplicable("principal", "ideal is not principal"));
            }
            b[0].clone()
        };
        Ok(Radical {
            ideal: Ideal::new(&self.ring, vec![squarefree_part(&generator)?])?,
            strategy: StrategyKind::Principal,
            trusted: true,
        })
    }

    /// Seidenberg: adjoin the squarefree part of the univariate minimal
    /// polynomial of every variable.
    fn radical_zero_dimensional(&self) -> Result<Radical> {
        if self.vector_space_dimension(&MonomialOrder::GrevLex) == Dimension::Infinite {
            return Err(inapplicable("zerodim", "quotient is not finite-dimensional"));
        }
        let n = self.ring.arity();
        let mut gens = self.generators.clone();
        for i in 0..n {
            let drop: BTreeSet<usize> = (0..n).filter(|&k| k != i).collect();
            let uni = self.eliminate(&drop)?;
            let Some(p) = uni.generators().first() else {
                return Err(inapplicable("zerodim", "no univariate polynomial found"));
            };
            let p = p.map_monomials(&self.ring, |m| Monomial::var(n, i, m.exponents()[0]));
            gens.push(squarefree_part(&p)?);
        }
        let sum = Ideal::new(&self.ring, gens)?;
        let reduced = sum.groebner_basis(&MonomialOrder::GrevLex).to_vec();
        Ok(Radical {
            ideal: Ideal::new(&self.ring, reduced)?,
            strategy: StrategyKind::ZeroDimensional,
            trusted: true,
        })
    }

    /// `√I = √R`, by radical membership of each generator in the other ideal.
    pub fn same_radical(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideals live in different rings".into()));
        }
        for g in &other.generators {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reduced Groebner bases agree under grevlex.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.groebner_basis(&MonomialOrder::GrevLex)
                == other.groebner_basis(&MonomialOrder::GrevLex)
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, f.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("`{f}` is not in the ideal's ring")))
        }
    }
}

fn inapplicable(strategy: &str, reason: &str) -> Error {
    Error::StrategyInapplicable {
        strategy: strategy.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalStrategy {
    Auto,
    Monomial,
    Principal,
    ZeroDimensional,
    UserSupplied(Vec<Polynomial>),
}

/// Which strategy actually produced a radical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    Monomial,
    Principal,
    ZeroDimensional,
    UserSupplied,
}

impl StrategyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Monomial => "monomial",
            Self::Principal => "principal",
            Self::ZeroDimensional => "zerodim",
            Self::UserSupplied => "user",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Radical {
    pub ideal: Ideal,
    pub strategy: StrategyKind,
    /// False when radicality of the generators is the user's assertion.
    pub trusted: bool,
}

/// Remainder of multivariate division by `basis` (divisors tried in order).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let b: Vec<Vec<Term>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.sorted_terms(order))
        .collect();
    let r = gb::normal_form(&Commutative, f.sorted_terms(order), &b, order);
    Polynomial::from_terms(f.ring(), r)
}

/// Every S-polynomial of `basis` reduces to zero against `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let b: Vec<Vec<Term>> = basis.iter().map(|g| g.sorted_terms(order)).collect();
    b.iter().all(|g| !g.is_empty()) && gb::is_groebner(&Commutative, &b, order)
}

/// Monic and tail-reduced (see [`is_groebner_basis`] for the basis property).
pub fn is_reduced_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let b: Vec<Vec<Term>> = basis.iter().map(|g| g.sorted_terms(order)).collect();
    gb::is_reduced(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    fn x_xi() -> Arc<PolyRing> {
        PolyRing::with_cotangent(["x", "xi"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn gens(b: &[Polynomial]) -> Vec<String> {
        b.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn basis_examples() {
        let r = xy();
        let g = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(gens(&g.groebner_basis(&MonomialOrder::GrevLex)), ["x", "y"]);
        let g = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        assert_eq!(gens(&g.groebner_basis(&MonomialOrder::GrevLex)), ["x^2", "x*y"]);
        let g = Ideal::parse(&r, &["x^2 - y", "y^2 - x"]).unwrap();
        let b = g.groebner_basis(&MonomialOrder::GrevLex);
        assert!(is_groebner_basis(&b, &MonomialOrder::GrevLex));
        assert!(is_reduced_basis(&b, &MonomialOrder::GrevLex));
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = xy();
        let g = Ideal::parse(&r, &["x*y - 1", "x"]).unwrap();
        assert_eq!(gens(&g.groebner_basis(&MonomialOrder::Lex)), ["1"]);
        assert!(g.is_unit());
    }

    #[test]
    fn normal_form_examples() {
        let r = xy();
        let o = MonomialOrder::GrevLex;
        assert!(normal_form(&p(&r, "x^2"), &[p(&r, "x")], &o).is_zero());
        assert_eq!(normal_form(&p(&r, "x+y"), &[p(&r, "x")], &o), p(&r, "y"));
        assert_eq!(normal_form(&p(&r, "x^2*y+y"), &[p(&r, "x^2-1")], &o), p(&r, "2*y"));
    }

    #[test]
    fn membership_examples() {
        let r = xy();
        let o = MonomialOrder::GrevLex;
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(i.contains(&p(&r, "x^2+x*y"), &o).unwrap());
        assert!(!i.contains(&p(&r, "x+1"), &o).unwrap());
        let rx = x_xi();
        let j = Ideal::parse(&rx, &["x^2*xi", "x*xi^2"]).unwrap();
        assert!(!j.contains(&p(&rx, "x*xi"), &o).unwrap());
        let other = Polynomial::var(&PolyRing::new(["a"]).unwrap(), 0);
        assert!(matches!(i.contains(&other, &o), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn radical_membership_examples() {
        let r = xy();
        assert!(Ideal::parse(&r, &["x^2"]).unwrap().radical_contains(&p(&r, "x")).unwrap());
        assert!(Ideal::parse(&r, &["x^3 + 3*x^2*y + 3*x*y^2 + y^3"])
            .unwrap()
            .radical_contains(&p(&r, "x+y"))
            .unwrap());
        let rx = x_xi();
        assert!(!Ideal::parse(&rx, &["x*xi"]).unwrap().radical_contains(&p(&rx, "xi")).unwrap());
    }

    #[test]
    fn radical_membership_survives_name_clash() {
        let r = PolyRing::new(["t", "t1"]).unwrap();
        let i = Ideal::parse(&r, &["t^2", "t1^3"]).unwrap();
        assert!(i.radical_contains(&p(&r, "t + t1")).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = PolyRing::new(["t", "x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x - t^2", "y - t^3"]).unwrap();
        let e = i.eliminate(&BTreeSet::from([0])).unwrap();
        assert_eq!(e.ring().names(), ["x", "y"]);
        let expect = Ideal::parse(e.ring(), &["y^2 - x^3"]).unwrap();
        assert!(e.same_ideal(&expect));

        let r2 = xy();
        let e = Ideal::parse(&r2, &["x", "y"]).unwrap().eliminate(&BTreeSet::from([1])).unwrap();
        assert_eq!(gens(e.generators()), ["x"]);

        let r3 = PolyRing::new(["t", "x"]).unwrap();
        let e = Ideal::parse(&r3, &["1 - t*x"]).unwrap().eliminate(&BTreeSet::from([0])).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn dimension_examples() {
        let r = xy();
        let o = MonomialOrder::GrevLex;
        let d = |g: &[&str]| Ideal::parse(&r, g).unwrap().vector_space_dimension(&o);
        assert_eq!(d(&["x", "y"]), Dimension::Finite(1));
        assert_eq!(d(&["x^2", "y"]), Dimension::Finite(2));
        assert_eq!(d(&["x^2", "x*y", "y^2"]), Dimension::Finite(3));
        assert_eq!(d(&["x*y"]), Dimension::Infinite);
        assert_eq!(d(&["x", "x*y - 1"]), Dimension::Finite(0));
        // (x^2 - y, y^2 - x): standard monomials 1, x, y, x*y
        assert_eq!(d(&["x^2 - y", "y^2 - x"]), Dimension::Finite(4));
    }

    #[test]
    fn radical_examples() {
        let r = xy();
        let rad = |g: &[&str], s: RadicalStrategy| {
            Ideal::parse(&r, g).unwrap().radical(&s).unwrap()
        };
        let a = rad(&["x^2"], RadicalStrategy::Principal);
        assert_eq!(gens(a.ideal.generators()), ["x"]);
        assert_eq!(a.strategy, StrategyKind::Principal);
        let a = rad(&["x^2*y"], RadicalStrategy::Monomial);
        assert_eq!(gens(a.ideal.generators()), ["x*y"]);
        let a = rad(&["x^2", "y^2"], RadicalStrategy::ZeroDimensional);
        assert_eq!(gens(a.ideal.generators()), ["x", "y"]);
        let a = rad(&["x^2 - 2*x*y + y^2", "y^3"], RadicalStrategy::Auto);
        assert_eq!(a.strategy, StrategyKind::ZeroDimensional);
        assert_eq!(gens(a.ideal.generators()), ["x", "y"]);
        let a = rad(&["x^3*y", "x*y^2"], RadicalStrategy::Auto);
        assert_eq!(gens(a.ideal.generators()), ["x*y"]);
    }

    #[test]
    fn radical_strategy_errors() {
        let r = xy();
        let i = Ideal::parse(&r, &["x + y", "x*y - 1"]).unwrap();
        assert!(matches!(
            i.radical(&RadicalStrategy::Monomial),
            Err(Error::StrategyInapplicable { .. })
        ));
        let i = Ideal::parse(&r, &["x*y", "x^2 - x"]).unwrap();
        assert!(matches!(
            i.radical(&RadicalStrategy::ZeroDimensional),
            Err(Error::StrategyInapplicable { .. })
        ));
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(matches!(
            i.radical(&RadicalStrategy::UserSupplied(vec![p(&r, "y")])),
            Err(Error::RadicalMismatch)
        ));
        let ok = i.radical(&RadicalStrategy::UserSupplied(vec![p(&r, "x")])).unwrap();
        assert!(!ok.trusted);
    }

    #[test]
    fn radical_equivalence_examples() {
        let r = xy();
        let i = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        assert!(i(&["x^2"]).same_radical(&i(&["x"])).unwrap());
        assert!(!i(&["x"]).same_radical(&i(&["y"])).unwrap());
        assert!(i(&["x^2", "y"]).same_radical(&i(&["x", "y"])).unwrap());
    }

    #[test]
    fn cached_basis_is_shared() {
        let r = xy();
        let i = Ideal::parse(&r, &["x^2 - y", "y^2 - x"]).unwrap();
        let a = i.groebner_basis(&MonomialOrder::Lex);
        let b = i.clone().groebner_basis(&MonomialOrder::Lex);
        assert_eq!(a, b);
    }
}
