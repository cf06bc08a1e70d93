//! Desk-scale Hochschild computations for affine space.
//!
//! The diagonal of `A = k[x_1..x_n]` is resolved by the Koszul complex of
//! `y_i - z_i` over `A ⊗ A = k[y, z]`; restricting along `y, z ↦ x` gives the
//! Tor groups compared with forms. Classes supported on a regular centre are
//! carried as forms modulo the centre, in the frame of a fixed regular
//! sequence.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::{normal_form, Dimension, Ideal};
use crate::poisson::{
    combinations, conormal_determinant, contract_form, sequence_basis, Bivector, DifferentialForm,
};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// Dense matrix of polynomials over a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        Self {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Rank over the fraction field, by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Polynomial>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut prev = Polynomial::one(&self.ring);
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let t = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                    m[r][c] = t.div_exact(&prev).expect("Bareiss division is exact");
                }
                m[r][col] = Polynomial::zero(&self.ring);
            }
            prev = m[rank][col].clone();
            rank += 1;
        }
        rank
    }

    fn map(&self, ring: &Arc<PolyRing>, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Koszul complex of the diagonal of affine `n`-space.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    n: usize,
    ambient: Arc<PolyRing>,
    base: Arc<PolyRing>,
    regular_sequence: Vec<Polynomial>,
    /// `differentials[i - 1] : K_i → K_{i-1}`, columns indexed by `basis(i)`.
    differentials: Vec<PolyMatrix>,
}

impl KoszulComplex {
    pub fn diagonal(n: usize) -> Self {
        let names = (1..=n)
            .map(|i| format!("y{i}"))
            .chain((1..=n).map(|i| format!("z{i}")));
        let ambient = PolyRing::new(names).expect("distinct names");
        let base = PolyRing::new((1..=n).map(|i| format!("x{i}"))).expect("distinct names");
        let regular_sequence: Vec<Polynomial> = (0..n)
            .map(|i| &Polynomial::var(&ambient, i) - &Polynomial::var(&ambient, n + i))
            .collect();
        let differentials = (1..=n)
            .map(|i| {
                let src = combinations(n, i);
                let dst = combinations(n, i - 1);
                let mut d = PolyMatrix::zero(&ambient, dst.len(), src.len());
                for (c, s) in src.iter().enumerate() {
                    for (t, &k) in s.iter().enumerate() {
                        let face: Vec<usize> = s.iter().copied().filter(|&j| j != k).collect();
                        let r = dst.iter().position(|x| *x == face).expect("face is a subset");
                        let g = &regular_sequence[k];
                        d.set(r, c, if t % 2 == 0 { g.clone() } else { -g });
                    }
                }
                d
            })
            .collect();
        Self {
            n,
            ambient,
            base,
            regular_sequence,
            differentials,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn regular_sequence(&self) -> &[Polynomial] {
        &self.regular_sequence
    }

    /// Index sets of the wedge basis `e_S` of `K_i`.
    pub fn basis(&self, i: usize) -> Vec<Vec<usize>> {
        combinations(self.n, i)
    }

    /// `d_i : K_i → K_{i-1}` for `1 ≤ i ≤ n`.
    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn d_squared_vanishes(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// `d_i ⊗ A`, with `y_j, z_j ↦ x_j`. Zero-size outside `1..=n`.
    pub fn restricted_differential(&self, i: usize) -> PolyMatrix {
        let n = self.n;
        match self.differential(i) {
            Some(d) => d.map(&self.base, |p| {
                p.map_monomials(&self.base, |m| {
                    let e = m.exponents();
                    Monomial::new((0..n).map(|j| e[j] + e[n + j]).collect())
                })
            }),
            None => {
                let rows = if i == 0 { 0 } else { self.basis(i - 1).len() };
                PolyMatrix::zero(&self.base, rows, self.basis(i).len())
            }
        }
    }
}

/// `H_i` of the restricted Koszul complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorGroup {
    pub degree: usize,
    pub rank: usize,
    /// Both adjacent restricted differentials vanish, so `H_i = K_i ⊗ A`.
    pub free: bool,
    pub basis: Vec<String>,
}

fn wedge_label(prefix: &str, s: &[usize], names: &dyn Fn(usize) -> String) -> String {
    if s.is_empty() {
        return "1".into();
    }
    s.iter()
        .map(|&i| format!("{prefix}{}", names(i)))
        .collect::<Vec<_>>()
        .join("∧")
}

pub fn koszul_tor(n: usize, i: usize) -> TorGroup {
    koszul_tor_in(&KoszulComplex::diagonal(n), i)
}

fn koszul_tor_in(k: &KoszulComplex, i: usize) -> TorGroup {
    let dim = k.basis(i).len();
    let out = k.restricted_differential(i);
    let inc = k.restricted_differential(i + 1);
    let rank = dim - out.rank() - inc.rank();
    let free = out.is_zero() && inc.is_zero();
    let basis = if free {
        k.basis(i)
            .iter()
            .map(|s| wedge_label("e", s, &|j| (j + 1).to_string()))
            .collect()
    } else {
        Vec::new()
    };
    TorGroup {
        degree: i,
        rank,
        free,
        basis,
    }
}

/// Comparison of `Tor_i` with `Ω^i` over `k[x_1..x_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkrComparison {
    pub n: usize,
    pub degree: usize,
    pub tor_rank: usize,
    pub form_rank: usize,
    /// `e_S ↦ dx_S`.
    pub correspondence: Vec<(String, String)>,
}

impl HkrComparison {
    pub fn matches(&self) -> bool {
        self.tor_rank == self.form_rank
    }
}

pub fn hkr_compare(n: usize, i: usize) -> HkrComparison {
    let k = KoszulComplex::diagonal(n);
    let tor = koszul_tor_in(&k, i);
    let correspondence = k
        .basis(i)
        .iter()
        .map(|s| {
            (
                wedge_label("e", s, &|j| (j + 1).to_string()),
                wedge_label("d", s, &|j| format!("x{}", j + 1)),
            )
        })
        .collect();
    HkrComparison {
        n,
        degree: i,
        tor_rank: tor.rank,
        form_rank: binomial(n, i),
        correspondence,
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Rank of `Λ^k` of the tangent module of affine `n`-space.
pub fn polyvector_rank(n: usize, k: usize) -> usize {
    binomial(n, k)
}

/// A class in the `p`-form piece of Hochschild homology supported on the
/// zero set of `fs`, in the frame of `fs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportedClass {
    fs: Vec<Polynomial>,
    coefficients: DifferentialForm,
}

impl SupportedClass {
    pub fn regular_sequence(&self) -> &[Polynomial] {
        &self.fs
    }

    pub fn p(&self) -> usize {
        self.coefficients.degree()
    }

    pub fn hh_degree(&self) -> i64 {
        self.p() as i64 - self.fs.len() as i64
    }

    pub fn coefficients(&self) -> &DifferentialForm {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_zero()
    }

    /// `c · self` for a scalar `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        let ring = self.coefficients.ring();
        let mut form = DifferentialForm::zero(ring, self.p());
        if !c.is_zero() {
            for (s, p) in self.coefficients.entries() {
                form.add_term(s, p.scale(c)).expect("same shape");
            }
        }
        Self {
            fs: self.fs.clone(),
            coefficients: form,
        }
    }
}

/// The tautological class: `df_1 ∧ ... ∧ df_l` modulo `(fs)`.
pub fn tau_class(fs: &[Polynomial]) -> Result<SupportedClass> {
    let omega = conormal_determinant(fs)?;
    let basis = sequence_basis(fs)?;
    Ok(SupportedClass {
        fs: fs.to_vec(),
        coefficients: omega.reduce(&basis, &MonomialOrder::GrevLex),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCharacter {
    pub multiplicity: usize,
    pub tau: SupportedClass,
}

impl ChernCharacter {
    /// `ch` of the structure sheaf of the centre, which is `τ` itself.
    /// No finiteness is needed: this is the generic-point case.
    pub fn of_center(fs: &[Polynomial]) -> Result<Self> {
        Ok(Self {
            multiplicity: 1,
            tau: tau_class(fs)?,
        })
    }
}

/// `ch_{A/I} = n·τ` with `n = dim_k A/I`.
pub fn chern_character(ideal: &Ideal, fs: &[Polynomial]) -> Result<ChernCharacter> {
    let tau = tau_class(fs)?;
    if !same_ring(ideal.ring(), fs[0].ring()) {
        return Err(Error::RingMismatch("ideal and sequence".into()));
    }
    if !ideal.same_radical(&Ideal::new(ideal.ring(), fs.to_vec())?)? {
        return Err(Error::RadicalMismatch);
    }
    let multiplicity = multiplicity(ideal)?;
    Ok(ChernCharacter { multiplicity, tau })
}

/// `dim_k A/I`, required finite.
pub fn multiplicity(ideal: &Ideal) -> Result<usize> {
    match ideal.vector_space_dimension(&MonomialOrder::GrevLex) {
        Dimension::Finite(d) => Ok(d),
        Dimension::Infinite => Err(Error::InfiniteDimension),
    }
}

/// `dim_k J/I` for `I ⊆ J` with `A/I` finite-dimensional, computed as the
/// rank of the span of `s·g` modulo `I` over standard monomials `s` of `I`
/// and generators `g` of `J`.
pub fn subquotient_dimension(outer: &Ideal, inner: &Ideal) -> Result<usize> {
    if !same_ring(outer.ring(), inner.ring()) {
        return Err(Error::RingMismatch("nested ideals".into()));
    }
    let order = MonomialOrder::GrevLex;
    for g in inner.generators() {
        if !outer.contains(g, &order)? {
            return Err(Error::Unsupported("inner ideal is not contained in outer".into()));
        }
    }
    let standard = inner.standard_monomials(&order).ok_or(Error::InfiniteDimension)?;
    let basis = inner.groebner_basis(&order);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for s in &standard {
        for g in outer.generators() {
            let sg = g.mul_monomial(s, &Rational::one());
            let nf = normal_form(&sg, &basis, &order);
            rows.push(standard.iter().map(|m| nf.coefficient(m)).collect());
        }
    }
    Ok(rational_rank(rows))
}

fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for k in c..cols {
                let t = &f * &rows[rank][k];
                rows[r][k] -= t;
            }
        }
        rank += 1;
    }
    rank
}

/// `Θ · c`: contraction, reduced modulo the centre; lowers degrees by 2.
pub fn module_action(theta: &Bivector, c: &SupportedClass) -> Result<SupportedClass> {
    let contracted = contract_form(theta, &c.coefficients)?;
    let basis = sequence_basis(&c.fs)?;
    Ok(SupportedClass {
        fs: c.fs.clone(),
        coefficients: contracted.reduce(&basis, &MonomialOrder::GrevLex),
    })
}

/// `Θ · ch = 0`. For a centre of codimension below 2 the target group is
/// zero, so the answer is `true`.
pub fn theta_annihilates_chern(theta: &Bivector, ch: &ChernCharacter) -> Result<bool> {
    match module_action(theta, &ch.tau) {
        Ok(c) => Ok(c.is_zero()),
        Err(Error::DegreeTooSmall(_)) => Ok(true),
        Err(e) => Err(e),
    }
}
