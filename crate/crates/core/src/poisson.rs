//! Bivectors, differential forms, brackets and the involutivity criteria.
//!
//! A bivector `Θ = Σ_{i<j} Θ^{ij} ∂_i ∧ ∂_j` acts on functions by
//! `{f, g} = Θ ⌐ (df ∧ dg) = Σ_{i<j} Θ^{ij} (∂_i f ∂_j g - ∂_j f ∂_i g)`.
//! The canonical bracket on `k[x, xi]` has `{xi_i, x_i} = 1`, the sign that
//! matches `[d, x] = 1` in the Weyl algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{normal_form, Ideal};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};
use crate::weyl::WeylOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivector {
    ring: Arc<PolyRing>,
    coefficients: BTreeMap<(usize, usize), Polynomial>,
}

impl Bivector {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            coefficients: BTreeMap::new(),
        }
    }

    /// Build from `(i, j, Θ^{ij})` entries. Entries with `i > j` are stored
    /// as `(j, i, -Θ^{ij})`; repeated pairs add up.
    pub fn new(
        ring: &Arc<PolyRing>,
        entries: impl IntoIterator<Item = (usize, usize, Polynomial)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (i, j, c) in entries {
            out.add_entry(i, j, c)?;
        }
        Ok(out)
    }

    fn add_entry(&mut self, i: usize, j: usize, c: Polynomial) -> Result<()> {
        let n = self.ring.arity();
        for k in [i, j] {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, arity: n });
            }
        }
        if !same_ring(c.ring(), &self.ring) {
            return Err(Error::RingMismatch("bivector coefficient ring".into()));
        }
        if i == j {
            return Ok(());
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -&c) };
        let sum = match self.coefficients.remove(&key) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coefficients.insert(key, sum);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `Θ^{ij}`, antisymmetric in `(i, j)`.
    pub fn coefficient(&self, i: usize, j: usize) -> Polynomial {
        if i == j {
            return Polynomial::zero(&self.ring);
        }
        let c = self.coefficients.get(&(i.min(j), i.max(j)));
        match (c, i < j) {
            (None, _) => Polynomial::zero(&self.ring),
            (Some(c), true) => c.clone(),
            (Some(c), false) => -c,
        }
    }

    /// Stored entries, `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.coefficients.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// The bracket `{f, g} = Θ ⌐ (df ∧ dg)`.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) || !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("bracket arguments".into()));
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (&(i, j), c) in &self.coefficients {
            let t = &(&f.diff(i)? * &g.diff(j)?) - &(&f.diff(j)? * &g.diff(i)?);
            if !t.is_zero() {
                acc = &acc + &(c * &t);
            }
        }
        Ok(acc)
    }

    /// Values `{x_i, x_j}` on coordinate pairs.
    pub fn table(&self) -> DeformationTable {
        DeformationTable {
            ring: self.ring.clone(),
            brackets: self.coefficients.clone(),
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = self.ring.names();
        self.coefficients
            .iter()
            .map(|(&(i, j), c)| format!("({c})*d_{}^d_{}", names[i], names[j]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The canonical symplectic bivector on a cotangent ring:
/// `{f, g} = Σ_i ∂f/∂xi_i ∂g/∂x_i - ∂f/∂x_i ∂g/∂xi_i`.
pub fn canonical_symplectic(ring: &Arc<PolyRing>) -> Result<Bivector> {
    let n = ring.cotangent_pairs().ok_or(Error::MissingCotangent)?;
    let minus_one = Polynomial::constant(ring, -Rational::one());
    Bivector::new(ring, (0..n).map(|i| (i, n + i, minus_one.clone())))
}

/// First-order bracket data `{x_i, x_j}` on the coordinates of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationTable {
    ring: Arc<PolyRing>,
    brackets: BTreeMap<(usize, usize), Polynomial>,
}

impl DeformationTable {
    pub fn new(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Record `{x_i, x_j} = value`; the skew partner is implied.
    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) -> Result<()> {
        let n = self.ring.arity();
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { index: i.max(j), arity: n });
        }
        if !same_ring(value.ring(), &self.ring) {
            return Err(Error::RingMismatch("bracket table value".into()));
        }
        if i == j {
            return Ok(());
        }
        let (key, v) = if i < j { ((i, j), value) } else { ((j, i), -&value) };
        if v.is_zero() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, v);
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        Bivector {
            ring: self.ring.clone(),
            coefficients: self.brackets.clone(),
        }
        .coefficient(i, j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.brackets.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// The table of the Weyl algebra seen as a first-order deformation of
    /// `k[x, xi]`: lift `x_i ↦ x_i`, `xi_i ↦ d_i` and read off the part of
    /// `[a', b']` of order `ord a' + ord b' - 1`.
    pub fn weyl(ring: &Arc<PolyRing>) -> Result<Self> {
        let n = ring.cotangent_pairs().ok_or(Error::MissingCotangent)?;
        let lifts: Vec<WeylOperator> = (0..n)
            .map(|i| WeylOperator::x(n, i))
            .chain((0..n).map(|i| WeylOperator::d(n, i)))
            .collect();
        let mut table = Self::new(ring);
        for i in 0..2 * n {
            for j in i + 1..2 * n {
                let c = lifts[i].commutator(&lifts[j])?;
                let weight = lifts[i].order()? + lifts[j].order()?;
                let value = match weight.checked_sub(1) {
                    Some(w) => c.homogeneous_symbol(w).map_monomials(ring, Monomial::clone),
                    None => Polynomial::zero(ring),
                };
                table.set(i, j, value)?;
            }
        }
        Ok(table)
    }
}

/// The bivector with `{x_i, x_j} = T(i, j)` for every pair.
pub fn deformation_class(table: &DeformationTable) -> Bivector {
    Bivector {
        ring: table.ring.clone(),
        coefficients: table.brackets.clone(),
    }
}

/// A generator pair whose bracket leaves the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub f: Polynomial,
    pub g: Polynomial,
    pub bracket: Polynomial,
    pub normal_form: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involutivity {
    pub witnesses: Vec<Witness>,
}

impl Involutivity {
    pub fn is_involutive(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// `{I, I} ⊆ I`, tested on generator pairs (enough by the Leibniz rule).
/// Every failing pair is reported, in generator order.
pub fn is_involutive(ideal: &Ideal, theta: &Bivector) -> Result<Involutivity> {
    if !same_ring(ideal.ring(), theta.ring()) {
        return Err(Error::RingMismatch("ideal and bivector".into()));
    }
    let order = MonomialOrder::GrevLex;
    let basis = ideal.groebner_basis(&order);
    let gens = ideal.generators();
    let pairs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<Result<Option<Witness>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let bracket = theta.bracket(&gens[i], &gens[j])?;
            let nf = normal_form(&bracket, &basis, &order);
            Ok((!nf.is_zero()).then(|| Witness {
                f: gens[i].clone(),
                g: gens[j].clone(),
                bracket,
                normal_form: nf,
            }))
        })
        .collect();
    let mut witnesses = Vec::new();
    for r in results {
        if let Some(w) = r? {
            witnesses.push(w);
        }
    }
    Ok(Involutivity { witnesses })
}

/// `Σ_S c_S dx_S` over strictly increasing index tuples `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    ring: Arc<PolyRing>,
    degree: usize,
    coefficients: BTreeMap<Vec<usize>, Polynomial>,
}

impl DifferentialForm {
    pub fn zero(ring: &Arc<PolyRing>, degree: usize) -> Self {
        Self {
            ring: ring.clone(),
            degree,
            coefficients: BTreeMap::new(),
        }
    }

    /// `c * dx_{i_1} ∧ ... ∧ dx_{i_k}` for any index order; repeated indices
    /// give zero.
    pub fn add_term(&mut self, indices: &[usize], c: Polynomial) -> Result<()> {
        if indices.len() != self.degree {
            return Err(Error::Unsupported(format!(
                "{}-form term on a {}-form",
                indices.len(),
                self.degree
            )));
        }
        let n = self.ring.arity();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, arity: n });
        }
        let Some((sorted, sign)) = sort_with_sign(indices) else {
            return Ok(());
        };
        let c = if sign { c } else { -&c };
        let sum = match self.coefficients.remove(&sorted) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coefficients.insert(sorted, sum);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Polynomial {
        self.coefficients
            .get(indices)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.coefficients.iter().map(|(s, c)| (s.as_slice(), c))
    }

    /// Coefficients replaced by their normal forms against `basis`.
    pub fn reduce(&self, basis: &[Polynomial], order: &MonomialOrder) -> Self {
        Self {
            ring: self.ring.clone(),
            degree: self.degree,
            coefficients: self
                .coefficients
                .iter()
                .map(|(s, c)| (s.clone(), normal_form(c, basis, order)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Text name of a basis element, e.g. `dx∧dxi`; `1` in degree 0.
    pub fn basis_label(&self, indices: &[usize]) -> String {
        if indices.is_empty() {
            return "1".into();
        }
        indices
            .iter()
            .map(|&i| format!("d{}", self.ring.name(i)))
            .collect::<Vec<_>>()
            .join("∧")
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|(s, c)| {
                if s.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{}", self.basis_label(s))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Sort indices; `None` if any repeats, else the sorted tuple and whether
/// the permutation is even.
fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = indices.to_vec();
    let mut even = true;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                even = !even;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, even))
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        go(0, n, k, &mut cur, &mut out);
    }
    out
}

/// Laplace expansion along the first row; fine for the small minors used here.
pub(crate) fn determinant(m: &[Vec<Polynomial>], ring: &Arc<PolyRing>) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(ring);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let t = &m[0][col] * &determinant(&minor, ring);
                acc = if col % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn sequence_ring(fs: &[Polynomial]) -> Result<Arc<PolyRing>> {
    let ring = fs
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::Regularity("empty sequence".into()))?;
    if fs.iter().any(|f| !same_ring(f.ring(), &ring)) {
        return Err(Error::RingMismatch("sequence elements".into()));
    }
    Ok(ring)
}

/// Reduced grevlex basis of `(fs)`.
pub(crate) fn sequence_basis(fs: &[Polynomial]) -> Result<Arc<Vec<Polynomial>>> {
    let ring = sequence_ring(fs)?;
    Ok(Ideal::new(&ring, fs.to_vec())?.groebner_basis(&MonomialOrder::GrevLex))
}

/// `ω = df_1 ∧ ... ∧ df_l`, after checking that some `l×l` Jacobian minor is
/// nonzero modulo `(fs)`.
pub fn conormal_determinant(fs: &[Polynomial]) -> Result<DifferentialForm> {
    let ring = sequence_ring(fs)?;
    let n = ring.arity();
    let l = fs.len();
    if l > n {
        return Err(Error::Regularity(format!("{l} equations in {n} variables")));
    }
    let jac: Vec<Vec<Polynomial>> = fs
        .iter()
        .map(|f| (0..n).map(|i| f.diff(i)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut omega = DifferentialForm::zero(&ring, l);
    for cols in combinations(n, l) {
        let sub: Vec<Vec<Polynomial>> = jac
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        omega.add_term(&cols, determinant(&sub, &ring))?;
    }
    let basis = sequence_basis(fs)?;
    if omega.reduce(&basis, &MonomialOrder::GrevLex).is_zero() {
        return Err(Error::Regularity(
            "every maximal Jacobian minor vanishes modulo the sequence".into(),
        ));
    }
    Ok(omega)
}

/// `Θ ⌐ ω`. For `i < j` both in `S`, `ι_{∂_i∧∂_j} dx_S` is the sign of the
/// permutation moving `i` then `j` to the front, times `dx_{S∖{i,j}}`.
pub fn contract_form(theta: &Bivector, omega: &DifferentialForm) -> Result<DifferentialForm> {
    if omega.degree < 2 {
        return Err(Error::DegreeTooSmall(omega.degree));
    }
    if !same_ring(theta.ring(), omega.ring()) {
        return Err(Error::RingMismatch("bivector and form".into()));
    }
    let mut out = DifferentialForm::zero(&omega.ring, omega.degree - 2);
    for (s, c) in &omega.coefficients {
        for (&(i, j), t) in &theta.coefficients {
            let (Some(pi), Some(pj)) = (s.iter().position(|&k| k == i), s.iter().position(|&k| k == j))
            else {
                continue;
            };
            let rest: Vec<usize> = s.iter().copied().filter(|&k| k != i && k != j).collect();
            let term = t * c;
            let term = if (pi + pj - 1) % 2 == 0 { term } else { -&term };
            out.add_term(&rest, term)?;
        }
    }
    Ok(out)
}

/// `η(Θ)`: entries `{f_a, f_b}` modulo `(fs)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBivectorClass {
    pub regular_sequence: Vec<Polynomial>,
    pub entries: BTreeMap<(usize, usize), Polynomial>,
}

impl NormalBivectorClass {
    pub fn is_zero(&self) -> bool {
        self.entries.values().all(Polynomial::is_zero)
    }
}

pub fn conormal_projection(theta: &Bivector, fs: &[Polynomial]) -> Result<NormalBivectorClass> {
    conormal_determinant(fs)?;
    let basis = sequence_basis(fs)?;
    let mut entries = BTreeMap::new();
    for a in 0..fs.len() {
        for b in a + 1..fs.len() {
            let br = theta.bracket(&fs[a], &fs[b])?;
            entries.insert((a, b), normal_form(&br, &basis, &MonomialOrder::GrevLex));
        }
    }
    Ok(NormalBivectorClass {
        regular_sequence: fs.to_vec(),
        entries,
    })
}
