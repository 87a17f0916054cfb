//! The twisted convolution algebra of a finite group with multiplier, its
//! left and right regular projective representations, the canonical trace,
//! and a numeric center oracle.
//!
//! Two scalar types are supported. [`ExactScalar`] is a formal rational
//! combination of circle values and is used wherever identities must hold
//! with zero tolerance. `Complex<f64>` is used for the SVD-based center
//! dimension.

use std::collections::BTreeMap;
use std::fmt::Debug;

use nalgebra::{Complex, DMatrix};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::multiplier::Multiplier;
use crate::torus::{ratio, IrrationalBasis, RotationNumber};

pub const DEFAULT_TOL: f64 = 1e-8;

/// Coefficient ring of an [`AlgebraElement`].
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn conj(&self) -> Self;
    /// `e^{2πix}`
    fn from_phase(x: &RotationNumber, basis: &IrrationalBasis) -> Result<Self>;
}

/// `Σ m_i · e^{2πi x_i}` with rational `m_i`.
///
/// Each phase is stored with its rational part in `[0, 1/2)`; a phase in
/// `[1/2, 1)` is shifted down by `1/2` and its magnitude negated. Equal
/// representations denote equal numbers, but sums of roots of unity can
/// cancel without the representation noticing, so only monomial
/// comparisons are decisive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactScalar {
    terms: BTreeMap<RotationNumber, BigRational>,
}

impl ExactScalar {
    pub fn phase(x: RotationNumber) -> Self {
        Self::term(x, BigRational::one())
    }

    pub fn rational(m: BigRational) -> Self {
        Self::term(RotationNumber::zero(), m)
    }

    pub fn term(x: RotationNumber, m: BigRational) -> Self {
        let mut out = Self::default();
        out.push(x, m);
        out
    }

    fn push(&mut self, x: RotationNumber, mut m: BigRational) {
        let half = ratio(1, 2);
        let x = if *x.rat() >= half {
            m = -m;
            x - &RotationNumber::rational(half)
        } else {
            x
        };
        let slot = self.terms.entry(x.clone()).or_insert_with(BigRational::zero);
        *slot += m;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn terms(&self) -> &BTreeMap<RotationNumber, BigRational> {
        &self.terms
    }

    /// The single `(phase, magnitude)` pair of a monomial.
    pub fn as_monomial(&self) -> Option<(&RotationNumber, &BigRational)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn evaluate(&self, basis: &IrrationalBasis) -> Result<Complex<f64>> {
        use num_traits::ToPrimitive;
        let mut z = Complex::new(0.0, 0.0);
        for (x, m) in &self.terms {
            z += x.evaluate(basis)? * m.to_f64().unwrap_or(f64::NAN);
        }
        Ok(z)
    }
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, m) in &other.terms {
            out.push(x.clone(), m.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (x, m) in &self.terms {
            for (y, n) in &other.terms {
                out.push(x + y, m * n);
            }
        }
        out
    }

    fn conj(&self) -> Self {
        let mut out = Self::default();
        for (x, m) in &self.terms {
            out.push(-x, m.clone());
        }
        out
    }

    fn from_phase(x: &RotationNumber, _basis: &IrrationalBasis) -> Result<Self> {
        Ok(Self::phase(x.clone()))
    }
}

impl Scalar for Complex<f64> {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_phase(x: &RotationNumber, basis: &IrrationalBasis) -> Result<Self> {
        x.evaluate(basis)
    }
}

/// A function `G → S`, stored densely in element index order.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![S::zero(); order] }
    }

    pub fn delta(order: usize, a: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[a] = S::one();
        out
    }

    /// Sums repeated indices.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut out = Self::zero(order);
        for (a, s) in terms {
            out.coeffs[a] = out.coeffs[a].plus(&s);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, a: usize) -> &S {
        &self.coeffs[a]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&a| !self.coeffs[a].is_zero()).collect()
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.plus(y)).collect() }
    }
}

fn check_order<S>(sigma: &Multiplier, f: &AlgebraElement<S>) -> Result<()> {
    let n = sigma.group().order();
    if f.coeffs.len() != n {
        return Err(Error::DomainMismatch(format!("element has {} coefficients, group order is {n}", f.coeffs.len())));
    }
    Ok(())
}

/// `(f * g)(ab) = Σ f(a) σ(a,b) g(b)`.
pub fn convolve<S: Scalar>(sigma: &Multiplier, f: &AlgebraElement<S>, g: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
    check_order(sigma, f)?;
    check_order(sigma, g)?;
    let group = sigma.group();
    let mut out: AlgebraElement<S> = AlgebraElement::zero(group.order());
    for a in f.support() {
        for b in g.support() {
            let phase = S::from_phase(&sigma.value(a, b), sigma.basis())?;
            let ab = group.multiply(a, b);
            out.coeffs[ab] = out.coeffs[ab].plus(&f.coeffs[a].times(&phase).times(&g.coeffs[b]));
        }
    }
    Ok(out)
}

/// `f*(a) = conj(σ(a,a⁻¹)) · conj(f(a⁻¹))`.
pub fn involution<S: Scalar>(sigma: &Multiplier, f: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
    check_order(sigma, f)?;
    let group = sigma.group();
    let mut out: AlgebraElement<S> = AlgebraElement::zero(group.order());
    for a in group.elements() {
        let inv = group.inverse(a);
        if f.coeffs[inv].is_zero() {
            continue;
        }
        let phase = S::from_phase(&-sigma.value(a, inv), sigma.basis())?;
        out.coeffs[a] = phase.times(&f.coeffs[inv].conj());
    }
    Ok(out)
}

/// Coefficient at the identity.
pub fn trace<S: Scalar>(sigma: &Multiplier, f: &AlgebraElement<S>) -> S {
    f.coeffs[sigma.group().identity()].clone()
}

/// A random exact element: each coefficient is zero or `m·e^{2πi p/q}` with
/// small `m` and `q ≤ 12`.
pub fn random_exact(order: usize, rng: &mut impl Rng) -> AlgebraElement<ExactScalar> {
    let coeffs = (0..order)
        .map(|_| {
            if rng.random_bool(0.3) {
                ExactScalar::default()
            } else {
                let q = rng.random_range(1..=12i64);
                let x = RotationNumber::from_ratio(rng.random_range(0..q), q);
                ExactScalar::term(x, ratio(rng.random_range(-4..=4), rng.random_range(1..=3)))
            }
        })
        .collect();
    AlgebraElement { coeffs }
}

/// A generalized permutation matrix with unit-modulus entries: column `b`
/// has its only nonzero entry `e^{2πi phase[b]}` in row `row[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub row: Vec<usize>,
    pub phase: Vec<RotationNumber>,
}

impl MonomialMatrix {
    pub fn identity(n: usize) -> Self {
        Self { row: (0..n).collect(), phase: vec![RotationNumber::zero(); n] }
    }

    pub fn size(&self) -> usize {
        self.row.len()
    }

    /// `self · other`
    pub fn compose(&self, other: &Self) -> Self {
        let (row, phase) = (0..other.size())
            .map(|b| {
                let r = other.row[b];
                (self.row[r], &other.phase[b] + &self.phase[r])
            })
            .unzip();
        Self { row, phase }
    }

    pub fn scaled(&self, x: &RotationNumber) -> Self {
        Self { row: self.row.clone(), phase: self.phase.iter().map(|p| p + x).collect() }
    }

    pub fn apply(&self, v: &AlgebraElement<ExactScalar>) -> AlgebraElement<ExactScalar> {
        AlgebraElement::from_terms(
            self.size(),
            (0..self.size()).map(|b| (self.row[b], ExactScalar::phase(self.phase[b].clone()).times(&v.coeffs[b]))),
        )
    }

    pub fn to_dense(&self, basis: &IrrationalBasis) -> Result<DMatrix<Complex<f64>>> {
        let n = self.size();
        let mut m = DMatrix::from_element(n, n, Complex::new(0.0, 0.0));
        for b in 0..n {
            m[(self.row[b], b)] = self.phase[b].evaluate(basis)?;
        }
        Ok(m)
    }
}

/// `λ(a)δ_b = σ(a,b)δ_{ab}`.
pub fn lambda_matrix(sigma: &Multiplier, a: usize) -> MonomialMatrix {
    let g = sigma.group();
    let (row, phase) = g.elements().map(|b| (g.multiply(a, b), sigma.value(a, b))).unzip();
    MonomialMatrix { row, phase }
}

/// `(ρ̄(a)ξ)(c) = conj(σ(c,a)) ξ(ca)`, so `ρ̄(a)δ_b = conj(σ(ba⁻¹,a)) δ_{ba⁻¹}`.
pub fn rho_bar_matrix(sigma: &Multiplier, a: usize) -> MonomialMatrix {
    let g = sigma.group();
    let inv = g.inverse(a);
    let (row, phase) = g
        .elements()
        .map(|b| {
            let c = g.multiply(b, inv);
            (c, -sigma.value(c, a))
        })
        .unzip();
    MonomialMatrix { row, phase }
}

/// Stacked `|G|²×|G|` matrix of `g ↦ δ_a * δ_g − δ_g * δ_a` over all `a`.
fn commutator_operator(sigma: &Multiplier) -> Result<DMatrix<Complex<f64>>> {
    let g = sigma.group();
    let n = g.order();
    let mut m = DMatrix::from_element(n * n, n, Complex::new(0.0, 0.0));
    for a in g.elements() {
        for x in g.elements() {
            m[(a * n + g.multiply(a, x), x)] += sigma.value(a, x).evaluate(sigma.basis())?;
            m[(a * n + g.multiply(x, a), x)] -= sigma.value(x, a).evaluate(sigma.basis())?;
        }
    }
    Ok(m)
}

/// Singular values of the stacked commutator operator, ascending.
pub fn commutator_singular_values(sigma: &Multiplier) -> Result<Vec<f64>> {
    let m = commutator_operator(sigma)?;
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(f64::total_cmp);
    Ok(sv)
}

/// Dimension of the center, counted as singular values below `tol` of the
/// operator `f ↦ (δ_a * f − f * δ_a)_a`. Refuses with
/// [`Error::IllConditioned`] when a singular value lies within a factor 10
/// of `tol`.
pub fn center_dimension_numeric(sigma: &Multiplier, tol: f64) -> Result<usize> {
    let sv = commutator_singular_values(sigma)?;
    let below = sv.iter().copied().filter(|s| *s < tol).fold(0.0, f64::max);
    let above = sv.iter().copied().filter(|s| *s >= tol).fold(f64::INFINITY, f64::min);
    if sv.iter().any(|s| *s > tol / 10.0 && *s < tol * 10.0) {
        return Err(Error::IllConditioned { tol, below, above });
    }
    Ok(sv.iter().filter(|s| **s < tol).count())
}

/// `Some(n)` when `|G| = n²` and the center is one-dimensional.
pub fn identify_matrix_algebra(sigma: &Multiplier, tol: f64) -> Result<Option<usize>> {
    let order = sigma.group().order();
    let n = (order as f64).sqrt().round() as usize;
    if n * n != order {
        return Ok(None);
    }
    Ok((center_dimension_numeric(sigma, tol)? == 1).then_some(n))
}
