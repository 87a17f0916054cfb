//! Multipliers (T-valued 2-cocycles), their validation, similarity and
//! normalization, and the finite-group families.

use std::fmt::Debug;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::direct::Bihomomorphism;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::torus::{IrrationalBasis, RotationNumber};

/// A group together with a T-valued function on pairs, written additively.
///
/// Implementors are expected to satisfy
/// `σ(a,b) + σ(ab,c) = σ(a,bc) + σ(b,c)` and `σ(a,e) = σ(e,a) = 0`;
/// [`validate_exhaustive`] and [`validate_sampled`] check this.
pub trait Cocycle {
    type Element: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn value(&self, a: &Self::Element, b: &Self::Element) -> RotationNumber;

    /// `σ(a,b) − σ(b,a)`
    fn commutator_phase(&self, a: &Self::Element, b: &Self::Element) -> RotationNumber {
        &self.value(a, b) - &self.value(b, a)
    }
}

/// Infinite domains that can be fuzzed.
pub trait SampleDomain: Cocycle {
    /// A random element whose size is controlled by `bound` (box radius or word length).
    fn sample(&self, rng: &mut ChaCha8Rng, bound: u32) -> Self::Element;
}

#[derive(Clone, Debug, PartialEq)]
pub enum MultiplierKind {
    /// Dense row-major `|G|×|G|` exponents.
    Table(Vec<RotationNumber>),
    /// `σ_k((a1,a2),(b1,b2)) = (k/n)·a2·b1` on `Z_n × Z_n`.
    Klein { n: usize, k: usize },
    /// `σ1(a1,b1) + σ2(a2,b2) + f(b1,a2)` on `G1 × G2`.
    DirectProduct { sigma1: Box<Multiplier>, sigma2: Box<Multiplier>, f: Bihomomorphism },
}

/// A multiplier on a finite group.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplier {
    group: Arc<FiniteGroup>,
    basis: IrrationalBasis,
    kind: MultiplierKind,
}

impl Multiplier {
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self { group, basis: IrrationalBasis::empty(), kind: MultiplierKind::Table(vec![RotationNumber::zero(); n * n]) }
    }

    /// A table multiplier. Only shape and basis are checked here; the cocycle
    /// identity is left to [`validate_exhaustive`].
    pub fn from_table(group: Arc<FiniteGroup>, values: Vec<Vec<RotationNumber>>, basis: IrrationalBasis) -> Result<Self> {
        let n = group.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::DomainMismatch(format!("table must be {n}×{n}")));
        }
        let flat: Vec<RotationNumber> = values.into_iter().flatten().collect();
        for x in &flat {
            basis.check(x)?;
        }
        Ok(Self { group, basis, kind: MultiplierKind::Table(flat) })
    }

    /// Klein's family on `Z_n × Z_n`, element `(a1, a2)` at index `a1·n + a2`.
    pub fn klein(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k >= n {
            return Err(Error::BadRange(format!("klein needs n >= 2 and 0 <= k < n, got n={n}, k={k}")));
        }
        let zn = FiniteGroup::cyclic(n);
        let group = Arc::new(FiniteGroup::direct_product(&zn, &zn));
        Ok(Self { group, basis: IrrationalBasis::empty(), kind: MultiplierKind::Klein { n, k } })
    }

    pub(crate) fn direct_product(group: Arc<FiniteGroup>, basis: IrrationalBasis, sigma1: Multiplier, sigma2: Multiplier, f: Bihomomorphism) -> Self {
        Self {
            group,
            basis,
            kind: MultiplierKind::DirectProduct { sigma1: Box::new(sigma1), sigma2: Box::new(sigma2), f },
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn basis(&self) -> &IrrationalBasis {
        &self.basis
    }

    pub fn kind(&self) -> &MultiplierKind {
        &self.kind
    }

    pub fn with_basis(mut self, basis: IrrationalBasis) -> Result<Self> {
        self.basis = self.basis.merge(&basis)?;
        Ok(self)
    }

    pub fn value(&self, a: usize, b: usize) -> RotationNumber {
        match &self.kind {
            MultiplierKind::Table(t) => t[a * self.group.order() + b].clone(),
            MultiplierKind::Klein { n, k } => {
                let (a2, b1) = ((a % n) as i64, (b / n) as i64);
                RotationNumber::from_ratio((*k as i64) * a2 * b1, *n as i64)
            }
            MultiplierKind::DirectProduct { sigma1, sigma2, f } => {
                let n2 = sigma2.group.order();
                let (a1, a2) = (a / n2, a % n2);
                let (b1, b2) = (b / n2, b % n2);
                let mut v = sigma1.value(a1, b1);
                v += &sigma2.value(a2, b2);
                v += f.value(b1, a2);
                v
            }
        }
    }

    pub fn checked_value(&self, a: usize, b: usize) -> Result<RotationNumber> {
        let n = self.group.order();
        if a >= n || b >= n {
            return Err(Error::DomainMismatch(format!("({a}, {b}) outside a group of order {n}")));
        }
        Ok(self.value(a, b))
    }

    /// Dense table of all values.
    pub fn to_table(&self) -> Multiplier {
        let n = self.group.order();
        let values = (0..n * n).map(|i| self.value(i / n, i % n)).collect();
        Self { group: self.group.clone(), basis: self.basis.clone(), kind: MultiplierKind::Table(values) }
    }

    pub fn rows(&self) -> Vec<Vec<RotationNumber>> {
        let n = self.group.order();
        (0..n).map(|a| (0..n).map(|b| self.value(a, b)).collect()).collect()
    }

    /// `σ(a, a⁻¹) = 0` for every `a`.
    pub fn is_normalized(&self) -> bool {
        self.group.elements().all(|a| self.value(a, self.group.inverse(a)).is_zero())
    }

    /// `β(a) + β(b) − β(ab) + σ(a,b)`.
    pub fn twist(&self, witness: &SimilarityWitness) -> Result<Multiplier> {
        let n = self.group.order();
        if witness.beta.len() != n {
            return Err(Error::DomainMismatch(format!("witness has {} entries for order {n}", witness.beta.len())));
        }
        let g = &self.group;
        let values = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut v = self.value(a, b);
                        v += &witness.beta[a];
                        v += &witness.beta[b];
                        v -= &witness.beta[g.multiply(a, b)];
                        v
                    })
                    .collect()
            })
            .collect();
        Multiplier::from_table(self.group.clone(), values, self.basis.clone())
    }
}

impl Cocycle for Multiplier {
    type Element = usize;

    fn identity(&self) -> usize {
        self.group.identity()
    }

    fn multiply(&self, a: &usize, b: &usize) -> usize {
        self.group.multiply(*a, *b)
    }

    fn inverse(&self, a: &usize) -> usize {
        self.group.inverse(*a)
    }

    fn value(&self, a: &usize, b: &usize) -> RotationNumber {
        Multiplier::value(self, *a, *b)
    }
}

/// First failure found by a validation run.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation<E> {
    /// `σ(a,e)` or `σ(e,a)` is not 1.
    Unit { a: E, value: RotationNumberText },
    /// `σ(a,b)σ(ab,c) ≠ σ(a,bc)σ(b,c)`.
    Cocycle { a: E, b: E, c: E, lhs: RotationNumberText, rhs: RotationNumberText },
}

/// Plain-text exponent used inside reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RotationNumberText(pub String);

impl From<&RotationNumber> for RotationNumberText {
    fn from(x: &RotationNumber) -> Self {
        Self(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport<E> {
    pub checked: usize,
    pub violation: Option<Violation<E>>,
}

impl<E> ValidationReport<E> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn check_unit<C: Cocycle>(sigma: &C, a: &C::Element) -> Option<Violation<C::Element>> {
    let e = sigma.identity();
    for v in [sigma.value(a, &e), sigma.value(&e, a)] {
        if !v.is_zero() {
            return Some(Violation::Unit { a: a.clone(), value: (&v).into() });
        }
    }
    None
}

/// Checks the cocycle identity at one triple.
pub fn check_triple<C: Cocycle>(sigma: &C, a: &C::Element, b: &C::Element, c: &C::Element) -> Option<Violation<C::Element>> {
    let ab = sigma.multiply(a, b);
    let bc = sigma.multiply(b, c);
    let lhs = sigma.value(a, b) + sigma.value(&ab, c);
    let rhs = sigma.value(a, &bc) + sigma.value(b, c);
    (lhs != rhs).then(|| Violation::Cocycle {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        lhs: (&lhs).into(),
        rhs: (&rhs).into(),
    })
}

/// Every unit condition and every triple of a finite multiplier.
pub fn validate_exhaustive(sigma: &Multiplier) -> ValidationReport<usize> {
    let g = sigma.group().clone();
    let mut checked = 0;
    for a in g.elements() {
        if let Some(v) = check_unit(sigma, &a) {
            return ValidationReport { checked, violation: Some(v) };
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.multiply(a, b);
            let sab = sigma.value(a, b);
            for c in g.elements() {
                checked += 1;
                let lhs = &sab + &sigma.value(ab, c);
                let rhs = sigma.value(a, g.multiply(b, c)) + sigma.value(b, c);
                if lhs != rhs {
                    let violation = Violation::Cocycle { a, b, c, lhs: (&lhs).into(), rhs: (&rhs).into() };
                    return ValidationReport { checked, violation: Some(violation) };
                }
            }
        }
    }
    ValidationReport { checked, violation: None }
}

/// `samples` random triples drawn with [`SampleDomain::sample`], plus the unit
/// conditions on every sampled element.
pub fn validate_sampled<C: SampleDomain>(sigma: &C, samples: usize, bound: u32, seed: u64) -> ValidationReport<C::Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for checked in 0..samples {
        let a = sigma.sample(&mut rng, bound);
        let b = sigma.sample(&mut rng, bound);
        let c = sigma.sample(&mut rng, bound);
        let violation = check_unit(sigma, &a).or_else(|| check_triple(sigma, &a, &b, &c));
        if violation.is_some() {
            return ValidationReport { checked: checked + 1, violation };
        }
    }
    ValidationReport { checked: samples, violation: None }
}

/// `β: G → T` with `β(e) = 0`, indexed by element.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityWitness {
    pub beta: Vec<RotationNumber>,
}

impl SimilarityWitness {
    pub fn zero(order: usize) -> Self {
        Self { beta: vec![RotationNumber::zero(); order] }
    }

    pub fn is_trivial(&self) -> bool {
        self.beta.iter().all(RotationNumber::is_zero)
    }
}

/// `τ(a,b) = β(a) + β(b) − β(ab) + σ(a,b)` at one pair.
pub fn similar_at<C: Cocycle, D: Cocycle<Element = C::Element>>(
    sigma: &C,
    tau: &D,
    beta: impl Fn(&C::Element) -> RotationNumber,
    a: &C::Element,
    b: &C::Element,
) -> bool {
    let ab = sigma.multiply(a, b);
    let mut v = sigma.value(a, b);
    v += &beta(a);
    v += &beta(b);
    v -= &beta(&ab);
    v == tau.value(a, b)
}

/// Checks `τ = σ · ∂β` on every pair of the finite group.
pub fn is_similar(sigma: &Multiplier, tau: &Multiplier, witness: &SimilarityWitness) -> Result<bool> {
    if sigma.group() != tau.group() && sigma.group().table() != tau.group().table() {
        return Err(Error::DomainMismatch("multipliers live on different groups".into()));
    }
    let g = sigma.group();
    if witness.beta.len() != g.order() {
        return Err(Error::DomainMismatch("witness length differs from the group order".into()));
    }
    if !witness.beta[g.identity()].is_zero() {
        return Ok(false);
    }
    let beta = |a: &usize| witness.beta[*a].clone();
    Ok(g.elements().all(|a| g.elements().all(|b| similar_at(sigma, tau, beta, &a, &b))))
}

/// A normalized multiplier similar to `sigma`, and the witness `β` with
/// `σ' = σ · ∂β`.
///
/// For each pair `{a, a⁻¹}` with `a ≠ a⁻¹`, `β(min) = 0` and
/// `β(max) = −σ(a, a⁻¹)`; for an involution `β(a) = −σ(a,a)/2`.
pub fn normalize(sigma: &Multiplier) -> (Multiplier, SimilarityWitness) {
    let g = sigma.group();
    let mut beta = vec![RotationNumber::zero(); g.order()];
    for a in g.elements() {
        let inv = g.inverse(a);
        if a == inv {
            beta[a] = -sigma.value(a, a).halve();
        } else if a < inv {
            beta[inv] = -sigma.value(a, inv);
        }
    }
    let witness = SimilarityWitness { beta };
    let normalized = sigma.twist(&witness).expect("witness matches the group");
    (normalized, witness)
}

/// A random coboundary twist of `sigma` with rational `β` values of
/// denominator dividing `denominator`; used to build test catalogs.
pub fn random_twist(sigma: &Multiplier, denominator: i64, rng: &mut impl Rng) -> (Multiplier, SimilarityWitness) {
    let g = sigma.group();
    let beta = g
        .elements()
        .map(|a| {
            if a == g.identity() {
                RotationNumber::zero()
            } else {
                RotationNumber::from_ratio(rng.random_range(0..denominator), denominator)
            }
        })
        .collect();
    let witness = SimilarityWitness { beta };
    (sigma.twist(&witness).expect("witness matches the group"), witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::ratio;

    fn rot(p: i64, q: i64) -> RotationNumber {
        RotationNumber::from_ratio(p, q)
    }

    fn klein_index(n: usize, a1: usize, a2: usize) -> usize {
        a1 * n + a2
    }

    #[test]
    fn klein_values() {
        let s = Multiplier::klein(2, 1).unwrap();
        assert_eq!(s.value(klein_index(2, 0, 1), klein_index(2, 1, 0)), rot(1, 2));
        assert_eq!(s.value(klein_index(2, 1, 1), klein_index(2, 1, 1)), rot(1, 2));
        let s = Multiplier::klein(4, 2).unwrap();
        assert_eq!(s.value(klein_index(4, 0, 1), klein_index(4, 1, 0)), rot(1, 2));
        assert_eq!(s.value(klein_index(4, 0, 1), klein_index(4, 2, 0)), rot(0, 1));
        let s = Multiplier::klein(3, 2).unwrap();
        assert_eq!(s.value(klein_index(3, 0, 2), klein_index(3, 2, 0)), rot(2, 3));
        let trivial = Multiplier::klein(2, 0).unwrap();
        assert!(trivial.rows().iter().flatten().all(RotationNumber::is_zero));
        for b in s.group().elements() {
            assert!(s.value(s.group().identity(), b).is_zero());
        }
    }

    #[test]
    fn klein_range_errors() {
        assert!(matches!(Multiplier::klein(1, 0), Err(Error::BadRange(_))));
        assert!(matches!(Multiplier::klein(3, 3), Err(Error::BadRange(_))));
        assert!(Multiplier::klein(3, 1).unwrap().checked_value(9, 0).is_err());
    }

    #[test]
    fn klein_family_passes_exhaustive_validation() {
        for n in 2..=6 {
            for k in 0..n {
                let r = validate_exhaustive(&Multiplier::klein(n, k).unwrap());
                assert!(r.passed(), "klein({n},{k}): {:?}", r.violation);
                assert_eq!(r.checked, (n * n).pow(3));
            }
        }
    }

    #[test]
    fn perturbed_table_fails_with_witness() {
        let s = Multiplier::klein(3, 1).unwrap();
        let mut rows = s.rows();
        rows[4][5] = &rows[4][5] + &rot(1, 7);
        let broken = Multiplier::from_table(s.group().clone(), rows, IrrationalBasis::empty()).unwrap();
        let r = validate_exhaustive(&broken);
        let Some(Violation::Cocycle { a, b, c, .. }) = r.violation else { panic!("expected a cocycle violation") };
        assert!(check_triple(&broken, &a, &b, &c).is_some());

        let mut rows = s.rows();
        rows[0][3] = rot(1, 2);
        let broken = Multiplier::from_table(s.group().clone(), rows, IrrationalBasis::empty()).unwrap();
        assert!(matches!(validate_exhaustive(&broken).violation, Some(Violation::Unit { .. })));
    }

    #[test]
    fn trivial_passes() {
        let t = Multiplier::trivial(Arc::new(FiniteGroup::symmetric(3)));
        assert!(validate_exhaustive(&t).passed());
    }

    #[test]
    fn similarity_examples() {
        let s = Multiplier::klein(2, 1).unwrap();
        assert!(is_similar(&s, &s, &SimilarityWitness::zero(4)).unwrap());
        // a wrong β: the coboundary is nonzero, so σ is not equal to itself twisted
        let wrong = SimilarityWitness { beta: vec![rot(0, 1), rot(1, 3), rot(0, 1), rot(0, 1)] };
        assert!(!is_similar(&s, &s, &wrong).unwrap());
        // but it does witness similarity to its own twist
        let twisted = s.twist(&wrong).unwrap();
        assert!(is_similar(&s, &twisted, &wrong).unwrap());
        let bad_e = SimilarityWitness { beta: vec![rot(1, 3), rot(0, 1), rot(0, 1), rot(0, 1)] };
        assert!(!is_similar(&s, &s, &bad_e).unwrap());
        let other = Multiplier::trivial(Arc::new(FiniteGroup::cyclic(4)));
        assert!(is_similar(&s, &other, &SimilarityWitness::zero(4)).is_err());
    }

    #[test]
    fn normalize_klein() {
        for n in 2..=5 {
            for k in 0..n {
                let s = Multiplier::klein(n, k).unwrap();
                let (sn, w) = normalize(&s);
                assert!(sn.is_normalized());
                assert!(is_similar(&s, &sn, &w).unwrap());
                assert!(validate_exhaustive(&sn).passed());
                let (again, w2) = normalize(&sn);
                assert_eq!(again.rows(), sn.rows());
                assert!(w2.is_trivial());
            }
        }
    }

    #[test]
    fn normalize_involution_on_z2() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let s = Multiplier::from_table(z2, vec![vec![rot(0, 1), rot(0, 1)], vec![rot(0, 1), rot(1, 2)]], IrrationalBasis::empty()).unwrap();
        assert!(validate_exhaustive(&s).passed());
        let (sn, w) = normalize(&s);
        assert_eq!(w.beta[1], rot(-1, 4));
        assert!(sn.value(1, 1).is_zero());
        assert!(is_similar(&s, &sn, &w).unwrap());
    }

    #[test]
    fn normalize_keeps_irrational_parts_exact() {
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let basis = IrrationalBasis::new(["t"]).unwrap();
        let t = RotationNumber::irrational(0);
        let beta = SimilarityWitness { beta: vec![rot(0, 1), t.clone(), t.scale(3).with_coeff(0, ratio(1, 2))] };
        let s = Multiplier::trivial(z3).with_basis(basis).unwrap().twist(&beta).unwrap();
        assert!(!s.is_normalized());
        let (sn, w) = normalize(&s);
        assert!(sn.is_normalized());
        assert!(is_similar(&s, &sn, &w).unwrap());
    }
}
