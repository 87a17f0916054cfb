//! Circle-group values written additively.
//!
//! A [`RotationNumber`] `x` stands for the unit complex number `e^{2πi x}`. The
//! exponent is kept as a rational part plus a Q-linear combination of formal
//! irrationals declared in an [`IrrationalBasis`]; `{1} ∪ basis` is assumed to be
//! linearly independent over Q. Multiplication in T becomes exact addition here.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use nalgebra::Complex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::BadRational(s.to_string()))
}

/// Always `"p/q"`, including integers (`"3/1"`).
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// Ordered list of formal irrational symbols.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IrrationalBasis {
    labels: Vec<String>,
    hints: Vec<Option<f64>>,
}

impl IrrationalBasis {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let hints = vec![None; labels.len()];
        Ok(Self { labels, hints })
    }

    pub fn with_hint(mut self, label: &str, value: f64) -> Result<Self> {
        let i = self.index_of(label)?;
        self.hints[i] = Some(value);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn hint(&self, index: usize) -> Option<f64> {
        self.hints.get(index).copied().flatten()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Every irrational index used by `x` must exist in this basis.
    pub fn check(&self, x: &RotationNumber) -> Result<()> {
        match x.coeffs.keys().next_back() {
            Some(&i) if i >= self.len() => Err(Error::IndexOutOfBasis { index: i, len: self.len() }),
            _ => Ok(()),
        }
    }

    /// Merges two bases when one extends the other; any other combination is a mismatch.
    pub fn merge(&self, other: &Self) -> Result<Self> {
        let (long, short) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        if long.labels[..short.len()] != short.labels[..] {
            return Err(Error::BasisMismatch(format!("{:?} vs {:?}", self.labels, other.labels)));
        }
        let mut out = long.clone();
        for (i, h) in short.hints.iter().enumerate() {
            if out.hints[i].is_none() {
                out.hints[i] = *h;
            }
        }
        Ok(out)
    }
}

/// Exponent of a circle value, kept in canonical form.
///
/// Canonical means `rat ∈ [0, 1)` in lowest terms and no zero coefficients, so
/// derived equality coincides with equality of the circle values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationNumber {
    rat: BigRational,
    coeffs: BTreeMap<usize, BigRational>,
}

impl Default for RotationNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl RotationNumber {
    pub fn zero() -> Self {
        Self { rat: BigRational::zero(), coeffs: BTreeMap::new() }
    }

    pub fn new(rat: BigRational, coeffs: BTreeMap<usize, BigRational>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { rat: frac(&rat), coeffs }
    }

    pub fn rational(q: BigRational) -> Self {
        Self { rat: frac(&q), coeffs: BTreeMap::new() }
    }

    /// `p/q` as a rotation number.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::rational(ratio(p, q))
    }

    /// The formal irrational with the given basis index.
    pub fn irrational(index: usize) -> Self {
        Self::zero().with_coeff(index, BigRational::one())
    }

    pub fn with_coeff(mut self, index: usize, c: BigRational) -> Self {
        let slot = self.coeffs.entry(index).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
        self
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> BigRational {
        self.coeffs.get(&index).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.is_integral()
    }

    /// True iff the circle value is 1.
    pub fn is_integral(&self) -> bool {
        self.rat.is_zero() && self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        self.scale_big(&BigInt::from(k))
    }

    pub fn scale_big(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let k = BigRational::from_integer(k.clone());
        Self {
            rat: frac(&(&self.rat * &k)),
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * &k)).collect(),
        }
    }

    /// Divides the canonical representative by two; the result's rational
    /// part lies in `[0, 1/2)`.
    pub fn halve(&self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        Self {
            rat: &self.rat / &two,
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c / &two)).collect(),
        }
    }

    /// `e^{2πi x}` using the basis float hints.
    pub fn evaluate(&self, basis: &IrrationalBasis) -> Result<Complex<f64>> {
        let mut phase = self.rat.to_f64().unwrap_or(0.0);
        for (&i, c) in &self.coeffs {
            let label = basis.labels.get(i).ok_or(Error::IndexOutOfBasis { index: i, len: basis.len() })?;
            let h = basis.hint(i).ok_or_else(|| Error::MissingHint(label.clone()))?;
            phase += c.to_f64().unwrap_or(0.0) * h;
        }
        let t = std::f64::consts::TAU * phase.rem_euclid(1.0);
        Ok(Complex::new(t.cos(), t.sin()))
    }

    /// Least common multiple of the denominators of all coefficients and the rational part.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.values().fold(self.rat.denom().clone(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn to_json(&self, basis: &IrrationalBasis) -> Result<RotationJson> {
        basis.check(self)?;
        Ok(RotationJson {
            rat: format_rational(&self.rat),
            irr: self
                .coeffs
                .iter()
                .map(|(i, c)| (basis.labels[*i].clone(), format_rational(c)))
                .collect(),
        })
    }

    pub fn from_json(json: &RotationJson, basis: &IrrationalBasis) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (label, c) in &json.irr {
            coeffs.insert(basis.index_of(label)?, parse_rational(c)?);
        }
        Ok(Self::new(parse_rational(&json.rat)?, coeffs))
    }

    /// Human-readable form using basis labels, e.g. `1/2 + t - 1/3*s`.
    pub fn display<'a>(&'a self, basis: &'a IrrationalBasis) -> impl fmt::Display + 'a {
        Labelled { x: self, basis }
    }
}

struct Labelled<'a> {
    x: &'a RotationNumber,
    basis: &'a IrrationalBasis,
}

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x.rat)?;
        for (i, c) in &self.x.coeffs {
            let label = self.basis.labels.get(*i).cloned().unwrap_or_else(|| format!("t{i}"));
            let sign = if c.is_negative() { '-' } else { '+' };
            let c = c.abs();
            if c.is_one() {
                write!(f, " {sign} {label}")?;
            } else {
                write!(f, " {sign} {c}*{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&IrrationalBasis::empty()))
    }
}

impl Add<&RotationNumber> for &RotationNumber {
    type Output = RotationNumber;

    fn add(self, rhs: &RotationNumber) -> RotationNumber {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RotationNumber {
    type Output = RotationNumber;

    fn add(mut self, rhs: RotationNumber) -> RotationNumber {
        self += &rhs;
        self
    }
}

impl Add<&RotationNumber> for RotationNumber {
    type Output = RotationNumber;

    fn add(mut self, rhs: &RotationNumber) -> RotationNumber {
        self += rhs;
        self
    }
}

impl Sub<&RotationNumber> for RotationNumber {
    type Output = RotationNumber;

    fn sub(mut self, rhs: &RotationNumber) -> RotationNumber {
        self -= rhs;
        self
    }
}

impl AddAssign<&RotationNumber> for RotationNumber {
    fn add_assign(&mut self, rhs: &RotationNumber) {
        if !rhs.rat.is_zero() {
            self.rat += &rhs.rat;
            if self.rat >= BigRational::one() {
                self.rat -= BigRational::one();
            }
        }
        for (i, c) in &rhs.coeffs {
            let slot = self.coeffs.entry(*i).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                self.coeffs.remove(i);
            }
        }
    }
}

impl SubAssign<&RotationNumber> for RotationNumber {
    fn sub_assign(&mut self, rhs: &RotationNumber) {
        *self += &-rhs;
    }
}

impl Sub<&RotationNumber> for &RotationNumber {
    type Output = RotationNumber;

    fn sub(self, rhs: &RotationNumber) -> RotationNumber {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RotationNumber {
    type Output = RotationNumber;

    fn sub(mut self, rhs: RotationNumber) -> RotationNumber {
        self -= &rhs;
        self
    }
}

impl Neg for &RotationNumber {
    type Output = RotationNumber;

    fn neg(self) -> RotationNumber {
        let rat = if self.rat.is_zero() { BigRational::zero() } else { BigRational::one() - &self.rat };
        RotationNumber { rat, coeffs: self.coeffs.iter().map(|(i, c)| (*i, -c)).collect() }
    }
}

impl Neg for RotationNumber {
    type Output = RotationNumber;

    fn neg(self) -> RotationNumber {
        -&self
    }
}

impl std::iter::Sum for RotationNumber {
    fn sum<I: Iterator<Item = RotationNumber>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// `{"rat":"p/q","irr":{"t12":"r/s"}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationJson {
    pub rat: String,
    #[serde(default)]
    pub irr: BTreeMap<String, String>,
}
