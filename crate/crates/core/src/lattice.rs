//! Two infinite families: the cocycles `σ_θ` on `Z^n` and `σ_μ` on the free
//! nilpotent group `G(3)` of class 2 and rank 3. Condition K is decided
//! exactly by reducing regularity to an integer-lattice question.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{combine, integral_combination, rational_rank, IntegralCombination};
use crate::multiplier::{Cocycle, SampleDomain};
use crate::torus::{IrrationalBasis, RotationNumber};

/// Antisymmetric data `t_ij` (`i < j`, zero-based) for `σ_θ` on `Z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Theta {
    n: usize,
    entries: BTreeMap<(usize, usize), RotationNumber>,
    basis: IrrationalBasis,
}

impl Theta {
    pub fn new(n: usize, entries: BTreeMap<(usize, usize), RotationNumber>, basis: IrrationalBasis) -> Result<Self> {
        for (&(i, j), t) in &entries {
            if i >= j || j >= n {
                return Err(Error::BadRange(format!("theta index ({}, {}) must satisfy 1 <= i < j <= {n}", i + 1, j + 1)));
            }
            basis.check(t)?;
        }
        let entries = entries.into_iter().filter(|(_, t)| !t.is_zero()).collect();
        Ok(Self { n, entries, basis })
    }

    /// The rank 2 case with `t12 = t`.
    pub fn rank_two(t: RotationNumber, basis: IrrationalBasis) -> Result<Self> {
        Self::new(2, BTreeMap::from([((0, 1), t)]), basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &IrrationalBasis {
        &self.basis
    }

    pub fn entry(&self, i: usize, j: usize) -> RotationNumber {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), RotationNumber> {
        &self.entries
    }

    /// `M_ij = t_ij`, `M_ji = −t_ij`, zero diagonal.
    pub fn matrix(&self) -> Vec<Vec<RotationNumber>> {
        let mut m = vec![vec![RotationNumber::zero(); self.n]; self.n];
        for (&(i, j), t) in &self.entries {
            m[i][j] = t.clone();
            m[j][i] = -t;
        }
        m
    }

    fn check_rank(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::RankMismatch { expected: self.n, got: a.len() });
        }
        Ok(())
    }
}

/// `Σ_{i<j} a_i t_ij b_j`
pub fn torus_value(theta: &Theta, a: &[i64], b: &[i64]) -> Result<RotationNumber> {
    theta.check_rank(a)?;
    theta.check_rank(b)?;
    Ok(theta.entries.iter().map(|(&(i, j), t)| t.scale(a[i] * b[j])).sum())
}

/// `Σ_{i<j} t_ij (a_i b_j − b_i a_j)`
pub fn commutator_phase(theta: &Theta, a: &[i64], b: &[i64]) -> Result<RotationNumber> {
    theta.check_rank(a)?;
    theta.check_rank(b)?;
    Ok(theta.entries.iter().map(|(&(i, j), t)| t.scale(a[i] * b[j] - b[i] * a[j])).sum())
}

/// `aᵀM` integral in every component.
pub fn is_regular_lattice(theta: &Theta, a: &[i64]) -> Result<bool> {
    theta.check_rank(a)?;
    let a: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    Ok(combine(&a, &theta.matrix()).iter().all(RotationNumber::is_integral))
}

/// A decision with its witness on the negative side.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeDecision {
    pub condition_k: bool,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<Vec<BigInt>>,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(|x| x.to_string())),
    }
}

impl LatticeDecision {
    fn from_combination(c: IntegralCombination) -> Self {
        match c {
            IntegralCombination::None => Self { condition_k: true, witness: None },
            IntegralCombination::Witness(v) => Self { condition_k: false, witness: Some(v) },
        }
    }

    /// The witness as machine integers, if it fits.
    pub fn witness_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.witness.as_ref()?.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// Decides whether some `a ≠ 0` has `aᵀM` integral.
pub fn condition_k_lattice(theta: &Theta) -> LatticeDecision {
    LatticeDecision::from_combination(integral_combination(&theta.matrix()))
}

/// Dimension over Q of the span of `1, t12, t13, t23`.
pub fn qtheta_dimension(theta: &Theta) -> Result<usize> {
    if theta.n != 3 {
        return Err(Error::RankMismatch { expected: 3, got: theta.n });
    }
    let k = theta.basis.len();
    let coords = |x: &RotationNumber| -> Vec<BigRational> {
        std::iter::once(x.rat().clone()).chain((0..k).map(|i| x.coeff(i))).collect()
    };
    let mut one = vec![BigRational::default(); k + 1];
    one[0] = BigRational::from_integer(1.into());
    let mut rows = vec![one];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        rows.push(coords(&theta.entry(i, j)));
    }
    Ok(rational_rank(&rows))
}

/// First nonzero regular `a` in `[−B, B]^n`, in lexicographic order.
pub fn box_scan(theta: &Theta, bound: i64) -> Option<Vec<i64>> {
    let n = theta.n;
    let mut a = vec![-bound; n];
    loop {
        if a.iter().any(|&x| x != 0) && is_regular_lattice(theta, &a).expect("rank matches") {
            return Some(a);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if a[i] < bound {
                a[i] += 1;
                break;
            }
            a[i] = -bound;
        }
    }
}

/// `σ_θ` as a cocycle on `Z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusCocycle(pub Theta);

impl Cocycle for TorusCocycle {
    type Element = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.0.n]
    }

    fn multiply(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn value(&self, a: &Vec<i64>, b: &Vec<i64>) -> RotationNumber {
        torus_value(&self.0, a, b).expect("elements have rank n")
    }
}

impl SampleDomain for TorusCocycle {
    fn sample(&self, rng: &mut ChaCha8Rng, bound: u32) -> Vec<i64> {
        let b = bound as i64;
        (0..self.0.n).map(|_| rng.random_range(-b..=b)).collect()
    }
}

/// An element of `G(3)`: `(a1, a2, a3)` generators, `(a4, a5, a6)` central.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct G3Element(pub [i64; 6]);

impl G3Element {
    pub const IDENTITY: Self = Self([0; 6]);

    pub fn central(c: [i64; 3]) -> Self {
        Self([0, 0, 0, c[0], c[1], c[2]])
    }
}

pub fn g3_multiply(a: &G3Element, b: &G3Element) -> G3Element {
    let (a, b) = (a.0, b.0);
    G3Element([
        a[0] + b[0],
        a[1] + b[1],
        a[2] + b[2],
        a[3] + b[3] + a[0] * b[1],
        a[4] + b[4] + a[0] * b[2],
        a[5] + b[5] + a[1] * b[2],
    ])
}

pub fn g3_inverse(a: &G3Element) -> G3Element {
    let a = a.0;
    G3Element([-a[0], -a[1], -a[2], a[0] * a[1] - a[3], a[0] * a[2] - a[4], a[1] * a[2] - a[5]])
}

/// The eight parameters of `σ_μ` as exponents. The entry `μ31 = μ22 − μ13`
/// is derived.
#[derive(Clone, Debug, PartialEq)]
pub struct MuMatrix {
    pub mu11: RotationNumber,
    pub mu12: RotationNumber,
    pub mu13: RotationNumber,
    pub mu21: RotationNumber,
    pub mu22: RotationNumber,
    pub mu23: RotationNumber,
    pub mu32: RotationNumber,
    pub mu33: RotationNumber,
    pub basis: IrrationalBasis,
}

pub const MU_KEYS: [&str; 8] = ["11", "12", "13", "21", "22", "23", "32", "33"];

impl MuMatrix {
    /// Parameters in the order of [`MU_KEYS`].
    pub fn new(values: [RotationNumber; 8], basis: IrrationalBasis) -> Result<Self> {
        for v in &values {
            basis.check(v)?;
        }
        let [mu11, mu12, mu13, mu21, mu22, mu23, mu32, mu33] = values;
        Ok(Self { mu11, mu12, mu13, mu21, mu22, mu23, mu32, mu33, basis })
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| RotationNumber::zero()), IrrationalBasis::empty()).unwrap()
    }

    pub fn mu31(&self) -> RotationNumber {
        &self.mu22 - &self.mu13
    }

    /// `R_ij` with row 3 using the derived entry.
    pub fn rows(&self) -> [[RotationNumber; 3]; 3] {
        [
            [self.mu11.clone(), self.mu12.clone(), self.mu13.clone()],
            [self.mu21.clone(), self.mu22.clone(), self.mu23.clone()],
            [self.mu31(), self.mu32.clone(), self.mu33.clone()],
        ]
    }
}

fn tri(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `σ_μ(a, b)`.
///
/// The exponents of `μ13` and `μ22` are `b6a1 + b3a4` and
/// `b5a2 + b3(a1a2 − a4)`; these are the signs under which the cocycle
/// identity holds.
pub fn g3_value(mu: &MuMatrix, a: &G3Element, b: &G3Element) -> RotationNumber {
    let [a1, a2, a3, a4, _, _] = a.0;
    let [_, b2, b3, b4, b5, b6] = b.0;
    let terms = [
        (&mu.mu13, b6 * a1 + b3 * a4),
        (&mu.mu22, b5 * a2 + b3 * (a1 * a2 - a4)),
        (&mu.mu11, b4 * a1 + b2 * tri(a1)),
        (&mu.mu21, a2 * (b4 + a1 * b2) + a1 * tri(b2)),
        (&mu.mu12, b5 * a1 + b3 * tri(a1)),
        (&mu.mu32, a3 * (b5 + a1 * b3) + a1 * tri(b3)),
        (&mu.mu23, b6 * a2 + b3 * tri(a2)),
        (&mu.mu33, a3 * (b6 + a2 * b3) + a2 * tri(b3)),
    ];
    terms.into_iter().map(|(m, k)| m.scale(k)).sum()
}

/// Decides whether some central `c ≠ 0` has `Rc` integral.
pub fn g3_condition_k(mu: &MuMatrix) -> LatticeDecision {
    let rows = mu.rows();
    // columns of Rᵀ are the rows of R, so xᵀRᵀ = (Rx)ᵀ
    let transposed: Vec<Vec<RotationNumber>> = (0..3).map(|j| (0..3).map(|i| rows[i][j].clone()).collect()).collect();
    LatticeDecision::from_combination(integral_combination(&transposed))
}

/// `σ_μ(a,c) − σ_μ(c,a)` for central `c`, by direct evaluation.
pub fn g3_central_phase(mu: &MuMatrix, a: &G3Element, c: [i64; 3]) -> RotationNumber {
    let c = G3Element::central(c);
    &g3_value(mu, a, &c) - &g3_value(mu, &c, a)
}

/// `σ_μ` as a cocycle on `G(3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct G3Cocycle(pub MuMatrix);

impl Cocycle for G3Cocycle {
    type Element = G3Element;

    fn identity(&self) -> G3Element {
        G3Element::IDENTITY
    }

    fn multiply(&self, a: &G3Element, b: &G3Element) -> G3Element {
        g3_multiply(a, b)
    }

    fn inverse(&self, a: &G3Element) -> G3Element {
        g3_inverse(a)
    }

    fn value(&self, a: &G3Element, b: &G3Element) -> RotationNumber {
        g3_value(&self.0, a, b)
    }
}

impl SampleDomain for G3Cocycle {
    fn sample(&self, rng: &mut ChaCha8Rng, bound: u32) -> G3Element {
        let b = bound as i64;
        G3Element(std::array::from_fn(|_| rng.random_range(-b..=b)))
    }
}
