//! Exact linear algebra over Q and Z: rank, integer kernels via column
//! Hermite reduction, and the "integral combination" decision used by the
//! lattice families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::torus::RotationNumber;

/// Rank over Q, by fraction-exact Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for k in c..cols {
                    let delta = &factor * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Result of reducing an integer matrix by unimodular column operations.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnReduction {
    /// `C·U` in column echelon form; its first `rank` columns are independent
    /// and the rest are zero.
    pub reduced: Vec<Vec<BigInt>>,
    /// Unimodular `n×n`, stored by columns.
    pub transform: Vec<Vec<BigInt>>,
    pub rank: usize,
}

impl ColumnReduction {
    /// A Z-basis of `{x ∈ Z^n : Cx = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        self.transform[self.rank..].to_vec()
    }
}

/// Column-style Hermite reduction of `c` (`rows × n`). Pivots are chosen by
/// minimal absolute value to keep entries small.
pub fn column_reduce(c: &[Vec<BigInt>], n: usize) -> ColumnReduction {
    // work with columns so that column operations are row operations here
    let mut cols: Vec<Vec<BigInt>> = (0..n).map(|j| c.iter().map(|row| row[j].clone()).collect()).collect();
    let mut transform: Vec<Vec<BigInt>> =
        (0..n).map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut p = 0;
    for i in 0..c.len() {
        if p == n {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (p..n).filter(|&j| !cols[j][i].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    cols.swap(p, j);
                    transform.swap(p, j);
                }
                break;
            }
            let &best = nonzero.iter().min_by_key(|&&j| cols[j][i].abs()).unwrap();
            cols.swap(p, best);
            transform.swap(p, best);
            for j in p + 1..n {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[p][i]);
                let (pivot_col, pivot_u) = (cols[p].clone(), transform[p].clone());
                for (x, y) in cols[j].iter_mut().zip(&pivot_col) {
                    *x -= &q * y;
                }
                for (x, y) in transform[j].iter_mut().zip(&pivot_u) {
                    *x -= &q * y;
                }
            }
        }
        if !cols[p][i].is_zero() {
            if cols[p][i].is_negative() {
                for x in cols[p].iter_mut().chain(transform[p].iter_mut()) {
                    *x = -&*x;
                }
            }
            p += 1;
        }
    }
    let reduced = (0..c.len()).map(|i| cols.iter().map(|col| col[i].clone()).collect()).collect();
    ColumnReduction { reduced, transform, rank: p }
}

/// Scales a rational row to a primitive integer row.
fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// Decision for "is there a nonzero `x ∈ Z^n` with `Σ_i x_i·A[i][j]`
/// integral for every column `j`?".
#[derive(Clone, Debug, PartialEq)]
pub enum IntegralCombination {
    /// Only `x = 0`.
    None,
    /// A nonzero solution.
    Witness(Vec<BigInt>),
}

/// Splits each entry of `a` (`n × m`) into rational and irrational parts;
/// the irrational parts must cancel exactly (independence of `1, t_k`),
/// which cuts out a lattice `L`. Any nonzero `v ∈ L` scaled by the common
/// denominator of `vᵀA₀` is a solution, so solutions exist iff `L ≠ 0`.
pub fn integral_combination(a: &[Vec<RotationNumber>]) -> IntegralCombination {
    let n = a.len();
    if n == 0 {
        return IntegralCombination::None;
    }
    let m = a[0].len();
    let labels: std::collections::BTreeSet<usize> =
        a.iter().flatten().flat_map(|x| x.coeffs().keys().copied()).collect();
    let mut constraints = Vec::new();
    for &k in &labels {
        for j in 0..m {
            let row: Vec<BigRational> = (0..n).map(|i| a[i][j].coeff(k)).collect();
            if row.iter().any(|x| !x.is_zero()) {
                constraints.push(clear_denominators(&row));
            }
        }
    }
    let reduction = column_reduce(&constraints, n);
    let Some(v) = reduction.kernel_basis().into_iter().next() else {
        return IntegralCombination::None;
    };
    let q = (0..m).fold(BigInt::one(), |acc, j| {
        let r: BigRational = (0..n).map(|i| a[i][j].rat() * BigRational::from_integer(v[i].clone())).sum();
        acc.lcm(r.denom())
    });
    IntegralCombination::Witness(v.into_iter().map(|x| x * &q).collect())
}

/// `Σ_i x_i·A[i][j]` for every `j`.
pub fn combine(x: &[BigInt], a: &[Vec<RotationNumber>]) -> Vec<RotationNumber> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| x.iter().zip(a).map(|(xi, row)| row[j].scale_big(xi)).sum()).collect()
}
