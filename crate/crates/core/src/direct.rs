//! Multipliers on `G1 × G2` assembled from `(σ1, σ2, f)` with `f` a
//! bihomomorphism, and the primeness criterion for them.
//!
//! Elements of the product are packed as `a1·|G2| + a2`, matching
//! [`FiniteGroup::direct_product`].

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{pack, unpack, FiniteGroup};
use crate::multiplier::Multiplier;
use crate::regularity::is_regular_element;
use crate::torus::{IrrationalBasis, RotationNumber};

/// `f: G1 × G2 → T`, additive in each variable.
#[derive(Clone, Debug, PartialEq)]
pub struct Bihomomorphism {
    g1: Arc<FiniteGroup>,
    g2: Arc<FiniteGroup>,
    table: Vec<RotationNumber>,
}

impl Bihomomorphism {
    /// Validates both additivity laws on every triple.
    pub fn new(g1: Arc<FiniteGroup>, g2: Arc<FiniteGroup>, table: Vec<Vec<RotationNumber>>) -> Result<Self> {
        let (n1, n2) = (g1.order(), g2.order());
        if table.len() != n1 || table.iter().any(|r| r.len() != n2) {
            return Err(Error::InvalidBihomomorphism(format!("table must be {n1}×{n2}")));
        }
        let f = Self { g1, g2, table: table.into_iter().flatten().collect() };
        f.check()?;
        Ok(f)
    }

    pub fn zero(g1: Arc<FiniteGroup>, g2: Arc<FiniteGroup>) -> Self {
        let len = g1.order() * g2.order();
        Self { g1, g2, table: vec![RotationNumber::zero(); len] }
    }

    /// `f(x, y) = x·y·r` on `Z_{n1} × Z_{n2}`; needs `n1·r` and `n2·r` integral.
    pub fn cyclic(n1: usize, n2: usize, r: RotationNumber) -> Result<Self> {
        let table = (0..n1).map(|x| (0..n2).map(|y| r.scale((x * y) as i64)).collect()).collect();
        Self::new(Arc::new(FiniteGroup::cyclic(n1)), Arc::new(FiniteGroup::cyclic(n2)), table)
    }

    fn check(&self) -> Result<()> {
        let (g1, g2) = (&self.g1, &self.g2);
        for a1 in g1.elements() {
            for b1 in g1.elements() {
                let ab = g1.multiply(a1, b1);
                for a2 in g2.elements() {
                    if *self.value(ab, a2) != self.value(a1, a2) + self.value(b1, a2) {
                        return Err(Error::InvalidBihomomorphism(format!(
                            "not additive in the first variable at ({a1}, {b1}; {a2})"
                        )));
                    }
                }
            }
        }
        for a2 in g2.elements() {
            for b2 in g2.elements() {
                let ab = g2.multiply(a2, b2);
                for a1 in g1.elements() {
                    if *self.value(a1, ab) != self.value(a1, a2) + self.value(a1, b2) {
                        return Err(Error::InvalidBihomomorphism(format!(
                            "not additive in the second variable at ({a1}; {a2}, {b2})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn g1(&self) -> &Arc<FiniteGroup> {
        &self.g1
    }

    pub fn g2(&self) -> &Arc<FiniteGroup> {
        &self.g2
    }

    /// `f(x1, x2)` with `x1 ∈ G1`, `x2 ∈ G2`.
    pub fn value(&self, x1: usize, x2: usize) -> &RotationNumber {
        &self.table[x1 * self.g2.order() + x2]
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(RotationNumber::is_zero)
    }

    pub fn rows(&self) -> Vec<Vec<RotationNumber>> {
        let n2 = self.g2.order();
        self.table.chunks(n2).map(|r| r.to_vec()).collect()
    }
}

fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.table() == b.table()
}

/// `σ((a1,a2),(b1,b2)) = σ1(a1,b1) + σ2(a2,b2) + f(b1,a2)`.
pub fn assemble(sigma1: &Multiplier, sigma2: &Multiplier, f: &Bihomomorphism) -> Result<Multiplier> {
    if !same_group(sigma1.group(), f.g1()) || !same_group(sigma2.group(), f.g2()) {
        return Err(Error::InvalidBihomomorphism("bihomomorphism is defined on different groups".into()));
    }
    let basis: IrrationalBasis = sigma1.basis().merge(sigma2.basis())?;
    let group = Arc::new(FiniteGroup::direct_product(sigma1.group(), sigma2.group()));
    Ok(Multiplier::direct_product(group, basis, sigma1.clone(), sigma2.clone(), f.clone()))
}

/// Restriction of a multiplier on `G1 × G2` to one factor (`factor` is 1 or 2).
pub fn restriction(sigma: &Multiplier, g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>, factor: u8) -> Result<Multiplier> {
    if sigma.group().order() != g1.order() * g2.order() {
        return Err(Error::DomainMismatch("multiplier does not live on G1 × G2".into()));
    }
    let n2 = g2.order();
    let (g, embed): (&Arc<FiniteGroup>, Box<dyn Fn(usize) -> usize>) = match factor {
        1 => (g1, Box::new(move |x| pack(x, 0, n2))),
        2 => (g2, Box::new(move |x| pack(0, x, n2))),
        _ => return Err(Error::BadRange(format!("factor must be 1 or 2, got {factor}"))),
    };
    let rows = g.elements().map(|a| g.elements().map(|b| sigma.value(embed(a), embed(b))).collect()).collect();
    Multiplier::from_table(g.clone(), rows, sigma.basis().clone())
}

/// Both sides of the regularity identity at `(a, b)`:
/// `[σ(a,b) − σ(b,a)] + f(a1,b2) − f(b1,a2)` and the sum of the factor phases.
pub fn regularity_identity_sides(
    sigma1: &Multiplier,
    sigma2: &Multiplier,
    f: &Bihomomorphism,
    a: usize,
    b: usize,
) -> Result<(RotationNumber, RotationNumber)> {
    let sigma = assemble(sigma1, sigma2, f)?;
    let n2 = sigma2.group().order();
    let ((a1, a2), (b1, b2)) = (unpack(a, n2), unpack(b, n2));
    let lhs = &sigma.value(a, b) - &sigma.value(b, a) + f.value(a1, b2) - f.value(b1, a2);
    let rhs = &sigma1.value(a1, b1) - &sigma1.value(b1, a1) + sigma2.value(a2, b2) - sigma2.value(b2, a2);
    Ok((lhs, rhs))
}

pub fn regularity_identity_check(sigma1: &Multiplier, sigma2: &Multiplier, f: &Bihomomorphism, a: usize, b: usize) -> Result<bool> {
    let (lhs, rhs) = regularity_identity_sides(sigma1, sigma2, f, a, b)?;
    Ok(lhs == rhs)
}

/// Outcome of the criterion scan. `failing_class` holds the members of a
/// nontrivial class for which no `(a, b)` satisfies either condition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneracyReport {
    pub prime: bool,
    pub failing_class: Option<Vec<usize>>,
}

/// For every nontrivial class `C` of `G1 × G2`, looks for `a ∈ C` and
/// `b ∈ G` with either
/// `a1b1 = b1a1` and `f(b1,a2) ≠ σ1(b1,a1) − σ1(a1,b1)`, or
/// `a2b2 = b2a2` and `f(a1,b2) ≠ σ2(a2,b2) − σ2(b2,a2)`.
pub fn f_degeneracy(sigma1: &Multiplier, sigma2: &Multiplier, f: &Bihomomorphism) -> Result<DegeneracyReport> {
    let (g1, g2) = (sigma1.group(), sigma2.group());
    if !same_group(g1, f.g1()) || !same_group(g2, f.g2()) {
        return Err(Error::InvalidBihomomorphism("bihomomorphism is defined on different groups".into()));
    }
    let product = FiniteGroup::direct_product(g1, g2);
    let n2 = g2.order();
    let condition_1 = |a1: usize, a2: usize, b1: usize| {
        g1.commute(a1, b1) && *f.value(b1, a2) != &sigma1.value(b1, a1) - &sigma1.value(a1, b1)
    };
    let condition_2 = |a1: usize, a2: usize, b2: usize| {
        g2.commute(a2, b2) && *f.value(a1, b2) != &sigma2.value(a2, b2) - &sigma2.value(b2, a2)
    };
    for class in product.conjugacy_classes() {
        if class.members == [product.identity()] {
            continue;
        }
        let found = class.members.iter().any(|&a| {
            let (a1, a2) = unpack(a, n2);
            g1.elements().any(|b1| condition_1(a1, a2, b1)) || g2.elements().any(|b2| condition_2(a1, a2, b2))
        });
        if !found {
            return Ok(DegeneracyReport { prime: false, failing_class: Some(class.members.clone()) });
        }
    }
    Ok(DegeneracyReport { prime: true, failing_class: None })
}

/// Truth values of the four conditions on `a = (a1, a2)`:
/// (i) `a` is σ-regular; (ii) each `a_i` is σ_i-regular;
/// (iii) `f(a1,b2) = f(b1,a2)` for all `b` commuting with `a`;
/// (iv) both sides of (iii) vanish for all such `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwoOfThree {
    pub regular: bool,
    pub components_regular: bool,
    pub f_symmetric: bool,
    pub f_trivial: bool,
}

/// Evaluates the four conditions and fails with [`Error::LemmaViolation`] if
/// two of the first three hold without the third, or if (iii) and (iv)
/// disagree.
pub fn two_of_three(sigma1: &Multiplier, sigma2: &Multiplier, f: &Bihomomorphism, a: usize) -> Result<TwoOfThree> {
    let sigma = assemble(sigma1, sigma2, f)?;
    let g = sigma.group();
    let n2 = sigma2.group().order();
    let (a1, a2) = unpack(a, n2);
    let centralizer = g.centralizer(a);
    let report = TwoOfThree {
        regular: is_regular_element(&sigma, a),
        components_regular: is_regular_element(sigma1, a1) && is_regular_element(sigma2, a2),
        f_symmetric: centralizer.iter().all(|&b| {
            let (b1, b2) = unpack(b, n2);
            f.value(a1, b2) == f.value(b1, a2)
        }),
        f_trivial: centralizer.iter().all(|&b| {
            let (b1, b2) = unpack(b, n2);
            f.value(a1, b2).is_zero() && f.value(b1, a2).is_zero()
        }),
    };
    let held = [report.regular, report.components_regular, report.f_symmetric].iter().filter(|x| **x).count();
    if held == 2 {
        return Err(Error::LemmaViolation(format!("exactly two conditions hold at {a}: {report:?}")));
    }
    if report.f_symmetric != report.f_trivial {
        return Err(Error::LemmaViolation(format!("(iii) and (iv) disagree at {a}: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::validate_exhaustive;
    use crate::regularity::condition_k;

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    #[test]
    fn cyclic_bihomomorphism_checks_orders() {
        assert!(Bihomomorphism::cyclic(4, 6, RotationNumber::from_ratio(1, 2)).is_ok());
        assert!(matches!(
            Bihomomorphism::cyclic(4, 6, RotationNumber::from_ratio(1, 4)),
            Err(Error::InvalidBihomomorphism(_))
        ));
    }

    #[test]
    fn rejects_non_additive_table() {
        let mut rows = Bihomomorphism::cyclic(3, 3, RotationNumber::from_ratio(1, 3)).unwrap().rows();
        rows[1][1] = RotationNumber::from_ratio(1, 2);
        assert!(Bihomomorphism::new(cyclic(3), cyclic(3), rows).is_err());
    }

    #[test]
    fn trivial_f_gives_sum_of_components() {
        let s1 = Multiplier::klein(2, 1).unwrap();
        let s2 = Multiplier::trivial(cyclic(3));
        let f = Bihomomorphism::zero(s1.group().clone(), s2.group().clone());
        let s = assemble(&s1, &s2, &f).unwrap();
        assert!(validate_exhaustive(&s).passed());
        for a in s.group().elements() {
            for b in s.group().elements() {
                let ((a1, a2), (b1, b2)) = (unpack(a, 3), unpack(b, 3));
                assert_eq!(s.value(a, b), s1.value(a1, b1) + s2.value(a2, b2));
            }
        }
    }

    #[test]
    fn klein_is_a_direct_product() {
        for n in 2..=5usize {
            for k in 0..n {
                let f = Bihomomorphism::cyclic(n, n, RotationNumber::from_ratio(k as i64, n as i64)).unwrap();
                let z = Multiplier::trivial(cyclic(n));
                let s = assemble(&z, &z, &f).unwrap();
                let klein = Multiplier::klein(n, k).unwrap();
                assert_eq!(s.rows(), klein.rows());
            }
        }
    }

    #[test]
    fn restriction_recovers_factors() {
        let s1 = Multiplier::klein(2, 1).unwrap();
        let s2 = Multiplier::klein(3, 2).unwrap();
        let f = Bihomomorphism::zero(s1.group().clone(), s2.group().clone());
        let s = assemble(&s1, &s2, &f).unwrap();
        assert_eq!(restriction(&s, s1.group(), s2.group(), 1).unwrap().rows(), s1.rows());
        assert_eq!(restriction(&s, s1.group(), s2.group(), 2).unwrap().rows(), s2.rows());
        assert!(restriction(&s, s1.group(), s2.group(), 3).is_err());
    }

    #[test]
    fn regularity_identity_on_klein_products() {
        let z = Multiplier::trivial(cyclic(4));
        let f = Bihomomorphism::cyclic(4, 4, RotationNumber::from_ratio(1, 4)).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                assert!(regularity_identity_check(&z, &z, &f, a, b).unwrap());
            }
        }
        let (lhs, rhs) = regularity_identity_sides(&z, &z, &f, 5, 5).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
    }

    #[test]
    fn slawny_nondegenerate_case() {
        for (n, k) in [(2, 1), (3, 1), (5, 2), (6, 5)] {
            let z = Multiplier::trivial(cyclic(n));
            let f = Bihomomorphism::cyclic(n, n, RotationNumber::from_ratio(k, n as i64)).unwrap();
            assert!(f_degeneracy(&z, &z, &f).unwrap().prime);
        }
    }

    #[test]
    fn trivial_data_on_abelian_groups_is_degenerate() {
        let z2 = Multiplier::trivial(cyclic(2));
        let z3 = Multiplier::trivial(cyclic(3));
        let f = Bihomomorphism::zero(z2.group().clone(), z3.group().clone());
        let r = f_degeneracy(&z2, &z3, &f).unwrap();
        assert!(!r.prime);
        assert_eq!(r.failing_class.unwrap().len(), 1);
    }

    #[test]
    fn criterion_matches_condition_k_small() {
        let z4 = Multiplier::trivial(cyclic(4));
        for k in 0..4 {
            let f = Bihomomorphism::cyclic(4, 4, RotationNumber::from_ratio(k, 4)).unwrap();
            let expected = condition_k(&assemble(&z4, &z4, &f).unwrap()).unwrap();
            assert_eq!(f_degeneracy(&z4, &z4, &f).unwrap().prime, expected, "k={k}");
        }
    }

    #[test]
    fn two_of_three_identity_and_trivial_f() {
        let s1 = Multiplier::klein(2, 1).unwrap();
        let s2 = Multiplier::trivial(Arc::new(FiniteGroup::symmetric(3)));
        let f = Bihomomorphism::zero(s1.group().clone(), s2.group().clone());
        let r = two_of_three(&s1, &s2, &f, 0).unwrap();
        assert!(r.regular && r.components_regular && r.f_symmetric && r.f_trivial);
        for a in 0..24 {
            let r = two_of_three(&s1, &s2, &f, a).unwrap();
            assert!(r.f_symmetric);
            assert_eq!(r.regular, r.components_regular);
        }
    }
}
