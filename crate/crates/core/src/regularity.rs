//! σ-regular elements and classes, condition K, and the explicit center of a
//! finite twisted group algebra.
//!
//! An element `a` is σ-regular when `σ(a,b) = σ(b,a)` for every `b` commuting
//! with `a`. Regularity is constant on conjugacy classes. For a finite group,
//! condition K holds exactly when no nontrivial class is regular, and the
//! regular classes index a basis of the center: for a regular class `C` with
//! base point `c`, the function `f(aca⁻¹) = σ(a,c) − σ(aca⁻¹, a)` is well
//! defined and `Σ_{x∈C} f(x)·δ_x` is central.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{AlgebraElement, ExactScalar};
use crate::error::{Error, Result};
use crate::group::ConjugacyClass;
use crate::multiplier::Multiplier;
use crate::torus::RotationNumber;

pub fn is_regular_element(sigma: &Multiplier, a: usize) -> bool {
    let g = sigma.group();
    g.centralizer(a).into_iter().all(|b| sigma.value(a, b) == sigma.value(b, a))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassRegularity {
    pub class: ConjugacyClass,
    pub is_regular: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport {
    pub classes: Vec<ClassRegularity>,
    pub condition_k: bool,
    pub regular_element_count: usize,
    pub identity: usize,
}

impl RegularityReport {
    pub fn regular_classes(&self) -> impl Iterator<Item = &ConjugacyClass> {
        self.classes.iter().filter(|c| c.is_regular).map(|c| &c.class)
    }

    /// A nontrivial regular class, when condition K fails.
    pub fn witness(&self) -> Option<&ConjugacyClass> {
        self.regular_classes().find(|c| c.members != [self.identity])
    }

    pub fn to_json(&self) -> RegularityJson {
        RegularityJson {
            condition_k: self.condition_k,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson { rep: c.class.representative, size: c.class.size(), regular: c.is_regular })
                .collect(),
        }
    }
}

/// `{"condition_k":bool,"classes":[{"rep":i,"size":s,"regular":bool}…]}`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityJson {
    pub condition_k: bool,
    pub classes: Vec<ClassJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassJson {
    pub rep: usize,
    pub size: usize,
    pub regular: bool,
}

/// Flags every class, checking that all members agree.
pub fn regular_classes(sigma: &Multiplier) -> Result<RegularityReport> {
    let g = sigma.group();
    let mut classes = Vec::new();
    let mut condition_k = true;
    let mut regular_element_count = 0;
    for class in g.conjugacy_classes() {
        let flag = is_regular_element(sigma, class.representative);
        if class.members.iter().any(|&m| is_regular_element(sigma, m) != flag) {
            return Err(Error::ClassInconsistency(class.representative));
        }
        if flag {
            regular_element_count += class.size();
            if class.members != [g.identity()] {
                condition_k = false;
            }
        }
        classes.push(ClassRegularity { class: class.clone(), is_regular: flag });
    }
    Ok(RegularityReport { classes, condition_k, regular_element_count, identity: g.identity() })
}

pub fn condition_k(sigma: &Multiplier) -> Result<bool> {
    Ok(regular_classes(sigma)?.condition_k)
}

/// A nontrivial regular class, if any.
pub fn condition_k_witness(sigma: &Multiplier) -> Result<Option<ConjugacyClass>> {
    Ok(regular_classes(sigma)?.witness().cloned())
}

/// Exponent of the unimodular function attached to a regular class, with
/// value 0 at the base point.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub class: ConjugacyClass,
    pub values: BTreeMap<usize, RotationNumber>,
}

/// Builds `f(aca⁻¹) = σ(a,c) − σ(aca⁻¹, a)` from every conjugator `a` and
/// fails with [`Error::NotRegular`] as soon as two conjugators disagree.
pub fn class_function(sigma: &Multiplier, class: &ConjugacyClass) -> Result<ClassFunction> {
    let g = sigma.group();
    let c = class.representative;
    let mut values: BTreeMap<usize, RotationNumber> = BTreeMap::new();
    for a in g.elements() {
        let x = g.conjugate(a, c);
        let fx = &sigma.value(a, c) - &sigma.value(x, a);
        match values.get(&x) {
            Some(prev) if *prev != fx => return Err(Error::NotRegular { class: c, element: x }),
            Some(_) => {}
            None => {
                values.insert(x, fx);
            }
        }
    }
    Ok(ClassFunction { class: class.clone(), values })
}

/// `Σ_{x∈C} f(x) δ_x` for each regular class `C`.
pub fn center_basis(sigma: &Multiplier) -> Result<Vec<AlgebraElement<ExactScalar>>> {
    let report = regular_classes(sigma)?;
    report
        .regular_classes()
        .map(|class| {
            let f = class_function(sigma, class)?;
            Ok(AlgebraElement::from_terms(
                sigma.group().order(),
                f.values.into_iter().map(|(x, phase)| (x, ExactScalar::phase(phase))),
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_integer::Integer;

    use super::*;
    use crate::group::FiniteGroup;
    use crate::multiplier::{normalize, random_twist};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_regular() {
        let s = Multiplier::klein(4, 1).unwrap();
        assert!(is_regular_element(&s, s.group().identity()));
    }

    #[test]
    fn klein_regularity_matches_divisibility() {
        for n in 2..=6usize {
            for k in 0..n {
                let s = Multiplier::klein(n, k).unwrap();
                for a in s.group().elements() {
                    let (a1, a2) = (a / n, a % n);
                    let expected = (k * a1) % n == 0 && (k * a2) % n == 0;
                    assert_eq!(is_regular_element(&s, a), expected, "n={n} k={k} a=({a1},{a2})");
                }
            }
        }
    }

    #[test]
    fn klein_4_2_has_four_regular_elements() {
        let s = Multiplier::klein(4, 2).unwrap();
        let regular: Vec<(usize, usize)> =
            s.group().elements().filter(|&a| is_regular_element(&s, a)).map(|a| (a / 4, a % 4)).collect();
        assert_eq!(regular, vec![(0, 0), (0, 2), (2, 0), (2, 2)]);
    }

    #[test]
    fn klein_6_2_report() {
        let s = Multiplier::klein(6, 2).unwrap();
        let r = regular_classes(&s).unwrap();
        let regular: Vec<usize> = r.regular_classes().map(|c| c.representative).collect();
        let expected: Vec<usize> = [(0, 0), (0, 3), (3, 0), (3, 3)].iter().map(|(a, b)| a * 6 + b).collect();
        assert_eq!(regular, expected);
        assert!(r.regular_classes().all(|c| c.size() == 1));
        assert_eq!(r.regular_element_count, 4);
        assert!(!r.condition_k);
    }

    #[test]
    fn coprime_klein_only_identity_is_regular() {
        for (n, k) in [(2, 1), (3, 2), (5, 2), (6, 5)] {
            let s = Multiplier::klein(n, k).unwrap();
            let r = regular_classes(&s).unwrap();
            assert_eq!(r.regular_element_count, 1);
            assert!(r.condition_k);
            assert_eq!(n.gcd(&k), 1);
        }
        assert!(condition_k(&Multiplier::klein(5, 2).unwrap()).unwrap());
        assert!(!condition_k(&Multiplier::klein(4, 2).unwrap()).unwrap());
        assert!(condition_k(&Multiplier::trivial(Arc::new(FiniteGroup::trivial()))).unwrap());
    }

    #[test]
    fn trivial_multiplier_every_class_regular() {
        for g in [FiniteGroup::symmetric(3), FiniteGroup::cyclic(5), FiniteGroup::dihedral(4)] {
            let s = Multiplier::trivial(Arc::new(g));
            let r = regular_classes(&s).unwrap();
            assert!(r.classes.iter().all(|c| c.is_regular));
            assert!(!r.condition_k);
        }
    }

    #[test]
    fn class_function_examples() {
        let s = Multiplier::klein(4, 2).unwrap();
        let e = s.group().class_of(0).clone();
        let f = class_function(&s, &e).unwrap();
        assert!(f.values[&0].is_zero());

        let c = s.group().class_of(2 * 4).clone();
        let f = class_function(&s, &c).unwrap();
        assert_eq!(f.values.len(), 1);
        assert!(f.values[&8].is_zero());

        // a non-regular class reports a conflict
        let c = s.group().class_of(1).clone();
        assert!(matches!(class_function(&s, &c), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn class_function_on_nonabelian_group_is_well_defined() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in [FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::dihedral(6)] {
            let s = Multiplier::trivial(Arc::new(g));
            for _ in 0..3 {
                let (t, _) = random_twist(&s, 12, &mut rng);
                let (t, _) = normalize(&t);
                for class in regular_classes(&t).unwrap().regular_classes() {
                    let f = class_function(&t, class).unwrap();
                    assert_eq!(f.values.len(), class.size());
                    assert!(f.values[&class.representative].is_zero());
                }
            }
        }
    }

    #[test]
    fn center_basis_dimensions() {
        assert_eq!(center_basis(&Multiplier::klein(3, 1).unwrap()).unwrap().len(), 1);
        assert_eq!(center_basis(&Multiplier::klein(4, 2).unwrap()).unwrap().len(), 4);
        let z6 = Multiplier::trivial(Arc::new(FiniteGroup::cyclic(6)));
        let basis = center_basis(&z6).unwrap();
        assert_eq!(basis.len(), 6);
        for (a, b) in basis.iter().enumerate() {
            assert_eq!(b.support(), vec![a]);
        }
    }
}
