//! Catalogs shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twisted_core::direct::{assemble, Bihomomorphism};
use twisted_core::multiplier::{normalize, random_twist};
use twisted_core::torus::IrrationalBasis;
use twisted_core::{FiniteGroup, Multiplier, RotationNumber};

pub fn rot(p: i64, q: i64) -> RotationNumber {
    RotationNumber::from_ratio(p, q)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn klein_catalog() -> Vec<(String, Multiplier)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for k in 0..n {
            out.push((format!("klein({n},{k})"), Multiplier::klein(n, k).unwrap()));
        }
    }
    out
}

/// Every homomorphism `G → Z_m`, found by exhaustive search.
pub fn homs(g: &FiniteGroup, m: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut h = vec![0usize; n];
    loop {
        let ok = g.elements().all(|a| g.elements().all(|b| h[g.multiply(a, b)] == (h[a] + h[b]) % m));
        if ok {
            out.push(h.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            h[i] += 1;
            if h[i] < m {
                break;
            }
            h[i] = 0;
            i += 1;
        }
    }
}

/// `f(x1, x2) = r·h1(x1)·h2(x2)/m`.
pub fn bihom(g1: &Arc<FiniteGroup>, h1: &[usize], g2: &Arc<FiniteGroup>, h2: &[usize], m: usize, r: usize) -> Bihomomorphism {
    let table = g1
        .elements()
        .map(|x| g2.elements().map(|y| rot((r * h1[x] * h2[y]) as i64, m as i64)).collect())
        .collect();
    Bihomomorphism::new(g1.clone(), g2.clone(), table).unwrap()
}

/// `(b1, a2) ↦ sign(b1)·sign(a2)/2`, using the first nontrivial hom to `Z_2`
/// of each factor.
pub fn sign_pairing(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Bihomomorphism {
    let pick = |g: &FiniteGroup| homs(g, 2).into_iter().find(|h| h.iter().any(|&x| x != 0)).unwrap();
    bihom(g1, &pick(g1), g2, &pick(g2), 2, 1)
}

pub struct DirectInstance {
    pub name: String,
    pub sigma1: Multiplier,
    pub sigma2: Multiplier,
    pub f: Bihomomorphism,
}

impl DirectInstance {
    pub fn sigma(&self) -> Multiplier {
        assemble(&self.sigma1, &self.sigma2, &self.f).unwrap()
    }
}

fn trivial(g: FiniteGroup) -> Multiplier {
    Multiplier::trivial(Arc::new(g))
}

/// Direct products with nonabelian factors or a nontrivial pairing.
pub fn direct_catalog() -> Vec<DirectInstance> {
    let s3 = trivial(FiniteGroup::symmetric(3));
    let z2 = trivial(FiniteGroup::cyclic(2));
    let z4 = trivial(FiniteGroup::cyclic(4));
    let d4 = trivial(FiniteGroup::dihedral(4));
    let k21 = Multiplier::klein(2, 1).unwrap();
    let build = |name: &str, s1: &Multiplier, s2: &Multiplier, signed: bool| {
        let f = if signed {
            sign_pairing(s1.group(), s2.group())
        } else {
            Bihomomorphism::zero(s1.group().clone(), s2.group().clone())
        };
        DirectInstance { name: name.into(), sigma1: s1.clone(), sigma2: s2.clone(), f }
    };
    vec![
        build("S3 x Z2, sign pairing", &s3, &z2, true),
        build("S3 x Z2, untwisted", &s3, &z2, false),
        build("S3 x S3, sign pairing", &s3, &s3, true),
        build("D4 x Z2, sign pairing", &d4, &z2, true),
        build("Z2 x Z4, sign pairing", &z2, &z4, true),
        build("klein(2,1) x Z2, sign pairing", &k21, &z2, true),
        build("klein(2,1) x S3, untwisted", &k21, &s3, false),
        build("klein(2,1) x klein(2,1), untwisted", &k21, &k21, false),
        build("klein(2,1) x klein(2,1), sign pairing", &k21, &k21, true),
    ]
}

/// Klein family, the direct catalog, untwisted nonabelian groups and a few
/// non-normalized coboundary twists.
pub fn finite_catalog() -> Vec<(String, Multiplier)> {
    let mut out = klein_catalog();
    for d in direct_catalog() {
        out.push((d.name.clone(), d.sigma()));
    }
    out.push(("S4, untwisted".into(), trivial(FiniteGroup::symmetric(4))));
    out.push(("D5, untwisted".into(), trivial(FiniteGroup::dihedral(5))));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, k) in [(3, 1), (4, 2), (4, 3), (6, 5)] {
        let (s, _) = random_twist(&Multiplier::klein(n, k).unwrap(), 12, &mut rng);
        out.push((format!("klein({n},{k}) twisted"), s));
    }
    out
}

/// Multipliers on groups of order at most 12, each twisted by a random
/// coboundary and then normalized.
pub fn random_normalized_tables(count: usize, seed: u64) -> Vec<(String, Multiplier)> {
    let z = |n| Arc::new(FiniteGroup::cyclic(n));
    let s3 = trivial(FiniteGroup::symmetric(3));
    let z2 = trivial(FiniteGroup::cyclic(2));
    let bases: Vec<(String, Multiplier)> = vec![
        ("klein(2,1)".into(), Multiplier::klein(2, 1).unwrap()),
        ("klein(3,1)".into(), Multiplier::klein(3, 1).unwrap()),
        ("klein(3,0)".into(), Multiplier::klein(3, 0).unwrap()),
        ("Z2 x Z4".into(), assemble(&z2, &Multiplier::trivial(z(4)), &Bihomomorphism::cyclic(2, 4, rot(1, 2)).unwrap()).unwrap()),
        ("Z2 x Z6".into(), assemble(&z2, &Multiplier::trivial(z(6)), &Bihomomorphism::cyclic(2, 6, rot(1, 2)).unwrap()).unwrap()),
        ("S3 x Z2".into(), assemble(&s3, &z2, &sign_pairing(s3.group(), z2.group())).unwrap()),
        ("D4".into(), trivial(FiniteGroup::dihedral(4))),
        ("D6".into(), trivial(FiniteGroup::dihedral(6))),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let (name, base) = &bases[i % bases.len()];
            let denominator = [2, 3, 4, 6, 12][rng.random_range(0..5)];
            let (twisted, _) = random_twist(base, denominator, &mut rng);
            let (normalized, _) = normalize(&twisted);
            (format!("{name} #{i}"), normalized.to_table())
        })
        .collect()
}

pub fn basis(labels: &[&str]) -> IrrationalBasis {
    IrrationalBasis::new(labels.iter().copied()).unwrap()
}

/// Random `(σ1, σ2, f)` on factors of order at most 6. Even entries pair
/// `Z_m` with itself through `r·x·y/m`, which is where the prime cases live;
/// odd entries use arbitrary factors and homomorphisms. About a third of the
/// factor multipliers are twisted by a random coboundary.
pub fn random_direct_triples(count: usize, seed: u64) -> Vec<DirectInstance> {
    let groups: Vec<(&str, Multiplier)> = vec![
        ("Z2", trivial(FiniteGroup::cyclic(2))),
        ("Z3", trivial(FiniteGroup::cyclic(3))),
        ("Z4", trivial(FiniteGroup::cyclic(4))),
        ("Z6", trivial(FiniteGroup::cyclic(6))),
        ("S3", trivial(FiniteGroup::symmetric(3))),
        ("V4", Multiplier::trivial(Multiplier::klein(2, 0).unwrap().group().clone())),
        ("klein(2,1)", Multiplier::klein(2, 1).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let (k1, k2, m) = if i % 2 == 0 {
                let k = rng.random_range(0..4);
                (k, k, [2, 3, 4, 6][k])
            } else {
                (rng.random_range(0..groups.len()), rng.random_range(0..groups.len()), [2, 3, 4, 6][rng.random_range(0..4)])
            };
            let mut factor = |k: usize| {
                let s = &groups[k].1;
                if rng.random_bool(0.3) {
                    random_twist(s, 6, &mut rng).0
                } else {
                    s.clone()
                }
            };
            let (s1, s2) = (factor(k1), factor(k2));
            let (h1, h2) = if i % 2 == 0 {
                let identity: Vec<usize> = (0..m).collect();
                (identity.clone(), identity)
            } else {
                let (h1, h2) = (homs(s1.group(), m), homs(s2.group(), m));
                (h1[rng.random_range(0..h1.len())].clone(), h2[rng.random_range(0..h2.len())].clone())
            };
            let r = rng.random_range(0..m);
            let f = bihom(s1.group(), &h1, s2.group(), &h2, m, r);
            let name = format!("#{i}: {} x {}, f = {r}·h1·h2/{m}", groups[k1].0, groups[k2].0);
            DirectInstance { name, sigma1: s1, sigma2: s2, f }
        })
        .collect()
}
