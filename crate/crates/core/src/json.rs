//! JSON input schemas, tagged by `"type"`.
//!
//! Exact values are written either as `"p/q"` strings or as
//! `{"rat":"p/q","irr":{"label":"r/s"}}`. Groups are either a full table
//! `{"order":n,"table":[[…]],"names":[…]}` or one of the named families
//! `{"cyclic":n}`, `{"symmetric":n}`, `{"dihedral":n}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::direct::{assemble, Bihomomorphism};
use crate::error::{Error, Result};
use crate::free_product::{FPWord, FreeProduct, FreeProductMultiplier, Letter};
use crate::group::{FiniteGroup, GroupJson};
use crate::lattice::{MuMatrix, Theta, MU_KEYS};
use crate::multiplier::{normalize, Multiplier};
use crate::torus::{parse_rational, IrrationalBasis, RotationJson, RotationNumber};

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ValueJson {
    Text(String),
    Object(RotationJson),
}

impl ValueJson {
    pub fn resolve(&self, basis: &IrrationalBasis) -> Result<RotationNumber> {
        match self {
            ValueJson::Text(s) => Ok(RotationNumber::rational(parse_rational(s)?)),
            ValueJson::Object(o) => RotationNumber::from_json(o, basis),
        }
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroupSpec {
    Cyclic { cyclic: usize },
    Symmetric { symmetric: usize },
    Dihedral { dihedral: usize },
    Table(GroupJson),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        let positive = |n: usize, what: &str| {
            if n == 0 {
                Err(Error::Schema(format!("{what} group needs a positive parameter")))
            } else {
                Ok(n)
            }
        };
        match self {
            GroupSpec::Cyclic { cyclic } => Ok(FiniteGroup::cyclic(positive(*cyclic, "cyclic")?)),
            GroupSpec::Symmetric { symmetric } => {
                if !(1..=5).contains(symmetric) {
                    return Err(Error::Schema("symmetric group degree must be between 1 and 5".into()));
                }
                Ok(FiniteGroup::symmetric(*symmetric))
            }
            GroupSpec::Dihedral { dihedral } => {
                if *dihedral < 2 {
                    return Err(Error::Schema("dihedral group needs n >= 2".into()));
                }
                Ok(FiniteGroup::dihedral(*dihedral))
            }
            GroupSpec::Table(t) => FiniteGroup::from_json(t),
        }
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct BihomomorphismJson {
    pub table: Vec<Vec<ValueJson>>,
}

/// Every accepted input.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputSpec {
    Klein {
        n: usize,
        k: usize,
    },
    Table {
        #[serde(default)]
        group: Option<GroupSpec>,
        values: Vec<Vec<ValueJson>>,
        #[serde(default)]
        basis: Vec<String>,
    },
    DirectProduct {
        sigma1: Box<InputSpec>,
        sigma2: Box<InputSpec>,
        f: BihomomorphismJson,
        #[serde(default)]
        basis: Vec<String>,
    },
    Torus {
        n: usize,
        theta: BTreeMap<String, ValueJson>,
        #[serde(default)]
        basis: Vec<String>,
        #[serde(default)]
        hints: BTreeMap<String, f64>,
    },
    G3 {
        mu: BTreeMap<String, ValueJson>,
        #[serde(default)]
        basis: Vec<String>,
    },
    FreeProduct {
        #[serde(default)]
        g1: Option<GroupSpec>,
        #[serde(default)]
        sigma1: Option<Box<InputSpec>>,
        #[serde(default)]
        g2: Option<GroupSpec>,
        #[serde(default)]
        sigma2: Option<Box<InputSpec>>,
        #[serde(default)]
        variant: Option<String>,
    },
}

/// A loaded input, ready for the decision procedures.
#[derive(Clone, Debug)]
pub enum Loaded {
    Finite(Multiplier),
    DirectProduct { sigma1: Multiplier, sigma2: Multiplier, f: Bihomomorphism, sigma: Multiplier },
    Torus(Theta),
    G3(MuMatrix),
    /// `normalized` lists the factors that had to be normalized on load.
    FreeProduct { multiplier: FreeProductMultiplier, normalized: Vec<u8> },
}

pub fn parse(text: &str) -> Result<InputSpec> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

fn basis_from(labels: &[String]) -> Result<IrrationalBasis> {
    IrrationalBasis::new(labels.iter().cloned())
}

fn resolve_rows(rows: &[Vec<ValueJson>], basis: &IrrationalBasis) -> Result<Vec<Vec<RotationNumber>>> {
    rows.iter().map(|r| r.iter().map(|v| v.resolve(basis)).collect()).collect()
}

/// A multiplier on a finite group; `default_group` is used by `table`
/// inputs that omit their group.
fn finite(spec: &InputSpec, default_group: Option<&Arc<FiniteGroup>>) -> Result<Multiplier> {
    match load_with(spec, default_group)? {
        Loaded::Finite(s) => Ok(s),
        Loaded::DirectProduct { sigma, .. } => Ok(sigma),
        _ => Err(Error::Schema("expected a multiplier on a finite group".into())),
    }
}

pub fn load(spec: &InputSpec) -> Result<Loaded> {
    load_with(spec, None)
}

fn load_with(spec: &InputSpec, default_group: Option<&Arc<FiniteGroup>>) -> Result<Loaded> {
    match spec {
        InputSpec::Klein { n, k } => Ok(Loaded::Finite(Multiplier::klein(*n, *k)?)),
        InputSpec::Table { group, values, basis } => {
            let group = match (group, default_group) {
                (Some(g), _) => Arc::new(g.build()?),
                (None, Some(g)) => g.clone(),
                (None, None) => return Err(Error::Schema("table input needs a group".into())),
            };
            let basis = basis_from(basis)?;
            let rows = resolve_rows(values, &basis)?;
            Ok(Loaded::Finite(Multiplier::from_table(group, rows, basis)?))
        }
        InputSpec::DirectProduct { sigma1, sigma2, f, basis } => {
            let s1 = finite(sigma1, None)?;
            let s2 = finite(sigma2, None)?;
            let basis = basis_from(basis)?.merge(s1.basis())?.merge(s2.basis())?;
            let rows = resolve_rows(&f.table, &basis)?;
            let f = Bihomomorphism::new(s1.group().clone(), s2.group().clone(), rows)?;
            let s1 = s1.with_basis(basis.clone())?;
            let sigma = assemble(&s1, &s2, &f)?;
            Ok(Loaded::DirectProduct { sigma1: s1, sigma2: s2, f, sigma })
        }
        InputSpec::Torus { n, theta, basis, hints } => {
            let mut b = basis_from(basis)?;
            for (label, v) in hints {
                b = b.with_hint(label, *v)?;
            }
            let mut entries = BTreeMap::new();
            for (key, v) in theta {
                let (i, j) = parse_pair(key)?;
                if entries.insert((i, j), v.resolve(&b)?).is_some() {
                    return Err(Error::Schema(format!("duplicate theta entry {key}")));
                }
            }
            Ok(Loaded::Torus(Theta::new(*n, entries, b)?))
        }
        InputSpec::G3 { mu, basis } => {
            let b = basis_from(basis)?;
            if let Some(extra) = mu.keys().find(|k| !MU_KEYS.contains(&k.as_str())) {
                return Err(Error::Schema(format!("unknown mu entry {extra}; μ31 is derived")));
            }
            let values: Vec<RotationNumber> = MU_KEYS
                .iter()
                .map(|k| mu.get(*k).map_or(Ok(RotationNumber::zero()), |v| v.resolve(&b)))
                .collect::<Result<_>>()?;
            let values: [RotationNumber; 8] = values.try_into().expect("eight keys");
            Ok(Loaded::G3(MuMatrix::new(values, b)?))
        }
        InputSpec::FreeProduct { g1, sigma1, g2, sigma2, variant } => {
            let mut normalized = Vec::new();
            let mut factor = |g: &Option<GroupSpec>, s: &Option<Box<InputSpec>>, i: u8| -> Result<Multiplier> {
                let group = g.as_ref().map(|g| g.build().map(Arc::new)).transpose()?;
                let sigma = match (s, &group) {
                    (Some(s), _) => finite(s, group.as_ref())?,
                    (None, Some(g)) => Multiplier::trivial(g.clone()),
                    (None, None) => return Err(Error::Schema(format!("factor {i} needs g{i} or sigma{i}"))),
                };
                if let Some(g) = &group {
                    if g.table() != sigma.group().table() {
                        return Err(Error::Schema(format!("sigma{i} is not defined on g{i}")));
                    }
                }
                if sigma.is_normalized() {
                    Ok(sigma)
                } else {
                    normalized.push(i);
                    Ok(normalize(&sigma).0)
                }
            };
            let s1 = factor(g1, sigma1, 1)?;
            let s2 = factor(g2, sigma2, 2)?;
            let product = FreeProduct::new(s1, s2)?;
            let multiplier = match variant.as_deref() {
                None | Some("sigma") => FreeProductMultiplier::sigma(product),
                Some("tau") => FreeProductMultiplier::tau(product),
                Some(other) => return Err(Error::Schema(format!("unknown free product variant {other}"))),
            };
            Ok(Loaded::FreeProduct { multiplier, normalized })
        }
    }
}

/// `"i,j"` with `1 <= i < j`, returned zero-based.
fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Schema(format!("theta key `{key}` must look like \"i,j\""));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

/// Parses `[["1","g"],["2","h"],…]`; elements are matched by name, then by index.
pub fn parse_word(product: &FreeProduct, letters: &[(String, String)]) -> Result<FPWord> {
    let letters = letters
        .iter()
        .map(|(f, e)| {
            let factor: u8 = match f.as_str() {
                "1" => 1,
                "2" => 2,
                _ => return Err(Error::Schema(format!("factor must be \"1\" or \"2\", got {f}"))),
            };
            let g = product.group(factor);
            let element = g
                .element_by_name(e)
                .ok_or_else(|| Error::Schema(format!("unknown element {e} of factor {factor}")))?;
            Ok(Letter::new(factor, element))
        })
        .collect::<Result<Vec<_>>>()?;
    product.word(letters)
}

pub fn format_word(product: &FreeProduct, w: &FPWord) -> Vec<(String, String)> {
    w.letters().iter().map(|l| (l.factor.to_string(), product.letter_name(l))).collect()
}
