//! Finite groups given by full multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A conjugacy class; the representative is the smallest member index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// A validated finite group. Elements are indices `0..order`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
    identity: usize,
    inverses: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a square table: entries in range, two-sided identity and
    /// inverses, and associativity over every triple.
    pub fn build(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for (r, row) in table.iter().enumerate() {
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(Error::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(Error::NoInverse(a))?;
            inverses.push(inv);
        }

        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }

        Ok(Self::from_parts(n, flat, identity, inverses))
    }

    fn from_parts(order: usize, table: Vec<usize>, identity: usize, inverses: Vec<usize>) -> Self {
        let mut g = Self {
            order,
            table,
            names: None,
            identity,
            inverses,
            classes: Vec::new(),
            class_of: vec![usize::MAX; order],
        };
        g.compute_classes();
        g
    }

    fn compute_classes(&mut self) {
        for a in 0..self.order {
            if self.class_of[a] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..self.order).map(|g| self.conjugate(g, a)).collect();
            members.sort_unstable();
            members.dedup();
            let idx = self.classes.len();
            for &m in &members {
                self.class_of[m] = idx;
            }
            self.classes.push(ConjugacyClass { representative: a, members });
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::DomainMismatch(format!(
                "{} names for a group of order {}",
                names.len(),
                self.order
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// `Z_n` with elements `0..n` under addition mod n.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        Self::from_parts(n, table, 0, inverses)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `G1 × G2` with element `(i1, i2)` stored at index `i1·|G2| + i2`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Self {
        let (n1, n2) = (g1.order, g2.order);
        let n = n1 * n2;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..n {
                let (b1, b2) = (b / n2, b % n2);
                table.push(g1.multiply(a1, b1) * n2 + g2.multiply(a2, b2));
            }
        }
        let identity = g1.identity * n2 + g2.identity;
        let inverses = (0..n).map(|a| g1.inverse(a / n2) * n2 + g2.inverse(a % n2)).collect();
        let mut g = Self::from_parts(n, table, identity, inverses);
        if g1.names.is_some() || g2.names.is_some() {
            g.names = Some(
                (0..n)
                    .map(|a| format!("({},{})", g1.name(a / n2), g2.name(a % n2)))
                    .collect(),
            );
        }
        g
    }

    /// The symmetric group on `n` points; elements are permutations in
    /// lexicographic order, so index 0 is the identity.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p);
        }
        Self::from_permutations(&perms).expect("symmetric group is closed")
    }

    /// The dihedral group of order `2n`: index `r` is the rotation `ρ^r`,
    /// index `n + r` is `ρ^r s`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let m = 2 * n;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let (ra, sa) = (a % n, a >= n);
                let (rb, sb) = (b % n, b >= n);
                // ρ^ra s^sa ρ^rb s^sb = ρ^(ra ± rb) s^(sa xor sb)
                let r = if sa { (ra + n - rb) % n } else { (ra + rb) % n };
                table.push(r + if sa != sb { n } else { 0 });
            }
        }
        Self::build(table.chunks(m).map(<[usize]>::to_vec).collect()).expect("dihedral group")
    }

    /// Closure-free construction from an explicit list of permutations that
    /// already forms a group. Composition is `(p·q)(i) = p(q(i))`.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(perms.len());
        for p in perms {
            let mut row = Vec::with_capacity(perms.len());
            for q in perms {
                let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
                row.push(index(&pq).ok_or_else(|| Error::DomainMismatch("permutations not closed".into()))?);
            }
            table.push(row);
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        Self::build(table)?.with_names(names)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a c a⁻¹`
    pub fn conjugate(&self, a: usize, c: usize) -> usize {
        self.multiply(self.multiply(a, c), self.inverse(a))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&b| self.commute(a, b)).collect()
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> &ConjugacyClass {
        &self.classes[self.class_of[a]]
    }

    pub fn class_index(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    /// Resolves an element by name, or by decimal index when unnamed lookups fail.
    pub fn element_by_name(&self, s: &str) -> Option<usize> {
        if let Some(n) = &self.names {
            if let Some(i) = n.iter().position(|x| x == s) {
                return Some(i);
            }
        }
        s.parse::<usize>().ok().filter(|&i| i < self.order)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order, table: self.table(), names: self.names.clone() }
    }

    pub fn from_json(json: &GroupJson) -> Result<Self> {
        if json.table.len() != json.order {
            return Err(Error::DomainMismatch(format!(
                "order {} but {} table rows",
                json.order,
                json.table.len()
            )));
        }
        let g = Self::build(json.table.clone())?;
        match &json.names {
            Some(names) => g.with_names(names.clone()),
            None => Ok(g),
        }
    }
}

/// Index of `(i1, i2)` in `direct_product(G1, G2)`.
pub fn pack(i1: usize, i2: usize, order2: usize) -> usize {
    i1 * order2 + i2
}

/// Coordinates of a direct-product index.
pub fn unpack(i: usize, order2: usize) -> (usize, usize) {
    (i / order2, i % order2)
}

/// `{"order":n,"table":[[…]],"names":[…]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}
