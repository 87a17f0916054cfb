//! Free products `G1 * G2` of finite groups, the unsymmetrized cocycle `τ`,
//! the free commutator subgroup `F_X`, and the normalized free-product
//! multiplier `σ1 * σ2 = τ · ∂β`.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::multiplier::{Cocycle, Multiplier, SampleDomain};
use crate::torus::RotationNumber;

/// A non-identity element of factor 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub factor: u8,
    pub element: usize,
}

impl Letter {
    pub fn new(factor: u8, element: usize) -> Self {
        Self { factor, element }
    }
}

/// A reduced word: adjacent letters lie in different factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FPWord(pub Vec<Letter>);

impl FPWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<&Letter> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Letter> {
        self.0.last()
    }
}

/// A generator `[a, b] = a b a⁻¹ b⁻¹` of `F_X`.
pub type Commutator = (usize, usize);

/// A freely reduced word `q1^p1 ⋯ qn^pn` over `X`, adjacent generators
/// distinct and powers nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct XWord(pub Vec<(Commutator, i64)>);

impl XWord {
    pub fn syllables(&self) -> &[(Commutator, i64)] {
        &self.0
    }

    fn push(&mut self, q: Commutator, p: i64) {
        if let Some(last) = self.0.last_mut() {
            if last.0 == q {
                last.1 += p;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        if p != 0 {
            self.0.push((q, p));
        }
    }
}

/// Two finite factors with normalized multipliers.
#[derive(Clone, Debug)]
pub struct FreeProduct {
    groups: [Arc<FiniteGroup>; 2],
    sigmas: [Multiplier; 2],
}

impl FreeProduct {
    /// Rejects factor multipliers with `σ_i(a, a⁻¹) ≠ 0` for some `a`.
    pub fn new(sigma1: Multiplier, sigma2: Multiplier) -> Result<Self> {
        for (i, s) in [&sigma1, &sigma2].into_iter().enumerate() {
            if !s.is_normalized() {
                return Err(Error::NotNormalized(i + 1));
            }
        }
        Ok(Self { groups: [sigma1.group().clone(), sigma2.group().clone()], sigmas: [sigma1, sigma2] })
    }

    /// Trivial multipliers on both factors.
    pub fn untwisted(g1: Arc<FiniteGroup>, g2: Arc<FiniteGroup>) -> Self {
        Self::new(Multiplier::trivial(g1), Multiplier::trivial(g2)).expect("trivial multipliers are normalized")
    }

    pub fn group(&self, factor: u8) -> &Arc<FiniteGroup> {
        &self.groups[factor as usize - 1]
    }

    pub fn sigma(&self, factor: u8) -> &Multiplier {
        &self.sigmas[factor as usize - 1]
    }

    /// Checks that a letter list is reduced and uses valid non-identity elements.
    pub fn word(&self, letters: Vec<Letter>) -> Result<FPWord> {
        for (i, l) in letters.iter().enumerate() {
            if l.factor != 1 && l.factor != 2 {
                return Err(Error::BadRange(format!("factor must be 1 or 2, got {}", l.factor)));
            }
            let g = self.group(l.factor);
            if l.element >= g.order() || l.element == g.identity() {
                return Err(Error::DomainMismatch(format!("letter {i} is not a non-identity element of factor {}", l.factor)));
            }
            if i > 0 && letters[i - 1].factor == l.factor {
                return Err(Error::DomainMismatch(format!("letters {} and {i} lie in the same factor", i - 1)));
            }
        }
        Ok(FPWord(letters))
    }

    /// Single-letter word, or the empty word for the identity.
    pub fn embed(&self, factor: u8, element: usize) -> FPWord {
        if element == self.group(factor).identity() {
            FPWord::identity()
        } else {
            FPWord(vec![Letter::new(factor, element)])
        }
    }

    fn push(&self, out: &mut Vec<Letter>, l: Letter) {
        match out.last_mut() {
            Some(last) if last.factor == l.factor => {
                let g = self.group(l.factor);
                let m = g.multiply(last.element, l.element);
                if m == g.identity() {
                    out.pop();
                } else {
                    last.element = m;
                }
            }
            _ => out.push(l),
        }
    }

    /// Reduced product.
    pub fn multiply(&self, x: &FPWord, y: &FPWord) -> FPWord {
        let mut out = x.0.clone();
        for &l in &y.0 {
            self.push(&mut out, l);
        }
        FPWord(out)
    }

    pub fn inverse(&self, x: &FPWord) -> FPWord {
        FPWord(x.0.iter().rev().map(|l| Letter::new(l.factor, self.group(l.factor).inverse(l.element))).collect())
    }

    fn is_inverse(&self, a: &Letter, b: &Letter) -> bool {
        a.factor == b.factor && self.group(a.factor).inverse(a.element) == b.element
    }

    /// Removes the longest whole-letter suffix `w` of `x` such that `y`
    /// begins with `w⁻¹`.
    pub fn reduce_pair(&self, x: &FPWord, y: &FPWord) -> (FPWord, FPWord) {
        let k = x.0.iter().rev().zip(&y.0).take_while(|(a, b)| self.is_inverse(a, b)).count();
        (FPWord(x.0[..x.len() - k].to_vec()), FPWord(y.0[k..].to_vec()))
    }

    /// `σ_i(r(x_w), s(y_w))` when both boundary letters lie in `G_i`, else 0.
    pub fn tau(&self, x: &FPWord, y: &FPWord) -> RotationNumber {
        let (xw, yw) = self.reduce_pair(x, y);
        match (xw.last(), yw.first()) {
            (Some(r), Some(s)) if r.factor == s.factor => self.sigma(r.factor).value(r.element, s.element),
            _ => RotationNumber::zero(),
        }
    }

    /// Letterwise products in each factor.
    pub fn abelian_image(&self, x: &FPWord) -> (usize, usize) {
        let mut c = [self.groups[0].identity(), self.groups[1].identity()];
        for l in &x.0 {
            let i = l.factor as usize - 1;
            c[i] = self.groups[i].multiply(c[i], l.element);
        }
        (c[0], c[1])
    }

    pub fn in_kernel(&self, x: &FPWord) -> bool {
        self.abelian_image(x) == (self.groups[0].identity(), self.groups[1].identity())
    }

    /// Reidemeister–Schreier rewriting with transversal `{g1 g2}`: a
    /// `G1`-letter `g` read in coset state `(c1, c2)` contributes
    /// `[c1,c2]·[c1 g,c2]⁻¹`, a `G2`-letter contributes nothing.
    pub fn rewrite_to_x(&self, x: &FPWord) -> Result<XWord> {
        if !self.in_kernel(x) {
            return Err(Error::NotInKernel);
        }
        let (g1, g2) = (&self.groups[0], &self.groups[1]);
        let nontrivial = |a: usize, b: usize| a != g1.identity() && b != g2.identity();
        let (mut c1, mut c2) = (g1.identity(), g2.identity());
        let mut out = XWord::default();
        for l in &x.0 {
            if l.factor == 1 {
                let next = g1.multiply(c1, l.element);
                if nontrivial(c1, c2) {
                    out.push((c1, c2), 1);
                }
                if nontrivial(next, c2) {
                    out.push((next, c2), -1);
                }
                c1 = next;
            } else {
                c2 = g2.multiply(c2, l.element);
            }
        }
        Ok(out)
    }

    /// The reduced word of `[a, b]^p`.
    pub fn expand_syllable(&self, (a, b): Commutator, p: i64) -> FPWord {
        let (g1, g2) = (&self.groups[0], &self.groups[1]);
        let q = FPWord(vec![
            Letter::new(1, a),
            Letter::new(2, b),
            Letter::new(1, g1.inverse(a)),
            Letter::new(2, g2.inverse(b)),
        ]);
        let unit = if p < 0 { self.inverse(&q) } else { q };
        (0..p.unsigned_abs()).fold(FPWord::identity(), |acc, _| self.multiply(&acc, &unit))
    }

    /// Multiplies an [`XWord`] back out in `G1 * G2`.
    pub fn expand(&self, x: &XWord) -> FPWord {
        x.0.iter().fold(FPWord::identity(), |acc, &(q, p)| self.multiply(&acc, &self.expand_syllable(q, p)))
    }

    /// 0 off `F_X` and on single syllables; otherwise the sum of `τ` over
    /// consecutive syllable pairs.
    pub fn beta(&self, x: &FPWord) -> RotationNumber {
        let Ok(xw) = self.rewrite_to_x(x) else {
            return RotationNumber::zero();
        };
        let words: Vec<FPWord> = xw.0.iter().map(|&(q, p)| self.expand_syllable(q, p)).collect();
        words.windows(2).map(|w| self.tau(&w[0], &w[1])).sum()
    }

    /// `σ1 * σ2 (x, y) = β(x) + β(y) − β(xy) + τ(x, y)`.
    pub fn sigma_value(&self, x: &FPWord, y: &FPWord) -> RotationNumber {
        let xy = self.multiply(x, y);
        let mut v = self.tau(x, y);
        v += &self.beta(x);
        v += &self.beta(y);
        v -= &self.beta(&xy);
        v
    }

    /// A uniformly random reduced word of length at most `max_len`.
    pub fn random_word(&self, rng: &mut impl Rng, max_len: usize) -> FPWord {
        let len = rng.random_range(0..=max_len);
        let mut factor: u8 = rng.random_range(1..=2);
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            let g = self.group(factor);
            let nonidentity: Vec<usize> = g.elements().filter(|&a| a != g.identity()).collect();
            if nonidentity.is_empty() {
                break;
            }
            letters.push(Letter::new(factor, nonidentity[rng.random_range(0..nonidentity.len())]));
            factor = 3 - factor;
        }
        FPWord(letters)
    }

    /// A random word of `F_X`: a random word corrected by the inverses of its
    /// factorwise products.
    pub fn random_kernel_word(&self, rng: &mut impl Rng, max_len: usize) -> FPWord {
        let w = self.random_word(rng, max_len);
        let (p1, p2) = self.abelian_image(&w);
        let fix = self.multiply(&self.embed(1, self.groups[0].inverse(p1)), &self.embed(2, self.groups[1].inverse(p2)));
        self.multiply(&w, &fix)
    }

    pub fn letter_name(&self, l: &Letter) -> String {
        self.group(l.factor).name(l.element)
    }
}

/// Which cocycle on `G1 * G2` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeProductVariant {
    /// `σ1 * σ2`
    Sigma,
    /// the unsymmetrized `τ`
    Tau,
}

#[derive(Clone, Debug)]
pub struct FreeProductMultiplier {
    pub product: FreeProduct,
    pub variant: FreeProductVariant,
}

impl FreeProductMultiplier {
    pub fn sigma(product: FreeProduct) -> Self {
        Self { product, variant: FreeProductVariant::Sigma }
    }

    pub fn tau(product: FreeProduct) -> Self {
        Self { product, variant: FreeProductVariant::Tau }
    }
}

impl Cocycle for FreeProductMultiplier {
    type Element = FPWord;

    fn identity(&self) -> FPWord {
        FPWord::identity()
    }

    fn multiply(&self, a: &FPWord, b: &FPWord) -> FPWord {
        self.product.multiply(a, b)
    }

    fn inverse(&self, a: &FPWord) -> FPWord {
        self.product.inverse(a)
    }

    fn value(&self, a: &FPWord, b: &FPWord) -> RotationNumber {
        match self.variant {
            FreeProductVariant::Sigma => self.product.sigma_value(a, b),
            FreeProductVariant::Tau => self.product.tau(a, b),
        }
    }
}

impl SampleDomain for FreeProductMultiplier {
    fn sample(&self, rng: &mut ChaCha8Rng, bound: u32) -> FPWord {
        self.product.random_word(rng, bound as usize)
    }
}

/// Restrictions of a multiplier on `G1 * G2` and the similarity witness to
/// the free product of its restrictions.
pub struct Decomposition<'a, C> {
    sigma: &'a C,
    pub product: FreeProduct,
}

impl<C: Cocycle<Element = FPWord>> Decomposition<'_, C> {
    pub fn sigma1(&self) -> &Multiplier {
        self.product.sigma(1)
    }

    pub fn sigma2(&self) -> &Multiplier {
        self.product.sigma(2)
    }

    /// `σ(x1, x2) + σ(x1x2, x3) + ⋯ + σ(x1⋯x_{n−1}, x_n)` over the letters of
    /// `x`; witnesses `σ ~ τ`.
    pub fn beta_prefix(&self, x: &FPWord) -> RotationNumber {
        let mut prefix = FPWord::identity();
        let mut total = RotationNumber::zero();
        for &l in &x.0 {
            let letter = FPWord(vec![l]);
            total += &self.sigma.value(&prefix, &letter);
            prefix = self.product.multiply(&prefix, &letter);
        }
        total
    }

    /// Witness of `σ ~ σ1 * σ2`.
    pub fn beta(&self, x: &FPWord) -> RotationNumber {
        self.beta_prefix(x) + self.product.beta(x)
    }

    /// `σ(x,y) + β(x) + β(y) − β(xy) = (σ1 * σ2)(x,y)`
    pub fn similar_at(&self, x: &FPWord, y: &FPWord) -> bool {
        let xy = self.product.multiply(x, y);
        let mut v = self.sigma.value(x, y);
        v += &self.beta(x);
        v += &self.beta(y);
        v -= &self.beta(&xy);
        v == self.product.sigma_value(x, y)
    }

    /// Checks the witness on `samples` random pairs.
    pub fn check(&self, samples: usize, max_len: usize, seed: u64) -> Result<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = self.product.random_word(&mut rng, max_len);
            let y = self.product.random_word(&mut rng, max_len);
            if !self.similar_at(&x, &y) {
                return Err(Error::SimilarityFailure { x: self.format(&x), y: self.format(&y) });
            }
        }
        Ok(samples)
    }

    fn format(&self, x: &FPWord) -> String {
        let parts: Vec<String> = x.0.iter().map(|l| format!("{}:{}", l.factor, self.product.letter_name(l))).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Restricts `sigma` to both factors (which must be normalized) and pairs it
/// with the witness `β = β_prefix + β_{F_X}`.
pub fn decompose<'a, C: Cocycle<Element = FPWord>>(
    sigma: &'a C,
    g1: Arc<FiniteGroup>,
    g2: Arc<FiniteGroup>,
) -> Result<Decomposition<'a, C>> {
    let scaffold = FreeProduct::untwisted(g1.clone(), g2.clone());
    let restrict = |factor: u8, g: &Arc<FiniteGroup>| {
        let rows = g
            .elements()
            .map(|a| g.elements().map(|b| sigma.value(&scaffold.embed(factor, a), &scaffold.embed(factor, b))).collect())
            .collect();
        Multiplier::from_table(g.clone(), rows, Default::default())
    };
    let product = FreeProduct::new(restrict(1, &g1)?, restrict(2, &g2)?)?;
    Ok(Decomposition { sigma, product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::{normalize, validate_sampled};

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn klein21() -> Multiplier {
        normalize(&Multiplier::klein(2, 1).unwrap()).0
    }

    fn klein_product() -> FreeProduct {
        FreeProduct::new(klein21(), Multiplier::trivial(z(2))).unwrap()
    }

    fn w(letters: &[(u8, usize)]) -> FPWord {
        FPWord(letters.iter().map(|&(f, e)| Letter::new(f, e)).collect())
    }

    #[test]
    fn rejects_non_normalized_factor() {
        assert!(matches!(FreeProduct::new(Multiplier::klein(2, 1).unwrap(), Multiplier::trivial(z(2))), Err(Error::NotNormalized(1))));
        let bad = Multiplier::from_table(z(2), vec![vec![RotationNumber::zero(); 2], vec![RotationNumber::zero(), RotationNumber::from_ratio(1, 2)]], Default::default()).unwrap();
        assert!(matches!(FreeProduct::new(Multiplier::trivial(z(3)), bad), Err(Error::NotNormalized(2))));
    }

    #[test]
    fn word_validation() {
        let fp = FreeProduct::untwisted(z(3), z(2));
        assert!(fp.word(vec![Letter::new(1, 1), Letter::new(2, 1)]).is_ok());
        assert!(fp.word(vec![Letter::new(1, 1), Letter::new(1, 2)]).is_err());
        assert!(fp.word(vec![Letter::new(1, 0)]).is_err());
        assert!(fp.word(vec![Letter::new(3, 1)]).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let fp = FreeProduct::untwisted(z(3), z(2));
        assert_eq!(fp.multiply(&w(&[(1, 1)]), &w(&[(1, 1)])), w(&[(1, 2)]));
        assert_eq!(fp.multiply(&w(&[(1, 1)]), &w(&[(1, 2)])), FPWord::identity());
        // (a b)(b⁻¹ a') with a = 1, a' = 1 merges to a² and with a' = 2 cancels
        assert_eq!(fp.multiply(&w(&[(1, 1), (2, 1)]), &w(&[(2, 1), (1, 1)])), w(&[(1, 2)]));
        assert_eq!(fp.multiply(&w(&[(1, 1), (2, 1)]), &w(&[(2, 1), (1, 2)])), FPWord::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x = fp.random_word(&mut rng, 8);
            assert!(fp.multiply(&x, &fp.inverse(&x)).is_empty());
        }
    }

    #[test]
    fn reduce_pair_examples() {
        let fp = FreeProduct::untwisted(z(3), z(2));
        let (x, y) = (w(&[(1, 1), (2, 1)]), w(&[(1, 2)]));
        assert_eq!(fp.reduce_pair(&x, &y), (x.clone(), y.clone()));
        let (a, b, c) = (1, 1, 1);
        let (xw, yw) = fp.reduce_pair(&w(&[(1, a), (2, b)]), &w(&[(2, b), (1, c)]));
        assert_eq!((xw, yw), (w(&[(1, a)]), w(&[(1, c)])));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let x = fp.random_word(&mut rng, 6);
            let (xw, yw) = fp.reduce_pair(&x, &fp.inverse(&x));
            assert!(xw.is_empty() && yw.is_empty());
        }
    }

    #[test]
    fn tau_examples() {
        let fp = klein_product();
        let s1 = klein21();
        assert!(fp.tau(&FPWord::identity(), &w(&[(1, 3)])).is_zero());
        assert!(fp.tau(&w(&[(1, 1)]), &w(&[(2, 1)])).is_zero());
        for g in 1..4 {
            for h in 1..4 {
                assert_eq!(fp.tau(&w(&[(1, g)]), &w(&[(1, h)])), s1.value(g, h));
            }
        }
    }

    #[test]
    fn rewrite_examples() {
        let fp = FreeProduct::untwisted(z(3), z(2));
        assert_eq!(fp.rewrite_to_x(&FPWord::identity()).unwrap(), XWord::default());
        let comm = w(&[(1, 1), (2, 1), (1, 2), (2, 1)]);
        assert_eq!(fp.rewrite_to_x(&comm).unwrap(), XWord(vec![((1, 1), 1)]));
        assert!(matches!(fp.rewrite_to_x(&w(&[(1, 1)])), Err(Error::NotInKernel)));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let x = fp.random_kernel_word(&mut rng, 8);
            assert!(fp.in_kernel(&x));
            let xw = fp.rewrite_to_x(&x).unwrap();
            assert_eq!(fp.expand(&xw), x);
        }
    }

    #[test]
    fn beta_examples() {
        let fp = klein_product();
        assert!(fp.beta(&w(&[(1, 1)])).is_zero());
        let single = fp.expand_syllable((1, 1), 3);
        assert!(fp.beta(&single).is_zero());
        // [g,h]⁻¹[g',h] ends/starts in G1 with letters g⁻¹ and g'
        let two = fp.multiply(&fp.expand_syllable((1, 1), -1), &fp.expand_syllable((2, 1), 1));
        assert_eq!(fp.rewrite_to_x(&two).unwrap().syllables().len(), 2);
        let s1 = klein21();
        assert_eq!(fp.beta(&two), s1.value(1, 2));
        assert!(!fp.beta(&two).is_zero());
    }

    #[test]
    fn trivial_factors_give_trivial_multiplier() {
        let fp = FreeProduct::untwisted(z(3), z(2));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let (x, y) = (fp.random_word(&mut rng, 6), fp.random_word(&mut rng, 6));
            assert!(fp.sigma_value(&x, &y).is_zero());
        }
    }

    #[test]
    fn tau_and_sigma_are_cocycles() {
        let fp = klein_product();
        let t = FreeProductMultiplier::tau(fp.clone());
        let r = validate_sampled(&t, 2000, 5, 7);
        assert!(r.passed(), "{r:?}");
        let s = FreeProductMultiplier::sigma(fp);
        let r = validate_sampled(&s, 2000, 5, 8);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn sigma_is_normalized_and_restricts() {
        let fp = klein_product();
        let s1 = klein21();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..300 {
            let x = fp.random_word(&mut rng, 6);
            assert!(fp.sigma_value(&x, &fp.inverse(&x)).is_zero());
        }
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(fp.sigma_value(&fp.embed(1, a), &fp.embed(1, b)), s1.value(a, b));
            }
        }
    }

    #[test]
    fn sigma_vanishes_on_commutator_subgroup() {
        let fp = klein_product();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..300 {
            let x = fp.random_kernel_word(&mut rng, 8);
            let y = fp.random_kernel_word(&mut rng, 8);
            assert!(fp.sigma_value(&x, &y).is_zero(), "{x:?} {y:?}");
        }
    }

    #[test]
    fn decompose_round_trips() {
        let fp = klein_product();
        let s = FreeProductMultiplier::sigma(fp.clone());
        let d = decompose(&s, fp.group(1).clone(), fp.group(2).clone()).unwrap();
        assert_eq!(d.sigma1().rows(), fp.sigma(1).rows());
        assert_eq!(d.sigma2().rows(), fp.sigma(2).rows());
        assert_eq!(d.check(300, 6, 1).unwrap(), 300);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            assert!(d.beta(&fp.random_word(&mut rng, 6)).is_zero());
        }

        let t = FreeProductMultiplier::tau(fp.clone());
        let d = decompose(&t, fp.group(1).clone(), fp.group(2).clone()).unwrap();
        d.check(300, 6, 2).unwrap();
        let nontrivial = (0..200).any(|_| !d.beta(&fp.random_word(&mut rng, 6)).is_zero());
        assert!(nontrivial);
    }

    #[test]
    fn decompose_trivial() {
        let fp = FreeProduct::untwisted(z(2), z(3));
        let s = FreeProductMultiplier::sigma(fp.clone());
        let d = decompose(&s, fp.group(1).clone(), fp.group(2).clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            assert!(d.beta(&fp.random_word(&mut rng, 6)).is_zero());
        }
    }
}
