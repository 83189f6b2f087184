//! Finite prosets, translations and the shoelace construction.
//!
//! A [`Proset`] stores its full relation matrix. Antisymmetry is not assumed:
//! shoelaces routinely contain elements `x != y` with `x <= y <= x`.

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use thiserror::Error;

/// First axiom failure found by [`Proset::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProsetViolation {
    #[error("relation has {got} entries, expected {n}x{n}")]
    Shape { n: usize, got: usize },
    #[error("{count} labels for {n} elements")]
    LabelCount { n: usize, count: usize },
    #[error("reflexivity fails at {0}")]
    NotReflexive(usize),
    #[error("transitivity fails: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
}

/// First failure found by [`Translation::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationViolation {
    #[error("map has length {got}, proset has {n} elements")]
    Length { n: usize, got: usize },
    #[error("image of {0} is out of range")]
    OutOfRange(usize),
    #[error("not inflationary at {0}: {0} <= T({0}) fails")]
    NotInflationary(usize),
    #[error("not monotone: {0} <= {1} but T({0}) <= T({1}) fails")]
    NotMonotone(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProsetError {
    #[error("invalid proset: {0}")]
    Proset(#[from] ProsetViolation),
    #[error("invalid translation: {0}")]
    Translation(#[from] TranslationViolation),
    #[error("translations live over different prosets")]
    BaseMismatch,
    #[error("translations do not commute at element {0}")]
    NonCommuting(usize),
    #[error("twisted translation needs lambda <= gamma, fails at element {0}")]
    TwistNeedsLeq(usize),
    #[error("height function has {got} values for {n} elements")]
    HeightLength { n: usize, got: usize },
    #[error("height function is not monotone: {0} <= {1} but h({0}) > h({1})")]
    HeightNotMonotone(usize, usize),
    #[error("operation needs a shoelace built from a translation, not a windowed shoelace")]
    WindowedShoelace,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Proset {
    n: usize,
    labels: Option<Vec<String>>,
    rel: Vec<bool>,
}

impl fmt::Debug for Proset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .related_pairs()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| format!("{}<={}", self.label(i), self.label(j)))
            .collect();
        write!(f, "Proset({}; {})", self.n, pairs.join(", "))
    }
}

impl Proset {
    /// Wraps a relation matrix without checking the axioms.
    pub fn from_raw(n: usize, rel: Vec<bool>) -> Self {
        Proset { n, labels: None, rel }
    }

    /// Validating constructor.
    pub fn new(n: usize, rel: Vec<bool>) -> Result<Self, ProsetViolation> {
        let p = Proset::from_raw(n, rel);
        p.validate()?;
        Ok(p)
    }

    /// Exactly the given ordered pairs, unchecked.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rel = vec![false; n * n];
        for (i, j) in pairs {
            rel[i * n + j] = true;
        }
        Proset::from_raw(n, rel)
    }

    /// Reflexive-transitive closure of the given pairs.
    pub fn closure_of(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut p = Proset::from_pairs(n, pairs);
        for i in 0..n {
            p.rel[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if p.rel[i * n + k] {
                    for j in 0..n {
                        if p.rel[k * n + j] {
                            p.rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        p
    }

    /// The chain `0 <= 1 <= ... <= n-1`.
    pub fn chain(n: usize) -> Self {
        let mut rel = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                rel[i * n + j] = true;
            }
        }
        Proset::from_raw(n, rel)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) if i < l.len() => l[i].clone(),
            _ => i.to_string(),
        }
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.n + j]
    }

    pub fn is_iso(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && self.leq(j, i)
    }

    /// All related ordered pairs `(i, j)` with `i <= j`, row-major.
    pub fn related_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.leq(i, j)).map(move |j| (i, j)))
    }

    pub fn pair_count(&self) -> usize {
        self.rel.iter().filter(|&&b| b).count()
    }

    pub fn validate(&self) -> Result<(), ProsetViolation> {
        let n = self.n;
        if self.rel.len() != n * n {
            return Err(ProsetViolation::Shape { n, got: self.rel.len() });
        }
        if let Some(l) = &self.labels {
            if l.len() != n {
                return Err(ProsetViolation::LabelCount { n, count: l.len() });
            }
        }
        if let Some(i) = (0..n).find(|&i| !self.leq(i, i)) {
            return Err(ProsetViolation::NotReflexive(i));
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(ProsetViolation::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Unordered pairs `{x, y}`, `x < y` as indices, with `x <= y` and `y <= x`.
    pub fn iso_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.is_iso(i, j))
            .collect()
    }

    /// Pairs `x < y` (strictly, up to isomorphism) with nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let strict = |a: usize, b: usize| self.leq(a, b) && !self.leq(b, a);
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if strict(i, j) && !(0..self.n).any(|k| strict(i, k) && strict(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Result of comparing two translations in the pointwise preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Leq,
    Geq,
    Equal,
    Incomparable,
}

/// An inflationary monotone self-map of a proset.
///
/// The unit `η` carries no data: its component at `i` is the relation
/// `i <= T(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Translation {
    base: Arc<Proset>,
    map: Vec<usize>,
}

impl fmt::Debug for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Translation{:?}", self.map)
    }
}

impl Translation {
    pub fn from_raw(base: Arc<Proset>, map: Vec<usize>) -> Self {
        Translation { base, map }
    }

    pub fn new(base: Arc<Proset>, map: Vec<usize>) -> Result<Self, TranslationViolation> {
        let t = Translation::from_raw(base, map);
        t.validate()?;
        Ok(t)
    }

    pub fn identity(base: Arc<Proset>) -> Self {
        let map = (0..base.len()).collect();
        Translation { base, map }
    }

    pub fn base(&self) -> &Arc<Proset> {
        &self.base
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn validate(&self) -> Result<(), TranslationViolation> {
        let p = &self.base;
        let n = p.len();
        if self.map.len() != n {
            return Err(TranslationViolation::Length { n, got: self.map.len() });
        }
        if let Some(i) = (0..n).find(|&i| self.map[i] >= n) {
            return Err(TranslationViolation::OutOfRange(i));
        }
        if let Some(i) = (0..n).find(|&i| !p.leq(i, self.map[i])) {
            return Err(TranslationViolation::NotInflationary(i));
        }
        for (i, j) in p.related_pairs() {
            if !p.leq(self.map[i], self.map[j]) {
                return Err(TranslationViolation::NotMonotone(i, j));
            }
        }
        Ok(())
    }

    fn same_base(&self, other: &Translation) -> Result<(), ProsetError> {
        if Arc::ptr_eq(&self.base, &other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(ProsetError::BaseMismatch)
        }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Translation) -> Result<Translation, ProsetError> {
        self.same_base(other)?;
        let map = other.map.iter().map(|&j| self.map[j]).collect();
        Ok(Translation { base: self.base.clone(), map })
    }

    /// `self ∘ self ∘ ... ` (`k` factors, `k = 0` gives the identity).
    pub fn power(&self, k: usize) -> Translation {
        let mut out = Translation::identity(self.base.clone());
        for _ in 0..k {
            out = self.compose(&out).expect("same base");
        }
        out
    }

    /// Pointwise `self(i) <= other(i)` for all `i`.
    pub fn leq(&self, other: &Translation) -> Result<bool, ProsetError> {
        self.same_base(other)?;
        Ok((0..self.map.len()).all(|i| self.base.leq(self.map[i], other.map[i])))
    }

    pub fn compare(&self, other: &Translation) -> Result<Comparison, ProsetError> {
        Ok(match (self.leq(other)?, other.leq(self)?) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Leq,
            (false, true) => Comparison::Geq,
            (false, false) => Comparison::Incomparable,
        })
    }

    /// First element where `self ∘ other` and `other ∘ self` differ.
    pub fn commutes_with(&self, other: &Translation) -> Result<Option<usize>, ProsetError> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        Ok((0..self.map.len()).find(|&i| ab.map[i] != ba.map[i]))
    }
}

/// Which copy of the base proset a shoelace element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CopyTag {
    Plain,
    Primed,
}

/// How cross relations `i <= j'` / `i' <= j` are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossRule {
    /// `Λ(i) <= j` in the base.
    Translation,
    /// On a chain of indices, `i + ε <= j` with no clamping at the top.
    UnclampedShift(usize),
}

/// The shoelace `P ⊔ P'` of a proset along a translation.
///
/// Carrier indices are `0..n` for the plain copy and `n..2n` for the primed
/// copy, in base order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShoelaceProset {
    base: Arc<Proset>,
    carrier: Arc<Proset>,
    lambda: Translation,
    rule: CrossRule,
}

impl ShoelaceProset {
    fn build(base: &Arc<Proset>, lambda: &Translation, rule: CrossRule) -> Self {
        let n = base.len();
        let cross = |i: usize, j: usize| match rule {
            CrossRule::Translation => base.leq(lambda.apply(i), j),
            CrossRule::UnclampedShift(eps) => i + eps <= j,
        };
        let mut rel = vec![false; 4 * n * n];
        let m = 2 * n;
        for i in 0..n {
            for j in 0..n {
                let same = base.leq(i, j);
                let across = cross(i, j);
                rel[i * m + j] = same;
                rel[(n + i) * m + n + j] = same;
                rel[i * m + n + j] = across;
                rel[(n + i) * m + j] = across;
            }
        }
        let mut labels: Vec<String> = (0..n).map(|i| base.label(i)).collect();
        labels.extend((0..n).map(|i| format!("{}'", base.label(i))));
        ShoelaceProset {
            base: base.clone(),
            carrier: Arc::new(Proset::from_raw(m, rel).with_labels(labels)),
            lambda: lambda.clone(),
            rule,
        }
    }

    /// The windowed variant used on chains: the base is a chain, `lambda` is
    /// the clamped shift and cross relations use the unclamped rule.
    pub(crate) fn unclamped_chain(base: &Arc<Proset>, lambda: &Translation, eps: usize) -> Self {
        ShoelaceProset::build(base, lambda, CrossRule::UnclampedShift(eps))
    }

    pub fn base(&self) -> &Arc<Proset> {
        &self.base
    }

    pub fn carrier(&self) -> &Arc<Proset> {
        &self.carrier
    }

    pub fn lambda(&self) -> &Translation {
        &self.lambda
    }

    pub fn rule(&self) -> CrossRule {
        self.rule
    }

    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    pub fn plain(&self, i: usize) -> usize {
        i
    }

    pub fn primed(&self, i: usize) -> usize {
        self.base.len() + i
    }

    pub fn element(&self, i: usize, copy: CopyTag) -> usize {
        match copy {
            CopyTag::Plain => i,
            CopyTag::Primed => self.base.len() + i,
        }
    }

    pub fn origin(&self, x: usize) -> (usize, CopyTag) {
        let n = self.base.len();
        if x < n {
            (x, CopyTag::Plain)
        } else {
            (x - n, CopyTag::Primed)
        }
    }

    fn require_translation_rule(&self) -> Result<(), ProsetError> {
        match self.rule {
            CrossRule::Translation => Ok(()),
            CrossRule::UnclampedShift(_) => Err(ProsetError::WindowedShoelace),
        }
    }

    /// Lift of a base translation to the carrier, optionally swapping copies.
    pub fn induced_translation(&self, gamma: &Translation, twist: bool) -> Result<Translation, ProsetError> {
        self.require_translation_rule()?;
        self.lambda.same_base(gamma)?;
        if let Some(i) = self.lambda.commutes_with(gamma)? {
            return Err(ProsetError::NonCommuting(i));
        }
        if twist {
            if let Some(i) = (0..self.base.len()).find(|&i| !self.base.leq(self.lambda.apply(i), gamma.apply(i))) {
                return Err(ProsetError::TwistNeedsLeq(i));
            }
        }
        let n = self.base.len();
        let mut map = vec![0; 2 * n];
        for i in 0..n {
            let g = gamma.apply(i);
            if twist {
                map[i] = n + g;
                map[n + i] = g;
            } else {
                map[i] = g;
                map[n + i] = n + g;
            }
        }
        let t = Translation::from_raw(self.carrier.clone(), map);
        t.validate()?;
        Ok(t)
    }
}

/// Builds the shoelace of `p` along `lambda`; the carrier is re-validated.
pub fn shoelace(p: &Arc<Proset>, lambda: &Translation) -> Result<ShoelaceProset, ProsetError> {
    p.validate()?;
    if lambda.base() != p {
        return Err(ProsetError::BaseMismatch);
    }
    lambda.validate()?;
    let sh = ShoelaceProset::build(p, lambda, CrossRule::Translation);
    sh.carrier.validate()?;
    Ok(sh)
}

/// A monotone rational-valued function on a proset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightFunction {
    values: Vec<Rational64>,
}

impl HeightFunction {
    pub fn new(p: &Proset, values: Vec<Rational64>) -> Result<Self, ProsetError> {
        let h = HeightFunction { values };
        h.validate(p)?;
        Ok(h)
    }

    pub fn from_raw(values: Vec<Rational64>) -> Self {
        HeightFunction { values }
    }

    pub fn from_integers(p: &Proset, values: impl IntoIterator<Item = i64>) -> Result<Self, ProsetError> {
        HeightFunction::new(p, values.into_iter().map(Rational64::from_integer).collect())
    }

    pub fn values(&self) -> &[Rational64] {
        &self.values
    }

    pub fn validate(&self, p: &Proset) -> Result<(), ProsetError> {
        if self.values.len() != p.len() {
            return Err(ProsetError::HeightLength { n: p.len(), got: self.values.len() });
        }
        for (i, j) in p.related_pairs() {
            if self.values[i] > self.values[j] {
                return Err(ProsetError::HeightNotMonotone(i, j));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslationHeight {
    /// Maximum of `h(T(x)) - h(x)`.
    pub height: Rational64,
    /// Whether every difference equals `height`.
    pub uniform: bool,
}

impl TranslationHeight {
    pub fn epsilon(&self) -> Option<Rational64> {
        self.uniform.then_some(self.height)
    }
}

/// Height of `t` over all elements. An empty proset reports height 0, uniform.
pub fn translation_height(t: &Translation, h: &HeightFunction) -> TranslationHeight {
    translation_height_over(t, h, 0..t.map().len())
}

/// Height of `t` restricted to the given elements.
pub fn translation_height_over(
    t: &Translation,
    h: &HeightFunction,
    points: impl IntoIterator<Item = usize>,
) -> TranslationHeight {
    let diffs: Vec<Rational64> = points.into_iter().map(|x| h.values[t.apply(x)] - h.values[x]).collect();
    let height = diffs.iter().copied().max().unwrap_or_default();
    TranslationHeight { height, uniform: diffs.iter().all(|&d| d == height) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Arc<Proset> {
        Arc::new(Proset::chain(3).with_labels(vec!["1".into(), "2".into(), "3".into()]))
    }

    fn min_plus_one(p: &Arc<Proset>) -> Translation {
        Translation::new(p.clone(), vec![1, 2, 2]).unwrap()
    }

    #[test]
    fn chain_is_valid() {
        assert_eq!(Proset::chain(3).validate(), Ok(()));
    }

    #[test]
    fn missing_composite_is_reported() {
        let p = Proset::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        assert_eq!(p.validate(), Err(ProsetViolation::NotTransitive(0, 1, 2)));
    }

    #[test]
    fn two_cycle_is_a_valid_proset() {
        let p = Proset::from_pairs(2, [(0, 0), (1, 1), (0, 1), (1, 0)]);
        assert_eq!(p.validate(), Ok(()));
        assert_eq!(p.iso_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn missing_reflexive_pair() {
        let p = Proset::from_pairs(2, [(0, 0)]);
        assert_eq!(p.validate(), Err(ProsetViolation::NotReflexive(1)));
    }

    #[test]
    fn translation_checks() {
        let p = chain3();
        assert!(Translation::identity(p.clone()).validate().is_ok());
        assert!(min_plus_one(&p).validate().is_ok());
        let down = Translation::from_raw(p.clone(), vec![0, 1, 1]);
        assert_eq!(down.validate(), Err(TranslationViolation::NotInflationary(2)));
        let antichain = Arc::new(Proset::closure_of(3, [(0, 2)]));
        let wild = Translation::from_raw(antichain, vec![2, 1, 2]);
        assert!(wild.validate().is_ok());
    }

    #[test]
    fn composition() {
        let p = chain3();
        let t = min_plus_one(&p);
        let id = Translation::identity(p.clone());
        assert_eq!(id.compose(&t).unwrap(), t);
        assert_eq!(t.compose(&t).unwrap().map(), &[2, 2, 2]);
        let other = Translation::identity(Arc::new(Proset::chain(4)));
        assert_eq!(t.compose(&other), Err(ProsetError::BaseMismatch));
    }

    #[test]
    fn comparisons() {
        let p = chain3();
        let t = min_plus_one(&p);
        let id = Translation::identity(p.clone());
        assert_eq!(id.compare(&t).unwrap(), Comparison::Leq);
        assert_eq!(t.compare(&id).unwrap(), Comparison::Geq);
        assert_eq!(t.compare(&t).unwrap(), Comparison::Equal);

        // 0 <= 1 and 2 <= 3 with 0,2 incomparable
        let q = Arc::new(Proset::closure_of(4, [(0, 1), (2, 3)]));
        let a = Translation::new(q.clone(), vec![1, 1, 2, 3]).unwrap();
        let b = Translation::new(q.clone(), vec![0, 1, 3, 3]).unwrap();
        assert_eq!(a.compare(&b).unwrap(), Comparison::Incomparable);
    }

    #[test]
    fn three_chain_example() {
        let p = chain3();
        let sh = shoelace(&p, &min_plus_one(&p)).unwrap();
        assert_eq!(sh.carrier().len(), 6);
        assert_eq!(sh.carrier().pair_count(), 20);
        assert_eq!(sh.carrier().iso_pairs(), vec![(2, 5)]);
        assert_eq!(sh.carrier().label(5), "3'");
    }

    #[test]
    fn identity_shoelace_ties_every_point() {
        let p = Arc::new(Proset::closure_of(4, [(0, 1), (2, 3)]));
        let sh = shoelace(&p, &Translation::identity(p.clone())).unwrap();
        let expected: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 4)).collect();
        assert_eq!(sh.carrier().iso_pairs(), expected);
    }

    #[test]
    fn shift_shoelace_cross_rule() {
        let p = Arc::new(Proset::chain(5));
        let lam = Translation::new(p.clone(), vec![2, 3, 4, 4, 4]).unwrap();
        let sh = shoelace(&p, &lam).unwrap();
        assert!(sh.carrier().leq(sh.plain(0), sh.primed(2)));
        assert!(!sh.carrier().leq(sh.plain(0), sh.primed(1)));
    }

    #[test]
    fn induced_translations() {
        let p = Arc::new(Proset::chain(6));
        let lam1 = Translation::new(p.clone(), (0..6).map(|i| (i + 1).min(5)).collect()).unwrap();
        let sh = shoelace(&p, &lam1).unwrap();
        let id = sh.induced_translation(&Translation::identity(p.clone()), false).unwrap();
        assert!(id.is_identity());
        let tw = sh.induced_translation(&lam1, true).unwrap();
        assert_eq!(tw.apply(sh.plain(0)), sh.primed(1));
        assert_eq!(tw.apply(sh.primed(0)), sh.plain(1));
        let twice = tw.compose(&tw).unwrap();
        let lam2 = lam1.compose(&lam1).unwrap();
        assert_eq!(twice, sh.induced_translation(&lam2, false).unwrap());
    }

    #[test]
    fn induced_translation_preconditions() {
        let p = Arc::new(Proset::chain(3));
        let lam = Translation::new(p.clone(), vec![1, 2, 2]).unwrap();
        let sh = shoelace(&p, &lam).unwrap();
        // gamma = id does not dominate lambda
        let err = sh.induced_translation(&Translation::identity(p.clone()), true);
        assert_eq!(err, Err(ProsetError::TwistNeedsLeq(0)));
        // 0 -> 1, 1 -> 1, 2 -> 2 does not commute with lambda
        let gamma = Translation::new(p.clone(), vec![1, 1, 2]).unwrap();
        assert_eq!(sh.induced_translation(&gamma, false), Err(ProsetError::NonCommuting(0)));
    }

    #[test]
    fn heights() {
        let p = Arc::new(Proset::chain(4));
        let h = HeightFunction::from_integers(&p, 0..4).unwrap();
        let id = Translation::identity(p.clone());
        let th = translation_height(&id, &h);
        assert!(th.uniform);
        assert_eq!(th.epsilon(), Some(Rational64::from_integer(0)));
        let shift = Translation::new(p.clone(), vec![1, 2, 3, 3]).unwrap();
        let full = translation_height(&shift, &h);
        assert!(!full.uniform);
        let interior = translation_height_over(&shift, &h, 0..3);
        assert_eq!(interior.epsilon(), Some(Rational64::from_integer(1)));
        assert!(HeightFunction::from_integers(&p, [0, 2, 1, 3]).is_err());
    }
}
