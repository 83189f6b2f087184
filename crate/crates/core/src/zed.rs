//! The integers as a proset: windows, interval modules, barcodes, matchings
//! and the correspondence between essential matchings and interval
//! decompositions of shoelace representations.
//!
//! Finite windows `{lo, ..., hi}` stand in for ℤ. The shift `Λ_ε` is clamped
//! at the window top so it stays a translation of the finite chain, while
//! [`shoelace_window`] decides cross relations by the unclamped rule
//! `i + ε <= j`. Constructions that depend on the difference require every
//! finite endpoint to sit at least `2ε` inside the window.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exactlin::{FieldSpec, Matrix};
use crate::interleave::{direct_sum_interleavings, pack_onto, transport, InterleaveError, Interleaving};
use crate::proset::{HeightFunction, Proset, ProsetError, ShoelaceProset, Translation};
use crate::rep::{direct_sum, hom_space, precompose, DirectSum, NatTrans, RepError, Representation};

/// An integer or one of the two symbolic infinities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtendedInt {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `self - k`; infinities are fixed.
    pub fn minus(self, k: u64) -> ExtendedInt {
        match self {
            ExtendedInt::Finite(v) => ExtendedInt::Finite(v - k as i64),
            other => other,
        }
    }

    pub fn plus(self, k: u64) -> ExtendedInt {
        match self {
            ExtendedInt::Finite(v) => ExtendedInt::Finite(v + k as i64),
            other => other,
        }
    }
}

impl From<i64> for ExtendedInt {
    fn from(v: i64) -> Self {
        ExtendedInt::Finite(v)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::NegInf => f.write_str("-inf"),
            ExtendedInt::Finite(v) => write!(f, "{v}"),
            ExtendedInt::PosInf => f.write_str("+inf"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ExtendedIntRepr {
    Int(i64),
    Symbol(String),
}

impl Serialize for ExtendedInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedInt::Finite(v) => s.serialize_i64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ExtendedIntRepr::deserialize(d)? {
            ExtendedIntRepr::Int(v) => Ok(ExtendedInt::Finite(v)),
            ExtendedIntRepr::Symbol(s) => match s.as_str() {
                "-inf" => Ok(ExtendedInt::NegInf),
                "+inf" => Ok(ExtendedInt::PosInf),
                other => Err(serde::de::Error::custom(format!("expected an integer, \"-inf\" or \"+inf\", got {other:?}"))),
            },
        }
    }
}

/// A distance between extended integers: finite or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// `|a - b|`, with equal infinities at distance 0 and every other pair
/// involving an infinity at distance ∞.
pub fn endpoint_distance(a: ExtendedInt, b: ExtendedInt) -> Distance {
    match (a, b) {
        (ExtendedInt::Finite(x), ExtendedInt::Finite(y)) => Distance::Finite(x.abs_diff(y)),
        (x, y) if x == y => Distance::Finite(0),
        _ => Distance::Infinite,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZedError {
    #[error("invalid interval with endpoints {lo} and {hi}")]
    InvalidInterval { lo: ExtendedInt, hi: ExtendedInt },
    #[error("invalid window [{lo}, {hi}]")]
    InvalidWindow { lo: i64, hi: i64 },
    #[error("interval {interval} does not meet window {window}")]
    OutsideWindow { interval: Interval, window: Window },
    #[error("interval {interval} has a finite endpoint outside window {window}")]
    LossyClamp { interval: Interval, window: Window },
    #[error("window {window} leaves less than {margin} room around {interval}")]
    WindowTooSmall { interval: Interval, window: Window, margin: u64 },
    #[error("representation does not live on the chain of window {0}")]
    NotWindowModule(Window),
    #[error("{side:?} instance {index} is out of range")]
    BadInstance { side: MatchSide, index: usize },
    #[error("{side:?} instance {index} is matched twice")]
    RepeatedInstance { side: MatchSide, index: usize },
    #[error("matching is not valid: {0:?}")]
    InvalidMatching(Vec<MatchingViolation>),
    #[error("matching is not essential at {0:?}")]
    NotEssential(Vec<(Interval, Interval)>),
    #[error("summand {index}: {violation}")]
    Decomposition { index: usize, violation: SummandViolation },
    #[error("summand {index} does not expand to an interval representation")]
    ExpansionMismatch { index: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Interleave(#[from] InterleaveError),
    #[error(transparent)]
    Proset(#[from] ProsetError),
}

/// `I[lo, hi]`, possibly with infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: ExtendedInt,
    hi: ExtendedInt,
}

impl Interval {
    pub fn new(lo: ExtendedInt, hi: ExtendedInt) -> Result<Self, ZedError> {
        if lo > hi || lo == ExtendedInt::PosInf || hi == ExtendedInt::NegInf {
            return Err(ZedError::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// `I[lo, hi]` with finite endpoints. Panics if `lo > hi`.
    pub fn closed(lo: i64, hi: i64) -> Self {
        Interval::new(lo.into(), hi.into()).expect("lo <= hi")
    }

    pub fn lo(&self) -> ExtendedInt {
        self.lo
    }

    pub fn hi(&self) -> ExtendedInt {
        self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn length(&self) -> Distance {
        endpoint_distance(self.lo, self.hi)
    }

    /// Length strictly below `2ε`.
    pub fn is_short(&self, eps: u64) -> bool {
        self.length() < Distance::Finite(2 * eps)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x.into() && ExtendedInt::from(x) <= self.hi
    }

    /// The interval whose module is this one precomposed with `Λ_ε`.
    pub fn shifted_down(&self, eps: u64) -> Interval {
        Interval { lo: self.lo.minus(eps), hi: self.hi.minus(eps) }
    }

    pub fn finite_endpoints(&self) -> impl Iterator<Item = i64> {
        [self.lo.finite(), self.hi.finite()].into_iter().flatten()
    }

    /// The part of the interval inside `w`, as window points.
    pub fn clamp_to(&self, w: &Window) -> Option<(i64, i64)> {
        let lo = self.lo.finite().map_or(w.lo, |v| v.max(w.lo));
        let hi = self.hi.finite().map_or(w.hi, |v| v.min(w.hi));
        (lo <= hi).then_some((lo, hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo.is_finite() { '[' } else { '(' };
        let close = if self.hi.is_finite() { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (lo, hi) = <(ExtendedInt, ExtendedInt)>::deserialize(d)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Condition (⋆): `s-ε <= x <= t-ε <= y` or `x-ε <= s <= y-ε <= t` for
/// `i = I[x,y]`, `j = I[s,t]`.
pub fn condition_star(i: &Interval, j: &Interval, eps: u64) -> bool {
    let (x, y, s, t) = (i.lo, i.hi, j.lo, j.hi);
    (s.minus(eps) <= x && x <= t.minus(eps) && t.minus(eps) <= y)
        || (x.minus(eps) <= s && s <= y.minus(eps) && y.minus(eps) <= t)
}

/// A multiset of intervals, kept in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Barcode {
    bars: BTreeMap<Interval, usize>,
}

impl Barcode {
    pub fn new() -> Self {
        Barcode::default()
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut b = Barcode::new();
        for i in intervals {
            b.add(i, 1);
        }
        b
    }

    pub fn add(&mut self, interval: Interval, multiplicity: usize) {
        if multiplicity > 0 {
            *self.bars.entry(interval).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, interval: &Interval) -> usize {
        self.bars.get(interval).copied().unwrap_or(0)
    }

    /// Distinct intervals with their multiplicities, in canonical order.
    pub fn bars(&self) -> impl Iterator<Item = (Interval, usize)> + '_ {
        self.bars.iter().map(|(&i, &m)| (i, m))
    }

    /// One entry per instance, in canonical order. Matchings index into this.
    pub fn instances(&self) -> Vec<Interval> {
        self.bars.iter().flat_map(|(&i, &m)| std::iter::repeat_n(i, m)).collect()
    }

    pub fn total(&self) -> usize {
        self.bars.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.bars.keys().all(Interval::is_finite)
    }

    /// Number of bars containing `x`, counted with multiplicity.
    pub fn rank_at(&self, x: i64) -> usize {
        self.bars.iter().filter(|(i, _)| i.contains(x)).map(|(_, &m)| m).sum()
    }
}

impl FromIterator<Interval> for Barcode {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        Barcode::from_intervals(iter)
    }
}

/// A finite stretch `{lo, ..., hi}` of the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl TryFrom<(i64, i64)> for Window {
    type Error = ZedError;

    fn try_from((lo, hi): (i64, i64)) -> Result<Self, ZedError> {
        Window::new(lo, hi)
    }
}

impl From<Window> for (i64, i64) {
    fn from(w: Window) -> Self {
        (w.lo, w.hi)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self, ZedError> {
        if lo > hi {
            return Err(ZedError::InvalidWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: i64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }

    pub fn index(&self, x: i64) -> usize {
        debug_assert!(self.contains(x));
        (x - self.lo) as usize
    }

    pub fn point(&self, idx: usize) -> i64 {
        self.lo + idx as i64
    }

    pub fn points(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// The smallest window holding every finite endpoint with `margin` room
    /// on both sides. With no finite endpoints the window is `[-margin, margin]`.
    pub fn around<'a>(intervals: impl IntoIterator<Item = &'a Interval>, margin: u64) -> Window {
        let ends: Vec<i64> = intervals.into_iter().flat_map(|i| i.finite_endpoints()).collect();
        let lo = ends.iter().copied().min().unwrap_or(0);
        let hi = ends.iter().copied().max().unwrap_or(0);
        Window { lo: lo - margin as i64, hi: hi + margin as i64 }
    }

    /// Whether every finite endpoint of `i` is at least `margin` inside.
    pub fn admits(&self, i: &Interval, margin: u64) -> bool {
        let m = margin as i64;
        i.finite_endpoints().all(|e| self.lo + m <= e && e <= self.hi - m)
    }

    fn require_admits(&self, i: &Interval, margin: u64) -> Result<(), ZedError> {
        if self.admits(i, margin) {
            Ok(())
        } else {
            Err(ZedError::WindowTooSmall { interval: *i, window: *self, margin })
        }
    }
}

/// The chain on `w`, labelled by its points, with height `h(x) = x`.
pub fn window_chain(w: &Window) -> (Arc<Proset>, HeightFunction) {
    let p = Arc::new(Proset::chain(w.len()).with_labels(w.points().map(|x| x.to_string()).collect()));
    let h = HeightFunction::from_integers(&p, w.points()).expect("chain height is monotone");
    (p, h)
}

fn chain_of(w: &Window) -> Arc<Proset> {
    window_chain(w).0
}

/// `x ↦ min(x + ε, hi)` on the window chain.
pub fn lambda_eps(w: &Window, eps: u64) -> Translation {
    let n = w.len();
    let map = (0..n).map(|i| (i + eps as usize).min(n - 1)).collect();
    Translation::from_raw(chain_of(w), map)
}

/// The shoelace over the window with the unclamped cross rule `i + ε <= j`.
pub fn shoelace_window(w: &Window, eps: u64) -> ShoelaceProset {
    let sh = ShoelaceProset::unclamped_chain(&chain_of(w), &lambda_eps(w, eps), eps as usize);
    debug_assert_eq!(sh.carrier().validate(), Ok(()));
    sh
}

/// Height `h(i) = h(i') = i` on [`shoelace_window`].
pub fn shoelace_height(w: &Window) -> HeightFunction {
    HeightFunction::from_raw(w.points().chain(w.points()).map(num_rational::Rational64::from_integer).collect())
}

/// The interval module of `i` on the window chain.
pub fn interval_to_module(i: &Interval, w: &Window, field: FieldSpec) -> Result<Representation, ZedError> {
    let (lo, hi) = i.clamp_to(w).ok_or(ZedError::OutsideWindow { interval: *i, window: *w })?;
    if i.finite_endpoints().any(|e| !w.contains(e)) {
        return Err(ZedError::LossyClamp { interval: *i, window: *w });
    }
    let support: Vec<bool> = w.points().map(|x| (lo..=hi).contains(&x)).collect();
    Ok(Representation::thin(chain_of(w), field, &support))
}

/// Direct sum of interval modules, in the given order.
pub fn interval_sum(intervals: &[Interval], w: &Window, field: FieldSpec) -> Result<DirectSum, ZedError> {
    let parts = intervals.iter().map(|i| interval_to_module(i, w, field)).collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Representation> = parts.iter().collect();
    Ok(direct_sum(&chain_of(w), field, &refs)?)
}

/// A representation of a window chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowModule {
    window: Window,
    rep: Arc<Representation>,
}

impl WindowModule {
    pub fn new(window: Window, rep: Arc<Representation>) -> Result<Self, ZedError> {
        if rep.proset() != &chain_of(&window) {
            return Err(ZedError::NotWindowModule(window));
        }
        rep.validate()?;
        Ok(WindowModule { window, rep })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }
}

/// How bars reaching the window edges are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    Finite,
    Infinite,
}

/// Barcode by rank inclusion–exclusion:
/// `m[a,b] = r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1)`.
pub fn barcode(wm: &WindowModule, boundary: Boundary) -> Barcode {
    let w = wm.window;
    let n = w.len() as i64;
    let mut ranks = vec![0i64; (n * n) as usize];
    for a in 0..n {
        for b in a..n {
            ranks[(a * n + b) as usize] = wm.rep.map(a as usize, b as usize).rank() as i64;
        }
    }
    let r = |a: i64, b: i64| if a < 0 || b >= n || a > b { 0 } else { ranks[(a * n + b) as usize] };
    let mut out = Barcode::new();
    for a in 0..n {
        for b in a..n {
            let m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            debug_assert!(m >= 0, "representations of a chain decompose into intervals");
            if m > 0 {
                let infinite = boundary == Boundary::Infinite;
                let lo = if infinite && a == 0 { ExtendedInt::NegInf } else { w.point(a as usize).into() };
                let hi = if infinite && b == n - 1 { ExtendedInt::PosInf } else { w.point(b as usize).into() };
                out.add(Interval { lo, hi }, m as usize);
            }
        }
    }
    out
}

/// Which barcode of a matching an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatchSide {
    Source,
    Target,
}

/// A partial bijection between the instances of two barcodes.
///
/// Pairs index into [`Barcode::instances`]. Instances of equal intervals are
/// interchangeable, so pairs are stored in a canonical form and two matchings
/// are equal exactly when they match the same multiset of interval pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    source: Barcode,
    target: Barcode,
    epsilon: u64,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(source: Barcode, target: Barcode, epsilon: u64, pairs: Vec<(usize, usize)>) -> Result<Self, ZedError> {
        let src = source.instances();
        let tgt = target.instances();
        let mut seen_s = vec![false; src.len()];
        let mut seen_t = vec![false; tgt.len()];
        for &(a, b) in &pairs {
            for (side, idx, seen) in [(MatchSide::Source, a, &mut seen_s), (MatchSide::Target, b, &mut seen_t)] {
                match seen.get_mut(idx) {
                    None => return Err(ZedError::BadInstance { side, index: idx }),
                    Some(true) => return Err(ZedError::RepeatedInstance { side, index: idx }),
                    Some(flag) => *flag = true,
                }
            }
        }
        let interval_pairs: Vec<(Interval, Interval)> = pairs.iter().map(|&(a, b)| (src[a], tgt[b])).collect();
        Matching::from_interval_pairs(source, target, epsilon, &interval_pairs)
    }

    /// Matches the given interval pairs, using the lowest free instance of
    /// each interval.
    pub fn from_interval_pairs(
        source: Barcode,
        target: Barcode,
        epsilon: u64,
        interval_pairs: &[(Interval, Interval)],
    ) -> Result<Self, ZedError> {
        let src = source.instances();
        let tgt = target.instances();
        let mut used_s = vec![false; src.len()];
        let mut used_t = vec![false; tgt.len()];
        let mut sorted = interval_pairs.to_vec();
        sorted.sort();
        let mut pairs = Vec::with_capacity(sorted.len());
        for (i, j) in sorted {
            let a = take_instance(&src, &mut used_s, &i).ok_or(ZedError::BadInstance { side: MatchSide::Source, index: src.len() })?;
            let b = take_instance(&tgt, &mut used_t, &j).ok_or(ZedError::BadInstance { side: MatchSide::Target, index: tgt.len() })?;
            pairs.push((a, b));
        }
        pairs.sort();
        Ok(Matching { source, target, epsilon, pairs })
    }

    pub fn source(&self) -> &Barcode {
        &self.source
    }

    pub fn target(&self) -> &Barcode {
        &self.target
    }

    pub fn epsilon(&self) -> u64 {
        self.epsilon
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Matched interval pairs in canonical order.
    pub fn matched(&self) -> Vec<(Interval, Interval)> {
        let src = self.source.instances();
        let tgt = self.target.instances();
        let mut out: Vec<_> = self.pairs.iter().map(|&(a, b)| (src[a], tgt[b])).collect();
        out.sort();
        out
    }

    pub fn unmatched(&self, side: MatchSide) -> Vec<Interval> {
        let (all, hit): (Vec<Interval>, Vec<usize>) = match side {
            MatchSide::Source => (self.source.instances(), self.pairs.iter().map(|p| p.0).collect()),
            MatchSide::Target => (self.target.instances(), self.pairs.iter().map(|p| p.1).collect()),
        };
        all.into_iter().enumerate().filter(|(k, _)| !hit.contains(k)).map(|(_, i)| i).collect()
    }
}

fn take_instance(all: &[Interval], used: &mut [bool], i: &Interval) -> Option<usize> {
    let k = (0..all.len()).find(|&k| !used[k] && all[k] == *i)?;
    used[k] = true;
    Some(k)
}

/// A reason a matching is not an ε-matching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum MatchingViolation {
    /// A matched pair whose endpoints are more than ε apart.
    TooFar { source: Interval, target: Interval },
    /// An unmatched interval of length at least `2ε`.
    UnmatchedLong { side: MatchSide, interval: Interval },
}

impl fmt::Display for MatchingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingViolation::TooFar { source, target } => write!(f, "{source} and {target} are too far apart"),
            MatchingViolation::UnmatchedLong { side, interval } => write!(f, "{side:?} interval {interval} is unmatched but not short"),
        }
    }
}

impl Serialize for MatchSide {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            MatchSide::Source => "source",
            MatchSide::Target => "target",
        })
    }
}

fn close_enough(i: &Interval, j: &Interval, eps: u64) -> bool {
    let e = Distance::Finite(eps);
    endpoint_distance(i.lo, j.lo) <= e && endpoint_distance(i.hi, j.hi) <= e
}

/// All ways `s` fails to be an ε-matching; empty when it is one.
pub fn validate_matching(s: &Matching) -> Vec<MatchingViolation> {
    let mut out = Vec::new();
    for (i, j) in s.matched() {
        if !close_enough(&i, &j, s.epsilon) {
            out.push(MatchingViolation::TooFar { source: i, target: j });
        }
    }
    for side in [MatchSide::Source, MatchSide::Target] {
        for i in s.unmatched(side) {
            if !i.is_short(s.epsilon) {
                out.push(MatchingViolation::UnmatchedLong { side, interval: i });
            }
        }
    }
    out
}

/// Matched short–short pairs violating Condition (⋆); empty when `s` is
/// essential.
pub fn is_essential(s: &Matching) -> Result<Vec<(Interval, Interval)>, ZedError> {
    let violations = validate_matching(s);
    if !violations.is_empty() {
        return Err(ZedError::InvalidMatching(violations));
    }
    let eps = s.epsilon;
    Ok(s.matched()
        .into_iter()
        .filter(|(i, j)| i.is_short(eps) && j.is_short(eps) && !condition_star(i, j, eps))
        .collect())
}

/// `dim Hom(I, J)` on the window chain, from the naturality solver.
pub fn hom_dimension(i: &Interval, j: &Interval, w: &Window, field: FieldSpec) -> Result<usize, ZedError> {
    let m = Arc::new(interval_to_module(i, w, field)?);
    let n = Arc::new(interval_to_module(j, w, field)?);
    Ok(hom_space(&m, &n)?.len())
}

/// The window used for pairwise constructions: all finite endpoints of `i`
/// and `j` with `2ε` room.
pub fn padded_window(i: &Interval, j: &Interval, eps: u64) -> Window {
    Window::around([i, j], 2 * eps)
}

/// Indicator maps `f : I -> JΛ_ε` on `[x, t-ε]` and `g : J -> IΛ_ε` on
/// `[s, y-ε]`. A candidate that is not natural is replaced by zero.
pub fn canonical_pair(i: &Interval, j: &Interval, eps: u64, w: &Window, field: FieldSpec) -> Result<(NatTrans, NatTrans), ZedError> {
    let lam = lambda_eps(w, eps);
    let m = Arc::new(interval_to_module(i, w, field)?);
    let n = Arc::new(interval_to_module(j, w, field)?);
    let f = indicator(&m, &n, &lam, w, i.lo, j.hi.minus(eps))?;
    let g = indicator(&n, &m, &lam, w, j.lo, i.hi.minus(eps))?;
    Ok((f, g))
}

fn indicator(
    source: &Arc<Representation>,
    target: &Arc<Representation>,
    lam: &Translation,
    w: &Window,
    from: ExtendedInt,
    to: ExtendedInt,
) -> Result<NatTrans, ZedError> {
    let shifted = Arc::new(precompose(target, lam)?);
    let field = source.field();
    let components = (0..w.len())
        .map(|k| {
            let (r, c) = (shifted.dim(k), source.dim(k));
            let x = ExtendedInt::from(w.point(k));
            if r == 1 && c == 1 && from <= x && x <= to {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, r, c)
            }
        })
        .collect();
    let t = NatTrans::from_raw(source.clone(), shifted.clone(), components);
    Ok(if t.validate().is_ok() { t } else { NatTrans::zero(source.clone(), shifted) })
}

/// `(I, J, f, g)` from [`canonical_pair`], validated as an interleaving over
/// the clamped `Λ_ε`.
pub fn canonical_interleaving(i: &Interval, j: &Interval, eps: u64, w: &Window, field: FieldSpec) -> Result<Interleaving, ZedError> {
    let (f, g) = canonical_pair(i, j, eps, w, field)?;
    Ok(Interleaving::new(f.source().clone(), g.source().clone(), lambda_eps(w, eps), f, g)?)
}

/// One summand of a decomposition certificate: an interval on the plain
/// copy, one on the primed copy, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub left: Option<Interval>,
    pub right: Option<Interval>,
}

impl Summand {
    pub fn pair(left: Interval, right: Interval) -> Self {
        Summand { left: Some(left), right: Some(right) }
    }

    pub fn left(left: Interval) -> Self {
        Summand { left: Some(left), right: None }
    }

    pub fn right(right: Interval) -> Self {
        Summand { left: None, right: Some(right) }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |i: &Option<Interval>| i.map_or("0".to_string(), |i| i.to_string());
        write!(f, "({}, {})", show(&self.left), show(&self.right))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SummandViolation {
    #[error("both sides are empty")]
    Empty,
    #[error("{0} does not fit in the window with the required margin")]
    WindowTooSmall(Interval),
    #[error("support is not connected")]
    Disconnected,
    #[error("support is not convex: element {0} lies between support elements")]
    NotConvex(String),
    #[error("single-sided interval {0} is not short")]
    NotShort(Interval),
}

/// An interval decomposition of a representation of [`shoelace_window`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecomposedShoelaceRep {
    window: Window,
    epsilon: u64,
    field: FieldSpec,
    summands: Vec<Summand>,
}

impl DecomposedShoelaceRep {
    pub fn from_raw(window: Window, epsilon: u64, field: FieldSpec, summands: Vec<Summand>) -> Self {
        DecomposedShoelaceRep { window, epsilon, field, summands }
    }

    pub fn new(window: Window, epsilon: u64, field: FieldSpec, summands: Vec<Summand>) -> Result<Self, ZedError> {
        let l = DecomposedShoelaceRep::from_raw(window, epsilon, field, summands);
        l.validate()?;
        Ok(l)
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn epsilon(&self) -> u64 {
        self.epsilon
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// The same decomposition with summands in canonical order.
    pub fn canonical(&self) -> DecomposedShoelaceRep {
        let mut summands = self.summands.clone();
        summands.sort();
        DecomposedShoelaceRep { summands, ..self.clone() }
    }

    /// Support of summand `k` on the carrier of [`shoelace_window`].
    pub fn support(&self, k: usize) -> Vec<bool> {
        summand_support(&self.summands[k], &self.window)
    }

    pub fn validate(&self) -> Result<(), ZedError> {
        let sh = shoelace_window(&self.window, self.epsilon);
        for (index, s) in self.summands.iter().enumerate() {
            check_summand(s, &self.window, self.epsilon, &sh)
                .map_err(|violation| ZedError::Decomposition { index, violation })?;
        }
        Ok(())
    }
}

fn summand_support(s: &Summand, w: &Window) -> Vec<bool> {
    let side = |i: &Option<Interval>| -> Vec<bool> {
        let range = i.and_then(|i| i.clamp_to(w));
        w.points().map(|x| range.is_some_and(|(lo, hi)| (lo..=hi).contains(&x))).collect()
    };
    let mut out = side(&s.left);
    out.extend(side(&s.right));
    out
}

fn check_summand(s: &Summand, w: &Window, eps: u64, sh: &ShoelaceProset) -> Result<(), SummandViolation> {
    if s.left.is_none() && s.right.is_none() {
        return Err(SummandViolation::Empty);
    }
    for i in s.left.iter().chain(s.right.iter()) {
        if !w.admits(i, 2 * eps) || i.clamp_to(w).is_none() {
            return Err(SummandViolation::WindowTooSmall(*i));
        }
    }
    if let (Some(i), None) | (None, Some(i)) = (s.left, s.right) {
        if !i.is_short(eps) {
            return Err(SummandViolation::NotShort(i));
        }
    }
    let support = summand_support(s, w);
    let carrier = sh.carrier();
    if let Some(z) = convexity_gap(carrier, &support) {
        return Err(SummandViolation::NotConvex(carrier.label(z)));
    }
    if !is_connected(carrier, &support) {
        return Err(SummandViolation::Disconnected);
    }
    Ok(())
}

/// An element outside the support lying above one support element and below
/// another.
fn convexity_gap(p: &Proset, support: &[bool]) -> Option<usize> {
    (0..p.len()).find(|&z| {
        !support[z]
            && (0..p.len()).any(|x| support[x] && p.leq(x, z))
            && (0..p.len()).any(|y| support[y] && p.leq(z, y))
    })
}

fn is_connected(p: &Proset, support: &[bool]) -> bool {
    let members: Vec<usize> = (0..p.len()).filter(|&x| support[x]).collect();
    let Some(&start) = members.first() else { return true };
    let mut seen = vec![false; p.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &members {
            if !seen[y] && (p.leq(x, y) || p.leq(y, x)) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    members.iter().all(|&x| seen[x])
}

/// Which construction [`matching_to_rep`] follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// One summand per matched pair; the input must be essential.
    #[default]
    Essential,
    /// Matched short pairs violating (⋆) are split into two single-sided
    /// summands.
    NonEssential,
}

/// `F(σ)` or `F'(σ)` as a decomposition certificate on `w`.
pub fn matching_to_rep(s: &Matching, w: &Window, variant: Variant, field: FieldSpec) -> Result<DecomposedShoelaceRep, ZedError> {
    let violations = validate_matching(s);
    if !violations.is_empty() {
        return Err(ZedError::InvalidMatching(violations));
    }
    let eps = s.epsilon;
    let bad = is_essential(s)?;
    if variant == Variant::Essential && !bad.is_empty() {
        return Err(ZedError::NotEssential(bad));
    }
    for i in s.source.instances().iter().chain(s.target.instances().iter()) {
        w.require_admits(i, 2 * eps)?;
    }
    let mut summands = Vec::new();
    for (i, j) in s.matched() {
        if bad.contains(&(i, j)) {
            summands.push(Summand::left(i));
            summands.push(Summand::right(j));
        } else {
            summands.push(Summand::pair(i, j));
        }
    }
    summands.extend(s.unmatched(MatchSide::Source).into_iter().map(Summand::left));
    summands.extend(s.unmatched(MatchSide::Target).into_iter().map(Summand::right));
    summands.sort();
    DecomposedShoelaceRep::new(*w, eps, field, summands)
}

/// `G(L)`: matched pairs from two-sided summands, the rest unmatched.
pub fn rep_to_matching(l: &DecomposedShoelaceRep) -> Result<Matching, ZedError> {
    l.validate()?;
    let source: Barcode = l.summands.iter().filter_map(|s| s.left).collect();
    let target: Barcode = l.summands.iter().filter_map(|s| s.right).collect();
    let pairs: Vec<(Interval, Interval)> = l.summands.iter().filter_map(|s| Some((s.left?, s.right?))).collect();
    let m = Matching::from_interval_pairs(source, target, l.epsilon, &pairs)?;
    let bad = is_essential(&m)?;
    if !bad.is_empty() {
        return Err(ZedError::NotEssential(bad));
    }
    Ok(m)
}

/// The Λ_ε-interleaving of one summand over the clamped window shift.
pub fn summand_interleaving(s: &Summand, w: &Window, eps: u64, field: FieldSpec) -> Result<Interleaving, ZedError> {
    let lam = lambda_eps(w, eps);
    let zero = || Arc::new(Representation::zero(chain_of(w), field));
    let module = |i: &Interval| interval_to_module(i, w, field).map(Arc::new);
    Ok(match (s.left, s.right) {
        (Some(i), Some(j)) => canonical_interleaving(&i, &j, eps, w, field)?,
        (Some(i), None) => Interleaving::zero(module(&i)?, zero(), lam)?,
        (None, Some(j)) => Interleaving::zero(zero(), module(&j)?, lam)?,
        (None, None) => return Err(ZedError::Decomposition { index: 0, violation: SummandViolation::Empty }),
    })
}

/// A concrete representation of [`shoelace_window`] with its summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub shoelace: ShoelaceProset,
    pub sum: DirectSum,
}

/// Packs every summand's interleaving onto the windowed shoelace and checks
/// that it is the thin module on the summand's support.
pub fn expand_decomposed(l: &DecomposedShoelaceRep) -> Result<Expansion, ZedError> {
    l.validate()?;
    let sh = shoelace_window(&l.window, l.epsilon);
    let mut parts = Vec::with_capacity(l.summands.len());
    for (index, s) in l.summands.iter().enumerate() {
        let x = summand_interleaving(s, &l.window, l.epsilon, l.field)?;
        let packed = pack_onto(&x, &sh)?;
        let expected = Representation::thin(sh.carrier().clone(), l.field, &l.support(index));
        if *packed.rep != expected {
            return Err(ZedError::ExpansionMismatch { index });
        }
        parts.push(expected);
    }
    let refs: Vec<&Representation> = parts.iter().collect();
    let sum = direct_sum(sh.carrier(), l.field, &refs)?;
    Ok(Expansion { shoelace: sh, sum })
}

/// The interleaving of `L` between the canonical interval sums of its two
/// barcodes (bars in canonical order), over the clamped shift.
pub fn decomposed_interleaving(l: &DecomposedShoelaceRep) -> Result<Interleaving, ZedError> {
    l.validate()?;
    let (w, eps, field) = (l.window, l.epsilon, l.field);
    let parts = l.summands.iter().map(|s| summand_interleaving(s, &w, eps, field)).collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Interleaving> = parts.iter().collect();
    let lam = lambda_eps(&w, eps);
    let x = direct_sum_interleavings(&lam, field, &refs)?;
    let lefts: Vec<Interval> = l.summands.iter().filter_map(|s| s.left).collect();
    let rights: Vec<Interval> = l.summands.iter().filter_map(|s| s.right).collect();
    let alpha = reorder_iso(x.m(), &lefts, &w, field)?;
    let beta = reorder_iso(x.n(), &rights, &w, field)?;
    Ok(transport(&x, &alpha, &beta)?)
}

/// The permutation isomorphism from a sum of intervals in the given order to
/// the sum of the same intervals in canonical order.
fn reorder_iso(from: &Arc<Representation>, order: &[Interval], w: &Window, field: FieldSpec) -> Result<NatTrans, ZedError> {
    let mut rank: Vec<usize> = (0..order.len()).collect();
    rank.sort_by(|&a, &b| order[a].cmp(&order[b]).then(a.cmp(&b)));
    // position[p] = place of order[p] in the sorted list
    let mut position = vec![0; order.len()];
    for (q, &p) in rank.iter().enumerate() {
        position[p] = q;
    }
    let mut sorted = order.to_vec();
    sorted.sort();
    let to = Arc::new(interval_sum(&sorted, w, field)?.rep);
    let components = w
        .points()
        .enumerate()
        .map(|(k, x)| {
            let mut m = Matrix::zeros(field, to.dim(k), from.dim(k));
            let active_from: Vec<usize> = (0..order.len()).filter(|&p| order[p].contains(x)).collect();
            let active_to: Vec<usize> = (0..sorted.len()).filter(|&q| sorted[q].contains(x)).collect();
            for (col, &p) in active_from.iter().enumerate() {
                let row = active_to.iter().position(|&q| q == position[p]).expect("same intervals");
                m.set(row, col, 1);
            }
            m
        })
        .collect();
    let iso = NatTrans::from_raw(from.clone(), to, components);
    iso.validate()?;
    Ok(iso)
}

struct MatchSearch<'a> {
    src: Vec<Interval>,
    tgt: Vec<Interval>,
    eps: u64,
    essential: bool,
    used: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    visit: &'a mut dyn FnMut(&[(usize, usize)]) -> bool,
}

impl MatchSearch<'_> {
    fn admissible(&self, i: &Interval, j: &Interval) -> bool {
        close_enough(i, j, self.eps)
            && (!self.essential || !(i.is_short(self.eps) && j.is_short(self.eps)) || condition_star(i, j, self.eps))
    }

    /// Returns `false` once the visitor asks to stop.
    fn run(&mut self, k: usize) -> bool {
        let long_left = (0..self.tgt.len()).filter(|&t| !self.used[t] && !self.tgt[t].is_short(self.eps)).count();
        if long_left > self.src.len() - k {
            return true;
        }
        if k == self.src.len() {
            return (self.visit)(&self.pairs);
        }
        let s = self.src[k];
        let mut tried: Vec<Interval> = Vec::new();
        for t in 0..self.tgt.len() {
            let j = self.tgt[t];
            if self.used[t] || tried.contains(&j) || !self.admissible(&s, &j) {
                continue;
            }
            tried.push(j);
            self.used[t] = true;
            self.pairs.push((k, t));
            let go_on = self.run(k + 1);
            self.pairs.pop();
            self.used[t] = false;
            if !go_on {
                return false;
            }
        }
        if s.is_short(self.eps) {
            return self.run(k + 1);
        }
        true
    }
}

fn search_matchings(bm: &Barcode, bn: &Barcode, eps: u64, essential: bool, visit: &mut dyn FnMut(&[(usize, usize)]) -> bool) {
    let tgt = bn.instances();
    let mut search = MatchSearch {
        src: bm.instances(),
        used: vec![false; tgt.len()],
        tgt,
        eps,
        essential,
        pairs: Vec::new(),
        visit,
    };
    search.run(0);
}

/// The first ε-matching (essential if requested) found by backtracking in
/// canonical order, trying matches before leaving a bar unmatched.
pub fn find_matching(bm: &Barcode, bn: &Barcode, eps: u64, require_essential: bool) -> Option<Matching> {
    let mut found = None;
    search_matchings(bm, bn, eps, require_essential, &mut |pairs| {
        found = Some(pairs.to_vec());
        false
    });
    found.map(|pairs| Matching::new(bm.clone(), bn.clone(), eps, pairs).expect("search yields a partial bijection"))
}

/// Up to `limit` distinct ε-matchings, in search order.
pub fn enumerate_matchings(bm: &Barcode, bn: &Barcode, eps: u64, require_essential: bool, limit: usize) -> Vec<Matching> {
    let mut out: Vec<Matching> = Vec::new();
    if limit == 0 {
        return out;
    }
    search_matchings(bm, bn, eps, require_essential, &mut |pairs| {
        let m = Matching::new(bm.clone(), bn.clone(), eps, pairs.to_vec()).expect("search yields a partial bijection");
        if !out.contains(&m) {
            out.push(m);
        }
        out.len() < limit
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: ExtendedInt = ExtendedInt::PosInf;
    const NINF: ExtendedInt = ExtendedInt::NegInf;

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::closed(lo, hi)
    }

    fn f2() -> FieldSpec {
        FieldSpec::default()
    }

    fn w(lo: i64, hi: i64) -> Window {
        Window::new(lo, hi).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(endpoint_distance(INF, INF), Distance::Finite(0));
        assert_eq!(endpoint_distance(INF, 5.into()), Distance::Infinite);
        assert_eq!(endpoint_distance(NINF, INF), Distance::Infinite);
        assert_eq!(endpoint_distance(3.into(), 7.into()), Distance::Finite(4));
    }

    #[test]
    fn interval_rules() {
        assert!(Interval::new(2.into(), 1.into()).is_err());
        assert!(Interval::new(INF, INF).is_err());
        assert!(Interval::new(NINF, NINF).is_err());
        assert!(Interval::new(NINF, INF).is_ok());
        assert!(iv(0, 1) < iv(0, 2));
        assert!(Interval::new(NINF, 0.into()).unwrap() < iv(-5, -5));
        assert_eq!(Interval::new(1.into(), INF).unwrap().to_string(), "[1,+inf)");
    }

    #[test]
    fn lambda_on_windows() {
        assert!(lambda_eps(&w(0, 5), 0).is_identity());
        assert_eq!(lambda_eps(&w(0, 5), 2).map(), &[2, 3, 4, 5, 5, 5]);
        let win = w(0, 5);
        let (_, h) = window_chain(&win);
        let th = crate::proset::translation_height_over(&lambda_eps(&win, 2), &h, 0..4);
        assert_eq!(th.epsilon(), Some(2.into()));
    }

    #[test]
    fn window_shoelaces() {
        let sh = shoelace_window(&w(0, 1), 0);
        assert_eq!(sh.carrier().iso_pairs(), vec![(0, 2), (1, 3)]);
        let sh = shoelace_window(&w(0, 3), 2);
        let cross: Vec<(usize, usize)> = sh.carrier().related_pairs().filter(|&(a, b)| a < 4 && b >= 4).collect();
        assert_eq!(cross, vec![(0, 6), (0, 7), (1, 7)]);
        let back: Vec<(usize, usize)> = sh.carrier().related_pairs().filter(|&(a, b)| a >= 4 && b < 4).collect();
        assert_eq!(back, vec![(4, 2), (4, 3), (5, 3)]);
        assert_eq!(sh.carrier().validate(), Ok(()));
    }

    #[test]
    fn interval_modules() {
        assert_eq!(interval_to_module(&iv(1, 2), &w(0, 3), f2()).unwrap().dims(), &[0, 1, 1, 0]);
        let full = Interval::new(NINF, INF).unwrap();
        assert_eq!(interval_to_module(&full, &w(0, 3), f2()).unwrap().dims(), &[1, 1, 1, 1]);
        assert!(matches!(interval_to_module(&iv(5, 9), &w(0, 3), f2()), Err(ZedError::OutsideWindow { .. })));
        assert!(matches!(interval_to_module(&iv(2, 9), &w(0, 3), f2()), Err(ZedError::LossyClamp { .. })));
    }

    #[test]
    fn barcode_examples() {
        let win = w(0, 3);
        let m = WindowModule::new(win, Arc::new(interval_to_module(&iv(0, 3), &win, f2()).unwrap())).unwrap();
        assert_eq!(barcode(&m, Boundary::Finite), Barcode::from_intervals([iv(0, 3)]));
        assert_eq!(barcode(&m, Boundary::Infinite), Barcode::from_intervals([Interval::new(NINF, INF).unwrap()]));

        let win = w(0, 2);
        let (p, _) = window_chain(&win);
        let up = Matrix::from_rows(f2(), &[&[1], &[0]]);
        let down = Matrix::from_rows(f2(), &[&[0, 1]]);
        let rep = Representation::from_fn(p, f2(), vec![1, 2, 1], |i, j| match (i, j) {
            (0, 1) => up.clone(),
            (1, 2) => down.clone(),
            (0, 2) => down.mul(&up).unwrap(),
            (i, _) => Matrix::identity(f2(), [1, 2, 1][i]),
        });
        let m = WindowModule::new(win, Arc::new(rep)).unwrap();
        assert_eq!(barcode(&m, Boundary::Finite), Barcode::from_intervals([iv(0, 1), iv(1, 2)]));
    }

    #[test]
    fn matching_examples() {
        let ray = |lo: i64| Interval::new(lo.into(), INF).unwrap();
        let s = Matching::from_interval_pairs(
            Barcode::from_intervals([ray(1)]),
            Barcode::from_intervals([ray(0)]),
            1,
            &[(ray(1), ray(0))],
        )
        .unwrap();
        assert!(validate_matching(&s).is_empty());
        let s = Matching::from_interval_pairs(
            Barcode::from_intervals([iv(1, 10000)]),
            Barcode::from_intervals([ray(0)]),
            1,
            &[(iv(1, 10000), ray(0))],
        )
        .unwrap();
        assert_eq!(
            validate_matching(&s),
            vec![MatchingViolation::TooFar { source: iv(1, 10000), target: ray(0) }]
        );
        // at ε = 0 nothing may stay unmatched
        let s = Matching::new(Barcode::from_intervals([iv(0, 0)]), Barcode::new(), 0, vec![]).unwrap();
        assert_eq!(validate_matching(&s).len(), 1);
        // an unmatched ray is a shortness violation
        let s = Matching::new(Barcode::from_intervals([ray(0)]), Barcode::new(), 3, vec![]).unwrap();
        assert_eq!(
            validate_matching(&s),
            vec![MatchingViolation::UnmatchedLong { side: MatchSide::Source, interval: ray(0) }]
        );
    }

    #[test]
    fn matching_equality_ignores_instance_labels() {
        let b = Barcode::from_intervals([iv(0, 1), iv(0, 1)]);
        let a = Matching::new(b.clone(), b.clone(), 0, vec![(0, 1), (1, 0)]).unwrap();
        let c = Matching::new(b.clone(), b.clone(), 0, vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(a, c);
        assert!(Matching::new(b.clone(), b.clone(), 0, vec![(0, 0), (1, 0)]).is_err());
        assert!(Matching::new(b.clone(), b, 0, vec![(2, 0)]).is_err());
    }

    #[test]
    fn star_examples() {
        assert!(condition_star(&iv(0, 1), &iv(1, 2), 1));
        assert!(!condition_star(&iv(0, 0), &iv(2, 2), 1));
        assert!(condition_star(&iv(3, 5), &iv(3, 5), 0));
    }

    #[test]
    fn essential_examples() {
        let one = |i: Interval, j: Interval, eps| {
            Matching::from_interval_pairs(Barcode::from_intervals([i]), Barcode::from_intervals([j]), eps, &[(i, j)]).unwrap()
        };
        assert_eq!(is_essential(&one(iv(0, 2), iv(1, 3), 1)).unwrap(), vec![]);
        assert_eq!(is_essential(&one(iv(0, 0), iv(1, 1), 1)).unwrap(), vec![]);
        assert_eq!(is_essential(&one(iv(0, 0), iv(1, 1), 2)).unwrap(), vec![(iv(0, 0), iv(1, 1))]);
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_dimension(&iv(1, 3), &iv(0, 2), &w(0, 4), f2()).unwrap(), 1);
        assert_eq!(hom_dimension(&iv(0, 1), &iv(2, 3), &w(0, 3), f2()).unwrap(), 0);
        assert_eq!(hom_dimension(&iv(1, 2), &iv(1, 2), &w(0, 4), f2()).unwrap(), 1);
    }

    #[test]
    fn canonical_pairs() {
        let win = w(-1, 3);
        let (f, g) = canonical_pair(&iv(0, 1), &iv(1, 2), 1, &win, f2()).unwrap();
        let nonzero: Vec<i64> = win.points().filter(|&x| !f.component(win.index(x)).is_zero()).collect();
        assert_eq!(nonzero, vec![0, 1]);
        assert!(g.is_zero());

        let win = w(-1, 4);
        let x = canonical_interleaving(&iv(0, 2), &iv(1, 3), 1, &win, f2()).unwrap();
        let on = |t: &NatTrans| -> Vec<i64> { win.points().filter(|&x| !t.component(win.index(x)).is_zero()).collect() };
        assert_eq!(on(x.phi()), vec![0, 1, 2]);
        assert_eq!(on(x.psi()), vec![1]);

        let (f, g) = canonical_pair(&iv(1, 2), &iv(1, 2), 0, &w(0, 3), f2()).unwrap();
        assert_eq!(f, NatTrans::identity(f.source().clone()));
        assert_eq!(g, NatTrans::identity(g.source().clone()));
    }

    #[test]
    fn matching_to_rep_examples() {
        let s = Matching::from_interval_pairs(
            Barcode::from_intervals([iv(0, 2), iv(5, 5)]),
            Barcode::from_intervals([iv(1, 3)]),
            1,
            &[(iv(0, 2), iv(1, 3))],
        )
        .unwrap();
        let l = matching_to_rep(&s, &w(-2, 7), Variant::Essential, f2()).unwrap();
        assert_eq!(l.summands(), &[Summand::pair(iv(0, 2), iv(1, 3)), Summand::left(iv(5, 5))]);
        assert_eq!(rep_to_matching(&l).unwrap(), s);
        assert!(matches!(
            matching_to_rep(&s, &w(-1, 7), Variant::Essential, f2()),
            Err(ZedError::WindowTooSmall { .. })
        ));

        let empty = Matching::new(Barcode::new(), Barcode::new(), 1, vec![]).unwrap();
        assert!(matching_to_rep(&empty, &w(0, 0), Variant::Essential, f2()).unwrap().summands().is_empty());

        let bad = Matching::from_interval_pairs(
            Barcode::from_intervals([iv(0, 0)]),
            Barcode::from_intervals([iv(1, 1)]),
            2,
            &[(iv(0, 0), iv(1, 1))],
        )
        .unwrap();
        assert!(matches!(matching_to_rep(&bad, &w(-4, 5), Variant::Essential, f2()), Err(ZedError::NotEssential(_))));
        let split = matching_to_rep(&bad, &w(-4, 5), Variant::NonEssential, f2()).unwrap();
        assert_eq!(split.summands(), &[Summand::right(iv(1, 1)), Summand::left(iv(0, 0))]);
        let back = rep_to_matching(&split).unwrap();
        assert_ne!(back, bad);
        assert!(back.matched().is_empty());
    }

    #[test]
    fn invariant_checker() {
        let win = w(-4, 12);
        let ok = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand::pair(iv(0, 6), iv(1, 5))]);
        assert!(ok.is_ok());
        let far = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand::pair(iv(0, 5), iv(3, 5))]);
        assert!(matches!(far, Err(ZedError::Decomposition { violation: SummandViolation::NotConvex(_), .. })));
        let apart = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand::pair(iv(0, 0), iv(6, 6))]);
        assert!(apart.is_err());
        let long = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand::left(iv(0, 2))]);
        assert!(matches!(long, Err(ZedError::Decomposition { violation: SummandViolation::NotShort(_), .. })));
        let empty = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand { left: None, right: None }]);
        assert!(matches!(empty, Err(ZedError::Decomposition { violation: SummandViolation::Empty, .. })));
    }

    #[test]
    fn expansions() {
        let win = w(-2, 5);
        let l = DecomposedShoelaceRep::new(win, 1, f2(), vec![Summand::pair(iv(0, 2), iv(1, 3))]).unwrap();
        let e = expand_decomposed(&l).unwrap();
        assert_eq!(e.sum.rep.proset().len(), 16);
        assert!(e.sum.rep.dims().iter().all(|&d| d <= 1));
        let left = crate::rep::restrict(&e.shoelace, &e.sum.rep, crate::rep::Side::Left).unwrap();
        let wm = WindowModule::new(win, Arc::new(left)).unwrap();
        assert_eq!(barcode(&wm, Boundary::Finite), Barcode::from_intervals([iv(0, 2)]));
        let right = crate::rep::restrict(&e.shoelace, &e.sum.rep, crate::rep::Side::Right).unwrap();
        let wm = WindowModule::new(win, Arc::new(right)).unwrap();
        assert_eq!(barcode(&wm, Boundary::Finite), Barcode::from_intervals([iv(1, 3)]));

        let l = DecomposedShoelaceRep::new(w(3, 7), 1, f2(), vec![Summand::left(iv(5, 5))]).unwrap();
        assert!(expand_decomposed(&l).is_ok());
        let l = DecomposedShoelaceRep::new(w(-2, 8), 1, f2(), vec![Summand::pair(iv(0, 6), iv(1, 5))]).unwrap();
        assert!(expand_decomposed(&l).is_ok());
    }

    #[test]
    fn decomposed_interleavings_use_canonical_bases() {
        let win = w(-2, 9);
        let l = DecomposedShoelaceRep::new(
            win,
            1,
            f2(),
            vec![Summand::pair(iv(4, 7), iv(3, 6)), Summand::pair(iv(0, 2), iv(1, 3)), Summand::right(iv(5, 5))],
        )
        .unwrap();
        let x = decomposed_interleaving(&l).unwrap();
        let m = interval_sum(&[iv(0, 2), iv(4, 7)], &win, f2()).unwrap().rep;
        let n = interval_sum(&[iv(1, 3), iv(3, 6), iv(5, 5)], &win, f2()).unwrap().rep;
        assert_eq!(**x.m(), m);
        assert_eq!(**x.n(), n);
    }

    #[test]
    fn find_matching_examples() {
        let b = Barcode::from_intervals([iv(0, 1), iv(2, 5)]);
        let m = find_matching(&b, &b, 0, false).unwrap();
        assert_eq!(m.matched(), vec![(iv(0, 1), iv(0, 1)), (iv(2, 5), iv(2, 5))]);
        let m = find_matching(&Barcode::from_intervals([iv(0, 2)]), &Barcode::from_intervals([iv(1, 3)]), 1, false).unwrap();
        assert_eq!(m.matched(), vec![(iv(0, 2), iv(1, 3))]);
        for eps in 0..4 {
            assert!(find_matching(&Barcode::from_intervals([iv(0, 9)]), &Barcode::new(), eps, false).is_none());
        }
        let ms = enumerate_matchings(&Barcode::from_intervals([iv(0, 0)]), &Barcode::from_intervals([iv(1, 1)]), 1, false, 10);
        assert_eq!(ms.len(), 2);
    }
}
