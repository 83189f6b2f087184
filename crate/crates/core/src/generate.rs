//! Seeded random constructions used by the self-test suites and test code.
//!
//! Every generator draws only from the caller's RNG, so a fixed seed
//! reproduces the same objects.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{FieldSpec, Matrix};
use crate::interleave::{direct_sum_interleavings, transport, Interleaving, InterleavingMorphism};
use crate::proset::{Proset, Translation};
use crate::rep::{change_basis, direct_sum, NatTrans, Representation};
use crate::zed::{
    condition_star, endpoint_distance, is_essential, validate_matching, Barcode, Distance, ExtendedInt, Interval,
    Matching,
};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Transitive closure of a random relation on `n` points.
pub fn random_proset(rng: &mut Rng64, n: usize) -> Proset {
    let density = rng.gen_range(0.05..0.45);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let chosen: Vec<(usize, usize)> = pairs.into_iter().filter(|_| rng.gen_bool(density / 2.0)).collect();
    Proset::closure_of(n, chosen)
}

/// A random translation, found by randomised backtracking. The identity is
/// always a solution, so the search terminates.
pub fn random_translation(rng: &mut Rng64, p: &Arc<Proset>) -> Translation {
    let n = p.len();
    let mut map = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    assert!(assign(rng, p, &order, 0, &mut map), "identity is always available");
    Translation::from_raw(p.clone(), map)
}

fn assign(rng: &mut Rng64, p: &Proset, order: &[usize], k: usize, map: &mut [usize]) -> bool {
    let Some(&x) = order.get(k) else { return true };
    let mut candidates: Vec<usize> = (0..p.len()).filter(|&y| p.leq(x, y)).collect();
    candidates.shuffle(rng);
    for y in candidates {
        let fits = order[..k].iter().all(|&z| {
            let tz = map[z];
            (!p.leq(z, x) || p.leq(tz, y)) && (!p.leq(x, z) || p.leq(y, tz))
        });
        if fits {
            map[x] = y;
            if assign(rng, p, order, k + 1, map) {
                return true;
            }
        }
    }
    map[x] = usize::MAX;
    false
}

/// A random convex subset `U ∩ D` of `p`, with `U` an up-closure and `D` a
/// down-closure of random seeds. May be empty.
pub fn random_convex(rng: &mut Rng64, p: &Proset) -> Vec<bool> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let lo = rng.gen_range(0..n);
    let hi = rng.gen_range(0..n);
    let extra_lo = rng.gen_bool(0.3).then(|| rng.gen_range(0..n));
    let extra_hi = rng.gen_bool(0.3).then(|| rng.gen_range(0..n));
    (0..n)
        .map(|z| {
            let up = p.leq(lo, z) || extra_lo.is_some_and(|e| p.leq(e, z));
            let down = p.leq(z, hi) || extra_hi.is_some_and(|e| p.leq(z, e));
            up && down
        })
        .collect()
}

/// A random square matrix of full rank.
pub fn random_invertible(rng: &mut Rng64, field: FieldSpec, n: usize) -> Matrix {
    loop {
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..field.prime() as i64)).collect();
        let m = Matrix::from_entries(field, n, n, &entries).expect("square");
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_matrix(rng: &mut Rng64, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(0..field.prime() as i64)).collect();
    Matrix::from_entries(field, rows, cols, &entries).expect("shape")
}

/// Random invertible matrices matching the dimensions of `m`.
pub fn random_basis(rng: &mut Rng64, m: &Representation) -> Vec<Matrix> {
    m.dims().iter().map(|&d| random_invertible(rng, m.field(), d)).collect()
}

/// A sum of thin modules on random convex sets, each point of dimension at
/// most `max_dim`. Returned in the sum basis.
pub fn random_thin_sum(rng: &mut Rng64, p: &Arc<Proset>, field: FieldSpec, max_dim: usize) -> Representation {
    let mut dims = vec![0; p.len()];
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(0..=max_dim + 1) {
        let support = random_convex(rng, p);
        if support.iter().zip(&dims).any(|(&s, &d)| s && d >= max_dim) {
            continue;
        }
        for (d, &s) in dims.iter_mut().zip(&support) {
            *d += s as usize;
        }
        parts.push(Representation::thin(p.clone(), field, &support));
    }
    let refs: Vec<&Representation> = parts.iter().collect();
    direct_sum(p, field, &refs).expect("compatible summands").rep
}

/// [`random_thin_sum`] after a random change of basis.
pub fn random_representation(rng: &mut Rng64, p: &Arc<Proset>, field: FieldSpec, max_dim: usize) -> Arc<Representation> {
    let m = Arc::new(random_thin_sum(rng, p, field, max_dim));
    let basis = random_basis(rng, &m);
    change_basis(&m, &basis).expect("invertible basis").0
}

/// A thin module whose double unit `M(i <= Λ²i)` vanishes, so `(M, 0, 0, 0)`
/// is an interleaving. Falls back to the zero module.
pub fn random_short_thin(rng: &mut Rng64, lam: &Translation, field: FieldSpec) -> Representation {
    let p = lam.base();
    for _ in 0..8 {
        let support = random_convex(rng, p);
        let short = (0..p.len()).all(|i| !support[i] || !support[lam.apply(lam.apply(i))]);
        if short {
            return Representation::thin(p.clone(), field, &support);
        }
    }
    Representation::zero(p.clone(), field)
}

/// A random Λ-interleaving with pointwise dimensions at most `max_dim`.
///
/// Built as the direct sum of an isomorphism-type interleaving
/// `(M, M^α, α_Λ M(i<=Λi), M(i<=Λi) α⁻¹)` with short one-sided pieces, then
/// moved by random bases on both sides.
pub fn random_interleaving(rng: &mut Rng64, lam: &Translation, field: FieldSpec, max_dim: usize) -> Interleaving {
    let p = lam.base().clone();
    let core_dim = rng.gen_range(0..=max_dim);
    let m = Arc::new(random_thin_sum(rng, &p, field, core_dim));
    let alpha = random_basis(rng, &m);
    let (n, _) = change_basis(&m, &alpha).expect("invertible basis");
    let inverses: Vec<Matrix> = alpha.iter().map(|a| a.inverse().expect("invertible")).collect();
    let phi = (0..p.len()).map(|i| alpha[lam.apply(i)].mul(m.map(i, lam.apply(i))).expect("shapes")).collect();
    let psi = (0..p.len()).map(|i| m.map(i, lam.apply(i)).mul(&inverses[i]).expect("shapes")).collect();
    let core = Interleaving::from_components(m, n, lam.clone(), phi, psi).expect("iso-type interleaving");

    let mut parts = vec![core];
    let zero = Arc::new(Representation::zero(p.clone(), field));
    let spare = max_dim - core_dim;
    for _ in 0..spare {
        let s = Arc::new(random_short_thin(rng, lam, field));
        let piece = if rng.gen_bool(0.5) {
            Interleaving::zero(s, zero.clone(), lam.clone())
        } else {
            Interleaving::zero(zero.clone(), s, lam.clone())
        };
        parts.push(piece.expect("short thin module"));
    }
    parts.shuffle(rng);
    let refs: Vec<&Interleaving> = parts.iter().collect();
    let sum = direct_sum_interleavings(lam, field, &refs).expect("common translation");
    scramble_interleaving(rng, &sum).1
}

/// Moves `x` along random bases, returning the morphism `x -> x'` and `x'`.
pub fn scramble_interleaving(rng: &mut Rng64, x: &Interleaving) -> (InterleavingMorphism, Interleaving) {
    let (_, alpha) = change_basis(x.m(), &random_basis(rng, x.m())).expect("invertible basis");
    let (_, beta) = change_basis(x.n(), &random_basis(rng, x.n())).expect("invertible basis");
    let y = transport(x, &alpha, &beta).expect("isomorphisms");
    let g = InterleavingMorphism::from_raw(x.clone(), y.clone(), alpha, beta);
    (g, y)
}

/// A random morphism out of `x`: a basis change, possibly rescaled, or zero.
pub fn random_morphism(rng: &mut Rng64, x: &Interleaving) -> InterleavingMorphism {
    match rng.gen_range(0..4) {
        0 => InterleavingMorphism::zero(x, x),
        1 => InterleavingMorphism::identity(x),
        _ => {
            let (g, y) = scramble_interleaving(rng, x);
            let c = rng.gen_range(0..x.m().field().prime() as i64);
            InterleavingMorphism::from_raw(x.clone(), y, g.gm().scale(c), g.gn().scale(c))
        }
    }
}

/// A random invertible element of `Hom(m, m)`, sampled from the solver
/// basis. Falls back to the identity.
pub fn random_automorphism(rng: &mut Rng64, m: &Arc<Representation>) -> NatTrans {
    let basis = crate::rep::hom_space(m, m).expect("same module");
    let field = m.field();
    for _ in 0..32 {
        let mut comps: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(field, d, d)).collect();
        for b in &basis {
            let c = rng.gen_range(0..field.prime() as i64);
            for (acc, part) in comps.iter_mut().zip(b.components()) {
                *acc = acc.add(&part.scale(c)).expect("shapes");
            }
        }
        let t = NatTrans::from_raw(m.clone(), m.clone(), comps);
        if t.inverse().is_ok() {
            return t;
        }
    }
    NatTrans::identity(m.clone())
}

fn random_endpoint_pair(rng: &mut Rng64, span: i64, max_len: i64) -> Interval {
    let lo = rng.gen_range(0..=span);
    let hi = lo + rng.gen_range(0..=max_len);
    Interval::closed(lo, hi)
}

/// A random interval within `[0, span]`, occasionally a ray.
pub fn random_interval(rng: &mut Rng64, span: i64, allow_infinite: bool) -> Interval {
    let base = random_endpoint_pair(rng, span, span / 2 + 1);
    if allow_infinite && rng.gen_bool(0.15) {
        let (lo, hi) = (base.lo(), base.hi());
        return match rng.gen_range(0..3) {
            0 => Interval::new(ExtendedInt::NegInf, hi),
            1 => Interval::new(lo, ExtendedInt::PosInf),
            _ => Interval::new(ExtendedInt::NegInf, ExtendedInt::PosInf),
        }
        .expect("well formed");
    }
    base
}

fn perturb(rng: &mut Rng64, e: ExtendedInt, eps: u64) -> ExtendedInt {
    match e {
        ExtendedInt::Finite(v) => ExtendedInt::Finite(v + rng.gen_range(-(eps as i64)..=eps as i64)),
        other => other,
    }
}

/// A random interval within `ε` of `i` at both ends.
pub fn random_neighbour(rng: &mut Rng64, i: &Interval, eps: u64) -> Interval {
    loop {
        if let Ok(j) = Interval::new(perturb(rng, i.lo(), eps), perturb(rng, i.hi(), eps)) {
            return j;
        }
    }
}

/// A random short interval (length `< 2ε`) within `[0, span]`; needs `ε > 0`.
pub fn random_short(rng: &mut Rng64, span: i64, eps: u64) -> Interval {
    random_endpoint_pair(rng, span, 2 * eps as i64 - 1)
}

/// A random essential ε-matching with at most `bars` matched pairs.
pub fn random_essential_matching(rng: &mut Rng64, eps: u64, bars: usize, span: i64, allow_infinite: bool) -> Matching {
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut pairs = Vec::new();
    for _ in 0..rng.gen_range(0..=bars) {
        let i = random_interval(rng, span, allow_infinite);
        let j = random_neighbour(rng, &i, eps);
        src.push(i);
        tgt.push(j);
        let short = i.is_short(eps) && j.is_short(eps);
        if (!short || condition_star(&i, &j, eps))
            && !(short && rng.gen_bool(0.2)) {
                pairs.push((i, j));
            }
    }
    if eps > 0 {
        for _ in 0..rng.gen_range(0..=2) {
            let k = random_short(rng, span, eps);
            if rng.gen_bool(0.5) {
                src.push(k);
            } else {
                tgt.push(k);
            }
        }
    }
    let m = Matching::from_interval_pairs(src.into_iter().collect(), tgt.into_iter().collect(), eps, &pairs)
        .expect("pairs drawn from the barcodes");
    debug_assert!(validate_matching(&m).is_empty());
    debug_assert_eq!(is_essential(&m).map(|v| v.is_empty()), Ok(true));
    m
}

/// Whether both endpoint distances are within `ε`.
pub fn endpoints_within(i: &Interval, j: &Interval, eps: u64) -> bool {
    endpoint_distance(i.lo(), j.lo()) <= Distance::Finite(eps) && endpoint_distance(i.hi(), j.hi()) <= Distance::Finite(eps)
}

/// Random barcode on `[0, span]` with finite bars only.
pub fn random_barcode(rng: &mut Rng64, bars: usize, span: i64) -> Barcode {
    (0..rng.gen_range(0..=bars)).map(|_| random_interval(rng, span, false)).collect()
}
