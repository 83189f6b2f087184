//! Λ-interleavings and their morphisms, the equivalence with representations
//! of the shoelace, and interleavings between interleavings.
//!
//! [`pack`] and [`unpack`] realise the two mutually inverse functors between
//! interleavings over `Λ` and representations of `Σ_Λ P`. Their outputs are
//! always re-validated, so each call doubles as a check of the functor laws
//! on that instance.

use std::sync::Arc;

use thiserror::Error;

use crate::exactlin::Matrix;
use crate::proset::{shoelace, CrossRule, ProsetError, ShoelaceProset, Translation};
use crate::rep::{
    direct_sum, direct_sum_nat, post_whisker, precompose, restrict, restrict_nat, unit_whisker, NatTrans,
    RepError, Representation, Side,
};

/// Which of the two modules of an interleaving a check concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    M,
    N,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterleaveError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Proset(#[from] ProsetError),
    #[error("{0} has the wrong source or target")]
    Endpoint(&'static str),
    #[error("triangle identity for {leg:?} fails at element {at}")]
    Triangle { leg: Leg, at: usize },
    #[error("morphism square for {leg:?} fails at element {at}")]
    Square { leg: Leg, at: usize },
    #[error("interleavings are over different translations")]
    TranslationsDiffer,
    #[error("interleavings do not share the same pair of modules")]
    EndpointsDiffer,
    #[error("new translation does not dominate the old one at element {0}")]
    NotDominated(usize),
    #[error("shoelace does not match the interleaving's proset and translation")]
    ShoelaceMismatch,
}

/// A quadruple `(M, N, φ, ψ)` with `φ : M -> NΛ` and `ψ : N -> MΛ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interleaving {
    m: Arc<Representation>,
    n: Arc<Representation>,
    lam: Translation,
    phi: NatTrans,
    psi: NatTrans,
}

impl Interleaving {
    pub fn from_raw(
        m: Arc<Representation>,
        n: Arc<Representation>,
        lam: Translation,
        phi: NatTrans,
        psi: NatTrans,
    ) -> Self {
        Interleaving { m, n, lam, phi, psi }
    }

    pub fn new(
        m: Arc<Representation>,
        n: Arc<Representation>,
        lam: Translation,
        phi: NatTrans,
        psi: NatTrans,
    ) -> Result<Self, InterleaveError> {
        let x = Interleaving::from_raw(m, n, lam, phi, psi);
        x.validate()?;
        Ok(x)
    }

    /// Builds `φ`, `ψ` from bare components, computing the translated targets.
    pub fn from_components(
        m: Arc<Representation>,
        n: Arc<Representation>,
        lam: Translation,
        phi: Vec<Matrix>,
        psi: Vec<Matrix>,
    ) -> Result<Self, InterleaveError> {
        let n_lam = Arc::new(precompose(&n, &lam)?);
        let m_lam = Arc::new(precompose(&m, &lam)?);
        let phi = NatTrans::from_raw(m.clone(), n_lam, phi);
        let psi = NatTrans::from_raw(n.clone(), m_lam, psi);
        Interleaving::new(m, n, lam, phi, psi)
    }

    /// The interleaving with zero morphisms. Valid only when both double
    /// units vanish.
    pub fn zero(m: Arc<Representation>, n: Arc<Representation>, lam: Translation) -> Result<Self, InterleaveError> {
        let n_lam = Arc::new(precompose(&n, &lam)?);
        let m_lam = Arc::new(precompose(&m, &lam)?);
        let phi = NatTrans::zero(m.clone(), n_lam);
        let psi = NatTrans::zero(n.clone(), m_lam);
        Interleaving::new(m, n, lam, phi, psi)
    }

    /// `(M, M, Mη_Λ, Mη_Λ)`.
    pub fn diagonal(m: Arc<Representation>, lam: Translation) -> Result<Self, InterleaveError> {
        let u = unit_whisker(&m, &lam)?;
        Interleaving::new(m.clone(), m, lam, u.clone(), u)
    }

    pub fn m(&self) -> &Arc<Representation> {
        &self.m
    }

    pub fn n(&self) -> &Arc<Representation> {
        &self.n
    }

    pub fn lam(&self) -> &Translation {
        &self.lam
    }

    pub fn phi(&self) -> &NatTrans {
        &self.phi
    }

    pub fn psi(&self) -> &NatTrans {
        &self.psi
    }

    pub fn is_trivial(&self) -> bool {
        self.phi.is_zero() && self.psi.is_zero()
    }

    /// `(c φ, d ψ)`; an interleaving again when `c d = 1`.
    pub fn rescaled(&self, c: i64, d: i64) -> Interleaving {
        Interleaving { phi: self.phi.scale(c), psi: self.psi.scale(d), ..self.clone() }
    }

    pub fn validate(&self) -> Result<(), InterleaveError> {
        self.m.validate()?;
        self.n.validate()?;
        if self.m.proset() != self.n.proset() {
            return Err(RepError::ProsetMismatch.into());
        }
        if self.m.field() != self.n.field() {
            return Err(RepError::FieldMismatch.into());
        }
        if self.lam.base() != self.m.proset() {
            return Err(RepError::ProsetMismatch.into());
        }
        self.lam.validate().map_err(ProsetError::from)?;
        let n_lam = precompose(&self.n, &self.lam)?;
        let m_lam = precompose(&self.m, &self.lam)?;
        if self.phi.source() != &self.m || self.phi.target().as_ref() != &n_lam {
            return Err(InterleaveError::Endpoint("phi"));
        }
        if self.psi.source() != &self.n || self.psi.target().as_ref() != &m_lam {
            return Err(InterleaveError::Endpoint("psi"));
        }
        self.phi.validate()?;
        self.psi.validate()?;
        let lam2 = self.lam.compose(&self.lam)?;
        for (leg, first, second, module) in [
            (Leg::M, &self.phi, &self.psi, &self.m),
            (Leg::N, &self.psi, &self.phi, &self.n),
        ] {
            let round = post_whisker(second, &self.lam)?.compose(first)?;
            let unit = unit_whisker(module, &lam2)?;
            if let Some(at) = (0..round.components().len()).find(|&i| round.component(i) != unit.component(i)) {
                return Err(InterleaveError::Triangle { leg, at });
            }
        }
        Ok(())
    }
}

/// A morphism `(g_M, g_N)` between two interleavings over the same `Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleavingMorphism {
    source: Interleaving,
    target: Interleaving,
    gm: NatTrans,
    gn: NatTrans,
}

impl InterleavingMorphism {
    pub fn from_raw(source: Interleaving, target: Interleaving, gm: NatTrans, gn: NatTrans) -> Self {
        InterleavingMorphism { source, target, gm, gn }
    }

    pub fn new(source: Interleaving, target: Interleaving, gm: NatTrans, gn: NatTrans) -> Result<Self, InterleaveError> {
        let g = InterleavingMorphism::from_raw(source, target, gm, gn);
        g.validate()?;
        Ok(g)
    }

    pub fn identity(x: &Interleaving) -> Self {
        InterleavingMorphism {
            source: x.clone(),
            target: x.clone(),
            gm: NatTrans::identity(x.m.clone()),
            gn: NatTrans::identity(x.n.clone()),
        }
    }

    pub fn zero(source: &Interleaving, target: &Interleaving) -> Self {
        InterleavingMorphism {
            source: source.clone(),
            target: target.clone(),
            gm: NatTrans::zero(source.m.clone(), target.m.clone()),
            gn: NatTrans::zero(source.n.clone(), target.n.clone()),
        }
    }

    pub fn source(&self) -> &Interleaving {
        &self.source
    }

    pub fn target(&self) -> &Interleaving {
        &self.target
    }

    pub fn gm(&self) -> &NatTrans {
        &self.gm
    }

    pub fn gn(&self) -> &NatTrans {
        &self.gn
    }

    pub fn validate(&self) -> Result<(), InterleaveError> {
        let (s, t) = (&self.source, &self.target);
        if s.lam != t.lam {
            return Err(InterleaveError::TranslationsDiffer);
        }
        if self.gm.source() != &s.m || self.gm.target() != &t.m {
            return Err(InterleaveError::Endpoint("g_M"));
        }
        if self.gn.source() != &s.n || self.gn.target() != &t.n {
            return Err(InterleaveError::Endpoint("g_N"));
        }
        self.gm.validate()?;
        self.gn.validate()?;
        for (leg, g_here, g_there, s_map, t_map) in [
            (Leg::M, &self.gm, &self.gn, &s.phi, &t.phi),
            (Leg::N, &self.gn, &self.gm, &s.psi, &t.psi),
        ] {
            let lhs = t_map.compose(g_here)?;
            let rhs = post_whisker(g_there, &s.lam)?.compose(s_map)?;
            if let Some(at) = (0..lhs.components().len()).find(|&i| lhs.component(i) != rhs.component(i)) {
                return Err(InterleaveError::Square { leg, at });
            }
        }
        Ok(())
    }
}

/// A representation together with the shoelace it lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShoelaceRep {
    pub shoelace: ShoelaceProset,
    pub rep: Arc<Representation>,
}

/// Packs an interleaving into a representation of `Σ_Λ P`.
pub fn pack(x: &Interleaving) -> Result<ShoelaceRep, InterleaveError> {
    let sh = shoelace(x.m.proset(), &x.lam)?;
    pack_onto(x, &sh)
}

/// Packs onto a given shoelace over `x`'s proset and translation. Cross maps
/// are produced for whichever cross pairs the carrier relates.
pub fn pack_onto(x: &Interleaving, sh: &ShoelaceProset) -> Result<ShoelaceRep, InterleaveError> {
    x.validate()?;
    if sh.base() != x.m.proset() || sh.lambda() != &x.lam {
        return Err(InterleaveError::ShoelaceMismatch);
    }
    let n = sh.base_len();
    let field = x.m.field();
    let mut dims = x.m.dims().to_vec();
    dims.extend_from_slice(x.n.dims());
    let rep = Representation::from_fn(sh.carrier().clone(), field, dims, |a, b| {
        let (i, a_primed) = (a % n, a >= n);
        let (j, b_primed) = (b % n, b >= n);
        match (a_primed, b_primed) {
            (false, false) => x.m.map(i, j).clone(),
            (true, true) => x.n.map(i, j).clone(),
            (false, true) => {
                let li = x.lam.apply(i);
                x.n.map(li, j).mul(x.phi.component(i)).expect("shapes agree")
            }
            (true, false) => {
                let li = x.lam.apply(i);
                x.m.map(li, j).mul(x.psi.component(i)).expect("shapes agree")
            }
        }
    });
    rep.validate()?;
    Ok(ShoelaceRep { shoelace: sh.clone(), rep: Arc::new(rep) })
}

/// Reads an interleaving back off a representation of `Σ_Λ P`.
pub fn unpack(sh: &ShoelaceProset, v: &Arc<Representation>) -> Result<Interleaving, InterleaveError> {
    if sh.rule() != CrossRule::Translation {
        return Err(ProsetError::WindowedShoelace.into());
    }
    v.validate()?;
    let m = Arc::new(restrict(sh, v, Side::Left)?);
    let n = Arc::new(restrict(sh, v, Side::Right)?);
    let lam = sh.lambda().clone();
    let phi = (0..sh.base_len()).map(|i| v.map(sh.plain(i), sh.primed(lam.apply(i))).clone()).collect();
    let psi = (0..sh.base_len()).map(|i| v.map(sh.primed(i), sh.plain(lam.apply(i))).clone()).collect();
    Interleaving::from_components(m, n, lam, phi, psi)
}

/// Combines `(g_M, g_N)` into one transformation of packed representations.
pub fn pack_morphism(g: &InterleavingMorphism) -> Result<NatTrans, InterleaveError> {
    g.validate()?;
    let source = pack(&g.source)?;
    let target = pack(&g.target)?;
    let mut components = g.gm.components().to_vec();
    components.extend_from_slice(g.gn.components());
    let t = NatTrans::from_raw(source.rep, target.rep, components);
    t.validate()?;
    Ok(t)
}

/// Splits a transformation of shoelace representations into `(g|_P, g|_P')`.
pub fn unpack_morphism(sh: &ShoelaceProset, t: &NatTrans) -> Result<InterleavingMorphism, InterleaveError> {
    t.validate()?;
    let source = unpack(sh, t.source())?;
    let target = unpack(sh, t.target())?;
    let gm = restrict_nat(sh, t, Side::Left)?;
    let gn = restrict_nat(sh, t, Side::Right)?;
    InterleavingMorphism::new(source, target, gm, gn)
}

/// Interleaves two Λ-interleavings of the same `(M, N)` over the twisted
/// translation `Λ̃` of `Σ_Λ P`.
///
/// `Φ : V_a -> V_b Λ̃` is `a.φ` on the plain copy and `b.ψ` on the primed
/// copy; `Ψ : V_b -> V_a Λ̃` is `b.φ` on the plain copy and `a.ψ` on the
/// primed copy.
pub fn square_interleave(a: &Interleaving, b: &Interleaving) -> Result<(ShoelaceProset, Interleaving), InterleaveError> {
    a.validate()?;
    b.validate()?;
    if a.lam != b.lam {
        return Err(InterleaveError::TranslationsDiffer);
    }
    if a.m != b.m || a.n != b.n {
        return Err(InterleaveError::EndpointsDiffer);
    }
    let va = pack(a)?;
    let vb = pack(b)?;
    let sh = va.shoelace;
    let twisted = sh.induced_translation(&a.lam, true)?;
    let mut big_phi = a.phi.components().to_vec();
    big_phi.extend_from_slice(b.psi.components());
    let mut big_psi = b.phi.components().to_vec();
    big_psi.extend_from_slice(a.psi.components());
    let x = Interleaving::from_components(va.rep, vb.rep, twisted, big_phi, big_psi)?;
    Ok((sh, x))
}

/// Pushes a Λ-interleaving forward to any `Γ >= Λ` by post-composing with
/// the internal maps `Λi <= Γi`.
pub fn upgrade_interleaving(x: &Interleaving, gamma: &Translation) -> Result<Interleaving, InterleaveError> {
    x.validate()?;
    if gamma.base() != x.lam.base() {
        return Err(ProsetError::BaseMismatch.into());
    }
    let p = x.lam.base();
    if let Some(i) = (0..p.len()).find(|&i| !p.leq(x.lam.apply(i), gamma.apply(i))) {
        return Err(InterleaveError::NotDominated(i));
    }
    let step = |module: &Representation, comp: &Matrix, i: usize| {
        module.map(x.lam.apply(i), gamma.apply(i)).mul(comp).expect("shapes agree")
    };
    let phi = (0..p.len()).map(|i| step(&x.n, x.phi.component(i), i)).collect();
    let psi = (0..p.len()).map(|i| step(&x.m, x.psi.component(i), i)).collect();
    Interleaving::from_components(x.m.clone(), x.n.clone(), gamma.clone(), phi, psi)
}

/// [`square_interleave`] followed by the upgrade from `Λ̃` to the untwisted
/// lift of `Λ∘Λ`.
pub fn untwist_square(a: &Interleaving, b: &Interleaving) -> Result<(ShoelaceProset, Interleaving), InterleaveError> {
    let (sh, x) = square_interleave(a, b)?;
    let lam2 = a.lam.compose(&a.lam)?;
    let bar = sh.induced_translation(&lam2, false)?;
    let up = upgrade_interleaving(&x, &bar)?;
    Ok((sh, up))
}

/// Moves an interleaving along isomorphisms `α : M -> M₂`, `β : N -> N₂`,
/// giving `(M₂, N₂, βΛ φ α⁻¹, αΛ ψ β⁻¹)`.
pub fn transport(x: &Interleaving, alpha: &NatTrans, beta: &NatTrans) -> Result<Interleaving, InterleaveError> {
    if alpha.source() != &x.m || beta.source() != &x.n {
        return Err(InterleaveError::Endpoint("transport isomorphism"));
    }
    let alpha_inv = alpha.inverse()?;
    let beta_inv = beta.inverse()?;
    let phi = post_whisker(beta, &x.lam)?.compose(&x.phi)?.compose(&alpha_inv)?;
    let psi = post_whisker(alpha, &x.lam)?.compose(&x.psi)?.compose(&beta_inv)?;
    Interleaving::new(alpha.target().clone(), beta.target().clone(), x.lam.clone(), phi, psi)
}

/// Blockwise direct sum of interleavings over a common translation.
pub fn direct_sum_interleavings(lam: &Translation, field: crate::exactlin::FieldSpec, xs: &[&Interleaving]) -> Result<Interleaving, InterleaveError> {
    if xs.iter().any(|x| &x.lam != lam) {
        return Err(InterleaveError::TranslationsDiffer);
    }
    let p = lam.base();
    let ms: Vec<&Representation> = xs.iter().map(|x| x.m.as_ref()).collect();
    let ns: Vec<&Representation> = xs.iter().map(|x| x.n.as_ref()).collect();
    let m = Arc::new(direct_sum(p, field, &ms)?.rep);
    let n = Arc::new(direct_sum(p, field, &ns)?.rep);
    let phis: Vec<&NatTrans> = xs.iter().map(|x| &x.phi).collect();
    let psis: Vec<&NatTrans> = xs.iter().map(|x| &x.psi).collect();
    let phi = direct_sum_nat(p, field, &phis)?;
    let psi = direct_sum_nat(p, field, &psis)?;
    Interleaving::from_components(m, n, lam.clone(), phi.components().to_vec(), psi.components().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::proset::Proset;

    fn window(n: usize) -> Arc<Proset> {
        Arc::new(Proset::chain(n))
    }

    fn shift(p: &Arc<Proset>, eps: usize) -> Translation {
        let n = p.len();
        Translation::new(p.clone(), (0..n).map(|i| (i + eps).min(n - 1)).collect()).unwrap()
    }

    fn interval(p: &Arc<Proset>, field: FieldSpec, lo: usize, hi: usize) -> Arc<Representation> {
        let support: Vec<bool> = (0..p.len()).map(|i| (lo..=hi).contains(&i)).collect();
        Arc::new(Representation::thin(p.clone(), field, &support))
    }

    /// I[0,2] and I[1,3] on the window [-1, 4] (indices shifted by one),
    /// with the overlap maps.
    fn overlap_example(field: FieldSpec) -> Interleaving {
        let p = window(6);
        let lam = shift(&p, 1);
        let m = interval(&p, field, 1, 3);
        let n = interval(&p, field, 2, 4);
        let one = || Matrix::identity(field, 1);
        let phi = (0..6)
            .map(|i| if (1..=3).contains(&i) { one() } else { Matrix::zeros(field, n.dim(lam.apply(i)), m.dim(i)) })
            .collect();
        let psi = (0..6)
            .map(|i| if i == 2 { one() } else { Matrix::zeros(field, m.dim(lam.apply(i)), n.dim(i)) })
            .collect();
        Interleaving::from_components(m, n, lam, phi, psi).unwrap()
    }

    #[test]
    fn identity_interleaving() {
        let p = window(4);
        let m = interval(&p, FieldSpec::default(), 1, 2);
        let x = Interleaving::diagonal(m, Translation::identity(p)).unwrap();
        assert_eq!(x.validate(), Ok(()));
    }

    #[test]
    fn overlap_example_is_valid() {
        assert_eq!(overlap_example(FieldSpec::default()).validate(), Ok(()));
    }

    #[test]
    fn zero_maps_fail_the_triangle() {
        let x = overlap_example(FieldSpec::default());
        let err = Interleaving::zero(x.m().clone(), x.n().clone(), x.lam().clone()).unwrap_err();
        assert_eq!(err, InterleaveError::Triangle { leg: Leg::M, at: 1 });
    }

    #[test]
    fn morphism_checks() {
        let x = overlap_example(FieldSpec::default());
        assert_eq!(InterleavingMorphism::identity(&x).validate(), Ok(()));
        assert_eq!(InterleavingMorphism::zero(&x, &x).validate(), Ok(()));
        let bad = InterleavingMorphism::from_raw(
            x.clone(),
            x.clone(),
            NatTrans::identity(x.m().clone()),
            NatTrans::zero(x.n().clone(), x.n().clone()),
        );
        assert!(matches!(bad.validate(), Err(InterleaveError::Square { .. })));
    }

    #[test]
    fn pack_and_unpack_invert_each_other() {
        let x = overlap_example(FieldSpec::default());
        let v = pack(&x).unwrap();
        assert_eq!(v.rep.proset().len(), 12);
        assert_eq!(restrict(&v.shoelace, &v.rep, Side::Left).unwrap(), **x.m());
        assert_eq!(restrict(&v.shoelace, &v.rep, Side::Right).unwrap(), **x.n());
        let back = unpack(&v.shoelace, &v.rep).unwrap();
        assert_eq!(back, x);
        assert_eq!(pack(&back).unwrap(), v);
    }

    #[test]
    fn zero_interleaving_packs_to_zero() {
        let p = window(3);
        let field = FieldSpec::default();
        let z = Arc::new(Representation::zero(p.clone(), field));
        let x = Interleaving::zero(z.clone(), z, shift(&p, 1)).unwrap();
        let v = pack(&x).unwrap();
        assert!(v.rep.is_zero());
        assert_eq!(unpack(&v.shoelace, &v.rep).unwrap(), x);
    }

    #[test]
    fn identity_translation_duplicates_internal_maps() {
        let p = window(4);
        let m = interval(&p, FieldSpec::default(), 0, 2);
        let x = Interleaving::diagonal(m.clone(), Translation::identity(p)).unwrap();
        let v = pack(&x).unwrap();
        for (i, j) in [(0, 2), (1, 2), (0, 3)] {
            assert_eq!(v.rep.map(i, 4 + j), m.map(i, j));
            assert_eq!(v.rep.map(4 + i, j), m.map(i, j));
        }
    }

    #[test]
    fn morphisms_pack_and_unpack() {
        let x = overlap_example(FieldSpec::default());
        let id = InterleavingMorphism::identity(&x);
        let t = pack_morphism(&id).unwrap();
        assert_eq!(t, NatTrans::identity(pack(&x).unwrap().rep));
        let sh = pack(&x).unwrap().shoelace;
        assert_eq!(unpack_morphism(&sh, &t).unwrap(), id);
        assert!(pack_morphism(&InterleavingMorphism::zero(&x, &x)).unwrap().is_zero());
    }

    #[test]
    fn squares_of_scalar_twists() {
        let field = FieldSpec::new(5).unwrap();
        let a = overlap_example(field);
        let b = a.rescaled(4, 4);
        assert_eq!(b.validate(), Ok(()));
        let (sh, sq) = square_interleave(&a, &b).unwrap();
        assert_eq!(sq.validate(), Ok(()));
        assert_eq!(sq.lam(), &sh.induced_translation(a.lam(), true).unwrap());
        let (_, un) = untwist_square(&a, &b).unwrap();
        assert_eq!(un.validate(), Ok(()));
        let (_, self_sq) = square_interleave(&a, &a).unwrap();
        assert_eq!(self_sq.validate(), Ok(()));
    }

    #[test]
    fn square_rejects_mismatched_inputs() {
        let field = FieldSpec::new(5).unwrap();
        let a = overlap_example(field);
        let p = a.lam().base().clone();
        let c = Interleaving::diagonal(a.m().clone(), a.lam().clone()).unwrap();
        assert_eq!(square_interleave(&a, &c).unwrap_err(), InterleaveError::EndpointsDiffer);
        let d = upgrade_interleaving(&a, &shift(&p, 2)).unwrap();
        assert_eq!(square_interleave(&a, &d).unwrap_err(), InterleaveError::TranslationsDiffer);
        // b broken in one triangle
        let broken = a.rescaled(2, 1);
        assert!(matches!(square_interleave(&a, &broken), Err(InterleaveError::Triangle { .. })));
    }

    #[test]
    fn upgrades() {
        let x = overlap_example(FieldSpec::default());
        assert_eq!(upgrade_interleaving(&x, x.lam()).unwrap(), x);
        let p = x.lam().base().clone();
        let up = upgrade_interleaving(&x, &shift(&p, 2)).unwrap();
        assert_eq!(up.validate(), Ok(()));
        let err = upgrade_interleaving(&x, &Translation::identity(p)).unwrap_err();
        assert_eq!(err, InterleaveError::NotDominated(0));
    }

    #[test]
    fn zero_interleaving_of_short_bars_upgrades() {
        let p = window(8);
        let field = FieldSpec::default();
        let m = interval(&p, field, 1, 1);
        let n = interval(&p, field, 4, 4);
        let x = Interleaving::zero(m, n, shift(&p, 1)).unwrap();
        let up = upgrade_interleaving(&x, &shift(&p, 3)).unwrap();
        assert!(up.is_trivial());
    }

    #[test]
    fn epsilon_zero_square() {
        let p = window(4);
        let field = FieldSpec::new(5).unwrap();
        let m = interval(&p, field, 0, 3);
        let a = Interleaving::diagonal(m, Translation::identity(p)).unwrap();
        let b = a.rescaled(4, 4);
        assert_eq!(square_interleave(&a, &b).unwrap().1.validate(), Ok(()));
        assert_eq!(untwist_square(&a, &b).unwrap().1.validate(), Ok(()));
    }
}
