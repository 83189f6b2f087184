//! Representations of finite prosets in `vect_K` and their morphisms.
//!
//! A [`Representation`] stores a matrix for every related ordered pair, not
//! just for covering pairs, because shoelaces contain 2-cycles. The redundant
//! data is checked by [`Representation::validate`] rather than trusted.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exactlin::{FieldSpec, HomogeneousSystem, LinAlgError, Matrix, Term};
use crate::proset::{Proset, ProsetError, ShoelaceProset, Translation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{got} dimensions for {n} points")]
    DimCount { n: usize, got: usize },
    #[error("no map stored for related pair ({0}, {1})")]
    MissingMap(usize, usize),
    #[error("map stored for unrelated pair ({0}, {1})")]
    ExtraMap(usize, usize),
    #[error("map ({i}, {j}) has shape {got:?}, expected {expected:?}")]
    MapShape { i: usize, j: usize, expected: (usize, usize), got: (usize, usize) },
    #[error("map ({0}, {0}) is not the identity")]
    NotIdentity(usize),
    #[error("composition fails along {0} <= {1} <= {2}")]
    Composition(usize, usize, usize),
    #[error("map ({0}, {1}) lives over the wrong field")]
    MapField(usize, usize),
    #[error("representations live over different prosets")]
    ProsetMismatch,
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("{got} components for {n} points")]
    ComponentCount { n: usize, got: usize },
    #[error("component at {i} has shape {got:?}, expected {expected:?}")]
    ComponentShape { i: usize, expected: (usize, usize), got: (usize, usize) },
    #[error("naturality square fails for {0} <= {1}")]
    Naturality(usize, usize),
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("representation does not live over the shoelace carrier")]
    NotOverShoelace,
    #[error("component at {0} is not invertible")]
    NotInvertible(usize),
    #[error(transparent)]
    Proset(#[from] ProsetError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A functor from a finite proset to finite-dimensional `F_p` vector spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    proset: Arc<Proset>,
    field: FieldSpec,
    dims: Vec<usize>,
    maps: BTreeMap<(usize, usize), Matrix>,
}

impl Representation {
    pub fn from_raw(
        proset: Arc<Proset>,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: BTreeMap<(usize, usize), Matrix>,
    ) -> Self {
        Representation { proset, field, dims, maps }
    }

    pub fn new(
        proset: Arc<Proset>,
        field: FieldSpec,
        dims: Vec<usize>,
        maps: BTreeMap<(usize, usize), Matrix>,
    ) -> Result<Self, RepError> {
        let m = Representation::from_raw(proset, field, dims, maps);
        m.validate()?;
        Ok(m)
    }

    /// Fills in every related pair from `f`, unchecked.
    pub fn from_fn(
        proset: Arc<Proset>,
        field: FieldSpec,
        dims: Vec<usize>,
        mut f: impl FnMut(usize, usize) -> Matrix,
    ) -> Self {
        let maps = proset.related_pairs().map(|(i, j)| ((i, j), f(i, j))).collect();
        Representation { proset, field, dims, maps }
    }

    pub fn zero(proset: Arc<Proset>, field: FieldSpec) -> Self {
        let n = proset.len();
        Representation::from_fn(proset, field, vec![0; n], |_, _| Matrix::zeros(field, 0, 0))
    }

    /// The thin representation with `K` on `support` and identities between
    /// related support points. Valid exactly when the support is convex.
    pub fn thin(proset: Arc<Proset>, field: FieldSpec, support: &[bool]) -> Self {
        let dims: Vec<usize> = support.iter().map(|&s| usize::from(s)).collect();
        let d = dims.clone();
        Representation::from_fn(proset, field, dims, |i, j| {
            if support[i] && support[j] {
                Matrix::identity(field, 1)
            } else {
                Matrix::zeros(field, d[j], d[i])
            }
        })
    }

    pub fn proset(&self) -> &Arc<Proset> {
        &self.proset
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The map `M(i <= j)`. Panics if `i <= j` does not hold.
    pub fn map(&self, i: usize, j: usize) -> &Matrix {
        self.maps.get(&(i, j)).unwrap_or_else(|| panic!("no map for ({i}, {j})"))
    }

    pub fn maps(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.maps
    }

    pub fn maps_mut(&mut self) -> &mut BTreeMap<(usize, usize), Matrix> {
        &mut self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let p = &self.proset;
        let n = p.len();
        if self.dims.len() != n {
            return Err(RepError::DimCount { n, got: self.dims.len() });
        }
        for &(i, j) in self.maps.keys() {
            if i >= n || j >= n || !p.leq(i, j) {
                return Err(RepError::ExtraMap(i, j));
            }
        }
        for (i, j) in p.related_pairs() {
            let m = self.maps.get(&(i, j)).ok_or(RepError::MissingMap(i, j))?;
            if m.field() != self.field {
                return Err(RepError::MapField(i, j));
            }
            let expected = (self.dims[j], self.dims[i]);
            if m.shape() != expected {
                return Err(RepError::MapShape { i, j, expected, got: m.shape() });
            }
        }
        for i in 0..n {
            if !self.map(i, i).is_identity() {
                return Err(RepError::NotIdentity(i));
            }
        }
        for (i, j) in p.related_pairs() {
            for k in (0..n).filter(|&k| p.leq(j, k)) {
                let composite = self.map(j, k).mul(self.map(i, j))?;
                if &composite != self.map(i, k) {
                    return Err(RepError::Composition(i, j, k));
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Representation) -> Result<(), RepError> {
        if self.proset != other.proset {
            return Err(RepError::ProsetMismatch);
        }
        if self.field != other.field {
            return Err(RepError::FieldMismatch);
        }
        Ok(())
    }
}

/// A natural transformation `source -> target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: Arc<Representation>,
    target: Arc<Representation>,
    components: Vec<Matrix>,
}

impl NatTrans {
    pub fn from_raw(source: Arc<Representation>, target: Arc<Representation>, components: Vec<Matrix>) -> Self {
        NatTrans { source, target, components }
    }

    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        components: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        let t = NatTrans::from_raw(source, target, components);
        t.validate()?;
        Ok(t)
    }

    pub fn identity(m: Arc<Representation>) -> Self {
        let components = m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect();
        NatTrans { source: m.clone(), target: m, components }
    }

    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let components = (0..source.dims.len())
            .map(|i| Matrix::zeros(source.field, target.dims[i], source.dims[i]))
            .collect();
        NatTrans { source, target, components }
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Matrix {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn scale(&self, c: i64) -> NatTrans {
        NatTrans { components: self.components.iter().map(|m| m.scale(c)).collect(), ..self.clone() }
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let (s, t) = (&self.source, &self.target);
        s.check_compatible(t)?;
        let n = s.proset.len();
        if self.components.len() != n {
            return Err(RepError::ComponentCount { n, got: self.components.len() });
        }
        for (i, c) in self.components.iter().enumerate() {
            let expected = (t.dims[i], s.dims[i]);
            if c.shape() != expected || c.field() != s.field {
                return Err(RepError::ComponentShape { i, expected, got: c.shape() });
            }
        }
        for (i, j) in s.proset.related_pairs() {
            let lhs = t.map(i, j).mul(&self.components[i])?;
            let rhs = self.components[j].mul(s.map(i, j))?;
            if lhs != rhs {
                return Err(RepError::Naturality(i, j));
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &NatTrans) -> Result<NatTrans, RepError> {
        if other.target != self.source {
            return Err(RepError::NotComposable);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_, _>>()?;
        Ok(NatTrans { source: other.source.clone(), target: self.target.clone(), components })
    }

    /// Inverse of a pointwise-invertible transformation.
    pub fn inverse(&self) -> Result<NatTrans, RepError> {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| c.inverse().ok_or(RepError::NotInvertible(i)))
            .collect::<Result<_, _>>()?;
        Ok(NatTrans { source: self.target.clone(), target: self.source.clone(), components })
    }
}

fn check_translation(m: &Representation, lam: &Translation) -> Result<(), RepError> {
    if lam.base().as_ref() != m.proset.as_ref() {
        return Err(RepError::ProsetMismatch);
    }
    lam.validate().map_err(ProsetError::from)?;
    Ok(())
}

/// `M ∘ Λ`.
pub fn precompose(m: &Representation, lam: &Translation) -> Result<Representation, RepError> {
    check_translation(m, lam)?;
    let dims = (0..m.dims.len()).map(|i| m.dims[lam.apply(i)]).collect();
    Ok(Representation::from_fn(m.proset.clone(), m.field, dims, |i, j| {
        m.map(lam.apply(i), lam.apply(j)).clone()
    }))
}

/// `Mη_Λ : M -> MΛ`, with component `M(i <= Λi)` at `i`.
pub fn unit_whisker(m: &Arc<Representation>, lam: &Translation) -> Result<NatTrans, RepError> {
    let target = Arc::new(precompose(m, lam)?);
    let components = (0..m.dims.len()).map(|i| m.map(i, lam.apply(i)).clone()).collect();
    Ok(NatTrans::from_raw(m.clone(), target, components))
}

/// `φΛ : MΛ -> NΛ`, with component `φ(Λi)` at `i`.
pub fn post_whisker(t: &NatTrans, lam: &Translation) -> Result<NatTrans, RepError> {
    let source = Arc::new(precompose(&t.source, lam)?);
    let target = Arc::new(precompose(&t.target, lam)?);
    let components = (0..t.components.len()).map(|i| t.components[lam.apply(i)].clone()).collect();
    Ok(NatTrans::from_raw(source, target, components))
}

/// A direct sum with the per-point block offsets of each summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSum {
    pub rep: Representation,
    /// `offsets[k][i]` is where summand `k` starts in the basis at point `i`.
    offsets: Vec<Vec<usize>>,
    summand_dims: Vec<Vec<usize>>,
}

impl DirectSum {
    pub fn summand_count(&self) -> usize {
        self.offsets.len()
    }

    pub fn offset(&self, k: usize, i: usize) -> usize {
        self.offsets[k][i]
    }

    pub fn summand_dims(&self, k: usize) -> &[usize] {
        &self.summand_dims[k]
    }

    /// Reads summand `k` back out of the block-diagonal maps.
    pub fn project(&self, k: usize) -> Representation {
        let off = &self.offsets[k];
        let d = &self.summand_dims[k];
        let maps = self
            .rep
            .maps
            .iter()
            .map(|(&(i, j), m)| ((i, j), m.block(off[j], off[i], d[j], d[i])))
            .collect();
        Representation::from_raw(self.rep.proset.clone(), self.rep.field, d.clone(), maps)
    }
}

/// Pointwise direct sum with block-diagonal maps.
pub fn direct_sum(proset: &Arc<Proset>, field: FieldSpec, ms: &[&Representation]) -> Result<DirectSum, RepError> {
    for m in ms {
        if m.proset.as_ref() != proset.as_ref() {
            return Err(RepError::ProsetMismatch);
        }
        if m.field != field {
            return Err(RepError::FieldMismatch);
        }
    }
    let n = proset.len();
    let mut offsets = Vec::with_capacity(ms.len());
    let mut acc = vec![0usize; n];
    for m in ms {
        offsets.push(acc.clone());
        for i in 0..n {
            acc[i] += m.dims[i];
        }
    }
    let mut maps = BTreeMap::new();
    for (i, j) in proset.related_pairs() {
        let blocks: Vec<&Matrix> = ms.iter().map(|m| m.map(i, j)).collect();
        maps.insert((i, j), Matrix::block_diag(field, &blocks)?);
    }
    Ok(DirectSum {
        rep: Representation::from_raw(proset.clone(), field, acc, maps),
        offsets,
        summand_dims: ms.iter().map(|m| m.dims.clone()).collect(),
    })
}

/// Block-diagonal sum of morphisms between the sums of their sources and targets.
pub fn direct_sum_nat(proset: &Arc<Proset>, field: FieldSpec, ts: &[&NatTrans]) -> Result<NatTrans, RepError> {
    let sources: Vec<&Representation> = ts.iter().map(|t| t.source.as_ref()).collect();
    let targets: Vec<&Representation> = ts.iter().map(|t| t.target.as_ref()).collect();
    let source = direct_sum(proset, field, &sources)?.rep;
    let target = direct_sum(proset, field, &targets)?.rep;
    let components = (0..proset.len())
        .map(|i| {
            let blocks: Vec<&Matrix> = ts.iter().map(|t| &t.components[i]).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect::<Result<_, _>>()?;
    Ok(NatTrans::from_raw(Arc::new(source), Arc::new(target), components))
}

/// Which copy of a shoelace to read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Restriction of a shoelace representation to one copy, relabelled onto the base.
pub fn restrict(sh: &ShoelaceProset, m: &Representation, side: Side) -> Result<Representation, RepError> {
    if m.proset.as_ref() != sh.carrier().as_ref() {
        return Err(RepError::NotOverShoelace);
    }
    let n = sh.base_len();
    let shift = match side {
        Side::Left => 0,
        Side::Right => n,
    };
    let dims = (0..n).map(|i| m.dims[shift + i]).collect();
    Ok(Representation::from_fn(sh.base().clone(), m.field, dims, |i, j| {
        m.map(shift + i, shift + j).clone()
    }))
}

/// Restriction of a transformation between shoelace representations to one copy.
pub fn restrict_nat(sh: &ShoelaceProset, t: &NatTrans, side: Side) -> Result<NatTrans, RepError> {
    let source = Arc::new(restrict(sh, &t.source, side)?);
    let target = Arc::new(restrict(sh, &t.target, side)?);
    let shift = match side {
        Side::Left => 0,
        Side::Right => sh.base_len(),
    };
    let components = (0..sh.base_len()).map(|i| t.components[shift + i].clone()).collect();
    Ok(NatTrans::from_raw(source, target, components))
}

/// Basis of `Hom(m, n)`, solved from all naturality constraints.
pub fn hom_space(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<Vec<NatTrans>, RepError> {
    m.check_compatible(n)?;
    let k = m.proset.len();
    let field = m.field;
    let shapes = (0..k).map(|i| (n.dims[i], m.dims[i])).collect();
    let mut sys = HomogeneousSystem::new(field, shapes);
    for (i, j) in m.proset.related_pairs() {
        if i == j {
            continue;
        }
        // N(i<=j) X_i = X_j M(i<=j)
        let lhs = Term::new(n.map(i, j).clone(), i, Matrix::identity(field, m.dims[i]));
        let rhs = Term::new(Matrix::identity(field, n.dims[j]), j, m.map(i, j).clone());
        sys.add_constraint(&lhs, &rhs)?;
    }
    Ok(sys
        .solve()
        .basis()
        .iter()
        .map(|comps| NatTrans::from_raw(m.clone(), n.clone(), comps.clone()))
        .collect())
}

/// Transports `m` along pointwise invertible matrices: the result has maps
/// `A_j M(i<=j) A_i^{-1}`. Returns it with the isomorphism `m -> result`.
pub fn change_basis(m: &Arc<Representation>, basis: &[Matrix]) -> Result<(Arc<Representation>, NatTrans), RepError> {
    let inverses = basis
        .iter()
        .enumerate()
        .map(|(i, a)| a.inverse().ok_or(RepError::NotInvertible(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut maps = BTreeMap::new();
    for (&(i, j), mm) in &m.maps {
        maps.insert((i, j), basis[j].mul(mm)?.mul(&inverses[i])?);
    }
    let out = Arc::new(Representation::from_raw(m.proset.clone(), m.field, m.dims.clone(), maps));
    let iso = NatTrans::from_raw(m.clone(), out.clone(), basis.to_vec());
    Ok((out, iso))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::default()
    }

    fn chain_rep(dims: &[usize], steps: &[Matrix]) -> Representation {
        // composite along a chain from consecutive steps
        let n = dims.len();
        let p = Arc::new(Proset::chain(n));
        let field = steps.first().map_or(f2(), |m| m.field());
        Representation::from_fn(p, field, dims.to_vec(), |i, j| {
            let mut acc = Matrix::identity(field, dims[i]);
            for s in &steps[i..j] {
                acc = s.mul(&acc).unwrap();
            }
            acc
        })
    }

    fn interval(n: usize, lo: usize, hi: usize) -> Arc<Representation> {
        let support: Vec<bool> = (0..n).map(|i| (lo..=hi).contains(&i)).collect();
        Arc::new(Representation::thin(Arc::new(Proset::chain(n)), f2(), &support))
    }

    #[test]
    fn constant_chain_is_valid() {
        let one = Matrix::identity(f2(), 1);
        let m = chain_rep(&[1, 1, 1], &[one.clone(), one]);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn broken_composite_is_reported() {
        let one = Matrix::identity(f2(), 1);
        let mut m = chain_rep(&[1, 1, 1], &[one.clone(), one]);
        m.maps_mut().insert((0, 2), Matrix::zeros(f2(), 1, 1));
        assert_eq!(m.validate(), Err(RepError::Composition(0, 1, 2)));
    }

    #[test]
    fn interval_module_is_valid() {
        let m = interval(4, 1, 2);
        assert_eq!(m.dims(), &[0, 1, 1, 0]);
        assert_eq!(m.validate(), Ok(()));
    }

    #[test]
    fn nat_trans_checks() {
        let m = interval(4, 0, 3);
        assert_eq!(NatTrans::identity(m.clone()).validate(), Ok(()));
        let n = interval(4, 1, 2);
        assert_eq!(NatTrans::zero(m.clone(), n.clone()).validate(), Ok(()));
        // identity at 0, zero at 1 across a nonzero internal map
        let field = FieldSpec::new(5).unwrap();
        let p = Arc::new(Proset::chain(2));
        let c = Arc::new(Representation::thin(p, field, &[true, true]));
        let bad = NatTrans::from_raw(
            c.clone(),
            c.clone(),
            vec![Matrix::identity(field, 1), Matrix::identity(field, 1).scale(2)],
        );
        assert_eq!(bad.validate(), Err(RepError::Naturality(0, 1)));
    }

    #[test]
    fn precompose_shifts_intervals_down() {
        let p = Arc::new(Proset::chain(5));
        let lam1 = Translation::new(p.clone(), vec![1, 2, 3, 4, 4]).unwrap();
        let m = interval(5, 1, 3);
        assert_eq!(precompose(&m, &lam1).unwrap(), *interval(5, 0, 2));
        assert_eq!(precompose(&m, &Translation::identity(p.clone())).unwrap(), *m);
        let twice = precompose(&precompose(&m, &lam1).unwrap(), &lam1).unwrap();
        assert_eq!(twice, precompose(&m, &lam1.compose(&lam1).unwrap()).unwrap());
    }

    #[test]
    fn unit_whisker_of_short_interval() {
        let p = Arc::new(Proset::chain(4));
        let lam1 = Translation::new(p.clone(), vec![1, 2, 3, 3]).unwrap();
        let m = interval(4, 0, 2);
        let u = unit_whisker(&m, &lam1).unwrap();
        assert_eq!(u.validate(), Ok(()));
        assert!(u.component(0).is_identity());
        assert!(u.component(1).is_identity());
        assert_eq!(u.component(2).shape(), (0, 1));
        assert_eq!(u.component(3).shape(), (0, 0));
        let id = unit_whisker(&m, &Translation::identity(p)).unwrap();
        assert_eq!(id, NatTrans::identity(m));
    }

    #[test]
    fn double_unit_is_composite_of_units() {
        let p = Arc::new(Proset::chain(5));
        let lam = Translation::new(p.clone(), vec![1, 2, 3, 4, 4]).unwrap();
        let m = interval(5, 0, 3);
        let first = unit_whisker(&m, &lam).unwrap();
        let second = post_whisker(&first, &lam).unwrap();
        let double = unit_whisker(&m, &lam.compose(&lam).unwrap()).unwrap();
        assert_eq!(second.compose(&first).unwrap().components(), double.components());
    }

    #[test]
    fn post_whisker_identities() {
        let p = Arc::new(Proset::chain(5));
        let lam = Translation::new(p.clone(), vec![1, 2, 3, 4, 4]).unwrap();
        let m = interval(5, 1, 4);
        let t = NatTrans::identity(m.clone());
        assert_eq!(post_whisker(&t, &Translation::identity(p.clone())).unwrap(), t);
        let z = NatTrans::zero(m.clone(), interval(5, 2, 4));
        assert!(post_whisker(&z, &lam).unwrap().is_zero());
        let lhs = post_whisker(&post_whisker(&t, &lam).unwrap(), &lam).unwrap();
        let rhs = post_whisker(&t, &lam.compose(&lam).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn direct_sums() {
        let p = Arc::new(Proset::chain(3));
        let a = interval(3, 0, 1);
        let b = interval(3, 1, 2);
        let sum = direct_sum(&p, f2(), &[&a, &b]).unwrap();
        assert_eq!(sum.rep.dims(), &[1, 2, 1]);
        assert_eq!(sum.rep.validate(), Ok(()));
        assert_eq!(sum.project(0), *a);
        assert_eq!(sum.project(1), *b);
        let single = direct_sum(&p, f2(), &[&a]).unwrap();
        assert_eq!(single.rep, *a);
        let empty = direct_sum(&p, f2(), &[]).unwrap();
        assert_eq!(empty.rep, Representation::zero(p, f2()));
    }

    #[test]
    fn hom_dimensions_between_intervals() {
        assert_eq!(hom_space(&interval(5, 1, 3), &interval(5, 0, 2)).unwrap().len(), 1);
        assert_eq!(hom_space(&interval(4, 0, 1), &interval(4, 2, 3)).unwrap().len(), 0);
        assert_eq!(hom_space(&interval(4, 0, 2), &interval(4, 1, 3)).unwrap().len(), 0);
        let m = interval(6, 2, 4);
        assert_eq!(hom_space(&m, &m).unwrap().len(), 1);
    }

    #[test]
    fn change_basis_gives_isomorphism() {
        let field = FieldSpec::new(5).unwrap();
        let p = Arc::new(Proset::chain(3));
        let a = Representation::thin(p.clone(), field, &[true, true, false]);
        let b = Representation::thin(p.clone(), field, &[false, true, true]);
        let sum = Arc::new(direct_sum(&p, field, &[&a, &b]).unwrap().rep);
        let basis = vec![
            Matrix::identity(field, 1).scale(3),
            Matrix::from_rows(field, &[&[1, 2], &[3, 4]]),
            Matrix::identity(field, 1),
        ];
        let (scrambled, iso) = change_basis(&sum, &basis).unwrap();
        assert_eq!(scrambled.validate(), Ok(()));
        assert_eq!(iso.validate(), Ok(()));
        let back = iso.inverse().unwrap();
        assert_eq!(back.validate(), Ok(()));
        assert_eq!(back.compose(&iso).unwrap(), NatTrans::identity(sum));
    }
}
