//! Dense matrices over a prime field `F_p`.
//!
//! Everything downstream (representations, natural transformations, barcodes)
//! is built on these matrices, so all arithmetic here is exact. Matrices with
//! zero rows or zero columns are ordinary values and compose as expected.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),
    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("dimension mismatch: {left_rows}x{left_cols} * {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("entry count {got} does not match shape {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("inconsistent constraint shape: {0}")]
    ShapeInconsistency(String),
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    p: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: 2 }
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = LinAlgError;

    fn try_from(p: u64) -> Result<Self, Self::Error> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.p as u64
    }
}

impl FieldSpec {
    /// Checks primality by trial division.
    pub fn new(p: u64) -> Result<Self, LinAlgError> {
        if !(2..=(i32::MAX as u64)).contains(&p) {
            return Err(LinAlgError::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(LinAlgError::NotPrime(p));
            }
            d += 1;
        }
        Ok(FieldSpec { p: p as u32 })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Multiplicative inverse via Fermat; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        Some(acc as u32)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A row-major matrix with entries reduced mod `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer entries, reducing each mod `p`.
    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::EntryCount { rows, cols, got: entries.len() });
        }
        Ok(Matrix { field, rows, cols, entries: entries.iter().map(|&x| field.reduce(x)).collect() })
    }

    /// Convenience constructor from nested rows. Panics on ragged input.
    pub fn from_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Matrix::from_entries(field, rows.len(), cols, &flat).expect("shape checked above")
    }

    /// The `n x n` permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.entries[i * n + j] = 1;
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = self.field.reduce(value);
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch { left: self.field.p, right: other.field.p });
        }
        Ok(())
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let p = self.field.p as u64;
        let mut out = vec![0u32; self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out[idx] = ((out[idx] as u64 + a * other.entries[k * other.cols + c] as u64) % p) as u32;
                }
            }
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols: other.cols, entries: out })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn scale(&self, c: i64) -> Matrix {
        let c = self.field.reduce(c);
        let entries = self.entries.iter().map(|&a| self.field.mul(a, c)).collect();
        Matrix { entries, ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// Copies the block `[r0, r0 + rows) x [c0, c0 + cols)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.entries[r * cols + c] = self.get(r0 + r, c0 + c);
            }
        }
        out
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(field: FieldSpec, blocks: &[&Matrix]) -> Result<Matrix, LinAlgError> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.field != field {
                return Err(LinAlgError::FieldMismatch { left: field.p, right: b.field.p });
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.entries[(r0 + r) * cols + c0 + c] = b.get(r, c);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    /// Stacks rows of `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.entries.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                let idx = row * m.cols + c;
                m.entries[idx] = f.mul(m.entries[idx], inv);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let sub = f.mul(factor, m.entries[row * m.cols + c]);
                    let idx = r * m.cols + c;
                    m.entries[idx] = f.sub(m.entries[idx], sub);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : self * v = 0 }` as column vectors of length `cols`.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.cols];
                v[fc] = 1;
                for (pr, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(pr, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.get(r, c);
            }
            aug.entries[r * 2 * n + n + r] = 1;
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(red.block(0, n, n, n))
    }
}

/// One side of a linear constraint: `left * X[unknown] * right`.
#[derive(Debug, Clone)]
pub struct Term {
    pub left: Matrix,
    pub unknown: usize,
    pub right: Matrix,
}

impl Term {
    pub fn new(left: Matrix, unknown: usize, right: Matrix) -> Self {
        Term { left, unknown, right }
    }
}

/// A homogeneous system in matrix unknowns `X_0, ..., X_{k-1}` built from
/// constraints of the form `L1 X_a R1 = L2 X_b R2`, flattened to one linear
/// system over the concatenated row-major entries of all unknowns.
#[derive(Debug, Clone)]
pub struct HomogeneousSystem {
    field: FieldSpec,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl HomogeneousSystem {
    pub fn new(field: FieldSpec, shapes: Vec<(usize, usize)>) -> Self {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut acc = 0;
        for &(r, c) in &shapes {
            offsets.push(acc);
            acc += r * c;
        }
        HomogeneousSystem { field, shapes, offsets, rows: Vec::new() }
    }

    pub fn unknown_count(&self) -> usize {
        self.shapes.iter().map(|&(r, c)| r * c).sum()
    }

    fn term_shape(&self, t: &Term) -> Result<(usize, usize), LinAlgError> {
        let &(xr, xc) = self
            .shapes
            .get(t.unknown)
            .ok_or_else(|| LinAlgError::ShapeInconsistency(format!("unknown {} out of range", t.unknown)))?;
        if t.left.field() != self.field || t.right.field() != self.field {
            return Err(LinAlgError::FieldMismatch { left: self.field.p, right: t.left.field().p });
        }
        if t.left.cols() != xr || t.right.rows() != xc {
            return Err(LinAlgError::ShapeInconsistency(format!(
                "term {}x{} * X{}[{}x{}] * {}x{}",
                t.left.rows(),
                t.left.cols(),
                t.unknown,
                xr,
                xc,
                t.right.rows(),
                t.right.cols()
            )));
        }
        Ok((t.left.rows(), t.right.cols()))
    }

    /// Adds the entrywise equations of `lhs = rhs`.
    pub fn add_constraint(&mut self, lhs: &Term, rhs: &Term) -> Result<(), LinAlgError> {
        let ls = self.term_shape(lhs)?;
        let rs = self.term_shape(rhs)?;
        if ls != rs {
            return Err(LinAlgError::ShapeInconsistency(format!("sides {ls:?} vs {rs:?}")));
        }
        let n = self.unknown_count();
        let f = self.field;
        for r in 0..ls.0 {
            for c in 0..ls.1 {
                let mut row = vec![0u32; n];
                // entry (r, c) of L X R is sum_{u,v} L[r,u] X[u,v] R[v,c]
                for (term, negate) in [(lhs, false), (rhs, true)] {
                    let (xr, xc) = self.shapes[term.unknown];
                    let off = self.offsets[term.unknown];
                    for u in 0..xr {
                        let l = term.left.get(r, u);
                        if l == 0 {
                            continue;
                        }
                        for v in 0..xc {
                            let coef = f.mul(l, term.right.get(v, c));
                            let coef = if negate { f.neg(coef) } else { coef };
                            row[off + u * xc + v] = f.add(row[off + u * xc + v], coef);
                        }
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    self.rows.push(row);
                }
            }
        }
        Ok(())
    }

    pub fn solve(&self) -> SolutionSpace {
        let n = self.unknown_count();
        let flat: Vec<i64> = self.rows.iter().flat_map(|r| r.iter().map(|&x| x as i64)).collect();
        let m = Matrix::from_entries(self.field, self.rows.len(), n, &flat).expect("rows have uniform length");
        let basis = m
            .nullspace()
            .into_iter()
            .map(|v| {
                self.shapes
                    .iter()
                    .zip(&self.offsets)
                    .map(|(&(r, c), &off)| Matrix {
                        field: self.field,
                        rows: r,
                        cols: c,
                        entries: v[off..off + r * c].to_vec(),
                    })
                    .collect()
            })
            .collect();
        SolutionSpace { basis }
    }
}

/// Solution space of a [`HomogeneousSystem`]; each basis element assigns a
/// matrix to every unknown.
#[derive(Debug, Clone)]
pub struct SolutionSpace {
    basis: Vec<Vec<Matrix>>,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Matrix>] {
        &self.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    fn f5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    #[test]
    fn primality() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(2_147_483_647).is_ok());
        assert_eq!(FieldSpec::new(1), Err(LinAlgError::NotPrime(1)));
        assert_eq!(FieldSpec::new(9), Err(LinAlgError::NotPrime(9)));
        assert!(FieldSpec::new(1 << 31).is_err());
    }

    #[test]
    fn identity_times_m() {
        let m = Matrix::from_rows(f5(), &[&[1, 2, 3], &[4, 0, 1], &[2, 2, 2]]);
        assert_eq!(Matrix::identity(f5(), 3).mul(&m).unwrap(), m);
    }

    #[test]
    fn unipotent_squares_to_identity_mod_2() {
        let a = Matrix::from_rows(f2(), &[&[1, 1], &[0, 1]]);
        assert_eq!(a.mul(&a).unwrap(), Matrix::identity(f2(), 2));
    }

    #[test]
    fn empty_shapes_compose() {
        let a = Matrix::zeros(f2(), 0, 4);
        let b = Matrix::zeros(f2(), 4, 3);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.shape(), (0, 3));
        // k x 0 times 0 x n is the zero k x n matrix
        let d = Matrix::zeros(f2(), 2, 0).mul(&Matrix::zeros(f2(), 0, 2)).unwrap();
        assert_eq!(d, Matrix::zeros(f2(), 2, 2));
    }

    #[test]
    fn mul_errors() {
        let a = Matrix::zeros(f2(), 2, 3);
        assert!(matches!(a.mul(&a), Err(LinAlgError::DimensionMismatch { .. })));
        let b = Matrix::zeros(f5(), 3, 3);
        assert!(matches!(a.mul(&b), Err(LinAlgError::FieldMismatch { .. })));
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(f2(), 4).rank(), 4);
        assert_eq!(Matrix::from_rows(f5(), &[&[2, 4], &[1, 2]]).rank(), 1);
        assert_eq!(Matrix::zeros(f5(), 0, 5).rank(), 0);
        assert_eq!(Matrix::zeros(f5(), 5, 0).rank(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_rows(f5(), &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(Matrix::from_rows(f5(), &[&[2, 4], &[1, 2]]).inverse().is_none());
        assert_eq!(Matrix::zeros(f5(), 0, 0).inverse(), Some(Matrix::zeros(f5(), 0, 0)));
    }

    #[test]
    fn permutation_matrix_moves_basis() {
        let p = Matrix::permutation(f2(), &[2, 0, 1]);
        let e0 = Matrix::from_rows(f2(), &[&[1], &[0], &[0]]);
        assert_eq!(p.mul(&e0).unwrap(), Matrix::from_rows(f2(), &[&[0], &[0], &[1]]));
    }

    #[test]
    fn unconstrained_system() {
        let sys = HomogeneousSystem::new(f2(), vec![(1, 1), (1, 1)]);
        assert_eq!(sys.solve().dimension(), 2);
    }

    #[test]
    fn tautological_constraint() {
        let mut sys = HomogeneousSystem::new(f2(), vec![(1, 1)]);
        let one = Matrix::identity(f2(), 1);
        sys.add_constraint(&Term::new(one.clone(), 0, one.clone()), &Term::new(one.clone(), 0, one))
            .unwrap();
        assert_eq!(sys.solve().dimension(), 1);
    }

    #[test]
    fn commutant_of_jordan_block() {
        // X commuting with [[1,1],[0,1]] over F_5: polynomials in the block, dim 2
        let j = Matrix::from_rows(f5(), &[&[1, 1], &[0, 1]]);
        let id = Matrix::identity(f5(), 2);
        let mut sys = HomogeneousSystem::new(f5(), vec![(2, 2)]);
        sys.add_constraint(&Term::new(j.clone(), 0, id.clone()), &Term::new(id, 0, j.clone()))
            .unwrap();
        let sol = sys.solve();
        assert_eq!(sol.dimension(), 2);
        for b in sol.basis() {
            assert_eq!(j.mul(&b[0]).unwrap(), b[0].mul(&j).unwrap());
        }
    }

    #[test]
    fn constraint_shape_errors() {
        let mut sys = HomogeneousSystem::new(f2(), vec![(2, 2)]);
        let a = Matrix::identity(f2(), 3);
        let id = Matrix::identity(f2(), 2);
        assert!(sys.add_constraint(&Term::new(a, 0, id.clone()), &Term::new(id.clone(), 0, id.clone())).is_err());
        assert!(sys.add_constraint(&Term::new(id.clone(), 4, id.clone()), &Term::new(id.clone(), 0, id)).is_err());
    }
}
