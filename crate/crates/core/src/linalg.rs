//! Dense exact linear algebra over the Gaussian rationals.
//!
//! Matrices are stored densely; every instance this crate cares about is
//! 4×4 or smaller, so no sparsity machinery is warranted. Elimination picks
//! the first nonzero pivot in column order — with exact arithmetic there is
//! no numerical reason to pivot by magnitude, and the fixed rule makes every
//! derived basis deterministic across platforms.
//!
//! Subspaces are represented by [`SubspaceBasis`], kept in reduced
//! row-echelon form. Since the RREF of a spanning set depends only on the
//! subspace, two equal subspaces have identical bases and subspace equality
//! is plain structural equality.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational};

/// A column vector with exact complex entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactVector {
    entries: Vec<GaussianRational>,
}

impl ExactVector {
    pub fn new(entries: Vec<GaussianRational>) -> Self {
        assert!(!entries.is_empty(), "vectors must have positive dimension");
        Self { entries }
    }

    /// Parses a vector from canonical scalar strings.
    pub fn parse(texts: &[&str]) -> Result<Self> {
        let entries = texts
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(entries))
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![GaussianRational::zero(); dim])
    }

    /// The standard basis vector with a 1 in position `index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut entries = vec![GaussianRational::zero(); dim];
        entries[index] = GaussianRational::one();
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> &GaussianRational {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.entries.iter().map(|a| a * c).collect())
    }

    /// Hermitian inner product `⟨self, other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> GaussianRational {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(GaussianRational::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    /// Squared norm `⟨self, self⟩`; exactly rational and nonnegative.
    pub fn norm_sq(&self) -> Rational {
        let ip = self.inner(self);
        debug_assert!(ip.im().is_zero());
        ip.re().clone()
    }

    /// Kronecker product of column vectors.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        Self::new(entries)
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense matrix with exact complex entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix of shape {rows}x{cols} needs {} entries, got {}",
                    rows * cols,
                    entries.len()
                ),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                context: "ragged rows".to_string(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Parses a matrix from canonical scalar strings, one slice per row.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|t| t.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![GaussianRational::zero(); rows * cols]).unwrap()
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = GaussianRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    fn entry_mut(&mut self, r: usize, c: usize) -> &mut GaussianRational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> ExactVector {
        ExactVector::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn col(&self, c: usize) -> ExactVector {
        ExactVector::new((0..self.rows).map(|r| self.entry(r, c).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact matrix product; errors when the inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "cannot multiply {}x{} by {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    acc = acc + self.entry(r, k) * other.entry(k, c);
                }
                *out.entry_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "cannot apply {}x{} to a vector of dimension {}",
                    self.rows,
                    self.cols,
                    v.dim()
                ),
            });
        }
        Ok(ExactVector::new(
            (0..self.rows)
                .map(|r| {
                    (0..self.cols).fold(GaussianRational::zero(), |acc, c| {
                        acc + self.entry(r, c) * v.entry(c)
                    })
                })
                .collect(),
        ))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.entry_mut(c, r) = self.entry(r, c).clone();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.entry_mut(c, r) = self.entry(r, c).conj();
            }
        }
        out
    }

    /// Kronecker product: `(A⊗B)[i·Br+k, j·Bc+l] = A[i,j]·B[k,l]`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.entry(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        *out.entry_mut(i * other.rows + k, j * other.cols + l) =
                            a * other.entry(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.adjoint() == *self
    }

    /// Exact projector test: `A·A = A` and `A† = A`. Non-square matrices
    /// are never projectors.
    pub fn is_projector(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        self.is_hermitian() && self.mul(self).unwrap() == *self
    }

    /// Reduced row-echelon form with the list of pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows: Vec<Vec<GaussianRational>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let pivots = rref_in_place(&mut rows);
        let m = Self::from_rows(rows).unwrap();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the null space `{x : Ax = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![GaussianRational::zero(); self.cols];
            x[f] = GaussianRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -reduced.entry(row, f);
            }
            vectors.push(ExactVector::new(x));
        }
        SubspaceBasis::new(self.cols, vectors).unwrap()
    }

    /// Canonical basis of the column space.
    pub fn range_basis(&self) -> SubspaceBasis {
        let t = self.transpose();
        let vectors = (0..t.rows).map(|r| t.row(r)).collect();
        SubspaceBasis::new(self.rows, vectors).unwrap()
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<GaussianRational>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = self.entries[r * n..(r + 1) * n].to_vec();
            row.extend((0..n).map(|c| {
                if c == r {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                }
            }));
            rows.push(row);
        }
        let pivots = rref_in_place(&mut rows);
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        Some(Self::from_rows(rows.into_iter().map(|row| row[n..].to_vec()).collect()).unwrap())
    }

    /// Rows rendered with aligned columns, for human-readable reports.
    pub fn pretty(&self) -> String {
        let texts: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| texts.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        texts
            .iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect();
                format!("[ {} ]", cells.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// In-place reduced row echelon; first nonzero pivot per column, pivots
/// scaled to 1, all other rows cleared. Returns pivot columns in order.
fn rref_in_place(rows: &mut [Vec<GaussianRational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(found) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].inv().unwrap();
        for entry in rows[pivot_row][col..].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_values = rows[pivot_row][col..].to_vec();
        for r in 0..nrows {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for (entry, pivot) in rows[r][col..].iter_mut().zip(&pivot_values) {
                    *entry = &*entry - &(&factor * pivot);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// The rank-1 projector `v·v† / (v†v)` onto the ray through `v`.
///
/// The input stays unnormalized; only the squared norm ever appears, so the
/// scalars remain inside ℚ(i).
pub fn ray_projector(v: &ExactVector) -> Result<ExactMatrix> {
    if v.is_zero() {
        return Err(Error::ZeroVector {
            context: "ray projector".to_string(),
        });
    }
    let n = v.dim();
    let norm = GaussianRational::from_real(v.norm_sq());
    let mut m = ExactMatrix::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            *m.entry_mut(r, c) = (v.entry(r) * v.entry(c).conj()).checked_div(&norm)?;
        }
    }
    Ok(m)
}

/// A subspace, stored as the reduced row-echelon basis of any spanning set.
///
/// The canonical form makes equality structural: two `SubspaceBasis` values
/// are equal exactly when they describe the same subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<ExactVector>,
}

impl SubspaceBasis {
    /// Canonicalizes a spanning set. Dependent vectors are absorbed; the
    /// resulting vectors are linearly independent by construction.
    pub fn new(ambient_dim: usize, spanning: Vec<ExactVector>) -> Result<Self> {
        if let Some(bad) = spanning.iter().find(|v| v.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "spanning vector of dimension {} in ambient dimension {ambient_dim}",
                    bad.dim()
                ),
            });
        }
        let mut rows: Vec<Vec<GaussianRational>> =
            spanning.into_iter().map(|v| v.entries).collect();
        rref_in_place(&mut rows);
        let vectors = rows
            .into_iter()
            .map(ExactVector::new)
            .filter(|v| !v.is_zero())
            .collect();
        Ok(Self { ambient_dim, vectors })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self { ambient_dim, vectors: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::new(
            ambient_dim,
            (0..ambient_dim).map(|i| ExactVector::unit(ambient_dim, i)).collect(),
        )
        .unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    fn pivot_of(v: &ExactVector) -> usize {
        (0..v.dim()).find(|&i| !v.entry(i).is_zero()).unwrap()
    }

    /// Exact membership: is `x` a linear combination of the basis?
    pub fn contains(&self, x: &ExactVector) -> bool {
        assert_eq!(x.dim(), self.ambient_dim, "ambient dimension mismatch");
        let mut residue = x.clone();
        for row in &self.vectors {
            let c = residue.entry(Self::pivot_of(row)).clone();
            if !c.is_zero() {
                residue = residue.sub(&row.scale(&c));
            }
        }
        residue.is_zero()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }

    /// Exact intersection via the Zassenhaus block construction: row-reduce
    /// `[U|U; W|0]` and read the intersection off the rows whose left half
    /// vanished.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let n = self.ambient_dim;
        let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
        for u in &self.vectors {
            let mut row = u.entries.clone();
            row.extend(u.entries.iter().cloned());
            rows.push(row);
        }
        for w in &other.vectors {
            let mut row = w.entries.clone();
            row.extend(vec![GaussianRational::zero(); n]);
            rows.push(row);
        }
        rref_in_place(&mut rows);
        let vectors = rows
            .into_iter()
            .filter(|row| row[..n].iter().all(GaussianRational::is_zero))
            .map(|row| ExactVector::new(row[n..].to_vec()))
            .filter(|v| !v.is_zero())
            .collect();
        Self::new(n, vectors).unwrap()
    }

    /// Span of the union of the two subspaces.
    pub fn span_with(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Self::new(self.ambient_dim, vectors).unwrap()
    }

    /// The orthogonal projector onto this subspace, via exact Gram-matrix
    /// inversion: `P = B(B†B)⁻¹B†` with the basis as columns of `B`.
    pub fn projector(&self) -> ExactMatrix {
        let n = self.ambient_dim;
        if self.vectors.is_empty() {
            return ExactMatrix::zero(n, n);
        }
        let k = self.vectors.len();
        let mut b = ExactMatrix::zero(n, k);
        for (j, v) in self.vectors.iter().enumerate() {
            for i in 0..n {
                *b.entry_mut(i, j) = v.entry(i).clone();
            }
        }
        let b_adj = b.adjoint();
        let gram = b_adj.mul(&b).unwrap();
        let gram_inv = gram
            .inverse()
            .expect("Gram matrix of an independent basis is invertible");
        b.mul(&gram_inv).unwrap().mul(&b_adj).unwrap()
    }
}
