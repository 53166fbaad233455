//! Subspaces of `C^n` and the orthogonal projections onto them.
//!
//! A [`Subspace`] is stored as the reduced row-echelon form of any spanning
//! set, so structural equality is set equality. A [`ProjectionOp`] is a
//! self-adjoint idempotent matrix; [`ProjectionOp::range`] and
//! [`Subspace::projection`] are mutually inverse.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{
    format_vec, inner, is_zero_vec, kron_vec, rref_rows, ExactMatrix, GaussianRational, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

/// How two subspaces relate under inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// `A < B`
    LeqStrict,
    /// `A > B`
    GeqStrict,
    Equal,
    /// Neither contains the other.
    Incomparable,
}

fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::Shape(format!(
            "subspaces live in C^{} and C^{}",
            a.ambient_dim, b.ambient_dim
        )));
    }
    Ok(())
}

impl Subspace {
    pub fn from_span(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Shape("ambient dimension must be positive".into()));
        }
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Shape(format!(
                "vector of length {} in C^{ambient_dim}",
                bad.len()
            )));
        }
        Ok(Self {
            ambient_dim,
            basis: rref_rows(vectors, ambient_dim).rows,
        })
    }

    /// Span of vectors given with integer coordinates.
    pub fn from_int_span(ambient_dim: usize, vectors: &[&[i64]]) -> Result<Self> {
        Self::from_span(
            ambient_dim,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| GaussianRational::from(x)).collect())
                .collect(),
        )
    }

    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim > 0, "ambient dimension must be positive");
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_span(ambient_dim, ExactMatrix::identity(ambient_dim).to_rows())
            .expect("identity rows have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis rows (reduced row-echelon form).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// `{0}` or the whole space.
    pub fn is_trivial(&self) -> bool {
        self.is_zero() || self.is_full()
    }

    /// Plain set membership; the zero vector belongs to every subspace.
    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "vector of length {} in C^{}",
                v.len(),
                self.ambient_dim
            )));
        }
        if is_zero_vec(v) {
            return Ok(true);
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(rref_rows(rows, self.ambient_dim).rank() == self.dim())
    }

    /// Membership of a physical state. The zero vector is not a state.
    pub fn contains_state(&self, psi: &[GaussianRational]) -> Result<bool> {
        if psi.len() == self.ambient_dim && is_zero_vec(psi) {
            return Err(Error::ZeroState);
        }
        self.contains(psi)
    }

    pub fn projection(&self) -> ProjectionOp {
        let n = self.ambient_dim;
        if self.is_zero() {
            return ProjectionOp {
                matrix: ExactMatrix::zeros(n, n),
            };
        }
        // Basis vectors sit in rows, so the column-form formula needs their conjugates.
        let conjugated = self
            .basis
            .iter()
            .map(|row| row.iter().map(GaussianRational::conj).collect())
            .collect();
        let b = ExactMatrix::from_rows(conjugated).expect("basis rows share the ambient length");
        let gram_inv = b
            .gram_inverse()
            .expect("canonical basis rows are independent");
        let matrix = b
            .conjugate_transpose()
            .matmul(&gram_inv)
            .and_then(|m| m.matmul(&b))
            .expect("shapes agree");
        ProjectionOp { matrix }
    }

    /// `{x : <b, x> = 0 for every basis row b}`.
    pub fn orthocomplement(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient_dim);
        }
        let conjugated: Vec<Vector> = self
            .basis
            .iter()
            .map(|row| row.iter().map(GaussianRational::conj).collect())
            .collect();
        let kernel = rref_rows(conjugated, self.ambient_dim).kernel_basis();
        Self::from_span(self.ambient_dim, kernel).expect("kernel vectors have the ambient length")
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        check_same_ambient(self, other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        let mut rows = other.basis.clone();
        rows.extend(self.basis.iter().cloned());
        Ok(rref_rows(rows, self.ambient_dim).rank() == other.dim())
    }

    pub fn classify_order(&self, other: &Self) -> Result<Order> {
        let below = self.leq(other)?;
        let above = other.leq(self)?;
        Ok(match (below, above) {
            (true, true) => Order::Equal,
            (true, false) => Order::LeqStrict,
            (false, true) => Order::GeqStrict,
            (false, false) => Order::Incomparable,
        })
    }

    /// Closed span of the union.
    pub fn join(&self, other: &Self) -> Result<Self> {
        check_same_ambient(self, other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_span(self.ambient_dim, rows)
    }

    /// `(A^⊥ ∩ B^⊥)^⊥`, with the intersection itself taken through [`Subspace::meet`].
    pub fn join_de_morgan(&self, other: &Self) -> Result<Self> {
        Ok(self
            .orthocomplement()
            .meet(&other.orthocomplement())?
            .orthocomplement())
    }

    /// Set intersection, computed as `(A^⊥ ∨ B^⊥)^⊥`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        Ok(self
            .orthocomplement()
            .join(&other.orthocomplement())?
            .orthocomplement())
    }

    /// Subspace of `C^(n·m)` spanned by Kronecker products of basis pairs.
    pub fn tensor(&self, other: &Self) -> Self {
        let ambient = self.ambient_dim * other.ambient_dim;
        let rows = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| kron_vec(a, b)))
            .collect();
        Self::from_span(ambient, rows).expect("Kronecker rows have the product length")
    }

    /// Whether every basis vector is orthogonal to every basis vector of `other`.
    pub fn is_orthogonal_to(&self, other: &Self) -> Result<bool> {
        check_same_ambient(self, other)?;
        Ok(self
            .basis
            .iter()
            .all(|a| other.basis.iter().all(|b| inner(a, b).is_zero())))
    }

    /// Stable text form used for sorting and export: `{0}` or `span{(..), (..)}`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("{0}");
        }
        let rows: Vec<String> = self.basis.iter().map(|v| format_vec(v)).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Total order used only to make listings deterministic: by dimension, then
/// by canonical text.
pub fn canonical_cmp(a: &Subspace, b: &Subspace) -> Ordering {
    a.ambient_dim
        .cmp(&b.ambient_dim)
        .then(a.dim().cmp(&b.dim()))
        .then_with(|| a.canonical_string().cmp(&b.canonical_string()))
}

/// An orthogonal projection: `M = M^H` and `M M = M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectionOp {
    matrix: ExactMatrix,
}

impl ProjectionOp {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotProjection(format!(
                "{}x{} matrix is not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.conjugate_transpose() != matrix {
            return Err(Error::NotProjection("not self-adjoint".into()));
        }
        if matrix.matmul(&matrix)? != matrix {
            return Err(Error::NotProjection("not idempotent".into()));
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: ExactMatrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: ExactMatrix::zeros(n, n),
        }
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `ran(P) = {x : P x = x}`, the column space of `P`.
    pub fn range(&self) -> Subspace {
        let columns = (0..self.dim()).map(|c| self.matrix.column(c)).collect();
        Subspace::from_span(self.dim(), columns).expect("columns have the ambient length")
    }

    /// `ker(P) = ran(1 - P)`.
    pub fn kernel(&self) -> Subspace {
        Subspace::from_span(self.dim(), self.matrix.kernel_basis())
            .expect("kernel vectors have the ambient length")
    }

    /// `1 - P`.
    pub fn negation(&self) -> Self {
        Self {
            matrix: ExactMatrix::identity(self.dim())
                .sub(&self.matrix)
                .expect("same shape"),
        }
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Result<Vector> {
        self.matrix.apply(v)
    }

    /// Rank of a projection equals its trace.
    pub fn rank(&self) -> usize {
        let t = self.matrix.trace();
        debug_assert!(t.is_real() && t.re().is_integer());
        t.re().to_integer().try_into().unwrap_or(0)
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}
