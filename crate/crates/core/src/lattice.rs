//! Hermitian idempotents over K and their lattice operations.

use crate::error::{Error, Result};
use crate::exactla::{colspace, kernel_basis, projection_onto, rank, Matrix, Subspace};
use crate::scalar::{FieldContext, FieldElem};

/// An orthogonal projection. Equality is exact matrix equality, which is
/// equality of ranges because the projection onto a subspace is unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Projection {
    matrix: Matrix,
}

impl Projection {
    /// Validates `P^2 = P` and `P* = P`.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        if !matrix.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        Ok(Projection { matrix })
    }

    pub(crate) fn new_unchecked(matrix: Matrix) -> Self {
        debug_assert!(matrix.is_hermitian() && matrix.is_idempotent());
        Projection { matrix }
    }

    pub fn zero(ctx: FieldContext, n: usize) -> Self {
        Projection { matrix: Matrix::zeros(ctx, n, n) }
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Self {
        Projection { matrix: Matrix::identity(ctx, n) }
    }

    /// Projection onto the line spanned by `v`.
    pub fn rank_one(ctx: FieldContext, v: &[FieldElem]) -> Result<Self> {
        if v.iter().all(FieldElem::is_zero) {
            return Err(Error::ZeroVector);
        }
        Projection::from_span(&Matrix::column_vector(ctx, v))
    }

    /// Projection onto the column space of `a`; columns must be independent.
    pub fn from_span(a: &Matrix) -> Result<Self> {
        Ok(Projection { matrix: projection_onto(a)? })
    }

    /// Projection onto the column space of `a`, with no independence requirement.
    pub fn onto_columns_of(a: &Matrix) -> Self {
        Projection::from_span(colspace(a).basis()).expect("echelon basis is independent")
    }

    /// Standard coordinate projection `diag(flags)`.
    pub fn coordinate(ctx: FieldContext, flags: &[bool]) -> Self {
        let diag: Vec<FieldElem> =
            flags.iter().map(|&f| if f { ctx.one() } else { ctx.zero() }).collect();
        Projection { matrix: Matrix::diag(ctx, &diag) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn ctx(&self) -> FieldContext {
        self.matrix.ctx()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.ctx(), self.dim())
    }

    pub fn range(&self) -> Subspace {
        colspace(&self.matrix)
    }

    /// `I - P`
    pub fn complement(&self) -> Projection {
        let id = Matrix::identity(self.ctx(), self.dim());
        Projection { matrix: &id - &self.matrix }
    }

    pub fn check_dim(&self, other: &Projection) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "projections on K^{} and K^{}",
                self.dim(),
                other.dim()
            )));
        }
        if self.ctx() != other.ctx() {
            return Err(Error::ContextMismatch(self.ctx().d(), other.ctx().d()));
        }
        Ok(())
    }

    /// Projection onto `Range(P) + Range(Q)`.
    pub fn join(&self, other: &Projection) -> Result<Projection> {
        self.check_dim(other)?;
        Ok(Projection::onto_columns_of(&self.matrix.hstack(&other.matrix)?))
    }

    /// Projection onto `Range(P) ∩ Range(Q)`, the common kernel of `I-P`, `I-Q`.
    pub fn meet(&self, other: &Projection) -> Result<Projection> {
        self.check_dim(other)?;
        let stacked = self.complement().matrix.vstack(&other.complement().matrix)?;
        Projection::from_span(&kernel_basis(&stacked))
    }

    /// `P <= Q` iff `PQ = P`.
    pub fn leq(&self, other: &Projection) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.matrix.checked_mul(&other.matrix)? == self.matrix)
    }

    /// `PQ = 0`.
    pub fn orthogonal(&self, other: &Projection) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.matrix.checked_mul(&other.matrix)?.is_zero())
    }
}

pub fn make_projection(m: Matrix) -> Result<Projection> {
    Projection::new(m)
}

pub fn rank_one(ctx: FieldContext, v: &[FieldElem]) -> Result<Projection> {
    Projection::rank_one(ctx, v)
}

pub fn from_span(a: &Matrix) -> Result<Projection> {
    Projection::from_span(a)
}

pub fn complement(p: &Projection) -> Projection {
    p.complement()
}

pub fn join(p: &Projection, q: &Projection) -> Result<Projection> {
    p.join(q)
}

pub fn meet(p: &Projection, q: &Projection) -> Result<Projection> {
    p.meet(q)
}

pub fn leq(p: &Projection, q: &Projection) -> Result<bool> {
    p.leq(q)
}

pub fn orthogonal(p: &Projection, q: &Projection) -> Result<bool> {
    p.orthogonal(q)
}

pub fn rank_of(p: &Projection) -> usize {
    p.rank()
}

/// Join of a nonempty family; the zero projection of `K^n` for an empty one.
pub fn join_all(ctx: FieldContext, n: usize, ps: &[Projection]) -> Result<Projection> {
    if ps.is_empty() {
        return Ok(Projection::zero(ctx, n));
    }
    let mut stacked = ps[0].matrix.clone();
    for p in &ps[1..] {
        if p.dim() != n {
            return Err(Error::DimensionMismatch(format!("projection on K^{} in K^{n} join", p.dim())));
        }
        stacked = stacked.hstack(&p.matrix)?;
    }
    Ok(Projection::onto_columns_of(&stacked))
}
