//! Dense exact linear algebra over K.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Automorphism, FieldContext, FieldElem};

/// Row-major dense matrix over K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
    ctx: FieldContext,
}

impl Matrix {
    pub fn zeros(ctx: FieldContext, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![ctx.zero(); rows * cols], ctx }
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Self {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_fn(
        ctx: FieldContext,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries, ctx }
    }

    pub fn from_rows(ctx: FieldContext, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for x in row {
                if x.ctx() != ctx {
                    return Err(Error::ContextMismatch(x.ctx().d(), ctx.d()));
                }
                entries.push(x);
            }
        }
        Ok(Matrix { rows: nrows, cols: ncols, entries, ctx })
    }

    /// Integer entries, convenient for fixtures.
    pub fn from_ints(ctx: FieldContext, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| ctx.int(x)).collect())
            .collect();
        Matrix::from_rows(ctx, rows).expect("rectangular fixture")
    }

    pub fn column_vector(ctx: FieldContext, v: &[FieldElem]) -> Self {
        Matrix::from_fn(ctx, v.len(), 1, |r, _| v[r].clone())
    }

    /// Matrix whose columns are the given vectors, all of length `dim`.
    pub fn from_columns(ctx: FieldContext, dim: usize, columns: &[Vec<FieldElem>]) -> Self {
        Matrix::from_fn(ctx, dim, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn diag(ctx: FieldContext, d: &[FieldElem]) -> Self {
        let n = d.len();
        Matrix::from_fn(ctx, n, n, |r, c| if r == c { d[r].clone() } else { ctx.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> FieldContext {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElem) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<FieldElem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElem::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ctx, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.ctx, self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn map(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            ctx: self.ctx,
        }
    }

    pub fn scale(&self, s: &FieldElem) -> Matrix {
        self.map(|x| x * s)
    }

    pub fn trace(&self) -> FieldElem {
        let mut t = self.ctx.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.ctx, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.ctx.zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Matrix, what: &str, f: impl Fn(&FieldElem, &FieldElem) -> FieldElem) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
            ctx: self.ctx,
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        Ok(Matrix::from_fn(self.ctx, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        }))
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, rhs.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, entries, ctx: self.ctx })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.ctx, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.checked_mul(self).is_ok_and(|sq| sq == *self)
    }

    /// `U* U = I`
    pub fn is_unitary(&self) -> bool {
        self.is_square()
            && self.conj_transpose().checked_mul(self).expect("square")
                == Matrix::identity(self.ctx, self.rows)
    }

    /// Row-reduced echelon form and the pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let x = m.get(row, c) * &inv;
                m.set(row, c, x);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    if !sub.is_zero() {
                        let x = m.get(r, c) - &sub;
                        m.set(r, c, x);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix dimensions")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix dimensions")
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix dimensions")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn det(m: &Matrix) -> Result<FieldElem> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let ctx = m.ctx;
    if n == 0 {
        return Ok(ctx.one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev_inv = ctx.one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    negate = !negate;
                }
                None => return Ok(ctx.zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let x = &(&(a.get(i, j) * &pivot) - &(&aik * a.get(k, j))) * &prev_inv;
                a.set(i, j, x);
            }
            a.set(i, k, ctx.zero());
        }
        prev_inv = pivot.inv().expect("nonzero pivot");
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { -d } else { d })
}

pub fn rank(m: &Matrix) -> usize {
    m.rref().1.len()
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let aug = m.hstack(&Matrix::identity(m.ctx, n))?;
    let (r, pivots) = aug.rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(m.ctx, n, n, |i, j| r.get(i, n + j).clone()))
}

/// Canonical basis of the null space (reduced column echelon form).
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let ctx = m.ctx;
    let raw = Matrix::from_fn(ctx, m.cols, free.len(), |row, k| {
        let f = free[k];
        if row == f {
            ctx.one()
        } else if let Some(pi) = pivots.iter().position(|&p| p == row) {
            -r.get(pi, f)
        } else {
            ctx.zero()
        }
    });
    colspace(&raw).basis
}

/// One exact solution of `m x = v`, or `None` when inconsistent.
pub fn solve(m: &Matrix, v: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
    if v.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {}, matrix has {} rows",
            v.len(),
            m.rows
        )));
    }
    let aug = m.hstack(&Matrix::column_vector(m.ctx, v))?;
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![m.ctx.zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols).clone();
    }
    Ok(Some(x))
}

pub fn conj_transpose(m: &Matrix) -> Matrix {
    m.conj_transpose()
}

/// Orthogonal projection onto the column space of `a`: `A (A*A)^-1 A*`.
/// The columns must be independent; a matrix with no columns gives zero.
pub fn projection_onto(a: &Matrix) -> Result<Matrix> {
    let n = a.rows;
    if a.cols == 0 {
        return Ok(Matrix::zeros(a.ctx, n, n));
    }
    if rank(a) != a.cols {
        return Err(Error::DependentColumns);
    }
    let astar = a.conj_transpose();
    let gram = astar.checked_mul(a)?;
    let gram_inv = inverse(&gram)?;
    a.checked_mul(&gram_inv)?.checked_mul(&astar)
}

pub fn automorphism_entrywise(f: Automorphism, m: &Matrix) -> Matrix {
    m.map(|x| x.apply(f))
}

/// Subspace of K^n, stored by its unique reduced column-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

/// Column space in canonical form.
pub fn colspace(m: &Matrix) -> Subspace {
    let (r, pivots) = m.transpose().rref();
    let basis = Matrix::from_fn(m.ctx, m.rows, pivots.len(), |row, k| r.get(k, row).clone());
    Subspace { ambient_dim: m.rows, basis }
}

impl Subspace {
    pub fn zero(ctx: FieldContext, n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(ctx, n, 0) }
    }

    pub fn full(ctx: FieldContext, n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(ctx, n) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        v.len() == self.ambient_dim
            && solve(&self.basis, v).is_ok_and(|s| s.is_some())
    }

    pub fn projection(&self) -> Matrix {
        projection_onto(&self.basis).expect("echelon basis is independent")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(colspace(&self.basis.hstack(&other.basis)?))
    }

    /// Common kernel of `I - P_V` and `I - P_W`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of K^{} and K^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let id = Matrix::identity(self.basis.ctx, self.ambient_dim);
        let cv = &id - &self.projection();
        let cw = &id - &other.projection();
        Ok(Subspace {
            ambient_dim: self.ambient_dim,
            basis: kernel_basis(&cv.vstack(&cw)?),
        })
    }
}
