//! Structured maps on projections and their rank-one extensions.
//!
//! An induced map sends `P` to the projection onto `B f(Range P)`, with `f`
//! applied to coordinates in the standard basis. Unitary conjugation sends
//! `P` to `U* P U`; the anti-unitary variant is `xi ↦ U conj(xi)`, which sends
//! `P` to `conj(U* P U)`.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::{automorphism_entrywise, inverse, rank, Matrix};
use crate::lattice::Projection;
use crate::scalar::{Automorphism, FieldContext, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    UnitaryConj(Matrix),
    AntiUnitaryConj(Matrix),
    Induced(Automorphism, Matrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionMap {
    kind: MapKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapClass {
    UnitaryForm,
    AntiUnitaryForm,
    WildPairPreserving,
}

impl MapClass {
    pub fn token(self) -> &'static str {
        match self {
            MapClass::UnitaryForm => "unitary-form",
            MapClass::AntiUnitaryForm => "anti-unitary-form",
            MapClass::WildPairPreserving => "wild-pair-preserving",
        }
    }
}

/// `B* B = lambda I` for some scalar `lambda`.
pub fn is_scaled_unitary(b: &Matrix) -> bool {
    if !b.is_square() || b.rows() == 0 {
        return b.is_square();
    }
    let g = &b.conj_transpose() * b;
    let lambda = g.get(0, 0).clone();
    !lambda.is_zero() && g == Matrix::identity(b.ctx(), b.rows()).scale(&lambda)
}

pub fn make_unitary_conj(u: Matrix, anti: bool) -> Result<ProjectionMap> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
    }
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let kind = if anti { MapKind::AntiUnitaryConj(u) } else { MapKind::UnitaryConj(u) };
    Ok(ProjectionMap { kind })
}

pub fn make_induced(f: Automorphism, b: Matrix) -> Result<ProjectionMap> {
    if !b.is_square() {
        return Err(Error::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    if rank(&b) != b.rows() {
        return Err(Error::Singular);
    }
    Ok(ProjectionMap { kind: MapKind::Induced(f, b) })
}

impl ProjectionMap {
    pub fn identity(ctx: FieldContext, n: usize) -> Self {
        ProjectionMap { kind: MapKind::Induced(Automorphism::Id, Matrix::identity(ctx, n)) }
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn matrix(&self) -> &Matrix {
        match &self.kind {
            MapKind::UnitaryConj(u) | MapKind::AntiUnitaryConj(u) | MapKind::Induced(_, u) => u,
        }
    }

    pub fn n(&self) -> usize {
        self.matrix().rows()
    }

    pub fn ctx(&self) -> FieldContext {
        self.matrix().ctx()
    }

    /// The vector map underlying the projection map: its image of `v`.
    pub fn vector_image(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        Ok(match &self.kind {
            MapKind::UnitaryConj(u) => u.conj_transpose().mul_vec(v)?,
            MapKind::AntiUnitaryConj(u) => {
                u.conj_transpose().mul_vec(v)?.iter().map(FieldElem::conj).collect()
            }
            MapKind::Induced(f, b) => {
                let fv: Vec<FieldElem> = v.iter().map(|x| f.apply(x)).collect();
                b.mul_vec(&fv)?
            }
        })
    }

    fn image_of_columns(&self, a: &Matrix) -> Result<Matrix> {
        Ok(match &self.kind {
            MapKind::UnitaryConj(u) => u.conj_transpose().checked_mul(a)?,
            MapKind::AntiUnitaryConj(u) => {
                automorphism_entrywise(Automorphism::Conj, &u.conj_transpose().checked_mul(a)?)
            }
            MapKind::Induced(f, b) => b.checked_mul(&automorphism_entrywise(*f, a))?,
        })
    }

    fn check_dim(&self, p: &Projection) -> Result<()> {
        if p.dim() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "map on dimension {} applied to projection on dimension {}",
                self.n(),
                p.dim()
            )));
        }
        Ok(())
    }

    pub fn apply(&self, p: &Projection) -> Result<Projection> {
        self.check_dim(p)?;
        match &self.kind {
            MapKind::UnitaryConj(u) => {
                let m = u.conj_transpose().checked_mul(p.matrix())?.checked_mul(u)?;
                Ok(Projection::new_unchecked(m))
            }
            MapKind::AntiUnitaryConj(u) => {
                let m = u.conj_transpose().checked_mul(p.matrix())?.checked_mul(u)?;
                Ok(Projection::new_unchecked(automorphism_entrywise(Automorphism::Conj, &m)))
            }
            MapKind::Induced(..) => {
                Projection::from_span(&self.image_of_columns(p.range().basis())?)
            }
        }
    }

    pub fn apply_tuple(&self, tuple: &[Projection]) -> Result<Vec<Projection>> {
        tuple.iter().map(|p| self.apply(p)).collect()
    }

    pub fn rank_one_image(&self, v: &[FieldElem]) -> Result<Projection> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a map on dimension {}",
                v.len(),
                self.n()
            )));
        }
        if v.iter().all(FieldElem::is_zero) {
            return Err(Error::ZeroVector);
        }
        Projection::rank_one(self.ctx(), &self.vector_image(v)?)
    }

    pub fn classify(&self) -> MapClass {
        match &self.kind {
            MapKind::UnitaryConj(_) => MapClass::UnitaryForm,
            MapKind::AntiUnitaryConj(_) => MapClass::AntiUnitaryForm,
            MapKind::Induced(Automorphism::Id, b) if is_scaled_unitary(b) => MapClass::UnitaryForm,
            MapKind::Induced(Automorphism::Conj, b) if is_scaled_unitary(b) => {
                MapClass::AntiUnitaryForm
            }
            MapKind::Induced(..) => MapClass::WildPairPreserving,
        }
    }

    /// Orthogonal projections go to orthogonal projections. Every automorphism
    /// of K commutes with conjugation, so for induced maps this depends on
    /// `B` alone.
    pub fn preserves_orthogonality(&self) -> bool {
        match &self.kind {
            MapKind::UnitaryConj(_) | MapKind::AntiUnitaryConj(_) => true,
            MapKind::Induced(_, b) => is_scaled_unitary(b),
        }
    }

    /// Join of the images of the rank-one pieces of an echelon basis of
    /// `Range P`.
    pub fn extend_join(&self, p: &Projection) -> Result<Projection> {
        self.join_of_images(p, p.range().basis())
    }

    /// `extend_join` recomputed from a random recombination of the range
    /// basis; disagreement is reported as an inconsistency.
    pub fn extend_join_checked(&self, p: &Projection, rng: &mut impl Rng) -> Result<Projection> {
        let first = self.extend_join(p)?;
        let basis = p.range().basis().clone();
        let m = basis.cols();
        let ctx = self.ctx();
        let mix = loop {
            let r = Matrix::from_fn(ctx, m, m, |_, _| ctx.int(rng.gen_range(-3..=3)));
            if rank(&r) == m {
                break r;
            }
        };
        let second = self.join_of_images(p, &basis.checked_mul(&mix)?)?;
        if first != second {
            return Err(Error::Inconsistent(
                "join extension depends on the rank-one decomposition".into(),
            ));
        }
        Ok(first)
    }

    fn join_of_images(&self, p: &Projection, basis: &Matrix) -> Result<Projection> {
        self.check_dim(p)?;
        let mut acc = Projection::zero(self.ctx(), self.n());
        for v in basis.columns() {
            acc = acc.join(&self.rank_one_image(&v)?)?;
        }
        Ok(acc)
    }

    /// Sum of the images of an orthogonal rank-one decomposition of `P`.
    pub fn extend_sum(&self, p: &Projection) -> Result<Projection> {
        self.check_dim(p)?;
        let pieces = orthogonal_basis(&p.range().basis().columns());
        let images: Vec<Projection> =
            pieces.iter().map(|v| self.rank_one_image(v)).collect::<Result<_>>()?;
        for (i, a) in images.iter().enumerate() {
            for b in &images[i + 1..] {
                if !a.orthogonal(b)? {
                    return Err(Error::NotOrthogonalityPreserving);
                }
            }
        }
        let mut sum = Matrix::zeros(self.ctx(), self.n(), self.n());
        for q in &images {
            sum = sum.checked_add(q.matrix())?;
        }
        Projection::new(sum)
    }

    /// The inverse map, which is of the same kind.
    pub fn inverse(&self) -> Result<ProjectionMap> {
        Ok(ProjectionMap {
            kind: match &self.kind {
                MapKind::UnitaryConj(u) => MapKind::UnitaryConj(u.conj_transpose()),
                MapKind::AntiUnitaryConj(u) => MapKind::AntiUnitaryConj(
                    automorphism_entrywise(Automorphism::Conj, &u.conj_transpose()),
                ),
                MapKind::Induced(f, b) => {
                    let g = f.inverse();
                    MapKind::Induced(g, automorphism_entrywise(g, &inverse(b)?))
                }
            },
        })
    }
}

/// Gram-Schmidt without normalization, so everything stays in K.
pub fn orthogonal_basis(vectors: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let mut out: Vec<Vec<FieldElem>> = Vec::new();
    let mut norms: Vec<FieldElem> = Vec::new();
    for v in vectors {
        let mut u = v.clone();
        for (w, nw) in out.iter().zip(&norms) {
            let coef = &inner(w, v) * &nw.inv().expect("nonzero norm");
            for (ui, wi) in u.iter_mut().zip(w) {
                *ui -= &coef * wi;
            }
        }
        if u.iter().all(FieldElem::is_zero) {
            continue;
        }
        norms.push(inner(&u, &u));
        out.push(u);
    }
    out
}

/// `<u, v> = sum conj(u_j) v_j`.
pub fn inner(u: &[FieldElem], v: &[FieldElem]) -> FieldElem {
    let ctx = u.first().or(v.first()).map(FieldElem::ctx).unwrap_or_default();
    u.iter().zip(v).fold(ctx.zero(), |acc, (a, b)| &acc + &(&a.conj() * b))
}

pub fn apply_map(m: &ProjectionMap, p: &Projection) -> Result<Projection> {
    m.apply(p)
}

pub fn rank_one_image(m: &ProjectionMap, v: &[FieldElem]) -> Result<Projection> {
    m.rank_one_image(v)
}

pub fn extend_join(m: &ProjectionMap, p: &Projection) -> Result<Projection> {
    m.extend_join(p)
}

pub fn extend_sum(m: &ProjectionMap, p: &Projection) -> Result<Projection> {
    m.extend_sum(p)
}

pub fn classify_map(m: &ProjectionMap) -> MapClass {
    m.classify()
}

impl fmt::Display for ProjectionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MapKind::UnitaryConj(u) => write!(f, "unitary conjugation by {u}"),
            MapKind::AntiUnitaryConj(u) => write!(f, "anti-unitary conjugation by {u}"),
            MapKind::Induced(g, b) => write!(f, "induced by {g} with basis {b}"),
        }
    }
}
