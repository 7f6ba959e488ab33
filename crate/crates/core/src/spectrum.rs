//! Joint spectra as zero sets of determinant pencils.
//!
//! `sigma(P_1, ..., P_k)` is the set of `c` in `C^k` for which
//! `c_1 P_1 + ... + c_k P_k` is singular, i.e. the zero set of the pencil
//! polynomial `det(sum c_i P_i)`. The zero polynomial stands for all of `C^k`.
//!
//! Containment of zero sets is decided exactly: for nonzero `p1`,
//! `Z(p1) ⊆ Z(p2)` iff `sf(p1)` divides `p2`. Divisibility and squarefree
//! parts do not change under field extension, so the computation over K
//! settles the statement over the complex numbers.

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::lattice::{join_all, Projection};
use crate::polyalg::{divides, MultiPoly};
use crate::scalar::{FieldContext, FieldElem};

#[derive(Clone, Debug)]
pub struct JointSpectrum {
    n: usize,
    pencil: MultiPoly,
    sf: OnceLock<Option<MultiPoly>>,
}

impl PartialEq for JointSpectrum {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.pencil == other.pencil
    }
}

impl Eq for JointSpectrum {}

impl JointSpectrum {
    /// Wraps an arbitrary polynomial; `n` is only informational here.
    pub fn from_pencil(pencil: MultiPoly, n: usize) -> Self {
        JointSpectrum { n, pencil, sf: OnceLock::new() }
    }

    pub fn k(&self) -> usize {
        self.pencil.nvars()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> FieldContext {
        self.pencil.ctx()
    }

    pub fn pencil(&self) -> &MultiPoly {
        &self.pencil
    }

    pub fn into_pencil(self) -> MultiPoly {
        self.pencil
    }

    /// Canonical squarefree part of the pencil, computed once. `None` for
    /// the full spectrum.
    pub fn sf(&self) -> Option<&MultiPoly> {
        self.sf
            .get_or_init(|| {
                (!self.pencil.is_zero())
                    .then(|| self.pencil.squarefree_part().expect("nonzero polynomial"))
            })
            .as_ref()
    }

    pub fn is_full(&self) -> bool {
        self.pencil.is_zero()
    }

    pub fn member(&self, point: &[FieldElem]) -> Result<bool> {
        Ok(self.pencil.eval(point)?.is_zero())
    }
}

/// `det(sum c_i M_i)` for square matrices of a common size.
///
/// Columns are consumed left to right; a state is the set of rows already
/// used, and each state carries the signed sum of all partial products that
/// reach it. Placing row `r` after the rows in `used` contributes one
/// inversion for each used row above `r`.
pub fn pencil_determinant(matrices: &[Matrix]) -> Result<MultiPoly> {
    let first = matrices.first().ok_or(Error::EmptyTuple)?;
    let n = first.rows();
    let ctx = first.ctx();
    let k = matrices.len();
    for m in matrices {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "pencil members of size {n} and {}",
                m.rows()
            )));
        }
        if m.ctx() != ctx {
            return Err(Error::ContextMismatch(ctx.d(), m.ctx().d()));
        }
    }
    if n > 63 {
        return Err(Error::Precondition("pencil dimension above 63".into()));
    }
    let forms: Vec<Vec<MultiPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut lf = MultiPoly::zero(ctx, k);
                    for (v, m) in matrices.iter().enumerate() {
                        let x = m.get(r, c);
                        if !x.is_zero() {
                            lf = &lf + &MultiPoly::var(ctx, k, v).scale(x);
                        }
                    }
                    lf
                })
                .collect()
        })
        .collect();
    let mut layer: HashMap<u64, MultiPoly> = HashMap::new();
    layer.insert(0, MultiPoly::one(ctx, k));
    for col in 0..n {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (used, acc) in &layer {
            for (row, row_forms) in forms.iter().enumerate() {
                let bit = 1u64 << row;
                let form = &row_forms[col];
                if used & bit != 0 || form.is_zero() {
                    continue;
                }
                let above = (used >> (row + 1)).count_ones();
                let term = acc * form;
                let slot = next.entry(used | bit).or_insert_with(|| MultiPoly::zero(ctx, k));
                *slot = if above % 2 == 1 { &*slot - &term } else { &*slot + &term };
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(layer.remove(&full).unwrap_or_else(|| MultiPoly::zero(ctx, k)))
}

pub fn pencil_poly(tuple: &[Projection]) -> Result<JointSpectrum> {
    let first = tuple.first().ok_or(Error::EmptyTuple)?;
    let matrices: Vec<Matrix> = tuple.iter().map(|p| p.matrix().clone()).collect();
    Ok(JointSpectrum::from_pencil(pencil_determinant(&matrices)?, first.dim()))
}

pub fn member(s: &JointSpectrum, point: &[FieldElem]) -> Result<bool> {
    s.member(point)
}

pub fn is_full(s: &JointSpectrum) -> bool {
    s.is_full()
}

/// `c_1 c_2 ... c_k`.
pub fn coordinate_product(ctx: FieldContext, k: usize) -> MultiPoly {
    MultiPoly::from_terms(ctx, k, [(vec![1; k], ctx.one())]).expect("matching arity")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOneClass {
    Full,
    CoordinateHyperplanes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumClass {
    Full,
    CoordinateHyperplanes,
    Hypersurface,
}

impl SpectrumClass {
    pub fn token(self) -> &'static str {
        match self {
            SpectrumClass::Full => "full",
            SpectrumClass::CoordinateHyperplanes => "coordinate-hyperplanes",
            SpectrumClass::Hypersurface => "hypersurface",
        }
    }
}

impl From<RankOneClass> for SpectrumClass {
    fn from(c: RankOneClass) -> Self {
        match c {
            RankOneClass::Full => SpectrumClass::Full,
            RankOneClass::CoordinateHyperplanes => SpectrumClass::CoordinateHyperplanes,
        }
    }
}

/// Dichotomy for `n` rank-one projections on `C^n`: either the spectrum is
/// everything (ranges do not span) or it is the union of the coordinate
/// hyperplanes. Both descriptions are computed and must agree.
pub fn classify_rank_one_tuple(tuple: &[Projection]) -> Result<RankOneClass> {
    let first = tuple.first().ok_or(Error::EmptyTuple)?;
    let n = first.dim();
    if tuple.len() != n {
        return Err(Error::Precondition(format!(
            "{} projections on a space of dimension {n}",
            tuple.len()
        )));
    }
    if let Some(p) = tuple.iter().find(|p| p.rank() != 1) {
        return Err(Error::Precondition(format!("projection of rank {}", p.rank())));
    }
    let spans = join_all(first.ctx(), n, tuple)?.is_identity();
    let s = pencil_poly(tuple)?;
    match (spans, s.sf()) {
        (false, None) => Ok(RankOneClass::Full),
        (true, Some(sf)) if *sf == coordinate_product(first.ctx(), n) => {
            Ok(RankOneClass::CoordinateHyperplanes)
        }
        (true, Some(sf)) => Err(Error::Inconsistent(format!(
            "ranges span but the spectrum is cut out by {sf}"
        ))),
        (true, None) => Err(Error::Inconsistent("ranges span but the pencil vanishes".into())),
        (false, Some(sf)) => Err(Error::Inconsistent(format!(
            "ranges do not span but the spectrum is cut out by {sf}"
        ))),
    }
}

pub fn classify_spectrum(s: &JointSpectrum) -> SpectrumClass {
    match s.sf() {
        None => SpectrumClass::Full,
        Some(sf) if *sf == coordinate_product(s.ctx(), s.k()) => {
            SpectrumClass::CoordinateHyperplanes
        }
        Some(_) => SpectrumClass::Hypersurface,
    }
}

pub fn classify_tuple(tuple: &[Projection]) -> Result<SpectrumClass> {
    Ok(classify_spectrum(&pencil_poly(tuple)?))
}

/// Necessary condition for `Z(p1) ⊆ Z(p2)` checked on a random line
/// `a + t b`: the restriction of `p2` must vanish at every root of the
/// restriction of `p1`. Returns `true` when containment is ruled out.
/// Never used to accept.
pub fn line_rejects(p1: &MultiPoly, p2: &MultiPoly, rng: &mut impl Rng) -> Result<bool> {
    let ctx = p1.ctx();
    let k = p1.nvars();
    if p2.nvars() != k {
        return Err(Error::NvarsMismatch(p1.nvars(), p2.nvars()));
    }
    let t = MultiPoly::var(ctx, 1, 0);
    let line: Vec<MultiPoly> = (0..k)
        .map(|_| {
            let a = ctx.int(rng.gen_range(-9..=9));
            let b = ctx.int(rng.gen_range(-9..=9));
            &MultiPoly::constant(ctx, 1, a) + &t.scale(&b)
        })
        .collect();
    let restrict = |p: &MultiPoly| -> MultiPoly {
        let mut out = MultiPoly::zero(ctx, 1);
        for (m, c) in p.terms() {
            let mut term = MultiPoly::constant(ctx, 1, c.clone());
            for (l, &e) in line.iter().zip(m.exponents()) {
                if e > 0 {
                    term = &term * &l.pow(e);
                }
            }
            out = &out + &term;
        }
        out
    };
    let g1 = restrict(p1);
    let g2 = restrict(p2);
    if g2.is_zero() {
        return Ok(false);
    }
    if g1.is_zero() {
        return Ok(true);
    }
    Ok(divides(&g1.squarefree_part()?, &g2)?.is_none())
}

const PREFILTER_LINES: usize = 2;

/// Exact test of `Z(p1) ⊆ Z(p2)` with `Z(0)` the whole space.
pub fn poly_zero_set_subset(p1: &MultiPoly, p2: &MultiPoly) -> Result<bool> {
    subset_with_sf(p1, None, p2)
}

fn subset_with_sf(p1: &MultiPoly, sf1: Option<&MultiPoly>, p2: &MultiPoly) -> Result<bool> {
    if p1.nvars() != p2.nvars() {
        return Err(Error::NvarsMismatch(p1.nvars(), p2.nvars()));
    }
    if p1.is_zero() {
        return Ok(p2.is_zero());
    }
    if p2.is_zero() {
        return Ok(true);
    }
    if sf1.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..PREFILTER_LINES {
            if line_rejects(p1, p2, &mut rng)? {
                return Ok(false);
            }
        }
    }
    let owned;
    let sf = match sf1 {
        Some(sf) => sf,
        None => {
            owned = p1.squarefree_part()?;
            &owned
        }
    };
    Ok(divides(sf, p2)?.is_some())
}

pub fn zero_set_subset(s1: &JointSpectrum, s2: &JointSpectrum) -> Result<bool> {
    if s1.k() != s2.k() {
        return Err(Error::NvarsMismatch(s1.k(), s2.k()));
    }
    subset_with_sf(&s1.pencil, s1.sf(), &s2.pencil)
}

pub fn zero_set_equal(s1: &JointSpectrum, s2: &JointSpectrum) -> Result<bool> {
    if s1.k() != s2.k() {
        return Err(Error::NvarsMismatch(s1.k(), s2.k()));
    }
    Ok(match (s1.sf(), s2.sf()) {
        (None, None) => true,
        (Some(a), Some(b)) => a == b,
        _ => false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroSetRelation {
    Equal,
    /// The first set is strictly inside the second.
    StrictSubset,
    StrictSuperset,
    Incomparable,
}

pub fn compare_zero_sets(s1: &JointSpectrum, s2: &JointSpectrum) -> Result<ZeroSetRelation> {
    let sub = zero_set_subset(s1, s2)?;
    let sup = zero_set_subset(s2, s1)?;
    Ok(match (sub, sup) {
        (true, true) => ZeroSetRelation::Equal,
        (true, false) => ZeroSetRelation::StrictSubset,
        (false, true) => ZeroSetRelation::StrictSuperset,
        (false, false) => ZeroSetRelation::Incomparable,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PairFacts {
    pub join_full: bool,
    pub meet_zero: bool,
    pub point11_out: bool,
    pub point1m1_out: bool,
}

impl PairFacts {
    /// `P∨Q = I ⟺ (1,1) ∉ σ` and `(P∨Q = I ∧ P∧Q = 0) ⟺ (1,±1) ∉ σ`.
    pub fn consistent(&self) -> bool {
        self.join_full == self.point11_out
            && (self.join_full && self.meet_zero) == (self.point11_out && self.point1m1_out)
    }
}

pub fn pair_facts(p: &Projection, q: &Projection) -> Result<PairFacts> {
    p.check_dim(q)?;
    let ctx = p.ctx();
    let s = pencil_poly(&[p.clone(), q.clone()])?;
    Ok(PairFacts {
        join_full: p.join(q)?.is_identity(),
        meet_zero: p.meet(q)?.is_zero(),
        point11_out: !s.member(&[ctx.one(), ctx.one()])?,
        point1m1_out: !s.member(&[ctx.one(), ctx.int(-1)])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::det;
    use crate::oracle::pencil_leibniz;
    use crate::verify::gen::{random_matrix, random_projection_in, random_rank_one_in, trial_rng};
    use crate::verify::default_pool;

    fn ctx() -> FieldContext {
        FieldContext::default()
    }

    fn poly(text: &str, k: usize) -> MultiPoly {
        MultiPoly::parse(text, ctx(), k).unwrap()
    }

    fn e(n: usize, i: usize) -> Projection {
        let mut flags = vec![false; n];
        flags[i] = true;
        Projection::coordinate(ctx(), &flags)
    }

    fn line(v: &[&str]) -> Projection {
        let v: Vec<FieldElem> = v.iter().map(|s| ctx().parse(s).unwrap()).collect();
        Projection::rank_one(ctx(), &v).unwrap()
    }

    fn spec(text: &str, k: usize) -> JointSpectrum {
        JointSpectrum::from_pencil(poly(text, k), 0)
    }

    #[test]
    fn pencil_examples() {
        let s = pencil_poly(&[e(2, 0), e(2, 1)]).unwrap();
        assert_eq!(s.pencil(), &poly("c1*c2", 2));
        let p = line(&["1", "1", "0"]);
        assert!(pencil_poly(&[p.clone(), p]).unwrap().is_full());
        let s3 = pencil_poly(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(s3.pencil().to_string(), "c1*c2*c3");
        assert_eq!(pencil_poly(&[]), Err(Error::EmptyTuple));
        assert!(matches!(pencil_poly(&[e(2, 0), e(3, 0)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn member_examples() {
        let k = ctx();
        let s = pencil_poly(&[e(2, 0), e(2, 1)]).unwrap();
        assert!(!s.member(&[k.one(), k.one()]).unwrap());
        assert!(s.member(&[k.one(), k.zero()]).unwrap());
        let s3 = pencil_poly(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap();
        assert!(!s3.member(&[k.one(), k.one(), k.int(-2)]).unwrap());
        assert!(s3.member(&[k.one()]).is_err());
    }

    #[test]
    fn is_full_examples() {
        assert!(!pencil_poly(&[e(2, 0), e(2, 1)]).unwrap().is_full());
        let t = [e(3, 0), e(3, 1), line(&["1", "1", "0"])];
        assert!(pencil_poly(&t).unwrap().is_full());
    }

    #[test]
    fn rank_one_examples() {
        assert_eq!(
            classify_rank_one_tuple(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap(),
            RankOneClass::CoordinateHyperplanes
        );
        assert_eq!(
            classify_rank_one_tuple(&[e(3, 0), e(3, 1), line(&["1", "1", "0"])]).unwrap(),
            RankOneClass::Full
        );
        let t = [line(&["1", "r", "0"]), e(3, 1), e(3, 2)];
        assert_eq!(classify_rank_one_tuple(&t).unwrap(), RankOneClass::CoordinateHyperplanes);
        // the pencil is a scalar multiple of c1*c2*c3
        let s = pencil_poly(&t).unwrap();
        assert_eq!(s.pencil().terms().count(), 1);
        let wide = Projection::coordinate(ctx(), &[true, true, false]);
        assert!(matches!(
            classify_rank_one_tuple(&[wide, e(3, 1), e(3, 2)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(classify_rank_one_tuple(&[e(3, 0), e(3, 1)]), Err(Error::Precondition(_))));
    }

    #[test]
    fn classification_tokens() {
        assert_eq!(classify_tuple(&[e(2, 0), e(2, 1)]).unwrap().token(), "coordinate-hyperplanes");
        let p = line(&["1", "1"]);
        assert_eq!(classify_tuple(&[p.clone(), p]).unwrap().token(), "full");
        let wide = Projection::coordinate(ctx(), &[true, true, false]);
        let t = [wide, line(&["1", "0", "1"])];
        assert_eq!(classify_tuple(&t).unwrap().token(), "coordinate-hyperplanes");
        let t = [e(2, 0), e(2, 1), line(&["1", "1"])];
        assert_eq!(classify_tuple(&t).unwrap().token(), "hypersurface");
    }

    #[test]
    fn subset_examples() {
        assert!(zero_set_subset(&spec("c1*c2", 3), &spec("c1*c2*c3", 3)).unwrap());
        assert!(!zero_set_subset(&spec("c1", 2), &spec("c2", 2)).unwrap());
        assert!(zero_set_equal(&spec("c1^2*c2", 2), &spec("c1*c2^2", 2)).unwrap());
        let zero = JointSpectrum::from_pencil(MultiPoly::zero(ctx(), 2), 0);
        assert!(zero_set_subset(&spec("c1", 2), &zero).unwrap());
        assert!(!zero_set_subset(&zero, &spec("c1", 2)).unwrap());
        assert!(zero_set_subset(&zero, &zero).unwrap());
        assert!(zero_set_subset(&spec("c1", 2), &spec("c1", 3)).is_err());
        assert_eq!(
            compare_zero_sets(&spec("c1*c2", 2), &spec("c1", 2)).unwrap(),
            ZeroSetRelation::StrictSuperset
        );
        assert_eq!(
            compare_zero_sets(&spec("c1 + c2", 2), &spec("c1 - c2", 2)).unwrap(),
            ZeroSetRelation::Incomparable
        );
    }

    #[test]
    fn prefilter_never_rejects_a_true_containment() {
        let mut rng = trial_rng(5, 0);
        let f = poly("c1 + r*c2", 3);
        let cases = [
            (poly("c1*c2", 3), poly("c1^2*c2*c3", 3)),
            (f.clone(), &(&f * &f) * &poly("c3", 3)),
            (poly("c1*c2", 3), MultiPoly::zero(ctx(), 3)),
        ];
        for (p1, p2) in &cases {
            for _ in 0..20 {
                assert!(!line_rejects(p1, p2, &mut rng).unwrap());
            }
        }
        assert!((0..5).any(|_| line_rejects(&poly("c1", 2), &poly("c2", 2), &mut rng).unwrap()));
    }

    #[test]
    fn pair_facts_examples() {
        let f = pair_facts(&e(2, 0), &e(2, 1)).unwrap();
        assert!(f.join_full && f.meet_zero && f.point11_out && f.point1m1_out);
        let g = pair_facts(&e(2, 0), &e(2, 0)).unwrap();
        assert!(!g.join_full && !g.meet_zero && !g.point11_out && !g.point1m1_out);
        let p = Projection::coordinate(ctx(), &[true, true, false]);
        let h = pair_facts(&p, &line(&["0", "1", "1"])).unwrap();
        assert!(h.join_full && h.meet_zero && h.consistent());
    }

    #[test]
    fn pencil_is_homogeneous_and_matches_det() {
        let pool = default_pool(ctx());
        for trial in 0..200u64 {
            let mut rng = trial_rng(11, trial);
            let n = rng.gen_range(2..=4);
            let k = rng.gen_range(1..=3);
            let tuple: Vec<Projection> = (0..k)
                .map(|_| {
                    let r = rng.gen_range(1..n);
                    random_projection_in(ctx(), &pool, n, r, &mut rng).unwrap()
                })
                .collect();
            let s = pencil_poly(&tuple).unwrap();
            if !s.is_full() {
                assert!(s.pencil().is_homogeneous());
                assert_eq!(s.pencil().total_degree(), Some(n as u32));
            }
            let point: Vec<FieldElem> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
            let mut combo = Matrix::zeros(ctx(), n, n);
            for (c, p) in point.iter().zip(&tuple) {
                combo = &combo + &p.matrix().scale(c);
            }
            let d = det(&combo).unwrap();
            assert_eq!(s.pencil().eval(&point).unwrap(), d);
            assert_eq!(s.member(&point).unwrap(), d.is_zero());
        }
    }

    #[test]
    fn subset_dp_matches_leibniz() {
        let pool = default_pool(ctx());
        for trial in 0..50u64 {
            let mut rng = trial_rng(12, trial);
            let n = rng.gen_range(2..=4);
            let k = rng.gen_range(1..=3);
            let mats: Vec<Matrix> = (0..k).map(|_| random_matrix(&pool, n, n, &mut rng)).collect();
            let tuple: Vec<Projection> = (0..k)
                .map(|_| {
                    let r = rng.gen_range(0..=n);
                    random_projection_in(ctx(), &pool, n, r, &mut rng).unwrap()
                })
                .collect();
            assert_eq!(pencil_poly(&tuple).unwrap().into_pencil(), pencil_leibniz(&tuple).unwrap());
            let general = pencil_determinant(&mats).unwrap();
            let k_ = ctx();
            let point: Vec<FieldElem> = (0..k).map(|i| k_.int(i as i64 + 2)).collect();
            let mut combo = Matrix::zeros(k_, n, n);
            for (c, m) in point.iter().zip(&mats) {
                combo = &combo + &m.scale(c);
            }
            assert_eq!(general.eval(&point).unwrap(), det(&combo).unwrap());
        }
    }

    #[test]
    fn pair_equivalences_hold() {
        let pool = default_pool(ctx());
        for n in 3..=5 {
            for trial in 0..200u64 {
                let mut rng = trial_rng(13 + n as u64, trial);
                let rp = rng.gen_range(0..=n);
                let rq = rng.gen_range(0..=n);
                let p = random_projection_in(ctx(), &pool, n, rp, &mut rng).unwrap();
                let q = random_projection_in(ctx(), &pool, n, rq, &mut rng).unwrap();
                assert!(pair_facts(&p, &q).unwrap().consistent());
            }
        }
    }

    #[test]
    fn rank_one_dichotomy_holds() {
        let pool = default_pool(ctx());
        for n in 3..=4 {
            for trial in 0..100u64 {
                let mut rng = trial_rng(17 + n as u64, trial);
                let tuple: Vec<Projection> = (0..n)
                    .map(|_| random_rank_one_in(ctx(), &pool, n, &mut rng))
                    .collect();
                classify_rank_one_tuple(&tuple).unwrap();
            }
        }
    }

    #[test]
    fn zero_set_relations_are_orders() {
        let pool = default_pool(ctx());
        let mut spectra = Vec::new();
        for trial in 0..24u64 {
            let mut rng = trial_rng(19, trial);
            let tuple: Vec<Projection> = (0..2)
                .map(|_| {
                    let r = rng.gen_range(1..3);
                    random_projection_in(ctx(), &pool, 3, r, &mut rng).unwrap()
                })
                .collect();
            spectra.push(pencil_poly(&tuple).unwrap());
        }
        let mut rng = trial_rng(20, 0);
        for _ in 0..50 {
            let a = &spectra[rng.gen_range(0..spectra.len())];
            let b = &spectra[rng.gen_range(0..spectra.len())];
            let c = &spectra[rng.gen_range(0..spectra.len())];
            assert!(zero_set_equal(a, a).unwrap());
            assert_eq!(zero_set_equal(a, b).unwrap(), zero_set_equal(b, a).unwrap());
            if zero_set_equal(a, b).unwrap() && zero_set_equal(b, c).unwrap() {
                assert!(zero_set_equal(a, c).unwrap());
            }
            if zero_set_subset(a, b).unwrap() && zero_set_subset(b, c).unwrap() {
                assert!(zero_set_subset(a, c).unwrap());
            }
            let both = zero_set_subset(a, b).unwrap() && zero_set_subset(b, a).unwrap();
            assert_eq!(both, zero_set_equal(a, b).unwrap());
        }
    }
}
