//! The property suites. Each trial is a pure function of
//! `(suite, config, map, trial index)`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{automorphism_entrywise, det, rank, Matrix};
use crate::formats::{MapFile, TupleFile};
use crate::lattice::{join_all, Projection};
use crate::maps::{inner, make_induced, ProjectionMap};
use crate::par::map_indexed;
use crate::scalar::{Automorphism, FieldElem};
use crate::spectrum::{
    classify_rank_one_tuple, compare_zero_sets, coordinate_product, pair_facts, pencil_poly,
    RankOneClass, ZeroSetRelation,
};

use super::gen::{proper_rank, random_matrix, random_projection, random_vector, trial_rng};
use super::{Preservation, TrialConfig, VerificationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Pairs,
    Lemma41,
    Lemma31,
    DetAuto,
    Morphism,
    RankJoin,
    Extension,
    MapPreserve,
    RankOneK,
    FewRankOne,
    RankOneShrink,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Pairs,
        Suite::Lemma41,
        Suite::Lemma31,
        Suite::DetAuto,
        Suite::Morphism,
        Suite::RankJoin,
        Suite::Extension,
        Suite::MapPreserve,
        Suite::RankOneK,
        Suite::FewRankOne,
        Suite::RankOneShrink,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pairs => "pairs",
            Suite::Lemma41 => "lemma41",
            Suite::Lemma31 => "lemma31",
            Suite::DetAuto => "det-auto",
            Suite::Morphism => "morphism",
            Suite::RankJoin => "rank-join",
            Suite::Extension => "extension",
            Suite::MapPreserve => "map-preserve",
            Suite::RankOneK => "rank-one-k",
            Suite::FewRankOne => "few-rank-one",
            Suite::RankOneShrink => "rank-one-shrink",
        }
    }

    pub fn from_name(name: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {name:?}")))
    }

    pub fn uses_map(self) -> bool {
        matches!(
            self,
            Suite::Morphism
                | Suite::RankJoin
                | Suite::Extension
                | Suite::MapPreserve
                | Suite::RankOneK
                | Suite::RankOneShrink
        )
    }

    /// Tuple length the suite actually uses for a configuration.
    fn effective_k(self, cfg: &TrialConfig) -> usize {
        match self {
            Suite::Pairs | Suite::Lemma31 | Suite::Morphism | Suite::Extension => 2,
            Suite::Lemma41 => cfg.n,
            Suite::DetAuto => 1,
            _ => cfg.k,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Skip,
    Fail(Violation),
}

struct Env<'a> {
    suite: Suite,
    cfg: &'a TrialConfig,
    map: ProjectionMap,
}

fn check_preconditions(suite: Suite, cfg: &TrialConfig, map: &ProjectionMap) -> Result<()> {
    cfg.validate()?;
    if suite.uses_map() && map.n() != cfg.n {
        return Err(Error::Precondition(format!(
            "map on dimension {} for trials on dimension {}",
            map.n(),
            cfg.n
        )));
    }
    if map.ctx() != cfg.ctx {
        return Err(Error::ContextMismatch(map.ctx().d(), cfg.ctx.d()));
    }
    let k = cfg.k;
    let bad = |msg: String| Err(Error::Precondition(msg));
    match suite {
        Suite::MapPreserve if k < 2 => bad(format!("k = {k}, need at least 2")),
        Suite::RankOneK if k < cfg.n => bad(format!("k = {k} is below n = {}", cfg.n)),
        Suite::FewRankOne if k == 0 || k >= cfg.n => {
            bad(format!("k = {k} must lie in 1..{}", cfg.n))
        }
        Suite::RankJoin | Suite::RankOneShrink if k == 0 => bad("k = 0".into()),
        _ => Ok(()),
    }
}

fn resolve_map(cfg: &TrialConfig, map: Option<&ProjectionMap>) -> Result<ProjectionMap> {
    match map {
        Some(m) => Ok(m.clone()),
        None => make_induced(Automorphism::Flip, Matrix::identity(cfg.ctx, cfg.n)),
    }
}

/// Runs every trial of a suite. Suites that act through a map use `map`,
/// or `Induced(Flip, I)` when none is given.
pub fn run_suite(
    suite: Suite,
    cfg: &TrialConfig,
    map: Option<&ProjectionMap>,
) -> Result<VerificationReport> {
    let map = resolve_map(cfg, map)?;
    check_preconditions(suite, cfg, &map)?;
    let env = Env { suite, cfg, map };
    let outcomes = map_indexed(cfg.trials, cfg.parallel, |t| env.trial(t));
    let mut tally = BTreeMap::new();
    let mut skipped = 0;
    let mut violations = Vec::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Pass(tag) => *tally.entry(tag).or_insert(0) += 1,
            Outcome::Skip => skipped += 1,
            Outcome::Fail(v) => violations.push(v),
        }
    }
    let mut config = cfg.summary();
    config.k = suite.effective_k(cfg);
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        config,
        map: suite.uses_map().then(|| MapFile::from_map(&env.map)),
        trials: cfg.trials,
        skipped,
        tally,
        passed: violations.is_empty(),
        violations,
    })
}

/// Replays one trial in isolation.
pub fn run_trial(
    suite: Suite,
    cfg: &TrialConfig,
    map: Option<&ProjectionMap>,
    trial: u64,
) -> Result<Outcome> {
    let map = resolve_map(cfg, map)?;
    check_preconditions(suite, cfg, &map)?;
    Ok(Env { suite, cfg, map }.trial(trial))
}

/// What a trial found: a tag for the tally, a skip, or a failure message
/// with the objects involved.
enum Found {
    Pass(String),
    Skip,
    Fail(String, Option<Vec<Projection>>),
}

fn pass(tag: impl Into<String>) -> Result<Found> {
    Ok(Found::Pass(tag.into()))
}

fn fail(msg: impl Into<String>, tuple: &[Projection]) -> Result<Found> {
    Ok(Found::Fail(msg.into(), Some(tuple.to_vec())))
}

impl Env<'_> {
    fn trial(&self, t: u64) -> Outcome {
        let mut rng = trial_rng(self.cfg.seed, t);
        let found = match self.suite {
            Suite::Pairs => self.pairs(t, &mut rng),
            Suite::Lemma41 => self.rank_one_classification(t, &mut rng),
            Suite::Lemma31 => self.norm_identity(t, &mut rng),
            Suite::DetAuto => self.det_automorphism(t, &mut rng),
            Suite::Morphism => self.morphism(&mut rng),
            Suite::RankJoin => self.rank_join(t, &mut rng),
            Suite::Extension => self.extension(t, &mut rng),
            Suite::MapPreserve => self.preservation(false, &mut rng),
            Suite::RankOneK => self.preservation(true, &mut rng),
            Suite::FewRankOne => self.few_rank_one(&mut rng),
            Suite::RankOneShrink => self.shrink_experiment(&mut rng),
        };
        let with_map = self.suite.uses_map().then(|| MapFile::from_map(&self.map));
        let violation = |message: String, tuple: Option<Vec<Projection>>| Violation {
            seed: self.cfg.seed,
            trial: t,
            message,
            tuple: tuple.map(|tp| TupleFile::from_tuple(&tp)),
            map: with_map.clone(),
        };
        match found {
            Ok(Found::Pass(tag)) => Outcome::Pass(tag),
            Ok(Found::Skip) => Outcome::Skip,
            Ok(Found::Fail(msg, tuple)) => Outcome::Fail(violation(msg, tuple)),
            Err(e) => Outcome::Fail(violation(format!("error: {e}"), None)),
        }
    }

    fn n(&self) -> usize {
        self.cfg.n
    }

    fn proper(&self, rng: &mut ChaCha8Rng) -> Result<Projection> {
        let r = proper_rank(self.n(), rng);
        random_projection(self.cfg, r, rng)
    }

    fn any_rank(&self, rng: &mut ChaCha8Rng) -> Result<Projection> {
        let r = rng.gen_range(0..=self.n());
        random_projection(self.cfg, r, rng)
    }

    fn line(&self, v: &[FieldElem]) -> Result<Projection> {
        Projection::rank_one(self.cfg.ctx, v)
    }

    fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        let ctx = self.cfg.ctx;
        (0..self.n()).map(|j| if j == i { ctx.one() } else { ctx.zero() }).collect()
    }

    fn random_line(&self, rng: &mut ChaCha8Rng) -> Result<Projection> {
        self.line(&random_vector(&self.cfg.entry_pool, self.n(), rng))
    }

    /// Trial 0 pairs `P` with itself, trial 1 with its complement.
    fn pairs(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let p = self.proper(rng)?;
        let q = match t {
            0 => p.clone(),
            1 => p.complement(),
            _ => self.proper(rng)?,
        };
        let tuple = [p.clone(), q.clone()];
        let facts = pair_facts(&p, &q)?;
        if !facts.consistent() {
            return fail(format!("lattice and spectrum disagree: {facts:?}"), &tuple);
        }
        if t == 0 && (facts.join_full || facts.point11_out) {
            return fail("a proper projection paired with itself spans", &tuple);
        }
        if t == 1 && !(facts.join_full && facts.meet_zero) {
            return fail("a projection and its complement are not complementary", &tuple);
        }
        if self.n() == 2 && p.rank() == 1 && q.rank() == 1 && p != q {
            let s = pencil_poly(&tuple)?;
            if s.sf() != Some(&coordinate_product(self.cfg.ctx, 2)) {
                return fail(format!("two distinct lines with pencil {}", s.pencil()), &tuple);
            }
        }
        pass(match (facts.join_full, facts.meet_zero) {
            (true, true) => "complementary",
            (true, false) => "spanning",
            (false, true) => "disjoint",
            (false, false) => "overlapping",
        })
    }

    /// Trial 0 is the standard basis, trial 1 a family inside a plane; later
    /// trials are random lines, a quarter of them confined to a hyperplane.
    fn rank_one_classification(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let n = self.n();
        let ctx = self.cfg.ctx;
        let pool = &self.cfg.entry_pool;
        let (tuple, expected) = match t {
            0 => {
                let tuple = (0..n).map(|i| self.line(&self.basis_vector(i))).collect::<Result<Vec<_>>>()?;
                (tuple, Some(RankOneClass::CoordinateHyperplanes))
            }
            1 if n >= 3 => {
                let tuple = (0..n)
                    .map(|_| {
                        let mut v = random_vector(pool, 2, rng);
                        v.resize(n, ctx.zero());
                        self.line(&v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                (tuple, Some(RankOneClass::Full))
            }
            _ => {
                let hole = rng.gen_bool(0.25).then(|| rng.gen_range(0..n));
                let tuple = (0..n)
                    .map(|_| loop {
                        let mut v = random_vector(pool, n, rng);
                        if let Some(j) = hole {
                            v[j] = ctx.zero();
                        }
                        if v.iter().any(|x| !x.is_zero()) {
                            return self.line(&v);
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                (tuple, hole.map(|_| RankOneClass::Full))
            }
        };
        match classify_rank_one_tuple(&tuple) {
            Ok(class) if expected.is_some_and(|e| e != class) => {
                fail(format!("classified {class:?}, expected {expected:?}"), &tuple)
            }
            Ok(RankOneClass::Full) => pass("full"),
            Ok(RankOneClass::CoordinateHyperplanes) => pass("coordinate-hyperplanes"),
            Err(Error::Inconsistent(msg)) => fail(msg, &tuple),
            Err(e) => Err(e),
        }
    }

    /// With `xi` in the range of `E` and `c^2 = <F xi, F xi> / <xi, xi>`,
    /// `R` the line through `xi + F xi` and `t = (1 + 3c^2)/(1 + c^2)`:
    /// `(E + F - tR) xi = 0`, `|xi + F xi|^2 = (1 + 3c^2)|xi|^2` and `t > 1`.
    /// Trial 0 takes `E = F`, so `c^2 = 1`; trial 1 takes `F` orthogonal to
    /// `xi`, which is skipped.
    fn norm_identity(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let ctx = self.cfg.ctx;
        let pool = &self.cfg.entry_pool;
        let (e, f, xi) = match t {
            0 => {
                let e = self.random_line(rng)?;
                let xi = e.range().basis().column(0);
                (e.clone(), e, xi)
            }
            1 => {
                let e = self.line(&self.basis_vector(0))?;
                let f = self.line(&self.basis_vector(1))?;
                (e, f, self.basis_vector(0))
            }
            _ => {
                let mut drawn = None;
                for _ in 0..64 {
                    let e = self.proper(rng)?;
                    let f = self.proper(rng)?;
                    let xi = e.matrix().mul_vec(&random_vector(pool, self.n(), rng))?;
                    let fxi = f.matrix().mul_vec(&xi)?;
                    if fxi.iter().any(|x| !x.is_zero()) {
                        drawn = Some((e, f, xi));
                        break;
                    }
                }
                match drawn {
                    Some(x) => x,
                    None => return Ok(Found::Skip),
                }
            }
        };
        let tuple = [e.clone(), f.clone()];
        let fxi = f.matrix().mul_vec(&xi)?;
        let xx = inner(&xi, &xi);
        let c2 = &inner(&fxi, &fxi) * &xx.inv()?;
        if c2.is_zero() {
            return Ok(Found::Skip);
        }
        let one = ctx.one();
        let three = ctx.int(3);
        let tval = &(&one + &(&three * &c2)) * &(&one + &c2).inv()?;
        let eta: Vec<FieldElem> = xi.iter().zip(&fxi).map(|(a, b)| a + b).collect();
        let r = self.line(&eta)?;
        if inner(&eta, &eta) != &(&one + &(&three * &c2)) * &xx {
            return fail("norm identity fails", &tuple);
        }
        for e_prime in [e.clone(), self.line(&xi)?] {
            let m = e_prime
                .matrix()
                .checked_add(f.matrix())?
                .checked_sub(&r.matrix().scale(&tval))?;
            if m.mul_vec(&xi)?.iter().any(|x| !x.is_zero()) {
                return fail(format!("(E + F - tR) xi is nonzero for t = {tval}"), &tuple);
            }
        }
        let excess = &tval - &one;
        if !excess.is_real() || excess.real_sign() != Some(std::cmp::Ordering::Greater) {
            return fail(format!("t = {tval} is not above 1"), &tuple);
        }
        if t == 0 {
            if c2 != one || tval != ctx.int(2) {
                return fail(format!("E = F gives c^2 = {c2}, t = {tval}"), &tuple);
            }
            return pass("c2=1");
        }
        pass("generic")
    }

    /// `f(det M) = det(f M)` and `rank f M = rank M` for all four
    /// automorphisms. Trial 0 is upper triangular; a quarter of the later
    /// matrices are made singular.
    fn det_automorphism(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let n = self.n();
        let ctx = self.cfg.ctx;
        let pool = &self.cfg.entry_pool;
        let mut m = random_matrix(pool, n, n, rng);
        if t == 0 {
            m = Matrix::from_fn(ctx, n, n, |r, c| if r <= c { m.get(r, c).clone() } else { ctx.zero() });
        } else if n >= 3 && rng.gen_bool(0.25) {
            for c in 0..n {
                let x = m.get(0, c) + m.get(1, c);
                m.set(n - 1, c, x);
            }
        }
        let d = det(&m)?;
        let rk = rank(&m);
        if t == 0 {
            let diag = (0..n).fold(ctx.one(), |acc, i| &acc * m.get(i, i));
            if diag != d {
                return Ok(Found::Fail(format!("triangular determinant {d} is not {diag}"), None));
            }
        }
        for f in Automorphism::ALL {
            let fm = automorphism_entrywise(f, &m);
            if det(&fm)? != f.apply(&d) {
                return Ok(Found::Fail(format!("det does not commute with {f} on {m}"), None));
            }
            if rank(&fm) != rk {
                return Ok(Found::Fail(format!("{f} changes the rank of {m}"), None));
            }
        }
        pass(if d.is_zero() { "singular" } else { "invertible" })
    }

    fn morphism(&self, rng: &mut ChaCha8Rng) -> Result<Found> {
        let phi = &self.map;
        let ctx = self.cfg.ctx;
        let n = self.n();
        let p = self.any_rank(rng)?;
        let q = self.any_rank(rng)?;
        let above = p.join(&self.any_rank(rng)?)?;
        let tuple = [p.clone(), q.clone(), above.clone()];
        let (fp, fq) = (phi.apply(&p)?, phi.apply(&q)?);
        if !phi.apply(&Projection::identity(ctx, n))?.is_identity()
            || !phi.apply(&Projection::zero(ctx, n))?.is_zero()
        {
            return fail("identity or zero not fixed", &tuple);
        }
        if fp.rank() != p.rank() {
            return fail(format!("rank {} sent to rank {}", p.rank(), fp.rank()), &tuple);
        }
        if phi.apply(&p.join(&q)?)? != fp.join(&fq)? {
            return fail("join not preserved", &tuple);
        }
        if phi.apply(&p.meet(&q)?)? != fp.meet(&fq)? {
            return fail("meet not preserved", &tuple);
        }
        if p.leq(&q)? != fp.leq(&fq)? || !fp.leq(&phi.apply(&above)?)? {
            return fail("order not preserved", &tuple);
        }
        if phi.preserves_orthogonality() {
            let orth = p.complement().meet(&q)?;
            if !fp.orthogonal(&phi.apply(&orth)?)? {
                return fail("orthogonality not preserved", &tuple);
            }
        }
        pass("lattice-morphism")
    }

    /// Trial 0 spans with basis lines, trial 1 repeats one line.
    fn rank_join(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let n = self.n();
        let k = self.cfg.k;
        let ctx = self.cfg.ctx;
        let vectors: Vec<Vec<FieldElem>> = match t {
            0 => (0..k).map(|i| self.basis_vector(i % n)).collect(),
            1 => {
                let v = random_vector(&self.cfg.entry_pool, n, rng);
                (0..k).map(|i| v.iter().map(|x| x * &ctx.int(i as i64 + 1)).collect()).collect()
            }
            _ => (0..k).map(|_| random_vector(&self.cfg.entry_pool, n, rng)).collect(),
        };
        let tuple = vectors.iter().map(|v| self.line(v)).collect::<Result<Vec<_>>>()?;
        let images = self.map.apply_tuple(&tuple)?;
        let before = join_all(ctx, n, &tuple)?.rank();
        let after = join_all(ctx, n, &images)?.rank();
        if before != after {
            return fail(format!("join rank {before} sent to {after}"), &tuple);
        }
        if t == 0 && before != n.min(k) {
            return fail(format!("basis lines join to rank {before}"), &tuple);
        }
        if t == 1 && before != 1 {
            return fail(format!("collinear lines join to rank {before}"), &tuple);
        }
        pass(format!("rank={before}"))
    }

    /// Trial 0 extends the identity.
    fn extension(&self, t: u64, rng: &mut ChaCha8Rng) -> Result<Found> {
        let phi = &self.map;
        let p = if t == 0 { Projection::identity(self.cfg.ctx, self.n()) } else { self.any_rank(rng)? };
        let tuple = [p.clone()];
        let joined = match phi.extend_join_checked(&p, rng) {
            Ok(j) => j,
            Err(Error::Inconsistent(msg)) => return fail(msg, &tuple),
            Err(e) => return Err(e),
        };
        if joined != phi.apply(&p)? {
            return fail("join extension differs from the map", &tuple);
        }
        if !phi.preserves_orthogonality() {
            return pass("join");
        }
        match phi.extend_sum(&p) {
            Ok(s) if s == joined => pass("join-and-sum"),
            Ok(_) => fail("sum extension differs from join extension", &tuple),
            Err(Error::NotOrthogonalityPreserving) => {
                fail("orthogonal pieces have non-orthogonal images", &tuple)
            }
            Err(e) => Err(e),
        }
    }

    fn relation(&self, tuple: &[Projection]) -> Result<Preservation> {
        let before = pencil_poly(tuple)?;
        let after = pencil_poly(&self.map.apply_tuple(tuple)?)?;
        Ok(match compare_zero_sets(&after, &before)? {
            ZeroSetRelation::Equal => Preservation::Preserved,
            ZeroSetRelation::StrictSubset => Preservation::Shrunk,
            ZeroSetRelation::StrictSuperset => Preservation::Expanded,
            ZeroSetRelation::Incomparable => Preservation::Incomparable,
        })
    }

    fn tuple(&self, rank_one: bool, rng: &mut ChaCha8Rng) -> Result<Vec<Projection>> {
        (0..self.cfg.k)
            .map(|_| if rank_one { self.random_line(rng) } else { self.proper(rng) })
            .collect()
    }

    fn preservation(&self, rank_one: bool, rng: &mut ChaCha8Rng) -> Result<Found> {
        let tuple = self.tuple(rank_one, rng)?;
        match self.relation(&tuple)? {
            Preservation::Preserved => pass("preserved"),
            other => fail(format!("spectrum {} under the map", other.tag()), &tuple),
        }
    }

    fn few_rank_one(&self, rng: &mut ChaCha8Rng) -> Result<Found> {
        let tuple = self.tuple(true, rng)?;
        if pencil_poly(&tuple)?.is_full() {
            pass("full")
        } else {
            fail(format!("{} lines with a proper spectrum", tuple.len()), &tuple)
        }
    }

    /// Records how rank-one spectra move; asserts nothing.
    fn shrink_experiment(&self, rng: &mut ChaCha8Rng) -> Result<Found> {
        let tuple = self.tuple(true, rng)?;
        pass(self.relation(&tuple)?.tag())
    }
}
