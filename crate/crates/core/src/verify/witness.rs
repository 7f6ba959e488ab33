//! Searches for tuples whose spectrum a map does not preserve.
//!
//! Candidates come in a fixed order: one canonical tuple, then a structured
//! enumeration over lines in the `e1, e2` plane with coordinates in
//! `{0, ±1, ±r}`, then seeded random tuples. The budget counts candidates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::formats::{MapFile, TupleFile};
use crate::lattice::Projection;
use crate::maps::{make_induced, ProjectionMap};
use crate::par::map_indexed;
use crate::scalar::{Automorphism, FieldContext, FieldElem};
use crate::spectrum::{compare_zero_sets, pencil_poly, ZeroSetRelation};

use super::gen::{proper_rank, random_projection, random_vector, trial_rng};
use super::{Preservation, TrialConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// One projection of rank `n - 1`, the rest lines.
    MixedTriple,
    /// Lines only.
    RankOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub source: String,
    pub candidates: u64,
    pub relation: Preservation,
    pub tuple: TupleFile,
    pub map: MapFile,
    pub pencil: String,
    pub image_pencil: String,
    pub sf: Option<String>,
    pub image_sf: Option<String>,
}

impl Witness {
    pub fn projections(&self, ctx: FieldContext) -> Result<Vec<Projection>> {
        self.tuple.to_tuple(ctx)
    }
}

const CHUNK: u64 = 64;

struct Search<'a> {
    cfg: &'a TrialConfig,
    family: WitnessFamily,
    structured: Vec<Vec<Projection>>,
}

impl Search<'_> {
    fn ctx(&self) -> FieldContext {
        self.cfg.ctx
    }

    fn unit(&self, i: usize) -> Vec<FieldElem> {
        let ctx = self.ctx();
        (0..self.cfg.n).map(|j| if j == i { ctx.one() } else { ctx.zero() }).collect()
    }

    fn planar(&self, a: &FieldElem, b: &FieldElem) -> Vec<FieldElem> {
        let mut v = vec![a.clone(), b.clone()];
        v.resize(self.cfg.n, self.ctx().zero());
        v
    }

    fn line(&self, v: &[FieldElem]) -> Projection {
        Projection::rank_one(self.ctx(), v).expect("nonzero vector")
    }

    /// `span{v, e3, ..., en}`.
    fn hyperplane(&self, v: &[FieldElem]) -> Projection {
        let mut cols = vec![v.to_vec()];
        cols.extend((2..self.cfg.n).map(|i| self.unit(i)));
        Projection::from_span(&Matrix::from_columns(self.ctx(), self.cfg.n, &cols))
            .expect("independent columns")
    }

    /// Pads with copies of the `e1` line or truncates to length `k`.
    fn fit(&self, mut tuple: Vec<Projection>) -> Vec<Projection> {
        let e1 = self.line(&self.unit(0));
        tuple.resize(self.cfg.k, e1);
        tuple
    }

    fn from_plane(&self, p: &[FieldElem], u: &[FieldElem], w: &[FieldElem]) -> Vec<Projection> {
        match self.family {
            WitnessFamily::MixedTriple => {
                self.fit(vec![self.hyperplane(p), self.line(u), self.line(w)])
            }
            WitnessFamily::RankOne => {
                let mut t = vec![self.line(p), self.line(u), self.line(w)];
                t.extend((2..self.cfg.n).map(|i| self.line(&self.unit(i))));
                self.fit(t)
            }
        }
    }

    fn canonical(&self) -> Vec<Projection> {
        let ctx = self.ctx();
        let p = self.planar(&ctx.one(), &ctx.r());
        self.from_plane(&p, &self.unit(0), &self.planar(&ctx.one(), &ctx.one()))
    }

    fn enumerate(&mut self) {
        let ctx = self.ctx();
        let coords = [ctx.zero(), ctx.one(), -ctx.one(), ctx.r(), -ctx.r()];
        let mut lines: Vec<(Projection, Vec<FieldElem>)> = Vec::new();
        for a in &coords {
            for b in &coords {
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                let v = self.planar(a, b);
                let l = self.line(&v);
                if !lines.iter().any(|(m, _)| *m == l) {
                    lines.push((l, v));
                }
            }
        }
        for (i, (_, p)) in lines.iter().enumerate() {
            for (j, (_, u)) in lines.iter().enumerate() {
                for (k, (_, w)) in lines.iter().enumerate() {
                    if i != j && j != k && i != k {
                        self.structured.push(self.from_plane(p, u, w));
                    }
                }
            }
        }
    }

    fn candidate(&self, idx: u64) -> Result<(String, Vec<Projection>)> {
        if idx == 0 {
            return Ok(("canonical".into(), self.canonical()));
        }
        let s = idx as usize - 1;
        if let Some(t) = self.structured.get(s) {
            return Ok(("structured".into(), t.clone()));
        }
        let mut rng = trial_rng(self.cfg.seed, idx);
        let tuple = (0..self.cfg.k)
            .map(|_| match self.family {
                WitnessFamily::MixedTriple => {
                    let r = proper_rank(self.cfg.n, &mut rng);
                    random_projection(self.cfg, r, &mut rng)
                }
                WitnessFamily::RankOne => {
                    Projection::rank_one(self.ctx(), &random_vector(&self.cfg.entry_pool, self.cfg.n, &mut rng))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(("random".into(), tuple))
    }
}

fn check_candidate(
    map: &ProjectionMap,
    source: String,
    tuple: &[Projection],
    candidates: u64,
) -> Result<Option<Witness>> {
    let before = pencil_poly(tuple)?;
    let after = pencil_poly(&map.apply_tuple(tuple)?)?;
    let relation = match compare_zero_sets(&after, &before)? {
        ZeroSetRelation::Equal => return Ok(None),
        ZeroSetRelation::StrictSubset => Preservation::Shrunk,
        ZeroSetRelation::StrictSuperset => Preservation::Expanded,
        ZeroSetRelation::Incomparable => Preservation::Incomparable,
    };
    Ok(Some(Witness {
        source,
        candidates,
        relation,
        tuple: TupleFile::from_tuple(tuple),
        map: MapFile::from_map(map),
        pencil: before.pencil().to_string(),
        image_pencil: after.pencil().to_string(),
        sf: before.sf().map(ToString::to_string),
        image_sf: after.sf().map(ToString::to_string),
    }))
}

/// First candidate, within `budget`, whose spectrum `map` fails to
/// preserve. `None` when the budget runs out.
pub fn find_witness(
    map: &ProjectionMap,
    family: WitnessFamily,
    cfg: &TrialConfig,
    budget: u64,
) -> Result<Option<Witness>> {
    cfg.validate()?;
    if cfg.k < 3 {
        return Err(Error::Precondition(format!(
            "k = {}: spectra of pairs are preserved by every such map",
            cfg.k
        )));
    }
    if cfg.n < 3 {
        return Err(Error::Precondition(format!("n = {} is below 3", cfg.n)));
    }
    if map.n() != cfg.n {
        return Err(Error::Precondition(format!(
            "map on dimension {} for tuples on dimension {}",
            map.n(),
            cfg.n
        )));
    }
    let mut search = Search { cfg, family, structured: Vec::new() };
    search.enumerate();
    let mut start = 0;
    while start < budget {
        let len = CHUNK.min(budget - start);
        let results = map_indexed(len, cfg.parallel, |i| {
            let idx = start + i;
            let (source, tuple) = search.candidate(idx)?;
            check_candidate(map, source, &tuple, idx + 1)
        });
        for r in results {
            if let Some(w) = r? {
                return Ok(Some(w));
            }
        }
        start += len;
    }
    Ok(None)
}

/// Witness search for `Induced(Flip, I)` over mixed-rank tuples.
pub fn find_flip_witness(cfg: &TrialConfig, budget: u64) -> Result<Option<Witness>> {
    let map = make_induced(Automorphism::Flip, Matrix::identity(cfg.ctx, cfg.n))?;
    find_witness(&map, WitnessFamily::MixedTriple, cfg, budget)
}
