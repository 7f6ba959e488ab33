//! Random objects for the suites, all drawn from a finite entry pool.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{rank, Matrix};
use crate::lattice::Projection;
use crate::maps::is_scaled_unitary;
use crate::scalar::{FieldContext, FieldElem};

use super::TrialConfig;

/// Stream `stream` of the generator family keyed by `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn pick(pool: &[FieldElem], rng: &mut impl Rng) -> FieldElem {
    pool.choose(rng).expect("nonempty pool").clone()
}

/// Nonzero vector with entries from the pool.
pub fn random_vector(pool: &[FieldElem], n: usize, rng: &mut impl Rng) -> Vec<FieldElem> {
    loop {
        let v: Vec<FieldElem> = (0..n).map(|_| pick(pool, rng)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn random_matrix(pool: &[FieldElem], rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let ctx = pool[0].ctx();
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(pick(pool, rng));
    }
    let mut it = entries.into_iter();
    Matrix::from_fn(ctx, rows, cols, |_, _| it.next().expect("enough entries"))
}

pub fn random_invertible(pool: &[FieldElem], n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(pool, n, n, rng);
        if rank(&m) == n {
            return m;
        }
    }
}

/// Invertible and not a scalar multiple of a unitary.
pub fn random_non_unitary_invertible(pool: &[FieldElem], n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_invertible(pool, n, rng);
        if !is_scaled_unitary(&m) {
            return m;
        }
    }
}

const PYTHAGOREAN: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

/// Unitary over K: a phased permutation times rational plane rotations.
pub fn random_unitary(ctx: FieldContext, n: usize, rng: &mut impl Rng) -> Matrix {
    let phases = [ctx.one(), -ctx.one(), ctx.i(), -ctx.i()];
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<FieldElem> = (0..n).map(|_| phases.choose(rng).unwrap().clone()).collect();
    let mut u = Matrix::from_fn(ctx, n, n, |r, c| {
        if perm[r] == c { signs[r].clone() } else { ctx.zero() }
    });
    for _ in 0..n.min(3) {
        let p = rng.gen_range(0..n);
        let q = (p + rng.gen_range(1..n)) % n;
        let (a, b, c) = *PYTHAGOREAN.choose(rng).unwrap();
        let (ca, sb) = (ctx.ratio(a, c), ctx.ratio(b, c));
        let w = phases.choose(rng).unwrap().clone();
        let mut g = Matrix::identity(ctx, n);
        g.set(p, p, ca.clone());
        g.set(q, q, ca);
        g.set(p, q, -&(&sb * &w.conj()));
        g.set(q, p, &sb * &w);
        u = &u * &g;
    }
    debug_assert!(u.is_unitary());
    u
}

/// Projection of exactly `rank`, spanned by pool vectors redrawn until
/// independent.
pub fn random_projection_in(
    ctx: FieldContext,
    pool: &[FieldElem],
    n: usize,
    rank_wanted: usize,
    rng: &mut impl Rng,
) -> Result<Projection> {
    if rank_wanted > n {
        return Err(Error::Precondition(format!("rank {rank_wanted} on dimension {n}")));
    }
    if rank_wanted == 0 {
        return Ok(Projection::zero(ctx, n));
    }
    if rank_wanted == n {
        return Ok(Projection::identity(ctx, n));
    }
    loop {
        let a = random_matrix(pool, n, rank_wanted, rng);
        if rank(&a) == rank_wanted {
            return Projection::from_span(&a);
        }
    }
}

pub fn random_rank_one_in(ctx: FieldContext, pool: &[FieldElem], n: usize, rng: &mut impl Rng) -> Projection {
    Projection::rank_one(ctx, &random_vector(pool, n, rng)).expect("nonzero vector")
}

pub fn random_projection(cfg: &TrialConfig, rank_wanted: usize, rng: &mut impl Rng) -> Result<Projection> {
    random_projection_in(cfg.ctx, &cfg.entry_pool, cfg.n, rank_wanted, rng)
}

/// Rank drawn uniformly from `1..n`.
pub fn proper_rank(n: usize, rng: &mut impl Rng) -> usize {
    if n < 2 { n } else { rng.gen_range(1..n) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::default_pool;

    #[test]
    fn projection_examples() {
        let cfg = TrialConfig::new(3, 2, 1, 42);
        let mut rng = trial_rng(42, 0);
        assert!(random_projection(&cfg, 0, &mut rng).unwrap().is_zero());
        assert!(random_projection(&cfg, 3, &mut rng).unwrap().is_identity());
        assert!(random_projection(&cfg, 4, &mut rng).is_err());
        let a = random_projection(&cfg, 1, &mut trial_rng(42, 0)).unwrap();
        let b = random_projection(&cfg, 1, &mut trial_rng(42, 0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn streams_differ() {
        let x: u64 = trial_rng(1, 0).gen();
        let y: u64 = trial_rng(1, 1).gen();
        assert_ne!(x, y);
    }

    #[test]
    fn generated_matrices_have_their_properties() {
        let ctx = FieldContext::default();
        let pool = default_pool(ctx);
        for t in 0..30 {
            let mut rng = trial_rng(3, t);
            let n = rng.gen_range(2..=5);
            assert!(random_unitary(ctx, n, &mut rng).is_unitary());
            assert_eq!(rank(&random_invertible(&pool, n, &mut rng)), n);
            assert!(!is_scaled_unitary(&random_non_unitary_invertible(&pool, n, &mut rng)));
            let r = proper_rank(n, &mut rng);
            assert_eq!(random_projection_in(ctx, &pool, n, r, &mut rng).unwrap().rank(), r);
        }
    }
}
