//! Slow reference implementations kept for cross-checking the fast paths.
//! Nothing in the library calls into this module.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::lattice::Projection;
use crate::polyalg::MultiPoly;

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Leibniz expansion `sum_sigma sgn(sigma) prod_j m[sigma(j)][j]`.
pub fn det_leibniz(m: &Matrix) -> Result<crate::scalar::FieldElem> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let ctx = m.ctx();
    let mut total = ctx.zero();
    for perm in (0..n).permutations(n) {
        let mut term = ctx.one();
        for (col, &row) in perm.iter().enumerate() {
            term *= m.get(row, col);
        }
        if permutation_is_odd(&perm) {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// Pencil polynomial `det(sum c_i P_i)` by Leibniz expansion over linear forms.
pub fn pencil_leibniz(tuple: &[Projection]) -> Result<MultiPoly> {
    let first = tuple.first().ok_or(Error::EmptyTuple)?;
    let n = first.dim();
    let k = tuple.len();
    let ctx = first.matrix().ctx();
    let form = |r: usize, c: usize| {
        let mut lf = MultiPoly::zero(ctx, k);
        for (i, p) in tuple.iter().enumerate() {
            lf = &lf + &MultiPoly::var(ctx, k, i).scale(p.matrix().get(r, c));
        }
        lf
    };
    let mut total = MultiPoly::zero(ctx, k);
    for perm in (0..n).permutations(n) {
        let mut term = MultiPoly::one(ctx, k);
        for (col, &row) in perm.iter().enumerate() {
            term = &term * &form(row, col);
        }
        total = if permutation_is_odd(&perm) { &total - &term } else { &total + &term };
    }
    Ok(total)
}
