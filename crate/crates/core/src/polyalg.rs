//! Sparse multivariate polynomials over K: arithmetic, exact division,
//! GCD, squarefree part and canonical scaling.
//!
//! Terms are kept in a `BTreeMap` under graded lexicographic order, so the
//! last entry is always the leading term.
//!
//! The GCD recurses on variables: split off monomial content, take contents
//! and primitive parts with respect to a main variable, and run a
//! subresultant remainder sequence on the primitive parts. Squarefree parts
//! use `p / gcd(p, dp/dc_1, ..., dp/dc_k)` iterated until stable, which is
//! valid in characteristic zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Cursor, FieldContext, FieldElem};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `c_1, ..., c_nvars` with coefficients in K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    ctx: FieldContext,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl MultiPoly {
    pub fn zero(ctx: FieldContext, nvars: usize) -> Self {
        MultiPoly { nvars, ctx, terms: BTreeMap::new() }
    }

    pub fn constant(ctx: FieldContext, nvars: usize, c: FieldElem) -> Self {
        let mut p = MultiPoly::zero(ctx, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(ctx: FieldContext, nvars: usize) -> Self {
        MultiPoly::constant(ctx, nvars, ctx.one())
    }

    /// The variable `c_{v+1}` (zero-based index `v`).
    pub fn var(ctx: FieldContext, nvars: usize, v: usize) -> Self {
        MultiPoly::monomial(ctx, Monomial::var(nvars, v), ctx.one())
    }

    pub fn monomial(ctx: FieldContext, m: Monomial, c: FieldElem) -> Self {
        let mut p = MultiPoly::zero(ctx, m.0.len());
        p.add_term(m, c);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; like terms are combined.
    pub fn from_terms(
        ctx: FieldContext,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, FieldElem)>,
    ) -> Result<Self> {
        let mut p = MultiPoly::zero(ctx, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::NvarsMismatch(e.len(), nvars));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> FieldContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> FieldElem {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Nonzero and every term of the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => false,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(self.ctx.d(), other.ctx.d()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &FieldElem) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        out
    }

    fn mul_monomial(&self, m: &Monomial, s: &FieldElem) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        out.terms = self.terms.iter().map(|(t, c)| (t.mul(m), c * s)).collect();
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.ctx, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(point.len(), self.nvars));
        }
        let mut total = self.ctx.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= x.pow(e);
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn partial_derivative(&self, v: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[v] -= 1;
            out.add_term(dm, c * &self.ctx.int(e as i64));
        }
        out
    }

    /// Applies a map to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> FieldElem) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coefficients with respect to `c_v`, indexed by power; each coefficient
    /// is free of `c_v`.
    fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(self.ctx, self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            let mut rest = m.clone();
            rest.0[v] = 0;
            out[e].terms.insert(rest, c.clone());
        }
        out
    }

    fn lead_coeff_in(&self, v: usize) -> MultiPoly {
        let deg = self.degree_in(v);
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        for (m, c) in &self.terms {
            if m.0[v] == deg {
                let mut rest = m.clone();
                rest.0[v] = 0;
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    fn min_exponents(&self) -> Monomial {
        let mut mins = vec![u32::MAX; self.nvars];
        for m in self.terms.keys() {
            for (lo, &e) in mins.iter_mut().zip(&m.0) {
                *lo = (*lo).min(e);
            }
        }
        if self.terms.is_empty() {
            mins.iter_mut().for_each(|e| *e = 0);
        }
        Monomial(mins)
    }

    fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        let mut out = MultiPoly::zero(self.ctx, self.nvars);
        out.terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.div(m).expect("monomial divides"), c.clone()))
            .collect();
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. With a single divisor the leading-term reduction is a
    /// complete test: a remainder term appears iff the divisor does not divide.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.ctx, self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(lm) else {
                return Ok(None);
            };
            let qc = c * &lc_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn canonicalize(&self) -> Result<MultiPoly> {
        let (_, lc) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lc.inv()?))
    }

    /// Product of the distinct irreducible factors, canonically scaled.
    pub fn squarefree_part(&self) -> Result<MultiPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(MultiPoly::one(self.ctx, self.nvars));
        }
        // Monomial factors are split off first: c_v^e contributes c_v once.
        let mono = self.min_exponents();
        let rest = self.div_monomial(&mono);
        let mut s = rest;
        loop {
            let mut g = s.clone();
            for v in 0..self.nvars {
                let dv = s.partial_derivative(v);
                if dv.is_zero() {
                    continue;
                }
                g = gcd_rec(&g, &dv);
                if g.is_constant() {
                    break;
                }
            }
            if g.is_constant() {
                break;
            }
            s = s.div_exact(&g)?.expect("gcd divides");
        }
        let radical = Monomial(mono.0.iter().map(|&e| e.min(1)).collect());
        s.mul_monomial(&radical, &self.ctx.one()).canonicalize()
    }

    /// Polynomial text form, e.g. `c1^2 - 2*c1*c2 + (1/2-r)*c3^2`.
    pub fn parse(text: &str, ctx: FieldContext, nvars: usize) -> Result<MultiPoly> {
        let mut cur = Cursor::new(text);
        if cur.at_end() {
            return cur.err("empty polynomial");
        }
        let mut total = MultiPoly::zero(ctx, nvars);
        let mut negative = if cur.eat(b'-') {
            true
        } else {
            cur.eat(b'+');
            false
        };
        loop {
            let term = parse_poly_term(&mut cur, ctx, nvars)?;
            total = if negative { &total - &term } else { &total + &term };
            if cur.eat(b'+') {
                negative = false;
            } else if cur.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        cur.expect_end()?;
        Ok(total)
    }
}

fn parse_poly_term(cur: &mut Cursor<'_>, ctx: FieldContext, nvars: usize) -> Result<MultiPoly> {
    let mut coeff = ctx.one();
    let mut mono = Monomial::one(nvars);
    let mut factors = 0;
    loop {
        if factors > 0 && !cur.eat(b'*') {
            // juxtaposition such as `2c1` is accepted as well
            match cur.peek() {
                Some(ch) if ch.is_ascii_digit() || matches!(ch, b'(' | b'c' | b'i' | b'r') => {}
                _ => break,
            }
        }
        match cur.peek() {
            Some(b'(') => {
                cur.eat(b'(');
                coeff *= cur.scalar(ctx)?;
                if !cur.eat(b')') {
                    return cur.err("expected ')'");
                }
            }
            Some(ch) if ch.is_ascii_digit() => {
                coeff = &coeff * &FieldElem::from_rational(ctx, cur.rational()?);
            }
            Some(b'i') => {
                cur.eat(b'i');
                coeff *= ctx.i();
            }
            Some(b'r') => {
                cur.eat(b'r');
                coeff *= ctx.r();
            }
            Some(b'c') => {
                cur.eat(b'c');
                let pos = cur.pos();
                let idx = cur.small_integer()? as usize;
                if idx == 0 || idx > nvars {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("variable c{idx} outside c1..c{nvars}"),
                    });
                }
                let exp = if cur.eat(b'^') { cur.small_integer()? } else { 1 };
                mono.0[idx - 1] += exp;
            }
            _ => return cur.err("expected a coefficient or variable"),
        }
        factors += 1;
    }
    Ok(MultiPoly::monomial(ctx, mono, coeff))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_monomial() && c.leading_negative();
            let shown = if negative { -c } else { c.clone() };
            match (idx == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("c{}", v + 1) } else { format!("c{}^{e}", v + 1) })
                .collect();
            let coeff = if shown.is_monomial() {
                shown.to_string()
            } else {
                format!("({shown})")
            };
            if vars.is_empty() {
                f.write_str(&coeff)?;
            } else if shown.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial rings agree")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial rings agree")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial rings agree")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-self.ctx.one())
    }
}

/// Polynomial operations selectable by name.
#[derive(Clone, Debug)]
pub enum PolyOp<'a> {
    Add(&'a MultiPoly, &'a MultiPoly),
    Sub(&'a MultiPoly, &'a MultiPoly),
    Mul(&'a MultiPoly, &'a MultiPoly),
    Eval(&'a MultiPoly, &'a [FieldElem]),
    PartialDerivative(&'a MultiPoly, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyValue {
    Poly(MultiPoly),
    Scalar(FieldElem),
}

pub fn poly_arith(op: PolyOp<'_>) -> Result<PolyValue> {
    Ok(match op {
        PolyOp::Add(p, q) => PolyValue::Poly(p.checked_add(q)?),
        PolyOp::Sub(p, q) => PolyValue::Poly(p.checked_sub(q)?),
        PolyOp::Mul(p, q) => PolyValue::Poly(p.checked_mul(q)?),
        PolyOp::Eval(p, x) => PolyValue::Scalar(p.eval(x)?),
        PolyOp::PartialDerivative(p, v) => {
            if v >= p.nvars() {
                return Err(Error::NvarsMismatch(v + 1, p.nvars()));
            }
            PolyValue::Poly(p.partial_derivative(v))
        }
    })
}

/// Whether `p` divides `q`, with the exact quotient when it does.
pub fn divides(p: &MultiPoly, q: &MultiPoly) -> Result<Option<MultiPoly>> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    q.div_exact(p)
}

/// Canonical greatest common divisor; `gcd(p, 0) = canonicalize(p)`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.check(q)?;
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    gcd_rec(p, q).canonicalize()
}

pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly> {
    p.squarefree_part()
}

pub fn canonicalize(p: &MultiPoly) -> Result<MultiPoly> {
    p.canonicalize()
}

/// A gcd up to a unit.
fn gcd_rec(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    let one = MultiPoly::one(p.ctx, p.nvars);
    if p.is_constant() || q.is_constant() {
        return one;
    }
    let mp = p.min_exponents();
    let mq = q.min_exponents();
    let mg = Monomial(mp.0.iter().zip(&mq.0).map(|(a, b)| *a.min(b)).collect());
    let g = gcd_no_monomial(&p.div_monomial(&mp), &q.div_monomial(&mq));
    g.mul_monomial(&mg, &p.ctx.one())
}

fn gcd_no_monomial(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let one = MultiPoly::one(p.ctx, p.nvars);
    if p.is_constant() || q.is_constant() {
        return one;
    }
    if p == q {
        return p.clone();
    }
    let vp = p.variables();
    let vq = q.variables();
    // A variable present on one side only cannot occur in the gcd.
    if let Some(&v) = vp.iter().find(|v| !vq.contains(v)) {
        return gcd_with_coeffs(q, &p.coeffs_in(v));
    }
    if let Some(&v) = vq.iter().find(|v| !vp.contains(v)) {
        return gcd_with_coeffs(p, &q.coeffs_in(v));
    }
    let v = *vp.last().expect("non-constant");
    let cp = content(p, v);
    let cq = content(q, v);
    let pp = p.div_exact(&cp).unwrap().expect("content divides");
    let qq = q.div_exact(&cq).unwrap().expect("content divides");
    let c = gcd_rec(&cp, &cq);
    let g = subresultant_gcd(pp, qq, v);
    &c * &g
}

fn gcd_with_coeffs(q: &MultiPoly, coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = q.clone();
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// gcd of the coefficients of `p` as a polynomial in `c_v`.
fn content(p: &MultiPoly, v: usize) -> MultiPoly {
    let coeffs = p.coeffs_in(v);
    let mut nonzero = coeffs.iter().rev().filter(|c| !c.is_zero());
    let first = nonzero.next().expect("nonzero polynomial").clone();
    let mut g = first;
    for c in nonzero {
        if g.is_constant() {
            break;
        }
        g = gcd_rec(&g, c);
    }
    if g.is_constant() {
        MultiPoly::one(p.ctx, p.nvars)
    } else {
        g
    }
}

fn primitive_part(p: &MultiPoly, v: usize) -> MultiPoly {
    let c = content(p, v);
    p.div_exact(&c).unwrap().expect("content divides")
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in `c_v`.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.lead_coeff_in(v);
    let mut r = a.clone();
    let mut remaining = a.degree_in(v) + 1 - db;
    let var = Monomial::var(a.nvars, v);
    while !r.is_zero() && r.degree_in(v) >= db {
        let shift = r.degree_in(v) - db;
        let lr = r.lead_coeff_in(v);
        let mut mono = Monomial::one(a.nvars);
        mono.0[v] = shift;
        let _ = &var;
        let t = (&lr * b).mul_monomial(&mono, &a.ctx.one());
        r = &(&lb * &r) - &t;
        remaining -= 1;
    }
    if remaining > 0 {
        r = &r * &lb.pow(remaining);
    }
    r
}

/// Subresultant remainder sequence for inputs primitive in `c_v`;
/// returns their gcd, primitive in `c_v`.
fn subresultant_gcd(a: MultiPoly, b: MultiPoly, v: usize) -> MultiPoly {
    let one = MultiPoly::one(a.ctx, a.nvars);
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    if b.degree_in(v) == 0 {
        return one;
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = a.degree_in(v) - b.degree_in(v);
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return one;
        }
        let divisor = &g * &h.pow(delta);
        let next = r.div_exact(&divisor).unwrap().expect("subresultant division is exact");
        a = b;
        b = next;
        g = a.lead_coeff_in(v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .unwrap()
                .expect("subresultant division is exact"),
        };
    }
    primitive_part(&b, v)
}
