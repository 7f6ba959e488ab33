//! Exact arithmetic in the number field K = Q(i, sqrt d).
//!
//! An element is stored as four rationals `(a, b, c, e)` standing for
//! `a + b*r + (c + e*r)*i` where `r = sqrt d`. Each component is a reduced
//! [`Rational`], so structural equality is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Fixes `d` and therefore the field `Q(i, sqrt d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldContext {
    d: u32,
}

impl Default for FieldContext {
    fn default() -> Self {
        FieldContext { d: 2 }
    }
}

impl FieldContext {
    pub fn new(d: u32) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::InvalidField(d as u64));
        }
        Ok(FieldContext { d })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::from_rational(*self, Rational::zero())
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::from_rational(*self, Rational::one())
    }

    pub fn int(&self, n: i64) -> FieldElem {
        FieldElem::from_rational(*self, Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(&self, num: i64, den: i64) -> FieldElem {
        FieldElem::from_rational(
            *self,
            Rational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// The imaginary unit.
    pub fn i(&self) -> FieldElem {
        FieldElem::new(*self, zero(), zero(), Rational::one(), zero())
    }

    /// `sqrt d`, written `r` in text form.
    pub fn r(&self) -> FieldElem {
        FieldElem::new(*self, zero(), Rational::one(), zero(), zero())
    }

    pub fn parse(&self, text: &str) -> Result<FieldElem> {
        parse_scalar(text, *self)
    }
}

fn is_squarefree(d: u32) -> bool {
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

fn zero() -> Rational {
    Rational::zero()
}

/// Automorphisms of K. Every one of them commutes with complex conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Automorphism {
    Id,
    /// `i -> -i`
    Conj,
    /// `sqrt d -> -sqrt d`
    Flip,
    /// Both.
    ConjFlip,
}

impl Automorphism {
    pub const ALL: [Automorphism; 4] = [
        Automorphism::Id,
        Automorphism::Conj,
        Automorphism::Flip,
        Automorphism::ConjFlip,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Automorphism::Id => "id",
            Automorphism::Conj => "conj",
            Automorphism::Flip => "flip",
            Automorphism::ConjFlip => "conjflip",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Automorphism::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::Format(format!("unknown automorphism {name:?}")))
    }

    pub fn compose(self, other: Automorphism) -> Automorphism {
        let (c1, f1) = self.flags();
        let (c2, f2) = other.flags();
        Automorphism::from_flags(c1 ^ c2, f1 ^ f2)
    }

    /// Every automorphism of K is an involution.
    pub fn inverse(self) -> Automorphism {
        self
    }

    fn flags(self) -> (bool, bool) {
        match self {
            Automorphism::Id => (false, false),
            Automorphism::Conj => (true, false),
            Automorphism::Flip => (false, true),
            Automorphism::ConjFlip => (true, true),
        }
    }

    fn from_flags(conj: bool, flip: bool) -> Automorphism {
        match (conj, flip) {
            (false, false) => Automorphism::Id,
            (true, false) => Automorphism::Conj,
            (false, true) => Automorphism::Flip,
            (true, true) => Automorphism::ConjFlip,
        }
    }

    pub fn apply(self, x: &FieldElem) -> FieldElem {
        x.apply(self)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element `a + b*r + (c + e*r)*i` of K.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a: Rational,
    b: Rational,
    c: Rational,
    e: Rational,
    ctx: FieldContext,
}

impl FieldElem {
    pub fn new(ctx: FieldContext, a: Rational, b: Rational, c: Rational, e: Rational) -> Self {
        FieldElem { a, b, c, e, ctx }
    }

    pub fn from_rational(ctx: FieldContext, q: Rational) -> Self {
        FieldElem::new(ctx, q, zero(), zero(), zero())
    }

    pub fn ctx(&self) -> FieldContext {
        self.ctx
    }

    /// Components `(a, b, c, e)` of `a + b*r + (c + e*r)*i`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.e]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    /// True when the element lies in the real subfield `Q(sqrt d)`.
    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.e.is_zero()
    }

    /// Sign of a real element compared with zero; `None` for non-real input.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        Some(sign_of_quadratic(&self.a, &self.b, self.ctx.d))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> FieldElem {
        FieldElem::new(self.ctx, self.a.clone(), self.b.clone(), -&self.c, -&self.e)
    }

    pub fn apply(&self, f: Automorphism) -> FieldElem {
        let (conj, flip) = f.flags();
        let b = if flip { -&self.b } else { self.b.clone() };
        let c = if conj { -&self.c } else { self.c.clone() };
        let e = if conj != flip { -&self.e } else { self.e.clone() };
        FieldElem::new(self.ctx, self.a.clone(), b, c, e)
    }

    /// `|x|^2 = x * conj(x)`, an element of `Q(sqrt d)`.
    pub fn norm_sqr(&self) -> FieldElem {
        self * &self.conj()
    }

    /// Multiplicative inverse: rationalize over `i`, then over `sqrt d`.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.ctx.d;
        if self.is_rational() {
            return Ok(FieldElem::from_rational(self.ctx, self.a.recip()));
        }
        // x = A + C i with A, C in Q(r); 1/x = (A - C i) / (A^2 + C^2).
        let (aa0, aa1) = qmul((&self.a, &self.b), (&self.a, &self.b), d);
        let (cc0, cc1) = qmul((&self.c, &self.e), (&self.c, &self.e), d);
        let n0 = aa0 + cc0;
        let n1 = aa1 + cc1;
        // 1/(n0 + n1 r) = (n0 - n1 r) / (n0^2 - d n1^2)
        let den = &n0 * &n0 - &n1 * &n1 * Rational::from_integer(BigInt::from(d));
        let m0 = &n0 / &den;
        let m1 = -(&n1 / &den);
        let (a, b) = qmul((&self.a, &self.b), (&m0, &m1), d);
        let (c, e) = qmul((&self.c, &self.e), (&m0, &m1), d);
        Ok(FieldElem::new(self.ctx, a, b, -c, -e))
    }

    pub fn pow(&self, exp: u32) -> FieldElem {
        let mut acc = self.ctx.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> FieldElem {
        FieldElem::new(self.ctx, &self.a * q, &self.b * q, &self.c * q, &self.e * q)
    }

    /// True when exactly one component is nonzero.
    pub(crate) fn is_monomial(&self) -> bool {
        self.components().iter().filter(|q| !q.is_zero()).count() == 1
    }

    /// For a single-component element, whether that component is negative.
    pub(crate) fn leading_negative(&self) -> bool {
        self.components()
            .iter()
            .find(|q| !q.is_zero())
            .is_some_and(|q| q.is_negative())
    }

    fn check_ctx(&self, other: &FieldElem) {
        debug_assert_eq!(self.ctx, other.ctx, "mixed field contexts");
    }
}

/// `(x0 + x1 r)(y0 + y1 r)` with `r^2 = d`.
fn qmul(x: (&Rational, &Rational), y: (&Rational, &Rational), d: u32) -> (Rational, Rational) {
    if x.1.is_zero() && y.1.is_zero() {
        return (x.0 * y.0, zero());
    }
    let dd = Rational::from_integer(BigInt::from(d));
    (x.0 * y.0 + x.1 * y.1 * dd, x.0 * y.1 + x.1 * y.0)
}

fn sign_of_quadratic(a: &Rational, b: &Rational, d: u32) -> Ordering {
    let sa = a.signum();
    let sb = b.signum();
    let zero = Rational::zero();
    let sa_ord = sa.cmp(&zero);
    let sb_ord = sb.cmp(&zero);
    if sb_ord == Ordering::Equal {
        return sa_ord;
    }
    if sa_ord == Ordering::Equal || sa_ord == sb_ord {
        return sb_ord;
    }
    // Opposite signs: compare a^2 with d b^2.
    let a2 = a * a;
    let b2d = b * b * Rational::from_integer(BigInt::from(d));
    match a2.cmp(&b2d) {
        Ordering::Greater => sa_ord,
        Ordering::Less => sb_ord,
        Ordering::Equal => Ordering::Equal,
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        self.check_ctx(rhs);
        FieldElem::new(
            self.ctx,
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.e + &rhs.e,
        )
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        self.check_ctx(rhs);
        FieldElem::new(
            self.ctx,
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            &self.c - &rhs.c,
            &self.e - &rhs.e,
        )
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        self.check_ctx(rhs);
        let d = self.ctx.d;
        if self.is_zero() || rhs.is_zero() {
            return self.ctx.zero();
        }
        if self.is_rational() {
            return rhs.scale(&self.a);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.a);
        }
        // (A + C i)(A' + C' i) = (AA' - CC') + (AC' + CA') i
        let (p0, p1) = qmul((&self.a, &self.b), (&rhs.a, &rhs.b), d);
        let (q0, q1) = qmul((&self.c, &self.e), (&rhs.c, &rhs.e), d);
        let (s0, s1) = qmul((&self.a, &self.b), (&rhs.c, &rhs.e), d);
        let (t0, t1) = qmul((&self.c, &self.e), (&rhs.a, &rhs.b), d);
        FieldElem::new(self.ctx, p0 - q0, p1 - q1, s0 + t0, s1 + t1)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(self.ctx, -&self.a, -&self.b, -&self.c, -&self.e)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $AssignTrait:ident, $assign:ident) => {
        impl $Trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $Trait<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl<'a> $Trait<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
        impl<'a> $AssignTrait<&'a FieldElem> for FieldElem {
            fn $assign(&mut self, rhs: &'a FieldElem) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $AssignTrait<FieldElem> for FieldElem {
            fn $assign(&mut self, rhs: FieldElem) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

/// Field operations selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
    Conj,
}

/// Applies `op`; binary operations require `y`.
pub fn field_arith(op: FieldOp, x: &FieldElem, y: Option<&FieldElem>) -> Result<FieldElem> {
    let rhs = || y.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")));
    Ok(match op {
        FieldOp::Add => x + rhs()?,
        FieldOp::Sub => x - rhs()?,
        FieldOp::Mul => x * rhs()?,
        FieldOp::Inv => x.inv()?,
        FieldOp::Neg => -x,
        FieldOp::Conj => x.conj(),
    })
}

pub fn apply_automorphism(f: Automorphism, x: &FieldElem) -> FieldElem {
    x.apply(f)
}

impl fmt::Display for FieldElem {
    /// Canonical text: rational part, r-term, i-term, r*i-term; zero parts
    /// omitted, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (q, unit) in [(&self.a, ""), (&self.b, "r"), (&self.c, "i"), (&self.e, "r*i")] {
            if q.is_zero() {
                continue;
            }
            if q.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let abs = q.abs();
            if unit.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(unit)?;
            } else {
                write!(f, "{abs}*{unit}")?;
            }
        }
        Ok(())
    }
}

/// Shared character cursor for the scalar and polynomial grammars.
pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    pub(crate) fn pos(&mut self) -> usize {
        self.peek();
        self.pos
    }

    pub(crate) fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn err<T>(&mut self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(ch) => self.err(format!("unexpected character {:?}", ch as char)),
        }
    }

    /// Unsigned decimal integer. Digits must be contiguous.
    pub(crate) fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos();
        let mut end = start;
        while end < self.src.len() && self.src[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return self.err("expected integer");
        }
        self.pos = end;
        let digits = std::str::from_utf8(&self.src[start..end]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("decimal digits"))
    }

    pub(crate) fn small_integer(&mut self) -> Result<u32> {
        let pos = self.pos();
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos, msg: "integer too large".into() })
    }

    /// `integer ("/" positive-integer)?`
    pub(crate) fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    /// `elem := sign? term (("+"|"-") term)*`
    pub(crate) fn scalar(&mut self, ctx: FieldContext) -> Result<FieldElem> {
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = ctx.zero();
        loop {
            let term = self.scalar_term(ctx)?;
            if negative {
                acc -= term;
            } else {
                acc += term;
            }
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn scalar_term(&mut self, ctx: FieldContext) -> Result<FieldElem> {
        let has_rat = self.peek().is_some_and(|ch| ch.is_ascii_digit());
        let mut value = if has_rat {
            FieldElem::from_rational(ctx, self.rational()?)
        } else {
            ctx.one()
        };
        let (mut seen_i, mut seen_r) = (false, false);
        loop {
            let star = self.eat(b'*');
            match self.peek() {
                Some(b'i') if !seen_i => {
                    seen_i = true;
                    value *= ctx.i();
                }
                Some(b'r') if !seen_r => {
                    seen_r = true;
                    value *= ctx.r();
                }
                Some(ch @ (b'i' | b'r')) => {
                    return self.err(format!("unit {:?} repeated", ch as char));
                }
                _ if star => return self.err("expected 'i' or 'r' after '*'"),
                _ => break,
            }
            self.pos += 1;
        }
        if !has_rat && !seen_i && !seen_r {
            return self.err("expected a number, 'i' or 'r'");
        }
        Ok(value)
    }
}

/// Parses the scalar grammar: `"1/2+1/2*i"`, `"3-2*r"`, `"r*i"`. A leading
/// sign is accepted.
pub fn parse_scalar(text: &str, ctx: FieldContext) -> Result<FieldElem> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return cur.err("empty scalar");
    }
    let value = cur.scalar(ctx)?;
    cur.expect_end()?;
    Ok(value)
}
