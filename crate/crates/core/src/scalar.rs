//! Exact scalars: arbitrary-precision rationals and a single quadratic
//! extension `a + b·√d` used for square roots (conic chords, involution
//! fixed points).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number in canonical reduced form (positive denominator).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics on a zero denominator. Use [`Rat::parse`] for untrusted input.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "Rat::frac with zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// Parses `[-]digits[/digits]` or a plain decimal `[-]digits.digits`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse(text.to_string());
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = body.split_once('/') {
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            let den: BigInt = d.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            BigRational::new(n.parse().map_err(|_| bad())?, den)
        } else if let Some((i, f)) = body.split_once('.') {
            if !digits(i) || !digits(f) {
                return Err(bad());
            }
            let scale = BigInt::from(10u32).pow(f.len() as u32);
            let whole: BigInt = format!("{i}{f}").parse().map_err(|_| bad())?;
            BigRational::new(whole, scale)
        } else {
            if !digits(body) {
                return Err(bad());
            }
            BigRational::from_integer(body.parse().map_err(|_| bad())?)
        };
        Ok(Rat(if neg { -value } else { value }))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rat(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Self> {
        if other.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(&self.0 / &other.0))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Largest of |numerator| and denominator, used for instance bounds.
    pub fn height(&self) -> BigInt {
        let n = self.numer().abs();
        let d = self.denom().clone();
        if n > d {
            n
        } else {
            d
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Rat::parse(s)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_integer(n)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rat::parse(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat($tr::$m(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat($tr::$m(self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat($tr::$m(&self.0, rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
// Panics on division by zero, like the integer types; use `checked_div` when
// the divisor is data-dependent.
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}

/// Splits `n` into `(s, r)` with `n = s²·r`.
///
/// Primes up to `TRIAL_LIMIT` are removed by trial division; a remaining
/// cofactor below `TRIAL_LIMIT³` has at most two prime factors, so it is
/// squarefree unless it is itself a perfect square. Above that size the
/// decomposition is best effort.
fn square_split(n: &BigUint) -> (BigUint, BigUint) {
    const TRIAL_LIMIT: u64 = 1_000_000;
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        return (root, BigUint::one());
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                free *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            square *= r;
        } else {
            free *= rest;
        }
    }
    (square, free)
}

/// Squarefree integer radicand `d` and rational `b` such that `b²·d = x`.
fn radical_form(x: &Rat) -> (Rat, BigInt) {
    // √(p/q) = √(p·q)/q
    let pq = (x.numer() * x.denom()).magnitude().clone();
    let (s, r) = square_split(&pq);
    let b = Rat::from_big(BigInt::from(s), x.denom().clone()).expect("denominator is positive");
    (b, BigInt::from(r))
}

/// `a + b·√d` with `d` a squarefree integer other than 1 whenever `b ≠ 0`.
/// Rational values are stored with `b = 0, d = 1`.
///
/// When a radicand is too large to factor completely, the same number can
/// carry two radicands that differ by a square factor; equality, hashing and
/// arithmetic compare by value, so this is invisible outside the struct.
#[derive(Clone, Serialize, Deserialize)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

impl QuadExt {
    pub fn rational(a: Rat) -> Self {
        QuadExt {
            a,
            b: Rat::zero(),
            d: Rat::one(),
        }
    }

    pub fn zero() -> Self {
        QuadExt::rational(Rat::zero())
    }

    pub fn one() -> Self {
        QuadExt::rational(Rat::one())
    }

    /// Builds `a + b·√d`, normalizing the radicand to a squarefree integer.
    pub fn new(a: Rat, b: Rat, d: Rat) -> Result<Self> {
        if b.is_zero() {
            return Ok(QuadExt::rational(a));
        }
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        let (s, r) = radical_form(&d);
        let b = b * s;
        if r.is_one() || b.is_zero() {
            return Ok(QuadExt::rational(a + b));
        }
        Ok(QuadExt {
            a,
            b,
            d: Rat::from_integer(r),
        })
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a² − b²·d`
    pub fn norm(&self) -> Rat {
        self.a.square() - self.b.square() * &self.d
    }

    /// Exact sign of `a + b·√d`.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a² with b²d
        match self.a.square().cmp(&(self.b.square() * &self.d)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// `b²·d`, with the sign of `b`: determines the irrational part.
    fn radical_key(&self) -> (i32, Rat) {
        (self.b.signum(), self.b.square() * &self.d)
    }

    /// `other` rewritten over `self`'s radicand when the two differ by a
    /// rational square factor.
    fn aligned(&self, other: &QuadExt) -> Result<(Rat, QuadExt)> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => return Ok((other.d.clone(), other.clone())),
            (_, true) => return Ok((self.d.clone(), other.clone())),
            _ if self.d == other.d => return Ok((self.d.clone(), other.clone())),
            _ => {}
        }
        // √d' = √(d·d')/d · √d, rational exactly when d·d' is a square
        let prod = (&self.d * &other.d).numer().magnitude().clone();
        let root = prod.sqrt();
        if &root * &root != prod {
            return Err(Error::RadicandMismatch(self.d.to_string(), other.d.to_string()));
        }
        let factor = Rat::from_big(BigInt::from(root), BigInt::one()).expect("positive") / &self.d;
        let b = &other.b * factor;
        Ok((self.d.clone(), QuadExt { a: other.a.clone(), b, d: self.d.clone() }))
    }

    fn build(a: Rat, b: Rat, d: Rat) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn checked_add(&self, o: &QuadExt) -> Result<Self> {
        let (d, o) = self.aligned(o)?;
        Ok(Self::build(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn checked_sub(&self, o: &QuadExt) -> Result<Self> {
        let (d, o) = self.aligned(o)?;
        Ok(Self::build(&self.a - &o.a, &self.b - &o.b, d))
    }

    pub fn checked_mul(&self, o: &QuadExt) -> Result<Self> {
        let (d, o) = self.aligned(o)?;
        let a = &self.a * &o.a + &self.b * &o.b * &d;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::build(a, b, d))
    }

    pub fn checked_div(&self, o: &QuadExt) -> Result<Self> {
        let (d, o) = self.aligned(o)?;
        let n = o.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.checked_mul(&o.conj())?;
        Ok(Self::build(
            num.a.checked_div(&n)?,
            num.b.checked_div(&n)?,
            d,
        ))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::build(&self.a * k, &self.b * k, self.d.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * self.d.to_f64().sqrt()
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.radical_key() == other.radical_key()
    }
}

impl Eq for QuadExt {}

impl std::hash::Hash for QuadExt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.radical_key().hash(state);
    }
}

impl From<Rat> for QuadExt {
    fn from(r: Rat) -> Self {
        QuadExt::rational(r)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}·√{}", self.b, self.d.numer())
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.d.numer())
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mixed radicands; the checked_* methods report it.
macro_rules! quad_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).expect("QuadExt arithmetic")
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs).expect("QuadExt arithmetic")
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(-self.a, -self.b, self.d)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(-&self.a, -&self.b, self.d.clone())
    }
}

/// Exact square root of a non-negative rational in the form `b·√d`.
pub fn quad_sqrt(x: &Rat) -> Result<QuadExt> {
    if x.is_negative() {
        return Err(Error::NegativeRadicand(x.to_string()));
    }
    let (b, r) = radical_form(x);
    if r.is_one() || b.is_zero() {
        return Ok(QuadExt::rational(b));
    }
    Ok(QuadExt {
        a: Rat::zero(),
        b,
        d: Rat::from_integer(r),
    })
}

/// Rational square root when `x` is a perfect square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rat::from_big(BigInt::from_biguint(Sign::Plus, rn), BigInt::from(rd)).ok()?)
    } else {
        None
    }
}
