//! Exact scalars: arbitrary-precision rationals, the ring `Q + Q*pi`, and the
//! combinatorial primitives every identity is built from.
//!
//! [`Rational`] wraps [`num_rational::BigRational`], which keeps every value
//! reduced with a positive denominator after each operation. Nothing in this
//! module touches floating point except the explicit `to_f64` conversions used
//! by the quadrature sanity checks.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("binomial coefficient requires n >= 0, got n = {0}")]
    NegativeBinomialTop(i64),
    #[error("double factorial requires n >= -1, got n = {0}")]
    DoubleFactorialDomain(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("product of two pi-linear values with nonzero pi parts would leave Q + Q*pi")]
    PiSquared,
    #[error("cannot parse {0:?} as an exact value")]
    Parse(String),
}

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `numer / denom`, reduced. Panics when `denom == 0`; use
    /// [`Rational::checked_ratio`] when the denominator is data-dependent.
    pub fn new(numer: i64, denom: i64) -> Self {
        Self::checked_ratio(numer, denom).expect("zero denominator")
    }

    pub fn checked_ratio(numer: i64, denom: i64) -> Result<Self, ArithError> {
        if denom == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, exp: i32) -> Result<Self, ArithError> {
        if exp < 0 && self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, exp)))
    }

    /// `(-1)^e` for any integer exponent.
    pub fn sign_power(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    /// `2^e` for any integer exponent.
    pub fn pow2(e: i64) -> Self {
        let magnitude = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            Rational::from_bigint(magnitude)
        } else {
            Rational(BigRational::new(BigInt::one(), magnitude))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

/// Integers print bare, everything else as `p/q`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rational(BigRational::new(p, q)))
            }
            None => {
                let p: BigInt = t.parse().map_err(|_| bad())?;
                Ok(Rational::from_bigint(p))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division panics on a zero divisor, like the integer types; fallible call
// sites go through `checked_div`.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// An element `rational_part + pi_part * pi` of `Q + Q*pi`.
///
/// Since pi is irrational the representation is unique, so derived equality
/// is equality of real numbers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiLinear {
    pub rational_part: Rational,
    pub pi_part: Rational,
}

impl PiLinear {
    pub fn new(rational_part: Rational, pi_part: Rational) -> Self {
        PiLinear { rational_part, pi_part }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: Rational) -> Self {
        PiLinear { rational_part: r, pi_part: Rational::zero() }
    }

    /// `coefficient * pi`.
    pub fn pi_multiple(coefficient: Rational) -> Self {
        PiLinear { rational_part: Rational::zero(), pi_part: coefficient }
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.pi_part.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PiLinear {
            rational_part: &self.rational_part * factor,
            pi_part: &self.pi_part * factor,
        }
    }

    /// Ring product, defined only when at least one factor is purely rational.
    pub fn checked_mul(&self, rhs: &PiLinear) -> Result<PiLinear, ArithError> {
        match (self.pi_part.is_zero(), rhs.pi_part.is_zero()) {
            (_, true) => Ok(self.scale(&rhs.rational_part)),
            (true, false) => Ok(rhs.scale(&self.rational_part)),
            (false, false) => Err(ArithError::PiSquared),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.rational_part.to_f64() + self.pi_part.to_f64() * std::f64::consts::PI
    }
}

impl fmt::Display for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*pi", self.rational_part, self.pi_part)
    }
}

impl fmt::Debug for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PiLinear {
    type Err = ArithError;

    /// Accepts `a + b*pi`, `b*pi`, or a bare rational `a`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((a, b)) = t.split_once('+') {
            let b = b.trim().strip_suffix("*pi").ok_or_else(|| ArithError::Parse(s.into()))?;
            return Ok(PiLinear::new(a.parse()?, b.parse()?));
        }
        if let Some(b) = t.strip_suffix("*pi") {
            return Ok(PiLinear::pi_multiple(b.parse()?));
        }
        Ok(PiLinear::rational(t.parse()?))
    }
}

impl Add for PiLinear {
    type Output = PiLinear;
    fn add(self, rhs: PiLinear) -> PiLinear {
        PiLinear {
            rational_part: self.rational_part + rhs.rational_part,
            pi_part: self.pi_part + rhs.pi_part,
        }
    }
}

impl Sub for PiLinear {
    type Output = PiLinear;
    fn sub(self, rhs: PiLinear) -> PiLinear {
        PiLinear {
            rational_part: self.rational_part - rhs.rational_part,
            pi_part: self.pi_part - rhs.pi_part,
        }
    }
}

impl Neg for PiLinear {
    type Output = PiLinear;
    fn neg(self) -> PiLinear {
        PiLinear { rational_part: -self.rational_part, pi_part: -self.pi_part }
    }
}

impl Sum for PiLinear {
    fn sum<I: Iterator<Item = PiLinear>>(iter: I) -> Self {
        iter.fold(PiLinear::zero(), |acc, x| acc + x)
    }
}

/// Integer binomial coefficient for a nonnegative top index; zero outside
/// `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

pub fn binomial(n: i64, k: i64) -> Result<Rational, ArithError> {
    if n < 0 {
        return Err(ArithError::NegativeBinomialTop(n));
    }
    Ok(Rational::from_bigint(binom(n as u64, k)))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!!`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rational, ArithError> {
    if n < -1 {
        return Err(ArithError::DoubleFactorialDomain(n));
    }
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(Rational::from_bigint(acc))
}

/// Rising factorial `x (x+1) ... (x+n-1)`.
pub fn pochhammer_rising(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    let one = Rational::one();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += &one;
    }
    acc
}
