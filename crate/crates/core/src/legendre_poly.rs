//! Dense exact polynomials and the Legendre family built on them.

use std::ops::{Add, Mul, Sub};

use crate::exact_arith::{binom, Rational};

/// Rational-coefficient polynomial, coefficients in ascending degree.
///
/// The leading coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExactPolynomial {
    coefficients: Vec<Rational>,
}

/// Inner argument shape accepted by [`ExactPolynomial::compose_linear`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerPower {
    /// `a*x + b`
    Linear,
    /// `a*x^2 + b`
    Square,
}

impl ExactPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Rational::is_zero) {
            coefficients.pop();
        }
        ExactPolynomial { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); k + 1];
        coefficients[k] = Rational::one();
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![Rational::zero(); k];
        coefficients.extend(self.coefficients.iter().cloned());
        ExactPolynomial { coefficients }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// `p(a*x^d + b)` for `d` given by `inner`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational, inner: InnerPower) -> Self {
        let affine = ExactPolynomial::new(vec![b.clone(), a.clone()]);
        let mut out = self
            .coefficients
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &affine) + &Self::constant(c.clone()));
        if inner == InnerPower::Square {
            let mut spread = vec![Rational::zero(); 2 * out.coefficients.len()];
            for (j, c) in out.coefficients.iter().enumerate() {
                spread[2 * j] = c.clone();
            }
            out = Self::new(spread);
        }
        out
    }

    pub fn antiderivative(&self) -> Self {
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(Rational::zero());
        for (j, c) in self.coefficients.iter().enumerate() {
            coefficients.push(c / Rational::from_integer(j as i64 + 1));
        }
        Self::new(coefficients)
    }

    /// Exact definite integral over `[a, b]`.
    pub fn integrate_interval(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }
}

impl<'a, 'b> Add<&'b ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &'b ExactPolynomial) -> ExactPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        ExactPolynomial::new((0..len).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl<'a, 'b> Sub<&'b ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &'b ExactPolynomial) -> ExactPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        ExactPolynomial::new((0..len).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect())
    }
}

impl<'a, 'b> Mul<&'b ExactPolynomial> for &'a ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &'b ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

/// `P_n` from the expanded Leibniz form `2^-n sum_k C(n,k)^2 (x+1)^(n-k) (x-1)^k`.
pub fn legendre_via_sum(n: u32) -> ExactPolynomial {
    let plus = ExactPolynomial::from_integers(&[1, 1]);
    let minus = ExactPolynomial::from_integers(&[-1, 1]);
    let plus_powers: Vec<_> = (0..=n).map(|j| plus.pow(j)).collect();
    let minus_powers: Vec<_> = (0..=n).map(|j| minus.pow(j)).collect();
    let mut acc = ExactPolynomial::zero();
    for k in 0..=n {
        let c = Rational::from_bigint(binom(n as u64, k as i64).pow(2));
        let term = &plus_powers[(n - k) as usize] * &minus_powers[k as usize];
        acc = &acc + &term.scale(&c);
    }
    acc.scale(&Rational::pow2(-(n as i64)))
}

/// `P_0 .. P_n` from the three-term recurrence
/// `(j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}`.
pub fn legendre_family(n: u32) -> Vec<ExactPolynomial> {
    let mut out = vec![ExactPolynomial::constant(Rational::one())];
    if n == 0 {
        return out;
    }
    out.push(ExactPolynomial::monomial(1));
    for j in 1..n as i64 {
        let a = Rational::new(2 * j + 1, j + 1);
        let b = Rational::new(j, j + 1);
        let next = &out[j as usize].shift(1).scale(&a) - &out[j as usize - 1].scale(&b);
        out.push(next);
    }
    out
}

pub fn legendre_via_recursion(n: u32) -> ExactPolynomial {
    legendre_family(n).pop().expect("family is never empty")
}

/// `P_n(x)` by running the three-term recurrence on values rather than
/// polynomials.
pub fn legendre_value(n: u32, x: &Rational) -> Rational {
    let (mut prev, mut cur) = (Rational::one(), x.clone());
    if n == 0 {
        return prev;
    }
    for j in 1..n as i64 {
        let next = (Rational::from_integer(2 * j + 1) * x * &cur - Rational::from_integer(j) * &prev)
            / Rational::from_integer(j + 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// Floating-point `P_n(x)`, for the quadrature checks only.
pub fn legendre_value_f64(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return prev;
    }
    for j in 1..n {
        let j = j as f64;
        let next = ((2.0 * j + 1.0) * x * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}
