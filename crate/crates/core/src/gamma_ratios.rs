//! Gamma-function ratios rewritten as rising factorials, so that every value
//! is an exact rational and poles of `Gamma(mu - n)` show up as zero factors.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact_arith::{pochhammer_rising, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("mu must be positive, got {0}")]
    NonPositiveMu(Rational),
    #[error("n must be at least 1")]
    IndexZero,
}

/// A strictly positive rational `mu`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MuParameter(Rational);

impl MuParameter {
    pub fn new(mu: Rational) -> Result<Self, GammaError> {
        if !mu.is_positive() {
            return Err(GammaError::NonPositiveMu(mu));
        }
        Ok(MuParameter(mu))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl TryFrom<Rational> for MuParameter {
    type Error = GammaError;
    fn try_from(mu: Rational) -> Result<Self, Self::Error> {
        MuParameter::new(mu)
    }
}

impl FromStr for MuParameter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mu: Rational = s.parse().map_err(|e: crate::exact_arith::ArithError| e.to_string())?;
        MuParameter::new(mu).map_err(|e| e.to_string())
    }
}

impl fmt::Display for MuParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Gamma(mu)^2 / (Gamma(mu+n+1) Gamma(mu-n))`, computed as
/// `(mu-n)_n / (mu)_{n+1}`.
pub fn gamma_ratio_a(mu: &MuParameter, n: u32) -> Rational {
    let mu = mu.value();
    let numerator = pochhammer_rising(&(mu - Rational::from_integer(n as i64)), n);
    let denominator = pochhammer_rising(mu, n + 1);
    numerator / denominator
}

/// Closed form of `sum_k C(n+k,2k) C(2k,k) (-1)^k / ((n+k)(2k+2mu))`:
/// `(-1)^n/(4n) (A(mu,n) - A(mu,n-1))` with `A` = [`gamma_ratio_a`].
pub fn theorem33_rhs(mu: &MuParameter, n: u32) -> Result<Rational, GammaError> {
    if n == 0 {
        return Err(GammaError::IndexZero);
    }
    let diff = gamma_ratio_a(mu, n) - gamma_ratio_a(mu, n - 1);
    Ok(Rational::sign_power(n as i64) * diff / Rational::from_integer(4 * n as i64))
}
