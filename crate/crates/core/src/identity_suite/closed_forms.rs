//! Right-hand sides, evaluated from Legendre values, Gamma ratios and
//! factorial closed forms. Piecewise entries follow their stated case splits.

use crate::exact_arith::{binom, factorial, ArithError, Rational};
use crate::gamma_ratios::{theorem33_rhs, MuParameter};
use crate::legendre_poly::{legendre_value, legendre_via_recursion, legendre_via_sum};
use crate::series_engine::generating_series;

use super::{IdentityCase, IdentityId, SuiteError};

fn c(n: i64, k: i64) -> Rational {
    Rational::from_bigint(binom(n as u64, k))
}

fn fact(n: i64) -> Rational {
    Rational::from_bigint(factorial(n as u64))
}

fn ratio(p: i64, q: i64) -> Result<Rational, ArithError> {
    Rational::checked_ratio(p, q)
}

/// `(-1)^n/(2n) (a_n - a_{n-1})`.
fn legendre_difference(n: i64, current: Rational, previous: Rational) -> Result<Rational, ArithError> {
    (Rational::sign_power(n) * (current - previous)).checked_div(&Rational::from_integer(2 * n))
}

/// How `P_n(y)` is obtained when evaluating the main theorem's right side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegendreRoute {
    /// Three-term recurrence on values.
    ValueRecurrence,
    /// Polynomial from the recurrence, then Horner.
    RecursionPolynomial,
    /// Polynomial from the expanded Leibniz sum, then Horner.
    LeibnizSum,
    /// Coefficients of the generating series.
    GeneratingSeries,
}

impl LegendreRoute {
    pub const ALL: [LegendreRoute; 4] = [
        LegendreRoute::ValueRecurrence,
        LegendreRoute::RecursionPolynomial,
        LegendreRoute::LeibnizSum,
        LegendreRoute::GeneratingSeries,
    ];

    /// `(P_{n-1}(y), P_n(y))`.
    fn pair(self, n: u32, y: &Rational) -> (Rational, Rational) {
        match self {
            LegendreRoute::ValueRecurrence => (legendre_value(n - 1, y), legendre_value(n, y)),
            LegendreRoute::RecursionPolynomial => {
                (legendre_via_recursion(n - 1).eval(y), legendre_via_recursion(n).eval(y))
            }
            LegendreRoute::LeibnizSum => (legendre_via_sum(n - 1).eval(y), legendre_via_sum(n).eval(y)),
            LegendreRoute::GeneratingSeries => {
                let series = generating_series(y, n as usize);
                (series.coefficient(n as usize - 1).clone(), series.coefficient(n as usize).clone())
            }
        }
    }
}

/// `(-1)^n/(2n) (P_n(y) - P_{n-1}(y))` with `y = -(x+2)/2`, via `route`.
pub fn main_theorem_rhs_via(route: LegendreRoute, n: u32, x: &Rational) -> Result<Rational, SuiteError> {
    if n == 0 {
        return Err(SuiteError::GuardViolation {
            id: IdentityId::MainTheorem,
            n: 0,
            condition: "n >= 1".into(),
        });
    }
    let y = -(x + Rational::from_integer(2)) / Rational::from_integer(2);
    let (previous, current) = route.pair(n, &y);
    Ok(legendre_difference(n as i64, current, previous)?)
}

/// `S_n = (-5/4)^n sum_k C(n,k)^2 5^-k` and `Q_n = (-3/4)^n sum_k C(n,k)^2 (-1)^k 3^-k`,
/// which equal `P_n(-3/2)` and `P_n(-1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormValues {
    pub s_n: Rational,
    pub q_n: Rational,
}

impl ClosedFormValues {
    pub fn compute(n: u32) -> Self {
        let n = n as i64;
        let fifth = Rational::new(1, 5);
        let minus_third = Rational::new(-1, 3);
        let mut s = Rational::zero();
        let mut q = Rational::zero();
        for k in 0..=n {
            let sq = c(n, k) * c(n, k);
            s += &sq * fifth.pow(k as i32).expect("nonzero base");
            q += sq * minus_third.pow(k as i32).expect("nonzero base");
        }
        let s_n = Rational::new(-5, 4).pow(n as i32).expect("nonzero base") * s;
        let q_n = Rational::new(-3, 4).pow(n as i32).expect("nonzero base") * q;
        ClosedFormValues { s_n, q_n }
    }
}

pub(super) fn rhs_unguarded(case: &IdentityCase) -> Result<Rational, SuiteError> {
    let n = case.n;
    if n < 0 {
        return Err(SuiteError::GuardViolation { id: case.id, n, condition: "n >= 0".into() });
    }
    let value = match case.id {
        IdentityId::MainTheorem => {
            let y = -(case.x()? + Rational::from_integer(2)) / Rational::from_integer(2);
            let previous = legendre_value((n - 1).max(0) as u32, &y);
            legendre_difference(n, legendre_value(n as u32, &y), previous)?
        }
        IdentityId::MainTransformed => {
            let y = Rational::from_integer(2) * case.x()? - Rational::one();
            let previous = legendre_value((n - 1).max(0) as u32, &y);
            legendre_difference(n, legendre_value(n as u32, &y), previous)?
        }
        IdentityId::SnClosed => {
            let cur = ClosedFormValues::compute(n as u32);
            let prev = ClosedFormValues::compute((n - 1).max(0) as u32);
            legendre_difference(n, cur.s_n, prev.s_n)?
        }
        IdentityId::QnClosed => {
            let cur = ClosedFormValues::compute(n as u32);
            let prev = ClosedFormValues::compute((n - 1).max(0) as u32);
            legendre_difference(n, cur.q_n, prev.q_n)?
        }
        IdentityId::AlternatingZero => Rational::zero(),
        IdentityId::P0Even => (Rational::sign_power(n) * Rational::pow2(-2 * n) * c(2 * n, n))
            .checked_div(&Rational::from_integer(4 * n))?,
        IdentityId::P0Odd => Rational::sign_power(n) * Rational::pow2(-2 * n) * c(2 * n, n)
            / Rational::from_integer(2 * (2 * n + 1)),
        IdentityId::IntUnit => match n {
            1 => Rational::new(1, 2),
            _ => Rational::zero(),
        },
        IdentityId::IntUnitK => match n {
            1 => Rational::new(-1, 2),
            _ => Rational::zero(),
        },
        IdentityId::GammaMu => {
            let mu = MuParameter::new(case.mu()?.clone()).map_err(|_| SuiteError::GuardViolation {
                id: case.id,
                n,
                condition: "mu > 0".into(),
            })?;
            theorem33_rhs(&mu, n as u32).map_err(|_| SuiteError::GuardViolation {
                id: case.id,
                n,
                condition: "n >= 1".into(),
            })?
        }
        IdentityId::MuHalf => ratio(2, (2 * n - 1) * (2 * n + 1))?,
        IdentityId::MuThreeHalf => ratio(-2, (2 * n - 3) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3))?,
        IdentityId::MuN => Rational::sign_power(n + 1).checked_div(&(Rational::from_integer(n * n) * c(2 * n, n)))?,
        IdentityId::MuNPlus1 => Rational::sign_power(n + 1) / (Rational::from_integer(2 * n + 1) * c(2 * n, n)),
        IdentityId::ComboK2k1 => ratio(1, (2 * n - 1) * (2 * n + 1))?,
        IdentityId::ComboK12k3 => ratio(1, (2 * n - 3) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3))?,
        IdentityId::ComboSquared => (Rational::sign_power(n) * Rational::from_integer(n * n - 2 * n - 1))
            .checked_div(&(Rational::from_integer(n * n * (2 * n + 1)) * c(2 * n, n)))?,
        IdentityId::LogMoment => {
            let m = case.m()?;
            if m < 0 || n - m - 2 < 0 {
                return Err(SuiteError::GuardViolation { id: case.id, n, condition: "0 <= m < n-1".into() });
            }
            Rational::sign_power(m) * fact(m) * fact(m) * fact(n - m - 2) / fact(n + m + 1)
        }
        IdentityId::LogM0 => match n {
            1 => Rational::new(3, 4),
            _ => ratio(1, (n - 1) * n * (n + 1))?,
        },
        IdentityId::LogM1 => match n {
            1 => Rational::new(-5, 36),
            2 => Rational::new(1, 288),
            _ => ratio(1, (n - 2) * (n - 1) * n * (n + 1) * (n + 2))?,
        },
        IdentityId::LogMN2 => (Rational::sign_power(n) * Rational::from_integer(2))
            .checked_div(&(Rational::from_integer((n - 1) * (n - 1) * n) * c(2 * n, n)))?,
        IdentityId::ArcsinEven => {
            if n == 0 {
                return Err(ArithError::DivisionByZero.into());
            }
            let central = c(2 * (n - 1), n - 1);
            Rational::pow2(-4 * n) * &central * &central / Rational::from_integer(n * n * n)
        }
        IdentityId::ArcsinOdd => {
            let central = c(2 * n, n);
            Rational::pow2(-(4 * n + 3)) * &central * &central
                / Rational::from_integer((2 * n + 1) * (n + 1) * (n + 1))
        }
        IdentityId::HelperBinomEqualities => {
            // Reports the first form in the chain that departs from the
            // leading product, or the last form when all agree.
            let k = case.k()?;
            if k < 0 || k > n {
                return Err(SuiteError::GuardViolation { id: case.id, n, condition: "0 <= k <= n".into() });
            }
            let first = c(n + k, k) * c(n, k);
            let chain = [
                c(n + k, n) * c(n, n - k),
                c(n + k, n - k) * c(2 * k, k),
                c(n + k, 2 * k) * c(2 * k, k),
            ];
            chain.iter().find(|v| **v != first).unwrap_or(&chain[2]).clone()
        }
        IdentityId::HelperOddHarmonic => {
            (Rational::pow2(n + 1) - Rational::from_integer(2)) / Rational::from_integer(n + 1)
        }
        IdentityId::HelperBataille => c(2 * n, n),
        IdentityId::HelperWeightedCentral => {
            let denom = Rational::from_integer((n + 1) * (n + 1));
            Rational::new(-2, n + 1)
                + Rational::pow2(1 - n) * Rational::from_integer(2 * n + 1) * c(2 * n, n) / denom
        }
    };
    Ok(value)
}
