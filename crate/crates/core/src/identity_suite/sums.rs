//! Left-hand sides, summed term by term with no simplification.

use crate::exact_arith::{binom, ArithError, Rational};

use super::{IdentityCase, IdentityId, SuiteError};

fn c(n: i64, k: i64) -> Rational {
    Rational::from_bigint(binom(n as u64, k))
}

/// `C(n+k,2k) C(2k,k)`.
fn t(n: i64, k: i64) -> Rational {
    c(n + k, 2 * k) * c(2 * k, k)
}

fn over(numer: Rational, denom: i64) -> Result<Rational, ArithError> {
    numer.checked_div(&Rational::from_integer(denom))
}

fn sum_to(
    upper: i64,
    mut term: impl FnMut(i64) -> Result<Rational, ArithError>,
) -> Result<Rational, SuiteError> {
    let mut acc = Rational::zero();
    for k in 0..=upper {
        acc += term(k)?;
    }
    Ok(acc)
}

/// `sum_k T(n,k) (-1)^k w(k) / (n+k)` over `0..=n`, the shape shared by most
/// entries.
fn alternating(n: i64, w: impl Fn(i64) -> Result<Rational, ArithError>) -> Result<Rational, SuiteError> {
    sum_to(n, |k| over(t(n, k) * Rational::sign_power(k) * w(k)?, n + k))
}

fn inv(d: i64) -> Result<Rational, ArithError> {
    Rational::checked_ratio(1, d)
}

/// Arcsin-family sum with top index `big` (= 2n or 2n+1).
fn arcsin_family(big: i64) -> Result<Rational, SuiteError> {
    sum_to(big, |k| {
        let term = t(big, k)
            * c(2 * k, k)
            * Rational::pow2(-2 * k)
            * Rational::from_integer(2 * k + 1)
            * Rational::sign_power(k);
        over(term, (big + k) * (k + 1) * (k + 1))
    })
}

pub(super) fn lhs_unguarded(case: &IdentityCase) -> Result<Rational, SuiteError> {
    let n = case.n;
    if n < 0 {
        return Err(SuiteError::GuardViolation { id: case.id, n, condition: "n >= 0".into() });
    }
    let one = || Ok(Rational::one());
    match case.id {
        IdentityId::MainTheorem => {
            let x = case.x()?.clone();
            sum_to(n, |k| over(t(n, k) * Rational::pow2(-2 * k) * x.pow(k as i32)?, n + k))
        }
        IdentityId::MainTransformed => {
            let x = case.x()?.clone();
            alternating(n, |k| x.pow(k as i32))
        }
        IdentityId::SnClosed => sum_to(n, |k| over(t(n, k) * Rational::pow2(-2 * k), n + k)),
        IdentityId::QnClosed => alternating(n, |k| Ok(Rational::pow2(-2 * k))),
        IdentityId::AlternatingZero => alternating(n, |_| one()),
        IdentityId::P0Even => {
            let big = 2 * n;
            alternating(big, |k| Ok(Rational::pow2(-k)))
        }
        IdentityId::P0Odd => {
            let big = 2 * n + 1;
            alternating(big, |k| Ok(Rational::pow2(-k)))
        }
        IdentityId::IntUnit => alternating(n, |k| inv(k + 1)),
        IdentityId::IntUnitK => alternating(n, |k| Rational::checked_ratio(k, k + 1)),
        IdentityId::GammaMu => {
            let two_mu = Rational::from_integer(2) * case.mu()?;
            alternating(n, |k| (Rational::from_integer(2 * k) + &two_mu).recip())
        }
        IdentityId::MuHalf => alternating(n, |k| inv(2 * k + 1)),
        IdentityId::MuThreeHalf => alternating(n, |k| inv(2 * k + 3)),
        IdentityId::MuN => alternating(n, |k| inv(n + k)),
        IdentityId::MuNPlus1 => alternating(n, |k| inv(n + 1 + k)),
        IdentityId::ComboK2k1 => alternating(n, |k| Rational::checked_ratio(-k, 2 * k + 1)),
        IdentityId::ComboK12k3 => alternating(n, |k| Rational::checked_ratio(k + 1, 2 * k + 3)),
        IdentityId::ComboSquared => alternating(n, |k| inv((n + k) * (n + 1 + k))),
        IdentityId::LogMoment => {
            let m = case.m()?;
            alternating(n, |k| inv((m + k + 1) * (m + k + 1)))
        }
        IdentityId::LogM0 => alternating(n, |k| inv((k + 1) * (k + 1))),
        IdentityId::LogM1 => alternating(n, |k| Rational::checked_ratio(-1, (k + 2) * (k + 2))),
        IdentityId::LogMN2 => alternating(n, |k| inv((n - 1 + k) * (n - 1 + k))),
        IdentityId::ArcsinEven => arcsin_family(2 * n),
        IdentityId::ArcsinOdd => arcsin_family(2 * n + 1),
        IdentityId::HelperBinomEqualities => {
            let k = case.k()?;
            if k < 0 || k > n {
                return Err(SuiteError::GuardViolation { id: case.id, n, condition: "0 <= k <= n".into() });
            }
            Ok(c(n + k, k) * c(n, k))
        }
        IdentityId::HelperOddHarmonic => {
            let upper = (n + 1) / 2;
            let mut acc = Rational::zero();
            for j in 1..=upper {
                acc += over(c(n, 2 * j - 1), j)?;
            }
            Ok(acc)
        }
        IdentityId::HelperBataille => {
            Ok((0..=n / 2).map(|j| c(n, j) * c(n - j, j) * Rational::pow2(n - 2 * j)).sum())
        }
        IdentityId::HelperWeightedCentral => {
            let upper = (n + 1) / 2;
            let mut acc = Rational::zero();
            for j in 1..=upper {
                acc += over(c(n, 2 * j - 1) * Rational::pow2(-2 * j) * c(2 * j, j), j)?;
            }
            Ok(acc)
        }
    }
}
