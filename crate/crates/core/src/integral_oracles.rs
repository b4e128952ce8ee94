//! Exact values of the definite integrals behind the integrated identities:
//! moments against `ln(1/x)` on `[0,1]`, against `arcsin(x)` on `[-1,1]`, and
//! against `x^(2mu-1)` on `[0,1]`.
//!
//! The only transcendental input is the arcsin power moment
//! `int_0^1 x^(2n-1) arcsin(x) dx = pi/(4n) (1 - 2^-2n C(2n,n))`; everything
//! else is assembled from it or from polynomial antiderivatives. The
//! [`float_sanity_check`] quadrature is the sole floating-point path and exists
//! to guard that input.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use thiserror::Error;

use crate::exact_arith::{binom, double_factorial, factorial, PiLinear, Rational};
use crate::gamma_ratios::MuParameter;
use crate::legendre_poly::{legendre_value_f64, legendre_via_recursion, ExactPolynomial, InnerPower};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("Gautschi moment needs n > m, got m = {m}, n = {n}")]
    GautschiRange { m: u32, n: u32 },
    #[error("arcsin power moment is only defined here for odd k, got k = {0}")]
    EvenArcsinPower(u32),
}

/// `int_0^1 x^p ln(1/x) dx = 1/(p+1)^2`.
pub fn power_log_moment(p: u32) -> Rational {
    let q = p as i64 + 1;
    Rational::new(1, q * q)
}

/// `int_0^1 p(x) ln(1/x) dx`, term by term.
pub fn poly_log_moment(p: &ExactPolynomial) -> Rational {
    p.coefficients()
        .iter()
        .enumerate()
        .map(|(j, c)| c * power_log_moment(j as u32))
        .sum()
}

/// `int_0^1 x^m ln(1/x) P_n(2x-1) dx = (-1)^(n-m) (m!)^2 (n-m-1)! / (n+m+1)!`.
pub fn gautschi_value(m: u32, n: u32) -> Result<Rational, OracleError> {
    if n <= m {
        return Err(OracleError::GautschiRange { m, n });
    }
    let (m64, n64) = (m as u64, n as u64);
    let numer = factorial(m64).pow(2) * factorial(n64 - m64 - 1);
    let value = Rational::from_bigint(numer) / Rational::from_bigint(factorial(n64 + m64 + 1));
    Ok(Rational::sign_power(n as i64 - m as i64) * value)
}

/// `int_0^1 x^k arcsin(x) dx` for odd `k = 2n-1`.
pub fn arcsin_power_moment(k: u32) -> Result<PiLinear, OracleError> {
    if k % 2 == 0 {
        return Err(OracleError::EvenArcsinPower(k));
    }
    let n = (k as i64 + 1) / 2;
    let wallis = Rational::pow2(-2 * n) * Rational::from_bigint(binom(2 * n as u64, n));
    Ok(PiLinear::pi_multiple((Rational::one() - wallis) / Rational::from_integer(4 * n)))
}

/// `int_{-1}^1 p(x) arcsin(x) dx`. Even powers drop out by symmetry.
pub fn arcsin_poly_moment(p: &ExactPolynomial) -> PiLinear {
    let two = Rational::from_integer(2);
    p.coefficients()
        .iter()
        .enumerate()
        .filter(|(j, c)| j % 2 == 1 && !c.is_zero())
        .map(|(j, c)| {
            arcsin_power_moment(j as u32)
                .expect("odd power")
                .scale(&(c * &two))
        })
        .sum()
}

/// `int_{-1}^1 (1+x)^k arcsin(x) dx = pi (2^k/(k+1) - 2^-k (2k+1) C(2k,k)/(k+1)^2)`.
pub fn binom_arcsin_moment_closed(k: u32) -> PiLinear {
    let k = k as i64;
    let first = Rational::pow2(k) / Rational::from_integer(k + 1);
    let second = Rational::pow2(-k)
        * Rational::from_integer(2 * k + 1)
        * Rational::from_bigint(binom(2 * k as u64, k))
        / Rational::from_integer((k + 1) * (k + 1));
    PiLinear::pi_multiple(first - second)
}

/// `int_{-1}^1 P_n(x) arcsin(x) dx`: zero for even `n`, otherwise
/// `pi ((n-2)!! / (2^((n+1)/2) ((n+1)/2)!))^2`.
pub fn legendre_arcsin_value(n: u32) -> PiLinear {
    if n % 2 == 0 {
        return PiLinear::zero();
    }
    let half = (n as i64 + 1) / 2;
    let base = double_factorial(n as i64 - 2).expect("n >= 1")
        / (Rational::pow2(half) * Rational::from_bigint(factorial(half as u64)));
    PiLinear::pi_multiple(&base * &base)
}

/// `int_0^1 x^(2mu-1) P_n(2x^2-1) dx`, integrated term by term from the
/// expanded polynomial.
pub fn legendre_square_moment(mu: &MuParameter, n: u32) -> Rational {
    let p = legendre_via_recursion(n).compose_linear(
        &Rational::from_integer(2),
        &Rational::from_integer(-1),
        InnerPower::Square,
    );
    square_moment_of(&p, mu)
}

pub(crate) fn square_moment_of(p: &ExactPolynomial, mu: &MuParameter) -> Rational {
    let two_mu = Rational::from_integer(2) * mu.value();
    p.coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| c / (Rational::from_integer(j as i64) + &two_mu))
        .sum()
}

/// The oracles covered by the quadrature cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleKind {
    PowerLogMoment { p: u32 },
    GautschiValue { m: u32, n: u32 },
    ArcsinPowerMoment { k: u32 },
    BinomArcsinMoment { k: u32 },
    LegendreArcsinValue { n: u32 },
    LegendreSquareMoment { mu: MuParameter, n: u32 },
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleKind::PowerLogMoment { p } => write!(f, "power_log_moment(p={p})"),
            OracleKind::GautschiValue { m, n } => write!(f, "gautschi_value(m={m}, n={n})"),
            OracleKind::ArcsinPowerMoment { k } => write!(f, "arcsin_power_moment(k={k})"),
            OracleKind::BinomArcsinMoment { k } => write!(f, "binom_arcsin_moment_closed(k={k})"),
            OracleKind::LegendreArcsinValue { n } => write!(f, "legendre_arcsin_value(n={n})"),
            OracleKind::LegendreSquareMoment { mu, n } => write!(f, "legendre_square_moment(mu={mu}, n={n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SanityError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("quadrature for {kind} did not converge (depth limit hit near x = {at})")]
    NoConvergence { kind: String, at: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SanityReport {
    pub exact: f64,
    pub quadrature: f64,
    pub passed: bool,
}

/// Absolute tolerance between the exact oracle and its quadrature.
pub const SANITY_TOLERANCE: f64 = 1e-10;

const QUADRATURE_TOLERANCE: f64 = 1e-13;
const INITIAL_PANELS: usize = 32;
const MAX_DEPTH: u32 = 48;

/// Compares an oracle with adaptive Simpson quadrature of its integral.
///
/// Endpoint singularities are removed by substitution before integrating, so
/// no panel ever samples a singular point:
/// - `ln(1/x)` weights use `x = u^2`; the integrand `4 u^(2m+1) ln(1/u) g(u^2)`
///   is continuous on `[0,1]` and takes its limit 0 at `u = 0`.
/// - `arcsin` weights use `x = sin(t)` on `[-pi/2, pi/2]`, giving the smooth
///   integrand `g(sin t) t cos t`.
/// - `x^(2mu-1)` weights are bounded for `mu >= 1/2`; smaller `mu` uses
///   `t = x^(2mu)`, giving `g(t^(1/(2mu))) / (2mu)`.
pub fn sanity_detail(kind: &OracleKind) -> Result<SanityReport, SanityError> {
    let label = kind.to_string();
    let (exact, quadrature) = match kind {
        OracleKind::PowerLogMoment { p } => {
            let p = *p;
            let q = log_weighted(&label, |x| x.powi(p as i32))?;
            (power_log_moment(p).to_f64(), q)
        }
        OracleKind::GautschiValue { m, n } => {
            let (m, n) = (*m, *n);
            let exact = gautschi_value(m, n)?.to_f64();
            let q = log_weighted(&label, |x| x.powi(m as i32) * legendre_value_f64(n, 2.0 * x - 1.0))?;
            (exact, q)
        }
        OracleKind::ArcsinPowerMoment { k } => {
            let k = *k;
            let exact = arcsin_power_moment(k)?.to_f64();
            // one-sided: x = sin t on [0, pi/2]
            let q = adaptive_simpson(&label, |t: f64| t.sin().powi(k as i32) * t * t.cos(), 0.0, FRAC_PI_2)?;
            (exact, q)
        }
        OracleKind::BinomArcsinMoment { k } => {
            let k = *k;
            let q = arcsin_weighted(&label, |x| (1.0 + x).powi(k as i32))?;
            (binom_arcsin_moment_closed(k).to_f64(), q)
        }
        OracleKind::LegendreArcsinValue { n } => {
            let n = *n;
            let q = arcsin_weighted(&label, |x| legendre_value_f64(n, x))?;
            (legendre_arcsin_value(n).to_f64(), q)
        }
        OracleKind::LegendreSquareMoment { mu, n } => {
            let n = *n;
            let two_mu = 2.0 * mu.value().to_f64();
            let q = if two_mu >= 1.0 {
                adaptive_simpson(
                    &label,
                    |x: f64| x.powf(two_mu - 1.0) * legendre_value_f64(n, 2.0 * x * x - 1.0),
                    0.0,
                    1.0,
                )?
            } else {
                adaptive_simpson(
                    &label,
                    |t: f64| legendre_value_f64(n, 2.0 * t.powf(2.0 / two_mu) - 1.0) / two_mu,
                    0.0,
                    1.0,
                )?
            };
            (legendre_square_moment(mu, n).to_f64(), q)
        }
    };
    Ok(SanityReport { exact, quadrature, passed: (exact - quadrature).abs() <= SANITY_TOLERANCE })
}

/// `true` when the oracle matches quadrature within [`SANITY_TOLERANCE`].
pub fn float_sanity_check(kind: &OracleKind) -> Result<bool, SanityError> {
    sanity_detail(kind).map(|r| r.passed)
}

/// The fixed grid: `n <= 8`, `m <= 3`, `k <= 8`, and the rational `mu` samples.
pub fn default_sanity_grid() -> Vec<OracleKind> {
    let mut grid = Vec::new();
    for p in 0..=8 {
        grid.push(OracleKind::PowerLogMoment { p });
    }
    for m in 0..=3 {
        for n in m + 1..=8 {
            grid.push(OracleKind::GautschiValue { m, n });
        }
    }
    for k in (1..=8).step_by(2) {
        grid.push(OracleKind::ArcsinPowerMoment { k });
    }
    for k in 0..=8 {
        grid.push(OracleKind::BinomArcsinMoment { k });
    }
    for n in 0..=8 {
        grid.push(OracleKind::LegendreArcsinValue { n });
    }
    for (p, q) in [(1, 2), (3, 2), (7, 3), (5, 1)] {
        let mu = MuParameter::new(Rational::new(p, q)).expect("positive");
        for n in 0..=8 {
            grid.push(OracleKind::LegendreSquareMoment { mu: mu.clone(), n });
        }
    }
    grid
}

fn log_weighted(label: &str, g: impl Fn(f64) -> f64) -> Result<f64, SanityError> {
    adaptive_simpson(
        label,
        |u: f64| if u <= 0.0 { 0.0 } else { 4.0 * u * (-u.ln()) * g(u * u) },
        0.0,
        1.0,
    )
}

fn arcsin_weighted(label: &str, g: impl Fn(f64) -> f64) -> Result<f64, SanityError> {
    adaptive_simpson(label, |t: f64| g(t.sin()) * t * t.cos(), -FRAC_PI_2, FRAC_PI_2)
}

/// Adaptive Simpson with interval halving over a uniform initial partition.
fn adaptive_simpson(label: &str, f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<f64, SanityError> {
    let width = (b - a) / INITIAL_PANELS as f64;
    let tol = QUADRATURE_TOLERANCE / INITIAL_PANELS as f64;
    let mut total = 0.0;
    for i in 0..INITIAL_PANELS {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PANELS { b } else { lo + width };
        let (flo, fmid, fhi) = (f(lo), f(0.5 * (lo + hi)), f(hi));
        let whole = simpson(lo, hi, flo, fmid, fhi);
        total += refine(label, &f, lo, hi, flo, fmid, fhi, whole, tol, MAX_DEPTH)?;
    }
    Ok(total)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine(
    label: &str,
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, SanityError> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 || !delta.is_finite() {
        return Err(SanityError::NoConvergence { kind: label.to_string(), at: m });
    }
    Ok(refine(label, f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
        + refine(label, f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma_ratios::gamma_ratio_a;
    use crate::legendre_poly::legendre_family;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn shifted(n: u32) -> ExactPolynomial {
        legendre_via_recursion(n).compose_linear(&r(2, 1), &r(-1, 1), InnerPower::Linear)
    }

    #[test]
    fn log_moments() {
        assert_eq!(power_log_moment(0), Rational::one());
        assert_eq!(power_log_moment(1), r(1, 4));
        assert_eq!(power_log_moment(9), r(1, 100));
        assert_eq!(poly_log_moment(&shifted(2)), r(1, 6));
        assert_eq!(poly_log_moment(&shifted(1)), r(-1, 2));
        assert_eq!(poly_log_moment(&ExactPolynomial::constant(Rational::one())), Rational::one());
    }

    #[test]
    fn gautschi_examples() {
        assert_eq!(gautschi_value(0, 2).unwrap(), r(1, 6));
        assert_eq!(gautschi_value(0, 1).unwrap(), r(-1, 2));
        assert_eq!(gautschi_value(1, 3).unwrap(), r(1, 120));
        assert_eq!(gautschi_value(1, 3).unwrap(), poly_log_moment(&shifted(3).shift(1)));
        assert_eq!(gautschi_value(3, 3), Err(OracleError::GautschiRange { m: 3, n: 3 }));
    }

    #[test]
    fn gautschi_matches_termwise_to_40() {
        let family: Vec<_> = (0..=40).map(shifted).collect();
        for n in 1..=40u32 {
            for m in 0..n {
                let termwise = poly_log_moment(&family[n as usize].shift(m as usize));
                assert_eq!(gautschi_value(m, n).unwrap(), termwise, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn arcsin_examples() {
        assert_eq!(arcsin_power_moment(1).unwrap(), PiLinear::pi_multiple(r(1, 8)));
        assert_eq!(arcsin_power_moment(3).unwrap(), PiLinear::pi_multiple(r(5, 64)));
        assert_eq!(arcsin_power_moment(5).unwrap(), PiLinear::pi_multiple(r(11, 192)));
        assert_eq!(arcsin_power_moment(4), Err(OracleError::EvenArcsinPower(4)));

        assert_eq!(arcsin_poly_moment(&ExactPolynomial::monomial(1)), PiLinear::pi_multiple(r(1, 4)));
        assert_eq!(arcsin_poly_moment(&ExactPolynomial::monomial(2)), PiLinear::zero());
        assert_eq!(arcsin_poly_moment(&legendre_via_recursion(3)), PiLinear::pi_multiple(r(1, 64)));

        assert_eq!(binom_arcsin_moment_closed(0), PiLinear::zero());
        assert_eq!(binom_arcsin_moment_closed(1), PiLinear::pi_multiple(r(1, 4)));
        assert_eq!(binom_arcsin_moment_closed(2), PiLinear::pi_multiple(r(1, 2)));

        assert_eq!(legendre_arcsin_value(2), PiLinear::zero());
        assert_eq!(legendre_arcsin_value(1), PiLinear::pi_multiple(r(1, 4)));
        assert_eq!(legendre_arcsin_value(3), PiLinear::pi_multiple(r(1, 64)));
    }

    #[test]
    fn arcsin_closed_forms_match_termwise() {
        let family = legendre_family(41);
        for (n, p) in family.iter().enumerate() {
            assert_eq!(legendre_arcsin_value(n as u32), arcsin_poly_moment(p), "n={n}");
        }
        let one_plus_x = ExactPolynomial::from_integers(&[1, 1]);
        for k in 0..=40 {
            assert_eq!(binom_arcsin_moment_closed(k), arcsin_poly_moment(&one_plus_x.pow(k)), "k={k}");
        }
    }

    #[test]
    fn shifted_legendre_integrates_to_zero() {
        for n in 1..=40 {
            assert!(shifted(n).integrate_interval(&Rational::zero(), &Rational::one()).is_zero());
        }
    }

    #[test]
    fn square_moment_matches_gamma_ratio() {
        let samples = [r(1, 2), r(3, 2), r(7, 3), r(5, 1), r(1, 7)];
        for n in 0..=40u32 {
            let mut mus: Vec<Rational> = samples.to_vec();
            mus.extend((1..=n as i64 + 1).map(Rational::from_integer));
            for mu in mus {
                let mu = MuParameter::new(mu).unwrap();
                let twice = legendre_square_moment(&mu, n) * Rational::from_integer(2);
                assert_eq!(twice, gamma_ratio_a(&mu, n), "mu={mu} n={n}");
            }
        }
    }

    #[test]
    fn sanity_examples_pass() {
        assert!(float_sanity_check(&OracleKind::ArcsinPowerMoment { k: 1 }).unwrap());
        assert!(float_sanity_check(&OracleKind::GautschiValue { m: 0, n: 2 }).unwrap());
        assert!(float_sanity_check(&OracleKind::LegendreArcsinValue { n: 3 }).unwrap());
        assert!(matches!(
            float_sanity_check(&OracleKind::GautschiValue { m: 2, n: 1 }),
            Err(SanityError::Oracle(OracleError::GautschiRange { .. }))
        ));
    }

    #[test]
    fn quadrature_reports_divergence_separately() {
        let err = adaptive_simpson("1/x", |x: f64| 1.0 / x, 0.0, 1.0).unwrap_err();
        assert!(matches!(err, SanityError::NoConvergence { .. }));
    }

    #[test]
    fn quadrature_detects_wrong_oracle() {
        // A deliberately perturbed exact value must fail the comparison.
        let q = arcsin_weighted("P_3", |x| legendre_value_f64(3, x)).unwrap();
        let wrong = PiLinear::pi_multiple(r(1, 63)).to_f64();
        assert!((q - wrong).abs() > SANITY_TOLERANCE);
    }
}
