use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::exact_arith::Rational;

use super::{probe_unguarded, verify_case, IdentityCase, IdentityId, ParamKind, SuiteError, Value, VerificationResult};

/// Parameterized identities are swept up to this `n` at most.
pub const PARAMETERIZED_N_CAP: i64 = 60;

/// A `mu` sample: a fixed rational or one tied to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuChoice {
    Fixed(Rational),
    EqualsN,
    EqualsNPlus1,
}

impl MuChoice {
    pub fn resolve(&self, n: i64) -> Rational {
        match self {
            MuChoice::Fixed(mu) => mu.clone(),
            MuChoice::EqualsN => Rational::from_integer(n),
            MuChoice::EqualsNPlus1 => Rational::from_integer(n + 1),
        }
    }
}

impl FromStr for MuChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace(' ', "").as_str() {
            "n" => Ok(MuChoice::EqualsN),
            "n+1" => Ok(MuChoice::EqualsNPlus1),
            other => other.parse().map(MuChoice::Fixed).map_err(|e| format!("{e}")),
        }
    }
}

impl fmt::Display for MuChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuChoice::Fixed(mu) => write!(f, "{mu}"),
            MuChoice::EqualsN => f.write_str("n"),
            MuChoice::EqualsNPlus1 => f.write_str("n+1"),
        }
    }
}

/// `m` samples for the log-moment family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MChoice {
    /// Every `0 <= m < n`; `m = n-1` falls outside the guard and is reported
    /// as excluded.
    AllBelowN,
    List(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSamples {
    pub xs: Vec<Rational>,
    pub mus: Vec<MuChoice>,
    pub ms: MChoice,
}

pub fn default_x_grid() -> Vec<Rational> {
    [(0, 1), (1, 1), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1), (-4, 1), (3, 7)]
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect()
}

impl Default for ParamSamples {
    fn default() -> Self {
        ParamSamples {
            xs: default_x_grid(),
            mus: vec![
                MuChoice::Fixed(Rational::new(1, 2)),
                MuChoice::Fixed(Rational::new(3, 2)),
                MuChoice::Fixed(Rational::new(7, 3)),
                MuChoice::Fixed(Rational::from_integer(5)),
                MuChoice::EqualsN,
                MuChoice::EqualsNPlus1,
            ],
            ms: MChoice::AllBelowN,
        }
    }
}

/// Every case of `id` over `n_range` and the parameter samples, in
/// `(n, parameter)` order. Guard-violating cases are included.
pub fn cases_for(id: IdentityId, n_range: RangeInclusive<i64>, samples: &ParamSamples) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for n in n_range {
        match id.param() {
            ParamKind::None => out.push(IdentityCase::new(id, n)),
            ParamKind::X => out.extend(samples.xs.iter().map(|x| IdentityCase::with_x(id, n, x.clone()))),
            ParamKind::Mu => out.extend(samples.mus.iter().map(|mu| IdentityCase::with_mu(id, n, mu.resolve(n)))),
            ParamKind::M => match &samples.ms {
                MChoice::AllBelowN => out.extend((0..n.max(1)).map(|m| IdentityCase::with_m(id, n, m))),
                MChoice::List(ms) => out.extend(ms.iter().map(|&m| IdentityCase::with_m(id, n, m))),
            },
            ParamKind::K => out.extend((0..=n).map(|k| IdentityCase::with_k(id, n, k))),
        }
    }
    out
}

/// A case outside its identity's stated range. Where both sides are still
/// defined they are kept for information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedCase {
    pub case: IdentityCase,
    pub reason: String,
    pub probe: Option<(Value, Value)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RangeOutcome {
    pub results: Vec<VerificationResult>,
    pub excluded: Vec<ExcludedCase>,
}

impl RangeOutcome {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.equal).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }
}

enum Evaluated {
    Verified(VerificationResult),
    Excluded(ExcludedCase),
}

/// Verifies every case of `id` over `n_range`, fanning cases out over the
/// current rayon pool. Output keeps the enumeration order of [`cases_for`].
pub fn verify_range(
    id: IdentityId,
    n_range: RangeInclusive<i64>,
    samples: &ParamSamples,
) -> Result<RangeOutcome, SuiteError> {
    let cases = cases_for(id, n_range, samples);
    let evaluated: Vec<Result<Evaluated, SuiteError>> = cases
        .into_par_iter()
        .map(|case| match case.check_guard() {
            Ok(()) => verify_case(&case).map(Evaluated::Verified),
            Err(SuiteError::GuardViolation { condition, .. }) => {
                let probe = probe_unguarded(&case)
                    .ok()
                    .map(|(lhs, rhs)| (Value::Rational(lhs), Value::Rational(rhs)));
                Ok(Evaluated::Excluded(ExcludedCase { case, reason: format!("requires {condition}"), probe }))
            }
            Err(other) => Err(other),
        })
        .collect();
    let mut outcome = RangeOutcome::default();
    for item in evaluated {
        match item? {
            Evaluated::Verified(r) => outcome.results.push(r),
            Evaluated::Excluded(e) => outcome.excluded.push(e),
        }
    }
    Ok(outcome)
}
