//! The identity catalog: every entry pairs a direct term-by-term summation
//! (the oracle side) with an independent closed-form evaluation.

mod closed_forms;
mod cross_checks;
mod registry;
mod sums;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::exact_arith::{ArithError, PiLinear, Rational};

pub use closed_forms::{main_theorem_rhs_via, ClosedFormValues, LegendreRoute};
pub use cross_checks::{
    arcsin_pipeline, helper_identities_check, HelperFailure, HelperIdentity, PipelineValues,
};
pub use registry::{lookup, registry_list, IdentityDescriptor, IdentityId, ParamKind};
pub use sweep::{
    cases_for, default_x_grid, verify_range, ExcludedCase, MChoice, MuChoice, ParamSamples, RangeOutcome,
    PARAMETERIZED_N_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),
    #[error("{id} at n = {n}: guard violated, requires {condition}")]
    GuardViolation { id: IdentityId, n: i64, condition: String },
    #[error("{id} needs parameter {param}")]
    MissingParam { id: IdentityId, param: &'static str },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Parameters beyond `n`; only the one named by the identity's
/// [`ParamKind`] is read.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseParams {
    pub x: Option<Rational>,
    pub mu: Option<Rational>,
    pub m: Option<i64>,
    pub k: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub n: i64,
    pub params: CaseParams,
}

impl IdentityCase {
    pub fn new(id: IdentityId, n: i64) -> Self {
        IdentityCase { id, n, params: CaseParams::default() }
    }

    pub fn with_x(id: IdentityId, n: i64, x: Rational) -> Self {
        IdentityCase { id, n, params: CaseParams { x: Some(x), ..CaseParams::default() } }
    }

    pub fn with_mu(id: IdentityId, n: i64, mu: Rational) -> Self {
        IdentityCase { id, n, params: CaseParams { mu: Some(mu), ..CaseParams::default() } }
    }

    pub fn with_m(id: IdentityId, n: i64, m: i64) -> Self {
        IdentityCase { id, n, params: CaseParams { m: Some(m), ..CaseParams::default() } }
    }

    pub fn with_k(id: IdentityId, n: i64, k: i64) -> Self {
        IdentityCase { id, n, params: CaseParams { k: Some(k), ..CaseParams::default() } }
    }

    /// The identity's own parameter as `name -> exact string`.
    pub fn params_map(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        let p = &self.params;
        match self.id.param() {
            ParamKind::None => {}
            ParamKind::X => {
                if let Some(x) = &p.x {
                    out.insert("x".into(), x.to_string());
                }
            }
            ParamKind::Mu => {
                if let Some(mu) = &p.mu {
                    out.insert("mu".into(), mu.to_string());
                }
            }
            ParamKind::M => {
                if let Some(m) = p.m {
                    out.insert("m".into(), m.to_string());
                }
            }
            ParamKind::K => {
                if let Some(k) = p.k {
                    out.insert("k".into(), k.to_string());
                }
            }
        }
        out
    }

    pub(crate) fn x(&self) -> Result<&Rational, SuiteError> {
        self.params.x.as_ref().ok_or(SuiteError::MissingParam { id: self.id, param: "x" })
    }

    pub(crate) fn mu(&self) -> Result<&Rational, SuiteError> {
        self.params.mu.as_ref().ok_or(SuiteError::MissingParam { id: self.id, param: "mu" })
    }

    pub(crate) fn m(&self) -> Result<i64, SuiteError> {
        self.params.m.ok_or(SuiteError::MissingParam { id: self.id, param: "m" })
    }

    pub(crate) fn k(&self) -> Result<i64, SuiteError> {
        self.params.k.ok_or(SuiteError::MissingParam { id: self.id, param: "k" })
    }

    /// Checks the admissibility conditions the identity is stated under.
    pub fn check_guard(&self) -> Result<(), SuiteError> {
        let n = self.n;
        let violated = |condition: &str| {
            Err(SuiteError::GuardViolation { id: self.id, n, condition: condition.to_string() })
        };
        if n < self.id.min_n() {
            return violated(self.id.descriptor().guard);
        }
        match self.id.param() {
            ParamKind::X => {
                self.x()?;
            }
            ParamKind::Mu => {
                if !self.mu()?.is_positive() {
                    return violated("mu > 0");
                }
            }
            ParamKind::M => {
                let m = self.m()?;
                if m < 0 || m >= n - 1 {
                    return violated("0 <= m < n-1");
                }
            }
            ParamKind::K => {
                let k = self.k()?;
                if k < 0 || k > n {
                    return violated("0 <= k <= n");
                }
            }
            ParamKind::None => {}
        }
        Ok(())
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}", self.id, self.n)?;
        for (k, v) in self.params_map() {
            write!(f, ", {k}={v}")?;
        }
        write!(f, ")")
    }
}

/// A compared value: rational for registry identities, `Q + Q*pi` for the
/// integral pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    PiLinear(PiLinear),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::PiLinear(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationResult {
    pub case: IdentityCase,
    pub lhs: Value,
    pub rhs: Value,
    pub equal: bool,
    pub elapsed: Duration,
}

/// Direct summation side; fails on guard violations.
pub fn lhs_sum(case: &IdentityCase) -> Result<Rational, SuiteError> {
    case.check_guard()?;
    sums::lhs_unguarded(case)
}

/// Closed-form side; fails on guard violations.
pub fn rhs_closed(case: &IdentityCase) -> Result<Rational, SuiteError> {
    case.check_guard()?;
    closed_forms::rhs_unguarded(case)
}

/// Both sides evaluated without the guard, for probing outside the stated
/// range. Fails only where a formula is undefined (e.g. a zero divisor).
pub fn probe_unguarded(case: &IdentityCase) -> Result<(Rational, Rational), SuiteError> {
    Ok((sums::lhs_unguarded(case)?, closed_forms::rhs_unguarded(case)?))
}

pub fn verify_case(case: &IdentityCase) -> Result<VerificationResult, SuiteError> {
    case.check_guard()?;
    let start = Instant::now();
    let lhs = sums::lhs_unguarded(case)?;
    let rhs = closed_forms::rhs_unguarded(case)?;
    let elapsed = start.elapsed();
    Ok(VerificationResult {
        case: case.clone(),
        equal: lhs == rhs,
        lhs: Value::Rational(lhs),
        rhs: Value::Rational(rhs),
        elapsed,
    })
}

#[cfg(test)]
mod tests;
