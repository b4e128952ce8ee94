//! Finite sub-identities used when integrating against `arcsin`, and the
//! integral pipeline that reproduces the arcsin identities.

use std::fmt;

use crate::exact_arith::{binom, PiLinear, Rational};
use crate::integral_oracles::{binom_arcsin_moment_closed, legendre_arcsin_value};

use super::{probe_unguarded, IdentityCase, IdentityId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HelperIdentity {
    /// The four equal binomial products.
    BinomialChain,
    /// `sum_j C(k,2j-1)/j = (2^(k+1)-2)/(k+1)`.
    OddHarmonic,
    /// `sum_j C(m,j) C(m-j,j) 2^(m-2j) = C(2m,m)`.
    Bataille,
    /// `sum_j C(k,2j-1) 4^-j C(2j,j)/j` in closed form.
    WeightedCentral,
}

impl HelperIdentity {
    fn id(self) -> IdentityId {
        match self {
            HelperIdentity::BinomialChain => IdentityId::HelperBinomEqualities,
            HelperIdentity::OddHarmonic => IdentityId::HelperOddHarmonic,
            HelperIdentity::Bataille => IdentityId::HelperBataille,
            HelperIdentity::WeightedCentral => IdentityId::HelperWeightedCentral,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelperFailure {
    pub identity: HelperIdentity,
    pub index: i64,
    pub inner: Option<i64>,
}

impl fmt::Display for HelperFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at index {}", self.identity.id(), self.index)?;
        if let Some(k) = self.inner {
            write!(f, " (k = {k})")?;
        }
        Ok(())
    }
}

/// Checks the four helper identities for every index up to `k_max`; the
/// binomial chain is checked for all `0 <= k <= n <= k_max`.
pub fn helper_identities_check(k_max: i64) -> Result<(), HelperFailure> {
    for index in 0..=k_max {
        for k in 0..=index {
            let case = IdentityCase::with_k(IdentityId::HelperBinomEqualities, index, k);
            if !sides_agree(&case) {
                return Err(HelperFailure { identity: HelperIdentity::BinomialChain, index, inner: Some(k) });
            }
        }
        for identity in [HelperIdentity::OddHarmonic, HelperIdentity::Bataille, HelperIdentity::WeightedCentral] {
            if !sides_agree(&IdentityCase::new(identity.id(), index)) {
                return Err(HelperFailure { identity, index, inner: None });
            }
        }
    }
    Ok(())
}

fn sides_agree(case: &IdentityCase) -> bool {
    matches!(probe_unguarded(case), Ok((lhs, rhs)) if lhs == rhs)
}

/// Both sides of the arcsin-weighted integral identity at top index `big`:
///
/// ```text
/// sum_k T(N,k) (-1)^k 2^-k/(N+k) int_{-1}^1 (1+x)^k arcsin(x) dx
///     = (-1)^N/(2N) (I_N - I_{N-1}),   I_j = int_{-1}^1 P_j(x) arcsin(x) dx.
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineValues {
    pub moment_side: PiLinear,
    pub legendre_side: PiLinear,
}

pub fn arcsin_pipeline(big: u32) -> PipelineValues {
    assert!(big >= 1, "top index must be positive");
    let n = big as i64;
    let moment_side = (0..=n)
        .map(|k| {
            let weight = Rational::from_bigint(binom((n + k) as u64, 2 * k) * binom(2 * k as u64, k))
                * Rational::sign_power(k)
                * Rational::pow2(-k)
                / Rational::from_integer(n + k);
            binom_arcsin_moment_closed(k as u32).scale(&weight)
        })
        .sum();
    let factor = Rational::sign_power(n) / Rational::from_integer(2 * n);
    let legendre_side = (legendre_arcsin_value(big) - legendre_arcsin_value(big - 1)).scale(&factor);
    PipelineValues { moment_side, legendre_side }
}
