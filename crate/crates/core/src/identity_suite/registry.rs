use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SuiteError;

/// Stable keys of the closed identity catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    MainTheorem,
    MainTransformed,
    SnClosed,
    QnClosed,
    AlternatingZero,
    P0Even,
    P0Odd,
    IntUnit,
    IntUnitK,
    GammaMu,
    MuHalf,
    MuThreeHalf,
    MuN,
    MuNPlus1,
    ComboK2k1,
    ComboK12k3,
    ComboSquared,
    LogMoment,
    LogM0,
    LogM1,
    LogMN2,
    ArcsinEven,
    ArcsinOdd,
    HelperBinomEqualities,
    HelperOddHarmonic,
    HelperBataille,
    HelperWeightedCentral,
}

impl IdentityId {
    pub const ALL: [IdentityId; 27] = [
        IdentityId::MainTheorem,
        IdentityId::MainTransformed,
        IdentityId::SnClosed,
        IdentityId::QnClosed,
        IdentityId::AlternatingZero,
        IdentityId::P0Even,
        IdentityId::P0Odd,
        IdentityId::IntUnit,
        IdentityId::IntUnitK,
        IdentityId::GammaMu,
        IdentityId::MuHalf,
        IdentityId::MuThreeHalf,
        IdentityId::MuN,
        IdentityId::MuNPlus1,
        IdentityId::ComboK2k1,
        IdentityId::ComboK12k3,
        IdentityId::ComboSquared,
        IdentityId::LogMoment,
        IdentityId::LogM0,
        IdentityId::LogM1,
        IdentityId::LogMN2,
        IdentityId::ArcsinEven,
        IdentityId::ArcsinOdd,
        IdentityId::HelperBinomEqualities,
        IdentityId::HelperOddHarmonic,
        IdentityId::HelperBataille,
        IdentityId::HelperWeightedCentral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::MainTheorem => "main_theorem",
            IdentityId::MainTransformed => "main_transformed",
            IdentityId::SnClosed => "sn_closed",
            IdentityId::QnClosed => "qn_closed",
            IdentityId::AlternatingZero => "alternating_zero",
            IdentityId::P0Even => "p0_even",
            IdentityId::P0Odd => "p0_odd",
            IdentityId::IntUnit => "int_unit",
            IdentityId::IntUnitK => "int_unit_k",
            IdentityId::GammaMu => "gamma_mu",
            IdentityId::MuHalf => "mu_half",
            IdentityId::MuThreeHalf => "mu_three_half",
            IdentityId::MuN => "mu_n",
            IdentityId::MuNPlus1 => "mu_n_plus_1",
            IdentityId::ComboK2k1 => "combo_k_2k1",
            IdentityId::ComboK12k3 => "combo_k1_2k3",
            IdentityId::ComboSquared => "combo_squared",
            IdentityId::LogMoment => "log_moment",
            IdentityId::LogM0 => "log_m0",
            IdentityId::LogM1 => "log_m1",
            IdentityId::LogMN2 => "log_m_n2",
            IdentityId::ArcsinEven => "arcsin_even",
            IdentityId::ArcsinOdd => "arcsin_odd",
            IdentityId::HelperBinomEqualities => "helper_binom_equalities",
            IdentityId::HelperOddHarmonic => "helper_odd_harmonic",
            IdentityId::HelperBataille => "helper_bataille",
            IdentityId::HelperWeightedCentral => "helper_weighted_central",
        }
    }

    pub fn descriptor(self) -> &'static IdentityDescriptor {
        REGISTRY.iter().find(|d| d.id == self).expect("every id has a descriptor")
    }

    pub fn param(self) -> ParamKind {
        self.descriptor().param
    }

    /// Smallest `n` admitted by the guard (parameter guards aside).
    pub fn min_n(self) -> i64 {
        self.descriptor().min_n
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| SuiteError::UnknownIdentity(s.to_string()))
    }
}

/// The extra parameter an identity takes besides `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    None,
    X,
    Mu,
    M,
    /// Inner binomial index, `0 <= k <= n`.
    K,
}

impl ParamKind {
    pub fn name(self) -> Option<&'static str> {
        match self {
            ParamKind::None => None,
            ParamKind::X => Some("x"),
            ParamKind::Mu => Some("mu"),
            ParamKind::M => Some("m"),
            ParamKind::K => Some("k"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    /// Human-readable statement `lhs = rhs`.
    pub statement: &'static str,
    pub param: ParamKind,
    pub min_n: i64,
    pub guard: &'static str,
}

const fn entry(
    id: IdentityId,
    statement: &'static str,
    param: ParamKind,
    min_n: i64,
    guard: &'static str,
) -> IdentityDescriptor {
    IdentityDescriptor { id, statement, param, min_n, guard }
}

// T(n,k) below abbreviates C(n+k,2k) C(2k,k).
static REGISTRY: [IdentityDescriptor; 27] = [
    entry(
        IdentityId::MainTheorem,
        "sum_k T(n,k) 4^-k x^k/(n+k) = (-1)^n/(2n) (P_n(y) - P_{n-1}(y)), y = -(x+2)/2",
        ParamKind::X,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::MainTransformed,
        "sum_k T(n,k) (-1)^k x^k/(n+k) = (-1)^n/(2n) (P_n(2x-1) - P_{n-1}(2x-1))",
        ParamKind::X,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::SnClosed,
        "sum_k T(n,k) 4^-k/(n+k) = (-1)^n/(2n) (S_n - S_{n-1}), S_n = (-5/4)^n sum_k C(n,k)^2 5^-k",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::QnClosed,
        "sum_k T(n,k) (-1)^k 4^-k/(n+k) = (-1)^n/(2n) (Q_n - Q_{n-1}), Q_n = (-3/4)^n sum_k C(n,k)^2 (-3)^-k",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::AlternatingZero,
        "sum_k T(n,k) (-1)^k/(n+k) = 0",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::P0Even,
        "sum_{k<=2n} T(2n,k) (-1)^k 2^-k/(2n+k) = (-1)^n/(4n) 4^-n C(2n,n)",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::P0Odd,
        "sum_{k<=2n+1} T(2n+1,k) (-1)^k 2^-k/(2n+1+k) = (-1)^n/(2(2n+1)) 4^-n C(2n,n)",
        ParamKind::None,
        0,
        "n >= 0",
    ),
    entry(
        IdentityId::IntUnit,
        "sum_k T(n,k) (-1)^k/((n+k)(k+1)) = 1/2 if n = 1, 0 if n >= 2",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::IntUnitK,
        "sum_k T(n,k) (-1)^k k/((n+k)(k+1)) = -1/2 if n = 1, 0 if n >= 2",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::GammaMu,
        "sum_k T(n,k) (-1)^k/((n+k)(2k+2mu)) = (-1)^n/(4n) (G(mu)^2/(G(mu+n+1)G(mu-n)) - G(mu)^2/(G(mu+n)G(mu+1-n)))",
        ParamKind::Mu,
        1,
        "n >= 1, mu > 0",
    ),
    entry(
        IdentityId::MuHalf,
        "sum_k T(n,k) (-1)^k/((n+k)(2k+1)) = 2/((2n-1)(2n+1))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::MuThreeHalf,
        "sum_k T(n,k) (-1)^k/((n+k)(2k+3)) = -2/((2n-3)(2n-1)(2n+1)(2n+3))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::MuN,
        "sum_k T(n,k) (-1)^k/(n+k)^2 = (-1)^(n+1)/(n^2 C(2n,n))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::MuNPlus1,
        "sum_k T(n,k) (-1)^k/((n+k)(n+1+k)) = (-1)^(n+1)/((2n+1) C(2n,n))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::ComboK2k1,
        "sum_k T(n,k) (-1)^(k+1) k/((n+k)(2k+1)) = 1/((2n-1)(2n+1))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::ComboK12k3,
        "sum_k T(n,k) (-1)^k (k+1)/((n+k)(2k+3)) = 1/((2n-3)(2n-1)(2n+1)(2n+3))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::ComboSquared,
        "sum_k T(n,k) (-1)^k/((n+k)^2 (n+1+k)) = (-1)^n (n^2-2n-1)/(n^2 (2n+1) C(2n,n))",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::LogMoment,
        "sum_k T(n,k) (-1)^k/((n+k)(m+k+1)^2) = (-1)^m (m!)^2 (n-m-2)!/(n+m+1)!",
        ParamKind::M,
        2,
        "0 <= m < n-1",
    ),
    entry(
        IdentityId::LogM0,
        "sum_k T(n,k) (-1)^k/((n+k)(k+1)^2) = 3/4 if n = 1, 1/((n-1)n(n+1)) if n >= 2",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::LogM1,
        "sum_k T(n,k) (-1)^(k+1)/((n+k)(k+2)^2) = -5/36 if n = 1, 1/288 if n = 2, 1/((n-2)(n-1)n(n+1)(n+2)) if n >= 3",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::LogMN2,
        "sum_k T(n,k) (-1)^k/((n+k)(n-1+k)^2) = (-1)^n 2/((n-1)^2 n C(2n,n))",
        ParamKind::None,
        2,
        "n >= 2",
    ),
    entry(
        IdentityId::ArcsinEven,
        "sum_{k<=2n} T(2n,k) C(2k,k) 4^-k (2k+1) (-1)^k/((2n+k)(k+1)^2) = 2^-4n/n^3 C(2n-2,n-1)^2",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::ArcsinOdd,
        "sum_{k<=2n+1} T(2n+1,k) C(2k,k) 4^-k (2k+1) (-1)^k/((2n+1+k)(k+1)^2) = 2^-(4n+3)/((2n+1)(n+1)^2) C(2n,n)^2",
        ParamKind::None,
        1,
        "n >= 1",
    ),
    entry(
        IdentityId::HelperBinomEqualities,
        "C(n+k,k)C(n,k) = C(n+k,n)C(n,n-k) = C(n+k,n-k)C(2k,k) = C(n+k,2k)C(2k,k)",
        ParamKind::K,
        0,
        "0 <= k <= n",
    ),
    entry(
        IdentityId::HelperOddHarmonic,
        "sum_{j=1}^{floor((n+1)/2)} C(n,2j-1)/j = (2^(n+1)-2)/(n+1)",
        ParamKind::None,
        0,
        "n >= 0",
    ),
    entry(
        IdentityId::HelperBataille,
        "sum_{j<=n/2} C(n,j) C(n-j,j) 2^(n-2j) = C(2n,n)",
        ParamKind::None,
        0,
        "n >= 0",
    ),
    entry(
        IdentityId::HelperWeightedCentral,
        "sum_{j=1}^{floor((n+1)/2)} C(n,2j-1) 4^-j C(2j,j)/j = -2/(n+1) + 2^(1-n) (2n+1) C(2n,n)/(n+1)^2",
        ParamKind::None,
        0,
        "n >= 0",
    ),
];

pub fn registry_list() -> &'static [IdentityDescriptor] {
    &REGISTRY
}

pub fn lookup(key: &str) -> Result<&'static IdentityDescriptor, SuiteError> {
    Ok(key.parse::<IdentityId>()?.descriptor())
}
