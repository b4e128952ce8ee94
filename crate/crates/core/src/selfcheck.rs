//! Module-level invariant suites, bundled so they can run from the command
//! line as well as from tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exact_arith::Rational;
use crate::gamma_ratios::{gamma_ratio_a, MuParameter};
use crate::identity_suite::{arcsin_pipeline, helper_identities_check, IdentityCase, IdentityId, LegendreRoute};
use crate::integral_oracles::{
    arcsin_poly_moment, binom_arcsin_moment_closed, default_sanity_grid, gautschi_value, legendre_arcsin_value,
    legendre_square_moment, poly_log_moment, sanity_detail,
};
use crate::legendre_poly::{legendre_family, legendre_value, legendre_via_sum, ExactPolynomial, InnerPower};
use crate::series_engine::{generating_series, lemma_lhs, CoefficientSequence, LemmaExpander};

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub comparisons: usize,
    pub failures: Vec<String>,
    /// Set when a check could not be carried out, as opposed to finding a
    /// mismatch.
    pub internal_error: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome { name, comparisons: 0, failures: Vec::new(), internal_error: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.internal_error.is_none()
    }
}

pub const DEFAULT_SEED: u64 = 42;

pub fn legendre_test_points() -> Vec<Rational> {
    [(0, 1), (1, 1), (-1, 1), (1, 2), (-1, 2), (-3, 2), (3, 7)]
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect()
}

/// Sum and recurrence constructions agree, and the generating series
/// reproduces `P_n(x)` at each test point.
pub fn legendre_cross_construction(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("legendre_cross_construction");
    let family = legendre_family(n_max);
    let by_sum: Vec<ExactPolynomial> = (0..=n_max).into_par_iter().map(legendre_via_sum).collect();
    for (n, (a, b)) in family.iter().zip(&by_sum).enumerate() {
        out.record(a == b, || format!("P_{n}: sum and recurrence differ"));
    }
    for x in legendre_test_points() {
        let series = generating_series(&x, n_max as usize);
        for (n, p) in family.iter().enumerate() {
            out.record(series.coefficient(n) == &p.eval(&x), || format!("generating series at x={x}, n={n}"));
        }
    }
    out
}

pub fn legendre_orthogonality(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("legendre_orthogonality");
    let family = legendre_family(n_max);
    let (lo, hi) = (Rational::from_integer(-1), Rational::one());
    for n in 0..=n_max as usize {
        for m in 0..n {
            let integral = (&family[n] * &family[m]).integrate_interval(&lo, &hi);
            out.record(integral.is_zero(), || format!("int P_{n} P_{m} = {integral}"));
        }
    }
    out
}

/// A pseudo-random rational sequence of length `len`, reproducible from the
/// generator state.
pub fn random_sequence(rng: &mut ChaCha8Rng, len: usize) -> CoefficientSequence {
    let values = (0..len)
        .map(|_| Rational::new(rng.gen_range(-999..=999), rng.gen_range(1..=999)))
        .collect();
    CoefficientSequence::new(values).expect("nonempty")
}

/// Both sides of the coefficient-extraction lemma on `sequences` seeded
/// random sequences, for every `1 <= n <= n_max`.
pub fn lemma_random_sequences(seed: u64, sequences: usize, n_max: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("lemma_random_sequences");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<CoefficientSequence> = (0..sequences).map(|_| random_sequence(&mut rng, n_max + 1)).collect();
    let expander = LemmaExpander::new(n_max);
    let rows: Vec<Vec<Option<String>>> = inputs
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            (1..=n_max)
                .map(|n| {
                    let direct = lemma_lhs(c, n).expect("long enough");
                    let extracted = expander.rhs(c, n).expect("long enough");
                    (direct != extracted).then(|| format!("sequence {i}, n={n}: {direct} vs {extracted}"))
                })
                .collect()
        })
        .collect();
    for row in rows {
        for cell in row {
            out.comparisons += 1;
            out.failures.extend(cell);
        }
    }
    out
}

pub fn gautschi_termwise(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("gautschi_termwise");
    let (two, minus_one) = (Rational::from_integer(2), Rational::from_integer(-1));
    for (n, p) in legendre_family(n_max).iter().enumerate().skip(1) {
        let shifted = p.compose_linear(&two, &minus_one, InnerPower::Linear);
        for m in 0..n {
            let closed = gautschi_value(m as u32, n as u32).expect("m < n");
            let termwise = poly_log_moment(&shifted.shift(m));
            out.record(closed == termwise, || format!("m={m} n={n}: {closed} vs {termwise}"));
        }
    }
    out
}

/// `2 int_0^1 x^(2mu-1) P_n(2x^2-1) dx` equals the Gamma ratio for the
/// rational samples and every integer `1 <= mu <= n+1`.
pub fn gamma_ratio_moments(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("gamma_ratio_moments");
    let fixed = [Rational::new(1, 2), Rational::new(3, 2), Rational::new(7, 3), Rational::from_integer(5)];
    for n in 0..=n_max {
        let mus = fixed.iter().cloned().chain((1..=n as i64 + 1).map(Rational::from_integer));
        for mu in mus {
            let mu = MuParameter::new(mu).expect("positive");
            let twice = legendre_square_moment(&mu, n) * Rational::from_integer(2);
            let ratio = gamma_ratio_a(&mu, n);
            out.record(twice == ratio, || format!("mu={mu} n={n}: {twice} vs {ratio}"));
        }
    }
    out
}

pub fn arcsin_moments(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("arcsin_moments");
    for (n, p) in legendre_family(n_max).iter().enumerate() {
        let closed = legendre_arcsin_value(n as u32);
        let termwise = arcsin_poly_moment(p);
        out.record(closed == termwise, || format!("I_{n}: {closed} vs {termwise}"));
    }
    let one_plus_x = ExactPolynomial::from_integers(&[1, 1]);
    for k in 0..n_max {
        let closed = binom_arcsin_moment_closed(k);
        let termwise = arcsin_poly_moment(&one_plus_x.pow(k));
        out.record(closed == termwise, || format!("(1+x)^{k}: {closed} vs {termwise}"));
    }
    for big in 1..=30 {
        let values = arcsin_pipeline(big);
        out.record(values.moment_side == values.legendre_side, || format!("pipeline N={big}"));
    }
    out
}

pub fn helper_identities(k_max: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("helper_identities");
    out.comparisons = 1;
    if let Err(failure) = helper_identities_check(k_max) {
        out.failures.push(failure.to_string());
    }
    out
}

/// The main theorem's right side is the same through every Legendre route.
/// Polynomials and series are built once and reused across `n` and `x`.
pub fn main_theorem_routes(n_max: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("main_theorem_routes");
    let by_recursion = legendre_family(n_max);
    let by_sum: Vec<ExactPolynomial> = (0..=n_max).into_par_iter().map(legendre_via_sum).collect();
    let two = Rational::from_integer(2);
    for x in crate::identity_suite::default_x_grid() {
        let y = -(&x + &two) / &two;
        let series = generating_series(&y, n_max as usize);
        let values: Vec<[Rational; 4]> = (0..=n_max as usize)
            .map(|n| {
                [
                    legendre_value(n as u32, &y),
                    by_recursion[n].eval(&y),
                    by_sum[n].eval(&y),
                    series.coefficient(n).clone(),
                ]
            })
            .collect();
        for n in 1..=n_max as usize {
            let reference = crate::identity_suite::rhs_closed(&IdentityCase::with_x(
                IdentityId::MainTheorem,
                n as i64,
                x.clone(),
            ))
            .expect("n >= 1");
            let factor = Rational::sign_power(n as i64) / Rational::from_integer(2 * n as i64);
            for (route, (current, previous)) in LegendreRoute::ALL.iter().zip(values[n].iter().zip(&values[n - 1])) {
                let via = (current - previous) * &factor;
                out.record(via == reference, || format!("{route:?} x={x} n={n}: {via} vs {reference}"));
            }
        }
    }
    out
}

/// Term-wise relations between registry sums.
pub fn sum_consistency(n_max: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("sum_consistency");
    let lhs = |id, n| crate::identity_suite::lhs_sum(&IdentityCase::new(id, n)).expect("guard holds");
    for n in 1..=n_max {
        let fractions = lhs(IdentityId::MuN, n) - lhs(IdentityId::MuNPlus1, n);
        out.record(fractions == lhs(IdentityId::ComboSquared, n), || format!("partial fractions n={n}"));
        let combined = lhs(IdentityId::AlternatingZero, n) - lhs(IdentityId::IntUnit, n);
        out.record(combined == lhs(IdentityId::IntUnitK, n), || format!("linear combination n={n}"));
    }
    out
}

pub fn float_sanity() -> CheckOutcome {
    let mut out = CheckOutcome::new("float_sanity");
    let grid = default_sanity_grid();
    let reports: Vec<_> = grid.par_iter().map(|kind| (kind, sanity_detail(kind))).collect();
    for (kind, report) in reports {
        match report {
            Ok(r) => out.record(r.passed, || format!("{kind}: exact {} vs quadrature {}", r.exact, r.quadrature)),
            Err(e) => {
                out.comparisons += 1;
                out.internal_error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SelfcheckConfig {
    pub seed: u64,
    pub skip_float: bool,
}

impl Default for SelfcheckConfig {
    fn default() -> Self {
        SelfcheckConfig { seed: DEFAULT_SEED, skip_float: false }
    }
}

/// All suites at their default sizes.
pub fn run_all(config: &SelfcheckConfig) -> Vec<CheckOutcome> {
    let mut out = vec![
        legendre_cross_construction(60),
        legendre_orthogonality(30),
        lemma_random_sequences(config.seed, 200, 40),
        gautschi_termwise(40),
        gamma_ratio_moments(40),
        arcsin_moments(41),
        helper_identities(150),
        main_theorem_routes(60),
        sum_consistency(60),
    ];
    if !config.skip_float {
        out.push(float_sanity());
    }
    out
}
