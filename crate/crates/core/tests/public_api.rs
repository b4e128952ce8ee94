use legendre_identities::gamma_ratios::{gamma_ratio_a, theorem33_rhs, MuParameter};
use legendre_identities::identity_suite::{verify_case, verify_range, IdentityCase, IdentityId, ParamSamples};
use legendre_identities::integral_oracles::{arcsin_power_moment, gautschi_value, power_log_moment};
use legendre_identities::legendre_poly::{legendre_value, legendre_via_sum};
use legendre_identities::series_engine::{lemma_lhs, lemma_rhs, CoefficientSequence};
use legendre_identities::{PiLinear, Rational};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

#[test]
fn rationals_parse_and_print_canonically() {
    let x: Rational = "6/-8".parse().unwrap();
    assert_eq!(x.to_string(), "-3/4");
    let y: PiLinear = "1/2 + -3/4*pi".parse().unwrap();
    assert_eq!(y.to_string().parse::<PiLinear>().unwrap(), y);
}

#[test]
fn legendre_values() {
    assert_eq!(legendre_via_sum(2).coefficients(), &[r(-1, 2), Rational::zero(), r(3, 2)]);
    assert_eq!(legendre_value(3, &r(1, 2)), r(-7, 16));
}

#[test]
fn lemma_sides_agree_on_harmonic_numbers() {
    let c = CoefficientSequence::new((0..12).map(|k| r(1, k + 1)).collect()).unwrap();
    for n in 1..12 {
        assert_eq!(lemma_lhs(&c, n).unwrap(), lemma_rhs(&c, n).unwrap());
    }
}

#[test]
fn oracle_values() {
    assert_eq!(power_log_moment(0), Rational::one());
    assert_eq!(gautschi_value(0, 1).unwrap(), r(-1, 2));
    assert_eq!(arcsin_power_moment(1).unwrap(), PiLinear::pi_multiple(r(1, 8)));
    let half = MuParameter::new(r(1, 2)).unwrap();
    assert_eq!(gamma_ratio_a(&half, 1), r(-2, 3));
    assert_eq!(theorem33_rhs(&half, 1).unwrap(), r(2, 3));
}

#[test]
fn verification_api() {
    let result = verify_case(&IdentityCase::with_x(IdentityId::MainTheorem, 4, r(3, 7))).unwrap();
    assert!(result.equal);
    let outcome = verify_range(IdentityId::GammaMu, 0..=10, &ParamSamples::default()).unwrap();
    assert_eq!(outcome.failed(), 0);
    assert_eq!(outcome.passed(), 60);
    assert_eq!(outcome.excluded.len(), 6);
}
