use super::*;
use crate::exact_arith::Rational;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn lhs(id: IdentityId, n: i64) -> Rational {
    lhs_sum(&IdentityCase::new(id, n)).unwrap()
}

fn rhs(id: IdentityId, n: i64) -> Rational {
    rhs_closed(&IdentityCase::new(id, n)).unwrap()
}

#[test]
fn registry_is_closed_and_complete() {
    let list = registry_list();
    assert_eq!(list.len(), 27);
    for (descriptor, id) in list.iter().zip(IdentityId::ALL) {
        assert_eq!(descriptor.id, id);
        assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
    }
    assert_eq!(lookup("gamma_mu").unwrap().param, ParamKind::Mu);
    assert_eq!(lookup("unknown"), Err(SuiteError::UnknownIdentity("unknown".into())));
}

#[test]
fn lhs_examples() {
    for n in 1..=12 {
        let case = IdentityCase::with_x(IdentityId::MainTransformed, n, Rational::one());
        assert!(lhs_sum(&case).unwrap().is_zero());
    }
    assert_eq!(lhs(IdentityId::MuHalf, 1), r(2, 3));
    assert_eq!(lhs(IdentityId::ArcsinEven, 1), r(1, 16));
}

#[test]
fn rhs_examples() {
    assert_eq!(rhs(IdentityId::IntUnit, 1), r(1, 2));
    assert_eq!(rhs(IdentityId::IntUnit, 7), Rational::zero());
    assert_eq!(rhs(IdentityId::LogM1, 2), r(1, 288));
    assert_eq!(rhs(IdentityId::ArcsinOdd, 1), r(1, 384));
}

#[test]
fn verify_examples() {
    let at_zero = verify_case(&IdentityCase::with_x(IdentityId::MainTheorem, 5, Rational::zero())).unwrap();
    assert!(at_zero.equal);
    assert_eq!(at_zero.lhs, Value::Rational(r(1, 5)));

    let sn = verify_case(&IdentityCase::new(IdentityId::SnClosed, 1)).unwrap();
    assert!(sn.equal);
    assert_eq!(ClosedFormValues::compute(1).s_n, r(-3, 2));

    let squared = verify_case(&IdentityCase::new(IdentityId::ComboSquared, 2)).unwrap();
    assert!(squared.equal);
    assert_eq!(squared.rhs, Value::Rational(r(-1, 120)));
}

#[test]
fn guard_errors_name_the_condition() {
    let err = lhs_sum(&IdentityCase::with_m(IdentityId::LogMoment, 4, 3)).unwrap_err();
    assert_eq!(
        err,
        SuiteError::GuardViolation { id: IdentityId::LogMoment, n: 4, condition: "0 <= m < n-1".into() }
    );
    assert!(matches!(
        rhs_closed(&IdentityCase::new(IdentityId::LogMN2, 1)),
        Err(SuiteError::GuardViolation { .. })
    ));
    assert!(matches!(
        lhs_sum(&IdentityCase::new(IdentityId::GammaMu, 3)),
        Err(SuiteError::MissingParam { param: "mu", .. })
    ));
    assert!(matches!(
        verify_case(&IdentityCase::with_mu(IdentityId::GammaMu, 3, r(-1, 2))),
        Err(SuiteError::GuardViolation { .. })
    ));
}

#[test]
fn known_spot_values() {
    assert_eq!(rhs(IdentityId::LogM0, 1), r(3, 4));
    assert_eq!(lhs(IdentityId::LogM0, 1), r(3, 4));
    assert_eq!(lhs(IdentityId::LogM1, 1), r(-5, 36));
    assert_eq!(lhs(IdentityId::LogM1, 2), r(1, 288));
    assert_eq!(lhs(IdentityId::IntUnit, 1), r(1, 2));
}

#[test]
fn every_identity_small_sweep() {
    let samples = ParamSamples::default();
    for id in IdentityId::ALL {
        let outcome = verify_range(id, 0..=25, &samples).unwrap();
        assert!(!outcome.results.is_empty(), "{id}");
        for result in &outcome.results {
            assert!(result.equal, "{} lhs={} rhs={}", result.case, result.lhs, result.rhs);
        }
    }
}

#[test]
fn log_moment_case_enumeration() {
    let outcome = verify_range(IdentityId::LogMoment, 1..=4, &ParamSamples::default()).unwrap();
    let pairs: Vec<(i64, i64)> =
        outcome.results.iter().map(|r| (r.case.params.m.unwrap(), r.case.n)).collect();
    assert_eq!(pairs, vec![(0, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4)]);
    assert!(outcome.results.iter().all(|r| r.equal));
    assert_eq!(outcome.excluded.len(), 4);
}

#[test]
fn arcsin_odd_below_range_is_a_real_mismatch() {
    let outcome = verify_range(IdentityId::ArcsinOdd, 0..=0, &ParamSamples::default()).unwrap();
    assert!(outcome.results.is_empty());
    assert_eq!(outcome.excluded.len(), 1);
    let (l, rh) = outcome.excluded[0].probe.clone().unwrap();
    assert_eq!(l, Value::Rational(r(5, 8)));
    assert_eq!(rh, Value::Rational(r(1, 8)));
}

#[test]
fn main_theorem_routes_agree() {
    for x in default_x_grid() {
        for n in 1..=30u32 {
            let reference = rhs_closed(&IdentityCase::with_x(IdentityId::MainTheorem, n as i64, x.clone())).unwrap();
            for route in LegendreRoute::ALL {
                assert_eq!(main_theorem_rhs_via(route, n, &x).unwrap(), reference, "{route:?} n={n} x={x}");
            }
        }
    }
}

#[test]
fn closed_form_values_are_legendre_values() {
    for n in 0..=40 {
        let v = ClosedFormValues::compute(n);
        assert_eq!(v.s_n, crate::legendre_poly::legendre_value(n, &r(-3, 2)));
        assert_eq!(v.q_n, crate::legendre_poly::legendre_value(n, &r(-1, 2)));
    }
}

#[test]
fn partial_fraction_consistency() {
    for n in 1..=60 {
        let difference = lhs(IdentityId::MuN, n) - lhs(IdentityId::MuNPlus1, n);
        assert_eq!(difference, lhs(IdentityId::ComboSquared, n), "n={n}");
    }
}

#[test]
fn linear_combination_consistency() {
    for n in 1..=60 {
        let combined = lhs(IdentityId::AlternatingZero, n) - lhs(IdentityId::IntUnit, n);
        assert_eq!(combined, lhs(IdentityId::IntUnitK, n), "n={n}");
    }
}

#[test]
fn helper_identities_hold() {
    assert_eq!(helper_identities_check(80), Ok(()));
    let bataille = probe_unguarded(&IdentityCase::new(IdentityId::HelperBataille, 2)).unwrap();
    assert_eq!(bataille, (Rational::from_integer(6), Rational::from_integer(6)));
    let harmonic = probe_unguarded(&IdentityCase::new(IdentityId::HelperOddHarmonic, 2)).unwrap();
    assert_eq!(harmonic, (Rational::from_integer(2), Rational::from_integer(2)));
    let chain = probe_unguarded(&IdentityCase::with_k(IdentityId::HelperBinomEqualities, 3, 1)).unwrap();
    assert_eq!(chain, (Rational::from_integer(12), Rational::from_integer(12)));
}

#[test]
fn arcsin_pipeline_reproduces_closed_forms() {
    for big in 1..=30u32 {
        let values = arcsin_pipeline(big);
        assert_eq!(values.moment_side, values.legendre_side, "N={big}");
    }
    // For N >= 2 the rational 2^k/(k+1) part drops out, leaving -pi times
    // the arcsin identity's sum.
    for n in 1..=15i64 {
        for (id, big) in [(IdentityId::ArcsinEven, 2 * n), (IdentityId::ArcsinOdd, 2 * n + 1)] {
            let values = arcsin_pipeline(big as u32);
            let expected = crate::exact_arith::PiLinear::pi_multiple(-rhs(id, n));
            assert_eq!(values.legendre_side, expected, "{id} n={n}");
        }
    }
}
