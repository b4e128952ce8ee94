//! Exact verification of binomial sums whose closed forms come from Legendre
//! polynomials.
//!
//! Every scalar is an exact rational (or an element of `Q + Q*pi` for the
//! arcsin integrals). Each identity in [`identity_suite`] is checked by
//! comparing a direct summation against an independently computed closed
//! form, with no tolerance.

pub mod exact_arith;
pub mod gamma_ratios;
pub mod identity_suite;
pub mod integral_oracles;
pub mod legendre_poly;
pub mod selfcheck;
pub mod series_engine;

pub use exact_arith::{PiLinear, Rational};
