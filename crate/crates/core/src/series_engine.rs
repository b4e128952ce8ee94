//! Truncated formal power series over the rationals, the Legendre generating
//! series, and the two sides of the coefficient-extraction lemma
//!
//! ```text
//! sum_{k=0}^{n} (-1)^{n-k} 2n/(n+k) C(n+k,2k) c_k = [z^n] (1-z)/(1+z) F(z/(1+z)^2).
//! ```

use thiserror::Error;

use crate::exact_arith::{binom, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("inverse square root needs constant term 1, found {0}")]
    ConstantNotOne(Rational),
    #[error("coefficient sequence has {have} entries, {need} required")]
    SequenceTooShort { have: usize, need: usize },
    #[error("coefficient index must be at least 1")]
    IndexZero,
    #[error("coefficient sequence must be nonempty")]
    EmptySequence,
}

/// Coefficients of `z^0 .. z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        TruncatedSeries { coefficients }
    }

    pub fn from_integers(coefficients: &[i64], order: usize) -> Self {
        Self::new(coefficients.iter().map(|&c| Rational::from_integer(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &Rational {
        &self.coefficients[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coefficients.clone(), order)
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect();
        Ok(TruncatedSeries { coefficients })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a - b).collect();
        Ok(TruncatedSeries { coefficients })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries { coefficients: self.coefficients.iter().map(|c| c * factor).collect() }
    }

    /// Multiplication by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coefficients = vec![Rational::zero(); k.min(order + 1)];
        coefficients.extend(self.coefficients.iter().take(order + 1 - coefficients.len()).cloned());
        TruncatedSeries { coefficients }
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coefficients: out })
    }

    /// Multiplicative inverse by forward substitution.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let f0 = &self.coefficients[0];
        let inv0 = f0.recip().map_err(|_| SeriesError::NotInvertible)?;
        let order = self.order();
        let mut g = Vec::with_capacity(order + 1);
        g.push(inv0.clone());
        for m in 1..=order {
            let s: Rational = (0..m).map(|i| &g[i] * &self.coefficients[m - i]).sum();
            g.push(-(s * &inv0));
        }
        Ok(TruncatedSeries { coefficients: g })
    }

    /// The unique `g` with `g(0) = 1` and `g^2 f = 1`.
    ///
    /// Differentiating `g^2 f = 1` gives `2 g' f + g f' = 0`, whose coefficient
    /// of `z^(m-1)` yields `g_m = -1/(2m) sum_{i<m} (m+i) g_i f_{m-i}`.
    pub fn inv_sqrt(&self) -> Result<Self, SeriesError> {
        let f0 = &self.coefficients[0];
        if !f0.is_one() {
            return Err(SeriesError::ConstantNotOne(f0.clone()));
        }
        let order = self.order();
        let mut g = Vec::with_capacity(order + 1);
        g.push(Rational::one());
        for m in 1..=order {
            let s: Rational = (0..m)
                .map(|i| Rational::from_integer((m + i) as i64) * &g[i] * &self.coefficients[m - i])
                .sum();
            g.push(-s / Rational::from_integer(2 * m as i64));
        }
        Ok(TruncatedSeries { coefficients: g })
    }
}

/// `(1 - 2xz + z^2)^(-1/2)` to order `order`; coefficient `n` is `P_n(x)`.
pub fn generating_series(x: &Rational, order: usize) -> TruncatedSeries {
    let quadratic = TruncatedSeries::new(
        vec![Rational::one(), -(Rational::from_integer(2) * x), Rational::one()],
        order,
    );
    quadratic.inv_sqrt().expect("constant term is 1")
}

/// A nonempty list `c_0, c_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSequence {
    values: Vec<Rational>,
}

impl CoefficientSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self, SeriesError> {
        if values.is_empty() {
            return Err(SeriesError::EmptySequence);
        }
        Ok(CoefficientSequence { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check(&self, n: usize) -> Result<(), SeriesError> {
        if n == 0 {
            return Err(SeriesError::IndexZero);
        }
        if self.values.len() < n + 1 {
            return Err(SeriesError::SequenceTooShort { have: self.values.len(), need: n + 1 });
        }
        Ok(())
    }
}

/// Direct evaluation of `sum_{k=0}^{n} (-1)^{n-k} 2n/(n+k) C(n+k,2k) c_k`.
pub fn lemma_lhs(c: &CoefficientSequence, n: usize) -> Result<Rational, SeriesError> {
    c.check(n)?;
    let ni = n as i64;
    Ok((0..=ni)
        .map(|k| {
            Rational::sign_power(ni - k)
                * Rational::new(2 * ni, ni + k)
                * Rational::from_bigint(binom((ni + k) as u64, 2 * k))
                * &c.values[k as usize]
        })
        .sum())
}

/// Precomputed expansions of `(1+z)^-(2k+1)` up to a fixed order, shared
/// across many sequences.
///
/// `[z^n] (1-z)/(1+z) F(z/(1+z)^2)` is assembled as
/// `sum_k c_k z^k (1+z)^-(2k+1) - sum_k c_k z^(k+1) (1+z)^-(2k+1)`.
#[derive(Clone, Debug)]
pub struct LemmaExpander {
    order: usize,
    odd_inverse_powers: Vec<TruncatedSeries>,
}

impl LemmaExpander {
    pub fn new(order: usize) -> Self {
        let one_plus_z = TruncatedSeries::from_integers(&[1, 1], order);
        let base = one_plus_z.inverse().expect("invertible");
        let square = base.mul(&base).expect("same order");
        let mut odd_inverse_powers = Vec::with_capacity(order + 1);
        odd_inverse_powers.push(base);
        for k in 1..=order {
            let next = odd_inverse_powers[k - 1].mul(&square).expect("same order");
            odd_inverse_powers.push(next);
        }
        LemmaExpander { order, odd_inverse_powers }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `(1+z)^-(2k+1)` truncated at the expander's order.
    pub fn odd_inverse_power(&self, k: usize) -> &TruncatedSeries {
        &self.odd_inverse_powers[k]
    }

    /// The composed series `(1-z)/(1+z) F(z/(1+z)^2)` truncated at order `n`,
    /// where `F` has coefficients `c`.
    pub fn composed_series(&self, c: &CoefficientSequence, n: usize) -> Result<TruncatedSeries, SeriesError> {
        c.check(n)?;
        assert!(n <= self.order, "expander order {} below requested {n}", self.order);
        let mut acc = TruncatedSeries::new(Vec::new(), n);
        for k in 0..=n {
            let weight = &c.values[k];
            if weight.is_zero() {
                continue;
            }
            let kernel = self.odd_inverse_powers[k].truncate(n).scale(weight);
            acc = acc.add(&kernel.shift(k))?.sub(&kernel.shift(k + 1))?;
        }
        Ok(acc)
    }

    /// `[z^n]` of the composed series, read off the stored expansions
    /// without building the whole truncation.
    pub fn rhs(&self, c: &CoefficientSequence, n: usize) -> Result<Rational, SeriesError> {
        c.check(n)?;
        assert!(n <= self.order, "expander order {} below requested {n}", self.order);
        let mut total = Rational::zero();
        for k in 0..=n {
            let kernel = &self.odd_inverse_powers[k];
            let mut term = kernel.coefficient(n - k).clone();
            if n > k {
                term -= kernel.coefficient(n - k - 1);
            }
            total += term * &c.values[k];
        }
        Ok(total)
    }
}

/// `[z^n] (1-z)/(1+z) F(z/(1+z)^2)` via series expansion.
pub fn lemma_rhs(c: &CoefficientSequence, n: usize) -> Result<Rational, SeriesError> {
    c.check(n)?;
    LemmaExpander::new(n).rhs(c, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::binomial;
    use crate::legendre_poly::{legendre_family, legendre_value};
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| Rational::from_integer(c)).collect()
    }

    #[test]
    fn products() {
        let a = TruncatedSeries::from_integers(&[1, 1], 3);
        let b = TruncatedSeries::from_integers(&[1, -1], 3);
        assert_eq!(a.mul(&b).unwrap().coefficients(), ints(&[1, 0, -1, 0]).as_slice());
        let geometric = TruncatedSeries::from_integers(&[1, 1, 1, 1, 1], 4);
        let telescope = geometric.mul(&TruncatedSeries::from_integers(&[1, -1], 4)).unwrap();
        assert_eq!(telescope, TruncatedSeries::one(4));
        let short = TruncatedSeries::one(2);
        assert_eq!(a.mul(&short), Err(SeriesError::OrderMismatch(3, 2)));
    }

    #[test]
    fn inverses() {
        let a = TruncatedSeries::from_integers(&[1, 1], 4);
        assert_eq!(a.inverse().unwrap().coefficients(), ints(&[1, -1, 1, -1, 1]).as_slice());
        let cube = TruncatedSeries::from_integers(&[1, 3, 3, 1], 3);
        assert_eq!(cube.inverse().unwrap().coefficients(), ints(&[1, -3, 6, -10]).as_slice());
        assert_eq!(TruncatedSeries::one(0).inverse().unwrap(), TruncatedSeries::one(0));
        let f = TruncatedSeries::new(vec![r(3, 2), r(-1, 7), r(5, 1)], 6);
        assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), TruncatedSeries::one(6));
        let degenerate = TruncatedSeries::from_integers(&[0, 1], 3);
        assert_eq!(degenerate.inverse(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn inverse_matches_displayed_binomial_expansion() {
        let expander = LemmaExpander::new(20);
        for k in 0..=20i64 {
            for m in 0..=20i64 {
                let expected = Rational::sign_power(m) * binomial(2 * k + m, 2 * k).unwrap();
                assert_eq!(expander.odd_inverse_power(k as usize).coefficient(m as usize), &expected);
            }
        }
    }

    #[test]
    fn inverse_square_roots() {
        let at_one = TruncatedSeries::from_integers(&[1, -2, 1], 4);
        assert_eq!(at_one.inv_sqrt().unwrap().coefficients(), ints(&[1, 1, 1, 1, 1]).as_slice());
        let at_zero = TruncatedSeries::from_integers(&[1, 0, 1], 4);
        assert_eq!(
            at_zero.inv_sqrt().unwrap().coefficients(),
            &[r(1, 1), r(0, 1), r(-1, 2), r(0, 1), r(3, 8)]
        );
        let third = TruncatedSeries::new(vec![r(1, 1), r(-2, 3), r(1, 1)], 4);
        assert_eq!(third.inv_sqrt().unwrap().coefficient(2), &r(-1, 3));
        let bad = TruncatedSeries::from_integers(&[2, 1], 3);
        assert!(matches!(bad.inv_sqrt(), Err(SeriesError::ConstantNotOne(_))));
    }

    #[test]
    fn generating_series_values() {
        assert_eq!(generating_series(&Rational::one(), 5).coefficients(), ints(&[1; 6]).as_slice());
        assert_eq!(
            generating_series(&Rational::zero(), 4).coefficients(),
            &[r(1, 1), r(0, 1), r(-1, 2), r(0, 1), r(3, 8)]
        );
        assert_eq!(generating_series(&r(-3, 2), 2).coefficients(), &[r(1, 1), r(-3, 2), r(23, 8)]);
    }

    #[test]
    fn generating_series_matches_legendre() {
        let family = legendre_family(40);
        for x in [r(0, 1), r(1, 1), r(-1, 1), r(1, 2), r(-1, 2), r(-3, 2), r(3, 7), r(5, 1)] {
            let series = generating_series(&x, 40);
            for (n, p) in family.iter().enumerate() {
                assert_eq!(series.coefficient(n), &p.eval(&x), "x={x} n={n}");
            }
        }
    }

    #[test]
    fn lemma_examples() {
        let delta = CoefficientSequence::new(ints(&[1, 0, 0, 0])).unwrap();
        assert_eq!(lemma_rhs(&delta, 3).unwrap(), Rational::from_integer(-2));
        assert_eq!(lemma_lhs(&delta, 3).unwrap(), Rational::from_integer(-2));
        let ones = CoefficientSequence::new(ints(&[1, 1, 1, 1])).unwrap();
        assert_eq!(lemma_rhs(&ones, 3).unwrap(), Rational::from_integer(2));
        assert_eq!(lemma_lhs(&ones, 1).unwrap(), Rational::from_integer(-1));
        let central = CoefficientSequence::new(
            (0..3i64)
                .map(|k| Rational::sign_power(k) * binomial(2 * k, k).unwrap() * Rational::pow2(-2 * k))
                .collect(),
        )
        .unwrap();
        assert_eq!(lemma_rhs(&central, 2).unwrap(), lemma_lhs(&central, 2).unwrap());
    }

    #[test]
    fn lemma_errors() {
        let short = CoefficientSequence::new(ints(&[1, 2])).unwrap();
        assert_eq!(lemma_lhs(&short, 2), Err(SeriesError::SequenceTooShort { have: 2, need: 3 }));
        assert_eq!(lemma_rhs(&short, 0), Err(SeriesError::IndexZero));
        assert_eq!(CoefficientSequence::new(Vec::new()), Err(SeriesError::EmptySequence));
    }

    #[test]
    fn main_theorem_through_the_lemma() {
        // c_k = C(2k,k) 2^-2k (-1)^k x^k feeds the lemma; its composed series
        // is (1-z) times the generating series at -(x+2)/2.
        for x in [r(0, 1), r(1, 1), r(-1, 1), r(2, 5), r(-4, 1)] {
            let c = CoefficientSequence::new(
                (0..=12i64)
                    .map(|k| {
                        binomial(2 * k, k).unwrap()
                            * Rational::pow2(-2 * k)
                            * Rational::sign_power(k)
                            * x.pow(k as i32).unwrap()
                    })
                    .collect(),
            )
            .unwrap();
            let y = -(&x + Rational::from_integer(2)) / Rational::from_integer(2);
            for n in 1..=12usize {
                let ni = n as i64;
                let extracted = lemma_rhs(&c, n).unwrap();
                let legendre_difference = legendre_value(n as u32, &y) - legendre_value(n as u32 - 1, &y);
                assert_eq!(extracted, legendre_difference, "x={x} n={n}");
                let direct: Rational = (0..=ni)
                    .map(|k| {
                        binomial(ni + k, 2 * k).unwrap()
                            * binomial(2 * k, k).unwrap()
                            * Rational::pow2(-2 * k)
                            * x.pow(k as i32).unwrap()
                            / Rational::from_integer(ni + k)
                    })
                    .sum();
                assert_eq!(direct, Rational::sign_power(ni) * extracted / Rational::from_integer(2 * ni));
            }
        }
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-20i64..20, 1i64..9), 1..10).prop_map(|v| {
            let mut cs: Vec<Rational> = v.into_iter().map(|(p, q)| Rational::new(p, q)).collect();
            cs[0] = Rational::one();
            TruncatedSeries::new(cs, 9)
        })
    }

    proptest! {
        #[test]
        fn inv_sqrt_squares_back(f in unit_series()) {
            let g = f.inv_sqrt().unwrap();
            prop_assert_eq!(g.mul(&g).unwrap().mul(&f).unwrap(), TruncatedSeries::one(9));
        }

        #[test]
        fn lemma_sides_agree(v in proptest::collection::vec((-30i64..30, 1i64..12), 9..10)) {
            let c = CoefficientSequence::new(v.into_iter().map(|(p, q)| Rational::new(p, q)).collect()).unwrap();
            let expander = LemmaExpander::new(8);
            for n in 1..=8 {
                prop_assert_eq!(lemma_lhs(&c, n).unwrap(), expander.rhs(&c, n).unwrap());
            }
        }
    }
}
