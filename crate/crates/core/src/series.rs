//! Truncated power series in a formal variable `t`.
//!
//! Coefficients are ordinary: `coeffs[n]` multiplies `t^n`. Exponential
//! generating function semantics only enter through [`TruncatedSeries::egf_coeff`].

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Coefficients of `t^0..=t^order`; always exactly `order + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Rational::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: rhs.order() });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let acc: Rational = (1..=n).map(|j| &self.coeffs[j] * &out[n - j]).sum();
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `self^k` by square-and-multiply; `self^0` is the unit series.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("equal orders");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("equal orders");
            }
        }
        acc
    }

    /// `n! * coeffs[n]`: the n-th term of the series read as an EGF.
    pub fn egf_coeff(&self, n: usize) -> Result<Rational> {
        let c = self
            .coeffs
            .get(n)
            .ok_or(Error::IndexBeyondOrder { index: n, order: self.order() })?;
        Ok(c * Rational::from_integer(rational::factorial(n)))
    }

    /// All EGF coefficients `0..=order`.
    pub fn egf_coeffs(&self) -> Vec<Rational> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= rational::from_usize(n);
                }
                c * &fact
            })
            .collect()
    }
}

/// `e^{x t}`: coefficients `x^n / n!`.
pub fn exp_series(x: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for n in 1..=order {
        term = term * x / rational::from_usize(n);
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(order, coeffs)
}

/// `(1 + t)^x`: coefficients are generalized binomials `(x)_n / n!`.
pub fn binomial_power_series(x: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for n in 1..=order {
        let prev = rational::from_usize(n - 1);
        term = term * (x - prev) / rational::from_usize(n);
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(order, coeffs)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

pub fn series_invert(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.invert()
}

pub fn series_pow(a: &TruncatedSeries, k: u32) -> TruncatedSeries {
    a.pow(k)
}

pub fn egf_coeff(a: &TruncatedSeries, n: usize) -> Result<Rational> {
    a.egf_coeff(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn ints(order: usize, cs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(order, cs.iter().map(|&c| int(c)).collect())
    }

    /// `2/(2 + t)` as the inverse of `1 + t/2`.
    fn changhee_gf(order: usize) -> TruncatedSeries {
        TruncatedSeries::new(order, vec![int(1), ratio(1, 2)]).invert().unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = ints(6, &[1, 1]);
        let b = ints(6, &[1, -1, 1, -1, 1, -1, 1]);
        assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn squares_binomial() {
        let a = ints(4, &[1, 1]);
        assert_eq!(a.mul(&a).unwrap(), ints(4, &[1, 2, 1]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = ints(3, &[1]).mul(&ints(4, &[1])).unwrap_err();
        assert!(matches!(err, Error::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn changhee_square_coefficients() {
        // (1 + t/2)^{-2} = 1 - t + 3/4 t^2 - ...
        let sq = changhee_gf(4).pow(2);
        assert_eq!(sq.coeffs()[1], int(-1));
        assert_eq!(sq.coeffs()[2], ratio(3, 4));
    }

    #[test]
    fn inversion() {
        assert_eq!(ints(4, &[1, 1]).invert().unwrap(), ints(4, &[1, -1, 1, -1, 1]));
        let g = changhee_gf(5);
        for n in 0..=5 {
            assert_eq!(g.coeffs()[n], crate::rational::pow(&ratio(-1, 2), n));
        }
        assert!(matches!(ints(3, &[0, 1, 1]).invert(), Err(Error::NotInvertible)));
    }

    #[test]
    fn powers() {
        let a = ints(3, &[2, 5, 1]);
        assert_eq!(a.pow(0), TruncatedSeries::one(3));
        assert_eq!(a.pow(1), a);
    }

    #[test]
    fn egf_extraction() {
        let g = changhee_gf(4);
        assert_eq!(g.egf_coeff(0).unwrap(), int(1));
        assert_eq!(g.egf_coeff(3).unwrap(), ratio(-3, 4));
        assert!(matches!(g.egf_coeff(5), Err(Error::IndexBeyondOrder { index: 5, order: 4 })));

        // 2/(e^t + 1) = inverse of (1 + e^t)/2
        let half_sum = exp_series(&int(1), 4)
            .add(&TruncatedSeries::one(4))
            .unwrap()
            .scale(&ratio(1, 2));
        let euler = half_sum.invert().unwrap();
        assert_eq!(euler.egf_coeff(2).unwrap(), int(0));
        assert_eq!(euler.egf_coeff(1).unwrap(), ratio(-1, 2));
        assert_eq!(euler.egf_coeffs()[3], ratio(1, 4));
    }

    #[test]
    fn exponential_series() {
        assert_eq!(exp_series(&int(0), 5), TruncatedSeries::one(5));
        assert_eq!(
            exp_series(&int(1), 3).coeffs(),
            &[int(1), int(1), ratio(1, 2), ratio(1, 6)]
        );
        assert_eq!(exp_series(&ratio(1, 2), 2).coeffs()[2], ratio(1, 8));
    }

    #[test]
    fn binomial_series() {
        assert_eq!(binomial_power_series(&int(0), 4), TruncatedSeries::one(4));
        assert_eq!(binomial_power_series(&int(2), 3), ints(3, &[1, 2, 1, 0]));
        assert_eq!(binomial_power_series(&ratio(1, 2), 2).coeffs()[2], ratio(-1, 8));
    }

    fn invertible_series() -> impl Strategy<Value = TruncatedSeries> {
        (
            prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5]),
            prop::collection::vec((-6i64..=6, 1i64..=4), 0..7),
        )
            .prop_map(|(c0, rest)| {
                let mut cs = vec![int(c0)];
                cs.extend(rest.into_iter().map(|(p, q)| ratio(p, q)));
                TruncatedSeries::new(7, cs)
            })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in invertible_series()) {
            let b = a.invert().unwrap();
            prop_assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::one(7));
            prop_assert_eq!(b.mul(&a).unwrap(), TruncatedSeries::one(7));
        }

        #[test]
        fn binomial_egf_gives_falling_factorial(m in 0usize..12, n in 0usize..12) {
            let s = binomial_power_series(&crate::rational::from_usize(m), 12);
            let falling: i64 = (0..n).map(|j| m as i64 - j as i64).product();
            prop_assert_eq!(s.egf_coeff(n).unwrap(), int(falling));
        }
    }
}
