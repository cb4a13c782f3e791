//! Euler and Changhee numbers and polynomials of order `k`, each reachable by
//! several independent routes.
//!
//! * `E_n^{(k)}(x)`: EGF `(2/(e^t+1))^k e^{xt}`.
//! * `Ch_n^{(k)}(x)`: EGF `(2/(2+t))^k (1+t)^x`.
//!
//! Every generating-function route truncates at order `n + 2`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::series::{binomial_power_series, exp_series, TruncatedSeries};
use crate::triangles::{stirling_first, stirling_second};

const MARGIN: usize = 2;

/// Index, order and evaluation point shared by the order-`k` families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedFamilyQuery {
    pub n: usize,
    pub k: u32,
    pub x: Rational,
}

impl OrderedFamilyQuery {
    pub fn new(n: usize, k: u32, x: Rational) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { n, k, x })
    }

    pub fn euler(&self) -> Rational {
        euler_order_k(self.n, self.k, &self.x)
    }

    pub fn changhee(&self) -> Rational {
        changhee_order_k_gf(self.n, self.k, &self.x)
    }
}

/// `2/(e^t + 1)`, as the inverse of `(1 + e^t)/2`.
pub fn euler_base_series(order: usize) -> TruncatedSeries {
    exp_series(&Rational::one(), order)
        .add(&TruncatedSeries::one(order))
        .expect("equal orders")
        .scale(&rational::ratio(1, 2))
        .invert()
        .expect("constant term is 1")
}

/// `2/(2 + t)`, as the inverse of `1 + t/2`.
pub fn changhee_base_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(order, vec![Rational::one(), rational::ratio(1, 2)])
        .invert()
        .expect("constant term is 1")
}

/// `E_0^{(k)}(x), ..., E_{n_max}^{(k)}(x)`.
pub fn euler_order_k_sequence(n_max: usize, k: u32, x: &Rational) -> Vec<Rational> {
    let order = n_max + MARGIN;
    let gf = euler_base_series(order)
        .pow(k)
        .mul(&exp_series(x, order))
        .expect("equal orders");
    let mut out = gf.egf_coeffs();
    out.truncate(n_max + 1);
    out
}

pub fn euler_order_k(n: usize, k: u32, x: &Rational) -> Rational {
    euler_order_k_sequence(n, k, x).swap_remove(n)
}

/// `Ch_0, ..., Ch_{n_max}` from the inverted series `(2+t)/2`.
pub fn changhee_numbers(n_max: usize) -> Vec<Rational> {
    let mut out = changhee_base_series(n_max + MARGIN).egf_coeffs();
    out.truncate(n_max + 1);
    out
}

pub fn changhee_number(n: usize) -> Rational {
    changhee_numbers(n).swap_remove(n)
}

/// `Ch_0^{(k)}(x), ..., Ch_{n_max}^{(k)}(x)` from the generating function.
pub fn changhee_order_k_sequence(n_max: usize, k: u32, x: &Rational) -> Vec<Rational> {
    let order = n_max + MARGIN;
    let gf = changhee_base_series(order)
        .pow(k)
        .mul(&binomial_power_series(x, order))
        .expect("equal orders");
    let mut out = gf.egf_coeffs();
    out.truncate(n_max + 1);
    out
}

pub fn changhee_order_k_gf(n: usize, k: u32, x: &Rational) -> Rational {
    changhee_order_k_sequence(n, k, x).swap_remove(n)
}

/// `sum_l s(n,l) E_l^{(k)}(x)`.
pub fn changhee_order_k_via_euler(n: usize, k: u32, x: &Rational) -> Rational {
    euler_order_k_sequence(n, k, x)
        .iter()
        .enumerate()
        .map(|(l, e)| stirling_first(n, l) * e)
        .sum()
}

/// `sum_l S(n,l) Ch_l^{(k)}(x)`; equals `E_n^{(k)}(x)`.
pub fn euler_via_changhee(n: usize, k: u32, x: &Rational) -> Rational {
    changhee_order_k_sequence(n, k, x)
        .iter()
        .enumerate()
        .map(|(l, c)| stirling_second(n, l) * c)
        .sum()
}

/// `(-1/2)^n sum_l s(n,l) (k+n-1)^l`.
pub fn changhee_explicit(n: usize, k: u32) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let base = Rational::from_integer((k as usize + n - 1).into());
    let mut power = Rational::one();
    let mut sum = Rational::zero();
    for l in 0..=n {
        sum += stirling_first(n, l) * &power;
        power *= &base;
    }
    rational::pow(&rational::ratio(-1, 2), n) * sum
}
