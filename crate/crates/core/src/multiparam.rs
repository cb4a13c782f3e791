//! Multiparameter higher-order Changhee numbers and polynomials of the first
//! and second kind, and their poly-Cauchy counterparts.
//!
//! Every family here is the integral of `prod_i (c * x_1...x_k - alpha_i)^{r_i}`
//! for some scalar `c`. Expanding the factorial product in powers of the
//! product variable `y = x_1...x_k` and integrating monomials gives
//!
//! ```text
//! sum_m s_alpha(n, m; r) c^m prod_j mu_j(m)
//! ```
//!
//! where `mu_j(m)` is the `m`-th moment of the `j`-th integral. For the
//! fermionic integral, `prod_j mu_j(m) = E_m^k`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::{fermionic_moments, uniform_moment};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::triangles::{comtet_first, lah_row, stirling_first_row, ParameterSpec};

/// First kind integrates `(+y x - alpha)`, second kind `(-y x - alpha)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    First,
    Second,
}

impl Kind {
    pub fn sign(self) -> Rational {
        match self {
            Kind::First => Rational::one(),
            Kind::Second => -Rational::one(),
        }
    }
}

/// `(alpha, r)`, order `k` and an optional evaluation point (`None` means
/// the numbers, i.e. `x = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiparamQuery {
    pub spec: ParameterSpec,
    pub k: u32,
    pub x: Option<Rational>,
}

impl MultiparamQuery {
    pub fn new(spec: ParameterSpec, k: u32, x: Option<Rational>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self { spec, k, x })
    }

    pub fn evaluate(&self, kind: Kind) -> Rational {
        let x = self.x.clone().unwrap_or_else(Rational::one);
        multiparam_value(&self.spec, self.k, &(kind.sign() * x))
    }
}

/// `E_0^k, ..., E_{m_max}^k`: fermionic moments of the product of `k` variables.
pub fn product_moments(m_max: usize, k: u32) -> Vec<Rational> {
    fermionic_moments(m_max)
        .iter()
        .map(|e| num_traits::pow(e.clone(), k as usize))
        .collect()
}

/// Fermionic integral of `p(scale * x_1...x_k)` over `k` variables.
pub fn integrate_product_variable(p: &Polynomial, k: u32, scale: &Rational) -> Rational {
    let moments = product_moments(p.coeffs().len() - 1, k);
    let mut power = Rational::one();
    let mut sum = Rational::zero();
    for (c, mu) in p.coeffs().iter().zip(&moments) {
        sum += c * &power * mu;
        power *= scale;
    }
    sum
}

/// `∫ prod_i (scale * x_1...x_k - alpha_i)^{r_i}` with all integrals fermionic.
pub fn multiparam_value(spec: &ParameterSpec, k: u32, scale: &Rational) -> Rational {
    integrate_product_variable(&Polynomial::new(comtet_first(spec)), k, scale)
}

pub fn mp_first_number(spec: &ParameterSpec, k: u32) -> Rational {
    multiparam_value(spec, k, &Rational::one())
}

pub fn mp_first_poly(spec: &ParameterSpec, k: u32, x: &Rational) -> Rational {
    multiparam_value(spec, k, x)
}

pub fn mp_second_number(spec: &ParameterSpec, k: u32) -> Rational {
    multiparam_value(spec, k, &-Rational::one())
}

pub fn mp_second_poly(spec: &ParameterSpec, k: u32, x: &Rational) -> Rational {
    multiparam_value(spec, k, &-x)
}

/// `∫ (x_1...x_k)_l` for `l = 0..=l_max`, i.e. `sum_j s(l,j) E_j^k`.
pub fn product_falling_moments(l_max: usize, k: u32) -> Vec<Rational> {
    let moments = product_moments(l_max, k);
    (0..=l_max)
        .map(|l| {
            stirling_first_row(l)
                .iter()
                .zip(&moments)
                .map(|(s, mu)| s * mu)
                .sum()
        })
        .collect()
}

/// The two readings of the second-kind expansion, side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LahPathComparison {
    /// Falling-factorial reading: `sum_m s_alpha(n,m;r) (-y)_m`, expanded
    /// through `(-y)_m = (-1)^m sum_l L(m,l) (y)_l`.
    pub lah: Rational,
    /// Power reading: `sum_m s_alpha(n,m;r) (-y)^m`.
    pub power: Rational,
}

impl LahPathComparison {
    pub fn agrees(&self) -> bool {
        self.lah == self.power
    }
}

pub fn mp_second_lah_path(spec: &ParameterSpec, k: u32) -> LahPathComparison {
    let coeffs = comtet_first(spec);
    let falling = product_falling_moments(coeffs.len() - 1, k);
    let lah: Rational = coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| {
            let inner: Rational = lah_row(m).iter().zip(&falling).map(|(l, f)| l * f).sum();
            c * rational::sign(m) * inner
        })
        .sum();
    LahPathComparison { lah, power: mp_second_number(spec, k) }
}

/// Order-1, all-multiplicities-1 case of the first kind.
pub fn generalized_changhee(spec: &ParameterSpec) -> Result<Rational> {
    if let Some(index) = spec.r().iter().position(|&ri| ri != 1) {
        return Err(Error::NotSimple { index, value: spec.r()[index] });
    }
    Ok(mp_first_number(spec, 1))
}

fn poly_cauchy(spec: &ParameterSpec, k: u32, bounds: &[Rational], sign: &Rational) -> Result<Rational> {
    if bounds.len() != k as usize {
        return Err(Error::ArityMismatch { expected: k as usize, actual: bounds.len() });
    }
    let mut power = Rational::one();
    let mut sum = Rational::zero();
    for (m, c) in comtet_first(spec).iter().enumerate() {
        let moment: Rational = bounds.iter().map(|l| uniform_moment(m, l)).product();
        sum += c * &power * moment;
        power *= sign;
    }
    Ok(sum)
}

/// `∫_0^{l_1}...∫_0^{l_k} prod_i (x_1...x_k - alpha_i)^{r_i} dx`.
pub fn poly_cauchy_first(spec: &ParameterSpec, k: u32, bounds: &[Rational]) -> Result<Rational> {
    poly_cauchy(spec, k, bounds, &Rational::one())
}

/// `∫_0^{l_1}...∫_0^{l_k} prod_i (-x_1...x_k - alpha_i)^{r_i} dx`.
pub fn poly_cauchy_second(spec: &ParameterSpec, k: u32, bounds: &[Rational]) -> Result<Rational> {
    poly_cauchy(spec, k, bounds, &-Rational::one())
}
