//! Named special cases of the multiparameter families.
//!
//! Each case fixes part of `(alpha, r)`, evaluates the general family, and
//! evaluates the reduction claimed for that case by a separate route, so the
//! two can be compared. Case identifiers are `2.case1`..`2.case8` for the
//! first kind and `3.case1`..`3.case8` for the second kind.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::euler_changhee::{changhee_numbers, changhee_order_k_gf};
use crate::multiparam::{
    integrate_product_variable, multiparam_value, poly_cauchy_first, poly_cauchy_second, Kind,
};
use crate::oracle::{integrate_multivariate, kim_sum_oracle, product_integrand, MomentFunctional};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::triangles::{comtet_second_composite_row, stirling_second, ParameterSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseId {
    pub kind: Kind,
    pub number: u8,
}

impl CaseId {
    pub fn first(number: u8) -> Self {
        assert!((1..=8).contains(&number));
        Self { kind: Kind::First, number }
    }

    pub fn second(number: u8) -> Self {
        assert!((1..=8).contains(&number));
        Self { kind: Kind::Second, number }
    }

    pub fn all() -> impl Iterator<Item = CaseId> {
        (1..=8).map(CaseId::first).chain((1..=8).map(CaseId::second))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let section = match self.kind {
            Kind::First => 2,
            Kind::Second => 3,
        };
        write!(f, "{section}.case{}", self.number)
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownCase(s.to_string());
        let (section, number) = s.split_once(".case").ok_or_else(bad)?;
        let number: u8 = number.parse().map_err(|_| bad())?;
        if !(1..=8).contains(&number) {
            return Err(bad());
        }
        let kind = match section {
            "2" => Kind::First,
            "3" => Kind::Second,
            _ => return Err(bad()),
        };
        Ok(Self { kind, number })
    }
}

/// Inputs for a special case. Which fields are read depends on the case.
#[derive(Clone, Debug, Default)]
pub struct CaseParams {
    pub n: Option<usize>,
    pub k: Option<u32>,
    pub r: Option<u32>,
    pub alpha: Option<Rational>,
    /// Evaluation point; `None` selects the number variant.
    pub x: Option<Rational>,
    pub spec: Option<ParameterSpec>,
    pub bounds: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCaseResult {
    pub case: CaseId,
    pub spec: ParameterSpec,
    pub k: u32,
    pub x: Option<Rational>,
    /// The general family evaluated at the case's parameters.
    pub value: Rational,
    /// The claimed reduction, evaluated independently.
    pub claimed: Rational,
    pub claim: &'static str,
}

impl SpecialCaseResult {
    pub fn holds(&self) -> bool {
        self.value == self.claimed
    }
}

fn need<T: Clone>(v: &Option<T>, case: CaseId, param: &'static str) -> Result<T> {
    v.clone().ok_or(Error::MissingCaseParam { case: case.to_string(), param })
}

/// `(z - alpha)_l` as a polynomial in `z`.
fn shifted_falling(alpha: &Rational, l: usize) -> Polynomial {
    (0..l).fold(Polynomial::one(), |acc, j| {
        &acc * &Polynomial::linear_factor(&(alpha + rational::from_usize(j)))
    })
}

/// `sum_l S(d, l) ∫ (scale*y - alpha)_l`, which re-expands `(scale*y - alpha)^d`.
fn stirling_expansion(d: usize, alpha: &Rational, k: u32, scale: &Rational) -> Rational {
    (0..=d)
        .map(|l| stirling_second(d, l) * integrate_product_variable(&shifted_falling(alpha, l), k, scale))
        .sum()
}

pub fn special_case(case: CaseId, params: &CaseParams) -> Result<SpecialCaseResult> {
    let kind = case.kind;
    let mut k = params.k.unwrap_or(1);
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let x = params.x.clone();
    let x_or_one = x.clone().unwrap_or_else(Rational::one);
    let scale = kind.sign() * &x_or_one;

    let (spec, claimed, claim): (ParameterSpec, Rational, &'static str) = match case.number {
        1 => {
            let n = need(&params.n, case, "n")?;
            let r = need(&params.r, case, "r")?.max(1);
            let spec = ParameterSpec::shifted(n, r);
            let claimed = integrate_product_variable(&Polynomial::falling_factorial(n * r as usize), k, &scale);
            (spec, claimed, "prod_{i<n} (y - i)^r integrates like the falling factorial (y)_{nr}")
        }
        2 | 3 => {
            let n = need(&params.n, case, "n")?;
            let alpha = need(&params.alpha, case, "alpha")?;
            let r = if case.number == 2 { need(&params.r, case, "r")?.max(1) } else { 1 };
            let spec = ParameterSpec::constant(n, alpha.clone(), r);
            let claimed = stirling_expansion(n * r as usize, &alpha, k, &scale);
            (spec, claimed, "(y - alpha)^{nr} = sum_l S(nr, l) (y - alpha)_l, integrated term-wise")
        }
        4 => {
            let n = need(&params.n, case, "n")?;
            let spec = ParameterSpec::constant(n, Rational::zero(), 1);
            match kind {
                Kind::First => {
                    let at = x.clone().unwrap_or_else(Rational::zero);
                    let claimed = (0..=n)
                        .map(|l| stirling_second(n, l) * changhee_order_k_gf(l, k, &at))
                        .sum();
                    (spec, claimed, "∫ y^n = sum_l S(n, l) Ch_l^{(k)}(x), with Ch^{(k)} the sum-variable family")
                }
                Kind::Second => {
                    let claimed = stirling_expansion(n, &Rational::zero(), k, &scale);
                    (spec, claimed, "∫ (-y)^n = sum_l S(n, l) ∫ (-y)_l")
                }
            }
        }
        5 => {
            let n = need(&params.n, case, "n")?;
            let spec = ParameterSpec::falling(n);
            let at = x.clone().unwrap_or_else(Rational::zero);
            match kind {
                Kind::First => (
                    spec,
                    changhee_order_k_gf(n, k, &at),
                    "∫ (x_1...x_k x)_n equals the sum-variable Ch_n^{(k)}(x)",
                ),
                Kind::Second => (
                    spec,
                    kim_sum_oracle(n, k as usize, &-Rational::one(), &at)?,
                    "∫ (-x_1...x_k x)_n equals ∫ (-(x_1 + ... + x_k) + x)_n",
                ),
            }
        }
        6 | 7 => {
            let spec = need(&params.spec, case, "spec")?;
            if case.number == 7 {
                if let Some(index) = spec.r().iter().position(|&ri| ri != 1) {
                    return Err(Error::NotSimple { index, value: spec.r()[index] });
                }
            }
            k = 1;
            let composite = comtet_second_composite_row(&spec);
            let ch = changhee_numbers(composite.len() - 1);
            let claimed = composite
                .iter()
                .zip(&ch)
                .enumerate()
                .map(|(i, (s, c))| match kind {
                    Kind::First => s * c,
                    Kind::Second => rational::sign(i) * s * c,
                })
                .sum();
            let claim = match kind {
                Kind::First => "∫ prod (x - alpha_i)^{r_i} = sum_i S_alpha(n, i; r) Ch_i",
                Kind::Second => "∫ prod (-x - alpha_i)^{r_i} = sum_i (-1)^i S_alpha(n, i; r) Ch_i",
            };
            (spec, claimed, claim)
        }
        8 => {
            let spec = need(&params.spec, case, "spec")?;
            let bounds = params.bounds.clone().unwrap_or_else(|| vec![Rational::one(); k as usize]);
            let fs: Vec<_> = bounds.iter().cloned().map(MomentFunctional::uniform).collect();
            if fs.len() != k as usize {
                return Err(Error::ArityMismatch { expected: k as usize, actual: fs.len() });
            }
            let integrand = product_integrand(&spec, k as usize, &kind.sign())?;
            let claimed = integrate_multivariate(&integrand, &fs)?;
            let value = match kind {
                Kind::First => poly_cauchy_first(&spec, k, &bounds)?,
                Kind::Second => poly_cauchy_second(&spec, k, &bounds)?,
            };
            return Ok(SpecialCaseResult {
                case,
                spec,
                k,
                x: None,
                value,
                claimed,
                claim: "box integral of the expanded integrand equals the poly-Cauchy value",
            });
        }
        _ => return Err(Error::UnknownCase(case.to_string())),
    };

    let eval_scale = if matches!(case.number, 6 | 7) { kind.sign() } else { scale };
    let value = multiparam_value(&spec, k, &eval_scale);
    let x = if matches!(case.number, 6 | 7) { None } else { x };
    Ok(SpecialCaseResult { case, spec, k, x, value, claimed, claim })
}
