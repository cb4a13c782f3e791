//! Multiparameter factorial products and their Comtet coefficients.

use std::fmt;

use num_traits::Zero;
use serde::Deserialize;

use super::table::stirling_second;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Offsets `alpha_i` with positive multiplicities `r_i`, defining
/// `(x; alpha, r)_n = prod_{i<n} (x - alpha_i)^{r_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterSpec {
    alpha: Vec<Rational>,
    r: Vec<u32>,
}

impl ParameterSpec {
    pub fn new(alpha: Vec<Rational>, r: Vec<u32>) -> Result<Self> {
        if alpha.len() != r.len() {
            return Err(Error::LengthMismatch { alpha: alpha.len(), r: r.len() });
        }
        if let Some(index) = r.iter().position(|&ri| ri == 0) {
            return Err(Error::NonPositiveMultiplicity { index, value: 0 });
        }
        Ok(Self { alpha, r })
    }

    pub fn empty() -> Self {
        Self { alpha: Vec::new(), r: Vec::new() }
    }

    /// `alpha = (0, 1, ..., n-1)`, all multiplicities 1: the falling factorial.
    pub fn falling(n: usize) -> Self {
        Self::shifted(n, 1)
    }

    /// `alpha = (0, 1, ..., n-1)` with every multiplicity `r`.
    pub fn shifted(n: usize, r: u32) -> Self {
        assert!(r >= 1);
        Self { alpha: (0..n).map(rational::from_usize).collect(), r: vec![r; n] }
    }

    /// `n` copies of the same offset and multiplicity.
    pub fn constant(n: usize, alpha: Rational, r: u32) -> Self {
        assert!(r >= 1);
        Self { alpha: vec![alpha; n], r: vec![r; n] }
    }

    /// Parses offsets from `"p/q"` strings.
    pub fn parse(alpha: &[&str], r: &[u32]) -> Result<Self> {
        let alpha = alpha.iter().map(|s| rational::parse_rational(s)).collect::<Result<_>>()?;
        Self::new(alpha, r.to_vec())
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// `|r| = sum r_i`.
    pub fn total_degree(&self) -> usize {
        self.r.iter().map(|&ri| ri as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.r.iter().all(|&ri| ri == 1)
    }

    /// First `n` parameters.
    pub fn prefix(&self, n: usize) -> Self {
        let n = n.min(self.len());
        Self { alpha: self.alpha[..n].to_vec(), r: self.r[..n].to_vec() }
    }

    pub fn negated(&self) -> Self {
        Self { alpha: self.alpha.iter().map(|a| -a).collect(), r: self.r.clone() }
    }

    /// The expanded product `prod (x - alpha_i)^{r_i}`.
    pub fn factorial_product(&self) -> Polynomial {
        self.alpha.iter().zip(&self.r).fold(Polynomial::one(), |acc, (a, &ri)| {
            &acc * &Polynomial::linear_factor(a).pow(ri as usize)
        })
    }
}

impl fmt::Display for ParameterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha: Vec<String> = self.alpha.iter().map(rational::render).collect();
        let r: Vec<String> = self.r.iter().map(u32::to_string).collect();
        write!(f, "alpha=({}), r=({})", alpha.join(","), r.join(","))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    alpha: Vec<String>,
    r: Vec<i64>,
}

impl<'de> Deserialize<'de> for ParameterSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSpec::deserialize(d)?;
        ParameterSpec::from_raw(raw).map_err(serde::de::Error::custom)
    }
}

impl ParameterSpec {
    fn from_raw(raw: RawSpec) -> Result<Self> {
        if raw.alpha.len() != raw.r.len() {
            return Err(Error::LengthMismatch { alpha: raw.alpha.len(), r: raw.r.len() });
        }
        let alpha = raw
            .alpha
            .iter()
            .map(|s| rational::parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let r = raw
            .r
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                if value < 1 {
                    return Err(Error::NonPositiveMultiplicity { index, value });
                }
                u32::try_from(value)
                    .map_err(|_| Error::Params(format!("r[{index}] = {value} is too large")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alpha, r)
    }

    /// Parses the `{"alpha": [...], "r": [...]}` parameter-file format with
    /// error variants kept distinct (no serde wrapping).
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec =
            serde_json::from_str(text).map_err(|e| Error::Params(e.to_string()))?;
        Self::from_raw(raw)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha.iter().map(rational::render).collect::<Vec<_>>(),
            "r": self.r,
        })
    }
}

/// Generalized Comtet numbers of the first kind: the `|r| + 1` coefficients of
/// `prod (x - alpha_i)^{r_i}`, lowest degree first.
pub fn comtet_first(spec: &ParameterSpec) -> Vec<Rational> {
    let mut coeffs = spec.factorial_product().into_coeffs();
    coeffs.resize(spec.total_degree() + 1, Rational::zero());
    coeffs
}

/// Composite second-kind coefficient `sum_m s_alpha(n,m; r) S(m,i)`.
///
/// The composite is what re-expands the factorial product in the falling
/// factorial basis: `prod (x - alpha_i)^{r_i} = sum_i [..] (x)_i`.
pub fn comtet_second_composite(spec: &ParameterSpec, i: usize) -> Result<Rational> {
    let total_degree = spec.total_degree();
    if i > total_degree {
        return Err(Error::IndexBeyondDegree { index: i, total_degree });
    }
    Ok(comtet_first(spec)
        .iter()
        .enumerate()
        .skip(i)
        .map(|(m, c)| c * stirling_second(m, i))
        .sum())
}

/// All composite coefficients `i = 0..=|r|`.
pub fn comtet_second_composite_row(spec: &ParameterSpec) -> Vec<Rational> {
    let first = comtet_first(spec);
    (0..first.len())
        .map(|i| {
            first
                .iter()
                .enumerate()
                .skip(i)
                .map(|(m, c)| c * stirling_second(m, i))
                .sum()
        })
        .collect()
}
