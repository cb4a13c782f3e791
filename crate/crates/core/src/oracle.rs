//! Brute-force integral oracles.
//!
//! An integral over one variable is a linear moment functional on
//! polynomials. The fermionic functional sends `x^m` to the Euler number
//! `E_m`; the uniform functional on `[0, l]` sends `x^m` to `l^{m+1}/(m+1)`.
//! Multivariate integrals factor variable by variable over the monomials of
//! a fully expanded integrand.

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::euler_changhee::changhee_numbers;
use crate::multipoly::MultiPoly;
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::triangles::{stirling_second_row, ParameterSpec};

pub const DESK_MAX_N: usize = 8;
pub const DESK_MAX_K: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MomentFunctional {
    Fermionic,
    /// Lebesgue measure on `[0, l]`.
    Uniform(Rational),
}

impl MomentFunctional {
    pub fn uniform(l: Rational) -> Self {
        MomentFunctional::Uniform(l)
    }

    pub fn moment(&self, m: usize) -> Rational {
        match self {
            MomentFunctional::Fermionic => fermionic_moment(m),
            MomentFunctional::Uniform(l) => uniform_moment(m, l),
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Rational {
        if let MomentFunctional::Fermionic = self {
            let moments = fermionic_moments(p.coeffs().len() - 1);
            return p.coeffs().iter().zip(&moments).map(|(c, e)| c * e).sum();
        }
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| c * self.moment(m))
            .sum()
    }
}

static FERMIONIC: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `E_0, ..., E_{m_max}` as `sum_l S(m,l) Ch_l`, memoized.
pub fn fermionic_moments(m_max: usize) -> Vec<Rational> {
    {
        let cached = FERMIONIC.read().expect("moment lock poisoned");
        if cached.len() > m_max {
            return cached[..=m_max].to_vec();
        }
    }
    let mut cached = FERMIONIC.write().expect("moment lock poisoned");
    if cached.len() <= m_max {
        let target = (m_max + 1).max(2 * cached.len());
        let ch = changhee_numbers(target - 1);
        *cached = (0..target)
            .map(|m| {
                stirling_second_row(m)
                    .iter()
                    .zip(&ch)
                    .map(|(s, c)| s * c)
                    .sum()
            })
            .collect();
    }
    cached[..=m_max].to_vec()
}

pub fn fermionic_moment(m: usize) -> Rational {
    fermionic_moments(m).swap_remove(m)
}

/// `∫_0^l x^m dx = l^{m+1}/(m+1)`.
pub fn uniform_moment(m: usize, l: &Rational) -> Rational {
    rational::pow(l, m + 1) / rational::from_usize(m + 1)
}

/// Applies `functionals[j]` to variable `j` of every monomial and sums.
pub fn integrate_multivariate(p: &MultiPoly, functionals: &[MomentFunctional]) -> Result<Rational> {
    if p.arity() != functionals.len() {
        return Err(Error::ArityMismatch { expected: p.arity(), actual: functionals.len() });
    }
    let max_exp = p.terms().flat_map(|(e, _)| e.iter().copied()).max().unwrap_or(0) as usize;
    let tables: Vec<Vec<Rational>> = functionals
        .iter()
        .map(|f| match f {
            MomentFunctional::Fermionic => fermionic_moments(max_exp),
            MomentFunctional::Uniform(l) => (0..=max_exp).map(|m| uniform_moment(m, l)).collect(),
        })
        .collect();
    Ok(p.terms()
        .map(|(exps, c)| {
            exps.iter()
                .zip(&tables)
                .fold(c.clone(), |acc, (&m, table)| acc * &table[m as usize])
        })
        .sum())
}

pub fn fermionic(k: usize) -> Vec<MomentFunctional> {
    vec![MomentFunctional::Fermionic; k]
}

/// `prod_i (scale * x_1...x_k - alpha_i)^{r_i}` expanded in `k` variables.
///
/// `scale = x` gives the first-kind integrand at evaluation point `x`,
/// `scale = -x` the second-kind one.
pub fn product_integrand(spec: &ParameterSpec, k: usize, scale: &Rational) -> Result<MultiPoly> {
    let y = MultiPoly::product_of_variables(k).scale(scale);
    let mut acc = MultiPoly::one(k);
    for (a, &ri) in spec.alpha().iter().zip(spec.r()) {
        let factor = y.sub(&MultiPoly::constant(k, a.clone()));
        acc = acc.mul(&factor.pow(ri as usize)?)?;
    }
    Ok(acc)
}

/// `(scale * (x_1 + ... + x_k) + shift)_n` expanded in `k` variables.
pub fn sum_falling_integrand(n: usize, k: usize, scale: &Rational, shift: &Rational) -> Result<MultiPoly> {
    let s = MultiPoly::sum_of_variables(k)
        .scale(scale)
        .add(&MultiPoly::constant(k, shift.clone()));
    let mut acc = MultiPoly::one(k);
    for j in 0..n {
        let factor = s.sub(&MultiPoly::constant(k, rational::from_usize(j)));
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

fn desk_scale(n: usize, k: usize) -> Result<()> {
    if n > DESK_MAX_N || k > DESK_MAX_K {
        return Err(Error::DeskScale { n, k, max_n: DESK_MAX_N, max_k: DESK_MAX_K });
    }
    Ok(())
}

/// `∫...∫ (x_1 + ... + x_k)_n`, fermionic in every variable.
pub fn kim_sum_changhee_oracle(n: usize, k: usize) -> Result<Rational> {
    kim_sum_oracle(n, k, &Rational::one(), &Rational::zero())
}

/// `∫...∫ (sign (x_1 + ... + x_k) + shift)_n` at desk scale.
pub fn kim_sum_oracle(n: usize, k: usize, sign: &Rational, shift: &Rational) -> Result<Rational> {
    desk_scale(n, k)?;
    let integrand = sum_falling_integrand(n, k, sign, shift)?;
    integrate_multivariate(&integrand, &fermionic(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler_changhee::{changhee_number, changhee_order_k_gf, euler_base_series};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn fermionic_spot_values() {
        assert_eq!(fermionic_moment(0), int(1));
        assert_eq!(fermionic_moment(1), ratio(-1, 2));
        assert_eq!(fermionic_moment(2), int(0));
        assert_eq!(fermionic_moment(3), ratio(1, 4));
    }

    #[test]
    fn fermionic_matches_generating_function() {
        let gf = euler_base_series(32).egf_coeffs();
        assert_eq!(fermionic_moments(30), gf[..=30].to_vec());
    }

    #[test]
    fn uniform_spot_values() {
        assert_eq!(uniform_moment(0, &int(1)), int(1));
        assert_eq!(uniform_moment(2, &int(1)), ratio(1, 3));
        assert_eq!(uniform_moment(1, &int(2)), int(2));
        assert_eq!(MomentFunctional::uniform(int(3)).moment(0), int(3));
    }

    #[test]
    fn multivariate_examples() {
        let c = MultiPoly::constant(2, ratio(5, 3));
        assert_eq!(integrate_multivariate(&c, &fermionic(2)).unwrap(), ratio(5, 3));
        let uni = [MomentFunctional::uniform(int(2)), MomentFunctional::Fermionic];
        assert_eq!(integrate_multivariate(&c, &uni).unwrap(), ratio(10, 3));

        let prod = MultiPoly::product_of_variables(2);
        assert_eq!(integrate_multivariate(&prod, &fermionic(2)).unwrap(), ratio(1, 4));
        let sum = MultiPoly::sum_of_variables(2);
        assert_eq!(integrate_multivariate(&sum, &fermionic(2)).unwrap(), int(-1));

        assert!(matches!(
            integrate_multivariate(&sum, &fermionic(3)),
            Err(Error::ArityMismatch { expected: 2, actual: 3 })
        ));
    }

    #[test]
    fn falling_factorial_integrates_to_changhee() {
        for n in 0..=20 {
            let p = Polynomial::falling_factorial(n);
            assert_eq!(MomentFunctional::Fermionic.apply(&p), changhee_number(n), "n={n}");
        }
    }

    #[test]
    fn kim_oracle() {
        assert_eq!(kim_sum_changhee_oracle(0, 2).unwrap(), int(1));
        assert_eq!(kim_sum_changhee_oracle(1, 2).unwrap(), int(-1));
        assert_eq!(kim_sum_changhee_oracle(2, 2).unwrap(), ratio(3, 2));
        for k in 1..=3 {
            for n in 0..=8 {
                assert_eq!(
                    kim_sum_changhee_oracle(n, k).unwrap(),
                    changhee_order_k_gf(n, k as u32, &int(0))
                );
            }
        }
        assert!(matches!(kim_sum_changhee_oracle(9, 2), Err(Error::DeskScale { .. })));
        assert!(matches!(kim_sum_changhee_oracle(2, 5), Err(Error::DeskScale { .. })));
    }

    #[test]
    fn product_integrand_shape() {
        let spec = ParameterSpec::parse(&["1", "-1/2"], &[2, 1]).unwrap();
        let p = product_integrand(&spec, 2, &int(1)).unwrap();
        // (y - 1)^2 (y + 1/2) = y^3 - 3/2 y^2 + 1/2 in y = x1 x2
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[2, 2]), ratio(-3, 2));
        assert!(p.terms().all(|(e, _)| e[0] == e[1]));
        assert_eq!(product_integrand(&ParameterSpec::empty(), 3, &int(1)).unwrap(), MultiPoly::one(3));
    }

    fn small_multipoly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), (-5i64..=5, 1i64..=3)), 0..6).prop_map(|terms| {
            terms.into_iter().fold(MultiPoly::zero(2), |acc, ((a, b), (p, q))| {
                acc.add(&MultiPoly::monomial(vec![a, b], ratio(p, q)))
            })
        })
    }

    proptest! {
        #[test]
        fn integration_is_linear(p in small_multipoly(), q in small_multipoly(),
                                 a in -4i64..=4, b in 1i64..=4, l in 1i64..=3) {
            let a = ratio(a, b);
            let fs = [MomentFunctional::Fermionic, MomentFunctional::uniform(int(l))];
            let lhs = integrate_multivariate(&p.scale(&a).add(&q), &fs).unwrap();
            let rhs = a * integrate_multivariate(&p, &fs).unwrap() + integrate_multivariate(&q, &fs).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
