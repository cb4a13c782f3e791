//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// `coeffs[i]` is the coefficient of `x^i`.
///
/// The zero polynomial is stored as `[0]`; every other polynomial has a
/// nonzero highest coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - root`.
    pub fn linear_factor(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(c x)`: rescales the variable.
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &factor);
            factor *= c;
        }
        Self::new(out)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            out.push(a / rational::from_usize(i + 1));
        }
        Self::new(out)
    }

    /// `∫_a^b p(x) dx`, via the antiderivative.
    pub fn definite_integral(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Falling factorial `(x)_n = x(x-1)...(x-n+1)`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, j| {
            &acc * &Self::linear_factor(&rational::from_usize(j))
        })
    }

    /// Rising factorial `<x>_n = x(x+1)...(x+n-1)`.
    pub fn rising_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, j| {
            &acc * &Self::linear_factor(&-rational::from_usize(j))
        })
    }

    /// Lagrange interpolation through `(x_i, y_i)`; abscissae must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::linear_factor(xj);
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Exact convolution of coefficient lists.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Free-function spelling of the product, for callers that prefer it.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a * b
}

pub fn poly_eval(p: &Polynomial, x: &Rational) -> Rational {
    p.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let a = Polynomial::from_integers(&[1, 1]);
        let b = Polynomial::from_integers(&[1, -1]);
        assert_eq!(&a * &b, Polynomial::from_integers(&[1, 0, -1]));
    }

    #[test]
    fn product_of_linear_factors() {
        let p = &Polynomial::linear_factor(&int(1)) * &Polynomial::linear_factor(&int(2));
        assert_eq!(p, Polynomial::from_integers(&[2, -3, 1]));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn one_is_identity() {
        let p = Polynomial::new(vec![ratio(1, 3), int(0), ratio(-5, 2)]);
        assert_eq!(&p * &Polynomial::one(), p);
    }

    #[test]
    fn horner_values() {
        let p = Polynomial::from_integers(&[2, -3, 1]);
        assert_eq!(p.eval(&int(1)), int(0));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(3, 4));
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), int(0));
    }

    #[test]
    fn zero_polynomial_is_single_zero() {
        assert_eq!(Polynomial::new(vec![]).coeffs(), &[int(0)]);
        assert_eq!(Polynomial::from_integers(&[0, 0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::constant(int(0)).degree(), None);
        assert_eq!(Polynomial::one().degree(), Some(0));
    }

    #[test]
    fn factorial_polynomials() {
        assert_eq!(
            Polynomial::falling_factorial(3),
            Polynomial::from_integers(&[0, 2, -3, 1])
        );
        assert_eq!(
            Polynomial::rising_factorial(3),
            Polynomial::from_integers(&[0, 2, 3, 1])
        );
        assert_eq!(Polynomial::falling_factorial(0), Polynomial::one());
    }

    #[test]
    fn integrates_by_power_rule() {
        // ∫_0^1 x(x-1) dx = 1/3 - 1/2
        let p = Polynomial::falling_factorial(2);
        assert_eq!(p.definite_integral(&int(0), &int(1)), ratio(-1, 6));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::new(vec![ratio(1, 2), int(-3), int(0), ratio(2, 7)]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), p.eval(&int(i)))).collect();
        assert_eq!(Polynomial::interpolate(&pts), p);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(small_rational(), 0..5).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn eval_is_a_ring_morphism(a in small_poly(), b in small_poly(), q in small_rational()) {
            prop_assert_eq!((&a * &b).eval(&q), a.eval(&q) * b.eval(&q));
            prop_assert_eq!((&a + &b).eval(&q), a.eval(&q) + b.eval(&q));
        }

        #[test]
        fn degree_adds_under_mul(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }
    }
}
