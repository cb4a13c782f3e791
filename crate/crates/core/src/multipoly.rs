//! Sparse multivariate polynomials, used to expand integrands before they are
//! handed to the moment oracles.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Upper bound on stored terms for any product.
pub const TERM_LIMIT: usize = 1_000_000;

pub type Exponents = Vec<u32>;

/// Invariants: no stored coefficient is zero, and every exponent vector has
/// exactly `arity` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn variable(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Self::monomial(exps, Rational::one())
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `x_0 x_1 ... x_{arity-1}`.
    pub fn product_of_variables(arity: usize) -> Self {
        Self::monomial(vec![1; arity], Rational::one())
    }

    /// `x_0 + x_1 + ... + x_{arity-1}`.
    pub fn sum_of_variables(arity: usize) -> Self {
        (0..arity).fold(Self::zero(arity), |acc, i| acc.add(&Self::variable(arity, i)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        debug_assert_eq!(exps.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in MultiPoly::add");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in MultiPoly::mul");
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
                if acc.len() > TERM_LIMIT {
                    return Err(Error::TermLimit(TERM_LIMIT));
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(Self { arity: self.arity, terms: acc })
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `p(self)`: substitutes this multivariate polynomial into a univariate one.
    pub fn compose_into(p: &Polynomial, inner: &Self) -> Result<Self> {
        // Horner over the univariate coefficients.
        let mut acc = Self::zero(inner.arity);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(inner)?.add(&Self::constant(inner.arity, c.clone()));
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }
}
