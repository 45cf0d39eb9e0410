//! Exact integer Laurent polynomials in one variable `T`.
//!
//! `LaurentPoly` stores a sparse map from exponent to non-zero coefficient.
//! Exponents may be negative; coefficients are arbitrary-precision integers,
//! since satellite products grow quickly. The zero polynomial is the empty
//! map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial has no symmetric representative")]
    NotPalindromic,
}

/// A Laurent polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 1)
    }

    /// The single-term polynomial `c * T^e`.
    pub fn term(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exponent, c);
        }
        Self { coeffs }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Maximal exponent with a non-zero coefficient.
    pub fn top_degree(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next_back()
            .copied()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// Minimal exponent with a non-zero coefficient.
    pub fn low_degree(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next()
            .copied()
            .ok_or(LaurentError::ZeroPolynomial)
    }

    /// Multiply by `T^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// The substitution `T -> T^w`, scaling every exponent by `w >= 1`.
    pub fn substitute_power(&self, w: i64) -> Self {
        assert!(w >= 1, "substitution power must be positive");
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * w, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at `T = 1`, i.e. sum the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact division; `None` if `other` does not divide `self` (or is zero).
    ///
    /// Division proceeds from the top term, so it is complete whenever the
    /// divisor's leading coefficient divides every intermediate leading
    /// coefficient; all divisors in this crate have leading coefficient
    /// `+/-1`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let div_top = other.top_degree().unwrap();
        let div_lead = other.coeff(div_top);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let span = |p: &Self| p.top_degree().unwrap() - p.low_degree().unwrap();
        let max_steps = span(self) - span(other) + 1;
        if max_steps < 1 {
            return None;
        }
        for _ in 0..max_steps {
            if rem.is_zero() {
                return Some(quot);
            }
            let rt = rem.top_degree().unwrap();
            let rc = rem.coeff(rt);
            if (&rc % &div_lead) != BigInt::zero() {
                return None;
            }
            let q = Self::term(rt - div_top, &rc / &div_lead);
            rem = &rem - &(&q * other);
            quot = &quot + &q;
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    /// The unique representative `u * T^j * f`, `u` a sign, satisfying
    /// `g(T) = g(T^-1)` with positive leading coefficient.
    ///
    /// Fails when no shift makes `f` symmetric (e.g. `T - 1`); Alexander
    /// polynomials of knots always admit a symmetric representative.
    pub fn symmetrize(&self) -> Result<Self, LaurentError> {
        let lo = self.low_degree()?;
        let hi = self.top_degree()?;
        if (lo + hi) % 2 != 0 {
            return Err(LaurentError::NotPalindromic);
        }
        // Palindrome check: coefficient at e must match the one at lo+hi-e.
        for (e, c) in self.terms() {
            if self.coeff(lo + hi - e) != *c {
                return Err(LaurentError::NotPalindromic);
            }
        }
        let g = self.shifted(-(lo + hi) / 2);
        if g.coeff(g.top_degree().unwrap()).is_negative() {
            Ok(-&g)
        } else {
            Ok(g)
        }
    }

    /// Whether `f(T) = f(T^-1)` coefficient-wise.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == *c)
    }

    /// Coefficients keyed by exponent, rendered as decimal strings.
    pub fn coeff_strings(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders in ascending exponent order, e.g. `T^-1 - 1 + T`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{mag}T")?,
                (_, true) => write!(f, "T^{e}")?,
                (_, false) => write!(f, "{mag}T^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
