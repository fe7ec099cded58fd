//! Exact rationals and truncated univariate power series in `u`.
//!
//! A [`TruncSeries`] of order `N` stores the coefficients of `u^0 ..= u^N`.
//! Binary operations between series of different orders truncate to the
//! smaller order. Nothing in here touches floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept reduced with a positive denominator.
pub type ExactRational = BigRational;

/// Truncation order used when the caller does not ask for one.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("exp is only defined for series with zero constant term")]
    NonzeroConstantTerm,
}

/// Power series in `u`, truncated after `u^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * u^exp`, or the zero series if `exp > order`.
    pub fn monomial(c: ExactRational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones beyond `order` are dropped.
    pub fn from_coeffs<I>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = ExactRational>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Convenience for tests and small literals.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|&c| ExactRational::from_integer(BigInt::from(c))),
            order,
        )
    }

    /// The geometric series `1/(1-u) = 1 + u + u^2 + ...`.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![ExactRational::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^i`; zero beyond the truncation order.
    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: ExactRational) {
        if let Some(slot) = self.coeffs.get_mut(i) {
            *slot = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order` (no-op if already smaller).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse, solved term by term from `a * b = 1`.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order();
        let inv0 = a0.recip();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                let ak = &self.coeffs[k];
                if !ak.is_zero() {
                    acc += ak * &out.coeffs[n - k];
                }
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    /// `sum_{k=0}^{order} a^k / k!`, exact because `a` has no constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut total = Self::one(order);
        let mut term = Self::one(order);
        for k in 1..=order {
            term = term.mul(self);
            term = term.scale(&ExactRational::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                break;
            }
            total = total.add(&term);
        }
        Ok(total)
    }

    /// `self^k` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitutes `u <- u^d`, keeping the original truncation order.
    pub fn dilate(&self, d: usize) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(d) {
                Some(e) if e <= order => out.coeffs[e] = c.clone(),
                _ => break,
            }
        }
        out
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})u")?,
                _ => write!(f, "({c})u^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: Self) -> TruncSeries {
        TruncSeries::add(self, rhs)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: Self) -> TruncSeries {
        TruncSeries::sub(self, rhs)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: Self) -> TruncSeries {
        TruncSeries::mul(self, rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
