//! Truncated formal power series in `q` with big-integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the exact prefix `c_0, ..., c_N`.
//! Binary operations on series of different orders silently truncate to the
//! smaller order; nothing above the order is ever read or produced.

mod gf;

pub use gf::{gf, pochhammer_finite, GfKind};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficients `c_0..=c_N` of a power series, `N` being the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // invariant: never empty, len == order + 1
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `coeff * q^exp`, or zero when `exp` is above `order`.
    pub fn monomial(coeff: BigInt, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Builds a series from explicit coefficients; the order is `len - 1`.
    ///
    /// Panics on an empty coefficient list, which has no order.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        Self { coeffs }
    }

    /// Small-integer convenience constructor.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`, or `None` above the order.
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    /// Coefficient of `q^k` for a possibly negative `k`; negative exponents
    /// read as zero.
    ///
    /// Panics if `k` is above the order.
    pub fn coeff_at(&self, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        let k = k as usize;
        assert!(k <= self.order(), "q^{k} is above the truncation order");
        self.coeffs[k].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Raising the order is not
    /// possible since the higher coefficients are unknown.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    /// Adds `coeff * q^exp` in place; terms above the order are ignored.
    pub fn add_term(&mut self, exp: usize, coeff: impl Into<BigInt>) {
        if let Some(c) = self.coeffs.get_mut(exp) {
            *c += coeff.into();
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplication by `q^k`: coefficients move up by `k`, the order is
    /// unchanged.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        if k < n {
            out[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self { coeffs: out }
    }

    /// In-place multiplication by `1 / (1 - q^k)`, for `k >= 1`.
    pub fn divide_by_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1, "1 - q^0 is not invertible");
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
    }

    /// In-place multiplication by `1 - q^k`, for `k >= 1`.
    pub fn multiply_by_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1);
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - k];
        }
    }

    /// Reciprocal of a series whose constant term is `1` or `-1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnit(c0.to_string()));
        }
        let n = self.coeffs.len();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            // c_0 is its own inverse
            out.push(-(acc * c0));
        }
        Ok(Self { coeffs: out })
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn cauchy(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.cauchy(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;

            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(mut self) -> TruncatedSeries {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Renders as `1 - q + 2*q^3 + O(q^N+1)`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => {}
                _ => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&s(&[1, 1]) + &s(&[1, -1]), s(&[2, 0]));
        let e = gf(GfKind::EulerInv, 20).unwrap();
        assert!((&e + &-&e).is_zero());
        assert_eq!(&e + &TruncatedSeries::zero(20), e);
    }

    #[test]
    fn mixed_orders_truncate_to_the_smaller() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a * &b, s(&[1, 3]));
    }

    #[test]
    fn mul_small() {
        let one_plus_q = s(&[1, 1, 0, 0]);
        assert_eq!(&one_plus_q * &one_plus_q, s(&[1, 2, 1, 0]));
        let e = gf(GfKind::EulerInv, 30).unwrap();
        assert_eq!(&e * &TruncatedSeries::one(30), e);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            TruncatedSeries::one(5).invert().unwrap(),
            TruncatedSeries::one(5)
        );
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[-1, 1, 0]).invert().unwrap(), s(&[-1, -1, -1]));
        let p = gf(GfKind::PochQInf, 10).unwrap().invert().unwrap();
        assert_eq!(p, s(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]));
    }

    #[test]
    fn invert_rejects_non_units() {
        assert!(matches!(s(&[2, 1]).invert(), Err(Error::NonUnit(_))));
        assert!(matches!(s(&[0, 1]).invert(), Err(Error::NonUnit(_))));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(TruncatedSeries::one(3).shift(2), s(&[0, 0, 1, 0]));
        assert_eq!(s(&[1, 1, 0]).shift(1), s(&[0, 1, 1]));
        assert_eq!(s(&[1, 1, 0]).shift(7), s(&[0, 0, 0]));
    }

    #[test]
    fn geometric_division_round_trips() {
        let mut a = s(&[3, -1, 4, 1, -5, 9, 2]);
        let orig = a.clone();
        a.divide_by_one_minus_q_pow(2);
        a.multiply_by_one_minus_q_pow(2);
        assert_eq!(a, orig);
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(s(&[0, 0]).to_string(), "O(q^2)");
        assert_eq!(s(&[0, -1, 1]).to_string(), "-q + q^2 + O(q^3)");
    }
}
