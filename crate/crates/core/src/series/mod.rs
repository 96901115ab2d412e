//! Truncated formal power series and polynomials over a generic scalar.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `x^0 ..= x^N`. Binary operations require equal orders and return a series
//! of the same order; nothing is ever silently extended.

mod poly;

pub use poly::Polynomial;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `c * x^k`, truncated (to zero if `k > order`).
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series of the given order from leading coefficients; missing
    /// ones are zero and excess ones are dropped.
    pub fn from_coeffs(coeffs: &[T], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = src.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`.
    ///
    /// Panics if `n` exceeds the order: that coefficient is unknown.
    pub fn coeff(&self, n: usize) -> &T {
        assert!(
            n <= self.order(),
            "coefficient of x^{n} requested from a series of order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> Self {
        let order = self.order();
        let two = T::from_int(2);
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || 2 * i > order {
                continue;
            }
            out.coeffs[2 * i] = out.coeffs[2 * i].clone() + a.clone() * a.clone();
            let twice = two.clone() * a.clone();
            for j in i + 1..=order - i {
                let b = &self.coeffs[j];
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].clone() + twice.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `x^k`, dropping terms pushed past the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if k <= order {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        out
    }

    /// Divides by `x^k`. The `k` lowest coefficients must vanish; the result
    /// has order `order - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::TooLarge {
                what: "shift",
                max: self.order(),
                got: k,
            });
        }
        if let Some(e) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::NonVanishingTerm { exponent: e });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Drops coefficients above `order`. Truncating to a larger order is a
    /// usage error since those coefficients are unknown.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TooLarge {
                what: "truncation order",
                max: self.order(),
                got: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Field> TruncatedSeries<T> {
    /// Multiplicative inverse up to the order.
    pub fn inv(&self) -> Result<Self> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let r0 = T::one() / s0.clone();
        let mut t = Vec::with_capacity(order + 1);
        t.push(r0.clone());
        for n in 1..=order {
            let mut acc = T::zero();
            for i in 1..=n {
                let si = &self.coeffs[i];
                if !si.is_zero() {
                    acc = acc + si.clone() * t[n - i].clone();
                }
            }
            t.push(-(acc * r0.clone()));
        }
        Ok(Self { coeffs: t })
    }

    /// Principal square root (constant term 1), from matching the
    /// coefficients of `t^2 = s` term by term.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtBranch);
        }
        let order = self.order();
        let two = T::from_int(2);
        let mut t: Vec<T> = Vec::with_capacity(order + 1);
        t.push(T::one());
        for n in 1..=order {
            // sum_{i=1}^{n-1} t_i t_{n-i}, folded by symmetry
            let mut acc = T::zero();
            for i in 1..=(n - 1) / 2 {
                acc = acc + t[i].clone() * t[n - i].clone();
            }
            acc = acc * two.clone();
            if n % 2 == 0 && n >= 2 {
                acc = acc + t[n / 2].clone() * t[n / 2].clone();
            }
            t.push((self.coeffs[n].clone() - acc) / two.clone());
        }
        Ok(Self { coeffs: t })
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        self.map(|c| -c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};
    use num_bigint::BigInt;

    fn ser(cs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        let cs: Vec<Rational> = cs.iter().map(|&c| rational(c, 1)).collect();
        TruncatedSeries::from_coeffs(&cs, order)
    }

    fn delta(order: usize) -> TruncatedSeries<Rational> {
        ser(&[1, -2, -3], order)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&ser(&[1, 1], 4) + &ser(&[1, -1], 4), ser(&[2], 4));
        let m = ser(&[0, 1, 1, 2, 4], 4);
        assert_eq!(&TruncatedSeries::zero(4) + &m, m);
        assert_eq!(
            &ser(&[0, 1, 1], 3) + &ser(&[0, 0, 1], 3),
            ser(&[0, 1, 2], 3)
        );
    }

    #[test]
    fn order_mismatch_is_reported() {
        let e = ser(&[1], 3).try_add(&ser(&[1], 4)).unwrap_err();
        assert_eq!(e, Error::OrderMismatch { left: 3, right: 4 });
        assert!(e.is_usage());
        assert!(ser(&[1], 3).try_mul(&ser(&[1], 2)).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&ser(&[1, 1], 5) * &ser(&[1, 1], 5), ser(&[1, 2, 1], 5));
        let s = ser(&[3, -1, 4, 1, -5], 6);
        assert_eq!(&TruncatedSeries::one(6) * &s, s);
        assert_eq!(s.square(), &s * &s);
        // truncation
        assert_eq!(&ser(&[1, 1], 1) * &ser(&[1, 1], 1), ser(&[1, 2], 1));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            ser(&[1, -1], 6).inv().unwrap(),
            ser(&[1, 1, 1, 1, 1, 1, 1], 6)
        );
        assert_eq!(ser(&[1], 3).inv().unwrap(), ser(&[1], 3));
        assert_eq!(ser(&[0, 1], 3).inv(), Err(Error::ZeroConstantTerm));
        let half = ser(&[2], 2).inv().unwrap();
        assert_eq!(half.coeff(0), &rational(1, 2));
    }

    #[test]
    fn central_trinomial_from_inverse_sqrt() {
        let root = delta(6).sqrt().unwrap();
        let inv = root.inv().unwrap();
        assert_eq!(inv, ser(&[1, 1, 3, 7, 19, 51, 141], 6));
        assert_eq!(&inv * &root, TruncatedSeries::one(6));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(ser(&[1], 5).sqrt().unwrap(), ser(&[1], 5));
        assert_eq!(ser(&[1, 2, 1], 5).sqrt().unwrap(), ser(&[1, 1], 5));
        let root = delta(4).sqrt().unwrap();
        assert_eq!(root, ser(&[1, -1, -2, -2, -4], 4));
        assert_eq!(root.square(), delta(4));
        assert_eq!(ser(&[4, 1], 3).sqrt(), Err(Error::SqrtBranch));
    }

    #[test]
    fn shifts() {
        let s = ser(&[0, 0, 5, 7], 3);
        assert_eq!(s.shift_down(2).unwrap(), ser(&[5, 7], 1));
        assert_eq!(
            s.shift_down(3),
            Err(Error::NonVanishingTerm { exponent: 2 })
        );
        assert_eq!(ser(&[1, 2, 3], 3).shift_up(2), ser(&[0, 0, 1, 2], 3));
        assert_eq!(ser(&[1, 2, 3], 2).shift_up(5), ser(&[], 2));
        assert!(s.truncate(4).is_err());
        assert_eq!(s.truncate(2).unwrap(), ser(&[0, 0, 5], 2));
    }

    #[test]
    fn works_over_floats_and_integers() {
        let d = TruncatedSeries::<f64>::from_coeffs(&[1.0, -2.0, -3.0], 5);
        let r = d.sqrt().unwrap().inv().unwrap();
        assert_eq!(r.coeffs(), &[1.0, 1.0, 3.0, 7.0, 19.0, 51.0]);

        let a = TruncatedSeries::<BigInt>::from_coeffs(&[1.into(), 1.into()], 3);
        assert_eq!(
            a.square().coeffs(),
            &[1.into(), 2.into(), 1.into(), BigInt::from(0)]
        );
    }

    #[test]
    #[should_panic(expected = "order 2")]
    fn coeff_beyond_order_panics() {
        ser(&[1], 2).coeff(3);
    }
}
