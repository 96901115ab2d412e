use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::TruncatedSeries;
use crate::scalar::Scalar;

/// Dense polynomial with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `1 - 2x - 3x^2`, the radicand behind every generating function here.
    pub fn radicand() -> Self {
        Self::from_ints(&[1, -2, -3])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn square(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let two = T::from_int(2);
        let mut out = vec![T::zero(); 2 * d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out[2 * i] = out[2 * i].clone() + a.clone() * a.clone();
            let twice = two.clone() * a.clone();
            for (j, b) in self.coeffs.iter().enumerate().skip(i + 1) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + twice.clone() * b.clone();
                }
            }
        }
        Self::new(out)
    }

    /// The polynomial viewed as a series of the given order (higher terms are
    /// dropped).
    pub fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        TruncatedSeries::from_coeffs(&self.coeffs, order)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<BigInt> {
    /// Divides every coefficient by two, or `None` if one of them is odd.
    pub fn halve_exact(&self) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&BigInt::from(2));
                r.is_zero().then_some(q)
            })
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| Self { coeffs })
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        self.map(|c| -c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::<Rational>::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::<Rational>::from_ints(&[0, 0]).degree(), None);
        assert_eq!(
            Polynomial::<Rational>::from_ints(&[0, 0, 3]).valuation(),
            Some(2)
        );
    }

    #[test]
    fn evaluation() {
        let third = rational(1, 3);
        assert_eq!(
            Polynomial::<Rational>::radicand().eval(&third),
            rational(0, 1)
        );
        assert_eq!(Polynomial::<Rational>::x().eval(&third), third);
        let u1 = Polynomial::<Rational>::from_ints(&[1, -1, -2]);
        assert_eq!(u1.eval(&third), rational(4, 9));
        assert_eq!(Polynomial::<Rational>::zero().eval(&third), rational(0, 1));
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::<BigInt>::from_ints(&[1, 1]);
        let b = Polynomial::<BigInt>::from_ints(&[1, -1]);
        assert_eq!(&a * &b, Polynomial::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, Polynomial::from_ints(&[2]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(a.square(), &a * &a);
        assert_eq!(a.shift_up(2), Polynomial::from_ints(&[0, 0, 1, 1]));
        assert_eq!(-&b, Polynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn exact_halving() {
        let even = Polynomial::<BigInt>::from_ints(&[2, -4, 6]);
        assert_eq!(even.halve_exact(), Some(Polynomial::from_ints(&[1, -2, 3])));
        assert_eq!(Polynomial::<BigInt>::from_ints(&[2, 3]).halve_exact(), None);
    }
}
