//! Generating functions for Motzkin trees as exact truncated series.
//!
//! Notation: `Δ = 1 - 2x - 3x²`. `M` counts trees by vertices, `L` leaves,
//! `R_k` trees whose root is `k`-protected, `P_k = R_k/√Δ` the `k`-protected
//! vertices, `B_k` trees whose root is balanced of rank `k` (a polynomial),
//! `B_k* = B_k/√Δ` the balanced rank-`k` vertices, and `EB = Σ k·B_k*` the
//! total rank of balanced vertices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::series::{Polynomial, TruncatedSeries};

/// `M(x)` by peeling `M = x + xM + xM²` one coefficient at a time.
pub fn motzkin_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let mut m: Vec<T> = vec![T::zero(); order + 1];
    for n in 1..=order {
        // [x^n] of x + xM + xM² only involves coefficients below n
        let mut c = if n == 1 { T::one() } else { m[n - 1].clone() };
        for i in 1..n.saturating_sub(1) {
            c = c + m[i].clone() * m[n - 1 - i].clone();
        }
        m[n] = c;
    }
    TruncatedSeries::from_coeffs(&m, order)
}

/// `√Δ` to the given order.
pub fn sqrt_radicand<T: Field>(order: usize) -> TruncatedSeries<T> {
    Polynomial::radicand()
        .to_series(order)
        .sqrt()
        .expect("radicand has constant term 1")
}

/// `1/√Δ`, the central trinomial coefficients.
pub fn inv_sqrt_radicand<T: Field>(order: usize) -> TruncatedSeries<T> {
    sqrt_radicand::<T>(order)
        .inv()
        .expect("square root has constant term 1")
}

/// `M(x) = (1 - x - √Δ) / (2x)`.
pub fn motzkin_closed_form<T: Field>(order: usize) -> Result<TruncatedSeries<T>> {
    let numer: TruncatedSeries<T> =
        &Polynomial::from_ints(&[1, -1]).to_series(order + 1) - &sqrt_radicand(order + 1);
    if !numer.coeff(1).is_zero() {
        return Err(Error::NonVanishingTerm { exponent: 1 });
    }
    let half = T::one() / T::from_int(2);
    Ok(numer.shift_down(1)?.scale(&half))
}

/// `L(x) = x/√Δ`.
pub fn leaves_series<T: Field>(order: usize) -> TruncatedSeries<T> {
    inv_sqrt_radicand(order).shift_up(1)
}

/// `R_k` through `R_k = x·R_{k-1} + x·R_{k-1}²` with `R_0 = M`.
pub fn protected_root_series<T: Scalar>(k: usize, order: usize) -> TruncatedSeries<T> {
    let mut r = motzkin_series(order);
    for _ in 0..k {
        r = (&r + &r.square()).shift_up(1);
    }
    r
}

/// `P_k = R_k/√Δ`.
pub fn protected_series<T: Field>(k: usize, order: usize) -> TruncatedSeries<T> {
    &protected_root_series(k, order) * &inv_sqrt_radicand(order)
}

/// Integer polynomials with `2x·R_k = U_k + V_k·√Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtPair {
    pub level: usize,
    pub u: Polynomial<BigInt>,
    pub v: Polynomial<BigInt>,
}

impl SqrtPair {
    /// Level 0, read off the closed form of `M`.
    pub fn base() -> Self {
        Self {
            level: 0,
            u: Polynomial::from_ints(&[1, -1]),
            v: Polynomial::from_ints(&[-1]),
        }
    }

    /// Substitutes the pair form into `R_{k+1} = x·R_k + x·R_k²`:
    /// `U' = x·U + (U² + V²·Δ)/2` and `V' = x·V + U·V`.
    pub fn next(&self) -> Result<Self> {
        let x = Polynomial::<BigInt>::x();
        let sum = &self.u.square() + &(&self.v.square() * &Polynomial::radicand());
        let half = sum.halve_exact().ok_or(Error::InexactHalving {
            level: self.level + 1,
        })?;
        Ok(Self {
            level: self.level + 1,
            u: &(&x * &self.u) + &half,
            v: &(&x * &self.v) + &(&self.u * &self.v),
        })
    }

    /// `(U + V·√Δ)/(2x)` as a series, i.e. `R_k` rebuilt from the pair.
    pub fn reconstruct<T: Field>(&self, order: usize) -> Result<TruncatedSeries<T>> {
        let u = self.u.map(big_to_scalar::<T>).to_series(order + 1);
        let v = self.v.map(big_to_scalar::<T>).to_series(order + 1);
        let two_x_r = &u + &(&v * &sqrt_radicand(order + 1));
        let half = T::one() / T::from_int(2);
        Ok(two_x_r.shift_down(1)?.scale(&half))
    }
}

fn big_to_scalar<T: Scalar>(c: &BigInt) -> T {
    // Horner over base-2^32 digits keeps this generic over every scalar.
    let (sign, digits) = c.to_u32_digits();
    let base = T::from_u64(1 << 32).expect("scalar represents 2^32");
    let mag = digits.iter().rev().fold(T::zero(), |acc, &d| {
        acc * base.clone() + T::from_u32(d).unwrap()
    });
    if sign == num_bigint::Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// The pair at level `k`.
pub fn sqrt_pair(k: usize) -> Result<SqrtPair> {
    let mut pair = SqrtPair::base();
    for _ in 0..k {
        pair = pair.next()?;
    }
    Ok(pair)
}

/// `B_k` through `B_k = x·B_{k-1} + x·B_{k-1}²` with `B_0 = x`.
pub fn balanced_poly<T: Scalar>(k: usize) -> Polynomial<T> {
    let mut b = Polynomial::x();
    for _ in 0..k {
        b = (&b + &b.square()).shift_up(1);
    }
    b
}

/// `B_0 ..= B_{order-1}` truncated at `order`; higher levels start above `x^order`
/// and vanish there.
pub fn balanced_root_levels<T: Scalar>(order: usize) -> Vec<TruncatedSeries<T>> {
    let mut levels = Vec::with_capacity(order);
    if order == 0 {
        return levels;
    }
    let mut b = TruncatedSeries::monomial(T::one(), 1, order);
    for _ in 0..order {
        let next = (&b + &b.square()).shift_up(1);
        levels.push(b);
        b = next;
    }
    levels
}

/// `Σ_k B_k`, trees whose root is balanced.
pub fn balanced_root_series<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    balanced_root_levels(order)
        .iter()
        .fold(TruncatedSeries::zero(order), |acc, b| &acc + b)
}

/// `B_k* = B_k/√Δ`.
pub fn balanced_series<T: Field>(k: usize, order: usize) -> TruncatedSeries<T> {
    let b = if k < order {
        balanced_root_levels::<T>(order).swap_remove(k)
    } else {
        TruncatedSeries::zero(order)
    };
    &b * &inv_sqrt_radicand(order)
}

/// `B* = Σ_k B_k*`, all balanced vertices.
pub fn balanced_total_series<T: Field>(order: usize) -> TruncatedSeries<T> {
    &balanced_root_series(order) * &inv_sqrt_radicand(order)
}

/// `b(n)`: trees with `n` vertices whose root is balanced.
pub fn balanced_root_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(balanced_root_series::<BigInt>(n).coeff(n).clone())
}

/// `EB = Σ_k k·B_k*`.
pub fn eb_series<T: Field>(order: usize) -> TruncatedSeries<T> {
    let weighted = balanced_root_levels::<T>(order)
        .iter()
        .enumerate()
        .fold(TruncatedSeries::zero(order), |acc, (k, b)| {
            &acc + &b.scale(&T::from_usize(k).unwrap())
        });
    &weighted * &inv_sqrt_radicand(order)
}

/// Motzkin numbers `M_0 ..= M_len-1` (`1, 1, 2, 4, 9, …`) from
/// `(n+2)·M_n = (2n+1)·M_{n-1} + 3(n-1)·M_{n-2}`. `[x^n]M(x) = M_{n-1}`.
pub fn motzkin_numbers(len: usize) -> Vec<BigInt> {
    p_recursive(len, |n| (n + 2, 2 * n + 1, 3 * (n - 1)))
}

/// Central trinomial coefficients `T_0 ..= T_len-1` (`1, 1, 3, 7, 19, …`) from
/// `n·T_n = (2n-1)·T_{n-1} + 3(n-1)·T_{n-2}`. `[x^n]L(x) = T_{n-1}`.
pub fn central_trinomials(len: usize) -> Vec<BigInt> {
    p_recursive(len, |n| (n, 2 * n - 1, 3 * (n - 1)))
}

/// Second-order recurrences `a·s_n = b·s_{n-1} + c·s_{n-2}` with `s_0 = s_1 = 1`.
fn p_recursive(len: usize, coeffs: impl Fn(u64) -> (u64, u64, u64)) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        if n < 2 {
            s.push(BigInt::one());
            continue;
        }
        let (a, b, c) = coeffs(n as u64);
        let numer = &s[n - 1] * b + &s[n - 2] * c;
        debug_assert!((&numer % a).is_zero());
        s.push(numer / a);
    }
    s
}
