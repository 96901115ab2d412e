//! Limiting vertex proportions and rigorous bounds on their sums.
//!
//! Every generating function in [`crate::genfun`] has the shape `N(x)/√Δ`
//! with `N` analytic beyond the singularity `x = 1/3`, so the limiting
//! proportion of the counted vertices is a rational number obtained by
//! evaluating `N` at `1/3`. The protected proportions `p_k` and balanced
//! rank-`k` proportions `b_k` both satisfy `s_k = s_{k-1}/3 + s_{k-1}²/3`.
//!
//! The denominators of `b_k` grow like `3^(2^k)`, so sums over many levels
//! are enclosed in rational intervals whose endpoints are rounded outward
//! once they exceed a working precision (see [`Precision`]).

use num_bigint::BigInt;
use num_traits::{Float, FromPrimitive, One, Pow, Signed, Zero};

use crate::decimal::{to_decimal, Rounding};
use crate::error::{Error, Result};
use crate::genfun;
use crate::scalar::{rational, Rational};
use crate::series::Polynomial;

/// The dominant singularity `1/3`.
pub fn singularity() -> Rational {
    rational(1, 3)
}

fn step(s: &Rational) -> Rational {
    s * (Rational::one() + s) / Rational::from_integer(3.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilitySequence {
    values: Vec<Rational>,
}

impl ProbabilitySequence {
    fn iterate(first: Rational, max_level: usize) -> Self {
        let mut values = Vec::with_capacity(max_level + 1);
        values.push(first);
        for k in 1..=max_level {
            let next = step(&values[k - 1]);
            values.push(next);
        }
        Self { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.values.get(k)
    }

    pub fn max_level(&self) -> usize {
        self.values.len() - 1
    }

    /// `s_{k+1}/s_k`, which equals `(1 + s_k)/3`.
    pub fn growth_ratios(&self) -> Vec<Rational> {
        self.values.windows(2).map(|w| &w[1] / &w[0]).collect()
    }
}

/// `p_0 ..= p_K`, limiting proportions of `k`-protected vertices (`p_0 = 1`).
pub fn protected_probability_sequence(max_level: usize) -> ProbabilitySequence {
    ProbabilitySequence::iterate(Rational::one(), max_level)
}

/// `b_0 ..= b_K`, limiting proportions of balanced vertices of rank `k`
/// (`b_0 = 1/3`, the leaves).
pub fn balanced_probability_sequence(max_level: usize) -> ProbabilitySequence {
    ProbabilitySequence::iterate(singularity(), max_level)
}

/// Limiting constant of `numerator(x)/√Δ` relative to `1/√Δ`: the value of
/// the numerator at `1/3`.
pub fn bender_constant(numerator: &Polynomial<Rational>) -> Rational {
    numerator.eval(&singularity())
}

/// Exact `p(1/3)` for an integer polynomial, with a single reduction at the end.
fn eval_int_at_third(p: &Polynomial<BigInt>) -> Rational {
    let Some(d) = p.degree() else {
        return Rational::zero();
    };
    // Σ c_i 3^(-i) = (Σ c_i 3^(d-i)) / 3^d, Horner from the constant term up
    let numer = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc * 3 + c);
    Rational::new(numer, BigInt::from(3).pow(d as u32))
}

/// `p_k` from the square-root pair: `(3/2)·U_k(1/3)`.
pub fn protected_constant_via_pair(k: usize) -> Result<Rational> {
    let pair = genfun::sqrt_pair(k)?;
    Ok(eval_int_at_third(&pair.u) * rational(3, 2))
}

/// `B_k(1/3)` computed from the integer polynomial.
pub fn balanced_constant_via_poly(k: usize) -> Rational {
    eval_int_at_third(&genfun::balanced_poly::<BigInt>(k))
}

/// Working precision for interval enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// No rounding at all. Cost grows like `2^cutoff`.
    Exact,
    /// Endpoints whose denominator exceeds this many bits are rounded
    /// outward to a multiple of `2^-bits`.
    Bits(u32),
}

pub const DEFAULT_PRECISION: Precision = Precision::Bits(512);

fn round(q: Rational, precision: Precision, up: bool) -> Rational {
    let Precision::Bits(bits) = precision else {
        return q;
    };
    if q.denom().bits() <= u64::from(bits) {
        return q;
    }
    let scale = BigInt::one() << bits;
    let scaled = &q * Rational::from_integer(scale.clone());
    let int = if up { scaled.ceil() } else { scaled.floor() };
    Rational::new(int.to_integer(), scale)
}

/// Enclosures `[lo_k, hi_k]` of `b_0 ..= b_m`. Exact (`lo == hi`) until the
/// denominators outgrow the precision.
pub fn balanced_enclosures(m: usize, precision: Precision) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(m + 1);
    out.push((singularity(), singularity()));
    for k in 1..=m {
        let (lo, hi) = &out[k - 1];
        // the step map is increasing on [0, ∞)
        let next_lo = round(step(lo), precision, false);
        let next_hi = round(step(hi), precision, true);
        out.push((next_lo, next_hi));
    }
    out
}

/// An exact rational interval produced with cutoff `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub cutoff: usize,
}

impl BoundInterval {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains_value(&self, q: &Rational) -> bool {
        &self.lower <= q && q <= &self.upper
    }

    /// True if `other` lies inside `self`.
    pub fn contains(&self, other: &BoundInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    /// Decimal endpoints rounded outward, so the printed interval still
    /// encloses the exact one.
    pub fn render(&self, digits: usize) -> (String, String) {
        (
            to_decimal(&self.lower, digits, Rounding::Floor),
            to_decimal(&self.upper, digits, Rounding::Ceil),
        )
    }
}

/// `r/(1 - r)`, the sum of `r^j` over `j >= 1`.
fn geometric_tail(r: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if r >= &one || r.is_negative() {
        return Err(Error::DivergentTail(r.to_string()));
    }
    Ok(r / (one - r))
}

/// `Σ_{j>=m} j·r^(j-m) = (m - (m-1)r)/(1 - r)²`.
pub fn tail_weight(m: usize, r: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if r >= &one || r.is_negative() {
        return Err(Error::DivergentTail(r.to_string()));
    }
    let m_q = Rational::from_integer(m.into());
    let numer = &m_q - (&m_q - &one) * r;
    let gap = &one - r;
    Ok(numer / (&gap * &gap))
}

/// Interval for the limiting proportion of balanced vertices `Σ_k b_k`.
///
/// Levels `0..=m` are summed directly; the rest are bounded by
/// `(1/3)^j·b_m <= b_{m+j} <= (1/3 + b_m)^j·b_m` for `j >= 1`.
pub fn balanced_probability_bounds(m: usize) -> Result<BoundInterval> {
    balanced_probability_bounds_with(m, DEFAULT_PRECISION)
}

pub fn balanced_probability_bounds_with(m: usize, precision: Precision) -> Result<BoundInterval> {
    let enc = balanced_enclosures(m, precision);
    balanced_from_enclosures(&enc, m)
}

fn balanced_from_enclosures(enc: &[(Rational, Rational)], m: usize) -> Result<BoundInterval> {
    let (lo_m, hi_m) = &enc[m];
    let sum_lo: Rational = enc.iter().map(|(lo, _)| lo.clone()).sum();
    let sum_hi: Rational = enc.iter().map(|(_, hi)| hi.clone()).sum();
    let lower = sum_lo + lo_m * geometric_tail(&singularity())?;
    let upper = sum_hi + hi_m * geometric_tail(&(singularity() + hi_m))?;
    Ok(BoundInterval {
        lower,
        upper,
        cutoff: m,
    })
}

/// Interval for the limiting expected rank of a balanced vertex,
/// `Σ k·b_k / Σ b_k`.
///
/// The numerator sums `k = 0..m-1` directly and bounds the tail from `m` on
/// with [`tail_weight`] at ratio `1/3` (lower) and `1/3 + b_m` (upper). Each
/// numerator bound is divided by the opposite bound of
/// [`balanced_probability_bounds`].
pub fn expected_rank_bounds(m: usize) -> Result<BoundInterval> {
    expected_rank_bounds_with(m, DEFAULT_PRECISION)
}

pub fn expected_rank_bounds_with(m: usize, precision: Precision) -> Result<BoundInterval> {
    if m == 0 {
        return Err(Error::TooSmall {
            what: "expected-rank cutoff",
            min: 1,
            got: 0,
        });
    }
    let enc = balanced_enclosures(m, precision);
    let probability = balanced_from_enclosures(&enc, m)?;
    let (lo_m, hi_m) = &enc[m];
    let weighted = |pick: fn(&(Rational, Rational)) -> &Rational| -> Rational {
        enc[..m]
            .iter()
            .enumerate()
            .map(|(k, e)| pick(e) * Rational::from_integer(k.into()))
            .sum()
    };
    let numer_lo = weighted(|e| &e.0) + lo_m * tail_weight(m, &singularity())?;
    let numer_hi = weighted(|e| &e.1) + hi_m * tail_weight(m, &(singularity() + hi_m))?;
    Ok(BoundInterval {
        lower: numer_lo / &probability.upper,
        upper: numer_hi / &probability.lower,
        cutoff: m,
    })
}

/// Asymptotic total number of leaves over all trees with `n` vertices,
/// `√(3/π)·3^n / (2√n)`. Overflows to infinity for large `n`.
pub fn leaf_count_asymptotic<F: Float + FromPrimitive>(n: u64) -> F {
    let n = F::from_u64(n).unwrap();
    let c = |v: f64| F::from_f64(v).unwrap();
    (c(3.0) / c(std::f64::consts::PI)).sqrt() * c(3.0).powf(n) / (c(2.0) * n.sqrt())
}

/// Asymptotic total number of vertices over all trees with `n` vertices,
/// `n·3^(n+1)·√3·(1 + 1/(16n)) / ((2n + 3)·√((n + 2)π))`.
pub fn vertex_count_asymptotic<F: Float + FromPrimitive>(n: u64) -> F {
    let n = F::from_u64(n).unwrap();
    let c = |v: f64| F::from_f64(v).unwrap();
    n * c(3.0).powf(n + F::one()) * c(3.0).sqrt() * (F::one() + F::one() / (c(16.0) * n))
        / ((c(2.0) * n + c(3.0)) * ((n + c(2.0)) * c(std::f64::consts::PI)).sqrt())
}

/// Quotient of [`leaf_count_asymptotic`] by [`vertex_count_asymptotic`] with
/// the common `3^n` and `√(3/π)` factors cancelled:
/// `(2n + 3)·√(n + 2) / (6n·√n·(1 + 1/(16n)))`.
pub fn leaf_vertex_ratio_asymptotic<F: Float + FromPrimitive>(n: u64) -> F {
    let n = F::from_u64(n).unwrap();
    let c = |v: f64| F::from_f64(v).unwrap();
    (c(2.0) * n + c(3.0)) * (n + c(2.0)).sqrt()
        / (c(6.0) * n * n.sqrt() * (F::one() + F::one() / (c(16.0) * n)))
}

/// Exact leaf proportion over all trees with `n` vertices, `l(n)/(n·t_n)`.
pub fn finite_leaf_proportion(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let leaves = genfun::central_trinomials(n).pop().unwrap();
    let trees = genfun::motzkin_numbers(n).pop().unwrap();
    Ok(Rational::new(leaves, trees * BigInt::from(n)))
}

/// Exact proportion of `k`-protected vertices over all trees with `n`
/// vertices, `[x^n]P_k / (n·t_n)`.
pub fn finite_protected_proportion(k: usize, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let p = genfun::protected_series::<Rational>(k, n);
    let trees = genfun::motzkin_numbers(n).pop().unwrap();
    Ok(p.coeff(n) / Rational::from_integer(trees * BigInt::from(n)))
}

/// Mean rank of a balanced vertex over all trees with `n` vertices,
/// `eb(n) / [x^n]Σ_k B_k*`. Tends to the value enclosed by
/// [`expected_rank_bounds`].
pub fn finite_expected_rank(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let eb = genfun::eb_series::<Rational>(n);
    let balanced = genfun::balanced_total_series::<Rational>(n);
    Ok(eb.coeff(n) / balanced.coeff(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBoundReport {
    pub max_n: usize,
    /// First `n` with `b(n)·n² > 2.9^n`, if any.
    pub first_violation: Option<usize>,
}

impl RootBoundReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks `b(n)·n² <= (29/10)^n` exactly for `1 <= n <= max_n`.
pub fn balanced_root_bound_check(max_n: usize) -> Result<RootBoundReport> {
    if max_n == 0 {
        return Err(Error::TooSmall {
            what: "maximum size",
            min: 1,
            got: 0,
        });
    }
    let roots = genfun::balanced_root_series::<BigInt>(max_n);
    let first_violation = (1..=max_n).find(|&n| {
        // b(n)·n²·10^n <= 29^n
        let lhs = roots.coeff(n) * BigInt::from(n * n) * BigInt::from(10).pow(n as u32);
        lhs > BigInt::from(29).pow(n as u32)
    });
    Ok(RootBoundReport {
        max_n,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn protected_values() {
        let p = protected_probability_sequence(3);
        assert_eq!(
            p.values(),
            &[
                rational(1, 1),
                rational(2, 3),
                rational(10, 27),
                rational(370, 2187)
            ]
        );
    }

    #[test]
    fn balanced_values() {
        let b = balanced_probability_sequence(2);
        assert_eq!(
            b.values(),
            &[rational(1, 3), rational(4, 27), rational(124, 2187)]
        );
    }

    #[test]
    fn growth_ratio_identity() {
        let p = protected_probability_sequence(8);
        for (k, ratio) in p.growth_ratios().iter().enumerate() {
            let expected = (Rational::one() + &p.values()[k]) / Rational::from_integer(3.into());
            assert_eq!(ratio, &expected);
            assert!(ratio > &singularity());
        }
        assert!(p
            .values()
            .windows(2)
            .all(|w| w[1] < w[0] && w[1].is_positive()));
    }

    #[test]
    fn bender_examples() {
        assert_eq!(bender_constant(&Polynomial::x()), rational(1, 3));
        assert_eq!(bender_constant(&Polynomial::radicand()), Rational::zero());
        let b2 = genfun::balanced_poly::<Rational>(2);
        assert_eq!(bender_constant(&b2), rational(124, 2187));
    }

    #[test]
    fn pair_constants() {
        assert_eq!(protected_constant_via_pair(0).unwrap(), Rational::one());
        assert_eq!(protected_constant_via_pair(1).unwrap(), rational(2, 3));
        let p = protected_probability_sequence(4);
        assert_eq!(&protected_constant_via_pair(4).unwrap(), p.get(4).unwrap());
    }

    #[test]
    fn integer_evaluation_matches_rational_horner() {
        for k in 0..6 {
            let b = genfun::balanced_poly::<BigInt>(k);
            let q = b.map(|c| Rational::from_integer(c.clone()));
            assert_eq!(eval_int_at_third(&b), bender_constant(&q));
        }
    }

    #[test]
    fn cutoff_zero_interval() {
        let b = balanced_probability_bounds(0).unwrap();
        assert_eq!((b.lower, b.upper), (rational(1, 2), rational(1, 1)));
    }

    #[test]
    fn exact_and_rounded_agree_where_exact_is_cheap() {
        for m in 0..=9 {
            let exact = balanced_probability_bounds_with(m, Precision::Exact).unwrap();
            let rounded = balanced_probability_bounds(m).unwrap();
            assert!(rounded.contains(&exact));
            assert!(rounded.width() - exact.width() < rational(1, 1 << 30).pow(10i32));
        }
    }

    #[test]
    fn enclosures_contain_exact_values() {
        let exact = balanced_probability_sequence(10);
        let enc = balanced_enclosures(10, Precision::Bits(64));
        for (b, (lo, hi)) in exact.values().iter().zip(&enc) {
            assert!(lo <= b && b <= hi);
        }
        assert!(enc[10].0 < enc[10].1);
    }

    #[test]
    fn tail_weights() {
        assert_eq!(tail_weight(20, &singularity()).unwrap(), rational(123, 4));
        assert_eq!(tail_weight(7, &Rational::zero()).unwrap(), rational(7, 1));
        // partial sums of the series
        let r = singularity();
        let mut sum = Rational::zero();
        let mut pow = Rational::one();
        for j in 20..220 {
            sum += &pow * Rational::from_integer(j.into());
            pow *= &r;
        }
        let closed = tail_weight(20, &r).unwrap();
        assert!(sum < closed && (&closed - &sum).to_f64().unwrap() < 1e-80);
        assert!(tail_weight(3, &Rational::one()).is_err());
    }

    #[test]
    fn expected_rank_needs_positive_cutoff() {
        assert!(expected_rank_bounds(0).is_err());
        let wide = expected_rank_bounds(5).unwrap();
        let narrow = expected_rank_bounds(20).unwrap();
        assert!(wide.contains(&narrow));
    }

    #[test]
    fn asymptotic_formulas() {
        let l: f64 = leaf_count_asymptotic(100);
        let v: f64 = vertex_count_asymptotic(100);
        assert!(l.is_finite() && l > 0.0 && v.is_finite() && v > 0.0);
        let direct = l / v;
        let cancelled: f64 = leaf_vertex_ratio_asymptotic(100);
        assert!((direct - cancelled).abs() < 1e-12);
        let r32: f32 = leaf_vertex_ratio_asymptotic(1000);
        assert!((r32 - 1.0 / 3.0).abs() < 1e-3);
        let far: f64 = leaf_vertex_ratio_asymptotic(1_000_000);
        let near: f64 = leaf_vertex_ratio_asymptotic(1_000);
        assert!((far - 1.0 / 3.0).abs() < (near - 1.0 / 3.0).abs());
    }

    #[test]
    fn finite_expected_rank_values() {
        // 11 rank units over 14 balanced vertices in the four 4-vertex trees
        assert_eq!(finite_expected_rank(4).unwrap(), rational(11, 14));
        assert_eq!(finite_expected_rank(1).unwrap(), Rational::zero());
        let limit = expected_rank_bounds(20).unwrap().lower.to_f64().unwrap();
        let at = |n| finite_expected_rank(n).unwrap().to_f64().unwrap();
        let (far, near) = ((at(20) - limit).abs(), (at(100) - limit).abs());
        assert!(near < far && near < 0.01, "{far} {near}");
    }

    #[test]
    fn cutoff_sixty_is_narrow_and_nested() {
        let wide = balanced_probability_bounds(20).unwrap();
        let narrow = balanced_probability_bounds(60).unwrap();
        assert!(wide.contains(&narrow));
        assert!(narrow.width() < rational(1, 10).pow(25));
    }

    #[test]
    fn root_bound_small() {
        assert!(balanced_root_bound_check(0).is_err());
        assert!(balanced_root_bound_check(3).unwrap().holds());
    }

    #[test]
    fn finite_proportions() {
        // n = 3: 3 leaves among 2 trees of 3 vertices
        assert_eq!(finite_leaf_proportion(3).unwrap(), rational(1, 2));
        assert_eq!(finite_protected_proportion(1, 3).unwrap(), rational(1, 2));
        assert_eq!(finite_protected_proportion(0, 9).unwrap(), Rational::one());
    }
}
