//! Exact enumeration of protected and balanced vertices in Motzkin trees.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: truncated power series and polynomials, generic over a
//!   [`Scalar`] (exact [`Rational`] and [`BigInt`], or `f64`/`f32`).
//! - [`genfun`]: every generating function as an exact series, including the
//!   `U + V·√Δ` pair form of the protected-root series.
//! - [`asymptotics`]: limiting proportions `p_k`, `b_k`, and rigorous interval
//!   bounds for the balanced proportion and the expected balanced rank.
//! - [`trees`] and [`sampler`]: brute-force enumeration, unranking and uniform
//!   sampling, used as independent oracles.
//! - [`verify`]: the oracle-versus-series comparison harness.

pub mod asymptotics;
pub mod decimal;
pub mod error;
pub mod genfun;
pub mod sampler;
pub mod scalar;
pub mod series;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::{rational, Field, Rational, Scalar};
pub use series::{Polynomial, TruncatedSeries};

/// Exact series over the rationals.
pub type Series = TruncatedSeries<Rational>;
/// Exact series over the integers (ring operations only).
pub type IntSeries = TruncatedSeries<BigInt>;
pub type SeriesF64 = TruncatedSeries<f64>;
pub type Poly = Polynomial<Rational>;
pub type IntPoly = Polynomial<BigInt>;
