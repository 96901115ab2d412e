//! One builder per subcommand. Each returns the finished record; printing and
//! exit codes live in `main`.

use std::fmt;
use std::str::FromStr;

use motzkin::asymptotics::{self, BoundInterval, DEFAULT_PRECISION};
use motzkin::decimal::Rounding;
use motzkin::genfun;
use motzkin::sampler::{monte_carlo_estimate, Statistic};
use motzkin::verify::{oracle_checks, MAX_ORACLE_SIZE};
use motzkin::{BigInt, Rational};
use num_traits::One;

use crate::record::{Cell, OutputRecord, Row};

/// Highest coefficient index `coeffs` will compute.
pub const MAX_COEFF_INDEX: usize = 2000;

/// Largest size for which `sample` also reports the exact proportion as
/// `reference`.
pub const MAX_REFERENCE_SIZE: usize = 1000;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// The computation ran but a check did not hold.
    Verification(Box<OutputRecord>, String),
    Internal(String),
}

impl From<motzkin::Error> for Failure {
    fn from(e: motzkin::Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

impl Failure {
    pub const EXIT_INTERNAL: u8 = 1;
    pub const EXIT_USAGE: u8 = 2;
    pub const EXIT_VERIFICATION: u8 = 3;

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => Self::EXIT_USAGE,
            Failure::Verification(..) => Self::EXIT_VERIFICATION,
            Failure::Internal(_) => Self::EXIT_INTERNAL,
        }
    }
}

type Outcome = Result<OutputRecord, Failure>;

pub fn table(max_k: usize, digits: usize) -> Outcome {
    if max_k == 0 {
        return Err(Failure::Usage("--max-k must be at least 1".into()));
    }
    let seq = asymptotics::protected_probability_sequence(max_k);
    let mut record = OutputRecord::new("table")
        .param("max_k", max_k)
        .param("digits", digits);
    for k in 1..=max_k {
        let p = seq.get(k).expect("sequence covers 0..=max_k").clone();
        record = record.row(
            Row::default()
                .with("k", Cell::Count(k as u64))
                .with("p_k", Cell::exact(p, digits, Rounding::HalfEven)),
        );
    }
    Ok(record)
}

/// Generating function whose coefficients `coeffs` prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Motzkin,
    Leaves,
    Protected(usize),
    ProtectedRoot(usize),
    BalancedRank(usize),
    Balanced,
    Eb,
}

pub const SELECTORS: &str =
    "motzkin, leaves, protected:K, protected-root:K, balanced-rank:K, balanced, eb";

impl FromStr for Selector {
    type Err = Failure;

    fn from_str(s: &str) -> Result<Self, Failure> {
        let unknown = || {
            Failure::Usage(format!(
                "unknown selector `{s}`; expected one of {SELECTORS}"
            ))
        };
        let level = |k: &str| k.parse::<usize>().map_err(|_| unknown());
        match s.split_once(':') {
            None => match s {
                "motzkin" => Ok(Selector::Motzkin),
                "leaves" => Ok(Selector::Leaves),
                "balanced" => Ok(Selector::Balanced),
                "eb" => Ok(Selector::Eb),
                _ => Err(unknown()),
            },
            Some(("protected", k)) => level(k).map(Selector::Protected),
            Some(("protected-root", k)) => level(k).map(Selector::ProtectedRoot),
            Some(("balanced-rank", k)) => level(k).map(Selector::BalancedRank),
            Some(_) => Err(unknown()),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Motzkin => write!(f, "motzkin"),
            Selector::Leaves => write!(f, "leaves"),
            Selector::Protected(k) => write!(f, "protected:{k}"),
            Selector::ProtectedRoot(k) => write!(f, "protected-root:{k}"),
            Selector::BalancedRank(k) => write!(f, "balanced-rank:{k}"),
            Selector::Balanced => write!(f, "balanced"),
            Selector::Eb => write!(f, "eb"),
        }
    }
}

impl Selector {
    /// Coefficients of `x^0 ..= x^order`.
    pub fn coefficients(self, order: usize) -> Vec<BigInt> {
        let ints = |s: motzkin::Series| -> Vec<BigInt> {
            s.into_coeffs()
                .into_iter()
                .map(|c| {
                    assert!(
                        c.denom().is_one(),
                        "counting series has integer coefficients"
                    );
                    c.to_integer()
                })
                .collect()
        };
        match self {
            Selector::Motzkin => genfun::motzkin_series::<BigInt>(order).into_coeffs(),
            Selector::ProtectedRoot(k) => {
                genfun::protected_root_series::<BigInt>(k, order).into_coeffs()
            }
            Selector::Leaves => ints(genfun::leaves_series(order)),
            Selector::Protected(k) => ints(genfun::protected_series(k, order)),
            Selector::BalancedRank(k) => ints(genfun::balanced_series(k, order)),
            Selector::Balanced => ints(genfun::balanced_total_series(order)),
            Selector::Eb => ints(genfun::eb_series(order)),
        }
    }
}

pub fn coeffs(selector: &str, from: usize, to: usize) -> Outcome {
    let selector: Selector = selector.parse()?;
    if from > to {
        return Err(Failure::Usage(format!(
            "empty range: --from {from} exceeds --to {to}"
        )));
    }
    if to > MAX_COEFF_INDEX {
        return Err(Failure::Usage(format!(
            "--to {to} exceeds the supported maximum {MAX_COEFF_INDEX}"
        )));
    }
    let cs = selector.coefficients(to);
    let mut record = OutputRecord::new("coeffs")
        .param("selector", selector.to_string())
        .param("from", from)
        .param("to", to);
    for (n, c) in cs.into_iter().enumerate().skip(from) {
        record = record.row(
            Row::default()
                .with("n", Cell::Count(n as u64))
                .with("coefficient", Cell::Integer(c)),
        );
    }
    Ok(record)
}

pub fn verify(max_n: usize, max_k: usize) -> Outcome {
    if max_n > MAX_ORACLE_SIZE {
        return Err(Failure::Usage(format!(
            "--max-n {max_n} exceeds {MAX_ORACLE_SIZE}; exhaustive enumeration is too large, \
             use `motzkin sample` to estimate proportions instead"
        )));
    }
    let checks = oracle_checks(max_n, max_k)?;
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut record = OutputRecord::new("verify")
        .param("max_n", max_n)
        .param("max_k", max_k);
    for c in &checks {
        let series = if c.series.is_integer() {
            Cell::Integer(c.series.to_integer())
        } else {
            Cell::Text(crate::record::fraction(&c.series))
        };
        record = record.row(
            Row::default()
                .with("n", Cell::Count(c.n as u64))
                .with("statistic", Cell::Text(c.statistic.clone()))
                .with("oracle", Cell::Integer(c.oracle.clone()))
                .with("series", series)
                .with("passed", Cell::Bool(c.passed())),
        );
    }
    record = record
        .summary("checks", Cell::Count(checks.len() as u64))
        .summary("failed", Cell::Count(failed as u64));
    if failed > 0 {
        let msg = format!("{failed} of {} checks disagree", checks.len());
        return Err(Failure::Verification(Box::new(record), msg));
    }
    Ok(record)
}

fn interval(command: &str, bound: BoundInterval, digits: usize) -> OutputRecord {
    let precision = match DEFAULT_PRECISION {
        asymptotics::Precision::Bits(b) => serde_json::Value::from(b),
        asymptotics::Precision::Exact => serde_json::Value::Null,
    };
    let width = bound.width();
    OutputRecord::new(command)
        .param("cutoff", bound.cutoff)
        .param("digits", digits)
        .param("precision_bits", precision)
        .row(
            Row::default()
                .with("lower", Cell::exact(bound.lower, digits, Rounding::Floor))
                .with("upper", Cell::exact(bound.upper, digits, Rounding::Ceil)),
        )
        .summary("width", Cell::exact(width, digits, Rounding::Ceil))
}

pub fn bounds(cutoff: usize, digits: usize) -> Outcome {
    let b = asymptotics::balanced_probability_bounds(cutoff)?;
    Ok(interval("bounds", b, digits))
}

pub fn expected_rank(cutoff: usize, digits: usize) -> Outcome {
    if cutoff == 0 {
        return Err(Failure::Usage(
            "--cutoff must be at least 1 for expected-rank".into(),
        ));
    }
    let b = asymptotics::expected_rank_bounds(cutoff)?;
    Ok(interval("expected-rank", b, digits))
}

/// `[x^n]` of the vertex-counting series for `statistic`, over `n·t_n`.
pub fn exact_proportion(n: usize, statistic: Statistic) -> Rational {
    let series: motzkin::Series = match statistic {
        Statistic::Leaf => genfun::leaves_series(n),
        Statistic::Protected(k) => genfun::protected_series(k as usize, n),
        Statistic::Balanced => genfun::balanced_total_series(n),
        Statistic::BalancedRank(k) => genfun::balanced_series(k as usize, n),
    };
    let trees = genfun::motzkin_numbers(n).pop().expect("n >= 1");
    series.coeff(n) / Rational::from_integer(trees * BigInt::from(n))
}

pub fn sample(n: usize, statistic: &str, samples: u64, seed: u64, digits: usize) -> Outcome {
    let statistic: Statistic = statistic.parse()?;
    let report = monte_carlo_estimate(n, statistic, samples, seed)?;
    let mut row = Row::default()
        .with("n", Cell::Count(n as u64))
        .with("statistic", Cell::Text(statistic.to_string()))
        .with("samples", Cell::Count(report.samples))
        .with("hits", Cell::Count(report.hits))
        .with("estimate", Cell::Float(report.estimate))
        .with("standard_error", Cell::Float(report.standard_error));
    if n <= MAX_REFERENCE_SIZE {
        let exact = exact_proportion(n, statistic);
        row = row.with("reference", Cell::exact(exact, digits, Rounding::HalfEven));
    }
    Ok(OutputRecord::new("sample")
        .param("n", n)
        .param("statistic", statistic.to_string())
        .param("samples", samples)
        .param("seed", seed)
        .param("digits", digits)
        .row(row))
}
