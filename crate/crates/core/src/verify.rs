//! Brute-force tallies against generating-function coefficients.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::genfun;
use crate::scalar::Rational;
use crate::trees::aggregate;

/// Largest size accepted by [`oracle_checks`]; enumeration beyond it is
/// better served by sampling.
pub const MAX_ORACLE_SIZE: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub n: usize,
    pub statistic: String,
    pub oracle: BigInt,
    pub series: Rational,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.series == Rational::from_integer(self.oracle.clone())
    }
}

/// One check per size `1..=max_n` and statistic: tree count, leaves,
/// `k`-protected and balanced rank-`k` vertices for `k <= max_k`, balanced
/// vertices, balanced roots and the balanced rank sum.
pub fn oracle_checks(max_n: usize, max_k: usize) -> Result<Vec<Check>> {
    if max_n > MAX_ORACLE_SIZE {
        return Err(Error::TooLarge {
            what: "oracle size",
            max: MAX_ORACLE_SIZE,
            got: max_n,
        });
    }
    if max_n == 0 {
        return Err(Error::EmptyTree);
    }
    let order = max_n;
    let motzkin = genfun::motzkin_series::<Rational>(order);
    let leaves = genfun::leaves_series::<Rational>(order);
    let protected: Vec<_> = (0..=max_k)
        .map(|k| genfun::protected_series::<Rational>(k, order))
        .collect();
    let balanced_rank: Vec<_> = (0..=max_k)
        .map(|k| genfun::balanced_series::<Rational>(k, order))
        .collect();
    let balanced = genfun::balanced_total_series::<Rational>(order);
    let roots = genfun::balanced_root_series::<Rational>(order);
    let eb = genfun::eb_series::<Rational>(order);

    let mut checks = Vec::new();
    for n in 1..=max_n {
        let agg = aggregate(n, max_k)?;
        let mut push = |statistic: String, oracle: u64, series: &Rational| {
            checks.push(Check {
                n,
                statistic,
                oracle: oracle.into(),
                series: series.clone(),
            })
        };
        push("trees".into(), agg.trees, motzkin.coeff(n));
        push("leaves".into(), agg.leaves_total, leaves.coeff(n));
        for (k, (total, series)) in agg.protected_total.iter().zip(&protected).enumerate() {
            push(format!("protected:{k}"), *total, series.coeff(n));
        }
        for (k, series) in balanced_rank.iter().enumerate() {
            let oracle = agg.balanced_rank_total.get(k).copied().unwrap_or(0);
            push(format!("balanced-rank:{k}"), oracle, series.coeff(n));
        }
        push("balanced".into(), agg.balanced_total, balanced.coeff(n));
        push(
            "balanced-root".into(),
            agg.balanced_root_trees,
            roots.coeff(n),
        );
        push("eb".into(), agg.eb, eb.coeff(n));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_pass() {
        let checks = oracle_checks(6, 3).unwrap();
        assert_eq!(checks.len(), 6 * (2 + 4 + 4 + 3));
        assert!(checks.iter().all(Check::passed));
    }

    #[test]
    fn guards() {
        assert!(matches!(oracle_checks(15, 2), Err(Error::TooLarge { .. })));
        assert!(oracle_checks(0, 2).is_err());
    }
}
