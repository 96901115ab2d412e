//! Counting, ranking and uniform random generation of Motzkin trees.
//!
//! Nothing here touches the series code: tree counts come from the
//! convolution `t_n = t_{n-1} + Σ t_l·t_{n-1-l}` and vertex statistics from
//! [`crate::trees::vertex_stats`], so Monte Carlo estimates are an independent
//! check on the generating functions.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::trees::{vertex_stats, Tree};

/// Tree counts `t_0 ..= t_N` with `t_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn new(max_n: usize) -> Self {
        let mut counts = vec![BigUint::zero()];
        if max_n >= 1 {
            counts.push(BigUint::one());
        }
        for n in 2..=max_n {
            let mut t = counts[n - 1].clone();
            for l in 1..n - 1 {
                t += &counts[l] * &counts[n - 1 - l];
            }
            counts.push(t);
        }
        Self { counts }
    }

    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }

    /// `t_n`; panics if `n` exceeds the table.
    pub fn count(&self, n: usize) -> &BigUint {
        &self.counts[n]
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if n > self.max_n() {
            return Err(Error::TooLarge {
                what: "tree size",
                max: self.max_n(),
                got: n,
            });
        }
        Ok(())
    }

    /// The `index`-th tree with `n` vertices in the order of
    /// [`crate::trees::enumerate`].
    pub fn unrank(&self, n: usize, index: &BigUint) -> Result<Tree> {
        self.check_size(n)?;
        if index >= &self.counts[n] {
            return Err(Error::IndexOutOfRange {
                size: n,
                index: index.to_string(),
                count: self.counts[n].to_string(),
            });
        }
        let mut arities = Vec::with_capacity(n);
        // pending subtrees in preorder, top of stack first
        let mut pending = vec![(n, index.clone())];
        while let Some((size, mut i)) = pending.pop() {
            if size == 1 {
                arities.push(0);
                continue;
            }
            let unary_block = &self.counts[size - 1];
            if &i < unary_block {
                arities.push(1);
                pending.push((size - 1, i));
                continue;
            }
            i -= unary_block;
            arities.push(2);
            for left in 1..size - 1 {
                let right = size - 1 - left;
                let block = &self.counts[left] * &self.counts[right];
                if i < block {
                    let r_count = &self.counts[right];
                    pending.push((right, &i % r_count));
                    pending.push((left, &i / r_count));
                    break;
                }
                i -= block;
            }
        }
        Ok(Tree::from_arities_unchecked(arities))
    }

    /// Inverse of [`CountTable::unrank`].
    pub fn rank(&self, tree: &Tree) -> Result<BigUint> {
        self.check_size(tree.size())?;
        let word = tree.arities();
        // Completed subtrees as (size, rank); scanning backwards finishes
        // children before parents, and the leftmost child ends on top.
        let mut stack: Vec<(usize, BigUint)> = Vec::new();
        for &a in word.iter().rev() {
            let done = match a {
                0 => (1, BigUint::zero()),
                1 => {
                    let (s, r) = stack.pop().expect("well-formed word");
                    (s + 1, r)
                }
                _ => {
                    let (ls, lr) = stack.pop().expect("well-formed word");
                    let (rs, rr) = stack.pop().expect("well-formed word");
                    let size = ls + rs + 1;
                    let mut r = self.counts[size - 1].clone();
                    for l in 1..ls {
                        r += &self.counts[l] * &self.counts[size - 1 - l];
                    }
                    r += lr * &self.counts[rs] + rr;
                    (size, r)
                }
            };
            stack.push(done);
        }
        Ok(stack.pop().expect("nonempty tree").1)
    }
}

/// `t_n`, the number of Motzkin trees with `n` vertices.
pub fn motzkin_count(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    Ok(CountTable::new(n).counts.swap_remove(n))
}

pub fn unrank(n: usize, index: &BigUint) -> Result<Tree> {
    CountTable::new(n).unrank(n, index)
}

/// `count` independent uniform trees with `n` vertices, reproducible from
/// `seed`.
pub fn sample_uniform(n: usize, seed: u64, count: usize) -> Result<impl Iterator<Item = Tree>> {
    let table = CountTable::new(n);
    table.check_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(move |_| {
        let i = rng.gen_biguint_below(table.count(n));
        table.unrank(n, &i).expect("index drawn below the count")
    }))
}

/// Vertex property whose proportion is estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Leaf,
    Protected(u32),
    Balanced,
    BalancedRank(u32),
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Leaf => write!(f, "leaf"),
            Statistic::Protected(k) => write!(f, "protected:{k}"),
            Statistic::Balanced => write!(f, "balanced"),
            Statistic::BalancedRank(k) => write!(f, "balanced-rank:{k}"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownStatistic(s.to_string());
        match s.split_once(':') {
            None if s == "leaf" => Ok(Statistic::Leaf),
            None if s == "balanced" => Ok(Statistic::Balanced),
            Some(("protected", k)) => k.parse().map(Statistic::Protected).map_err(|_| unknown()),
            Some(("balanced-rank", k)) => k
                .parse()
                .map(Statistic::BalancedRank)
                .map_err(|_| unknown()),
            _ => Err(unknown()),
        }
    }
}

impl Statistic {
    pub fn holds(&self, stats: &crate::trees::VertexStats) -> bool {
        match *self {
            Statistic::Leaf => stats.rank == 0,
            Statistic::Protected(k) => stats.is_protected(k),
            Statistic::Balanced => stats.balanced,
            Statistic::BalancedRank(k) => stats.balanced && stats.rank == k,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub n: usize,
    pub statistic: Statistic,
    pub samples: u64,
    pub hits: u64,
    pub estimate: f64,
    pub standard_error: f64,
    pub seed: u64,
}

/// Samples per independent random stream. Fixed so results do not depend on
/// the number of worker threads.
const CHUNK: u64 = 4096;

/// Estimates the proportion of vertices with `statistic` among all vertices
/// of all trees with `n` vertices: draw a uniform tree, then a uniform vertex.
///
/// Chunk `c` of the samples uses the ChaCha stream `c` under `seed`.
pub fn monte_carlo_estimate(
    n: usize,
    statistic: Statistic,
    samples: u64,
    seed: u64,
) -> Result<SampleReport> {
    if samples == 0 {
        return Err(Error::TooSmall {
            what: "sample count",
            min: 1,
            got: 0,
        });
    }
    let table = CountTable::new(n);
    table.check_size(n)?;
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let len = CHUNK.min(samples - c * CHUNK);
            let mut hits = 0u64;
            for _ in 0..len {
                let i = rng.gen_biguint_below(table.count(n));
                let tree = table.unrank(n, &i).expect("index drawn below the count");
                let v = rng.gen_range(0..n);
                if statistic.holds(&vertex_stats(&tree)[v]) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let estimate = hits.to_f64().unwrap() / samples.to_f64().unwrap();
    let standard_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok(SampleReport {
        n,
        statistic,
        samples,
        hits,
        estimate,
        standard_error,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::enumerate;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(motzkin_count(1).unwrap(), BigUint::one());
        assert_eq!(motzkin_count(6).unwrap(), BigUint::from(21u32));
        assert!(motzkin_count(0).is_err());
        let table = CountTable::new(12);
        let small: Vec<u64> = (0..=12).map(|n| table.count(n).to_u64().unwrap()).collect();
        assert_eq!(
            small,
            vec![0, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798]
        );
    }

    #[test]
    fn unrank_small() {
        assert_eq!(unrank(1, &BigUint::zero()).unwrap(), Tree::leaf());
        let table = CountTable::new(4);
        let got: Vec<Tree> = (0..4u32)
            .map(|i| table.unrank(4, &BigUint::from(i)).unwrap())
            .collect();
        let want: Vec<Tree> = enumerate(4).unwrap().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn unrank_rejects_bad_input() {
        let table = CountTable::new(5);
        assert!(matches!(
            table.unrank(4, &BigUint::from(4u32)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            table.unrank(0, &BigUint::zero()),
            Err(Error::EmptyTree)
        ));
        assert!(matches!(
            table.unrank(6, &BigUint::zero()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn unrank_is_injective() {
        for n in 1..=10 {
            let table = CountTable::new(n);
            let count = table.count(n).to_u64().unwrap();
            let all: HashSet<Tree> = (0..count)
                .map(|i| table.unrank(n, &BigUint::from(i)).unwrap())
                .collect();
            assert_eq!(all.len() as u64, count);
        }
    }

    #[test]
    fn deep_trees() {
        let path = Tree::path(200_000).unwrap();
        assert_eq!(vertex_stats(&path)[0].rank, 199_999);
        // index 0 of every size is the path
        let table = CountTable::new(300);
        assert_eq!(
            table.unrank(300, &BigUint::zero()).unwrap(),
            Tree::path(300).unwrap()
        );
        assert_eq!(
            table.rank(&Tree::path(300).unwrap()).unwrap(),
            BigUint::zero()
        );
        let last = table.count(300) - 1u32;
        assert_eq!(
            table.rank(&table.unrank(300, &last).unwrap()).unwrap(),
            last
        );
    }

    #[test]
    fn sampling_is_deterministic() {
        let a: Vec<Tree> = sample_uniform(30, 7, 20).unwrap().collect();
        let b: Vec<Tree> = sample_uniform(30, 7, 20).unwrap().collect();
        let c: Vec<Tree> = sample_uniform(30, 8, 20).unwrap().collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(sample_uniform(1, 3, 5).unwrap().all(|t| t == Tree::leaf()));
    }

    #[test]
    fn statistic_parsing() {
        assert_eq!("leaf".parse::<Statistic>().unwrap(), Statistic::Leaf);
        assert_eq!(
            "protected:3".parse::<Statistic>().unwrap(),
            Statistic::Protected(3)
        );
        assert_eq!(
            "balanced-rank:0".parse::<Statistic>().unwrap(),
            Statistic::BalancedRank(0)
        );
        for bad in ["", "leaves", "protected", "protected:x", "balanced:2"] {
            assert!(matches!(
                bad.parse::<Statistic>(),
                Err(Error::UnknownStatistic(_))
            ));
        }
        for s in [
            Statistic::Leaf,
            Statistic::Protected(2),
            Statistic::BalancedRank(1),
        ] {
            assert_eq!(s.to_string().parse::<Statistic>().unwrap(), s);
        }
    }

    #[test]
    fn single_vertex_estimate() {
        let r = monte_carlo_estimate(1, Statistic::Balanced, 1000, 1).unwrap();
        assert_eq!(r.estimate, 1.0);
        assert_eq!(r.standard_error, 0.0);
        assert!(monte_carlo_estimate(5, Statistic::Leaf, 0, 1).is_err());
    }

    #[test]
    fn estimate_is_reproducible() {
        let a = monte_carlo_estimate(20, Statistic::Protected(1), 10_000, 99).unwrap();
        let b = monte_carlo_estimate(20, Statistic::Protected(1), 10_000, 99).unwrap();
        assert_eq!(a, b);
        assert!((0.0..=1.0).contains(&a.estimate));
    }
}
