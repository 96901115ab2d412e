use motzkin::sampler::{sample_uniform, CountTable};
use motzkin::trees::enumerate;
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::HashMap;

/// 0.999 quantile of chi-square with 3 degrees of freedom.
const CHI2_3DF_999: f64 = 16.266;

#[test]
fn uniform_over_four_vertex_trees() {
    let classes: Vec<_> = enumerate(4).unwrap().collect();
    let draws = 10_000;
    let mut seen: HashMap<_, usize> = HashMap::new();
    for tree in sample_uniform(4, 2024, draws).unwrap() {
        *seen.entry(tree).or_default() += 1;
    }
    let expected = draws as f64 / classes.len() as f64;
    let chi2: f64 = classes
        .iter()
        .map(|t| {
            let o = *seen.get(t).unwrap_or(&0) as f64;
            (o - expected).powi(2) / expected
        })
        .sum();
    assert!(chi2 < CHI2_3DF_999, "chi-square {chi2}");
}

proptest! {
    #[test]
    fn rank_inverts_unrank(n in 1usize..60, seed in any::<u64>()) {
        use num_bigint::RandBigInt;
        use rand::SeedableRng;
        let table = CountTable::new(n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let i: BigUint = rng.gen_biguint_below(table.count(n));
        let tree = table.unrank(n, &i).unwrap();
        prop_assert_eq!(tree.size(), n);
        prop_assert_eq!(table.rank(&tree).unwrap(), i);
    }
}
