#![allow(dead_code)]

use std::collections::BTreeMap;
use std::hash::Hash;

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Pearson statistic of observed counts against equal expected counts over
/// `outcomes` cells (cells never observed count as zero).
pub fn chi_square_uniform<K: Ord>(observed: &BTreeMap<K, u64>, outcomes: usize) -> f64 {
    let total: u64 = observed.values().sum();
    let expected = total as f64 / outcomes as f64;
    let seen: f64 = observed
        .values()
        .map(|&o| (o as f64 - expected).powi(2) / expected)
        .sum();
    let unseen = (outcomes - observed.len()) as f64 * expected;
    seen + unseen
}

/// Pearson statistic against arbitrary expected probabilities.
pub fn chi_square<K: Ord + Hash>(observed: &BTreeMap<K, u64>, expected: &BTreeMap<K, f64>) -> f64 {
    let total: u64 = observed.values().sum();
    assert!(
        observed.keys().all(|k| expected.contains_key(k)),
        "outcome outside support"
    );
    expected
        .iter()
        .map(|(k, p)| {
            let e = p * total as f64;
            let o = observed.get(k).copied().unwrap_or(0) as f64;
            (o - e).powi(2) / e
        })
        .sum()
}

/// Rejection threshold at significance 0.001.
pub fn critical_value(outcomes: usize) -> f64 {
    ChiSquared::new((outcomes - 1) as f64)
        .unwrap()
        .inverse_cdf(0.999)
}

pub fn tally<K: Ord>(items: impl IntoIterator<Item = K>) -> BTreeMap<K, u64> {
    let mut m = BTreeMap::new();
    for x in items {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}
