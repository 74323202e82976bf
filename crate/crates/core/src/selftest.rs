//! Certification run: every closed form and both codecs against the oracle.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bipartite::{decode_bipartite, encode_bipartite, BipartiteCode};
use crate::codec::{decode, encode, HypertreeCode};
use crate::counting::{
    bipartite_recursion_check, count_bipartite, count_bipartite_total, count_hypertrees,
    count_hypertrees_total, integer_partitions, split_identity_check, weak_compositions,
    weighted_total, BigCount,
};
use crate::error::Result;
use crate::model::DegreeVector;
use crate::oracle::{
    all_words, bipartite_census_bounded, enumerate_bipartite_trees_bounded,
    enumerate_hypertrees_bounded, profile_census_bounded, set_partitions, weighted_census_bounded,
    OracleBounds,
};

#[derive(Debug, Clone, Copy)]
pub struct SelftestConfig {
    /// Hypertree census and left-inverse range: `n ≤ max_n`.
    pub max_n: usize,
    /// Bipartite census range: `a, b ≤ max_ab`.
    pub max_ab: usize,
    /// Right inverse of the hypertree codec checked for `n ≤ min(max_n, this)`.
    pub max_n_codes: usize,
    pub max_ab_recursion: usize,
    pub max_n_identity: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_n: 5,
            max_ab: 3,
            max_n_codes: 4,
            max_ab_recursion: 5,
            max_n_identity: 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<Value>,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub checks: Vec<CheckOutcome>,
    pub elapsed_ms: f64,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<Value> {
        self.checks.iter().find_map(|c| {
            c.failure
                .as_ref()
                .map(|f| json!({"check": c.name, "case": f}))
        })
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "check": c.name,
                    "cases": c.cases,
                    "passed": c.failure.is_none(),
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "checks": checks,
            "first_failure": self.first_failure(),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

/// Runs a check, stopping at its first failing case.
struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; returns false once a failure has been seen.
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> Value) -> bool {
        if self.failure.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.failure = Some(detail());
        }
        ok
    }

    fn error(&mut self, err: crate::error::Error) {
        if self.failure.is_none() {
            self.failure = Some(json!({"error": err.class(), "message": err.to_string()}));
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

fn s(x: &BigCount) -> String {
    x.to_string()
}

pub fn run(config: &SelftestConfig) -> SelftestReport {
    let start = Instant::now();
    let bounds = OracleBounds {
        max_n: config.max_n,
        max_ab: config.max_ab,
    };
    let checks = vec![
        census_vs_formula(config.max_n, bounds),
        hypertree_totals(config.max_n, bounds),
        weighted_totals(config.max_n, bounds),
        independence(config.max_n, bounds),
        hypertree_left_inverse(config.max_n, bounds),
        hypertree_right_inverse(config.max_n.min(config.max_n_codes)),
        bipartite_census_check(config.max_ab, bounds),
        bipartite_round_trips(config.max_ab, bounds),
        bipartite_recursion(config.max_ab_recursion),
        split_identity(config.max_n_identity),
    ];
    SelftestReport {
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn census_vs_formula(max_n: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("profile_census");
    if let Err(e) = census_vs_formula_inner(max_n, bounds, &mut check) {
        check.error(e);
    }
    check.finish()
}

fn census_vs_formula_inner(max_n: usize, bounds: OracleBounds, check: &mut Check) -> Result<()> {
    for n in 1..=max_n {
        for k in 1..=n {
            let census = profile_census_bounded(n, k, bounds)?;
            let mut admissible = 0usize;
            for lambda in integer_partitions(n, k) {
                for mu in weak_compositions(k - 1, n + 1) {
                    admissible += 1;
                    let key = (lambda.parts().to_vec(), mu.clone());
                    let found = census.profiles.get(&key).cloned().unwrap_or_default();
                    let expected = count_hypertrees(&lambda, &DegreeVector::new(mu.clone()))?;
                    if !check.case(found == expected, || {
                        json!({"n": n, "k": k, "lambda": lambda.parts(), "mu": mu,
                               "oracle": s(&found), "formula": s(&expected)})
                    }) {
                        return Ok(());
                    }
                }
            }
            // No profile outside the admissible set.
            if !check.case(census.profiles.len() <= admissible, || {
                json!({"n": n, "k": k, "unexpected_profiles": census.profiles.len() - admissible})
            }) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn hypertree_totals(max_n: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("hypertree_totals");
    'outer: for n in 1..=max_n {
        for k in 1..=n {
            match enumerate_hypertrees_bounded(n, k, bounds) {
                Ok(trees) => {
                    let found = BigUint::from(trees.count());
                    let expected = count_hypertrees_total(n, k);
                    if !check.case(
                        found == expected,
                        || json!({"n": n, "k": k, "oracle": s(&found), "formula": s(&expected)}),
                    ) {
                        break 'outer;
                    }
                }
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            }
        }
    }
    check.finish()
}

fn weighted_totals(max_n: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("weighted_totals");
    'outer: for n in 1..=max_n {
        for k in 1..=n {
            match weighted_census_bounded(n, k, bounds) {
                Ok(found) => {
                    let expected = weighted_total(n, k);
                    if !check.case(
                        found == expected,
                        || json!({"n": n, "k": k, "oracle": s(&found), "formula": s(&expected)}),
                    ) {
                        break 'outer;
                    }
                }
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            }
        }
    }
    check.finish()
}

/// Joint census factorizes: `count(λ, μ) · total = row(λ) · column(μ)`.
fn independence(max_n: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("size_degree_independence");
    'outer: for n in 1..=max_n {
        for k in 1..=n {
            let census = match profile_census_bounded(n, k, bounds) {
                Ok(c) => c,
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            };
            let mut rows: BTreeMap<&[usize], BigCount> = BTreeMap::new();
            let mut cols: BTreeMap<&[usize], BigCount> = BTreeMap::new();
            for ((l, m), c) in &census.profiles {
                *rows.entry(l.as_slice()).or_default() += c;
                *cols.entry(m.as_slice()).or_default() += c;
            }
            for lambda in integer_partitions(n, k) {
                for mu in weak_compositions(k - 1, n + 1) {
                    let key = (lambda.parts().to_vec(), mu.clone());
                    let joint = census.profiles.get(&key).cloned().unwrap_or_default();
                    let row = rows.get(lambda.parts()).cloned().unwrap_or_default();
                    let col = cols.get(mu.as_slice()).cloned().unwrap_or_default();
                    let lhs = &joint * &census.total;
                    let rhs = &row * &col;
                    if !check.case(lhs == rhs && !joint.is_zero(), || {
                        json!({"n": n, "k": k, "lambda": lambda.parts(), "mu": mu,
                               "joint_times_total": s(&lhs), "row_times_column": s(&rhs)})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    check.finish()
}

fn hypertree_left_inverse(max_n: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("hypertree_decode_encode");
    'outer: for n in 1..=max_n {
        for k in 1..=n {
            let trees = match enumerate_hypertrees_bounded(n, k, bounds) {
                Ok(t) => t,
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            };
            for t in trees {
                let result = encode(&t).and_then(|c| {
                    let back = decode(&c)?;
                    let (lambda, mu) = t.profile();
                    let fidelity = c.partition().shape() == lambda
                        && c.word().multiplicities(n + 1) == mu.as_slice();
                    Ok((c, back, fidelity))
                });
                let ok = matches!(&result, Ok((_, back, true)) if *back == t);
                if !check.case(ok, || json!({"tree": t.graph().edge_lists(), "n": n})) {
                    break 'outer;
                }
            }
        }
    }
    check.finish()
}

fn hypertree_right_inverse(max_n: usize) -> CheckOutcome {
    let mut check = Check::new("hypertree_encode_decode");
    'outer: for n in 1..=max_n {
        for k in 1..=n {
            for blocks in set_partitions(n, k) {
                for word in all_words(k - 1, n + 1) {
                    let result = HypertreeCode::from_parts(n, blocks.clone(), word.clone())
                        .and_then(|c| Ok((decode(&c)?, c)))
                        .and_then(|(t, c)| Ok((encode(&t)?, t, c)));
                    let ok = matches!(&result, Ok((again, t, c)) if again == c && {
                        let (lambda, mu) = t.profile();
                        lambda == c.partition().shape() && c.word().multiplicities(n + 1) == mu.as_slice()
                    });
                    if !check.case(ok, || json!({"n": n, "partition": blocks, "word": word})) {
                        break 'outer;
                    }
                }
            }
        }
    }
    check.finish()
}

fn bipartite_census_check(max_ab: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("bipartite_census");
    'outer: for a in 0..=max_ab {
        for b in 0..=max_ab {
            let census = match bipartite_census_bounded(a, b, bounds) {
                Ok(c) => c,
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            };
            let total = count_bipartite_total(a, b);
            if !check.case(
                census.total == total,
                || json!({"a": a, "b": b, "oracle": s(&census.total), "formula": s(&total)}),
            ) {
                break 'outer;
            }
            for alpha in weak_compositions(b, a + 1) {
                for beta in weak_compositions(a, b + 1) {
                    let key = (alpha.clone(), beta.clone());
                    let found = census.profiles.get(&key).cloned().unwrap_or_default();
                    let expected = count_bipartite(&alpha, &beta).unwrap_or_default();
                    if !check.case(found == expected, || {
                        json!({"a": a, "b": b, "alpha": alpha, "beta": beta,
                               "oracle": s(&found), "formula": s(&expected)})
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    check.finish()
}

fn bipartite_round_trips(max_ab: usize, bounds: OracleBounds) -> CheckOutcome {
    let mut check = Check::new("bipartite_round_trips");
    'outer: for a in 0..=max_ab {
        for b in 0..=max_ab {
            let trees = match enumerate_bipartite_trees_bounded(a, b, bounds) {
                Ok(t) => t,
                Err(e) => {
                    check.error(e);
                    break 'outer;
                }
            };
            for t in trees {
                let code = encode_bipartite(&t);
                let back = decode_bipartite(&code);
                let (alpha, beta) = t.degree_profile();
                let fidelity = mult(code.w(), b + 1) == beta && mult(code.wprime(), a + 1) == alpha;
                if !check.case(
                    back.as_ref() == Ok(&t) && fidelity,
                    || json!({"a": a, "b": b, "edges": t.edges()}),
                ) {
                    break 'outer;
                }
            }
            for w in all_words(a, b + 1) {
                for wprime in all_words(b, a + 1) {
                    let ok = BipartiteCode::new(a, b, w.clone(), wprime.clone())
                        .and_then(|c| Ok((decode_bipartite(&c)?, c)))
                        .is_ok_and(|(t, c)| encode_bipartite(&t) == c);
                    if !check.case(ok, || json!({"a": a, "b": b, "w": w, "wprime": wprime})) {
                        break 'outer;
                    }
                }
            }
        }
    }
    check.finish()
}

fn mult(word: &[usize], alphabet: usize) -> Vec<usize> {
    let mut m = vec![0; alphabet];
    for &x in word {
        m[x] += 1;
    }
    m
}

fn bipartite_recursion(max_ab: usize) -> CheckOutcome {
    let mut check = Check::new("bipartite_recursion");
    'outer: for a in 0..=max_ab {
        for b in 1..=max_ab {
            for alpha in weak_compositions(b, a + 1) {
                for beta in weak_compositions(a, b + 1) {
                    let result = bipartite_recursion_check(&alpha, &beta);
                    let ok = matches!(&result, Ok((l, r)) if l == r);
                    if !check.case(ok, || json!({"alpha": alpha, "beta": beta})) {
                        break 'outer;
                    }
                }
            }
        }
    }
    check.finish()
}

fn split_identity(max_n: usize) -> CheckOutcome {
    let mut check = Check::new("split_identity");
    for n in 1..=max_n {
        let (lhs, rhs) = split_identity_check(n);
        if !check.case(
            lhs == rhs,
            || json!({"n": n, "lhs": s(&lhs), "rhs": s(&rhs)}),
        ) {
            break;
        }
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let config = SelftestConfig {
            max_n: 3,
            max_ab: 2,
            max_n_codes: 3,
            max_ab_recursion: 3,
            max_n_identity: 8,
        };
        let report = run(&config);
        assert!(report.passed(), "{}", report.to_json());
        assert!(report.checks.iter().all(|c| c.cases > 0));
    }

    #[test]
    fn bound_errors_are_reported() {
        let config = SelftestConfig {
            max_n: 2,
            max_ab: 1,
            ..SelftestConfig::default()
        };
        let mut report = run(&config);
        assert!(report.passed());
        // Force an out-of-bounds census to surface as a failure.
        report.checks.push(census_vs_formula(
            3,
            OracleBounds {
                max_n: 2,
                max_ab: 1,
            },
        ));
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        assert_eq!(failure["case"]["error"], "BoundExceeded");
    }
}
