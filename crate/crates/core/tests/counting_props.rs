use num_bigint::BigUint;
use num_traits::One;

use hypertree_core::counting::{
    count_bipartite, count_bipartite_total, count_hypertrees, count_hypertrees_by_sizes,
    count_hypertrees_total, degree_profile_probability, factorial, integer_partitions,
    size_profile_probability, weak_compositions, weighted_total, BigCount,
};
use hypertree_core::DegreeVector;

#[test]
fn degree_sums_give_size_counts() {
    for n in 1..=8 {
        for k in 1..=n {
            for lambda in integer_partitions(n, k) {
                let sum: BigCount = weak_compositions(k - 1, n + 1)
                    .into_iter()
                    .map(|mu| count_hypertrees(&lambda, &DegreeVector::new(mu)).unwrap())
                    .sum();
                assert_eq!(sum, count_hypertrees_by_sizes(&lambda), "λ = {lambda}");
            }
        }
    }
}

#[test]
fn size_sums_give_totals() {
    for n in 1..=8 {
        for k in 1..=n {
            let parts = integer_partitions(n, k);
            let sum: BigCount = parts.iter().map(count_hypertrees_by_sizes).sum();
            assert_eq!(sum, count_hypertrees_total(n, k), "n={n} k={k}");

            // Weighted total by the definition of the weight.
            let weighted: BigCount = parts
                .iter()
                .map(|l| {
                    let w: BigCount = l.parts().iter().map(|&p| factorial(p - 1)).product();
                    count_hypertrees_by_sizes(l) * w
                })
                .sum();
            assert_eq!(weighted, weighted_total(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn marginal_probabilities_sum_to_one() {
    for n in 1..=7 {
        for k in 1..=n {
            let (mut num, mut den) = (BigUint::ZERO, BigUint::one());
            for l in integer_partitions(n, k) {
                let p = size_profile_probability(&l, n, k).unwrap();
                num = num * p.denominator() + p.numerator() * &den;
                den *= p.denominator();
            }
            assert_eq!(num, den, "sizes n={n} k={k}");

            let (mut num, mut den) = (BigUint::ZERO, BigUint::one());
            for mu in weak_compositions(k - 1, n + 1) {
                let p = degree_profile_probability(&DegreeVector::new(mu), n, k).unwrap();
                num = num * p.denominator() + p.numerator() * &den;
                den *= p.denominator();
            }
            assert_eq!(num, den, "degrees n={n} k={k}");
        }
    }
}

#[test]
fn independence_of_formula() {
    for n in 1..=5 {
        for k in 1..=n {
            let total = count_hypertrees_total(n, k);
            for lambda in integer_partitions(n, k) {
                let row = count_hypertrees_by_sizes(&lambda);
                for mu in weak_compositions(k - 1, n + 1) {
                    let mu = DegreeVector::new(mu);
                    let col: BigCount = integer_partitions(n, k)
                        .iter()
                        .map(|l| count_hypertrees(l, &mu).unwrap())
                        .sum();
                    assert_eq!(count_hypertrees(&lambda, &mu).unwrap() * &total, &row * col);
                }
            }
        }
    }
}

#[test]
fn bipartite_profiles_sum_to_total() {
    for a in 0..=4 {
        for b in 0..=4 {
            let sum: BigCount = weak_compositions(b, a + 1)
                .iter()
                .flat_map(|alpha| {
                    weak_compositions(a, b + 1)
                        .into_iter()
                        .map(move |beta| count_bipartite(alpha, &beta).unwrap())
                })
                .sum();
            assert_eq!(sum, count_bipartite_total(a, b), "a={a} b={b}");
        }
    }
}
