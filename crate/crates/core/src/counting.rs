//! Exact enumeration formulas for hypertrees and bipartite trees.
//!
//! All results are arbitrary-precision integers or reduced fractions. Factorials
//! and Stirling rows are memoized process-wide behind mutexes; the public
//! functions behave as pure functions.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{DegreeVector, SizePartition};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

static FACTORIALS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());
static STIRLING2: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());
static STIRLING1: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());

pub fn factorial(n: usize) -> BigCount {
    let mut table = FACTORIALS.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
    table[n].clone()
}

pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn pow(base: usize, exp: usize) -> BigCount {
    num_traits::pow(BigUint::from(base), exp)
}

/// `n! / ∏ parts_i!`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigCount> {
    let found: usize = parts.iter().sum();
    if found != n {
        return Err(Error::PartsMismatch { expected: n, found });
    }
    let denom: BigUint = parts.iter().map(|&p| factorial(p)).product();
    Ok(factorial(n) / denom)
}

/// Memoized triangle `row[m][j] = weight(m, j) · row[m−1][j] + row[m−1][j−1]`
/// with `row[0] = [1]`.
fn triangle(
    cache: &Mutex<Vec<Vec<BigUint>>>,
    weight: fn(usize, usize) -> usize,
    n: usize,
    k: usize,
) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    let mut rows = cache.lock().unwrap_or_else(|e| e.into_inner());
    if rows.is_empty() {
        rows.push(vec![BigUint::one()]);
    }
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let row: Vec<BigUint> = (0..=m)
            .map(|j| {
                let stay = if j < m {
                    &prev[j] * weight(m, j)
                } else {
                    BigUint::zero()
                };
                let step = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    BigUint::zero()
                };
                stay + step
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Partitions of `{1, …, n}` into `k` nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    triangle(&STIRLING2, |_, j| j, n, k)
}

/// Permutations of `{1, …, n}` with exactly `k` cycles, `(−1)^{n+k} S1(n, k)`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigCount {
    triangle(&STIRLING1, |m, _| m - 1, n, k)
}

/// Number of set partitions of `{1, …, n}` whose block sizes are `λ`:
/// `(n choose λ) / ∏ ν_j!`.
pub fn set_partitions_with_shape(lambda: &SizePartition) -> BigCount {
    let n = lambda.n();
    let ordered = multinomial(n, lambda.parts()).expect("parts sum to n by construction");
    let symmetry: BigUint = lambda
        .multiplicities()
        .iter()
        .map(|&m| factorial(m))
        .product();
    let (q, r) = ordered.div_rem(&symmetry);
    assert!(
        r.is_zero(),
        "multiplicity factorials must divide the multinomial"
    );
    q
}

/// Hypertrees on `0..=n` with hyperedge sizes `1 + λ_i` and degrees `1 + μ_i`.
pub fn count_hypertrees(lambda: &SizePartition, mu: &DegreeVector) -> Result<BigCount> {
    let (n, k) = (lambda.n(), lambda.k());
    if k == 0 {
        return Err(Error::ProfileMismatch("size partition has no parts".into()));
    }
    mu.check(n, k)?;
    Ok(set_partitions_with_shape(lambda) * multinomial(k - 1, mu.as_slice())?)
}

/// Hypertrees on `0..=n` with hyperedge sizes `1 + λ_i`, any degrees:
/// `(n choose λ) / ∏ ν_j! · (n + 1)^{k−1}`. Zero for the empty partition.
pub fn count_hypertrees_by_sizes(lambda: &SizePartition) -> BigCount {
    let (n, k) = (lambda.n(), lambda.k());
    if k == 0 {
        return BigUint::zero();
    }
    set_partitions_with_shape(lambda) * pow(n + 1, k - 1)
}

/// The count `(n + 1)^{k−1} S2(n, k)` of hypertrees on `0..=n` with `k`
/// hyperedges. Zero outside `1 ≤ k ≤ n`.
pub fn count_hypertrees_total(n: usize, k: usize) -> BigCount {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    pow(n + 1, k - 1) * stirling2(n, k)
}

/// `Σ_T ∏_j (λ_j − 1)!` over hypertrees with `k` edges, which equals
/// `(n + 1)^{k−1}` times the unsigned Stirling number of the first kind.
/// Zero outside `1 ≤ k ≤ n`.
pub fn weighted_total(n: usize, k: usize) -> BigCount {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    pow(n + 1, k - 1) * stirling1_unsigned(n, k)
}

/// Spanning trees of `K_{a+1,b+1}` with `deg u_i = 1 + α_i` and
/// `deg v_j = 1 + β_j`, where `a = len(α) − 1` and `b = len(β) − 1`.
pub fn count_bipartite(alpha: &[usize], beta: &[usize]) -> Result<BigCount> {
    let (a, b) = bipartite_dims(alpha, beta)?;
    Ok(multinomial(a, beta)? * multinomial(b, alpha)?)
}

fn bipartite_dims(alpha: &[usize], beta: &[usize]) -> Result<(usize, usize)> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(Error::ProfileMismatch("empty degree vector".into()));
    }
    let (a, b) = (alpha.len() - 1, beta.len() - 1);
    let (sa, sb) = (alpha.iter().sum::<usize>(), beta.iter().sum::<usize>());
    if sa != b || sb != a {
        return Err(Error::ProfileMismatch(format!(
            "need sum(alpha) = b = {b} and sum(beta) = a = {a}, got {sa} and {sb}"
        )));
    }
    Ok((a, b))
}

/// Total number of spanning trees of `K_{a+1,b+1}`.
pub fn count_bipartite_total(a: usize, b: usize) -> BigCount {
    pow(a + 1, b) * pow(b + 1, a)
}

/// Both sides of the leaf-attachment recursion for bipartite trees:
/// `Σ_{k : α_k ≥ 1} (a choose β)(b − 1 choose α − e_k)` and
/// `(a choose β)(b choose α)`. Requires `b ≥ 1`, i.e. at least one leaf to remove.
pub fn bipartite_recursion_check(alpha: &[usize], beta: &[usize]) -> Result<(BigCount, BigCount)> {
    let (a, b) = bipartite_dims(alpha, beta)?;
    if b == 0 {
        return Err(Error::ProfileMismatch("recursion needs b >= 1".into()));
    }
    let left = multinomial(a, beta)?;
    let mut lhs = BigUint::zero();
    let mut reduced = alpha.to_vec();
    for k in 0..alpha.len() {
        if alpha[k] == 0 {
            continue;
        }
        reduced[k] -= 1;
        lhs += &left * multinomial(b - 1, &reduced)?;
        reduced[k] += 1;
    }
    let rhs = left * multinomial(b, alpha)?;
    Ok((lhs, rhs))
}

/// Both sides of `(n + 1)^{n−1} = Σ_{k=0}^{n−1} (n choose k)(k + 1)^{n−1−k}(n − k)^k`.
/// Requires `n ≥ 1`.
pub fn split_identity_check(n: usize) -> (BigCount, BigCount) {
    assert!(n >= 1, "identity is stated for n >= 1");
    let lhs = pow(n + 1, n - 1);
    let rhs = (0..n)
        .map(|k| binomial(n, k) * pow(k + 1, n - 1 - k) * pow(n - k, k))
        .sum();
    (lhs, rhs)
}

/// A reduced fraction in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Probability {
    num: BigCount,
    den: BigCount,
}

impl Probability {
    pub fn new(num: BigCount, den: BigCount) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(num <= den, "probability above one");
        let g = num.gcd(&den);
        Probability {
            num: num / &g,
            den: den / g,
        }
    }

    pub fn numerator(&self) -> &BigCount {
        &self.num
    }

    pub fn denominator(&self) -> &BigCount {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Probability that a uniform hypertree with `k` edges on `0..=n` has size
/// partition `λ`: `(n choose λ) / (∏ ν_j! · S2(n, k))`.
pub fn size_profile_probability(lambda: &SizePartition, n: usize, k: usize) -> Result<Probability> {
    if lambda.n() != n || lambda.k() != k || k == 0 {
        return Err(Error::ProfileMismatch(format!(
            "size partition ({lambda}) is not a partition of n = {n} into k = {k} parts"
        )));
    }
    Ok(Probability::new(
        set_partitions_with_shape(lambda),
        stirling2(n, k),
    ))
}

/// Probability that a uniform hypertree with `k` edges on `0..=n` has degrees
/// `1 + μ_i`: `(k − 1 choose μ) / (n + 1)^{k−1}`.
pub fn degree_profile_probability(mu: &DegreeVector, n: usize, k: usize) -> Result<Probability> {
    mu.check(n, k)?;
    Ok(Probability::new(
        multinomial(k - 1, mu.as_slice())?,
        pow(n + 1, k - 1),
    ))
}

/// Partitions of `n` into exactly `k` parts, reverse-lexicographic (largest
/// first part first).
pub fn integer_partitions(n: usize, k: usize) -> Vec<SizePartition> {
    integer_partitions_capped(n, k, usize::MAX).expect("no cap")
}

/// As [`integer_partitions`], or `None` as soon as there are more than `cap`.
pub(crate) fn integer_partitions_capped(
    n: usize,
    k: usize,
    cap: usize,
) -> Option<Vec<SizePartition>> {
    fn rec(
        rest: usize,
        slots: usize,
        max_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<SizePartition>,
        cap: usize,
    ) -> bool {
        if slots == 0 {
            if rest == 0 {
                if out.len() == cap {
                    return false;
                }
                out.push(SizePartition::from_parts_unchecked(cur.clone()));
            }
            return true;
        }
        // Each remaining slot needs at least 1.
        if rest < slots {
            return true;
        }
        let hi = max_part.min(rest - (slots - 1));
        for p in (1..=hi).rev() {
            if p * slots < rest {
                break;
            }
            cur.push(p);
            let more = rec(rest - p, slots - 1, p, cur, out, cap);
            cur.pop();
            if !more {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(SizePartition::from_parts_unchecked(Vec::new()));
        }
        return Some(out);
    }
    rec(n, k, n, &mut Vec::new(), &mut out, cap).then_some(out)
}

/// All vectors of `len` nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn weak_compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == len {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            rec(rest - x, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::new(), &mut out);
    out
}
