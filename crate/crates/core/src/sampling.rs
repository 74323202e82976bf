//! Uniform random hypertrees and bipartite trees.
//!
//! A uniform code decodes to a uniform tree, so every sampler here draws a
//! set partition and a word independently and runs the decoder. Randomness
//! comes from a caller-owned [`SeedStream`]; [`seeded`] builds the reference
//! stream (ChaCha8 keyed from a 64-bit seed), which gives the same sequence on
//! every platform.

use num_bigint::RandBigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartite::{decode_bipartite, BipartiteCode, BipartiteTree};
use crate::codec::{decode, HypertreeCode};
use crate::counting::{integer_partitions_capped, set_partitions_with_shape, stirling2, BigCount};
use crate::error::{Error, Result};
use crate::model::{CodeWord, DegreeVector, Hypertree, SetPartition, SizePartition};

/// The reference pseudorandom generator.
pub type SeedStream = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeedStream {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform set partition of `{1, …, n}` with block sizes `λ`: shuffle, then
/// cut into consecutive runs of lengths `λ_1, …, λ_k`.
pub fn sample_set_partition<R: Rng + ?Sized>(lambda: &SizePartition, rng: &mut R) -> SetPartition {
    let n = lambda.n();
    let mut xs: Vec<usize> = (1..=n).collect();
    xs.shuffle(rng);
    let mut rest = xs.as_slice();
    let blocks = lambda
        .parts()
        .iter()
        .map(|&p| {
            let (head, tail) = rest.split_at(p);
            rest = tail;
            let mut block = head.to_vec();
            block.sort_unstable();
            block
        })
        .collect();
    SetPartition::from_blocks_unchecked(n, blocks)
}

/// Uniform word of the given length over `0..alphabet`, or, when `mu` is
/// given, a uniform arrangement of the multiset with `mu[i]` copies of `i`.
pub fn sample_word<R: Rng + ?Sized>(
    length: usize,
    alphabet: usize,
    mu: Option<&DegreeVector>,
    rng: &mut R,
) -> Result<CodeWord> {
    match mu {
        Some(mu) => {
            if mu.len() != alphabet || mu.total() != length {
                return Err(Error::ProfileMismatch(format!(
                    "letter counts ({mu}) do not fit {length} letters over {alphabet} symbols"
                )));
            }
            let mut letters: Vec<usize> = mu
                .as_slice()
                .iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(i, m))
                .collect();
            letters.shuffle(rng);
            Ok(CodeWord::new(letters))
        }
        None => {
            if alphabet == 0 && length > 0 {
                return Err(Error::ProfileMismatch("empty alphabet".into()));
            }
            // Draw in u64 so the stream does not depend on the pointer width.
            let bound = alphabet as u64;
            Ok(CodeWord::new(
                (0..length)
                    .map(|_| rng.gen_range(0..bound) as usize)
                    .collect(),
            ))
        }
    }
}

/// Uniform hypertree with hyperedge sizes `1 + λ_i`, and degrees `1 + μ_i`
/// when `mu` is given.
pub fn sample_hypertree<R: Rng + ?Sized>(
    lambda: &SizePartition,
    mu: Option<&DegreeVector>,
    rng: &mut R,
) -> Result<Hypertree> {
    let (n, k) = (lambda.n(), lambda.k());
    if k == 0 {
        return Err(Error::ProfileMismatch("size partition has no parts".into()));
    }
    if let Some(mu) = mu {
        mu.check(n, k)?;
    }
    let partition = sample_set_partition(lambda, rng);
    let word = sample_word(k - 1, n + 1, mu, rng)?;
    decode(&HypertreeCode::new(partition, word)?)
}

/// Uniform set partition of `{1, …, n}` into exactly `k` blocks.
///
/// Walks `S2(m, j) = S2(m−1, j−1) + j·S2(m−1, j)` from `m = n` down: `m`
/// either is the least element of a block (probability `S2(m−1, j−1) / S2(m, j)`)
/// or joins one of the `j` blocks of `{1, …, m−1}` uniformly.
pub fn sample_set_partition_into<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<SetPartition> {
    if k == 0 || k > n {
        return Err(Error::ProfileMismatch(format!(
            "{{1..{n}}} has no partition into {k} blocks"
        )));
    }
    let mut blocks = vec![Vec::new(); k];
    let mut j = k;
    for m in (1..=n).rev() {
        let r = rng.gen_biguint_below(&stirling2(m, j));
        let label = if r < stirling2(m - 1, j - 1) {
            j -= 1;
            j
        } else {
            rng.gen_range(0..j as u64) as usize
        };
        blocks[label].push(m);
    }
    debug_assert_eq!(j, 0);
    for b in &mut blocks {
        b.reverse();
    }
    Ok(SetPartition::from_blocks_unchecked(n, blocks))
}

/// Above this many size partitions the sampler stops tabulating them.
const SHAPE_TABLE_LIMIT: usize = 1 << 12;

#[derive(Debug, Clone)]
enum SizeLaw {
    /// Every size partition with its number of set partitions.
    Table(Vec<(SizePartition, BigCount)>, BigCount),
    /// Too many shapes to tabulate: draw the set partition directly.
    Direct,
}

/// Uniform hypertrees on `0..=n` with `k` hyperedges (and degrees `1 + μ_i`
/// when `mu` is given), for repeated draws.
///
/// Each draw picks a size partition with the probability that a uniform
/// hypertree has it — by exact inverse transform over the partitions of `n`
/// into `k` parts while those are few, otherwise by reading the shape of a
/// uniform set partition — and then samples within that class. Both routes
/// are exact; large instances use the memoized Stirling triangle, so memory
/// grows like that of [`stirling2`]`(n, k)`.
#[derive(Debug, Clone)]
pub struct HypertreeSampler {
    n: usize,
    k: usize,
    mu: Option<DegreeVector>,
    law: SizeLaw,
}

impl HypertreeSampler {
    pub fn new(n: usize, k: usize, mu: Option<DegreeVector>) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::ProfileMismatch(format!(
                "no hypertree on 0..={n} has {k} hyperedges"
            )));
        }
        if let Some(mu) = &mu {
            mu.check(n, k)?;
        }
        let law = match integer_partitions_capped(n, k, SHAPE_TABLE_LIMIT) {
            Some(shapes) => {
                let table = shapes
                    .into_iter()
                    .map(|l| {
                        let w = set_partitions_with_shape(&l);
                        (l, w)
                    })
                    .collect();
                SizeLaw::Table(table, stirling2(n, k))
            }
            None => SizeLaw::Direct,
        };
        Ok(HypertreeSampler { n, k, mu, law })
    }

    pub fn sample_size_partition<R: Rng + ?Sized>(&self, rng: &mut R) -> SizePartition {
        match &self.law {
            SizeLaw::Table(shapes, total) => {
                let mut r = rng.gen_biguint_below(total);
                for (lambda, weight) in shapes {
                    if r < *weight {
                        return lambda.clone();
                    }
                    r -= weight;
                }
                unreachable!("shape counts sum to S2(n, k)")
            }
            SizeLaw::Direct => self.sample_partition(rng).shape(),
        }
    }

    fn sample_partition<R: Rng + ?Sized>(&self, rng: &mut R) -> SetPartition {
        match &self.law {
            SizeLaw::Table(..) => sample_set_partition(&self.sample_size_partition(rng), rng),
            SizeLaw::Direct => sample_set_partition_into(self.n, self.k, rng).expect("1 <= k <= n"),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Hypertree {
        let partition = self.sample_partition(rng);
        let word = sample_word(self.k - 1, self.n + 1, self.mu.as_ref(), rng)
            .expect("profile checked at construction");
        decode(&HypertreeCode::new(partition, word).expect("consistent sizes"))
            .expect("every code decodes")
    }
}

/// One draw of the size partition of a uniform hypertree; see
/// [`HypertreeSampler`] for repeated draws.
pub fn sample_size_partition<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<SizePartition> {
    Ok(HypertreeSampler::new(n, k, None)?.sample_size_partition(rng))
}

/// One uniform hypertree among all those on `0..=n` with `k` hyperedges; see
/// [`HypertreeSampler`] for repeated draws.
pub fn sample_hypertree_free<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    mu: Option<&DegreeVector>,
    rng: &mut R,
) -> Result<Hypertree> {
    Ok(HypertreeSampler::new(n, k, mu.cloned())?.sample(rng))
}

/// Uniform spanning tree of `K_{a+1,b+1}`, optionally with prescribed degrees
/// `deg u_i = 1 + α_i` and `deg v_j = 1 + β_j`.
pub fn sample_bipartite_tree<R: Rng + ?Sized>(
    a: usize,
    b: usize,
    alpha: Option<&[usize]>,
    beta: Option<&[usize]>,
    rng: &mut R,
) -> Result<BipartiteTree> {
    let alpha = alpha.map(|x| DegreeVector::new(x.to_vec()));
    let beta = beta.map(|x| DegreeVector::new(x.to_vec()));
    let w = sample_word(a, b + 1, beta.as_ref(), rng)?;
    let wprime = sample_word(b, a + 1, alpha.as_ref(), rng)?;
    decode_bipartite(&BipartiteCode::new(
        a,
        b,
        w.into_letters(),
        wprime.into_letters(),
    )?)
}
