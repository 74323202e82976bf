//! `hypertree` — counts, codecs, samplers and the oracle self-test, with JSON I/O.
//!
//! Exit status: 0 on success, 1 on a domain error (error class on stderr),
//! 2 on a usage error, 3 when `selftest` finds a failing case.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use hypertree_core::counting::{
    count_bipartite, count_bipartite_total, count_hypertrees, count_hypertrees_by_sizes,
    count_hypertrees_total, multinomial, pow, split_identity_check, stirling2, weighted_total,
};
use hypertree_core::json::{
    report_to_json, BipartiteCodeJson, BipartiteTreeJson, HypergraphJson, HypertreeCodeJson,
    ProbabilityJson,
};
use hypertree_core::oracle::{
    bipartite_census_bounded, enumerate_bipartite_trees_bounded, enumerate_hypertrees_bounded,
    profile_census_bounded, OracleBounds,
};
use hypertree_core::sampling::{sample_bipartite_tree, sample_hypertree, seeded, HypertreeSampler};
use hypertree_core::selftest::{self, SelftestConfig};
use hypertree_core::{
    decode, decode_bipartite, encode, encode_bipartite, BigCount, DegreeVector, Error, Probability,
    SizePartition,
};

#[derive(Parser)]
#[command(
    name = "hypertree",
    version,
    about = "Labelled hypertrees and bipartite trees: counts, codes, samplers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count hypertrees on 0..=n by hyperedge sizes and/or degrees.
    Count(CountArgs),
    /// Count spanning trees of K_{a+1,b+1} by degrees.
    BipartiteCount(BipCountArgs),
    /// Hypertree JSON → code JSON, one per input value.
    Encode(InputArgs),
    /// Code JSON → hypertree JSON.
    Decode(InputArgs),
    /// Bipartite tree JSON → code JSON.
    BipEncode(InputArgs),
    /// Bipartite code JSON → tree JSON.
    BipDecode(InputArgs),
    /// Uniform random hypertrees as JSON lines.
    Sample(SampleArgs),
    /// Uniform random bipartite trees as JSON lines.
    BipSample(BipSampleArgs),
    /// Every hypertree with the given n and k, in canonical order.
    Enumerate(EnumerateArgs),
    /// Every spanning tree of K_{a+1,b+1}, in canonical order.
    BipEnumerate(BipEnumerateArgs),
    /// Check every count and both codecs against exhaustive enumeration.
    Selftest(SelftestArgs),
    /// Both sides of (n+1)^(n-1) = Σ_k C(n,k) (k+1)^(n-1-k) (n-k)^k, exactly.
    Identity {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Hyperedge sizes minus one, decreasing, e.g. `2,1`.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,
    /// Degrees minus one for vertices 0..=n, e.g. `0,1,0,0`.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<usize>>,
    /// Σ over trees of Π (λ_j − 1)! instead of a plain count.
    #[arg(long, conflicts_with_all = ["lambda", "mu", "probability"])]
    weighted: bool,
    /// Print the fraction of all hypertrees with these n, k instead.
    #[arg(long)]
    probability: bool,
}

#[derive(Args)]
struct BipCountArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    /// Degrees minus one of u_0..u_a.
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<usize>>,
    /// Degrees minus one of v_0..v_b.
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<usize>>,
    #[arg(long)]
    probability: bool,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args)]
struct BipSampleArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Largest n the oracle accepts.
    #[arg(long, default_value_t = DEFAULT_BOUNDS.max_n)]
    max_n: usize,
    /// Print the per-profile census instead of the trees.
    #[arg(long)]
    census: bool,
}

#[derive(Args)]
struct BipEnumerateArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long, default_value_t = DEFAULT_BOUNDS.max_ab)]
    max_ab: usize,
    #[arg(long)]
    census: bool,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = DEFAULT_BOUNDS.max_n)]
    max_n: usize,
    #[arg(long, default_value_t = DEFAULT_BOUNDS.max_ab)]
    max_ab: usize,
}

const DEFAULT_BOUNDS: OracleBounds = OracleBounds {
    max_n: 5,
    max_ab: 3,
};

enum Failure {
    Domain(Error),
    Input(String),
    Io(io::Error),
    /// Self-test failure; the report has already been printed.
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn emit<T: Serialize>(out: &mut Out, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn warn_bound(flag: &str, value: usize, default: usize) {
    if value > default {
        eprintln!(
            "warning: {flag} {value} exceeds the default bound {default}; exhaustive enumeration may take a long time"
        );
    }
}

fn open(input: &Option<PathBuf>) -> Result<Box<dyn BufRead>, Failure> {
    match input {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

/// Applies `f` to each JSON value in the input, writing one result per line.
fn transform<I, O, F>(input: &Option<PathBuf>, out: &mut Out, mut f: F) -> Result<(), Failure>
where
    I: DeserializeOwned,
    O: Serialize,
    F: FnMut(I) -> Result<O, Error>,
{
    let reader = open(input)?;
    for value in serde_json::Deserializer::from_reader(reader).into_iter::<I>() {
        let value = value.map_err(|e| Failure::Input(e.to_string()))?;
        emit(out, &f(value)?)?;
    }
    Ok(())
}

fn print_count(
    out: &mut Out,
    count: BigCount,
    total: BigCount,
    probability: bool,
) -> Result<(), Failure> {
    if !probability {
        return Ok(writeln!(out, "{count}")?);
    }
    if total == BigCount::ZERO {
        return Err(Error::ProfileMismatch("no structures with these parameters".into()).into());
    }
    Ok(emit(
        out,
        &ProbabilityJson::from(&Probability::new(count, total)),
    )?)
}

fn size_partition(
    n: Option<usize>,
    k: Option<usize>,
    parts: Vec<usize>,
) -> Result<SizePartition, Error> {
    let lambda = SizePartition::new(parts)?;
    if n.is_some_and(|n| n != lambda.n()) || k.is_some_and(|k| k != lambda.k()) {
        return Err(Error::ProfileMismatch(format!(
            "λ = ({lambda}) does not match the given n and k"
        )));
    }
    Ok(lambda)
}

fn require(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Input(format!("{flag} is required unless --lambda is given")))
}

fn count(args: CountArgs, out: &mut Out) -> Result<(), Failure> {
    let (lambda, n, k) = match args.lambda {
        Some(parts) => {
            let lambda = size_partition(args.n, args.k, parts)?;
            let (n, k) = (lambda.n(), lambda.k());
            (Some(lambda), n, k)
        }
        None => (None, require(args.n, "--n")?, require(args.k, "--k")?),
    };
    if args.weighted {
        return Ok(writeln!(out, "{}", weighted_total(n, k))?);
    }
    let mu = args.mu.map(DegreeVector::new);
    let value = match (&lambda, &mu) {
        (Some(l), Some(m)) => count_hypertrees(l, m)?,
        (Some(l), None) => count_hypertrees_by_sizes(l),
        (None, Some(m)) => {
            m.check(n, k)?;
            stirling2(n, k) * multinomial(k.saturating_sub(1), m.as_slice())?
        }
        (None, None) => count_hypertrees_total(n, k),
    };
    print_count(out, value, count_hypertrees_total(n, k), args.probability)
}

fn check_len(v: &[usize], len: usize, name: &str) -> Result<(), Error> {
    if v.len() != len {
        return Err(Error::ProfileMismatch(format!(
            "{name} has {} entries, expected {len}",
            v.len()
        )));
    }
    Ok(())
}

fn bipartite_count(args: BipCountArgs, out: &mut Out) -> Result<(), Failure> {
    let (a, b) = (args.a, args.b);
    if let Some(alpha) = &args.alpha {
        check_len(alpha, a + 1, "α")?;
    }
    if let Some(beta) = &args.beta {
        check_len(beta, b + 1, "β")?;
    }
    let value = match (&args.alpha, &args.beta) {
        (Some(alpha), Some(beta)) => count_bipartite(alpha, beta)?,
        (Some(alpha), None) => multinomial(b, alpha)? * pow(b + 1, a),
        (None, Some(beta)) => multinomial(a, beta)? * pow(a + 1, b),
        (None, None) => count_bipartite_total(a, b),
    };
    print_count(out, value, count_bipartite_total(a, b), args.probability)
}

fn sample(args: SampleArgs, out: &mut Out) -> Result<(), Failure> {
    let mut rng = seeded(args.seed);
    let mu = args.mu.map(DegreeVector::new);
    if let Some(parts) = args.lambda {
        let lambda = size_partition(args.n, args.k, parts)?;
        for _ in 0..args.count {
            emit(
                out,
                &HypergraphJson::from(&sample_hypertree(&lambda, mu.as_ref(), &mut rng)?),
            )?;
        }
    } else {
        let sampler = HypertreeSampler::new(require(args.n, "--n")?, require(args.k, "--k")?, mu)?;
        for _ in 0..args.count {
            emit(out, &HypergraphJson::from(&sampler.sample(&mut rng)))?;
        }
    }
    Ok(())
}

fn bip_sample(args: BipSampleArgs, out: &mut Out) -> Result<(), Failure> {
    let mut rng = seeded(args.seed);
    for _ in 0..args.count {
        let t = sample_bipartite_tree(
            args.a,
            args.b,
            args.alpha.as_deref(),
            args.beta.as_deref(),
            &mut rng,
        )?;
        emit(out, &BipartiteTreeJson::from(&t))?;
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs, out: &mut Out) -> Result<(), Failure> {
    warn_bound("--max-n", args.max_n, DEFAULT_BOUNDS.max_n);
    let bounds = OracleBounds {
        max_n: args.max_n,
        ..DEFAULT_BOUNDS
    };
    if args.census {
        emit(
            out,
            &report_to_json(&profile_census_bounded(args.n, args.k, bounds)?),
        )?;
    } else {
        for t in enumerate_hypertrees_bounded(args.n, args.k, bounds)? {
            emit(out, &HypergraphJson::from(&t))?;
        }
    }
    Ok(())
}

fn bip_enumerate(args: BipEnumerateArgs, out: &mut Out) -> Result<(), Failure> {
    warn_bound("--max-ab", args.max_ab, DEFAULT_BOUNDS.max_ab);
    let bounds = OracleBounds {
        max_ab: args.max_ab,
        ..DEFAULT_BOUNDS
    };
    if args.census {
        emit(
            out,
            &report_to_json(&bipartite_census_bounded(args.a, args.b, bounds)?),
        )?;
    } else {
        for t in enumerate_bipartite_trees_bounded(args.a, args.b, bounds)? {
            emit(out, &BipartiteTreeJson::from(&t))?;
        }
    }
    Ok(())
}

fn run_selftest(args: SelftestArgs, out: &mut Out) -> Result<(), Failure> {
    warn_bound("--max-n", args.max_n, DEFAULT_BOUNDS.max_n);
    warn_bound("--max-ab", args.max_ab, DEFAULT_BOUNDS.max_ab);
    let config = SelftestConfig {
        max_n: args.max_n,
        max_ab: args.max_ab,
        ..SelftestConfig::default()
    };
    let report = selftest::run(&config);
    emit(out, &report.to_json())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Selftest)
    }
}

fn run(command: Command, out: &mut Out) -> Result<(), Failure> {
    match command {
        Command::Count(args) => count(args, out),
        Command::BipartiteCount(args) => bipartite_count(args, out),
        Command::Encode(args) => transform(&args.input, out, |g: HypergraphJson| {
            Ok(HypertreeCodeJson::from(&encode(&g.to_hypertree()?)?))
        }),
        Command::Decode(args) => transform(&args.input, out, |c: HypertreeCodeJson| {
            Ok(HypergraphJson::from(&decode(&c.to_code()?)?))
        }),
        Command::BipEncode(args) => transform(&args.input, out, |t: BipartiteTreeJson| {
            Ok(BipartiteCodeJson::from(&encode_bipartite(&t.to_tree()?)))
        }),
        Command::BipDecode(args) => transform(&args.input, out, |c: BipartiteCodeJson| {
            Ok(BipartiteTreeJson::from(&decode_bipartite(&c.to_code()?)?))
        }),
        Command::Sample(args) => sample(args, out),
        Command::BipSample(args) => bip_sample(args, out),
        Command::Enumerate(args) => enumerate(args, out),
        Command::BipEnumerate(args) => bip_enumerate(args, out),
        Command::Selftest(args) => run_selftest(args, out),
        Command::Identity { n } => {
            let (lhs, rhs) = split_identity_check(n as usize);
            Ok(emit(
                out,
                &json!({"n": n, "lhs": lhs.to_string(), "rhs": rhs.to_string(), "equal": lhs == rhs}),
            )?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    let result = result.and(flushed.map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("{}: {e}", e.class());
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("Malformed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("Io: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Selftest) => ExitCode::from(3),
    }
}
