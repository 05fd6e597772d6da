//! `nearrect`: Kronecker coefficients, tableau counts and verification
//! sweeps from the command line.
//!
//! Exit codes: 0 success, 1 failed verification, 2 bad arguments,
//! 3 no closed form for the request, 4 closed form and oracle disagree.

mod output;

use std::fmt;
use std::io;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nearrect::enumeration::{self, Method, SigmaMethod};
use nearrect::sweep::{self, Suite};
use nearrect::{Error, Oracle, Partition, ProductFamily, SchurExpansion};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use output::{partition_json, Format, Payload, Record};

#[derive(Parser)]
#[command(
    name = "nearrect",
    version,
    about = "Kronecker coefficients of near-rectangular Schur products"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Leave elapsed time out of the output.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient g(mu, nu, theta), or the whole product s_mu * s_nu.
    Kron(KronArgs),
    /// Standard Young tableaux counts.
    Count(CountArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Statistics of a partition.
    Stats {
        /// Partition literal such as 8,6,2,1.
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
}

#[derive(Args)]
struct KronArgs {
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    /// Report a single coefficient instead of the whole product.
    #[arg(long, value_parser = parse_partition)]
    theta: Option<Partition>,
    /// `auto` uses the closed form when the pair is a known family, the oracle otherwise.
    #[arg(long, value_enum, default_value_t = KronMethod::Auto)]
    method: KronMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KronMethod {
    Auto,
    Closed,
    Oracle,
    Both,
}

#[derive(Args)]
struct CountArgs {
    #[arg(value_enum)]
    kind: CountKind,
    /// Height bound (tau, sigma), rows minus one (rho), or the size (lsum).
    #[arg(short)]
    k: Option<usize>,
    /// Length of the last row (rho).
    #[arg(short)]
    i: Option<usize>,
    /// Size of the tableaux (tau, sigma, rho).
    #[arg(short)]
    n: Option<usize>,
    /// Tabulate over a..b (both ends included) instead of a single size.
    #[arg(long)]
    range: Option<SizeRange>,
    #[arg(long, value_enum, default_value_t = CountMethod::Auto)]
    method: CountMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    /// SYT of size n with at most k rows.
    Tau,
    /// The same, each shape weighted by its number of distinct parts.
    Sigma,
    /// SYT of size n with exactly k+1 rows and last row i.
    Rho,
    /// SYT of size k with exactly five rows and last row 1.
    Lsum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Auto,
    Brute,
    Closed,
    TauDifference,
}

#[derive(Debug, Clone, Copy)]
struct SizeRange {
    start: usize,
    end: usize,
}

impl FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or("expected a..b")?;
        let start = a
            .trim()
            .parse()
            .map_err(|_| format!("bad range start {a:?}"))?;
        let end = b
            .trim()
            .parse()
            .map_err(|_| format!("bad range end {b:?}"))?;
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(SizeRange { start, end })
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

enum Failure {
    Verification(String),
    Usage(String),
    Unavailable(String),
    Disagreement(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Unavailable(_) => 3,
            Failure::Disagreement(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verification(m)
            | Failure::Usage(m)
            | Failure::Unavailable(m)
            | Failure::Disagreement(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ClosedFormUnavailable(_) => Failure::Unavailable(e.to_string()),
            Error::InternalNonInteger(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(Record, Option<Failure>), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Kron(args) => kron(args),
        Command::Count(args) => count(args),
        Command::Verify(args) => verify(args),
        Command::Stats { lambda } => Ok((stats(&lambda), None)),
    };
    let (mut record, late) = match outcome {
        Ok(done) => done,
        Err(f) => {
            eprintln!("error: {f}");
            return ExitCode::from(f.code());
        }
    };
    let elapsed = start.elapsed();
    if !cli.no_timing {
        record
            .meta
            .insert("elapsed_us".into(), json!(elapsed.as_micros() as u64));
        if cli.format != Format::Json {
            eprintln!("elapsed: {:.3} ms", elapsed.as_secs_f64() * 1e3);
        }
    }
    let mut stdout = io::stdout().lock();
    if let Err(e) = record.write(cli.format, &mut stdout) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match late {
        Some(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
        None => ExitCode::SUCCESS,
    }
}

fn terms(e: &SchurExpansion) -> Vec<(Partition, BigInt)> {
    e.terms().map(|(p, c)| (p.clone(), c.clone())).collect()
}

fn oracle_for(degree: usize) -> Result<Oracle, Failure> {
    let oracle = Oracle::from_env()?;
    if degree > oracle.max_degree() {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: oracle.max_degree(),
        }
        .into());
    }
    Ok(oracle)
}

fn kron(args: KronArgs) -> Outcome {
    let KronArgs {
        mu,
        nu,
        theta,
        method,
    } = args;
    if mu.size() != nu.size() {
        return Err(Failure::Usage(format!(
            "size mismatch: |{mu}| = {} but |{nu}| = {}",
            mu.size(),
            nu.size()
        )));
    }
    if let Some(t) = &theta {
        if t.size() != mu.size() {
            return Err(Failure::Usage(format!(
                "size mismatch: |{t}| = {} but the product has degree {}",
                t.size(),
                mu.size()
            )));
        }
    }
    let family = ProductFamily::detect(&mu, &nu);
    let requested = method;
    let method = match method {
        KronMethod::Auto if family.is_some() => KronMethod::Closed,
        KronMethod::Auto => KronMethod::Oracle,
        m => m,
    };
    let need_closed =
        || family.ok_or_else(|| Failure::Unavailable(format!("no closed form for s{mu} * s{nu}")));

    let result = match (method, &theta) {
        (KronMethod::Closed, Some(t)) => Payload::Integer(need_closed()?.coefficient(t)?),
        (KronMethod::Closed, None) => Payload::Expansion(terms(&need_closed()?.expand())),
        (KronMethod::Oracle, Some(t)) => {
            Payload::Integer(oracle_for(mu.size())?.kron_coefficient(&mu, &nu, t)?)
        }
        (KronMethod::Oracle, None) => {
            Payload::Expansion(terms(&oracle_for(mu.size())?.kron_product(&mu, &nu)?))
        }
        (KronMethod::Both, _) => {
            let fam = need_closed()?;
            let oracle = oracle_for(mu.size())?;
            match &theta {
                Some(t) => {
                    let closed = fam.coefficient(t)?;
                    let brute = oracle.kron_coefficient(&mu, &nu, t)?;
                    if closed != brute {
                        return Err(Failure::Disagreement(format!(
                            "closed form gives {closed}, oracle gives {brute}"
                        )));
                    }
                    Payload::Integer(closed)
                }
                None => {
                    let closed = fam.expand();
                    let brute = oracle.kron_product(&mu, &nu)?;
                    if closed != brute {
                        let mut diff = closed.clone();
                        diff.sub(&brute);
                        return Err(Failure::Disagreement(format!(
                            "closed form minus oracle is {diff}"
                        )));
                    }
                    Payload::Expansion(terms(&closed))
                }
            }
        }
        (KronMethod::Auto, _) => unreachable!("auto is resolved above"),
    };

    let mut echo = Map::new();
    echo.insert("mu".into(), partition_json(&mu));
    echo.insert("nu".into(), partition_json(&nu));
    echo.insert(
        "theta".into(),
        theta.as_ref().map_or(Value::Null, partition_json),
    );
    echo.insert("method".into(), json!(method_label(requested)));
    let mut meta = Map::new();
    meta.insert("engine".into(), json!(method_label(method)));
    meta.insert("degree".into(), json!(mu.size()));
    meta.insert(
        "family".into(),
        family.map_or(Value::Null, |f| json!({ "kind": f.kind.slug(), "n": f.n })),
    );
    Ok((
        Record {
            command: "kron",
            args: echo,
            result,
            meta,
        },
        None,
    ))
}

fn method_label(m: KronMethod) -> &'static str {
    match m {
        KronMethod::Auto => "auto",
        KronMethod::Closed => "closed",
        KronMethod::Oracle => "oracle",
        KronMethod::Both => "both",
    }
}

fn require(v: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("count {kind} needs -{flag}")))
}

type Counter = Box<dyn Fn(usize) -> nearrect::Result<BigInt>>;

fn count(args: CountArgs) -> Outcome {
    let kind_name = format!("{:?}", args.kind).to_lowercase();
    let use_n = args.kind != CountKind::Lsum;
    let (label, sizes): (&'static str, Vec<usize>) = match (args.range, use_n) {
        (Some(r), true) => ("n", (r.start..=r.end).collect()),
        (Some(r), false) => ("k", (r.start..=r.end).collect()),
        (None, true) => ("n", vec![require(args.n, "n", &kind_name)?]),
        (None, false) => ("k", vec![require(args.k, "k", &kind_name)?]),
    };
    if !use_n && args.n.is_some() {
        return Err(Failure::Usage("count lsum takes its size from -k".into()));
    }

    let (method, eval): (&'static str, Counter) = match args.kind {
        CountKind::Tau => {
            let k = require(args.k, "k", &kind_name)?;
            let m = match args.method {
                CountMethod::Auto if (2..=5).contains(&k) => Method::Closed,
                CountMethod::Auto | CountMethod::Brute => Method::Brute,
                CountMethod::Closed => Method::Closed,
                CountMethod::TauDifference => {
                    return Err(Failure::Usage(
                        "tau-difference applies to sigma only".into(),
                    ))
                }
            };
            (method_name(m), Box::new(move |n| enumeration::tau(k, n, m)))
        }
        CountKind::Sigma => {
            let k = require(args.k, "k", &kind_name)?;
            let (name, m) = match args.method {
                CountMethod::Auto if k == 4 => ("closed", SigmaMethod::Closed),
                CountMethod::Auto | CountMethod::Brute => ("brute", SigmaMethod::Brute),
                CountMethod::Closed => ("closed", SigmaMethod::Closed),
                CountMethod::TauDifference => ("tau-difference", SigmaMethod::TauDifference),
            };
            (name, Box::new(move |n| enumeration::sigma(k, n, m)))
        }
        CountKind::Rho => {
            let k = require(args.k, "k", &kind_name)?;
            let i = require(args.i, "i", &kind_name)?;
            match args.method {
                CountMethod::Auto | CountMethod::Brute => {}
                CountMethod::Closed => {
                    return Err(Failure::Unavailable("no closed form for rho".into()))
                }
                CountMethod::TauDifference => {
                    return Err(Failure::Usage(
                        "tau-difference applies to sigma only".into(),
                    ))
                }
            }
            ("brute", Box::new(move |n| Ok(enumeration::rho(k, i, n))))
        }
        CountKind::Lsum => {
            let m = match args.method {
                CountMethod::Auto | CountMethod::Closed => Method::Closed,
                CountMethod::Brute => Method::Brute,
                CountMethod::TauDifference => {
                    return Err(Failure::Usage(
                        "tau-difference applies to sigma only".into(),
                    ))
                }
            };
            (
                method_name(m),
                Box::new(move |k| enumeration::height5_smallpart1_sum(k, m)),
            )
        }
    };

    let mut rows = Vec::with_capacity(sizes.len());
    for &s in &sizes {
        rows.push((s, eval(s)?));
    }
    let result = match (args.range, rows.pop()) {
        (None, Some((_, v))) => Payload::Integer(v),
        (_, last) => {
            rows.extend(last);
            Payload::Table {
                columns: [label, "value"],
                rows,
            }
        }
    };

    let mut echo = Map::new();
    echo.insert("kind".into(), json!(kind_name));
    if args.kind != CountKind::Lsum {
        echo.insert("k".into(), json!(args.k));
    }
    if args.kind == CountKind::Rho {
        echo.insert("i".into(), json!(args.i));
    }
    match args.range {
        Some(r) => {
            echo.insert("range".into(), json!([r.start, r.end]));
        }
        None => {
            echo.insert(label.into(), json!(sizes[0]));
        }
    }
    let mut meta = Map::new();
    meta.insert("method".into(), json!(method));
    Ok((
        Record {
            command: "count",
            args: echo,
            result,
            meta,
        },
        None,
    ))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Closed => "closed",
    }
}

fn verify(args: VerifyArgs) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    let oracle = Oracle::from_env()?;
    let checks = sweep::run(suite, args.n_max, &oracle)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let total = checks.len();
    let mut echo = Map::new();
    echo.insert("suite".into(), json!(args.suite));
    echo.insert("n_max".into(), json!(args.n_max));
    let mut meta = Map::new();
    meta.insert("passed".into(), json!(total - failed));
    meta.insert("failed".into(), json!(failed));
    let late =
        (failed > 0).then(|| Failure::Verification(format!("{failed} of {total} checks failed")));
    Ok((
        Record {
            command: "verify",
            args: echo,
            result: Payload::Checks(checks),
            meta,
        },
        late,
    ))
}

fn stats(lambda: &Partition) -> Record {
    let s = lambda.stats();
    let fields = vec![
        ("partition", json!(lambda.to_string())),
        ("size", json!(lambda.size())),
        ("length", json!(lambda.len())),
        ("distinct", json!(s.distinct)),
        ("two_removable", json!(s.two_removable)),
        ("repeated", json!(s.repeated)),
        ("odd_parts", json!(s.odd_parts)),
        ("even_parts", json!(s.even_parts)),
        ("distinct_odd_parts", json!(s.distinct_odd_parts)),
        ("distinct_even_parts", json!(s.distinct_even_parts)),
        ("sigma", json!(s.sigma_string())),
        ("a1", json!(s.a1)),
        ("a2", json!(s.a2)),
        ("b1", json!(s.b1)),
        ("b2", json!(s.b2)),
        ("in_p", json!(lambda.in_p())),
        ("in_q", json!(lambda.in_q())),
        ("syt_count", json!(lambda.syt_count().to_string())),
    ];
    let mut echo = Map::new();
    echo.insert("lambda".into(), partition_json(lambda));
    Record {
        command: "stats",
        args: echo,
        result: Payload::Fields(fields),
        meta: Map::new(),
    }
}
