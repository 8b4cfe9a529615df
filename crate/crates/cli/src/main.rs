//! Command-line front end: single Mobius queries, interval export,
//! exhaustive/random cross-checking, screening diagnostics, and the scaling
//! benchmark.
//!
//! Exit codes: 0 success, 1 mismatch or failed assertion, 2 parse error,
//! 3 size guard exceeded, 4 non-containment where containment is required.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use consec::bench::{run_bench, BenchConfig};
use consec::crosscheck::{exhaustive_check, random_check, CheckOutcome};
use consec::{
    mobius_fast, mobius_oracle, screen, socle_chain, Error, Interval, Permutation,
    DEFAULT_ORACLE_BOUND,
};

#[derive(Parser)]
#[command(name = "consec", version, about = "Mobius function of consecutive pattern intervals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute mu(sigma, tau) with the fast algorithm
    Mu {
        sigma: String,
        tau: String,
        /// Also run the brute-force oracle and report agreement
        #[arg(long)]
        oracle: bool,
        /// Print the dispatch case and carrier/socle chains
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = MuFormat::Plain)]
        format: MuFormat,
    },
    /// Build the interval [sigma, tau] and export its Hasse diagram
    Interval {
        sigma: String,
        tau: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Cross-validate the fast algorithm against both oracle directions
    Crosscheck {
        /// Largest |tau| to sweep or sample
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
        /// Switch to random mode with this many seeded pairs
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scan every carrier candidate and assert at most one acceptance
        #[arg(long)]
        verify_uniqueness: bool,
    },
    /// Evaluate the necessary-condition screens for a pair
    Screen { sigma: String, tau: String },
    /// Time the fast algorithm on worst-case instances of growing size
    Bench {
        /// Comma-separated instance sizes, e.g. 250,500,1000,2000
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Length of the planted pattern
        #[arg(long = "sigma-len", default_value_t = 5)]
        sigma_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MuFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

/// A failure that should terminate the process with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Mu {
            sigma,
            tau,
            oracle,
            trace,
            format,
        } => run_mu(&sigma, &tau, oracle, trace, format),
        Command::Interval { sigma, tau, format } => run_interval(&sigma, &tau, format),
        Command::Crosscheck {
            max_n,
            samples,
            seed,
            verify_uniqueness,
        } => run_crosscheck(max_n, samples, seed, verify_uniqueness),
        Command::Screen { sigma, tau } => run_screen(&sigma, &tau),
        Command::Bench {
            sizes,
            seed,
            sigma_len,
        } => run_bench_cmd(sizes, seed, sigma_len),
    }
}

fn parse_perm(text: &str, name: &str) -> Result<Permutation, Failure> {
    Permutation::from_str(text)
        .map_err(|e| Failure::new(2, format!("cannot parse {name} {text:?}: {e}")))
}

fn run_mu(
    sigma: &str,
    tau: &str,
    with_oracle: bool,
    trace: bool,
    format: MuFormat,
) -> Result<(), Failure> {
    let sigma = parse_perm(sigma, "sigma")?;
    let tau = parse_perm(tau, "tau")?;
    let result = mobius_fast(&sigma, &tau);

    let oracle_value = if with_oracle {
        match mobius_oracle(&sigma, &tau) {
            Ok(v) => Some(v),
            Err(e @ Error::OracleTooLarge { .. }) => {
                return Err(Failure::new(3, e.to_string()));
            }
            Err(e) => return Err(Failure::new(1, e.to_string())),
        }
    } else {
        None
    };

    match format {
        MuFormat::Plain => {
            match oracle_value {
                None => println!("{}", result.value),
                Some(oracle) => {
                    println!("fast: {}", result.value);
                    println!("oracle: {oracle}");
                    println!("match: {}", result.value == oracle);
                }
            }
            if trace {
                println!("case: {}", result.case);
                println!("carrier chain: {}", join_or_none(&result.carrier_chain));
                println!(
                    "socle chain: {}",
                    join_or_none(&socle_chain(&sigma, &tau))
                );
            }
        }
        MuFormat::Json => {
            let mut record = serde_json::to_value(result.to_record())
                .expect("record serializes");
            if let Some(oracle) = oracle_value {
                let object = record.as_object_mut().expect("record is an object");
                object.insert("oracle".into(), json!(oracle));
                object.insert("match".into(), json!(oracle == result.value));
            }
            println!("{}", serde_json::to_string_pretty(&record).expect("json"));
        }
    }

    if let Some(oracle) = oracle_value {
        if oracle != result.value {
            return Err(Failure::new(
                1,
                format!(
                    "fast/oracle mismatch for ({sigma}, {tau}): fast={} oracle={oracle}",
                    result.value
                ),
            ));
        }
    }
    Ok(())
}

fn join_or_none(perms: &[Permutation]) -> String {
    if perms.is_empty() {
        "(none)".into()
    } else {
        perms
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

fn run_interval(sigma: &str, tau: &str, format: GraphFormat) -> Result<(), Failure> {
    let sigma = parse_perm(sigma, "sigma")?;
    let tau = parse_perm(tau, "tau")?;
    if tau.len() > DEFAULT_ORACLE_BOUND {
        return Err(Failure::new(
            3,
            format!("|tau| = {} exceeds the interval bound {DEFAULT_ORACLE_BOUND}", tau.len()),
        ));
    }
    let interval = match Interval::build(&sigma, &tau) {
        Ok(iv) => iv,
        Err(e @ Error::NotContained { .. }) => return Err(Failure::new(4, e.to_string())),
        Err(e) => return Err(Failure::new(1, e.to_string())),
    };
    let diagram = interval.hasse();
    match format {
        GraphFormat::Dot => print!("{}", diagram.to_dot()),
        GraphFormat::Json => println!("{}", diagram.to_json()),
    }
    Ok(())
}

fn run_crosscheck(
    max_n: usize,
    samples: Option<u64>,
    seed: u64,
    verify_uniqueness: bool,
) -> Result<(), Failure> {
    let outcome: CheckOutcome = match samples {
        None => {
            if max_n > DEFAULT_ORACLE_BOUND {
                return Err(Failure::new(
                    3,
                    format!("exhaustive mode is limited to max-n <= {DEFAULT_ORACLE_BOUND}"),
                ));
            }
            println!("mode: exhaustive up to n = {max_n}");
            exhaustive_check(max_n, DEFAULT_ORACLE_BOUND, verify_uniqueness)
        }
        Some(samples) => {
            println!("mode: random, {samples} samples up to n = {max_n}, seed {seed}");
            if max_n > DEFAULT_ORACLE_BOUND {
                println!("oracle compared only on |tau| <= {DEFAULT_ORACLE_BOUND}");
            }
            random_check(samples, max_n, seed, DEFAULT_ORACLE_BOUND, verify_uniqueness)
        }
    };
    println!("pairs checked: {}", outcome.pairs);
    println!(
        "mu distribution: -1 x {}, 0 x {}, +1 x {}",
        outcome.counts.minus_one, outcome.counts.zero, outcome.counts.plus_one
    );
    match outcome.failure {
        None => {
            println!("0 mismatches");
            Ok(())
        }
        Some(failure) => Err(Failure::new(
            1,
            format!(
                "mismatch at sigma={} tau={}: {}",
                failure.sigma, failure.tau, failure.reason
            ),
        )),
    }
}

fn run_screen(sigma: &str, tau: &str) -> Result<(), Failure> {
    let sigma = parse_perm(sigma, "sigma")?;
    let tau = parse_perm(tau, "tau")?;
    let report = match screen(&sigma, &tau) {
        Ok(report) => report,
        Err(e @ Error::NotContained { .. }) => return Err(Failure::new(4, e.to_string())),
        Err(e) => return Err(Failure::new(1, e.to_string())),
    };
    println!("tail sum: {}", report.tail_sum);
    match report.excluded_value {
        Some(v) => println!("excluded value: {v}"),
        None => println!("excluded value: none"),
    }
    println!("forces zero: {}", report.forces_zero);
    if let Some(w) = &report.omega {
        println!("omega: {w}");
    }
    if let Some(a) = &report.alpha {
        println!("alpha: {a}");
    }
    if let Some(b) = &report.beta {
        println!("beta: {b}");
    }
    Ok(())
}

fn run_bench_cmd(sizes: Vec<usize>, seed: u64, sigma_len: usize) -> Result<(), Failure> {
    if sizes.is_empty() {
        return Err(Failure::new(2, "at least one size is required"));
    }
    if sigma_len < 3 {
        return Err(Failure::new(2, "sigma-len must be at least 3"));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n < sigma_len + 3) {
        return Err(Failure::new(
            2,
            format!("size {n} is too small for sigma-len {sigma_len} (need rank >= 3)"),
        ));
    }
    let report = run_bench(&BenchConfig {
        sizes,
        seed,
        sigma_len,
    });
    println!("{:>8}  {:>12}  {:>14}  {:>5}  {:>6}", "n", "time", "case", "mu", "iters");
    for row in &report.rows {
        println!(
            "{:>8}  {:>9.3} ms  {:>14}  {:>5}  {:>6}",
            row.n,
            row.seconds * 1e3,
            row.case.to_string(),
            row.value,
            row.iterations
        );
    }
    match report.slope {
        Some(slope) => println!("fitted log-log slope: {slope:.2}"),
        None => println!("fitted log-log slope: n/a (need at least two sizes)"),
    }
    Ok(())
}
