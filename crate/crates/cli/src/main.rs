//! `brunnian`: rank tables, generator listings and degreewise verification
//! for the Lie algebra of the pure braid group.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or resource error.

mod output;
mod selftest;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use brunnian_core::generators::{kset, lemma4_generators, prop5_generators, prop6_generators};
use brunnian_core::kohno::layer_alphabet;
use brunnian_core::rank::rank_table;
use brunnian_core::verify::{
    check_bidelta, check_decomposition, check_kernel, check_prop3_prop5_prop6, check_symmetric_sum, check_theorem8,
    CheckReport,
};
use brunnian_core::{Error, LieMonomial};

use output::Format;

/// Largest `n` and degree run without `--force`.
const MAX_N: usize = 5;
const MAX_Q: usize = 6;

#[derive(Parser)]
#[command(
    name = "brunnian",
    version,
    about = "Exact computations with the Brunnian Lie ideal of the pure braid group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ranks of L_q(P_n) and of the Brunnian ideal, degree by degree.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long = "qmax", default_value_t = 6)]
        q_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// List generating monomials in canonical order, one per line.
    Generators {
        #[arg(long)]
        n: usize,
        #[arg(long = "degmax")]
        deg_max: usize,
        /// Level k of K(n)_k, or the second strand for prop5/prop6.
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, value_enum, default_value_t = Family::Kset)]
        family: Family,
        /// Strands i of the letters A[i,n] in X (lemma4 only).
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        /// Strands i of the letters A[i,n] in Y (lemma4 only).
        #[arg(long, value_delimiter = ',')]
        y: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// Run degreewise checks; exits 1 if any fails.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "qmax", default_value_t = 4)]
        q_max: usize,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<String>,
        /// Allow n > 5 or qmax > 6.
        #[arg(long)]
        force: bool,
    },
    /// Randomized algebra-law checks with a fixed seed.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kset,
    Prop5,
    Prop6,
    Lemma4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    All,
    Kernel,
    Theorem8,
    Symmetric,
    Decomposition,
    Bidelta,
    Props,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn require_n(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(usage(format!("--n must be at least 2 (got {n})")));
    }
    Ok(())
}

fn require_degree(name: &str, q: usize) -> Result<(), Failure> {
    if q < 1 {
        return Err(usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn cmd_rank(n: usize, q_max: usize, format: Format, out: Option<String>) -> Result<(), Failure> {
    require_n(n)?;
    require_degree("qmax", q_max)?;
    let table = rank_table(n, q_max)?;
    let text = match format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv(),
        Format::Json => output::json_line(&table.to_json()),
        Format::Latex => table.to_latex(),
    };
    output::emit(&text, out.as_deref())
}

#[allow(clippy::too_many_arguments)]
fn cmd_generators(
    n: usize,
    deg_max: usize,
    level: usize,
    family: Family,
    x: &[usize],
    y: &[usize],
    format: Format,
    out: Option<String>,
) -> Result<(), Failure> {
    require_n(n)?;
    require_degree("degmax", deg_max)?;
    let letters = |strands: &[usize]| -> Result<Vec<u8>, Failure> {
        strands
            .iter()
            .map(|&i| {
                if i >= 1 && i < n {
                    Ok((i - 1) as u8)
                } else {
                    Err(usage(format!("strand {i} is not in 1..{}", n - 1)))
                }
            })
            .collect()
    };
    let monomials: Vec<LieMonomial> = match family {
        Family::Kset => {
            if level < 1 || level > n {
                return Err(usage(format!("--level must be in 1..={n}")));
            }
            kset(n, level, deg_max)?.monomials
        }
        Family::Prop5 | Family::Prop6 => {
            if level < 1 || level >= n {
                return Err(usage(format!("--level must be in 1..={}", n - 1)));
            }
            if matches!(family, Family::Prop5) {
                prop5_generators(n, level, deg_max)?
            } else {
                prop6_generators(n, level, deg_max)?
            }
        }
        Family::Lemma4 => {
            if x.is_empty() {
                return Err(usage("lemma4 needs --x"));
            }
            lemma4_generators(&letters(x)?, &letters(y)?, deg_max)?
        }
    };
    let text = output::generators(&monomials, &layer_alphabet(n), format);
    output::emit(&text, out.as_deref())
}

/// Independent checks in a fixed order; run in parallel, reported in order.
fn planned_checks(
    n: usize,
    q_max: usize,
    check: Check,
) -> Vec<Box<dyn Fn() -> brunnian_core::Result<CheckReport> + Send + Sync>> {
    let wants = |c: Check| check == Check::All || check == c;
    let mut jobs: Vec<Box<dyn Fn() -> brunnian_core::Result<CheckReport> + Send + Sync>> = Vec::new();
    if wants(Check::Kernel) {
        jobs.push(Box::new(move || check_kernel(n, q_max)));
    }
    if wants(Check::Theorem8) {
        jobs.push(Box::new(move || check_theorem8(n, q_max)));
    }
    if wants(Check::Symmetric) {
        jobs.push(Box::new(move || check_symmetric_sum(n, q_max)));
    }
    if wants(Check::Props) {
        for k in 1..n {
            jobs.push(Box::new(move || check_prop3_prop5_prop6(n, k, q_max)));
        }
    }
    if wants(Check::Decomposition) {
        for q in 1..=q_max {
            jobs.push(Box::new(move || check_decomposition(n, q)));
        }
    }
    if wants(Check::Bidelta) {
        for q in 1..=q_max {
            jobs.push(Box::new(move || check_bidelta(n, q)));
        }
    }
    jobs
}

fn cmd_verify(
    n: usize,
    q_max: usize,
    check: Check,
    format: Format,
    out: Option<String>,
    force: bool,
) -> Result<(), Failure> {
    require_n(n)?;
    require_degree("qmax", q_max)?;
    if !force && (n > MAX_N || q_max > MAX_Q) {
        return Err(usage(format!(
            "n = {n}, qmax = {q_max} is beyond the default limits n <= {MAX_N}, qmax <= {MAX_Q}; pass --force to run anyway"
        )));
    }
    let jobs = planned_checks(n, q_max, check);
    let reports: Vec<CheckReport> = jobs.par_iter().map(|job| job()).collect::<brunnian_core::Result<_>>()?;
    let text = output::reports(&reports, format);
    output::emit(&text, out.as_deref())?;
    if reports.iter().all(CheckReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("BRUNNIAN_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| usage(format!("BRUNNIAN_THREADS must be a positive integer (got {value:?})")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Rank {
            n,
            q_max,
            format,
            output,
        } => cmd_rank(n, q_max, format, output),
        Command::Generators {
            n,
            deg_max,
            level,
            family,
            x,
            y,
            format,
            output,
        } => cmd_generators(n, deg_max, level, family, &x, &y, format, output),
        Command::Verify {
            n,
            q_max,
            check,
            format,
            output,
            force,
        } => cmd_verify(n, q_max, check, format, output, force),
        Command::Selftest { seed, cases } => {
            let summary = selftest::run(seed, cases).map_err(|e| {
                eprintln!("{e}");
                Failure::Verification
            })?;
            println!("{summary}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
