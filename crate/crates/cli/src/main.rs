//! `gfrob`: representation counts, generalized Frobenius numbers, the
//! triangular-number closed forms and their verification suites.
//!
//! Exit codes: 0 on success (and on all-pass verification), 1 when a
//! verification suite finds a mismatch, 2 on usage or precondition
//! errors. All numeric output is exact decimal.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gfrob::arith::isqrt_u128;
use gfrob::{
    beck_kifer_g, closed_params, count_representations_with_cap, g_difference_closed,
    g_reduced_closed, g_search, g_triangular_closed, g_two_var, in_b, n_bound, run_suites,
    run_suites_with_jobs, triangular_u64_checked, verify, xy_pair, BoundMode, GridSpec, Method,
    Parity, Suite, Tuple, DEFAULT_TABLE_CAP,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(
    name = "gfrob",
    version,
    about = "Representation counts and generalized Frobenius numbers",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the representations d(n; A) of n by the tuple A.
    Count {
        /// The integer to represent.
        #[arg(long)]
        n: u64,
        /// Comma-separated positive integers with gcd 1, e.g. 7,11.
        #[arg(long)]
        tuple: Tuple,
        /// Cap on count-table entries (FROB_CAP overrides the default).
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// The generalized Frobenius number g(A; s).
    G {
        #[arg(long)]
        tuple: Tuple,
        /// Representation level: the result is the largest integer with
        /// at most s representations.
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Cap on count-table entries (FROB_CAP overrides the default).
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// Closed form for three consecutive triangular numbers
    /// g(t_n, t_{n+1}, t_{n+2}; s), with its parameters.
    Tri {
        /// Triangular index: the tuple is (t_n, t_{n+1}, t_{n+2}).
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        /// strict requires n > N; relaxed admits n = N where proven
        /// (refused when s is a square or pronic number).
        #[arg(long, value_enum, default_value_t = BoundModeArg::Strict)]
        bound_mode: BoundModeArg,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// The jump g(t_n, ...; s+1) - g(t_n, ...; s) and which case fired.
    Diff {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
    /// Emit the parameter tables.
    Tables {
        #[arg(long, value_enum)]
        which: TableKind,
        /// Largest s column (defaults: 20 for qcdelta, 19 for xy).
        #[arg(long)]
        s_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run verification suites against the brute-force oracle.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 10)]
        s_max: u64,
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        /// Worker threads for the grid evaluation.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, value_enum, default_value_t = BoundModeArg::Strict)]
        bound_mode: BoundModeArg,
        #[arg(long, value_enum, default_value_t = ValueFormat::Text)]
        format: ValueFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundModeArg {
    Strict,
    Relaxed,
}

impl From<BoundModeArg> for BoundMode {
    fn from(mode: BoundModeArg) -> Self {
        match mode {
            BoundModeArg::Strict => BoundMode::Strict,
            BoundModeArg::Relaxed => BoundMode::Relaxed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Qcdelta,
    Xy,
    Bounds,
    BoundsShifted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Main,
    Reduced,
    Diff,
    Tables,
    Corollary,
    Remark,
    TwoVar,
    BeckKifer,
    All,
}

// JSON outputs keep their fields in alphabetical order so that emitted
// bytes survive a parse-and-re-emit round trip through key-sorting
// parsers.

#[derive(Serialize, Deserialize)]
struct CountOutput {
    n: u64,
    tuple: Vec<u64>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct GOutput {
    method: Method,
    s: u64,
    tuple: Vec<u64>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct TriOutput {
    bound: i64,
    bound_mode: BoundMode,
    c: u64,
    delta: u64,
    n: u64,
    parity: Parity,
    q: u64,
    s: u64,
    value: String,
    x: u64,
    y: u64,
}

#[derive(Serialize, Deserialize)]
struct DiffOutput {
    case: String,
    n: u64,
    s: u64,
    value: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// --cap beats FROB_CAP beats the built-in default.
fn effective_cap(flag: Option<u64>) -> anyhow::Result<u64> {
    let cap = match flag {
        Some(cap) => cap,
        None => match std::env::var("FROB_CAP") {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .with_context(|| format!("FROB_CAP must be a positive integer, got {raw:?}"))?,
            Err(_) => DEFAULT_TABLE_CAP,
        },
    };
    if cap == 0 {
        bail!("cap must be at least 1");
    }
    Ok(cap)
}

/// Recognizes (t_n, t_{n+1}, t_{n+2}) and returns n.
fn detect_triangular_triple(tuple: &Tuple) -> Option<u64> {
    let elements = tuple.elements();
    if elements.len() != 3 {
        return None;
    }
    let n = ((isqrt_u128(8 * u128::from(elements[0]) + 1) - 1) / 2) as u64;
    if n == 0 {
        return None;
    }
    for (offset, &element) in elements.iter().enumerate() {
        if triangular_u64_checked(n + offset as u64) != Some(element) {
            return None;
        }
    }
    Some(n)
}

/// Closed-form g for tuples that have one: the two-variable formula, or
/// the gcd reduction composed with the reduced-triple formula for
/// consecutive triangular triples.
fn closed_g(tuple: &Tuple, s: u64) -> anyhow::Result<(BigInt, Method)> {
    let elements = tuple.elements();
    if elements.len() == 2 {
        let value = g_two_var(elements[0], elements[1], s)?;
        return Ok((value, Method::ClosedTwoVar));
    }
    if let Some(n) = detect_triangular_triple(tuple) {
        let value = beck_kifer_g(tuple, s, |_, s| g_reduced_closed(n, s))?;
        return Ok((value, Method::BeckKifer));
    }
    Err(anyhow!(
        "no closed form for tuple {tuple}; use --method oracle"
    ))
}

fn print_value_output<T: Serialize>(format: ValueFormat, text: String, json: T) {
    match format {
        ValueFormat::Text => println!("{text}"),
        ValueFormat::Json => println!(
            "{}",
            serde_json::to_string(&json).expect("output serializes")
        ),
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Count {
            n,
            tuple,
            cap,
            format,
        } => {
            let cap = effective_cap(cap)?;
            let value = count_representations_with_cap(n, &tuple, cap)?;
            print_value_output(
                format,
                value.to_string(),
                CountOutput {
                    n,
                    tuple: tuple.elements().to_vec(),
                    value: value.to_string(),
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::G {
            tuple,
            s,
            method,
            cap,
            format,
        } => {
            let cap = effective_cap(cap)?;
            let (value, used) = match method {
                MethodArg::Oracle => (g_search(&tuple, s, cap)?.value, Method::OracleSearch),
                MethodArg::Closed => closed_g(&tuple, s)?,
                MethodArg::Auto => match closed_g(&tuple, s) {
                    Ok(result) => result,
                    Err(_) => (g_search(&tuple, s, cap)?.value, Method::OracleSearch),
                },
            };
            print_value_output(
                format,
                value.to_string(),
                GOutput {
                    method: used,
                    s,
                    tuple: tuple.elements().to_vec(),
                    value: value.to_string(),
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Tri {
            n,
            s,
            bound_mode,
            format,
        } => {
            if bound_mode == BoundModeArg::Relaxed && in_b(s) {
                bail!(
                    "relaxed bound mode refused: s = {s} is a square or pronic number, \
                     the boundary n = N is unproven there"
                );
            }
            let mode = BoundMode::from(bound_mode);
            let value = g_triangular_closed(n, s, mode)?;
            let params = closed_params(s);
            let parity = Parity::of(n);
            let pair = xy_pair(s, parity);
            let bound = n_bound(s, parity);
            let text = format!(
                "{value}\nq = {}, c = {}, delta = {}\nx = {}, y = {} ({parity})\nN = {bound} ({mode})",
                params.q, params.c, params.delta, pair.x, pair.y
            );
            print_value_output(
                format,
                text,
                TriOutput {
                    bound,
                    bound_mode: mode,
                    c: params.c,
                    delta: params.delta,
                    n,
                    parity,
                    q: params.q,
                    s,
                    value: value.to_string(),
                    x: pair.x,
                    y: pair.y,
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Diff { n, s, format } => {
            let diff = g_difference_closed(n, s)?;
            print_value_output(
                format,
                format!("{}\ncase: {}", diff.value, diff.case),
                DiffOutput {
                    case: diff.case.to_string(),
                    n,
                    s,
                    value: diff.value.to_string(),
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables {
            which,
            s_max,
            format,
        } => {
            let table = match which {
                TableKind::Qcdelta => verify::qcdelta_table(s_max.unwrap_or(20)),
                TableKind::Xy => verify::xy_table(s_max.unwrap_or(19)),
                TableKind::Bounds => verify::bounds_table(),
                TableKind::BoundsShifted => verify::bounds_shifted_table(),
            };
            match format {
                TableFormat::Csv => print!("{}", table.to_csv()),
                TableFormat::Json => println!("{}", table.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            s_max,
            n_max,
            jobs,
            cap,
            bound_mode,
            format,
        } => {
            let cap = effective_cap(cap)?;
            let suites: Vec<Suite> = match suite {
                SuiteArg::Main => vec![Suite::MainFormula],
                SuiteArg::Reduced => vec![Suite::ReducedFormula, Suite::ExactCount],
                SuiteArg::Diff => vec![Suite::Differences],
                SuiteArg::Tables => vec![Suite::Tables],
                SuiteArg::Corollary => vec![Suite::Corollary],
                SuiteArg::Remark => vec![Suite::Remark],
                SuiteArg::TwoVar => vec![Suite::TwoVar],
                SuiteArg::BeckKifer => vec![Suite::BeckKifer],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let spec = GridSpec::new(s_max, n_max)
                .suites(suites)
                .bound_mode(bound_mode.into())
                .cap(cap);
            let report = match jobs {
                Some(0) => bail!("--jobs must be at least 1"),
                Some(jobs) => run_suites_with_jobs(&spec, jobs),
                None => run_suites(&spec),
            };
            match format {
                ValueFormat::Text => print!("{}", report.to_text()),
                ValueFormat::Json => println!("{}", report.to_json()),
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
