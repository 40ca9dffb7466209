use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kgroth_cli::commands::{self, Basis, ConstantKind, Operator, SeriesName};
use kgroth_cli::{json, suites, CliError};

#[derive(Parser)]
#[command(
    name = "kgroth",
    version,
    about = "Exact symmetric function computations with g_λ and G_λ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an expression in the s, g or G basis.
    Expand {
        #[arg(long, value_enum)]
        to: Basis,
        /// Degree cap for expressions containing G atoms.
        #[arg(long)]
        cap: Option<usize>,
        expr: String,
    },
    /// Apply I, I⁻¹, H(t)^⊥, E(t)^⊥ or G_μ^⊥.
    Apply {
        #[arg(long, value_enum)]
        op: Operator,
        /// Value of the series parameter, a polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// Partition for Gperp.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum)]
        to: Option<Basis>,
        expr: String,
    },
    /// Pair H(t), E(t) or G_λ with an expression.
    Inner {
        #[arg(long, value_enum)]
        series: SeriesName,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        expr: String,
    },
    /// Structure constants.
    Constants {
        #[arg(long, value_enum)]
        kind: ConstantKind,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Evaluate cases on a thread pool; output order is unchanged.
        #[arg(long)]
        parallel: bool,
        /// Include wall time in summaries.
        #[arg(long)]
        timing: bool,
        /// List suites and exit.
        #[arg(long)]
        list: bool,
    },
}

fn print(v: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", json::line(v));
}

fn verify(
    suite: Option<String>,
    max_size: Option<usize>,
    seed: Option<u64>,
    parallel: bool,
    timing: bool,
    list: bool,
) -> Result<bool, CliError> {
    if list {
        for s in suites::all() {
            print(&serde_json::json!({
                "suite": s.name,
                "default_max_size": s.default_max_size,
                "description": s.description,
            }));
        }
        return Ok(true);
    }
    let name = suite.unwrap_or_default();
    let selected: Vec<&suites::Suite> = if name == "all" {
        suites::all().iter().collect()
    } else {
        vec![suites::find(&name)
            .ok_or_else(|| CliError::Usage(format!("unknown suite '{name}'; see --list")))?]
    };
    let mut ok = true;
    for s in selected {
        let mut params = suites::default_params(s);
        if let Some(n) = max_size {
            params.max_size = n;
        }
        if let Some(seed) = seed {
            params.seed = seed;
        }
        let report = suites::run(s, params, parallel);
        for line in report.case_lines() {
            print(&line);
        }
        print(&report.summary(timing));
        ok &= report.passed();
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { to, cap, expr } => commands::expand(&expr, to, cap).map(|v| {
            print(&v);
            true
        }),
        Command::Apply {
            op,
            t,
            mu,
            to,
            expr,
        } => commands::apply(&expr, op, t.as_deref(), mu.as_deref(), to).map(|v| {
            print(&v);
            true
        }),
        Command::Inner {
            series,
            t,
            lambda,
            expr,
        } => commands::inner(&expr, series, t.as_deref(), lambda.as_deref()).map(|v| {
            print(&v);
            true
        }),
        Command::Constants {
            kind,
            lambda,
            mu,
            nu,
        } => commands::constants(kind, &lambda, &mu, &nu).map(|v| {
            print(&v);
            true
        }),
        Command::Verify {
            suite,
            max_size,
            seed,
            parallel,
            timing,
            list,
        } => verify(suite, max_size, seed, parallel, timing, list),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kgroth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
