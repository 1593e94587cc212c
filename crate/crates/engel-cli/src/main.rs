use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use engel::Config;
use engel_cli::commands::{self, AnalyzeOptions};
use engel_cli::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "engel-cli", version, about = "Engel graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and report connectivity of its Engel graph.
    Analyze {
        /// Group expression, e.g. "PSL(2,11)" or "S(5)".
        expr: String,
        #[arg(long, default_value = "gamma")]
        mode: String,
        /// The n for --mode gamma_n.
        #[arg(long)]
        n: Option<u32>,
        /// Also compute exact diameters.
        #[arg(long)]
        diameter: bool,
        /// Disable the conjugation-equivariance shortcut.
        #[arg(long)]
        no_equivariance: bool,
    },
    /// Re-check the recorded claims. Suites: core, extended, nightly.
    Verify {
        #[arg(default_value = "core")]
        suite: String,
    },
    /// Run a family over a range, appending new results to a store.
    Survey {
        /// Family name; currently PSL2 (odd primes p).
        family: String,
        /// Inclusive range, e.g. 5..31.
        range: String,
        #[arg(long)]
        store: PathBuf,
        #[arg(long, default_value = "gamma")]
        mode: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        no_equivariance: bool,
    },
    /// Emit the graph as dot or an edge list on stdout.
    Export {
        expr: String,
        #[arg(long, default_value = "gamma")]
        mode: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long)]
        no_equivariance: bool,
    },
}

fn run() -> anyhow::Result<bool> {
    let cli = Cli::parse();
    let cfg = Config::default();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { expr, mode, n, diameter, no_equivariance } => {
            let opts = AnalyzeOptions {
                mode,
                n,
                diameter,
                equivariance: cfg.equivariance && !no_equivariance,
            };
            let rec = commands::analyze(&expr, &opts, &cfg)?;
            commands::print_record(&rec, &mut out)?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(&suite)
                .ok_or_else(|| anyhow::anyhow!("unknown suite {suite:?}"))?;
            Ok(verify::run_suite(suite, &cfg, &mut out))
        }
        Command::Survey { family, range, store, mode, n, no_equivariance } => {
            let opts = AnalyzeOptions {
                mode,
                n,
                diameter: false,
                equivariance: cfg.equivariance && !no_equivariance,
            };
            let added = commands::survey(&family, &range, &store, &opts, &cfg, &mut out)?;
            writeln!(out, "# {added} new record(s)")?;
            Ok(true)
        }
        Command::Export { expr, mode, n, format, no_equivariance } => {
            commands::export(
                &expr,
                &mode,
                n,
                &format,
                cfg.equivariance && !no_equivariance,
                &cfg,
                &mut out,
            )?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(commands::exit_code_for(&err) as u8)
        }
    }
}
