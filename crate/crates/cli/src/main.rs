//! `hcomplex`: build the complexes `F` and `M` and run named checks.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource budget exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cli::{append_reports, cmd_build, cmd_check, exit_code, render_text, CheckId, CliError, RunConfig};

#[derive(Parser)]
#[command(name = "hcomplex", version, about = "Build the complexes F and M and verify their identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Degree of the u variables; defaults to ⌊(n−1)/2⌋.
    #[arg(long = "du", global = true)]
    d_u: Option<i64>,
    #[arg(long, global = true, default_value_t = exact_arith::DEFAULT_PRIME)]
    prime: u64,
    /// Single source of all randomness.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// F or M.
    #[arg(long, global = true)]
    complex: Option<String>,
    /// generic, diagonal, random or block.
    #[arg(long, global = true, default_value = "generic")]
    specialization: String,
    /// Output file; reports are appended to the JSON array there.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall time in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write the JSON export of F or M.
    Build,
    /// Run one or more named check suites.
    Check {
        /// d2, decomposition, chainmaps, betti, minimality, duality, h0, exactness, grade, isos, tor.
        #[arg(required = true)]
        ids: Vec<String>,
    },
}

fn config(o: Opts) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::new(o.n);
    if let Some(d_u) = o.d_u {
        cfg.d_u = d_u;
    }
    cfg.prime = o.prime;
    cfg.seed = o.seed;
    cfg.complex = o.complex.as_deref().map(str::parse).transpose()?;
    cfg.specialization = o.specialization;
    cfg.out = o.out;
    cfg.json = o.json;
    cfg.timings = o.timings;
    cfg.validate()?;
    Ok(cfg)
}

/// Write to stdout; a closed pipe ends output quietly.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cfg = config(cli.opts)?;
    match cli.command {
        Command::Build => {
            let v = cmd_build(&cfg)?;
            let text = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
            match &cfg.out {
                Some(p) => std::fs::write(p, text)?,
                None => emit(&text)?,
            }
            Ok(0)
        }
        Command::Check { ids } => {
            let ids: Vec<CheckId> = ids.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            let reports = cmd_check(&ids, &cfg)?;
            if cfg.json {
                emit(&(serde_json::to_string_pretty(&verify::reports_to_json(&reports)).expect("serializable") + "\n"))?;
            } else {
                emit(&render_text(&reports))?;
            }
            if let Some(p) = &cfg.out {
                append_reports(p, &reports)?;
            }
            Ok(exit_code(&reports))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hcomplex: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
