use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use multiproj::commands::{self, ProjOptions};
use multiproj::schema::{parse_monomial, ProblemSpec};
use multiproj::{render, CliError};

/// Exact computations on multigraded polynomial rings: relevance of
/// monomials, multihomogeneous spectra as torus embeddings, and the chamber
/// decomposition of the degree cone.
#[derive(Parser)]
#[command(name = "multiproj", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Problem document (JSON, schema "multiproj/1").
    spec: PathBuf,
    /// Write the JSON report to this path ('-' for stdout) instead of the
    /// human-readable summary.
    #[arg(long)]
    json: Option<String>,
    /// Override the square-free enumeration variable limit.
    #[arg(long)]
    max_vars: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, cone, and relevance verdict of one monomial.
    Relevance {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated exponents, one per variable.
        #[arg(long)]
        monomial: String,
    },
    /// Charts, chart cones, kernel lattice, dimension, and separatedness.
    Proj {
        #[command(flatten)]
        common: CommonArgs,
        /// Also list the maximal separated chart subcollections.
        #[arg(long)]
        maximal: bool,
        /// Also compute chart coordinate semigroups.
        #[arg(long)]
        semigroups: bool,
        /// Write a plain-text ray/cone listing of the chart fan.
        #[arg(long)]
        fan_text: Option<PathBuf>,
    },
    /// Chamber decomposition of the degree cone with walls and models.
    Chambers {
        #[command(flatten)]
        common: CommonArgs,
        /// Write the chamber adjacency graph in DOT syntax.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Apply the document's regrading and report the induced changes.
    Regrade {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn load_spec(common: &CommonArgs) -> Result<ProblemSpec, CliError> {
    let text = fs::read_to_string(&common.spec)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", common.spec.display())))?;
    ProblemSpec::from_json(&text)
}

fn emit(common: &CommonArgs, json: String, text: String) -> Result<(), CliError> {
    match &common.json {
        None => print!("{text}"),
        Some(path) if path == "-" => println!("{json}"),
        Some(path) => fs::write(path, json + "\n")?,
    }
    Ok(())
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Relevance { common, monomial } => {
            let mut limits = multiproj::limits_from_env(
                std::env::var("MULTIPROJ_LIMITS").ok().as_deref(),
            )?;
            if let Some(mv) = common.max_vars {
                limits.max_vars = mv;
            }
            let spec = load_spec(common)?;
            let exponents = parse_monomial(monomial, spec.variables.len())?;
            let report = commands::cmd_relevance(&spec, &exponents, &limits)?;
            emit(
                common,
                serde_json::to_string_pretty(&report)?,
                render::relevance_text(&report),
            )
        }
        Command::Proj {
            common,
            maximal,
            semigroups,
            fan_text,
        } => {
            let mut limits = multiproj::limits_from_env(
                std::env::var("MULTIPROJ_LIMITS").ok().as_deref(),
            )?;
            if let Some(mv) = common.max_vars {
                limits.max_vars = mv;
            }
            let spec = load_spec(common)?;
            let report = commands::cmd_proj(
                &spec,
                &ProjOptions {
                    maximal: *maximal,
                    semigroups: *semigroups,
                },
                &limits,
            )?;
            if let Some(path) = fan_text {
                fs::write(path, render::proj_fan_text(&report))?;
            }
            emit(
                common,
                serde_json::to_string_pretty(&report)?,
                render::proj_text(&report),
            )
        }
        Command::Chambers { common, dot } => {
            let mut limits = multiproj::limits_from_env(
                std::env::var("MULTIPROJ_LIMITS").ok().as_deref(),
            )?;
            if let Some(mv) = common.max_vars {
                limits.max_vars = mv;
            }
            let spec = load_spec(common)?;
            let report = commands::cmd_chambers(&spec, &limits)?;
            if let Some(path) = dot {
                fs::write(path, render::chambers_dot(&report))?;
            }
            emit(
                common,
                serde_json::to_string_pretty(&report)?,
                render::chambers_text(&report),
            )
        }
        Command::Regrade { common } => {
            let mut limits = multiproj::limits_from_env(
                std::env::var("MULTIPROJ_LIMITS").ok().as_deref(),
            )?;
            if let Some(mv) = common.max_vars {
                limits.max_vars = mv;
            }
            let spec = load_spec(common)?;
            let report = commands::cmd_regrade(&spec, &limits)?;
            emit(
                common,
                serde_json::to_string_pretty(&report)?,
                render::regrade_text(&report),
            )
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code as u8)
        }
    }
}
