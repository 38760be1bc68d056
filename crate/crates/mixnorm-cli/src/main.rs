//! mixnorm: experiment runner for the mixed norm space toolkit.
//!
//! `mixnorm run <experiment-id>` executes one named experiment and emits its
//! report as JSON or plot-ready CSV; `mixnorm list` shows every id;
//! `mixnorm calibrate` measures the reference constants and freezes them
//! into a fixture file. Exit codes: 0 all verdicts pass, 1 any verdict
//! fails, 2 usage or configuration error, 3 numerical non-convergence.

mod calibrate;
mod config;
mod error;
mod experiments;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use config::{parse_exponent, RunConfig};
use report::{render, write_atomic, Format};

#[derive(Parser)]
#[command(name = "mixnorm", version, about = "Mixed norm space experiment runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and emit its report.
    Run {
        /// Experiment id; see `mixnorm list`.
        experiment_id: String,
        /// Integral-mean exponent p (a positive real, or "inf").
        #[arg(long, value_parser = parse_exponent)]
        p: Option<f64>,
        /// Radial exponent q (a positive real, or "inf").
        #[arg(long, value_parser = parse_exponent)]
        q: Option<f64>,
        /// Weight exponent alpha.
        #[arg(long)]
        alpha: Option<f64>,
        /// Flat key=value config file; command-line flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Seed for every random draw the experiment makes.
        #[arg(long)]
        seed: Option<u64>,
        /// Tolerance for the experiment's headline verdict.
        #[arg(long)]
        tol: Option<f64>,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format; inferred from --out extension, default json.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Polynomial degree / truncation order where the experiment has one.
        #[arg(long)]
        degree: Option<usize>,
        /// Experiment-specific key=value setting; repeatable, wins over the
        /// config file.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
    },
    /// List experiment ids with what each one checks.
    List,
    /// Measure reference constants and write the calibration fixture.
    Calibrate {
        /// Directory the fixture file is written into.
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

fn main() {
    std::process::exit(run_command(Cli::parse()) as i32);
}

fn run_command(cli: Cli) -> u8 {
    match cli.command {
        Command::List => {
            for d in experiments::REGISTRY {
                println!("{:<22} {}", d.id, d.what);
            }
            0
        }
        Command::Calibrate { out } => {
            let mut cfg = RunConfig::default();
            cfg.extra.insert("fixtures_dir".to_string(), out.display().to_string());
            execute("calibrate", &cfg)
        }
        Command::Run { experiment_id, p, q, alpha, config, seed, tol, out, format, degree, set } => {
            let mut cfg = RunConfig { p, q, alpha, seed, tol, degree, format, out, ..Default::default() };
            for pair in &set {
                let Some((key, value)) = pair.split_once('=') else {
                    eprintln!("mixnorm: --set {}: expected KEY=VALUE", pair);
                    return 2;
                };
                cfg.extra.insert(key.trim().to_string(), value.trim().to_string());
            }
            if let Some(path) = config {
                if let Err(e) = cfg.absorb_file(&path) {
                    eprintln!("mixnorm: {}", e);
                    return e.exit_code();
                }
            }
            execute(&experiment_id, &cfg)
        }
    }
}

fn execute(id: &str, cfg: &RunConfig) -> u8 {
    let report = match experiments::run(id, cfg) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("mixnorm: {}", e);
            return e.exit_code();
        }
    };
    let format = cfg.format.unwrap_or_else(|| {
        match cfg.out.as_deref().and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("csv") => Format::Csv,
            _ => Format::Json,
        }
    });
    let text = render(&report, format);
    match &cfg.out {
        None => print!("{}", text),
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("mixnorm: {}: {}", path.display(), e);
                return 2;
            }
        }
    }
    if report.any_fail() {
        1
    } else {
        0
    }
}
