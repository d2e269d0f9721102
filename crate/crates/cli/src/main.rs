//! Batch verification driver.

mod gseries;
mod registry;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use trigcenter::coeffring::SeriesWindow;
use trigcenter::report::{CheckOutcome, Status, Witness};
use trigcenter::scalar::parse_rational;
use trigcenter::Rational;

use gseries::Method;
use registry::{jobs_for, resolve_suites, Ctx, Params};
use report::{CheckRecord, Expect, Report};

#[derive(Parser)]
#[command(name = "trigcenter", version, about = "Verify the trigonometric R-matrix, its normalizer and central series")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the normalizer g(u) and write it as JSON.
    Gseries {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long, value_enum, default_value = "froute")]
        method: Method,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a single check.
    Check {
        /// Check identifier, e.g. `unitarity` or `central`.
        id: String,
        #[command(flatten)]
        win: WindowArgs,
        #[command(flatten)]
        sel: SelectArgs,
    },
    /// Run a list of suites.
    Run {
        #[command(flatten)]
        win: WindowArgs,
        /// Comma-separated checks or groups.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        /// Run every registered check.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        sel: SelectArgs,
    },
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=8))]
    n: u32,
    /// Lowest u-exponent; defaults to -(hmax + 2).
    #[arg(long, allow_hyphen_values = true)]
    umin: Option<i64>,
    #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
    umax: i64,
    #[arg(long, default_value_t = 6)]
    hmax: usize,
}

impl WindowArgs {
    fn window(&self) -> Result<SeriesWindow, String> {
        let umin = self.umin.unwrap_or(-(self.hmax as i64 + 2));
        SeriesWindow::new(umin, self.umax, self.hmax).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct SelectArgs {
    /// Level c as `p` or `p/q`; defaults to the critical level -n.
    #[arg(long, value_parser = parse_level, allow_hyphen_values = true)]
    level: Option<Rational>,
    /// phi, theta, qdet or Theta.
    #[arg(long, value_parser = ["phi", "theta", "qdet", "Theta"])]
    series: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "pass")]
    expect: Expect,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_level(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn write_json(path: &Option<PathBuf>, value: &impl serde::Serialize) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(()),
    }
}

fn run_checks(ids: &[&str], win: &WindowArgs, sel: &SelectArgs) -> ExitCode {
    let window = match win.window() {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let params = Params {
        n: win.n as usize,
        window,
        level: sel.level.clone(),
        series: sel.series.clone(),
        k: sel.k.map(|k| k as usize),
    };
    let mut jobs = Vec::new();
    for id in ids {
        match jobs_for(id, &params) {
            Ok(j) => jobs.extend(j),
            Err(e) => return usage(e),
        }
    }
    let ctx = Ctx::new(params);
    let records: Vec<CheckRecord> = jobs
        .par_iter()
        .map(|j| {
            let t = Instant::now();
            let out = (j.run)(&ctx).unwrap_or_else(|e| CheckOutcome::fail(Witness::message(&e), e.to_string()));
            let ms = t.elapsed().as_millis() as u64;
            CheckRecord::new(j.id.clone(), j.params.clone(), sel.expect, out, ms)
        })
        .collect();
    let report = Report::new(records);
    for r in &report.checks {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("{tag} {} ({} ms): {}", r.id, r.wall_ms, r.detail);
        if let (Status::Fail, Some(w)) = (r.status, &r.witness) {
            println!("     witness {w:?}");
        }
    }
    if let Err(e) = write_json(&sel.json, &report) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gseries { win, method, json } => {
            let window = match win.window() {
                Ok(w) => w,
                Err(e) => return usage(e),
            };
            match gseries::build(win.n as usize, &window, method) {
                Ok(file) => {
                    println!("g for n = {} on {:?}: {} terms", file.n, file.window, file.g.terms.len());
                    if let Err(e) = write_json(&json, &file) {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Check { id, win, sel } => match resolve_suites(&[id], false) {
            Ok(ids) => run_checks(&ids, &win, &sel),
            Err(e) => usage(e),
        },
        Cmd::Run { win, suites, all, sel } => match resolve_suites(&suites, all) {
            Ok(ids) => run_checks(&ids, &win, &sel),
            Err(e) => usage(e),
        },
    }
}
