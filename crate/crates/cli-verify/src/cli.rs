use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use eliminator::{Outcome, ScanOptions};
use group_model::Sign;
use serde::Serialize;
use serde_json::json;

use crate::checks::verify_with;
use crate::config::expand_config;
use crate::descriptor::parse_descriptor;
use crate::error::{CliError, Result};
use crate::grid::{parse_kinds, parse_list, Check, GridSpec};
use crate::query::{eliminate_pair, eliminate_scan, export, query, ExportFormat, Query};

#[derive(Debug, Parser)]
#[command(
    name = "gkspec",
    version,
    about = "Prime graphs of classical groups: verification, queries and elimination"
)]
#[command(args_override_self = true)]
struct Cli {
    /// Read flags from a `key = value` file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification campaigns and print one JSON report per check.
    Verify(VerifyArgs),
    /// Compute one invariant of a group.
    Query {
        descriptor: String,
        #[arg(value_enum)]
        what: Query,
    },
    /// Eliminate a candidate `S` for a target `L`, or every candidate with `--scan`.
    Eliminate(EliminateArgs),
    /// Write the index graph as DOT or JSON.
    Export {
        descriptor: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Checks to run.
    #[arg(long = "check", alias = "lemma", value_enum, value_delimiter = ',')]
    checks: Vec<Check>,
    /// Every check on its default grid.
    #[arg(long)]
    all: bool,
    /// `all` or a comma list of L, L+, L-, U, S, O, O+, O-.
    #[arg(long, default_value = "all")]
    families: String,
    /// Keep only one sign of the signed families.
    #[arg(long, value_parser = ["+", "-"])]
    sign: Option<String>,
    #[arg(long)]
    nmin: Option<u32>,
    #[arg(long)]
    nmax: Option<u64>,
    /// Comma list of field sizes.
    #[arg(long)]
    qs: Option<String>,
    #[arg(long)]
    amax: Option<u64>,
    #[arg(long)]
    imax: Option<u64>,
    #[arg(long = "gamma-max")]
    gamma_max: Option<u32>,
    #[arg(long)]
    umax: Option<u64>,
    #[arg(long)]
    bmax: Option<u64>,
    /// Comma list of primes.
    #[arg(long)]
    primes: Option<String>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Leave wall times out so reports are byte-identical across runs.
    #[arg(long = "no-timing")]
    no_timing: bool,
    /// Pretty-print each report.
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Args)]
struct EliminateArgs {
    target: String,
    candidate: Option<String>,
    /// Enumerate every cross-characteristic candidate with the same t.
    #[arg(long)]
    scan: bool,
    /// Candidate characteristics for `--scan`.
    #[arg(long)]
    primes: Option<String>,
    /// Largest candidate field for `--scan`; defaults to q².
    #[arg(long)]
    umax: Option<u64>,
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl VerifyArgs {
    fn grid(&self) -> Result<GridSpec> {
        let checks = if self.all {
            Check::all()
        } else {
            let mut c = self.checks.clone();
            c.dedup();
            c
        };
        let spec = GridSpec {
            checks,
            kinds: parse_kinds(&self.families)?,
            sign: self
                .sign
                .as_deref()
                .map(|s| if s == "-" { Sign::Minus } else { Sign::Plus }),
            n_min: self.nmin,
            n_max: self.nmax,
            qs: self.qs.as_deref().map(parse_list).transpose()?,
            a_max: self.amax,
            i_max: self.imax,
            gamma_max: self.gamma_max,
            u_max: self.umax,
            b_max: self.bmax,
            primes: self.primes.as_deref().map(parse_list).transpose()?,
            workers: self.workers,
            timing: !self.no_timing,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize, pretty: bool) -> Result<()> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Verify(args) => {
            let spec = args.grid()?;
            let mut write_err = None;
            let reports = verify_with(&spec, |r| {
                if let Err(e) = emit(out, r, args.pretty) {
                    write_err.get_or_insert(e);
                }
            })?;
            if let Some(e) = write_err {
                return Err(e);
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }
        Command::Query { descriptor, what } => {
            let g = parse_descriptor(&descriptor)?;
            emit(out, &query(&g, what)?, true)?;
            Ok(0)
        }
        Command::Eliminate(args) => {
            let l = parse_descriptor(&args.target)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(args.workers)
                .build()?;
            match (&args.candidate, args.scan) {
                (Some(s), false) => {
                    let s = parse_descriptor(s)?;
                    let outcome = pool.install(|| eliminate_pair(&l, &s))?;
                    emit(out, &outcome, true)?;
                    Ok(exit_for(std::slice::from_ref(&outcome)))
                }
                (None, true) => {
                    let mut opts = ScanOptions::default();
                    if let Some(p) = &args.primes {
                        opts.primes = parse_list(p)?;
                    }
                    opts.max_u = args.umax;
                    let outcomes = pool.install(|| eliminate_scan(&l, &opts))?;
                    let eliminated = outcomes
                        .iter()
                        .filter(|o| o.report().is_some_and(|r| r.verified))
                        .count();
                    let summary = json!({
                        "target": l.to_string(),
                        "candidates": outcomes.len(),
                        "eliminated": eliminated,
                        "outcomes": outcomes,
                    });
                    emit(out, &summary, true)?;
                    Ok(exit_for(&outcomes))
                }
                _ => Err(CliError::Usage(
                    "eliminate takes a target and either a candidate or --scan".into(),
                )),
            }
        }
        Command::Export { descriptor, format } => {
            let g = parse_descriptor(&descriptor)?;
            write!(out, "{}", export(&g, format)?)?;
            Ok(0)
        }
    }
}

fn exit_for(outcomes: &[Outcome]) -> i32 {
    let ok = outcomes
        .iter()
        .all(|o| o.report().is_some_and(|r| r.verified));
    if ok {
        0
    } else {
        1
    }
}

/// Runs the command line and returns the exit status: 0 pass, 1 failure, 2 usage error.
pub fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
