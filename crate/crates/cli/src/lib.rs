//! Command-line front end for `wsg-core`.
//!
//! [`run`] parses arguments, dispatches a subcommand, and writes one report.
//! Exit codes: 0 on success, 1 on a domain or I/O error, 2 on a usage error.

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;
use wsg_core::census::{
    census_classify, family_4_1, family_4_2, family_4_3, trigonal_residue_report, with_jobs,
};
use wsg_core::{
    classify, classify_bounds, delta_closed, euclid_sequence, sharp_semigroup, trivial_new_nongaps,
    ws_of_q_full_genus, CuspType, NumericalSemigroup, TwoGenParams,
};

pub use report::{render, write_report, Body, Format, Report, SemigroupRow, CSV_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] wsg_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("rendering failed: {0}")]
    Render(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "wsg",
    version,
    about = "Weierstrass semigroups containing <a; b>"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print elapsed time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify <a; b>, a gap-defined H, or a bare (a, b, genus) triple.
    Analyze {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Comma-separated gaps of H.
        #[arg(long, conflicts_with = "genus")]
        gaps: Option<String>,
        /// Classify from the genus alone.
        #[arg(long)]
        genus: Option<u64>,
    },
    /// Blow-up multiplicities and delta invariant of a (nu; mu) cusp.
    Delta {
        #[arg(long)]
        nu: u64,
        #[arg(long)]
        mu: u64,
    },
    /// Trivial new non-gaps of a (mu; a) cusp; mu defaults to a - r.
    TrivialNongaps {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        mu: Option<u64>,
    },
    /// Semigroup at a second point Q on the pencil at maximal genus.
    WsQ {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// <a; b> together with the trivial new non-gaps for mu = a - r.
    SharpS {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Every semigroup of the given genus containing <a; b>, classified.
    Census {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        genus: u64,
        /// Keep semigroups that break the standing hypotheses.
        #[arg(long)]
        no_hypotheses: bool,
        /// Worker threads (output does not depend on it).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// The explicit families on <4;4n+1>, <5;5n+1>, <6;6n+1>, and the trigonal residue check.
    Examples {
        #[arg(long, value_parser = ["4.1", "4.2", "4.3", "trigonal"])]
        which: String,
        /// 4.1: n,m  4.2: n,m,m'  4.3: n  trigonal: n
        #[arg(long)]
        params: String,
    },
}

fn parse_params(raw: &str, want: usize, which: &str) -> Result<Vec<u64>, CliError> {
    let list = wsg_core::semigroup::parse_list(raw)
        .map_err(|e| CliError::Usage(format!("--params {raw:?}: {e}")))?;
    if list.len() != want {
        return Err(CliError::Usage(format!(
            "--which {which} takes {want} parameter(s), got {}",
            list.len()
        )));
    }
    Ok(list)
}

fn single(title: String, row: SemigroupRow) -> Body {
    Body::Rows {
        title,
        rows: vec![row],
    }
}

fn echo(command: &Command) -> Value {
    match command {
        Command::Analyze { a, b, gaps, genus } => {
            json!({"name": "analyze", "a": a, "b": b, "gaps": gaps, "genus": genus})
        }
        Command::Delta { nu, mu } => json!({"name": "delta", "nu": nu, "mu": mu}),
        Command::TrivialNongaps { a, b, mu } => {
            json!({"name": "trivial-nongaps", "a": a, "b": b, "mu": mu})
        }
        Command::WsQ { a, b } => json!({"name": "ws-q", "a": a, "b": b}),
        Command::SharpS { a, b } => json!({"name": "sharp-s", "a": a, "b": b}),
        Command::Census {
            a,
            b,
            genus,
            no_hypotheses,
            ..
        } => json!({
            "name": "census",
            "a": a,
            "b": b,
            "genus": genus,
            "require_hypotheses": !no_hypotheses,
        }),
        Command::Examples { which, params } => {
            json!({"name": "examples", "which": which, "params": params})
        }
    }
}

fn analyze(a: u64, b: u64, gaps: Option<&str>, genus: Option<u64>) -> Result<Body, CliError> {
    let p = TwoGenParams::new(a, b)?;
    if let Some(g) = genus {
        let v = classify_bounds(a, b, g)?;
        return Ok(single(
            format!("<{a};{b}> at genus {g}"),
            SemigroupRow::bounds(p, g, v),
        ));
    }
    let h = match gaps {
        None => p.semigroup()?,
        Some(raw) => {
            let list = wsg_core::semigroup::parse_list(raw)
                .map_err(|e| CliError::Usage(format!("--gaps {raw:?}: {e}")))?;
            let h = NumericalSemigroup::from_gaps(list)?;
            let found_b = h.second_generator().unwrap_or(0);
            if h.multiplicity() != a || found_b != b {
                return Err(wsg_core::Error::ParamsMismatch {
                    a,
                    b,
                    found_a: h.multiplicity(),
                    found_b,
                }
                .into());
            }
            h
        }
    };
    let v = classify(&h)?;
    Ok(single(
        format!("H containing <{a};{b}>"),
        SemigroupRow::new(p, h, Some(v)),
    ))
}

fn examples(which: &str, raw: &str) -> Result<Body, CliError> {
    let (title, p, h, label) = match which {
        "4.1" => {
            let v = parse_params(raw, 2, which)?;
            let h = family_4_1(v[0], v[1])?;
            let p = TwoGenParams::new(4, 4 * v[0] + 1)?;
            (
                format!("<4;4n+1> family, n={} m={}", v[0], v[1]),
                p,
                h,
                "EX_4_1",
            )
        }
        "4.2" => {
            let v = parse_params(raw, 3, which)?;
            let h = family_4_2(v[0], v[1], v[2])?;
            let p = TwoGenParams::new(5, 5 * v[0] + 1)?;
            (
                format!("<5;5n+1> family, n={} m={} m'={}", v[0], v[1], v[2]),
                p,
                h,
                "EX_4_2",
            )
        }
        "4.3" => {
            let v = parse_params(raw, 1, which)?;
            let h = family_4_3(v[0])?;
            let p = TwoGenParams::new(6, 6 * v[0] + 1)?;
            (format!("<6;6n+1> family, n={}", v[0]), p, h, "EX_4_3")
        }
        "trigonal" => {
            let v = parse_params(raw, 1, which)?;
            let rep = trigonal_residue_report(v[0])?;
            let p = TwoGenParams::new(3, 3 * v[0] + 1)?;
            let h = p.semigroup()?;
            let verdict = classify(&h)?;
            let mut row = SemigroupRow::new(p, h, Some(verdict)).with_label("TRIGONAL");
            row.note = Some(format!(
                "genus {} is {} mod 3; the at-most-once trigonal case is stated for 1 mod 3 ({})",
                rep.genus,
                rep.computed_residue,
                if rep.agrees { "agrees" } else { "disagrees" }
            ));
            return Ok(single(format!("<3;3n+1>, n={}", v[0]), row));
        }
        other => return Err(CliError::Usage(format!("unknown family {other}"))),
    };
    let v = classify(&h)?;
    Ok(single(
        title,
        SemigroupRow::new(p, h, Some(v)).with_label(label),
    ))
}

/// Computes the report for `command`; `jobs` only sizes the worker pool.
pub fn execute(command: &Command) -> Result<Report, CliError> {
    let body = match command {
        Command::Analyze { a, b, gaps, genus } => analyze(*a, *b, gaps.as_deref(), *genus)?,
        Command::Delta { nu, mu } => {
            let cusp = CuspType::new(*nu, *mu)?;
            Body::Delta {
                nu: *nu,
                mu: *mu,
                sequence: euclid_sequence(cusp),
                closed: delta_closed(cusp),
            }
        }
        Command::TrivialNongaps { a, b, mu } => {
            let p = TwoGenParams::new(*a, *b)?;
            Body::Trivial(trivial_new_nongaps(&p, mu.unwrap_or(p.default_mu()))?)
        }
        Command::WsQ { a, b } => {
            let p = TwoGenParams::new(*a, *b)?;
            let q = ws_of_q_full_genus(&p)?;
            let v = classify(&q).ok();
            single(
                format!("semigroup at Q for <{a};{b}> at genus {}", p.full_genus()),
                SemigroupRow::new(p, q, v),
            )
        }
        Command::SharpS { a, b } => {
            let p = TwoGenParams::new(*a, *b)?;
            let s = sharp_semigroup(&p)?;
            let v = classify(&s)?;
            single(
                format!("sharp semigroup on <{a};{b}>"),
                SemigroupRow::new(p, s, Some(v)),
            )
        }
        Command::Census {
            a,
            b,
            genus,
            no_hypotheses,
            jobs,
        } => {
            let p = TwoGenParams::new(*a, *b)?;
            let rows = with_jobs(*jobs, || census_classify(&p, *genus, !no_hypotheses))?;
            Body::Rows {
                title: format!(
                    "census of genus {genus} over <{a};{b}>: {} semigroup(s)",
                    rows.len()
                ),
                rows: rows
                    .into_iter()
                    .map(|r| SemigroupRow::from_census(p, r))
                    .collect(),
            }
        }
        Command::Examples { which, params } => examples(which, params)?,
    };
    Ok(Report {
        command: echo(command),
        body,
    })
}

fn emit(cli: &Cli, report: &Report, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.out {
        None => write_report(report, cli.format, stdout),
        Some(path) => {
            let bytes = render(report, cli.format)?;
            std::fs::write(path, bytes).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let start = Instant::now();
    let result = execute(&cli.command).and_then(|report| emit(&cli, &report, stdout));
    if cli.timing {
        let _ = writeln!(stderr, "elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
