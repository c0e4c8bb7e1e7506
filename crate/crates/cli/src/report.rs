//! Deterministic report bodies in human, JSON and CSV form.

use std::fmt::Write as _;
use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};
use wsg_core::engine::{Fact, Status};
use wsg_core::{
    CensusRow, FamilyTag, MultiplicitySequence, NumericalSemigroup, TrivialNewNonGaps,
    TwoGenParams, Verdict,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// One semigroup (or a bare `(a, b, g)` triple) with its verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct SemigroupRow {
    pub params: TwoGenParams,
    pub genus: u64,
    pub semigroup: Option<NumericalSemigroup>,
    pub verdict: Option<Verdict>,
    pub family_tag: Option<FamilyTag>,
    pub label: Option<String>,
    pub note: Option<String>,
}

impl SemigroupRow {
    pub fn new(
        params: TwoGenParams,
        semigroup: NumericalSemigroup,
        verdict: Option<Verdict>,
    ) -> Self {
        SemigroupRow {
            params,
            genus: semigroup.genus(),
            semigroup: Some(semigroup),
            verdict,
            family_tag: None,
            label: None,
            note: None,
        }
    }

    pub fn bounds(params: TwoGenParams, genus: u64, verdict: Verdict) -> Self {
        SemigroupRow {
            params,
            genus,
            semigroup: None,
            verdict: Some(verdict),
            family_tag: None,
            label: None,
            note: None,
        }
    }

    pub fn from_census(params: TwoGenParams, row: CensusRow) -> Self {
        SemigroupRow {
            params,
            genus: row.semigroup.genus(),
            semigroup: Some(row.semigroup),
            verdict: row.verdict,
            family_tag: row.family_tag,
            label: None,
            note: row.note,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// `a, b, n, r` of the semigroup itself when known, else of the request.
    fn abnr(&self) -> (u64, u64, u64, u64) {
        match &self.verdict {
            Some(v) => (
                v.hypotheses.a,
                v.hypotheses.b,
                v.hypotheses.n,
                v.hypotheses.r,
            ),
            None => (self.params.a, self.params.b, self.params.n, self.params.r),
        }
    }

    fn gaps_csv(&self) -> String {
        self.semigroup
            .as_ref()
            .map(|h| join(h.gaps(), ","))
            .unwrap_or_default()
    }

    fn kind(&self) -> String {
        self.verdict
            .as_ref()
            .map(|v| v.kind.to_string())
            .unwrap_or_default()
    }

    fn rules(&self) -> String {
        self.verdict
            .as_ref()
            .map(|v| {
                v.established_rules()
                    .map(|r| r.as_str())
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default()
    }

    fn to_json(&self) -> Value {
        let (a, b, n, r) = self.abnr();
        json!({
            "a": a,
            "b": b,
            "n": n,
            "r": r,
            "genus": self.genus,
            "gaps": self.semigroup.as_ref().map(|h| h.gaps().to_vec()),
            "canonical": self.semigroup.as_ref().map(|h| h.to_string()),
            "verdict": self.verdict,
            "family_tag": self.family_tag,
            "label": self.label,
            "note": self.note,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Rows {
        title: String,
        rows: Vec<SemigroupRow>,
    },
    Delta {
        nu: u64,
        mu: u64,
        sequence: MultiplicitySequence,
        closed: u64,
    },
    Trivial(TrivialNewNonGaps),
}

/// A tool invocation: the echoed command and its result body.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: Value,
    pub body: Body,
}

pub const CSV_HEADER: [&str; 8] = [
    "a",
    "b",
    "n",
    "r",
    "genus",
    "gaps",
    "verdict",
    "rules_established",
];

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn body_json(body: &Body) -> Value {
    match body {
        Body::Rows { rows, .. } => Value::Array(rows.iter().map(SemigroupRow::to_json).collect()),
        Body::Delta {
            nu,
            mu,
            sequence,
            closed,
        } => json!({
            "nu": nu,
            "mu": mu,
            "multiplicities": sequence.cs,
            "quotients": sequence.ns,
            "delta_recursive": sequence.delta,
            "delta_closed": closed,
        }),
        Body::Trivial(t) => json!({
            "a": t.params.a,
            "b": t.params.b,
            "mu": t.mu,
            "default_mu": t.is_default_mu(),
            "n_table": t.n_table.iter().map(|&(m, n)| json!({"m": m, "n": n})).collect::<Vec<_>>(),
            "pairs": t.pairs().map(|(i, m)| json!({"i": i, "m": m, "value": i * t.params.b - m * t.params.a})).collect::<Vec<_>>(),
            "values": t.values,
            "count": t.values.len(),
            "expected_count": t.expected_count(),
        }),
    }
}

fn render_json(report: &Report) -> Result<Vec<u8>, CliError> {
    let top = json!({
        "tool": "wsg",
        "version": env!("CARGO_PKG_VERSION"),
        "command": report.command,
        "results": body_json(&report.body),
    });
    let mut out = serde_json::to_vec_pretty(&top).map_err(|e| CliError::Render(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

fn render_csv(report: &Report) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Render(e.to_string());
    match &report.body {
        Body::Rows { rows, .. } => {
            w.write_record(CSV_HEADER).map_err(err)?;
            for row in rows {
                let (a, b, n, r) = row.abnr();
                w.write_record([
                    a.to_string(),
                    b.to_string(),
                    n.to_string(),
                    r.to_string(),
                    row.genus.to_string(),
                    row.gaps_csv(),
                    row.kind(),
                    row.rules(),
                ])
                .map_err(err)?;
            }
        }
        Body::Delta {
            nu,
            mu,
            sequence,
            closed,
        } => {
            w.write_record([
                "nu",
                "mu",
                "multiplicities",
                "quotients",
                "delta_recursive",
                "delta_closed",
            ])
            .map_err(err)?;
            w.write_record([
                nu.to_string(),
                mu.to_string(),
                join(&sequence.cs, ","),
                join(&sequence.ns, ","),
                sequence.delta.to_string(),
                closed.to_string(),
            ])
            .map_err(err)?;
        }
        Body::Trivial(t) => {
            w.write_record(["a", "b", "mu", "m", "i", "value"])
                .map_err(err)?;
            for (i, m) in t.pairs() {
                w.write_record([
                    t.params.a.to_string(),
                    t.params.b.to_string(),
                    t.mu.to_string(),
                    m.to_string(),
                    i.to_string(),
                    (i * t.params.b - m * t.params.a).to_string(),
                ])
                .map_err(err)?;
            }
        }
    }
    w.into_inner().map_err(|e| CliError::Render(e.to_string()))
}

fn fact_text(f: &Fact) -> String {
    match f {
        Fact::DivisorWitness { divisor, witness } => format!("e={divisor}: {witness} is a gap"),
        Fact::DivisorUnrefuted { divisor, start } => {
            format!("e={divisor}: every {start}+i*{divisor} is a member")
        }
        Fact::GenusVsBound {
            divisor,
            genus,
            bound,
            exceeds,
        } => {
            let rel = if *exceeds { ">" } else { "<=" };
            match divisor {
                Some(e) => format!("e={e}: g={genus} {rel} {bound}"),
                None => format!("g={genus} {rel} {bound}"),
            }
        }
        Fact::MissingNonGap { value } => format!("{value} is a gap"),
        Fact::ContainsAll { values } => format!("contains {{{}}}", join(values, ",")),
        Fact::Condition { name, holds } => format!("{name}: {}", if *holds { "yes" } else { "no" }),
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Established => "Established",
        Status::Failed => "Failed",
        Status::NotApplicable => "NotApplicable",
    }
}

fn human_verdict(out: &mut String, v: &Verdict) {
    let h = &v.hypotheses;
    let _ = writeln!(
        out,
        "  a={} b={} n={} r={}  window condition: {}{}",
        h.a,
        h.b,
        h.n,
        h.r,
        if h.dim_condition_holds {
            "holds"
        } else {
            "fails"
        },
        if h.assumed { " (assumed)" } else { "" }
    );
    let _ = writeln!(out, "  verdict: {}", v.kind);
    for o in &v.outcomes {
        let facts = o
            .evidence
            .iter()
            .map(fact_text)
            .collect::<Vec<_>>()
            .join("; ");
        let _ = writeln!(
            out,
            "    {:<26} {:<14} {}",
            o.rule.as_str(),
            status_text(o.status),
            facts
        );
    }
}

fn render_human(report: &Report) -> String {
    let mut out = String::new();
    match &report.body {
        Body::Rows { title, rows } => {
            let _ = writeln!(out, "{title}");
            if rows.is_empty() {
                let _ = writeln!(out, "  (no semigroups)");
            }
            // A single row gets the full rule table; several rows get a summary table.
            if rows.len() == 1 {
                let row = &rows[0];
                if let Some(label) = &row.label {
                    let _ = writeln!(out, "  {label}");
                }
                match &row.semigroup {
                    Some(h) => {
                        let _ = writeln!(out, "  {h}");
                    }
                    None => {
                        let _ = writeln!(out, "  genus={} (no gap set given)", row.genus);
                    }
                }
                if let Some(v) = &row.verdict {
                    human_verdict(&mut out, v);
                }
                if let Some(note) = &row.note {
                    let _ = writeln!(out, "  note: {note}");
                }
            } else if !rows.is_empty() {
                let _ = writeln!(
                    out,
                    "  {:<6} {:<14} {:<8} {:<12} gaps",
                    "genus", "verdict", "tag", "label"
                );
                for row in rows {
                    let _ = writeln!(
                        out,
                        "  {:<6} {:<14} {:<8} {:<12} {}",
                        row.genus,
                        row.verdict
                            .as_ref()
                            .map(|v| v.kind.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.family_tag.map(FamilyTag::as_str).unwrap_or("-"),
                        row.label.as_deref().unwrap_or("-"),
                        row.gaps_csv(),
                    );
                }
            }
        }
        Body::Delta {
            nu,
            mu,
            sequence,
            closed,
        } => {
            let _ = writeln!(out, "cusp ({nu}; {mu})");
            let _ = writeln!(out, "  multiplicities: {}", join(&sequence.cs, " "));
            let _ = writeln!(out, "  quotients:      {}", join(&sequence.ns, " "));
            let _ = writeln!(out, "  delta (recursive) = {}", sequence.delta);
            let _ = writeln!(out, "  delta (closed)    = {closed}");
        }
        Body::Trivial(t) => {
            let _ = writeln!(
                out,
                "trivial new non-gaps for <{};{}>, mu={}{}",
                t.params.a,
                t.params.b,
                t.mu,
                if t.is_default_mu() { " (a-r)" } else { "" }
            );
            let _ = writeln!(out, "  {:>4} {:>4} {:>4} {:>8}", "m", "n(m)", "i", "value");
            for &(m, n) in &t.n_table {
                for i in n..t.params.a {
                    let _ = writeln!(
                        out,
                        "  {m:>4} {n:>4} {i:>4} {:>8}",
                        i * t.params.b - m * t.params.a
                    );
                }
            }
            let _ = writeln!(
                out,
                "  count {} (expected {})",
                t.values.len(),
                t.expected_count()
            );
        }
    }
    out
}

/// Serializes `report`; every format ends with exactly one newline.
pub fn render(report: &Report, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Human => Ok(render_human(report).into_bytes()),
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

/// Writes `report` in `format` to `sink`.
pub fn write_report(report: &Report, format: Format, sink: &mut dyn Write) -> Result<(), CliError> {
    let bytes = render(report, format)?;
    sink.write_all(&bytes).map_err(|e| CliError::Io {
        path: "<output>".into(),
        message: e.to_string(),
    })
}
