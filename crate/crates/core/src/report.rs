//! Deterministic serialization of classification records and replay checks.
//!
//! JSON is the stable machine contract: a classify run serializes to an
//! array of records with exactly the fields {n, c1, c2, branch, outcome,
//! verdicts, citations}; a verify run to an array of checks; a combined run
//! to an object holding both. CSV flattens one row per (record, verdict)
//! with witnesses as key=value pairs; markdown renders one table per n.

use crate::classify::ClassificationRecord;
use crate::error::{Error, Result};
use crate::verify::{CheckStatus, PaperCheck};
use serde::Serialize;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct CombinedDocument<'a> {
    records: &'a [ClassificationRecord],
    checks: &'a [PaperCheck],
}

/// Serialize records and/or checks in the requested format.
///
/// An empty check list is an error when there are no records (a verify run
/// produced nothing); with records present it is the normal classify case
/// and only warrants a warning.
pub fn emit_report(
    records: &[ClassificationRecord],
    checks: &[PaperCheck],
    format: ReportFormat,
) -> Result<String> {
    if records.is_empty() && checks.is_empty() {
        return Err(Error::EmptyReport(
            "verify output requires at least one check".to_string(),
        ));
    }
    if checks.is_empty() {
        log::warn!("emitting a classification report with no paper checks attached");
    }
    match format {
        ReportFormat::Json => emit_json(records, checks),
        ReportFormat::Csv => emit_csv(records, checks),
        ReportFormat::Markdown => Ok(emit_markdown(records, checks)),
    }
}

fn emit_json(records: &[ClassificationRecord], checks: &[PaperCheck]) -> Result<String> {
    let doc = if checks.is_empty() {
        serde_json::to_string_pretty(records)
    } else if records.is_empty() {
        serde_json::to_string_pretty(checks)
    } else {
        serde_json::to_string_pretty(&CombinedDocument { records, checks })
    };
    Ok(doc.expect("serialization of plain data cannot fail"))
}

fn witness_pairs(record_verdict: &crate::filters::FilterVerdict) -> String {
    record_verdict
        .witnesses
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn emit_csv(records: &[ClassificationRecord], checks: &[PaperCheck]) -> Result<String> {
    let mut sections = Vec::new();
    if !records.is_empty() {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "c1",
            "c2",
            "branch",
            "outcome",
            "filter_id",
            "status",
            "reason",
            "witnesses",
            "citations",
        ])
        .expect("in-memory csv");
        for r in records {
            let branch = serde_variant_name(&r.branch);
            let outcome = format!("{:?}", r.outcome);
            let citations = r.citations.join(";");
            for v in &r.verdicts {
                w.write_record([
                    r.n.to_string(),
                    r.c1.to_string(),
                    r.c2.to_string(),
                    branch.clone(),
                    outcome.clone(),
                    v.filter_id.clone(),
                    v.status.to_string(),
                    v.reason.clone(),
                    witness_pairs(v),
                    citations.clone(),
                ])
                .expect("in-memory csv");
            }
        }
        sections.push(writer_to_string(w));
    }
    if !checks.is_empty() {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "claim_id",
            "location",
            "paper_value",
            "recomputed_value",
            "status",
            "conclusion",
        ])
        .expect("in-memory csv");
        for c in checks {
            w.write_record([
                c.claim_id.clone(),
                c.location.clone(),
                c.paper_value.clone(),
                c.recomputed_value.clone(),
                format!("{:?}", c.status),
                c.conclusion.clone().unwrap_or_default(),
            ])
            .expect("in-memory csv");
        }
        sections.push(writer_to_string(w));
    }
    Ok(sections.join("\n"))
}

fn writer_to_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn serde_variant_name(branch: &crate::classify::Branch) -> String {
    serde_json::to_value(branch)
        .expect("plain enum")
        .as_str()
        .expect("string variant")
        .to_string()
}

fn emit_markdown(records: &[ClassificationRecord], checks: &[PaperCheck]) -> String {
    let mut out = String::new();
    if !records.is_empty() {
        out.push_str("# Classification\n");
        let mut dims: Vec<u32> = records.iter().map(|r| r.n).collect();
        dims.dedup();
        for n in dims {
            let _ = writeln!(out, "\n## Q^{n}\n");
            out.push_str("| c1 | c2 | branch | outcome | filters | citations |\n");
            out.push_str("|---:|---:|---|---|---|---|\n");
            for r in records.iter().filter(|r| r.n == n) {
                let filters = r
                    .verdicts
                    .iter()
                    .map(|v| format!("{}: {}", v.filter_id, v.status))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {:?} | {} | {} |",
                    r.c1,
                    r.c2,
                    serde_variant_name(&r.branch),
                    r.outcome,
                    filters,
                    r.citations.join(", ")
                );
            }
        }
    }
    if !checks.is_empty() {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str("# Paper checks\n\n");
        out.push_str("| claim | location | paper | recomputed | status |\n");
        out.push_str("|---|---|---|---|---|\n");
        for c in checks {
            let status = match c.status {
                CheckStatus::ConclusionAgrees => format!(
                    "ConclusionAgrees({})",
                    c.conclusion.as_deref().unwrap_or("?")
                ),
                other => format!("{other:?}"),
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                c.claim_id, c.location, c.paper_value, c.recomputed_value, status
            );
        }
    }
    out
}
