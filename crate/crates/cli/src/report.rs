use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use d2kit_core::invariants::{analyze, AnalysisReport, Bound};
use d2kit_core::par;

use crate::corpus::{report_fields, CorpusEntry};

const COLUMNS: [&str; 10] = [
    "file", "order", "h1", "perfect", "def_found", "mu2_lower", "mu2_upper", "tight", "d2n_upper", "status",
];

/// One row of `d2kit report`: the analysis or the error that stopped it.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub file: String,
    pub result: Result<AnalysisReport, String>,
}

fn bound_json(b: &Bound) -> Value {
    json!({"value": b.value, "provenance": {"op": b.provenance.op, "detail": b.provenance.detail}})
}

pub fn analysis_json(r: &AnalysisReport) -> Value {
    json!({
        "order": r.order,
        "h1": r.h1,
        "perfect": r.perfect,
        "def_found": bound_json(&r.def_found),
        "mu2_lower": bound_json(&r.mu2_lower),
        "mu2_upper": bound_json(&r.mu2_upper),
        "tight": r.tight,
        "d2n_upper": r.d2n_upper.as_ref().map(bound_json),
        "notes": r.notes,
    })
}

/// Analyzes every file, in parallel, keeping input order.
pub fn report_rows(files: &[PathBuf], budget: usize, max_cosets: usize) -> Vec<ReportRow> {
    par::map(files, |path: &PathBuf| ReportRow {
        file: file_name(path),
        result: CorpusEntry::load(path)
            .map_err(|e| e.to_string())
            .and_then(|e| analyze(&e.presentation, budget, max_cosets).map_err(|e| format!("error: {e}"))),
    })
}

fn file_name(p: &Path) -> String {
    p.file_name().map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned())
}

impl ReportRow {
    fn cells(&self) -> Vec<String> {
        let mut cells = vec![self.file.clone()];
        match &self.result {
            Ok(r) => {
                cells.extend(report_fields(r).into_iter().map(|(_, v)| v));
                cells.push("ok".to_string());
            }
            Err(e) => {
                cells.extend(std::iter::repeat_n("-".to_string(), COLUMNS.len() - 2));
                cells.push(e.lines().next().unwrap_or("error").to_string());
            }
        }
        cells
    }

    pub fn to_json(&self) -> Value {
        match &self.result {
            Ok(r) => json!({"file": self.file, "status": "ok", "analysis": analysis_json(r)}),
            Err(e) => json!({"file": self.file, "status": "error", "error": e}),
        }
    }
}

/// Column-aligned table with a header row.
pub fn render_table(rows: &[ReportRow]) -> String {
    let mut grid: Vec<Vec<String>> = vec![COLUMNS.iter().map(|c| c.to_string()).collect()];
    grid.extend(rows.iter().map(ReportRow::cells));
    let widths: Vec<usize> = (0..COLUMNS.len())
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_jsonl(rows: &[ReportRow]) -> String {
    rows.iter().map(|r| format!("{}\n", r.to_json())).collect()
}
