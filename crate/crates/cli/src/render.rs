//! Rendering of the command results in the three output formats.
//!
//! `table` is aligned human-readable text. `tsv` is tab-separated rows
//! with a header row. `json` emits one JSON object per line (records),
//! so output streams compose with line-oriented tooling.

use serde_json::{json, Value};
use splitkit::oracle::VerificationReport;
use splitkit::splitter::Partition;
use splitkit::tables::{LandmarkTable, PolicyTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Tsv,
    Json,
}

pub fn json_line(value: Value) -> String {
    value.to_string()
}

fn range_json(r: &splitkit::Range) -> Value {
    json!([r.lo(), r.hi()])
}

// ---------------------------------------------------------------------------
// Landmark tables
// ---------------------------------------------------------------------------

pub fn landmark_table(id: &str, t: &LandmarkTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => landmark_grid(id, t),
        OutputFormat::Tsv => {
            let mut out = String::from("label\tposition\n");
            for row in &t.rows {
                out.push_str(&format!("{}\t{}\n", row.label, row.position));
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::new();
            for row in &t.rows {
                out.push_str(&json_line(json!({
                    "table": id,
                    "n": t.n,
                    "label": row.label,
                    "position": row.position,
                })));
                out.push('\n');
            }
            out
        }
    }
}

fn landmark_grid(id: &str, t: &LandmarkTable) -> String {
    let min_col = t.rows.iter().map(|r| r.position).min().unwrap_or(0).min(0);
    let max_col = t.rows.iter().map(|r| r.position).max().unwrap_or(0).max(t.n - 1);
    let label_w = t
        .rows
        .iter()
        .map(|r| r.label.len())
        .max()
        .unwrap_or(0)
        .max("position".len());
    let col_w = (min_col..=max_col)
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1);

    let mut out = format!("table {id} (n = {})\n", t.n);
    out.push_str(&format!("{:<label_w$}", "position"));
    for c in min_col..=max_col {
        out.push_str(&format!("  {c:>col_w$}"));
    }
    out.push('\n');
    for row in &t.rows {
        out.push_str(&format!("{:<label_w$}", row.label));
        for c in min_col..=max_col {
            let mark = if c == row.position { "x" } else { "" };
            out.push_str(&format!("  {mark:>col_w$}"));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Policy tables
// ---------------------------------------------------------------------------

pub fn policy_table(id: &str, t: &PolicyTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let policy_w = t
                .rows
                .iter()
                .map(|r| r.policy.name().len())
                .max()
                .unwrap_or(0)
                .max("policy".len());
            let left_w = t
                .rows
                .iter()
                .map(|r| r.left.len())
                .max()
                .unwrap_or(0)
                .max("left half".len());
            let mut out = format!("table {id} ({})\n", t.title);
            out.push_str(&format!(
                "{:<policy_w$}  {:<left_w$}  {}\n",
                "policy", "left half", "right half"
            ));
            for row in &t.rows {
                out.push_str(&format!(
                    "{:<policy_w$}  {:<left_w$}  {}\n",
                    row.policy.name(),
                    row.left,
                    row.right
                ));
            }
            out
        }
        OutputFormat::Tsv => {
            let mut out = String::from("policy\tleft\tright\n");
            for row in &t.rows {
                out.push_str(&format!("{}\t{}\t{}\n", row.policy, row.left, row.right));
            }
            out
        }
        OutputFormat::Json => {
            let mut out = String::new();
            for row in &t.rows {
                out.push_str(&json_line(json!({
                    "table": id,
                    "policy": row.policy.name(),
                    "left": row.left,
                    "right": row.right,
                })));
                out.push('\n');
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

pub fn partition(p: &Partition, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format!("{p}\n"),
        OutputFormat::Tsv => {
            let excluded = p.excluded.map(|x| x.to_string()).unwrap_or_default();
            format!(
                "policy\tleft_lo\tleft_hi\texcluded\tright_lo\tright_hi\n{}\t{}\t{}\t{}\t{}\t{}\n",
                p.policy,
                p.left.lo(),
                p.left.hi(),
                excluded,
                p.right.lo(),
                p.right.hi()
            )
        }
        OutputFormat::Json => {
            let line = json_line(json!({
                "policy": p.policy.name(),
                "left": range_json(&p.left),
                "excluded": p.excluded,
                "right": range_json(&p.right),
            }));
            format!("{line}\n")
        }
    }
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

pub fn verification_stages(stages: &[(String, VerificationReport)], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            for (name, report) in stages {
                out.push_str(&format!("{name}: {report}\n"));
            }
            let failed: u64 = stages.iter().map(|(_, r)| r.total_failures).sum();
            let checked: u64 = stages.iter().map(|(_, r)| r.checked).sum();
            out.push_str(&format!(
                "overall: {} ({checked} cases, {failed} failures)\n",
                if failed == 0 { "PASS" } else { "FAIL" }
            ));
        }
        OutputFormat::Tsv => {
            out.push_str("stage\tchecked\tfailures\telapsed_ms\tresult\n");
            for (name, report) in stages {
                out.push_str(&format!(
                    "{name}\t{}\t{}\t{}\t{}\n",
                    report.checked,
                    report.total_failures,
                    report.elapsed.as_millis(),
                    if report.passed() { "pass" } else { "fail" }
                ));
            }
        }
        OutputFormat::Json => {
            for (name, report) in stages {
                for failure in &report.failures {
                    out.push_str(&json_line(json!({
                        "record": "failure",
                        "stage": name,
                        "case": failure.case,
                        "expected": failure.expected,
                        "actual": failure.actual,
                    })));
                    out.push('\n');
                }
                out.push_str(&json_line(json!({
                    "record": "stage",
                    "stage": name,
                    "checked": report.checked,
                    "failures": report.total_failures,
                    "elapsed_ms": report.elapsed.as_millis() as u64,
                    "pass": report.passed(),
                })));
                out.push('\n');
            }
        }
    }
    out
}
