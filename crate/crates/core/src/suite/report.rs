//! Report rendering: markdown for reading, JSON and CSV for tools.

use std::fmt::Write as _;

use serde::Serialize;

use super::verify::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected md, json or csv)")),
        }
    }
}

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Markdown => to_markdown(report),
        Format::Json => to_json(report),
        Format::Csv => to_csv(report),
    }
}

pub fn to_json(report: &VerificationReport) -> String {
    serde_json::to_string_pretty(report).expect("reports always serialize")
}

pub fn from_json(text: &str) -> Result<VerificationReport, serde_json::Error> {
    serde_json::from_str(text)
}

fn set_text(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn to_markdown(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Verification: {}\n", report.section);
    out.push_str("| section | label | expression | order | i | J | expected J | normal abelian types | result | ms |\n");
    out.push_str("|---|---|---|---:|---:|---:|---:|---|---|---:|\n");
    for r in &report.rows {
        let expected = r.expected_jordan.map_or("-".to_string(), |j| j.to_string());
        let _ = writeln!(
            out,
            "| {} | {} | `{}` | {} | {} | {} | {} | {} | {} | {} |",
            r.section,
            r.label,
            r.expr,
            r.order,
            r.i,
            r.jordan,
            expected,
            r.profile.join(", "),
            mark(r.pass),
            r.millis
        );
    }
    let notes: Vec<_> = report.rows.iter().filter(|r| !r.notes.is_empty()).collect();
    if !notes.is_empty() {
        out.push_str("\nNotes:\n\n");
        for r in notes {
            let _ = writeln!(out, "- {}: {}", r.label, r.notes.join("; "));
        }
    }
    if !report.sets.is_empty() {
        out.push_str("\n| section | set | relation | computed | expected | result |\n|---|---|---|---|---|---|\n");
        for s in &report.sets {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                s.section,
                s.name,
                format!("{:?}", s.relation).to_lowercase(),
                set_text(&s.computed),
                set_text(&s.expected),
                mark(s.pass)
            );
        }
    }
    let _ = writeln!(
        out,
        "\nstatus: {}",
        if report.passed() { "pass" } else { "fail" }
    );
    out
}

#[derive(Serialize)]
struct CsvRow<'a> {
    section: &'a str,
    label: &'a str,
    expr: &'a str,
    tag: String,
    order: usize,
    i: usize,
    #[serde(rename = "J")]
    jordan: usize,
    #[serde(rename = "expectedJ")]
    expected: String,
    profile: String,
    pass: bool,
    millis: u64,
}

/// One line per row. Aggregate sets are left to the other formats.
pub fn to_csv(report: &VerificationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &report.rows {
        w.serialize(CsvRow {
            section: r.section.name(),
            label: &r.label,
            expr: &r.expr,
            tag: r.tag.to_string(),
            order: r.order,
            i: r.i,
            jordan: r.jordan,
            expected: r.expected_jordan.map_or(String::new(), |j| j.to_string()),
            profile: r.profile.join(" "),
            pass: r.pass,
            millis: r.millis,
        })
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}
