//! JSON, CSV and plain-table renderings of sweep reports.

use serde::Serialize;

use crate::bondage::BondageValue;
use crate::verify::{CaseReport, Status, SweepReport};

/// One case flattened to a row of the tabular export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    pub m: String,
    pub gamma: String,
    pub gamma_oracle: String,
    pub b: String,
    pub b_lo: String,
    pub b_hi: String,
    pub lemma1: String,
    pub lemma2: String,
    pub status: String,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn case_status(c: &CaseReport) -> &'static str {
    if c.failed() {
        if c.degenerate {
            "degenerate-fail"
        } else {
            "fail"
        }
    } else if c.count(Status::Pass) == 0 {
        "skipped"
    } else {
        "pass"
    }
}

impl From<&CaseReport> for Row {
    fn from(c: &CaseReport) -> Self {
        let pred = c.bondage_predicted.as_ref();
        Row {
            n: c.subject.n,
            m: opt(c.subject.m),
            gamma: opt(c.gamma_computed),
            gamma_oracle: opt(c.gamma_oracle),
            b: opt(c.bondage_computed.map(|b: BondageValue| b.to_string())),
            b_lo: opt(pred.map(|p| p.low)),
            b_hi: opt(pred.map(|p| p.high)),
            lemma1: opt(c.lemma1),
            lemma2: opt(c.lemma2),
            status: case_status(c).to_string(),
        }
    }
}

pub fn rows(report: &SweepReport) -> Vec<Row> {
    report.cases.iter().map(Row::from).collect()
}

pub fn to_json(report: &SweepReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn to_csv(report: &SweepReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows(report) {
        w.serialize(row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

pub fn to_table(report: &SweepReport) -> String {
    let header = [
        "n", "m", "gamma", "gamma*", "b", "b_lo", "b_hi", "L1", "L2", "status",
    ];
    let body: Vec<[String; 10]> = rows(report)
        .into_iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.m,
                r.gamma,
                r.gamma_oracle,
                r.b,
                r.b_lo,
                r.b_hi,
                r.lemma1,
                r.lemma2,
                r.status,
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = String::new();
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    for row in &body {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    for c in &report.cases {
        let label = match c.subject.m {
            Some(m) => format!("{} {}x{}", c.subject.family, c.subject.n, m),
            None => format!("{} {}", c.subject.family, c.subject.n),
        };
        for k in c.checks.iter().filter(|k| k.status == Status::Fail) {
            out.push_str(&format!("FAIL {label} {}: {}\n", k.name, k.detail));
        }
        for f in &c.findings {
            out.push_str(&format!("NOTE {label} {}: {}\n", f.name, f.detail));
        }
    }
    let s = &report.summary;
    out.push_str(&format!(
        "cases {}  checks: pass {}  fail {} (degenerate {})  skipped {}\n",
        s.cases, s.pass, s.fail, s.degenerate_fail, s.skipped
    ));
    out
}
