//! The result document every command prints, as JSON or as plain text.

use std::fmt::Write as _;
use std::ops::Bound;

use convex1d::reconstruct::certificate::EdgeWitness;
use convex1d::{CountTable, Geometry, Interval1D, IntervalArrangement, RejectionCertificate, SensorMatrix, SensorSet};
use num_rational::BigRational;
use serde::Serialize;

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Feasible,
    Infeasible,
    Unsupported,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Feasible => 0,
            Status::Infeasible => 1,
            Status::Unsupported => 2,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ResultDocument {
    pub command: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Rows of the sensor matrix, one 0/1 string per neuron.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<ArrangementDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<CountRow>>,
}

impl ResultDocument {
    pub fn new(command: &'static str, status: Status) -> Self {
        ResultDocument {
            command,
            status,
            regime: None,
            message: None,
            matrix: None,
            arrangement: None,
            certificate: None,
            counts: None,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ArrangementDoc {
    pub geometry: &'static str,
    pub intervals: Vec<IntervalDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sensors: Option<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct IntervalDoc {
    /// `empty`, `whole` or `proper`.
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo_closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi_closed: Option<bool>,
}

#[derive(Serialize, Debug)]
pub struct CertificateDoc {
    /// Ordered pairs of codewords; consecutive pairs (cyclically) are
    /// adjacent in the incompatibility graph.
    pub odd_cycle: Vec<[String; 2]>,
    pub witnesses: Vec<WitnessDoc>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "lowercase")]
pub enum WitnessDoc {
    Reversal,
    Row(usize),
}

#[derive(Serialize, Debug)]
pub struct CountRow {
    pub n: usize,
    /// Exact counts by number of rows `k`, as decimal strings.
    pub by_k: Vec<String>,
    pub total: String,
}

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn geometry_name(g: Geometry) -> &'static str {
    match g {
        Geometry::Line => "line",
        Geometry::Circle => "circle",
    }
}

pub fn matrix_doc(m: &SensorMatrix) -> Vec<String> {
    m.rows().iter().map(ToString::to_string).collect()
}

fn bound_doc(b: &Bound<BigRational>, infinite: &str) -> (String, bool) {
    match b {
        Bound::Included(v) => (rational_string(v), true),
        Bound::Excluded(v) => (rational_string(v), false),
        Bound::Unbounded => (infinite.to_string(), false),
    }
}

pub fn arrangement_doc(arr: &IntervalArrangement, sensors: Option<&SensorSet>) -> ArrangementDoc {
    let intervals = arr
        .intervals()
        .iter()
        .map(|iv| match iv {
            Interval1D::Empty => IntervalDoc { kind: "empty", lo: None, hi: None, lo_closed: None, hi_closed: None },
            Interval1D::Whole => IntervalDoc { kind: "whole", lo: None, hi: None, lo_closed: None, hi_closed: None },
            Interval1D::Proper { lo, hi } => {
                let (lo, lo_closed) = bound_doc(lo, "-inf");
                let (hi, hi_closed) = bound_doc(hi, "inf");
                IntervalDoc {
                    kind: "proper",
                    lo: Some(lo),
                    hi: Some(hi),
                    lo_closed: Some(lo_closed),
                    hi_closed: Some(hi_closed),
                }
            }
        })
        .collect();
    ArrangementDoc {
        geometry: geometry_name(arr.geometry()),
        intervals,
        sensors: sensors.map(|s| s.positions().iter().map(rational_string).collect()),
    }
}

pub fn certificate_doc(cert: &RejectionCertificate) -> CertificateDoc {
    CertificateDoc {
        odd_cycle: cert.odd_cycle.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        witnesses: cert
            .witnesses
            .iter()
            .map(|w| match w {
                EdgeWitness::Reversal => WitnessDoc::Reversal,
                EdgeWitness::Row(r) => WitnessDoc::Row(*r),
            })
            .collect(),
    }
}

pub fn counts_doc(t: &CountTable) -> Vec<CountRow> {
    (0..=t.max_n())
        .map(|n| CountRow {
            n,
            by_k: t.row(n).iter().map(ToString::to_string).collect(),
            total: t.total(n).to_string(),
        })
        .collect()
}

fn interval_text(iv: &IntervalDoc) -> String {
    match (iv.kind, &iv.lo, &iv.hi) {
        ("proper", Some(lo), Some(hi)) => {
            let open = if iv.lo_closed == Some(true) { '[' } else { '(' };
            let close = if iv.hi_closed == Some(true) { ']' } else { ')' };
            format!("{open}{lo}, {hi}{close}")
        }
        (kind, _, _) => kind.to_string(),
    }
}

/// Plain-text rendering. Counts are printed as a tab-separated table.
pub fn render_text(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let status = match doc.status {
        Status::Feasible => "feasible",
        Status::Infeasible => "infeasible",
        Status::Unsupported => "unsupported",
    };
    if doc.counts.is_none() {
        writeln!(out, "status: {status}").unwrap();
    }
    if let Some(r) = &doc.regime {
        writeln!(out, "regime: {r}").unwrap();
    }
    if let Some(m) = &doc.message {
        writeln!(out, "message: {m}").unwrap();
    }
    if let Some(rows) = &doc.matrix {
        writeln!(out, "matrix:").unwrap();
        for r in rows {
            writeln!(out, "  {r}").unwrap();
        }
    }
    if let Some(a) = &doc.arrangement {
        writeln!(out, "arrangement ({}):", a.geometry).unwrap();
        for (i, iv) in a.intervals.iter().enumerate() {
            writeln!(out, "  {}: {}", i + 1, interval_text(iv)).unwrap();
        }
        if let Some(s) = &a.sensors {
            writeln!(out, "sensors: {}", s.join(" ")).unwrap();
        }
    }
    if let Some(c) = &doc.certificate {
        writeln!(out, "odd cycle:").unwrap();
        for (pair, w) in c.odd_cycle.iter().zip(&c.witnesses) {
            let why = match w {
                WitnessDoc::Reversal => "reversal".to_string(),
                WitnessDoc::Row(r) => format!("row {r}"),
            };
            writeln!(out, "  ({}, {})  next edge: {why}", pair[0], pair[1]).unwrap();
        }
    }
    if let Some(rows) = &doc.counts {
        let width = rows.first().map_or(0, |r| r.by_k.len());
        write!(out, "n").unwrap();
        for k in 0..width {
            write!(out, "\tk={k}").unwrap();
        }
        writeln!(out, "\ttotal").unwrap();
        for r in rows {
            writeln!(out, "{}\t{}\t{}", r.n, r.by_k.join("\t"), r.total).unwrap();
        }
    }
    out
}

pub fn render_json(doc: &ResultDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
