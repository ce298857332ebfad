//! JSON documents for bodies of evidence, combination reports, p-boxes and
//! hypergraphs.
//!
//! Body format:
//!
//! ```json
//! {"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.6}, {"set": "*", "mass": 0.4}]}
//! ```
//!
//! `"*"` denotes the whole frame and `[]` the empty set. Output is
//! deterministic: focal sets appear in bit-pattern order and numbers are
//! written with 17 significant digits.

use crate::combine::CombinationReport;
use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame, Hypergraph};
use crate::imprecise::{IntervalMassList, PBox};
use crate::mass::BodyOfEvidence;
use serde::Deserialize;
use std::fmt::Write as _;

/// Significant digits for masses and probabilities in JSON output.
pub const JSON_DIGITS: usize = 17;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SetSpec {
    Labels(Vec<String>),
    Symbol(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MassEntry {
    set: SetSpec,
    mass: f64,
}

#[derive(Debug, Deserialize)]
struct BodyDoc {
    frame: Vec<String>,
    masses: Vec<MassEntry>,
}

#[derive(Debug, Deserialize)]
struct PBoxDoc {
    domain: Vec<String>,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

#[derive(Debug, Deserialize)]
struct HypergraphDoc {
    frame: Vec<String>,
    edges: Vec<Vec<String>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn resolve_set(frame: &Frame, spec: &SetSpec) -> Result<FocalSet> {
    match spec {
        SetSpec::Labels(labels) => frame.subset(labels),
        SetSpec::Symbol(s) if s == "*" => Ok(frame.full_set()),
        SetSpec::Symbol(s) => Err(Error::Parse(format!("set must be a label array or \"*\", found {s:?}"))),
    }
}

fn body_from_doc(doc: BodyDoc) -> Result<BodyOfEvidence> {
    let frame = Frame::new(doc.frame)?;
    let entries = doc
        .masses
        .iter()
        .map(|e| Ok((resolve_set(&frame, &e.set)?, e.mass)))
        .collect::<Result<Vec<_>>>()?;
    BodyOfEvidence::new(&frame, entries)
}

/// Parses a body document. A combination report is accepted too, in which
/// case its `"result"` body is returned.
pub fn parse_body(text: &str) -> Result<BodyOfEvidence> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
    let value = match value {
        serde_json::Value::Object(mut obj) if obj.contains_key("result") && !obj.contains_key("frame") => {
            obj.remove("result").unwrap_or_default()
        }
        other => other,
    };
    body_from_doc(serde_json::from_value(value).map_err(parse_err)?)
}

pub fn parse_pbox(text: &str) -> Result<PBox> {
    let doc: PBoxDoc = serde_json::from_str(text).map_err(parse_err)?;
    PBox::new(doc.domain, doc.lower, doc.upper)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphDoc = serde_json::from_str(text).map_err(parse_err)?;
    let frame = Frame::new(doc.frame)?;
    Hypergraph::from_labels(&frame, doc.edges)
}

/// Formats like C's `%.{digits}g`: `digits` significant digits, trailing
/// zeros dropped, exponent form outside `[1e-4, 10^digits)`. Non-finite
/// values become `null`.
pub fn format_number(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return "null".into();
    }
    if v == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_fraction(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn label_array<'a>(labels: impl IntoIterator<Item = &'a str>) -> String {
    let items: Vec<String> = labels.into_iter().map(quote).collect();
    format!("[{}]", items.join(", "))
}

fn set_spec(set: &FocalSet) -> String {
    if set.is_full() {
        quote("*")
    } else {
        label_array(set.members())
    }
}

fn body_lines(body: &BodyOfEvidence, indent: &str, out: &mut String) {
    let frame = label_array(body.frame().labels().iter().map(String::as_str));
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "{indent}  \"frame\": {frame},");
    if body.is_empty() {
        let _ = writeln!(out, "{indent}  \"masses\": []");
    } else {
        let _ = writeln!(out, "{indent}  \"masses\": [");
        let n = body.len();
        for (k, (set, m)) in body.iter().enumerate() {
            let comma = if k + 1 < n { "," } else { "" };
            let _ = writeln!(
                out,
                "{indent}    {{\"set\": {}, \"mass\": {}}}{comma}",
                set_spec(&set),
                format_number(m, JSON_DIGITS)
            );
        }
        let _ = writeln!(out, "{indent}  ]");
    }
    let _ = write!(out, "{indent}}}");
}

pub fn write_body(body: &BodyOfEvidence) -> String {
    let mut out = String::new();
    body_lines(body, "", &mut out);
    out.push('\n');
    out
}

pub fn write_report(report: &CombinationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"rule\": {},", quote(report.rule.name()));
    let _ = writeln!(
        out,
        "  \"conflict_mass\": {},",
        format_number(report.conflict_mass, JSON_DIGITS)
    );
    out.push_str("  \"result\": ");
    body_lines(&report.result, "  ", &mut out);
    out.push_str("\n}\n");
    out
}

pub fn write_pbox(pb: &PBox) -> String {
    let nums = |v: &[f64]| {
        let items: Vec<String> = v.iter().map(|x| format_number(*x, JSON_DIGITS)).collect();
        format!("[{}]", items.join(", "))
    };
    format!(
        "{{\n  \"domain\": {},\n  \"lower\": {},\n  \"upper\": {}\n}}\n",
        label_array(pb.domain().iter().map(String::as_str)),
        nums(pb.lower()),
        nums(pb.upper())
    )
}

pub fn write_intervals(im: &IntervalMassList) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(
        out,
        "  \"domain\": {},",
        label_array(im.domain().iter().map(String::as_str))
    );
    let _ = writeln!(out, "  \"intervals\": [");
    let n = im.entries().len();
    for (k, (iv, p)) in im.entries().iter().enumerate() {
        let comma = if k + 1 < n { "," } else { "" };
        let _ = writeln!(
            out,
            "    {{\"from\": {}, \"to\": {}, \"probability\": {}}}{comma}",
            quote(&im.domain()[iv.lo]),
            quote(&im.domain()[iv.hi]),
            format_number(*p, JSON_DIGITS)
        );
    }
    out.push_str("  ]\n}\n");
    out
}
