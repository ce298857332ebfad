//! Plain aligned tables for human reading.

use belief_core::json::{format_number, JSON_DIGITS};
use belief_core::{BodyOfEvidence, CombinationReport, IntervalMassList, PBox};

/// Two columns, left one padded to its widest entry.
pub fn align(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn body(body: &BodyOfEvidence) -> String {
    let rows: Vec<Vec<String>> = body
        .iter()
        .map(|(s, m)| vec![s.to_string(), format_number(m, JSON_DIGITS)])
        .collect();
    grid(&["set", "mass"], &rows)
}

pub fn report(r: &CombinationReport) -> String {
    let head = align(&[
        ("rule".to_string(), r.rule.name().to_string()),
        ("conflict".to_string(), format_number(r.conflict_mass, JSON_DIGITS)),
    ]);
    format!("{head}\n{}", body(&r.result))
}

pub fn pbox(pb: &PBox, intervals: &IntervalMassList) -> String {
    let domain = pb.domain();
    let points: Vec<Vec<String>> = pb
        .point_bounds()
        .iter()
        .enumerate()
        .map(|(i, (lo, hi))| {
            vec![
                domain[i].clone(),
                format_number(pb.lower()[i], JSON_DIGITS),
                format_number(pb.upper()[i], JSON_DIGITS),
                format_number(*lo, JSON_DIGITS),
                format_number(*hi, JSON_DIGITS),
            ]
        })
        .collect();
    let slices: Vec<Vec<String>> = intervals
        .entries()
        .iter()
        .map(|(iv, p)| {
            vec![
                format!("[{}, {}]", domain[iv.lo], domain[iv.hi]),
                format_number(*p, JSON_DIGITS),
            ]
        })
        .collect();
    format!(
        "{}\n{}",
        grid(&["point", "F_*", "F^*", "p_*", "p^*"], &points),
        grid(&["interval", "probability"], &slices)
    )
}
