//! Output formats shared by all subcommands.
//!
//! JSON documents are serialized from typed structs (never hash maps), so
//! field order is fixed and output bytes are identical across runs and
//! shard counts. The symbolic variable appears in JSON and CSV as the
//! power labels `q^0, q^-1, q^-2, ...`; LaTeX renders series in the
//! `\tfrac{c}{q^k}` table style.

use clap::ValueEnum;
use factstat::{QInvSeries, Rat};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// One series coefficient with its power label.
#[derive(Serialize, Clone)]
pub struct Term {
    pub power: String,
    pub value: String,
}

pub fn power_label(k: usize) -> String {
    if k == 0 {
        "q^0".to_string()
    } else {
        format!("q^-{k}")
    }
}

/// All coefficients of a series as labeled terms (zeros included, so the
/// positions are explicit).
pub fn series_terms(series: &QInvSeries) -> Vec<Term> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Term {
            power: power_label(k),
            value: c.to_string(),
        })
        .collect()
}

/// Series coefficients as plain strings, index = power of `q^-1`.
pub fn series_strings(series: &QInvSeries) -> Vec<String> {
    series.coeffs().iter().map(Rat::to_string).collect()
}

fn latex_term(c: &Rat, k: usize) -> String {
    let neg = c.is_negative();
    let c_abs = if neg { -c } else { c.clone() };
    let num = c_abs.numer().to_string();
    let den = c_abs.denom().to_string();
    let body = match (k, c_abs.is_integer()) {
        (0, true) => num,
        (0, false) => format!("\\tfrac{{{num}}}{{{den}}}"),
        (1, true) => format!("\\tfrac{{{num}}}{{q}}"),
        (1, false) => format!("\\tfrac{{{num}}}{{{den} q}}"),
        (_, true) => format!("\\tfrac{{{num}}}{{q^{{{k}}}}}"),
        (_, false) => format!("\\tfrac{{{num}}}{{{den} q^{{{k}}}}}"),
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// A series as LaTeX in the `\tfrac{c}{q^k}` style, zero terms skipped.
pub fn series_latex(series: &QInvSeries) -> String {
    if series.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in series.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            if c.is_negative() {
                out.push_str(" - ");
                out.push_str(latex_term(&-c, k).as_str());
                continue;
            }
            out.push_str(" + ");
        }
        out.push_str(latex_term(c, k).as_str());
    }
    out
}

/// Quotes a CSV field when it contains a delimiter or quote.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Assembles CSV text from a header and rows.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Serializes a document as pretty JSON with a trailing newline.
pub fn json_doc<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// A one-table LaTeX document body.
pub fn latex_tabular(column_spec: &str, header: &str, rows: &[String]) -> String {
    let mut out = String::new();
    out.push_str(&format!("\\begin{{tabular}}{{{column_spec}}}\n"));
    out.push_str(&format!("    {header}\\\\\n\\hline\n"));
    for row in rows {
        out.push_str(&format!("    {row}\\\\\n"));
    }
    out.push_str("\\end{tabular}\n");
    out
}
