//! `factstat stable`: scan `<P_d, psi_d^k>` for increasing `d` until the
//! values settle.
//!
//! Non-stabilization within `--d-max` is an ordinary outcome reported in
//! the `status` field, not an error.

use factstat::classfn::{parse_stat, stable_inner, StableOutcome, StatExpr};
use factstat::lie::{shared_family_cached, CharKind};
use serde::Serialize;

use crate::output::{csv_table, json_doc, latex_tabular, Format};
use crate::{Ctx, UsageError};

#[derive(Serialize)]
struct StableDoc {
    command: &'static str,
    stat: String,
    k: u32,
    d_max: u32,
    criterion: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    onset_d: Option<u32>,
    scan: Vec<ScanPoint>,
}

#[derive(Serialize)]
struct ScanPoint {
    d: u32,
    value: String,
}

/// Builtins that are genuine character polynomials, as expressions. `sgn`
/// and `even_type` depend on the degree in a way no fixed expression in
/// the part-counts captures, so they are rejected for this command.
fn char_poly_source(src: &str) -> Result<String, UsageError> {
    match src {
        "trivial" => Ok("1".to_string()),
        "quad_excess" => Ok("binom(x1,2) - x2".to_string()),
        "num_roots" => Ok("x1".to_string()),
        "sgn" | "even_type" => Err(UsageError(format!(
            "'{src}' is not a character polynomial; stabilization scans need one"
        ))),
        other => Ok(other.to_string()),
    }
}

pub fn run(stat_src: &str, k: u32, d_max: u32, ctx: &Ctx) -> crate::CmdResult {
    let expr: StatExpr = parse_stat(&char_poly_source(stat_src)?)?;

    // warm the in-process tables from disk before the scan
    if ctx.cache_dir.is_some() {
        for d in (k + 1)..=d_max {
            shared_family_cached(d, CharKind::Psi, ctx.cache_dir.as_deref());
        }
    }

    let report = stable_inner(&expr, k, d_max)?;
    let (status, value, onset_d) = match &report.outcome {
        StableOutcome::Stabilized { value, onset_d } => {
            ("stabilized", Some(value.to_string()), Some(*onset_d))
        }
        StableOutcome::NotStabilized => ("not-stabilized", None, None),
    };
    let scan: Vec<ScanPoint> = report
        .values
        .iter()
        .map(|(d, v)| ScanPoint {
            d: *d,
            value: v.to_string(),
        })
        .collect();

    let text = match ctx.format {
        Format::Json => json_doc(&StableDoc {
            command: "stable",
            stat: stat_src.to_string(),
            k,
            d_max,
            criterion: report.criterion,
            status,
            value,
            onset_d,
            scan,
        }),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = scan
                .iter()
                .map(|p| vec![p.d.to_string(), p.value.clone()])
                .collect();
            rows.push(vec!["status".to_string(), status.to_string()]);
            csv_table(&["d", "value"], &rows)
        }
        Format::Latex => {
            let rows: Vec<String> = scan
                .iter()
                .map(|p| format!("${}$ & ${}$", p.d, p.value))
                .collect();
            let header = format!("$d$ & $\\langle P, \\psi_d^{{{k}}}\\rangle$");
            latex_tabular("c|l", &header, &rows)
        }
    };
    Ok((text, 0))
}
