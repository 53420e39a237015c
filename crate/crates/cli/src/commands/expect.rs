//! `factstat expect`: the expected value of a statistic as an exact series
//! in `1/q`, with the per-degree inner products it is assembled from.

use factstat::classfn::{expected_value, expected_value_sf, resolve_stat};
use factstat::lie::{shared_family_cached, CharKind};
use serde::Serialize;

use crate::output::{csv_table, json_doc, latex_tabular, series_latex, series_strings, series_terms, Format, Term};
use crate::{Ctx, UsageError};

#[derive(Serialize)]
struct ExpectDoc {
    command: &'static str,
    d: u32,
    stat: String,
    flavor: &'static str,
    /// Series coefficients, index = power of `q^-1`.
    series: Vec<String>,
    terms: Vec<Term>,
    inner_products: Vec<InnerProduct>,
}

#[derive(Serialize)]
struct InnerProduct {
    k: usize,
    family: &'static str,
    value: String,
}

pub fn run(d: u32, stat_src: &str, squarefree: bool, ctx: &Ctx) -> crate::CmdResult {
    if d < 1 {
        return Err(UsageError("expect requires --d >= 1".into()));
    }
    let stat = resolve_stat(stat_src, d)?;

    let kind = if squarefree { CharKind::Chi } else { CharKind::Psi };
    if !(squarefree && d < 2) {
        // warm the in-process table from the disk cache if one is configured
        shared_family_cached(d, kind, ctx.cache_dir.as_deref());
    }

    let (series, family_name) = if squarefree {
        (expected_value_sf(&stat)?, "chi")
    } else {
        (expected_value(&stat), "psi")
    };

    // coefficient k of the squarefree series is (-1)^k <P, chi^k>; undo the
    // sign so the inner products themselves are reported
    let inner_products: Vec<InnerProduct> = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let value = if squarefree && k % 2 == 1 { -c } else { c.clone() };
            InnerProduct {
                k,
                family: family_name,
                value: value.to_string(),
            }
        })
        .collect();

    let flavor = if squarefree { "squarefree" } else { "all" };
    let text = match ctx.format {
        Format::Json => json_doc(&ExpectDoc {
            command: "expect",
            d,
            stat: stat_src.to_string(),
            flavor,
            series: series_strings(&series),
            terms: series_terms(&series),
            inner_products,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| vec![crate::output::power_label(k), c.to_string()])
                .collect();
            csv_table(&["power", "value"], &rows)
        }
        Format::Latex => {
            let e = if squarefree {
                format!("$E^{{\\mathrm{{sf}}}}_{{{d}}}$")
            } else {
                format!("$E_{{{d}}}$")
            };
            let row = format!("${d}$ & ${}$", series_latex(&series));
            latex_tabular("c|l", &format!("$d$ & {e}"), &[row])
        }
    };
    Ok((text, 0))
}
