//! `factstat measure`: the splitting-measure table at degree `d`.

use factstat::measures::{measure_table, Flavor};
use factstat::{Partition, Rat};
use serde::Serialize;

use crate::output::{csv_table, json_doc, latex_tabular, series_latex, series_strings, Format};
use crate::Ctx;

#[derive(Serialize)]
struct MeasureDoc {
    command: &'static str,
    d: u32,
    flavor: &'static str,
    q: String,
    entries: Vec<Entry>,
}

#[derive(Serialize)]
struct Entry {
    #[serde(rename = "type")]
    type_: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    series: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

pub fn run(d: u32, q: Option<u64>, squarefree: bool, ctx: &Ctx) -> crate::CmdResult {
    let flavor = if squarefree {
        Flavor::Squarefree
    } else {
        Flavor::All
    };
    let table = measure_table(d, flavor)?;
    if let Some(q) = q {
        super::prime_power(q)?; // measures only make sense at prime powers
    }

    let entries: Vec<Entry> = table
        .entries()
        .iter()
        .map(|(lambda, series)| match q {
            None => Entry {
                type_: lambda.clone(),
                series: Some(series_strings(series)),
                value: None,
            },
            Some(q) => Entry {
                type_: lambda.clone(),
                series: None,
                value: Some(series.eval_at_q(&Rat::from_int(q as i64)).to_string()),
            },
        })
        .collect();

    let text = match ctx.format {
        Format::Json => {
            let doc = MeasureDoc {
                command: "measure",
                d,
                flavor: flavor.as_str(),
                q: q.map_or_else(|| "symbolic".to_string(), |q| q.to_string()),
                entries,
            };
            json_doc(&doc)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            match q {
                None => {
                    for (lambda, series) in table.entries() {
                        for (k, c) in series.coeffs().iter().enumerate() {
                            rows.push(vec![
                                lambda.to_string(),
                                crate::output::power_label(k),
                                c.to_string(),
                            ]);
                        }
                    }
                    csv_table(&["type", "power", "value"], &rows)
                }
                Some(q) => {
                    for (lambda, series) in table.entries() {
                        rows.push(vec![
                            lambda.to_string(),
                            series.eval_at_q(&Rat::from_int(q as i64)).to_string(),
                        ]);
                    }
                    csv_table(&["type", &format!("value_at_q_{q}")], &rows)
                }
            }
        }
        Format::Latex => {
            let rows: Vec<String> = table
                .entries()
                .iter()
                .map(|(lambda, series)| match q {
                    None => format!("${}$ & ${}$", lambda.exponent_notation(), series_latex(series)),
                    Some(q) => {
                        let v = series.eval_at_q(&Rat::from_int(q as i64));
                        format!("${}$ & ${v}$", lambda.exponent_notation())
                    }
                })
                .collect();
            let header = format!("$\\lambda$ & $\\nu_{{{d}}}(\\lambda)$");
            latex_tabular("c|l", &header, &rows)
        }
    };
    Ok((text, 0))
}
