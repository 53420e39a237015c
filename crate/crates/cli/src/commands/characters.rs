//! `factstat characters`: a character family table, optionally with the
//! irreducible decomposition of every row.

use factstat::classfn::decompose;
use factstat::lie::{shared_family_cached, CharKind};
use factstat::{partitions_of, Partition};
use serde::Serialize;

use crate::output::{csv_table, json_doc, latex_tabular, Format};
use crate::{Ctx, UsageError};

#[derive(Serialize)]
struct CharactersDoc {
    command: &'static str,
    d: u32,
    kind: String,
    order: &'static str,
    partitions: Vec<Partition>,
    rows: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decompositions: Option<Vec<DecompRow>>,
}

#[derive(Serialize)]
struct Row {
    k: usize,
    values: Vec<String>,
}

#[derive(Serialize)]
struct DecompRow {
    k: usize,
    multiplicities: Vec<Multiplicity>,
}

#[derive(Serialize)]
struct Multiplicity {
    mu: Partition,
    mult: String,
}

pub fn run(d: u32, kind_src: &str, with_decompose: bool, ctx: &Ctx) -> crate::CmdResult {
    let kind: CharKind = kind_src.parse().map_err(UsageError)?;
    match kind {
        CharKind::Chi if d < 2 => {
            return Err(UsageError("chi characters require --d >= 2".into()))
        }
        _ if d < 1 => return Err(UsageError("characters require --d >= 1".into())),
        _ => {}
    }

    let family = shared_family_cached(d, kind, ctx.cache_dir.as_deref());
    let parts = partitions_of(d);

    let rows: Vec<Row> = (0..family.num_rows())
        .map(|k| Row {
            k,
            values: family
                .row(k)
                .unwrap()
                .iter()
                .map(|v| v.to_string())
                .collect(),
        })
        .collect();

    let decompositions = with_decompose.then(|| {
        (0..family.num_rows())
            .map(|k| {
                let multiplicities = decompose(&family.row_class_function(k))
                    .into_iter()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(mu, a)| Multiplicity {
                        mu,
                        mult: a.to_string(),
                    })
                    .collect();
                DecompRow { k, multiplicities }
            })
            .collect::<Vec<_>>()
    });

    let text = match ctx.format {
        Format::Json => json_doc(&CharactersDoc {
            command: "characters",
            d,
            kind: kind.to_string(),
            order: "revlex",
            partitions: parts,
            rows,
            decompositions,
        }),
        Format::Csv => {
            let mut out = Vec::new();
            for row in &rows {
                for (lambda, value) in parts.iter().zip(&row.values) {
                    out.push(vec![row.k.to_string(), lambda.to_string(), value.clone()]);
                }
            }
            let mut text = csv_table(&["k", "type", "value"], &out);
            if let Some(decomp) = &decompositions {
                text.push('\n');
                let mut rows = Vec::new();
                for row in decomp {
                    for m in &row.multiplicities {
                        rows.push(vec![row.k.to_string(), m.mu.to_string(), m.mult.clone()]);
                    }
                }
                text.push_str(&csv_table(&["k", "mu", "multiplicity"], &rows));
            }
            text
        }
        Format::Latex => {
            let header = std::iter::once("$k$".to_string())
                .chain(parts.iter().map(|p| format!("${}$", p.exponent_notation())))
                .collect::<Vec<_>>()
                .join(" & ");
            let body: Vec<String> = rows
                .iter()
                .map(|row| {
                    std::iter::once(format!("${}$", row.k))
                        .chain(row.values.iter().map(|v| format!("${v}$")))
                        .collect::<Vec<_>>()
                        .join(" & ")
                })
                .collect();
            let spec = format!("c|{}", "r".repeat(parts.len()));
            latex_tabular(&spec, &header, &body)
        }
    };
    Ok((text, 0))
}
