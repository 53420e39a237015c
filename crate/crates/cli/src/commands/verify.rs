//! `factstat verify`: the oracle-versus-formula equality driver.
//!
//! For every requested degree the formula side is checked internally
//! (regular character constraint, measure normalization, telescope
//! consistency, dual expectation routes), and for every `(q, d)` pair the
//! enumeration oracle recounts everything for exact comparison. Any
//! mismatch turns the exit code to 1; the report lists every comparison.

use factstat::classfn::{
    expected_value, expected_value_sf, expected_value_sf_via_measure, expected_value_via_measure,
    resolve_stat, ClassFunction, BUILTIN_NAMES,
};
use factstat::lie::{regular_check, shared_family_cached, CharKind};
use factstat::measures::{count_all, count_sf, measure_table, Flavor};
use factstat::oracle::{build_field, census_both, empirical_expectation, Census};
use factstat::{QInvSeries, Rat};
use serde::Serialize;

use crate::output::{csv_table, json_doc, latex_tabular, Format};
use crate::{Ctx, UsageError};

#[derive(Serialize)]
struct VerifyDoc {
    command: &'static str,
    d_max: u32,
    q_list: Vec<u64>,
    stats: Vec<String>,
    checks: Vec<Check>,
    passed: usize,
    failed: usize,
    all_pass: bool,
}

#[derive(Serialize, Clone)]
struct Check {
    name: &'static str,
    d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stat: Option<String>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

struct Reporter {
    checks: Vec<Check>,
}

impl Reporter {
    fn record(
        &mut self,
        name: &'static str,
        d: u32,
        q: Option<u64>,
        stat: Option<&str>,
        failure: Option<String>,
    ) {
        self.checks.push(Check {
            name,
            d,
            q,
            stat: stat.map(str::to_string),
            status: if failure.is_none() { "pass" } else { "fail" },
            detail: failure,
        });
    }
}

fn series_equal(name: &'static str, a: &QInvSeries, b: &QInvSeries) -> Option<String> {
    (a != b).then(|| format!("{name}: {a} vs {b}"))
}

fn census_against_counts(
    census: &Census,
    count_poly: impl Fn(&factstat::Partition) -> factstat::QPoly,
) -> Option<String> {
    let q = Rat::from_int(census.q as i64);
    for (lambda, count) in &census.counts {
        let expected = count_poly(lambda).eval(&q);
        if Rat::from_int(*count as i64) != expected {
            return Some(format!(
                "type {lambda}: oracle {count} vs formula {expected}"
            ));
        }
    }
    None
}

pub fn run(d_max: u32, q_list: &[u64], stats: &[String], ctx: &Ctx) -> crate::CmdResult {
    if d_max < 1 {
        return Err(UsageError("verify requires --d-max >= 1".into()));
    }
    let stat_names: Vec<String> = if stats.is_empty() {
        BUILTIN_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        stats.to_vec()
    };
    // resolve once up front so typos fail fast as usage errors
    for name in &stat_names {
        resolve_stat(name, 1)?;
    }
    let fields = q_list
        .iter()
        .map(|&q| {
            let (p, n) = super::prime_power(q)?;
            Ok(build_field(p, n)?)
        })
        .collect::<Result<Vec<_>, UsageError>>()?;

    let mut reporter = Reporter { checks: Vec::new() };

    for d in 1..=d_max {
        let stats_at_d: Vec<(String, ClassFunction)> = stat_names
            .iter()
            .map(|name| Ok((name.clone(), resolve_stat(name, d)?)))
            .collect::<Result<_, UsageError>>()?;

        // formula-side self-consistency
        shared_family_cached(d, CharKind::Psi, ctx.cache_dir.as_deref());
        let regular = regular_check(d);
        reporter.record(
            "regular-representation",
            d,
            None,
            None,
            (!regular.pass).then(|| format!("{:?}", regular.failures)),
        );

        let all_table = measure_table(d, Flavor::All)?;
        reporter.record(
            "measure-normalization-all",
            d,
            None,
            None,
            series_equal("total", &all_table.total(), &QInvSeries::one()),
        );
        if d >= 2 {
            shared_family_cached(d, CharKind::Chi, ctx.cache_dir.as_deref());
            let sf_table = measure_table(d, Flavor::Squarefree)?;
            reporter.record(
                "measure-normalization-squarefree",
                d,
                None,
                None,
                series_equal("total", &sf_table.total(), &QInvSeries::one()),
            );
        }

        for (name, stat) in &stats_at_d {
            reporter.record(
                "dual-route-expectation-all",
                d,
                None,
                Some(name),
                series_equal(
                    "character route vs measure route",
                    &expected_value(stat),
                    &expected_value_via_measure(stat),
                ),
            );
            if d >= 2 {
                reporter.record(
                    "dual-route-expectation-squarefree",
                    d,
                    None,
                    Some(name),
                    series_equal(
                        "character route vs measure route",
                        &expected_value_sf(stat)?,
                        &expected_value_sf_via_measure(stat)?,
                    ),
                );
            }
        }

        // oracle side
        for field in &fields {
            let q = field.q();
            let (all, sf) = census_both(field, d, ctx.shards)?;
            reporter.record(
                "census-counts-all",
                d,
                Some(q),
                None,
                census_against_counts(&all, count_all),
            );
            reporter.record(
                "census-counts-squarefree",
                d,
                Some(q),
                None,
                census_against_counts(&sf, count_sf),
            );

            let q_rat = Rat::from_int(q as i64);
            for (name, stat) in &stats_at_d {
                let empirical = empirical_expectation(stat, &all);
                let exact = expected_value(stat).eval_at_q(&q_rat);
                reporter.record(
                    "expectation-all",
                    d,
                    Some(q),
                    Some(name),
                    (empirical != exact).then(|| format!("oracle {empirical} vs series {exact}")),
                );
                if d >= 2 {
                    let empirical = empirical_expectation(stat, &sf);
                    let exact = expected_value_sf(stat)?.eval_at_q(&q_rat);
                    reporter.record(
                        "expectation-squarefree",
                        d,
                        Some(q),
                        Some(name),
                        (empirical != exact)
                            .then(|| format!("oracle {empirical} vs series {exact}")),
                    );
                }
            }
        }
    }

    let failed = reporter
        .checks
        .iter()
        .filter(|c| c.status == "fail")
        .count();
    let passed = reporter.checks.len() - failed;
    let all_pass = failed == 0;

    let text = match ctx.format {
        Format::Json => json_doc(&VerifyDoc {
            command: "verify",
            d_max,
            q_list: q_list.to_vec(),
            stats: stat_names,
            checks: reporter.checks,
            passed,
            failed,
            all_pass,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reporter
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.to_string(),
                        c.d.to_string(),
                        c.q.map_or_else(String::new, |q| q.to_string()),
                        c.stat.clone().unwrap_or_default(),
                        c.status.to_string(),
                        c.detail.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_table(&["check", "d", "q", "stat", "status", "detail"], &rows)
        }
        Format::Latex => {
            let rows: Vec<String> = reporter
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "{} & {} & {} & {} & {}",
                        c.name.replace('_', "\\_"),
                        c.d,
                        c.q.map_or_else(|| "--".into(), |q| q.to_string()),
                        c.stat.clone().unwrap_or_else(|| "--".into()).replace('_', "\\_"),
                        c.status
                    )
                })
                .collect();
            latex_tabular("l|c|c|l|c", "check & $d$ & $q$ & stat & status", &rows)
        }
    };
    Ok((text, if all_pass { 0 } else { 1 }))
}
