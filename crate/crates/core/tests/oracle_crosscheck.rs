//! End-to-end agreement between the enumeration oracle and the exact
//! formulas, on a small grid. The acceptance suite in the CLI crate runs
//! the full desk-scale sweep; this is the fast developer-loop version.

use factstat::classfn::{builtin, expected_value, expected_value_sf, BUILTIN_NAMES};
use factstat::measures::{count_all, count_sf, measure_table, Flavor};
use factstat::oracle::{build_field, census_both, empirical_expectation};
use factstat::{partitions_of, Rat};

#[test]
fn census_matches_count_polynomials() {
    for (p, n) in [(2u32, 1u32), (3, 1), (2, 2)] {
        let field = build_field(p, n).unwrap();
        let q = Rat::from_int(field.q() as i64);
        for d in 1..=4u32 {
            let (all, sf) = census_both(&field, d, 2).unwrap();
            for (lambda, count) in &all.counts {
                assert_eq!(
                    Rat::from_int(*count as i64),
                    count_all(lambda).eval(&q),
                    "all: q={} d={d} {lambda}",
                    field.q()
                );
            }
            for (lambda, count) in &sf.counts {
                assert_eq!(
                    Rat::from_int(*count as i64),
                    count_sf(lambda).eval(&q),
                    "sf: q={} d={d} {lambda}",
                    field.q()
                );
            }
        }
    }
}

#[test]
fn empirical_frequencies_match_measures() {
    let field = build_field(3, 1).unwrap();
    let q = Rat::from_int(3);
    for d in 1..=4u32 {
        let (all, sf) = census_both(&field, d, 1).unwrap();
        let table = measure_table(d, Flavor::All).unwrap();
        for ((lambda, count), (mu, series)) in all.counts.iter().zip(table.entries()) {
            assert_eq!(lambda, mu);
            let frequency = Rat::from_int(*count as i64) / Rat::from_int(all.total() as i64);
            assert_eq!(frequency, series.eval_at_q(&q), "d={d} {lambda}");
        }
        if d >= 2 {
            let table = measure_table(d, Flavor::Squarefree).unwrap();
            for ((lambda, count), (_, series)) in sf.counts.iter().zip(table.entries()) {
                let frequency = Rat::from_int(*count as i64) / Rat::from_int(sf.total() as i64);
                assert_eq!(frequency, series.eval_at_q(&q), "sf d={d} {lambda}");
            }
        }
    }
}

#[test]
fn empirical_expectations_match_series() {
    for (p, n) in [(2u32, 1u32), (2, 2)] {
        let field = build_field(p, n).unwrap();
        let q = Rat::from_int(field.q() as i64);
        for d in 2..=4u32 {
            let (all, sf) = census_both(&field, d, 1).unwrap();
            for name in BUILTIN_NAMES {
                let stat = builtin(name, d).unwrap();
                assert_eq!(
                    empirical_expectation(&stat, &all),
                    expected_value(&stat).eval_at_q(&q),
                    "{name} all q={} d={d}",
                    field.q()
                );
                assert_eq!(
                    empirical_expectation(&stat, &sf),
                    expected_value_sf(&stat).unwrap().eval_at_q(&q),
                    "{name} sf q={} d={d}",
                    field.q()
                );
            }
        }
    }
}

#[test]
fn census_totals() {
    let field = build_field(5, 1).unwrap();
    for d in 1..=4u32 {
        let (all, sf) = census_both(&field, d, 3).unwrap();
        assert_eq!(all.total(), 5u64.pow(d));
        if d >= 2 {
            assert_eq!(sf.total(), 5u64.pow(d) - 5u64.pow(d - 1));
        }
        assert_eq!(all.counts.len(), partitions_of(d).len());
    }
}
