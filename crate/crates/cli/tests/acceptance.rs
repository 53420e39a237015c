//! Acceptance suite: one test per exit criterion, each printing a pass
//! line (run with `--nocapture` to see them). All equality checks are
//! exact; the stated wall-clock budgets are asserted too.

use std::process::Command;
use std::time::{Duration, Instant};

use factstat::classfn::{
    builtin, character_multiplicities, decompose, expected_value, expected_value_sf, hook_dim,
    parse_stat, reconstruct, stable_inner, StableOutcome, BUILTIN_NAMES,
};
use factstat::lie::{regular_check, shared_family, CharKind};
use factstat::measures::{count_all, count_sf, splitting_measure};
use factstat::oracle::{build_field, census_both, empirical_expectation};
use factstat::{partitions_of, Partition, QInvSeries, Rat};

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_factstat"))
        .args(args)
        .output()
        .expect("spawn factstat");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn ints(values: &[i64]) -> QInvSeries {
    QInvSeries::new(values.iter().map(|&v| Rat::from_int(v)).collect())
}

#[test]
fn acceptance_01_expected_quadratic_excess_tables() {
    let expected: &[(u32, &[i64])] = &[
        (3, &[0, 2, 1]),
        (4, &[0, 2, 2, 2]),
        (5, &[0, 2, 2, 4, 2]),
        (6, &[0, 2, 2, 4, 4, 3]),
        (10, &[0, 2, 2, 4, 4, 6, 6, 8, 8, 5]),
    ];
    for (d, coeffs) in expected {
        let started = Instant::now();
        let (stdout, code) = run_cli(&[
            "expect",
            "--d",
            &d.to_string(),
            "--stat",
            "quad_excess",
        ]);
        let elapsed = started.elapsed();
        assert_eq!(code, 0);
        assert!(
            elapsed < Duration::from_secs(1),
            "expect --d {d} took {elapsed:?}"
        );
        let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        let series: Vec<String> = doc["series"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        let want: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        assert_eq!(series, want, "E_{d}(quad_excess)");
    }
    println!("criterion 1 (quadratic excess tables d=3,4,5,6,10): PASS");
}

#[test]
fn acceptance_02_irreducible_sextic_probability() {
    let measure = splitting_measure(&Partition::new(vec![6]));
    let sixth = Rat::ratio(1, 6);
    let expected = QInvSeries::new(vec![
        sixth.clone(),
        Rat::zero(),
        Rat::zero(),
        -&sixth,
        -&sixth,
        sixth,
    ]);
    assert_eq!(measure, expected);
    println!("criterion 2 (irreducible probability at degree 6): PASS");
}

#[test]
fn acceptance_03_regular_representation_constraint() {
    let started = Instant::now();
    for d in 1..=12u32 {
        let check = regular_check(d);
        assert!(check.pass, "regular check failed at d={d}: {:?}", check.failures);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 3 (regular representation constraint, d <= 12): PASS");
}

#[test]
fn acceptance_04_sign_placement_and_even_type() {
    for d in 1..=12u32 {
        let sgn = builtin("sgn", d).unwrap();
        let family = shared_family(d, CharKind::Psi);
        for k in 0..family.num_rows() {
            let inner = sgn.inner(&family.row_class_function(k)).unwrap();
            let expected = if k as u32 == d / 2 { Rat::one() } else { Rat::zero() };
            assert_eq!(inner, expected, "<sgn, psi_{d}^{k}>");
        }
        let et = expected_value(&builtin("even_type", d).unwrap());
        let mut want = QInvSeries::monomial(Rat::ratio(1, 2), (d / 2) as usize);
        want = want + QInvSeries::constant(Rat::ratio(1, 2));
        assert_eq!(et, want, "E_{d}(even_type)");
    }
    println!("criterion 4 (sign placement and even-type bias, d <= 12): PASS");
}

#[test]
fn acceptance_05_roots_formula_and_standard_placement() {
    for d in 1..=12u32 {
        let roots = expected_value(&builtin("num_roots", d).unwrap());
        assert_eq!(roots, ints(&vec![1; d as usize]), "E_{d}(num_roots)");

        // x1 - 1: the standard representation's character
        let std_char = parse_stat("x1 - 1").unwrap();
        let stat = factstat::classfn::eval_stat(&std_char, d);
        let family = shared_family(d, CharKind::Psi);
        for k in 0..family.num_rows() {
            let inner = stat.inner(&family.row_class_function(k)).unwrap();
            let expected = if k >= 1 { Rat::one() } else { Rat::zero() };
            assert_eq!(inner, expected, "<x1-1, psi_{d}^{k}>");
        }
    }
    println!("criterion 5 (roots formula and standard placement, d <= 12): PASS");
}

#[test]
fn acceptance_06_oracle_equivalence() {
    let started = Instant::now();
    for q in [2u64, 3, 4, 5, 7] {
        let (p, n) = match q {
            4 => (2u32, 2u32),
            q => (q as u32, 1),
        };
        let field = build_field(p, n).unwrap();
        let q_rat = Rat::from_int(q as i64);
        for d in 1..=6u32 {
            let (all, sf) = census_both(&field, d, 1).unwrap();
            for (lambda, count) in &all.counts {
                assert_eq!(
                    Rat::from_int(*count as i64),
                    count_all(lambda).eval(&q_rat),
                    "census all q={q} d={d} {lambda}"
                );
            }
            for (lambda, count) in &sf.counts {
                assert_eq!(
                    Rat::from_int(*count as i64),
                    count_sf(lambda).eval(&q_rat),
                    "census sf q={q} d={d} {lambda}"
                );
            }
            for name in BUILTIN_NAMES {
                let stat = builtin(name, d).unwrap();
                assert_eq!(
                    empirical_expectation(&stat, &all),
                    expected_value(&stat).eval_at_q(&q_rat),
                    "{name} all q={q} d={d}"
                );
                if d >= 2 {
                    assert_eq!(
                        empirical_expectation(&stat, &sf),
                        expected_value_sf(&stat).unwrap().eval_at_q(&q_rat),
                        "{name} sf q={q} d={d}"
                    );
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 6 (oracle equivalence, q in {{2,3,4,5,7}}, d <= 6, {elapsed:?}): PASS");
}

#[test]
fn acceptance_07_squarefree_side() {
    for d in 2..=12u32 {
        let et = expected_value_sf(&builtin("even_type", d).unwrap()).unwrap();
        assert_eq!(et, QInvSeries::constant(Rat::ratio(1, 2)), "E^sf_{d}(ET)");

        // chi^{d-1} must vanish identically: the telescoped sum of the phi
        // column closes to zero for every type
        let phi = shared_family(d, CharKind::Phi);
        let chi = shared_family(d, CharKind::Chi);
        let parts = partitions_of(d);
        for i in 0..parts.len() {
            let mut top = num_bigint::BigInt::from(0);
            for k in 0..d as usize {
                let sign = if (d as usize - 1 - k) % 2 == 0 { 1 } else { -1 };
                top += phi.value(k, i) * num_bigint::BigInt::from(sign);
            }
            assert_eq!(top, num_bigint::BigInt::from(0), "chi_{d}^{} at {}", d - 1, parts[i]);
        }

        // every chi row is a genuine character
        for k in 0..chi.num_rows() {
            let row = chi.row_class_function(k);
            assert!(
                character_multiplicities(&row).is_some(),
                "chi_{d}^{k} has a negative or fractional multiplicity"
            );
        }
    }
    println!("criterion 7 (squarefree side: even type, telescope, chi characters): PASS");
}

#[test]
fn acceptance_08_character_theory_self_consistency() {
    // orthogonality for d <= 8
    for d in 1..=8u32 {
        let parts = partitions_of(d);
        let table = factstat::classfn::character_table(d);
        for a in 0..parts.len() {
            for b in a..parts.len() {
                let mut dot = Rat::zero();
                for (j, lambda) in parts.iter().enumerate() {
                    let prod = &table.rows[a][j] * &table.rows[b][j];
                    dot = dot + Rat::new(prod, lambda.z());
                }
                let expected = if a == b { Rat::one() } else { Rat::zero() };
                assert_eq!(dot, expected, "d={d} rows {a},{b}");
            }
        }
    }
    // dimension squares sum to d! for d <= 12
    for d in 1..=12u32 {
        let mut sum = num_bigint::BigInt::from(0);
        for mu in partitions_of(d) {
            let f = hook_dim(&mu);
            sum += &f * &f;
        }
        let mut factorial = num_bigint::BigInt::from(1);
        for i in 2..=d {
            factorial *= i;
        }
        assert_eq!(sum, factorial, "d={d}");
    }
    // decompose then reconstruct is the identity on the builtins
    for d in 1..=12u32 {
        for name in BUILTIN_NAMES {
            let p = builtin(name, d).unwrap();
            assert_eq!(reconstruct(d, &decompose(&p)), p, "{name} at d={d}");
        }
    }
    println!("criterion 8 (character-theory self-consistency): PASS");
}

#[test]
fn acceptance_09_character_statistics_have_nonneg_integer_series() {
    for d in 1..=12u32 {
        for name in BUILTIN_NAMES {
            let p = builtin(name, d).unwrap();
            let Some(mults) = character_multiplicities(&p) else {
                assert_eq!(name, "even_type", "only even_type may fail the character test");
                continue;
            };
            let series = expected_value(&p);
            let mut dim = Rat::zero();
            for (mu, m) in &mults {
                dim = dim + Rat::from(m.clone()) * Rat::from(hook_dim(mu));
            }
            for (k, c) in series.coeffs().iter().enumerate() {
                let n = c.to_bigint().unwrap_or_else(|| {
                    panic!("E_{d}({name}) coefficient {c} at k={k} not an integer")
                });
                assert!(n >= num_bigint::BigInt::from(0), "E_{d}({name}) k={k} negative");
            }
            assert_eq!(series.coeff_sum(), dim, "E_{d}({name}) at q=1 vs dim V");
            if name == "quad_excess" {
                let choose2 = Rat::from_int((d as i64) * (d as i64 - 1) / 2);
                assert_eq!(series.coeff_sum(), choose2, "quad_excess dim is C({d},2)");
            }
        }
    }
    println!("criterion 9 (character statistics: nonnegative integer series summing to dim): PASS");
}

#[test]
fn acceptance_10_stabilization_of_quadratic_excess() {
    let started = Instant::now();
    let expr = parse_stat("binom(x1,2) - x2").unwrap();
    let expected = [2i64, 2, 4, 4, 6, 6, 8, 8, 10];
    for (k, want) in (1u32..=9).zip(expected) {
        let report = stable_inner(&expr, k, 24).unwrap();
        match report.outcome {
            StableOutcome::Stabilized { value, onset_d } => {
                assert_eq!(value, Rat::from_int(want), "stable value at k={k}");
                assert!(onset_d <= 24);
            }
            StableOutcome::NotStabilized => panic!("k={k} did not stabilize by d=24"),
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 10 (stabilization to 2,2,4,4,6,6,8,8,10 for k=1..9, {elapsed:?}): PASS");
}
