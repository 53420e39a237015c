//! Black-box tests of the `factstat` binary: flags, exit codes, output
//! determinism, and the cache directory contract.

use std::path::Path;
use std::process::{Command, Output};

fn factstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factstat"))
        .args(args)
        .env_remove("FACTSTAT_CACHE_DIR")
        .output()
        .expect("spawn factstat")
}

fn factstat_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factstat"))
        .args(args)
        .env_remove("FACTSTAT_CACHE_DIR")
        .env(key, value)
        .output()
        .expect("spawn factstat")
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn measure_degree_six_row() {
    let doc = json(&factstat(&["measure", "--d", "6"]));
    let first = &doc["entries"][0];
    assert_eq!(first["type"], serde_json::json!([6]));
    assert_eq!(
        first["series"],
        serde_json::json!(["1/6", "0", "0", "-1/6", "-1/6", "1/6"])
    );
}

#[test]
fn measure_degree_one_is_point_mass() {
    let doc = json(&factstat(&["measure", "--d", "1"]));
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["series"], serde_json::json!(["1"]));
}

#[test]
fn measure_evaluated_at_two() {
    let doc = json(&factstat(&["measure", "--d", "3", "--q", "2"]));
    assert_eq!(doc["entries"][0]["type"], serde_json::json!([3]));
    assert_eq!(doc["entries"][0]["value"], "1/4");
}

#[test]
fn expect_sign_and_expression() {
    let doc = json(&factstat(&["expect", "--d", "5", "--stat", "sgn"]));
    assert_eq!(doc["series"], serde_json::json!(["0", "0", "1"]));

    let doc = json(&factstat(&["expect", "--d", "4", "--stat", "binom(x1,2)-x2"]));
    assert_eq!(doc["series"], serde_json::json!(["0", "2", "2", "2"]));
}

#[test]
fn expect_squarefree_reports_chi_inner_products() {
    let doc = json(&factstat(&["expect", "--d", "4", "--stat", "num_roots", "--squarefree"]));
    assert_eq!(doc["flavor"], "squarefree");
    let families: Vec<&str> = doc["inner_products"]
        .as_array()
        .unwrap()
        .iter()
        .map(|ip| ip["family"].as_str().unwrap())
        .collect();
    assert!(families.iter().all(|f| *f == "chi"));
    // series coefficient k is (-1)^k times the reported inner product
    for (k, ip) in doc["inner_products"].as_array().unwrap().iter().enumerate() {
        let series_c: i64 = doc["series"][k].as_str().unwrap().parse().unwrap();
        let inner: i64 = ip["value"].as_str().unwrap().parse().unwrap();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(series_c, sign * inner);
    }
}

#[test]
fn characters_table_and_decompositions() {
    let doc = json(&factstat(&["characters", "--d", "2", "--kind", "psi"]));
    assert_eq!(doc["rows"][0]["values"], serde_json::json!(["1", "1"]));
    assert_eq!(doc["rows"][1]["values"], serde_json::json!(["-1", "1"]));

    // k=0 row decomposes as the trivial character alone
    let doc = json(&factstat(&["characters", "--d", "3", "--kind", "psi", "--decompose"]));
    let k0 = &doc["decompositions"][0];
    assert_eq!(k0["multiplicities"], serde_json::json!([{"mu": [3], "mult": "1"}]));

    // the standard representation appears once in every k = 1..5 at d = 6
    let doc = json(&factstat(&["characters", "--d", "6", "--kind", "psi", "--decompose"]));
    for k in 1..=5usize {
        let mults = doc["decompositions"][k]["multiplicities"].as_array().unwrap();
        let std_mult = mults
            .iter()
            .find(|m| m["mu"] == serde_json::json!([5, 1]))
            .expect("standard rep present");
        assert_eq!(std_mult["mult"], "1", "k={k}");
    }
}

#[test]
fn stable_trivial_statistic_at_positive_k_is_zero() {
    let doc = json(&factstat(&["stable", "--stat", "1", "--k", "1", "--d-max", "5"]));
    assert_eq!(doc["status"], "stabilized");
    assert_eq!(doc["value"], "0");
}

#[test]
fn stable_rejects_non_character_polynomials() {
    let out = factstat(&["stable", "--stat", "sgn", "--k", "1", "--d-max", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = factstat(&["verify", "--d-max", "3", "--q-list", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["all_pass"], true);
    assert!(doc["passed"].as_u64().unwrap() > 0);
    assert_eq!(doc["failed"].as_u64().unwrap(), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(factstat(&["expect", "--d", "4"]).status.code(), Some(2)); // missing --stat
    assert_eq!(
        factstat(&["expect", "--d", "4", "--stat", "binom(x1 2)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        factstat(&["measure", "--d", "1", "--squarefree"]).status.code(),
        Some(2)
    );
    assert_eq!(
        factstat(&["verify", "--d-max", "2", "--q-list", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        factstat(&["characters", "--d", "3", "--kind", "tau"]).status.code(),
        Some(2)
    );

    let out = factstat(&["expect", "--d", "4", "--stat", "x1 + foo"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("byte 5"), "parse errors carry a position: {stderr}");
}

#[test]
fn json_output_is_byte_deterministic() {
    for args in [
        vec!["measure", "--d", "5"],
        vec!["expect", "--d", "6", "--stat", "quad_excess"],
        vec!["characters", "--d", "4", "--kind", "chi", "--decompose"],
        vec!["verify", "--d-max", "3", "--q-list", "2,4"],
    ] {
        let a = factstat(&args);
        let b = factstat(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn shard_count_never_changes_output_bytes() {
    let base = factstat(&["verify", "--d-max", "3", "--q-list", "3", "--shards", "1"]);
    for shards in ["2", "5", "16"] {
        let other = factstat(&["verify", "--d-max", "3", "--q-list", "3", "--shards", shards]);
        assert_eq!(base.stdout, other.stdout, "shards={shards}");
    }
}

#[test]
fn cache_dir_is_honored_and_optional() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();

    let uncached = factstat(&["characters", "--d", "7", "--kind", "psi"]);
    let cached = factstat(&["characters", "--d", "7", "--kind", "psi", "--cache-dir", cache]);
    assert_eq!(uncached.stdout, cached.stdout, "caching must not change results");
    assert!(
        Path::new(cache).join("psi-7.v1.json").is_file(),
        "cache file written"
    );

    // second run reads the cache file and still matches
    let warm = factstat(&["characters", "--d", "7", "--kind", "psi", "--cache-dir", cache]);
    assert_eq!(uncached.stdout, warm.stdout);

    // a corrupted cache file is recomputed, not trusted
    std::fs::write(Path::new(cache).join("psi-7.v1.json"), b"garbage").unwrap();
    let recovered = factstat(&["characters", "--d", "7", "--kind", "psi", "--cache-dir", cache]);
    assert_eq!(uncached.stdout, recovered.stdout);

    // the environment variable is the default for --cache-dir
    let env_dir = tempfile::tempdir().unwrap();
    let out = factstat_env(
        &["characters", "--d", "5", "--kind", "phi"],
        "FACTSTAT_CACHE_DIR",
        env_dir.path().to_str().unwrap(),
    );
    assert!(out.status.success());
    assert!(env_dir.path().join("phi-5.v1.json").is_file());
}

#[test]
fn csv_and_latex_render() {
    let out = factstat(&["expect", "--d", "3", "--stat", "quad_excess", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "power,value\nq^0,0\nq^-1,2\nq^-2,1\n");

    let out = factstat(&["expect", "--d", "3", "--stat", "quad_excess", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\\begin{tabular}{c|l}"));
    assert!(text.contains("\\tfrac{2}{q} + \\tfrac{1}{q^{2}}"));

    let out = factstat(&["measure", "--d", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("type,power,value\n"));
    assert!(text.contains("\"[1,1]\""));
}
