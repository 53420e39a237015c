//! The three character families tied to the splitting measures.
//!
//! For a partition `lambda` of `d`, the scaled count polynomial
//! `z * count_all(lambda)` expands as `sum_k psi_d^k(lambda) q^{d-k}`, and
//! `z * count_sf(lambda)` as `sum_k (-1)^k phi_d^k(lambda) q^{d-k}`. The
//! third family is determined by the telescope `chi^k = phi^k - chi^{k-1}`
//! with `chi^{-1} = 0`, which must terminate with `chi^{d-1}` identically
//! zero.
//!
//! No multivariate generating function is ever materialized: for a fixed
//! type, comparing coefficients reduces to single-variable polynomial
//! expansion of the scaled count polynomials, so the extraction below is
//! all there is. Every extracted coefficient must be an integer; a
//! non-integer is an internal error and panics.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{QPoly, Rat};
use crate::classfn::ClassFunction;
use crate::measures::{count_all, count_sf};
use crate::partitions::{partitions_of, Partition};

/// Which of the three families a table holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharKind {
    /// `psi_d^k`: coefficients of the splitting measure; rows `k = 0..d-1`.
    Psi,
    /// `phi_d^k`: signed coefficients of the squarefree count; rows
    /// `k = 0..d-1`.
    Phi,
    /// `chi_d^k`: the telescoped family behind the squarefree measure; rows
    /// `k = 0..d-2`, defined for `d >= 2`.
    Chi,
}

impl CharKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CharKind::Psi => "psi",
            CharKind::Phi => "phi",
            CharKind::Chi => "chi",
        }
    }
}

impl fmt::Display for CharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CharKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "psi" => Ok(CharKind::Psi),
            "phi" => Ok(CharKind::Phi),
            "chi" => Ok(CharKind::Chi),
            other => Err(format!("unknown character kind: {other}")),
        }
    }
}

/// An integer character table: rows indexed by cohomological degree `k`,
/// columns by partitions of `d` in reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterFamily {
    d: u32,
    kind: CharKind,
    rows: Vec<Vec<BigInt>>,
}

impl CharacterFamily {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    /// Number of rows (`d` for psi/phi, `d - 1` for chi).
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// The character values at degree `k`, one per partition in enumeration
    /// order. Rows beyond the stored range are identically zero.
    pub fn row(&self, k: usize) -> Option<&[BigInt]> {
        self.rows.get(k).map(Vec::as_slice)
    }

    /// A single value; zero outside the stored `k` range.
    pub fn value(&self, k: usize, lambda_index: usize) -> BigInt {
        self.rows
            .get(k)
            .map(|row| row[lambda_index].clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Row `k` as a rational-valued class function.
    pub fn row_class_function(&self, k: usize) -> ClassFunction {
        let n = partitions_of(self.d).len();
        let values = match self.rows.get(k) {
            Some(row) => row.iter().cloned().map(Rat::from).collect(),
            None => vec![Rat::zero(); n],
        };
        ClassFunction::from_values(self.d, values)
    }
}

/// Extracts coefficient `q^{d-k}` of `poly` for `k = 0..rows`, asserting
/// integrality.
fn integer_column(poly: &QPoly, d: u32, rows: usize, context: &Partition) -> Vec<BigInt> {
    (0..rows)
        .map(|k| {
            let c = poly.coeff((d as usize) - k);
            c.to_bigint().unwrap_or_else(|| {
                panic!("non-integer character coefficient {c} at k={k} for {context}")
            })
        })
        .collect()
}

fn psi_column(lambda: &Partition, d: u32) -> Vec<BigInt> {
    let scaled = count_all(lambda).scalar_mul(&Rat::from(lambda.z()));
    integer_column(&scaled, d, d as usize, lambda)
}

fn phi_column(lambda: &Partition, d: u32) -> Vec<BigInt> {
    let scaled = count_sf(lambda).scalar_mul(&Rat::from(lambda.z()));
    let mut col = integer_column(&scaled, d, d as usize, lambda);
    for (k, v) in col.iter_mut().enumerate() {
        if k % 2 == 1 {
            *v = -std::mem::take(v);
        }
    }
    col
}

fn chi_column(lambda: &Partition, d: u32) -> Vec<BigInt> {
    let phi = phi_column(lambda, d);
    let mut chi = Vec::with_capacity((d - 1) as usize);
    let mut prev = BigInt::zero();
    for (k, phi_k) in phi.iter().enumerate() {
        let value = phi_k - &prev;
        if k + 1 == d as usize {
            // the telescope must close: the top entry vanishes identically
            assert!(
                value.is_zero(),
                "chi telescope failed to terminate at d={d}, lambda={lambda}: top value {value}"
            );
        } else {
            chi.push(value.clone());
        }
        prev = value;
    }
    chi
}

/// Computes the full character table of one family at degree `d`.
///
/// Requires `d >= 1` (psi, phi) or `d >= 2` (chi). Columns are computed
/// independently per partition (in parallel) and assembled in enumeration
/// order, so the result is deterministic.
pub fn character_family(d: u32, kind: CharKind) -> CharacterFamily {
    match kind {
        CharKind::Psi | CharKind::Phi => assert!(d >= 1, "{kind} family requires d >= 1"),
        CharKind::Chi => assert!(d >= 2, "chi family requires d >= 2"),
    }
    let parts = partitions_of(d);
    let columns: Vec<Vec<BigInt>> = parts
        .par_iter()
        .map(|lambda| match kind {
            CharKind::Psi => psi_column(lambda, d),
            CharKind::Phi => phi_column(lambda, d),
            CharKind::Chi => chi_column(lambda, d),
        })
        .collect();
    let num_rows = match kind {
        CharKind::Psi | CharKind::Phi => d as usize,
        CharKind::Chi => (d - 1) as usize,
    };
    let rows = (0..num_rows)
        .map(|k| columns.iter().map(|col| col[k].clone()).collect())
        .collect();
    CharacterFamily { d, kind, rows }
}

/// Single character value `psi_d^k(lambda)`; zero for `k` outside `[0, d-1]`.
/// Panics if `lambda` is not a partition of `d`.
pub fn psi(d: u32, k: u32, lambda: &Partition) -> BigInt {
    assert_eq!(lambda.d(), d, "psi: {lambda} is not a partition of {d}");
    if k >= d {
        return BigInt::zero();
    }
    psi_column(lambda, d)[k as usize].clone()
}

/// Single character value `phi_d^k(lambda)`; zero outside `[0, d-1]`.
pub fn phi(d: u32, k: u32, lambda: &Partition) -> BigInt {
    assert_eq!(lambda.d(), d, "phi: {lambda} is not a partition of {d}");
    if k >= d {
        return BigInt::zero();
    }
    phi_column(lambda, d)[k as usize].clone()
}

/// Single character value `chi_d^k(lambda)`; zero outside `[0, d-2]`.
/// Requires `d >= 2`.
pub fn chi(d: u32, k: u32, lambda: &Partition) -> BigInt {
    assert!(d >= 2, "chi requires d >= 2");
    assert_eq!(lambda.d(), d, "chi: {lambda} is not a partition of {d}");
    if k + 1 >= d {
        return BigInt::zero();
    }
    chi_column(lambda, d)[k as usize].clone()
}

/// Outcome of checking that the psi rows sum to the regular character.
#[derive(Clone, Debug, Serialize)]
pub struct RegularCheck {
    pub d: u32,
    pub pass: bool,
    /// Offending partitions with the (stringified) sum actually obtained.
    pub failures: Vec<RegularFailure>,
}

/// One regular-representation mismatch.
#[derive(Clone, Debug, Serialize)]
pub struct RegularFailure {
    #[serde(rename = "type")]
    pub lambda: Partition,
    pub sum: String,
    pub expected: String,
}

/// Verifies `sum_k psi_d^k(lambda)` equals `d!` at `lambda = [1^d]` and `0`
/// elsewhere. A failure is a result, not an error.
pub fn regular_check(d: u32) -> RegularCheck {
    let family = shared_family(d, CharKind::Psi);
    let parts = partitions_of(d);
    let mut factorial = BigInt::from(1);
    for i in 2..=d {
        factorial *= i;
    }
    let mut failures = Vec::new();
    for (i, lambda) in parts.iter().enumerate() {
        let mut sum = BigInt::zero();
        for k in 0..family.num_rows() {
            sum += family.value(k, i);
        }
        let expected = if lambda.is_all_ones() {
            factorial.clone()
        } else {
            BigInt::zero()
        };
        if sum != expected {
            failures.push(RegularFailure {
                lambda: lambda.clone(),
                sum: sum.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    RegularCheck {
        d,
        pass: failures.is_empty(),
        failures,
    }
}

// ---- in-process memoization -------------------------------------------

type FamilyMemo = Mutex<HashMap<(u32, CharKind), Arc<CharacterFamily>>>;

fn family_memo() -> &'static FamilyMemo {
    static MEMO: OnceLock<FamilyMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized [`character_family`]: repeated requests for the same `(d, kind)`
/// within a process share one immutable table.
pub fn shared_family(d: u32, kind: CharKind) -> Arc<CharacterFamily> {
    if let Some(f) = family_memo().lock().unwrap().get(&(d, kind)) {
        return Arc::clone(f);
    }
    let fresh = Arc::new(character_family(d, kind));
    family_memo()
        .lock()
        .unwrap()
        .entry((d, kind))
        .or_insert(fresh)
        .clone()
}

// ---- disk cache ---------------------------------------------------------

/// On-disk cache format version; bump when the layout changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    d: u32,
    kind: CharKind,
    order: String,
    values: Vec<Vec<String>>,
}

fn cache_path(dir: &Path, d: u32, kind: CharKind) -> std::path::PathBuf {
    dir.join(format!("{}-{d}.v{CACHE_FORMAT_VERSION}.json", kind.as_str()))
}

fn try_load_cache(path: &Path, d: u32, kind: CharKind) -> Option<CharacterFamily> {
    let bytes = fs::read(path).ok()?;
    let file: CacheFile = serde_json::from_slice(&bytes).ok()?;
    if file.version != CACHE_FORMAT_VERSION || file.d != d || file.kind != kind {
        return None;
    }
    if file.order != "revlex" {
        return None;
    }
    let expected_rows = match kind {
        CharKind::Psi | CharKind::Phi => d as usize,
        CharKind::Chi => (d - 1) as usize,
    };
    let num_cols = partitions_of(d).len();
    if file.values.len() != expected_rows {
        return None;
    }
    let mut rows = Vec::with_capacity(expected_rows);
    for row in &file.values {
        if row.len() != num_cols {
            return None;
        }
        let parsed: Option<Vec<BigInt>> = row.iter().map(|s| s.parse().ok()).collect();
        rows.push(parsed?);
    }
    Some(CharacterFamily { d, kind, rows })
}

fn write_cache(path: &Path, family: &CharacterFamily) -> std::io::Result<()> {
    let file = CacheFile {
        version: CACHE_FORMAT_VERSION,
        d: family.d,
        kind: family.kind,
        order: "revlex".into(),
        values: family
            .rows
            .iter()
            .map(|row| row.iter().map(BigInt::to_string).collect())
            .collect(),
    };
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    // single-writer discipline: write a temp file, then atomically rename
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&file)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Like [`shared_family`], but additionally reads/writes a JSON cache file
/// under `cache_dir` when one is given. The cache is an optimization only:
/// a missing, stale, or corrupt file is recomputed and overwritten, and
/// results are identical with caching disabled.
pub fn shared_family_cached(
    d: u32,
    kind: CharKind,
    cache_dir: Option<&Path>,
) -> Arc<CharacterFamily> {
    let Some(dir) = cache_dir else {
        return shared_family(d, kind);
    };
    if let Some(f) = family_memo().lock().unwrap().get(&(d, kind)) {
        return Arc::clone(f);
    }
    let path = cache_path(dir, d, kind);
    let family = match try_load_cache(&path, d, kind) {
        Some(f) => Arc::new(f),
        None => {
            let fresh = Arc::new(character_family(d, kind));
            // cache write failures are non-fatal; the value is already in hand
            let _ = write_cache(&path, &fresh);
            fresh
        }
    };
    family_memo()
        .lock()
        .unwrap()
        .entry((d, kind))
        .or_insert(family)
        .clone()
}
