//! Irreducible characters of the symmetric group.
//!
//! Character values come from the Murnaghan-Nakayama recursion in its
//! beta-number form: removing a border strip of length `r` from `mu`
//! corresponds to lowering one first-column hook length by `r`, with sign
//! `(-1)^(number of hook lengths jumped over)`. The recursion always peels
//! the largest remaining part of the cycle type and memoizes on the
//! `(shape, remaining cycle type)` pair, so the evaluation order is
//! deterministic.
//!
//! Dimensions come from the hook length formula and are cross-checked in
//! tests against the character value at the identity.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::partitions::{partitions_of, Partition};

type Memo = HashMap<(Vec<u32>, Vec<u32>), BigInt>;

/// Partition parts from a descending beta set, dropping zero parts.
fn partition_from_beta(beta: &[u32]) -> Vec<u32> {
    let len = beta.len() as u32;
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect(); // beta descending => parts weakly decreasing
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

fn mn_recurse(mu: &[u32], lambda: &[u32], memo: &mut Memo) -> BigInt {
    if lambda.is_empty() {
        debug_assert!(mu.is_empty());
        return BigInt::one();
    }
    let key = (mu.to_vec(), lambda.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }

    let r = lambda[0];
    let rest = &lambda[1..];
    let len = mu.len() as u32;
    // beta numbers mu_i + (len - 1 - i), strictly decreasing
    let beta: Vec<u32> = mu
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i as u32))
        .collect();

    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        // height = number of beta values strictly between target and b
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let sub = mn_recurse(&partition_from_beta(&new_beta), rest, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }

    memo.insert(key, total.clone());
    total
}

/// The irreducible character value `chi_mu(lambda)`.
///
/// Panics unless `mu` and `lambda` are partitions of the same `d`.
pub fn mn_character(mu: &Partition, lambda: &Partition) -> BigInt {
    assert_eq!(
        mu.d(),
        lambda.d(),
        "mn_character: {mu} and {lambda} partition different integers"
    );
    let mut memo = Memo::new();
    mn_recurse(mu.parts(), lambda.parts(), &mut memo)
}

/// The full character table at degree `d`: `rows[i][j] = chi_mu(lambda)`
/// with `mu = partitions_of(d)[i]` and `lambda = partitions_of(d)[j]`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub d: u32,
    pub rows: Vec<Vec<BigInt>>,
}

type TableMemo = Mutex<HashMap<u32, Arc<CharacterTable>>>;

fn table_memo() -> &'static TableMemo {
    static MEMO: OnceLock<TableMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized full character table; one shared Murnaghan-Nakayama memo per
/// degree keeps the table build cheap.
pub fn character_table(d: u32) -> Arc<CharacterTable> {
    if let Some(t) = table_memo().lock().unwrap().get(&d) {
        return Arc::clone(t);
    }
    let parts = partitions_of(d);
    let mut memo = Memo::new();
    let rows = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| mn_recurse(mu.parts(), lambda.parts(), &mut memo))
                .collect()
        })
        .collect();
    let table = Arc::new(CharacterTable { d, rows });
    table_memo()
        .lock()
        .unwrap()
        .entry(d)
        .or_insert(table)
        .clone()
}

/// Dimension of the irreducible indexed by `mu`, by the hook length
/// formula `d! / prod(hooks)`.
pub fn hook_dim(mu: &Partition) -> BigInt {
    let d = mu.d();
    let conj = mu.conjugate();
    let mut numerator = BigInt::one();
    for i in 2..=d {
        numerator *= i;
    }
    let mut hooks = BigInt::one();
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row as usize {
            // 0-based arm + leg + 1
            let arm = row as usize - 1 - j;
            let leg = conj.parts()[j] as usize - 1 - i;
            hooks *= BigInt::from((arm + leg + 1) as u64);
        }
    }
    let (quot, rem) = numerator.div_rem(&hooks);
    assert!(rem.is_zero(), "hook_dim: hooks do not divide d! for {mu}");
    quot
}
