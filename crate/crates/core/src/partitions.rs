//! Integer partitions of `d` and the combinatorial scalars attached to them.
//!
//! Partitions index both the conjugacy classes of the symmetric group and
//! the factorization types of monic degree-`d` polynomials, so they are the
//! common domain of every table in this crate. Enumeration order is fixed as
//! reverse-lexicographic on part lists (`[3], [2,1], [1,1,1]`) so serialized
//! tables are byte-stable across runs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// An integer partition: parts in weakly decreasing order.
///
/// Stored as the part list rather than a multiplicity vector; the
/// multiplicity view is computed on demand.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Panics on zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "Partition: parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn d(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// `m_j`: the number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// Distinct part sizes with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((part, m)) if *part == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z = prod_j j^{m_j} m_j!`, the size of the centralizer of a
    /// permutation with this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, m) in self.multiplicities() {
            for _ in 0..m {
                z *= part;
            }
            for i in 2..=m {
                z *= i;
            }
        }
        z
    }

    /// The sign `(-1)^{d - l}` of any permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.d() - self.num_parts()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The rank `d - l`, where `l` is the number of parts.
    ///
    /// Equivalently `sum_j (j - 1) m_j`: zero exactly for `[1^d]`, and
    /// `d - 1` exactly for `[d]`. This is the grading in which the character
    /// families of [`crate::lie`] live.
    pub fn rank(&self) -> u32 {
        self.d() - self.num_parts()
    }

    /// True for `[1, 1, ..., 1]` (including the empty partition).
    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicity notation like `(1^3 2^1)`, for human-readable output.
    pub fn exponent_notation(&self) -> String {
        if self.parts.is_empty() {
            return "()".into();
        }
        let pieces: Vec<String> = self
            .multiplicities()
            .into_iter()
            .rev()
            .map(|(part, m)| format!("{part}^{m}"))
            .collect();
        format!("({})", pieces.join(" "))
    }

    /// The conjugate partition (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `d`, each exactly once, in reverse-lexicographic order:
/// `[d]` first, `[1^d]` last. `partitions_of(0)` is the single empty
/// partition.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let first = remaining.min(cap);
        for part in (1..=first).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(d, d.max(1), &mut current, &mut out);
    out
}

/// Index of `lambda` within `partitions_of(lambda.d())`.
pub fn partition_index(lambda: &Partition) -> usize {
    partitions_of(lambda.d())
        .iter()
        .position(|mu| mu == lambda)
        .expect("partition_index: canonical enumeration must contain the partition")
}
