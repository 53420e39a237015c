//! Exhaustive enumeration of monic polynomials over a finite field:
//! the ground truth the exact formulas are compared against.
//!
//! Monic degree-`d` polynomials are enumerated as base-`q` integers over
//! the field's element ordering (low digit = constant term), which makes
//! sharded parallel enumeration deterministic: shard boundaries are plain
//! index ranges and the merged counts never depend on the shard count.
//!
//! Factorization is trial division against a sieved table of irreducibles,
//! never a fast factoring algorithm: at this scale auditability wins, and
//! the sieve is validated independently against the necklace polynomial
//! counts, which keeps the oracle honest as a second route to every number
//! it is compared with.

use rayon::prelude::*;
use std::collections::HashMap;

use crate::algebra::Rat;
use crate::classfn::ClassFunction;
use crate::error::{Error, Result};
use crate::measures::{necklace, Flavor};
use crate::partitions::{partitions_of, Partition};

use super::field::FieldSpec;

/// Default cap on enumerated polynomials per census.
pub const ENUM_BOUND: u64 = 10_000_000;

/// A polynomial over a constructed field, constant-first coefficients as
/// element indices, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqPoly {
    coeffs: Vec<u16>,
}

impl FqPoly {
    /// The constant polynomial 1.
    pub fn one() -> Self {
        FqPoly { coeffs: vec![1] }
    }

    /// Builds from constant-first element indices, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<u16>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    /// The `index`th monic polynomial of degree `d`: low-to-high base-`q`
    /// digits of `index` are the non-leading coefficients.
    pub fn monic_from_index(index: u64, d: u32, field: &FieldSpec) -> Self {
        let q = field.q();
        debug_assert!(index < q.pow(d));
        let mut coeffs = Vec::with_capacity(d as usize + 1);
        let mut rest = index;
        for _ in 0..d {
            coeffs.push((rest % q) as u16);
            rest /= q;
        }
        coeffs.push(1);
        FqPoly { coeffs }
    }

    /// Inverse of [`FqPoly::monic_from_index`] for monic polynomials.
    pub fn enum_index(&self, field: &FieldSpec) -> u64 {
        debug_assert!(self.is_monic());
        let mut acc = 0u64;
        for &c in self.coeffs[..self.coeffs.len() - 1].iter().rev() {
            acc = acc * field.q() + c as u64;
        }
        acc
    }

    pub fn degree(&self) -> usize {
        assert!(!self.coeffs.is_empty(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &FqPoly, field: &FieldSpec) -> FqPoly {
        let mut out = vec![0u16; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        FqPoly::new(out)
    }

    /// Exact division by a monic divisor; `None` if the remainder is
    /// nonzero.
    pub fn try_divide(&self, divisor: &FqPoly, field: &FieldSpec) -> Option<FqPoly> {
        debug_assert!(divisor.is_monic());
        let dd = divisor.degree();
        if self.degree() < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let q_len = self.degree() - dd + 1;
        let mut quot = vec![0u16; q_len];
        for i in (0..q_len).rev() {
            let c = rem[i + dd];
            if c != 0 {
                for (j, &g) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = field.sub(rem[i + j], field.mul(c, g));
                }
            }
            quot[i] = c;
        }
        if rem[..dd].iter().all(|&c| c == 0) {
            Some(FqPoly::new(quot))
        } else {
            None
        }
    }
}

/// Sieved monic irreducibles, grouped by degree (1-based), each group in
/// enumeration-index order.
pub struct IrreducibleTable {
    max_degree: u32,
    by_degree: Vec<Vec<FqPoly>>,
}

impl IrreducibleTable {
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Irreducibles of one degree, in enumeration order.
    pub fn of_degree(&self, degree: u32) -> &[FqPoly] {
        &self.by_degree[(degree - 1) as usize]
    }

    /// All irreducibles in increasing degree, then enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = &FqPoly> {
        self.by_degree.iter().flatten()
    }

    /// Membership by binary search on the enumeration index.
    pub fn contains(&self, f: &FqPoly, field: &FieldSpec) -> bool {
        let degree = f.degree() as u32;
        if degree < 1 || degree > self.max_degree {
            return false;
        }
        let target = f.enum_index(field);
        self.of_degree(degree)
            .binary_search_by_key(&target, |g| g.enum_index(field))
            .is_ok()
    }
}

/// Sieves all monic irreducibles of degree `1..=max_degree`.
///
/// A monic polynomial is irreducible iff no irreducible of at most half its
/// degree divides it. The count found at each degree is asserted to equal
/// the necklace polynomial evaluated at `q`; a mismatch would mean either
/// the sieve or the formula side is broken, so it is fatal.
pub fn irreducibles_by_degree(field: &FieldSpec, max_degree: u32) -> Result<IrreducibleTable> {
    check_enum_bound(field, max_degree)?;
    let mut by_degree: Vec<Vec<FqPoly>> = Vec::with_capacity(max_degree as usize);
    for j in 1..=max_degree {
        let mut found = Vec::new();
        for index in 0..field.q().pow(j) {
            let f = FqPoly::monic_from_index(index, j, field);
            let reducible = by_degree
                .iter()
                .take((j / 2) as usize)
                .flatten()
                .any(|g| f.try_divide(g, field).is_some());
            if !reducible {
                found.push(f);
            }
        }
        let expected = necklace(j).eval(&Rat::from_int(field.q() as i64));
        assert_eq!(
            Rat::from_int(found.len() as i64),
            expected,
            "sieve found {} monic irreducibles of degree {j} over q={}, necklace count disagrees",
            found.len(),
            field.q()
        );
        by_degree.push(found);
    }
    Ok(IrreducibleTable {
        max_degree,
        by_degree,
    })
}

/// Full factorization of a monic polynomial by trial division in increasing
/// degree then enumeration order: `(irreducible factor, multiplicity)`
/// pairs. The product of the factors is asserted to reconstruct the input.
pub fn factor(f: &FqPoly, table: &IrreducibleTable, field: &FieldSpec) -> Vec<(FqPoly, u32)> {
    assert!(f.is_monic(), "factor: input must be monic");
    assert!(
        f.degree() as u32 <= table.max_degree,
        "factor: table covers degrees up to {}, got degree {}",
        table.max_degree,
        f.degree()
    );
    let mut factors: Vec<(FqPoly, u32)> = Vec::new();
    let mut cofactor = f.clone();
    for g in table.iter() {
        if 2 * g.degree() > cofactor.degree() {
            break;
        }
        let mut multiplicity = 0u32;
        while let Some(next) = cofactor.try_divide(g, field) {
            cofactor = next;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            factors.push((g.clone(), multiplicity));
        }
    }
    if cofactor.degree() >= 1 {
        // anything left has no factor of at most half its degree, so it is
        // itself irreducible; the sieve table confirms it
        assert!(
            table.contains(&cofactor, field),
            "leftover cofactor {cofactor:?} not in the irreducible table"
        );
        factors.push((cofactor, 1));
    }

    let mut product = FqPoly::one();
    for (g, m) in &factors {
        for _ in 0..*m {
            product = product.mul(g, field);
        }
    }
    assert_eq!(&product, f, "factorization failed to reconstruct its input");
    factors
}

/// The factorization type: degrees of the irreducible factors with
/// multiplicity, as a partition of `deg(f)`.
pub fn factorization_type(f: &FqPoly, table: &IrreducibleTable, field: &FieldSpec) -> Partition {
    let parts = factor(f, table, field)
        .iter()
        .flat_map(|(g, m)| std::iter::repeat(g.degree() as u32).take(*m as usize))
        .collect();
    Partition::new(parts)
}

/// Counts of monic degree-`d` polynomials by factorization type, from
/// exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct Census {
    pub q: u64,
    pub d: u32,
    pub flavor: Flavor,
    /// One entry per partition of `d`, enumeration order, zero counts kept.
    pub counts: Vec<(Partition, u64)>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|(_, c)| c).sum()
    }

    pub fn count(&self, lambda: &Partition) -> u64 {
        self.counts
            .iter()
            .find(|(mu, _)| mu == lambda)
            .map(|(_, c)| *c)
            .expect("count: not a partition of d")
    }
}

fn check_enum_bound(field: &FieldSpec, d: u32) -> Result<()> {
    let total = (field.q() as u128).pow(d);
    if total > ENUM_BOUND as u128 {
        return Err(Error::ResourceBound(format!(
            "census of {}^{d} = {total} polynomials exceeds bound {ENUM_BOUND}",
            field.q()
        )));
    }
    Ok(())
}

fn census_shard(
    field: &FieldSpec,
    d: u32,
    table: &IrreducibleTable,
    index_of: &HashMap<Vec<u32>, usize>,
    range: std::ops::Range<u64>,
) -> (Vec<u64>, Vec<u64>) {
    let mut all = vec![0u64; index_of.len()];
    let mut sf = vec![0u64; index_of.len()];
    let mut parts: Vec<u32> = Vec::with_capacity(d as usize);
    for index in range {
        let f = FqPoly::monic_from_index(index, d, field);
        let factors = factor(&f, table, field);
        let squarefree = factors.iter().all(|(_, m)| *m == 1);
        parts.clear();
        for (g, m) in &factors {
            for _ in 0..*m {
                parts.push(g.degree() as u32);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let idx = *index_of.get(&parts).expect("factor degrees partition d");
        all[idx] += 1;
        if squarefree {
            sf[idx] += 1;
        }
    }
    (all, sf)
}

/// Enumerates every monic degree-`d` polynomial over `field` and counts
/// factorization types for both flavors in one pass.
///
/// `shards` contiguous index ranges are processed in parallel; the merged
/// counts are identical for every shard count.
pub fn census_both(field: &FieldSpec, d: u32, shards: usize) -> Result<(Census, Census)> {
    assert!(d >= 1, "census requires d >= 1");
    check_enum_bound(field, d)?;
    let table = irreducibles_by_degree(field, d)?;
    let parts = partitions_of(d);
    let index_of: HashMap<Vec<u32>, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.parts().to_vec(), i))
        .collect();

    let total = field.q().pow(d);
    let shards = (shards.max(1) as u64).min(total);
    let ranges: Vec<std::ops::Range<u64>> = (0..shards)
        .map(|s| {
            let lo = total * s / shards;
            let hi = total * (s + 1) / shards;
            lo..hi
        })
        .collect();

    let (all, sf) = ranges
        .into_par_iter()
        .map(|range| census_shard(field, d, &table, &index_of, range))
        .reduce(
            || (vec![0u64; parts.len()], vec![0u64; parts.len()]),
            |(mut a1, mut s1), (a2, s2)| {
                for (x, y) in a1.iter_mut().zip(a2) {
                    *x += y;
                }
                for (x, y) in s1.iter_mut().zip(s2) {
                    *x += y;
                }
                (a1, s1)
            },
        );

    let make = |flavor: Flavor, counts: Vec<u64>| Census {
        q: field.q(),
        d,
        flavor,
        counts: parts.iter().cloned().zip(counts).collect(),
    };
    let all_census = make(Flavor::All, all);
    let sf_census = make(Flavor::Squarefree, sf);
    assert_eq!(all_census.total(), total, "complete enumeration must see q^d polynomials");
    Ok((all_census, sf_census))
}

/// Census of a single flavor; see [`census_both`].
pub fn census(field: &FieldSpec, d: u32, flavor: Flavor, shards: usize) -> Result<Census> {
    let (all, sf) = census_both(field, d, shards)?;
    Ok(match flavor {
        Flavor::All => all,
        Flavor::Squarefree => sf,
    })
}

/// Empirical expected value of a statistic from a census: exact rational
/// `sum_lambda P(lambda) count(lambda) / total`.
pub fn empirical_expectation(stat: &ClassFunction, census: &Census) -> Rat {
    assert_eq!(stat.d(), census.d, "empirical_expectation: degree mismatch");
    let total = census.total();
    assert!(total > 0, "empirical_expectation: empty census");
    let mut acc = Rat::zero();
    for ((_, count), value) in census.counts.iter().zip(stat.values()) {
        acc = acc + value * &Rat::from_int(*count as i64);
    }
    acc / Rat::from_int(total as i64)
}
