//! Necklace polynomials, factorization-type count polynomials, and the two
//! splitting measures as exact expansions in `1/q`.
//!
//! `q` stays symbolic throughout; numeric evaluation happens only at
//! comparison boundaries (the enumeration oracle, CLI `--q`). Every division
//! performed here is exact and asserted to be so.

use serde::Serialize;

use crate::algebra::{QInvSeries, QPoly, Rat};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Moebius function by trial factorization; plenty at desk scale.
fn mobius(mut n: u32) -> i64 {
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The `j`th necklace polynomial `M_j(q) = (1/j) sum_{i|j} mu(i) q^{j/i}`,
/// the number of monic irreducible degree-`j` polynomials over a field with
/// `q` elements.
pub fn necklace(j: u32) -> QPoly {
    assert!(j >= 1, "necklace: j must be positive");
    let mut coeffs = vec![Rat::zero(); (j + 1) as usize];
    for i in divisors(j) {
        let mu = mobius(i);
        if mu != 0 {
            coeffs[(j / i) as usize] = Rat::ratio(mu, j as i64);
        }
    }
    QPoly::new(coeffs)
}

/// Number of monic degree-`d` polynomials of factorization type `lambda`
/// over a field with `q` elements, as a polynomial in `q`:
/// `prod_j multichoose(M_j(q), m_j)`.
pub fn count_all(lambda: &Partition) -> QPoly {
    let mut acc = QPoly::one();
    for (part, m) in lambda.multiplicities() {
        acc = &acc * &necklace(part).multichoose(m);
    }
    acc
}

/// Number of squarefree monic degree-`d` polynomials of type `lambda`:
/// `prod_j binom(M_j(q), m_j)`.
pub fn count_sf(lambda: &Partition) -> QPoly {
    let mut acc = QPoly::one();
    for (part, m) in lambda.multiplicities() {
        acc = &acc * &necklace(part).binomial(m);
    }
    acc
}

/// The splitting measure: the probability that a uniformly random monic
/// degree-`d` polynomial has factorization type `lambda`, i.e.
/// `count_all(lambda) / q^d` re-expressed exactly in powers of `1/q`.
pub fn splitting_measure(lambda: &Partition) -> QInvSeries {
    count_all(lambda).into_inv_series(lambda.d() as usize)
}

/// The squarefree splitting measure `count_sf(lambda) / (q^d - q^{d-1})`,
/// defined for `d >= 2`.
///
/// The division is exact: `count_sf` is always divisible by `q(q - 1)`, so
/// the quotient is a genuine finite expansion in `1/q` of length at most
/// `d - 1`. A nonzero remainder is an internal error and panics.
pub fn sf_splitting_measure(lambda: &Partition) -> Result<QInvSeries> {
    let d = lambda.d();
    if d < 2 {
        return Err(Error::InvalidDegree(format!(
            "squarefree splitting measure requires d >= 2, got d = {d}"
        )));
    }
    // count_sf / (q^d - q^{d-1}) = (count_sf / (q - 1)) / q^{d-1}
    let q_minus_1 = QPoly::from_ints(&[-1, 1]);
    let quotient = count_sf(lambda).exact_div(&q_minus_1);
    let series = quotient.into_inv_series((d - 1) as usize);
    assert!(
        series.len() <= (d - 1) as usize,
        "sf_splitting_measure: expansion longer than d-1 for {lambda}"
    );
    Ok(series)
}

/// Which polynomial population a measure or census ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// All monic degree-`d` polynomials.
    All,
    /// Squarefree monic degree-`d` polynomials.
    Squarefree,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::All => "all",
            Flavor::Squarefree => "squarefree",
        }
    }
}

/// The full splitting-measure table at degree `d`: one exact `1/q`-series
/// per factorization type, in reverse-lexicographic type order.
#[derive(Clone, Debug)]
pub struct MeasureTable {
    d: u32,
    flavor: Flavor,
    entries: Vec<(Partition, QInvSeries)>,
}

impl MeasureTable {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Entries in enumeration order.
    pub fn entries(&self) -> &[(Partition, QInvSeries)] {
        &self.entries
    }

    pub fn get(&self, lambda: &Partition) -> Option<&QInvSeries> {
        self.entries
            .iter()
            .find(|(mu, _)| mu == lambda)
            .map(|(_, s)| s)
    }

    /// Sum of all entries; always exactly 1.
    pub fn total(&self) -> QInvSeries {
        let mut acc = QInvSeries::zero();
        for (_, s) in &self.entries {
            acc = &acc + s;
        }
        acc
    }
}

/// Builds the measure table for all partitions of `d`. The entries are
/// checked to sum to exactly 1.
pub fn measure_table(d: u32, flavor: Flavor) -> Result<MeasureTable> {
    if d < 1 {
        return Err(Error::InvalidDegree("measure table requires d >= 1".into()));
    }
    let entries: Vec<(Partition, QInvSeries)> = match flavor {
        Flavor::All => partitions_of(d)
            .into_iter()
            .map(|p| {
                let s = splitting_measure(&p);
                (p, s)
            })
            .collect(),
        Flavor::Squarefree => {
            let mut out = Vec::new();
            for p in partitions_of(d) {
                let s = sf_splitting_measure(&p)?;
                out.push((p, s));
            }
            out
        }
    };
    let table = MeasureTable { d, flavor, entries };
    assert!(
        table.total() == QInvSeries::one(),
        "measure_table: entries of d={d} {flavor:?} do not sum to 1"
    );
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn necklace_small() {
        assert_eq!(necklace(1), QPoly::var());
        // M_2 = (q^2 - q)/2
        assert_eq!(
            necklace(2),
            QPoly::new(vec![Rat::zero(), Rat::ratio(-1, 2), Rat::ratio(1, 2)])
        );
        // M_6 = (q^6 - q^3 - q^2 + q)/6
        let m6 = necklace(6);
        let expected = QPoly::new(vec![
            Rat::zero(),
            Rat::ratio(1, 6),
            Rat::ratio(-1, 6),
            Rat::ratio(-1, 6),
            Rat::zero(),
            Rat::zero(),
            Rat::ratio(1, 6),
        ]);
        assert_eq!(m6, expected);
    }

    #[test]
    fn necklace_counts_at_two() {
        // the number of monic irreducible sextics over a 2-element field
        assert_eq!(necklace(6).eval(&Rat::from_int(2)), Rat::from_int(9));
        assert_eq!(necklace(3).eval(&Rat::from_int(2)), Rat::from_int(2));
    }

    #[test]
    fn necklace_integer_valued() {
        for j in 1..=10u32 {
            let m = necklace(j);
            for t in -3..=7i64 {
                assert!(
                    m.eval(&Rat::from_int(t)).is_integer(),
                    "M_{j} not integer at {t}"
                );
            }
        }
    }

    #[test]
    fn count_all_examples() {
        // [1,1,1]: multichoose(q, 3)
        assert_eq!(count_all(&part(&[1, 1, 1])), QPoly::var().multichoose(3));
        // [3]: M_3 itself
        assert_eq!(count_all(&part(&[3])), necklace(3));
        // [2,1] at q=2: one irreducible quadratic times two linear choices
        assert_eq!(
            count_all(&part(&[2, 1])).eval(&Rat::from_int(2)),
            Rat::from_int(2)
        );
        // all 8 monic cubics over a 2-element field split by type: 4 + 2 + 2
        assert_eq!(
            count_all(&part(&[1, 1, 1])).eval(&Rat::from_int(2)),
            Rat::from_int(4)
        );
        assert_eq!(
            count_all(&part(&[3])).eval(&Rat::from_int(2)),
            Rat::from_int(2)
        );
    }

    #[test]
    fn count_sf_examples() {
        assert_eq!(count_sf(&part(&[1, 1])), QPoly::var().binomial(2));
        assert_eq!(count_sf(&part(&[2])), necklace(2));
        // no squarefree product of 3 distinct linears exists over 2 elements
        assert_eq!(
            count_sf(&part(&[1, 1, 1])).eval(&Rat::from_int(2)),
            Rat::zero()
        );
    }

    #[test]
    fn counts_sum_to_totals() {
        // sum over types of count_all = q^d, count_sf = q^d - q^{d-1},
        // as polynomial identities
        for d in 1..=12u32 {
            let mut all = QPoly::zero();
            let mut sf = QPoly::zero();
            for p in partitions_of(d) {
                all = &all + &count_all(&p);
                sf = &sf + &count_sf(&p);
            }
            assert_eq!(all, QPoly::var().shift_up((d - 1) as usize), "d={d}");
            if d >= 2 {
                let expected = QPoly::var().shift_up((d - 1) as usize)
                    - QPoly::one().shift_up((d - 1) as usize);
                assert_eq!(sf, expected, "d={d}");
            }
        }
    }

    #[test]
    fn splitting_measure_examples() {
        // d=1: the single type [1] has full measure
        assert_eq!(splitting_measure(&part(&[1])), QInvSeries::one());
        // [6]: (1/6)(1 - q^-3 - q^-4 + q^-5)
        let s = splitting_measure(&part(&[6]));
        let expected = QInvSeries::new(vec![
            Rat::ratio(1, 6),
            Rat::zero(),
            Rat::zero(),
            Rat::ratio(-1, 6),
            Rat::ratio(-1, 6),
            Rat::ratio(1, 6),
        ]);
        assert_eq!(s, expected);
        // [3] at q=2: 2 irreducible cubics among 8 monic cubics
        assert_eq!(
            splitting_measure(&part(&[3])).eval_at_q(&Rat::from_int(2)),
            Rat::ratio(1, 4)
        );
    }

    #[test]
    fn splitting_measure_at_q_one_is_point_mass() {
        // used by the regular-representation constraint: at q = 1 the
        // measure concentrates on [1^d]
        for d in 1..=8u32 {
            for p in partitions_of(d) {
                let v = splitting_measure(&p).eval_at_q(&Rat::one());
                if p.is_all_ones() {
                    assert_eq!(v, Rat::one());
                } else {
                    assert_eq!(v, Rat::zero());
                }
            }
        }
    }

    #[test]
    fn sf_measure_examples() {
        assert_eq!(
            sf_splitting_measure(&part(&[2])).unwrap(),
            QInvSeries::constant(Rat::ratio(1, 2))
        );
        assert_eq!(
            sf_splitting_measure(&part(&[1, 1])).unwrap(),
            QInvSeries::constant(Rat::ratio(1, 2))
        );
        // d=3, [1,1,1]: binom(q,3)/(q^3 - q^2) = 1/6 - (1/3) q^-1
        let s = sf_splitting_measure(&part(&[1, 1, 1])).unwrap();
        assert_eq!(s, QInvSeries::new(vec![Rat::ratio(1, 6), Rat::ratio(-1, 3)]));
        // cross-check at q=3: 1 split squarefree cubic out of 18
        assert_eq!(s.eval_at_q(&Rat::from_int(3)), Rat::ratio(1, 18));
    }

    #[test]
    fn sf_measure_rejects_small_degree() {
        assert!(sf_splitting_measure(&part(&[1])).is_err());
    }

    #[test]
    fn measure_tables_are_probability_measures() {
        for d in 1..=10u32 {
            let t = measure_table(d, Flavor::All).unwrap();
            assert_eq!(t.total(), QInvSeries::one());
            assert!(t.entries().iter().all(|(p, s)| s.len() <= p.d() as usize));
            if d >= 2 {
                let t = measure_table(d, Flavor::Squarefree).unwrap();
                assert_eq!(t.total(), QInvSeries::one());
                assert!(t
                    .entries()
                    .iter()
                    .all(|(p, s)| s.len() <= (p.d() - 1) as usize));
            }
        }
        assert!(measure_table(1, Flavor::Squarefree).is_err());
        assert!(measure_table(0, Flavor::All).is_err());
    }

    #[test]
    fn measure_values_in_unit_interval_at_small_q() {
        for d in 1..=6u32 {
            for p in partitions_of(d) {
                for q in [2i64, 3, 4, 5, 7] {
                    let v = splitting_measure(&p).eval_at_q(&Rat::from_int(q));
                    assert!(!v.is_negative(), "measure below 0 at q={q}, {p}");
                    assert!(!(Rat::one() - &v).is_negative(), "measure above 1 at q={q}, {p}");
                }
            }
        }
    }
}
