//! Class functions on the symmetric group: built-in factorization
//! statistics, inner products, expected-value series, decomposition into
//! irreducibles, and stabilization scans.
//!
//! A factorization statistic is any function of the factorization type of a
//! monic polynomial, i.e. a function on partitions of `d`, i.e. a class
//! function. Expected values over all (resp. squarefree) monic degree-`d`
//! polynomials are exact `1/q`-expansions whose coefficients are inner
//! products with the psi (resp. chi) character family; the same series are
//! also reachable through the splitting measures, and the two routes are
//! kept as separate code paths so they can be compared.

mod irr;
mod stat;

pub use irr::{character_table, hook_dim, mn_character, CharacterTable};
pub use stat::{parse_stat, StatExpr};

use num_bigint::BigInt;

use crate::algebra::{QInvSeries, Rat};
use crate::error::{Error, Result};
use crate::lie::{shared_family, CharKind};
use crate::measures::{measure_table, Flavor};
use crate::partitions::{partitions_of, Partition};

/// An exact-rational-valued function on the partitions of a fixed `d`,
/// stored in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    d: u32,
    values: Vec<Rat>,
}

impl ClassFunction {
    /// Builds from values parallel to `partitions_of(d)`.
    pub fn from_values(d: u32, values: Vec<Rat>) -> Self {
        assert_eq!(
            values.len(),
            partitions_of(d).len(),
            "ClassFunction: values must cover every partition of {d}"
        );
        ClassFunction { d, values }
    }

    /// Builds by evaluating `f` on each partition of `d`.
    pub fn from_fn(d: u32, f: impl Fn(&Partition) -> Rat) -> Self {
        let values = partitions_of(d).iter().map(f).collect();
        ClassFunction { d, values }
    }

    pub fn constant(d: u32, value: Rat) -> Self {
        ClassFunction {
            d,
            values: vec![value; partitions_of(d).len()],
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Value on a partition; panics if `lambda` is not a partition of `d`.
    pub fn value(&self, lambda: &Partition) -> Rat {
        assert_eq!(lambda.d(), self.d, "value: {lambda} has the wrong degree");
        let idx = partitions_of(self.d)
            .iter()
            .position(|p| p == lambda)
            .unwrap();
        self.values[idx].clone()
    }

    /// Pairs of (partition, value) in enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (Partition, &Rat)> {
        partitions_of(self.d).into_iter().zip(self.values.iter())
    }

    /// The standard invariant inner product
    /// `<P, R> = sum_lambda P(lambda) R(lambda) / z_lambda`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rat> {
        if self.d != other.d {
            return Err(Error::DegreeMismatch(format!(
                "inner product of degrees {} and {}",
                self.d, other.d
            )));
        }
        let mut acc = Rat::zero();
        for ((lambda, a), b) in self.iter().zip(other.values.iter()) {
            acc = acc + (a * b) / Rat::from(lambda.z());
        }
        Ok(acc)
    }

    /// Inner product against an integer character row.
    fn inner_with_row(&self, row: &[BigInt]) -> Rat {
        let mut acc = Rat::zero();
        for ((lambda, a), b) in self.iter().zip(row.iter()) {
            acc = acc + a * Rat::new(b.clone(), lambda.z());
        }
        acc
    }
}

/// Names accepted by [`builtin`], in canonical order. `x_k` variables are
/// additionally accepted in their `x<k>` spelling.
pub const BUILTIN_NAMES: [&str; 5] = ["trivial", "sgn", "quad_excess", "num_roots", "even_type"];

/// The built-in factorization statistics at degree `d`:
///
/// * `trivial` -- constant 1;
/// * `sgn` -- the sign of the factorization type;
/// * `quad_excess` -- reducible minus irreducible quadratic factors,
///   `binom(m_1, 2) - m_2`;
/// * `num_roots` -- roots with multiplicity, `m_1` (same as `x1`);
/// * `even_type` -- indicator of even factorization type, `(1 + sgn)/2`;
/// * `x<k>` -- the part-count `m_k`.
pub fn builtin(name: &str, d: u32) -> Result<ClassFunction> {
    let f: Box<dyn Fn(&Partition) -> Rat> = match name {
        "trivial" => Box::new(|_| Rat::one()),
        "sgn" => Box::new(|p: &Partition| Rat::from_int(p.sign() as i64)),
        "quad_excess" => Box::new(|p: &Partition| {
            let m1 = p.multiplicity(1) as i64;
            let m2 = p.multiplicity(2) as i64;
            Rat::from_int(m1 * (m1 - 1) / 2 - m2)
        }),
        "num_roots" => Box::new(|p: &Partition| Rat::from_int(p.multiplicity(1) as i64)),
        "even_type" => Box::new(|p: &Partition| {
            if p.sign() == 1 {
                Rat::one()
            } else {
                Rat::zero()
            }
        }),
        _ => {
            if let Some(k) = name
                .strip_prefix('x')
                .and_then(|rest| rest.parse::<u32>().ok())
                .filter(|&k| k >= 1)
            {
                Box::new(move |p: &Partition| Rat::from_int(p.multiplicity(k) as i64))
            } else {
                return Err(Error::UnknownStatistic(name.to_string()));
            }
        }
    };
    Ok(ClassFunction::from_fn(d, f))
}

/// Evaluates a parsed statistic expression into a class function at `d`.
pub fn eval_stat(expr: &StatExpr, d: u32) -> ClassFunction {
    ClassFunction::from_fn(d, |p| expr.eval(p))
}

/// Resolves `--stat` style source text: a builtin name, or an expression.
pub fn resolve_stat(src: &str, d: u32) -> Result<ClassFunction> {
    match builtin(src, d) {
        Ok(cf) => Ok(cf),
        Err(Error::UnknownStatistic(_)) => Ok(eval_stat(&parse_stat(src)?, d)),
        Err(e) => Err(e),
    }
}

/// Expected value of `P` over all monic degree-`d` polynomials, as the
/// exact series `sum_k <P, psi_d^k> q^-k`.
pub fn expected_value(p: &ClassFunction) -> QInvSeries {
    let family = shared_family(p.d(), CharKind::Psi);
    let coeffs = (0..family.num_rows())
        .map(|k| p.inner_with_row(family.row(k).unwrap()))
        .collect();
    QInvSeries::new(coeffs)
}

/// The same expected value computed through the splitting measure,
/// `sum_lambda P(lambda) nu(lambda)`. Kept separate from
/// [`expected_value`] so the two routes can be compared exactly.
pub fn expected_value_via_measure(p: &ClassFunction) -> QInvSeries {
    let table = measure_table(p.d(), Flavor::All).expect("measure table at d >= 1");
    let mut acc = QInvSeries::zero();
    for ((lambda, value), (mu, series)) in p.iter().zip(table.entries()) {
        debug_assert_eq!(&lambda, mu);
        acc = &acc + &series.scalar_mul(value);
    }
    acc
}

/// Expected value of `P` over squarefree monic degree-`d` polynomials:
/// coefficient `k` is `(-1)^k <P, chi_d^k>` for `k = 0..d-2`. Requires
/// `d >= 2`.
pub fn expected_value_sf(p: &ClassFunction) -> Result<QInvSeries> {
    if p.d() < 2 {
        return Err(Error::InvalidDegree(
            "squarefree expected value requires d >= 2".into(),
        ));
    }
    let family = shared_family(p.d(), CharKind::Chi);
    let coeffs = (0..family.num_rows())
        .map(|k| {
            let v = p.inner_with_row(family.row(k).unwrap());
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    Ok(QInvSeries::new(coeffs))
}

/// Squarefree expected value through the squarefree splitting measure.
pub fn expected_value_sf_via_measure(p: &ClassFunction) -> Result<QInvSeries> {
    let table = measure_table(p.d(), Flavor::Squarefree)?;
    let mut acc = QInvSeries::zero();
    for ((lambda, value), (mu, series)) in p.iter().zip(table.entries()) {
        debug_assert_eq!(&lambda, mu);
        acc = &acc + &series.scalar_mul(value);
    }
    Ok(acc)
}

/// Coefficients of `P` in the basis of irreducible characters:
/// `a_mu = <P, chi_mu>`, one entry per partition of `d` in enumeration
/// order (zeros included).
pub fn decompose(p: &ClassFunction) -> Vec<(Partition, Rat)> {
    let d = p.d();
    let table = character_table(d);
    partitions_of(d)
        .into_iter()
        .enumerate()
        .map(|(i, mu)| {
            let a = p.inner_with_row(&table.rows[i]);
            (mu, a)
        })
        .collect()
}

/// Rebuilds the class function `sum_mu a_mu chi_mu` from decomposition
/// coefficients in enumeration order.
pub fn reconstruct(d: u32, coeffs: &[(Partition, Rat)]) -> ClassFunction {
    let table = character_table(d);
    let n = partitions_of(d).len();
    assert_eq!(coeffs.len(), n, "reconstruct: need one coefficient per partition");
    let values = (0..n)
        .map(|j| {
            let mut acc = Rat::zero();
            for (i, (_, a)) in coeffs.iter().enumerate() {
                acc = acc + a * &Rat::from(table.rows[i][j].clone());
            }
            acc
        })
        .collect();
    ClassFunction::from_values(d, values)
}

/// If every irreducible multiplicity of `P` is a nonnegative integer,
/// returns them; otherwise `None`. A `Some` certifies that `P` is the
/// character of an actual representation.
pub fn character_multiplicities(p: &ClassFunction) -> Option<Vec<(Partition, BigInt)>> {
    decompose(p)
        .into_iter()
        .map(|(mu, a)| {
            let n = a.to_bigint()?;
            (n >= BigInt::from(0)).then_some((mu, n))
        })
        .collect()
}

/// Hard limit on stabilization scans; guards against runaway requests.
pub const MAX_STABLE_D: u32 = 64;

/// How a stabilization scan ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StableOutcome {
    /// Three consecutive degrees agreed; `value` is the common inner
    /// product and `onset_d` the first degree of the agreeing run.
    Stabilized { value: Rat, onset_d: u32 },
    /// No three consecutive degrees agreed up to `d_max`.
    NotStabilized,
}

/// Result of scanning `<P_d, psi_d^k>` for increasing `d`.
#[derive(Clone, Debug)]
pub struct StableReport {
    pub k: u32,
    pub d_max: u32,
    /// Scanned `(d, inner product)` pairs, in order.
    pub values: Vec<(u32, Rat)>,
    pub outcome: StableOutcome,
    /// The stopping rule, spelled out for reports: eventual constancy is
    /// guaranteed for character polynomials, but the onset is detected
    /// heuristically.
    pub criterion: &'static str,
}

/// Scans the inner products `<P_d, psi_d^k>` of a character polynomial for
/// `d = k+1, k+2, ...` and stops once three consecutive values agree (a
/// heuristic for the guaranteed eventual constancy).
///
/// The scan starts at `d = k + 1` because `psi_d^k` vanishes identically
/// for `d <= k`; starting lower would report a spurious all-zero run.
pub fn stable_inner(expr: &StatExpr, k: u32, d_max: u32) -> Result<StableReport> {
    if d_max > MAX_STABLE_D {
        return Err(Error::ResourceBound(format!(
            "stabilization scan d_max {d_max} exceeds limit {MAX_STABLE_D}"
        )));
    }
    let mut values: Vec<(u32, Rat)> = Vec::new();
    let mut outcome = StableOutcome::NotStabilized;
    for d in (k + 1)..=d_max {
        let p = eval_stat(expr, d);
        let family = shared_family(d, CharKind::Psi);
        let v = p.inner_with_row(family.row(k as usize).unwrap());
        values.push((d, v));
        let n = values.len();
        if n >= 3 && values[n - 1].1 == values[n - 2].1 && values[n - 2].1 == values[n - 3].1 {
            outcome = StableOutcome::Stabilized {
                value: values[n - 1].1.clone(),
                onset_d: values[n - 3].0,
            };
            break;
        }
    }
    Ok(StableReport {
        k,
        d_max,
        values,
        outcome,
        criterion: "three consecutive equal values (heuristic)",
    })
}
