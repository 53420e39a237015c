//! Finite expansions in `1/q` with exact rational coefficients.
//!
//! `QInvSeries` is deliberately a distinct type from [`QPoly`](super::QPoly)
//! so the `q` and `1/q` gradings cannot be mixed by accident: splitting
//! measures and expected values live here, count polynomials live there.
//!
//! Serializes as a JSON array of rational strings, index = power of `q^-1`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rat;

/// A finite sum `c_0 + c_1 q^-1 + c_2 q^-2 + ...`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QInvSeries {
    coeffs: Vec<Rat>,
}

impl QInvSeries {
    /// Builds a series from coefficients of `q^0, q^-1, q^-2, ...`, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QInvSeries { coeffs }
    }

    pub fn zero() -> Self {
        QInvSeries { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QInvSeries::new(vec![Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        QInvSeries::new(vec![c])
    }

    /// The monomial `q^-k` with coefficient `c`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.push(c);
        QInvSeries::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored coefficients (one past the largest nonzero power).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^-k`.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scalar_mul(&self, s: &Rat) -> QInvSeries {
        QInvSeries::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact evaluation at a nonzero rational `q`.
    pub fn eval_at_q(&self, q: &Rat) -> Rat {
        assert!(!q.is_zero(), "QInvSeries::eval_at_q: q must be nonzero");
        let u = q.recip();
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &u + c;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the evaluation at `q = 1`.
    pub fn coeff_sum(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc = &acc + c;
        }
        acc
    }
}

impl fmt::Display for QInvSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q^-1")?,
                _ => write!(f, "({c})*q^-{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QInvSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QInvSeries[{}]", self)
    }
}

impl Add<&QInvSeries> for &QInvSeries {
    type Output = QInvSeries;
    fn add(self, rhs: &QInvSeries) -> QInvSeries {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QInvSeries::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&QInvSeries> for &QInvSeries {
    type Output = QInvSeries;
    fn sub(self, rhs: &QInvSeries) -> QInvSeries {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QInvSeries::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Add for QInvSeries {
    type Output = QInvSeries;
    fn add(self, rhs: QInvSeries) -> QInvSeries {
        &self + &rhs
    }
}

impl Sub for QInvSeries {
    type Output = QInvSeries;
    fn sub(self, rhs: QInvSeries) -> QInvSeries {
        &self - &rhs
    }
}
