//! Dense univariate polynomials in the symbolic variable `q` with exact
//! rational coefficients.
//!
//! Coefficients are stored constant-first with trailing zeros trimmed; the
//! zero polynomial has an empty coefficient list. Degrees stay small (at
//! most a few dozen) everywhere in this crate, so the dense representation
//! is the right one.
//!
//! Serializes as a JSON array of rational strings, index = power of `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::qinv::QInvSeries;
use super::rational::Rat;

/// A polynomial in `q` over the rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    /// Builds a polynomial from constant-first coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    /// The monomial `q`.
    pub fn var() -> Self {
        QPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::new(vec![c])
    }

    /// Convenience constructor from machine integers, constant first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Exact evaluation at a rational point, by Horner's rule.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * at + c;
        }
        acc
    }

    pub fn scalar_mul(&self, s: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplication by `q^k`.
    pub fn shift_up(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Euclidean division: `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg(remainder) < deg(divisor)`. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "QPoly::div_rem: division by zero");
        let d_deg = divisor.degree().unwrap();
        let s_deg = match self.degree() {
            Some(d) => d,
            None => return (QPoly::zero(), QPoly::zero()),
        };
        if s_deg < d_deg {
            return (QPoly::zero(), self.clone());
        }

        let lc = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let q_len = s_deg - d_deg + 1;
        let mut quot = vec![Rat::zero(); q_len];

        for i in (0..q_len).rev() {
            let c = &rem[i + d_deg] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(dj * &c);
            }
            quot[i] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero. A nonzero
    /// remainder here is always a programming error, never a rounding site.
    pub fn exact_div(&self, divisor: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "QPoly::exact_div: nonzero remainder");
        q
    }

    /// Rising-factorial binomial with repetition:
    /// `p (p+1) ... (p+m-1) / m!`, the number of size-`m` multisets drawn
    /// from a `p`-element set when `p` is a count.
    pub fn multichoose(&self, m: u32) -> QPoly {
        let mut acc = QPoly::one();
        let mut factorial = Rat::one();
        for i in 0..m {
            acc = &acc * &(self + &QPoly::constant(Rat::from_int(i as i64)));
            factorial = &factorial * &Rat::from_int((i + 1) as i64);
        }
        acc.scalar_mul(&factorial.recip())
    }

    /// Falling-factorial binomial coefficient with polynomial argument:
    /// `p (p-1) ... (p-m+1) / m!`.
    pub fn binomial(&self, m: u32) -> QPoly {
        let mut acc = QPoly::one();
        let mut factorial = Rat::one();
        for i in 0..m {
            acc = &acc * &(self - &QPoly::constant(Rat::from_int(i as i64)));
            factorial = &factorial * &Rat::from_int((i + 1) as i64);
        }
        acc.scalar_mul(&factorial.recip())
    }

    /// Reinterprets `self / q^d` as a finite expansion in `1/q`.
    ///
    /// Requires `deg(self) <= d`; entry `k` of the result is the coefficient
    /// of `q^{d-k}` in `self`.
    pub fn into_inv_series(&self, d: usize) -> QInvSeries {
        let deg = self.degree().unwrap_or(0);
        assert!(
            self.is_zero() || deg <= d,
            "QPoly::into_inv_series: degree {deg} exceeds denominator power {d}"
        );
        let coeffs = (0..=d).map(|k| self.coeff(d - k)).collect();
        QInvSeries::new(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly[{}]", self)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}
