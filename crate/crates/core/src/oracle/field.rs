//! Construction of finite fields of small prime-power order, with exact
//! table-based arithmetic.
//!
//! Elements of the field with `q = p^n` elements are residues of
//! polynomials of degree `< n` over the prime field, encoded as the base-`p`
//! integer of their coefficient vector (constant digit least significant).
//! That encoding fixes the element ordering used everywhere by the oracle:
//! element `0` is zero, element `1` is one.
//!
//! For `n > 1` the modulus is chosen deterministically: among monic
//! irreducible polynomials of degree `n`, the one whose coefficient tuple
//! `(c_{n-1}, ..., c_1, c_0)` -- read most-significant-first -- is
//! lexicographically least. Irreducibility of the chosen modulus is
//! verified during construction by trial division.

use crate::error::{Error, Result};

/// Largest permitted field order; keeps the `q x q` arithmetic tables small.
pub const MAX_FIELD_ORDER: u64 = 4096;

/// A constructed finite field with exact arithmetic tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    q: u64,
    /// Coefficients `c_0..c_{n-1}` of the monic modulus (absent for `n = 1`).
    modulus: Option<Vec<u32>>,
    add: Vec<u16>,
    sub: Vec<u16>,
    mul: Vec<u16>,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldSpec(q={}^{}", self.p, self.n)?;
        if let Some(m) = &self.modulus {
            write!(f, ", modulus coeffs {m:?}")?;
        }
        write!(f, ")")
    }
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The field order `q = p^n`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Constant-first coefficients of the modulus, `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.sub[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= p as u64 {
        if p % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Digits of `index` base `p`, least significant first, padded to `n`.
fn digits(index: u64, p: u32, n: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(n as usize);
    let mut rest = index;
    for _ in 0..n {
        out.push((rest % p as u64) as u32);
        rest /= p as u64;
    }
    out
}

/// Product of two coefficient vectors modulo `modulus` (monic, degree `n`)
/// and `p`. Everything is tiny here; this only runs while building tables.
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let n = modulus.len();
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    // reduce by x^n = -(c_{n-1} x^{n-1} + ... + c_0)
    for i in (n..prod.len()).rev() {
        let lead = prod[i];
        if lead == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &c) in modulus.iter().enumerate() {
            let idx = i - n + j;
            let subtrahend = (lead * c as u64) % p as u64;
            prod[idx] = (prod[idx] + p as u64 - subtrahend) % p as u64;
        }
    }
    prod.truncate(n);
    prod.iter().map(|&c| c as u32).collect()
}

/// True if the monic polynomial with constant-first coefficients `f` over
/// the prime field is divisible by the monic `g`.
fn divides_fp(g: &[u32], f: &[u32], p: u64) -> bool {
    let mut rem: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let gd = g.len() - 1;
    while rem.len() > gd {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - gd;
        if lead != 0 {
            for (j, &gj) in g.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + p - (lead * gj as u64) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Finds the deterministic modulus: scan monic degree-`n` polynomials over
/// the prime field in most-significant-first lexicographic order and take
/// the first irreducible one.
fn least_irreducible_modulus(p: u32, n: u32) -> Vec<u32> {
    // irreducible iff no monic divisor of degree 1..=n/2
    let candidates_of_degree = |deg: u32| -> Vec<Vec<u32>> {
        let count = (p as u64).pow(deg);
        (0..count)
            .map(|idx| {
                let mut g = digits(idx, p, deg);
                g.push(1);
                g
            })
            .collect()
    };
    let mut low_divisors: Vec<Vec<u32>> = Vec::new();
    for deg in 1..=n / 2 {
        low_divisors.extend(candidates_of_degree(deg));
    }

    let total = (p as u64).pow(n);
    for idx in 0..total {
        let mut f = digits(idx, p, n);
        f.push(1);
        if !low_divisors.iter().any(|g| divides_fp(g, &f, p as u64)) {
            return f[..n as usize].to_vec();
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over a prime field")
}

/// Constructs the field with `p^n` elements. `p` must be prime (checked by
/// trial division) and `p^n` at most [`MAX_FIELD_ORDER`].
pub fn build_field(p: u32, n: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 1 {
        return Err(Error::InvalidDegree("field extension degree must be >= 1".into()));
    }
    let q = (p as u64).checked_pow(n).filter(|&q| q <= MAX_FIELD_ORDER);
    let Some(q) = q else {
        return Err(Error::ResourceBound(format!(
            "field order {p}^{n} exceeds {MAX_FIELD_ORDER}"
        )));
    };

    let modulus = (n > 1).then(|| least_irreducible_modulus(p, n));

    let qs = q as usize;
    let mut add = vec![0u16; qs * qs];
    let mut sub = vec![0u16; qs * qs];
    let mut mul = vec![0u16; qs * qs];
    let encode = |coeffs: &[u32]| -> u16 {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = acc * p as u64 + c as u64;
        }
        acc as u16
    };
    for a in 0..q {
        let da = digits(a, p, n);
        for b in 0..q {
            let db = digits(b, p, n);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            let diff: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + p - y) % p).collect();
            add[a as usize * qs + b as usize] = encode(&sum);
            sub[a as usize * qs + b as usize] = encode(&diff);
            let prod = match &modulus {
                Some(m) => poly_mul_mod(&da, &db, m, p),
                None => vec![(da[0] as u64 * db[0] as u64 % p as u64) as u32],
            };
            mul[a as usize * qs + b as usize] = encode(&prod);
        }
    }

    // sanity: 0 and 1 behave; the modulus really is irreducible
    let field = FieldSpec {
        p,
        n,
        q,
        modulus,
        add,
        sub,
        mul,
    };
    debug_assert!((0..q as u16).all(|a| field.mul(a, 1) == a && field.add(a, 0) == a));
    if let Some(m) = &field.modulus {
        let mut f: Vec<u32> = m.clone();
        f.push(1);
        for deg in 1..=n / 2 {
            for idx in 0..(p as u64).pow(deg) {
                let mut g = digits(idx, p, deg);
                g.push(1);
                assert!(
                    !divides_fp(&g, &f, p as u64),
                    "modulus for {p}^{n} failed irreducibility verification"
                );
            }
        }
    }
    Ok(field)
}
