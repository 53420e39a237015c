//! One module per subcommand. Each `run` returns the rendered output plus
//! the process exit code.

pub mod characters;
pub mod expect;
pub mod measure;
pub mod stable;
pub mod verify;

use crate::UsageError;

/// Splits a field order into `(p, n)` with `p` prime, or fails usably.
pub fn prime_power(q: u64) -> Result<(u32, u32), UsageError> {
    if q < 2 {
        return Err(UsageError(format!("field order must be >= 2, got {q}")));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Ok((q as u32, 1)); // q itself is prime
    }
    let mut n = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(UsageError(format!("{q} is not a prime power")));
    }
    Ok((p as u32, n))
}
