//! Exact factorization statistics of monic polynomials over finite fields.
//!
//! The crate computes, entirely in exact rational arithmetic:
//!
//! * splitting measures -- the distribution of factorization types of
//!   monic (or squarefree monic) degree-`d` polynomials, as finite
//!   expansions in `1/q` with `q` symbolic ([`measures`]);
//! * the integer character families `psi`, `phi`, `chi` whose values are
//!   the `1/q`-coefficients of those measures ([`lie`]);
//! * expected values of factorization statistics, reachable both through
//!   inner products with the character families and through the measures,
//!   plus irreducible decompositions and stabilization scans ([`classfn`]);
//! * a brute-force enumeration oracle over constructed finite fields that
//!   recounts everything from scratch for exact comparison ([`oracle`]).
//!
//! Everything is deterministic: partitions are always enumerated in
//! reverse-lexicographic order, parallelism never affects results, and all
//! equalities asserted anywhere are exact.

pub mod algebra;
pub mod classfn;
pub mod error;
pub mod lie;
pub mod measures;
pub mod oracle;
pub mod partitions;

pub use algebra::{QInvSeries, QPoly, Rat};
pub use classfn::{ClassFunction, StatExpr};
pub use error::{Error, Result};
pub use lie::{CharKind, CharacterFamily};
pub use measures::{Flavor, MeasureTable};
pub use oracle::{FieldSpec, FqPoly};
pub use partitions::{partitions_of, Partition};
