//! Ground-truth engine: finite field construction, sieving of monic
//! irreducibles, exhaustive factorization censuses, and empirical
//! expectations for exact comparison against the formula side.

mod census;
mod field;

pub use census::{
    census, census_both, empirical_expectation, factor, factorization_type,
    irreducibles_by_degree, Census, FqPoly, IrreducibleTable, ENUM_BOUND,
};
pub use field::{build_field, FieldSpec, MAX_FIELD_ORDER};
