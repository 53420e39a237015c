//! Exact rational and polynomial arithmetic: the numeric substrate for
//! everything else in the crate.
//!
//! All values are immutable after construction and all operations are pure,
//! so they can be shared and evaluated in parallel freely.

mod qinv;
mod qpoly;
mod rational;

pub use qinv::QInvSeries;
pub use qpoly::QPoly;
pub use rational::Rat;
