//! Fibonacci continued fractions and their simultaneous approximation to a
//! number and its square.
//!
//! For distinct positive integers `a`, `b` the number `ξ_{a,b} = [0; a, b, a,
//! a, b, a, …]` has partial quotients given by the Fibonacci word. Images of
//! the word's palindromic prefixes under `a ↦ (a 1; 1 0)`, `b ↦ (b 1; 1 0)`
//! are symmetric integer matrices whose entries `(x0, x1, x2)` approximate
//! `1, ξ, ξ²` simultaneously with error `O(1/x0)` while `x0` grows like the
//! previous one raised to the golden ratio.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: integers
//! are arbitrary precision and every real quantity is reported as a rational
//! interval that is guaranteed to contain it.
//!
//! * [`fibword`]: Fibonacci words, palindromic prefixes, separators.
//! * [`exactnum`]: rationals, 2×2 integer matrices, rational intervals,
//!   golden-ratio and log/exp enclosures.
//! * [`construct`]: convergents, enclosures of `ξ`, the approximation triples.
//! * [`verify`]: growth, error and limit diagnostics, the cube experiment.
//! * [`dioph`]: brute-force best approximations (simultaneous, rational,
//!   quadratic, cubic algebraic integer).
//! * [`exec`]: the partition executor used by the parallel searches.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod dioph;
mod error;
pub mod exactnum;
pub mod exec;
pub mod fibword;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Mat2, Params, RatInterval, Rational};

/// Maximum number of precision escalations before a comparison is reported
/// as undecidable.
pub const MAX_ESCALATIONS: u32 = 60;
