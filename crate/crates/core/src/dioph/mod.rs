//! Brute-force Diophantine searches around `ξ`.
//!
//! * [`best_simultaneous`]: the best common denominator `x0 ≤ X` for `ξ`
//!   and `ξ²`.
//! * [`best_rational`]: the closest fraction of bounded height.
//! * [`best_algebraic`]: the closest quadratic number, or algebraic integer
//!   of degree at most three, of bounded height.
//!
//! Every search is exhaustive over its candidate set. Cheap fixed-point or
//! floating-point passes only discard candidates that provably cannot win,
//! and the winner is decided with exact interval arithmetic.

mod algebraic;
mod poly;
mod simul;

pub use algebraic::{
    best_algebraic, best_rational, height_of_rational, AlgebraicCandidate, AlgebraicSearch,
    MAX_ALGEBRAIC_HEIGHT, MAX_RATIONAL_HEIGHT,
};
pub use poly::{
    closest_root, enumerate_candidates, enumerate_partition, partition_count, ClosestRoot, Poly,
    RootEnclosure, SearchKind,
};
pub use simul::{
    best_simultaneous, best_simultaneous_screened, SimulResult, DEFAULT_SCREEN_BITS,
    MAX_SIMUL_BOUND,
};
