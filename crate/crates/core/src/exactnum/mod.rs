//! Exact arithmetic: rationals, rational intervals with guaranteed
//! enclosures, 2×2 integer matrices and the word homomorphism `Φ`.

mod elementary;
mod interval;
mod mat2;
mod rational;

pub use elementary::{exp, golden_ratio, golden_ratio_bits, ln, ln2, ln_interval, log_enclosure};
pub use interval::RatInterval;
pub use mat2::{letter_matrix, phi, Mat2, Params};
pub use rational::{Round, Rational};
