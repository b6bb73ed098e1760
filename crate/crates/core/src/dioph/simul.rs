//! Best simultaneous approximation of `ξ` and `ξ²` with a common
//! denominator bounded by `X`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::construct::XiEnclosure;
use crate::exactnum::{exp, golden_ratio_bits, ln, RatInterval, Rational};
use crate::exec::Executor;
use crate::{Error, Result, MAX_ESCALATIONS};

/// Largest bound `X` accepted by the exhaustive search.
pub const MAX_SIMUL_BOUND: u64 = 1_000_000_000;

/// Fixed-point fraction bits of the default screening pass.
pub const DEFAULT_SCREEN_BITS: u32 = 64;

/// Number of ranges the search space is split into, independent of the
/// executor so that the work done is the same for every thread count.
const PARTS: u64 = 64;

/// `δ(X) = min_{0 < x0 ≤ X} max(‖x0 ξ‖, ‖x0 ξ²‖)` and its minimizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulResult {
    pub x_bound: u64,
    pub x0: BigInt,
    /// Nearest integer to `x0 ξ`.
    pub x1: BigInt,
    /// Nearest integer to `x0 ξ²`.
    pub x2: BigInt,
    pub delta: RatInterval,
    /// `δ(X) · X^{1/γ}`.
    pub normalized: RatInterval,
    /// Other `x0` that could not be separated from the minimizer.
    pub ties: Vec<u64>,
}

impl SimulResult {
    pub fn is_decided(&self) -> bool {
        self.ties.is_empty()
    }
}

/// Exhaustive search with the default screening precision.
pub fn best_simultaneous<E: Executor>(
    xi: &mut XiEnclosure,
    x_bound: u64,
    bits: u64,
    exec: &E,
) -> Result<SimulResult> {
    best_simultaneous_screened(xi, x_bound, bits, DEFAULT_SCREEN_BITS, exec)
}

/// Exhaustive search over `x0 ∈ [1, X]`.
///
/// A fixed-point pass with `screen_bits` fraction bits scores every `x0`
/// with a known error bound and keeps each `x0` that may be optimal; the
/// survivors are then compared with exact interval arithmetic until the
/// minimizer is separated and `δ` has relative width `2^-bits`. The result
/// does not depend on `screen_bits` or on the executor.
pub fn best_simultaneous_screened<E: Executor>(
    xi: &mut XiEnclosure,
    x_bound: u64,
    bits: u64,
    screen_bits: u32,
    exec: &E,
) -> Result<SimulResult> {
    if x_bound == 0 || x_bound > MAX_SIMUL_BOUND {
        return Err(Error::OutOfRange {
            what: "X",
            value: x_bound,
            min: 1,
            max: MAX_SIMUL_BOUND,
        });
    }
    if !(8..=64).contains(&screen_bits) {
        return Err(Error::InvalidArgument("screen bits must lie in [8, 64]"));
    }
    let survivors = screen(xi, x_bound, screen_bits, exec)?;
    confirm(xi, x_bound, bits, survivors, exec)
}

fn screen<E: Executor>(
    xi: &mut XiEnclosure,
    x_bound: u64,
    f: u32,
    exec: &E,
) -> Result<Vec<u64>> {
    let enc = xi.refine_bits(u64::from(f) + 16)?;
    let fixed = |v: &Rational| -> u128 {
        // v ∈ (0, 1), so the result is below 2^f.
        u128::try_from(v.mul_pow2(i64::from(f)).floor()).unwrap_or(0)
    };
    let s1 = fixed(enc.lo());
    let s2 = fixed(&(enc.lo() * enc.lo()));
    let one = 1u128 << f;
    let mask = one - 1;
    // Scaled values are low by at most 2 x0 ≤ 2X units; so are the scores.
    let slack = 4 * u128::from(x_bound);
    let score = move |x0: u64| -> u128 {
        let d = |s: u128| {
            let frac = (u128::from(x0) * s) & mask;
            frac.min(one - frac)
        };
        d(s1).max(d(s2))
    };
    let step = x_bound.div_ceil(PARTS);
    let ranges: Vec<(u64, u64)> = (0..PARTS)
        .map(|k| (1 + k * step, ((k + 1) * step).min(x_bound)))
        .filter(|(lo, hi)| lo <= hi)
        .collect();
    let local = exec.map(ranges, |(lo, hi)| {
        let best = (lo..=hi).map(score).min().unwrap_or(u128::MAX);
        let keep: Vec<(u64, u128)> = (lo..=hi)
            .map(|x| (x, score(x)))
            .filter(|&(_, s)| s <= best.saturating_add(slack))
            .collect();
        (best, keep)
    });
    let m = local.iter().map(|(b, _)| *b).min().unwrap_or(0);
    Ok(local
        .into_iter()
        .flat_map(|(_, keep)| keep)
        .filter(|&(_, s)| s <= m.saturating_add(slack))
        .map(|(x, _)| x)
        .collect())
}

fn quality(x0: u64, xi: &RatInterval, xi2: &RatInterval) -> RatInterval {
    let x = Rational::from_integer(x0);
    let d1 = xi.scale(&x).nearest_int_distance();
    let d2 = xi2.scale(&x).nearest_int_distance();
    d1.max_with(&d2)
}

fn nearest_integer(v: &RatInterval) -> BigInt {
    (v.midpoint() + Rational::from_frac(1, 2)).floor()
}

fn confirm<E: Executor>(
    xi: &mut XiEnclosure,
    x_bound: u64,
    bits: u64,
    survivors: Vec<u64>,
    exec: &E,
) -> Result<SimulResult> {
    let xbits = 64 - x_bound.leading_zeros() as u64;
    let target = Rational::pow2_neg(bits);
    let mut last = None;
    for t in 0..=MAX_ESCALATIONS {
        let Ok(enc) = xi.refine_bits(2 * xbits + bits + (16u64 << t.min(40))) else {
            break;
        };
        let enc2 = enc.pow(2);
        let q = exec.map(survivors.clone(), |x0| quality(x0, &enc, &enc2));
        let best = (0..q.len())
            .min_by(|&i, &j| q[i].hi().cmp(q[j].hi()).then(survivors[i].cmp(&survivors[j])))
            .ok_or(Error::InvalidArgument("empty search"))?;
        let ties: Vec<u64> = (0..q.len())
            .filter(|&k| k != best && q[k].lo() <= q[best].hi())
            .map(|k| survivors[k])
            .collect();
        let decided = ties.is_empty() && q[best].relative_width_at_most(&target);
        last = Some((survivors[best], q[best].clone(), ties, enc));
        if decided {
            break;
        }
    }
    let (x0, delta, ties, enc) = last.ok_or(Error::Undecidable {
        what: "simultaneous approximation",
    })?;
    let x = Rational::from_integer(x0);
    let x1 = nearest_integer(&enc.scale(&x));
    let x2 = nearest_integer(&enc.pow(2).scale(&x));
    // X^{1/γ} = exp((γ - 1) log X)
    let w = bits + 16;
    let ln_x = ln(&Rational::from_integer(x_bound), w)?;
    let inv_gamma = golden_ratio_bits(w + 8).add_scalar(&Rational::from_integer(-1));
    let normalized = delta
        .mul(&exp(&ln_x.mul(&inv_gamma), w)?)
        .round_outward(w + 8);
    Ok(SimulResult {
        x_bound,
        x0: BigInt::from(x0),
        x1,
        x2,
        delta,
        normalized,
        ties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{triple_sequence, xi_enclosure};
    use crate::exactnum::Params;
    use crate::exec::Sequential;
    use proptest::prelude::*;

    fn p12() -> Params {
        Params::new(1, 2).unwrap()
    }

    /// Exact minimum over all x0 ≤ X against a fixed tight bracket.
    fn oracle(x_bound: u64) -> (u64, RatInterval) {
        let xi = xi_enclosure(&p12(), &"1e-60".parse().unwrap()).unwrap();
        let xi2 = xi.pow(2);
        let mut best: Option<(u64, RatInterval)> = None;
        for x0 in 1..=x_bound {
            let q = quality(x0, &xi, &xi2);
            if best.as_ref().map_or(true, |(_, b)| q.hi() < b.lo()) {
                best = Some((x0, q));
            }
        }
        best.unwrap()
    }

    #[test]
    fn single_candidate() {
        let mut src = XiEnclosure::new(p12());
        let r = best_simultaneous(&mut src, 1, 64, &Sequential).unwrap();
        assert_eq!(r.x0, BigInt::from(1));
        // ξ ≈ 0.7205 and ξ² ≈ 0.5191.
        assert_eq!((r.x1.clone(), r.x2.clone()), (BigInt::from(1), BigInt::from(1)));
        let xi = xi_enclosure(&p12(), &"1e-30".parse().unwrap()).unwrap();
        let expected = xi.nearest_int_distance().max_with(&xi.pow(2).nearest_int_distance());
        assert!(r.delta.intersects(&expected));
        assert!(r.normalized.intersects(&r.delta));
    }

    #[test]
    fn matches_exhaustive_oracle() {
        let mut src = XiEnclosure::new(p12());
        for x in [2, 3, 10, 57, 100, 777, 2000] {
            let r = best_simultaneous(&mut src, x, 64, &Sequential).unwrap();
            let (x0, q) = oracle(x);
            assert_eq!(r.x0, BigInt::from(x0), "X={x}");
            assert!(r.delta.intersects(&q));
            assert!(r.is_decided());
        }
    }

    #[test]
    fn triples_are_feasible() {
        let mut src = XiEnclosure::new(p12());
        let xi = src.refine_bits(200).unwrap();
        for t in triple_sequence(&p12(), 12).unwrap().iter().skip(1) {
            let x: u64 = t.x0.clone().try_into().unwrap();
            if x > 100_000 {
                break;
            }
            let r = best_simultaneous(&mut src, x, 64, &Sequential).unwrap();
            let own = quality(x, &xi, &xi.pow(2));
            assert!(r.delta.lo() <= own.hi(), "X={x}");
        }
    }

    #[test]
    fn rejects_bad_bounds() {
        let mut src = XiEnclosure::new(p12());
        assert!(best_simultaneous(&mut src, 0, 64, &Sequential).is_err());
        assert!(best_simultaneous(&mut src, MAX_SIMUL_BOUND + 1, 64, &Sequential).is_err());
        assert!(best_simultaneous_screened(&mut src, 10, 64, 4, &Sequential).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn screening_precision_does_not_change_result(x in 1u64..3000, f in 12u32..40) {
            let mut src = XiEnclosure::new(p12());
            let coarse = best_simultaneous_screened(&mut src, x, 64, f, &Sequential).unwrap();
            let fine = best_simultaneous(&mut src, x, 64, &Sequential).unwrap();
            prop_assert_eq!(coarse, fine);
        }

        #[test]
        fn delta_is_monotone(x in 1u64..3000, extra in 1u64..500) {
            let mut src = XiEnclosure::new(p12());
            let a = best_simultaneous(&mut src, x, 64, &Sequential).unwrap();
            let b = best_simultaneous(&mut src, x + extra, 64, &Sequential).unwrap();
            prop_assert!(b.delta.lo() <= a.delta.hi());
        }
    }
}
