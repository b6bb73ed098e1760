//! Best approximation of `ξ` by rationals and by algebraic numbers of
//! bounded height.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::poly::{closest_root, enumerate_partition, partition_count, Poly, RootEnclosure, SearchKind};
use crate::construct::{PartialQuotients, XiEnclosure};
use crate::exactnum::{ln, ln_interval, RatInterval, Rational};
use crate::exec::Executor;
use crate::{Error, Result, MAX_ESCALATIONS};

/// Largest height accepted by [`best_rational`].
pub const MAX_RATIONAL_HEIGHT: u64 = 1_000_000_000_000_000_000;

/// Largest height accepted by [`best_algebraic`]; keeps the fixed-point
/// pruning test inside `i128`.
pub const MAX_ALGEBRAIC_HEIGHT: u64 = 2000;

/// Candidates per partition kept by the floating-point pre-pass.
const TOP_K: usize = 8;

/// An algebraic number close to `ξ`, given by its minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicCandidate {
    pub poly: Poly,
    pub height: u64,
    /// The root nearest to `ξ`; several entries when it is not resolved.
    pub roots: Vec<RootEnclosure>,
    /// Enclosure of `|ξ - α|`.
    pub dist: RatInterval,
    /// `-log dist / log height`, defined for height at least 2.
    pub exponent: Option<RatInterval>,
}

/// Outcome of a bounded-height search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicSearch {
    pub best: AlgebraicCandidate,
    /// Candidates that could not be separated from the best one.
    pub ties: Vec<Poly>,
    /// Number of candidate polynomials of height at most `H`.
    pub candidates: u64,
    /// Number of candidates evaluated exactly.
    pub confirmed: usize,
}

impl AlgebraicSearch {
    pub fn is_decided(&self) -> bool {
        self.ties.is_empty() && self.best.roots.len() == 1
    }
}

/// Height of the reduced fraction `num/den`: `max(|num|, den)`.
pub fn height_of_rational(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    if !den.is_positive() {
        return Err(Error::InvalidArgument("denominator must be positive"));
    }
    if !num.gcd(den).is_one() {
        return Err(Error::InvalidArgument("fraction is not reduced"));
    }
    Ok(num.abs().max(den.clone()))
}

fn exponent(dist: &RatInterval, height: u64, bits: u64) -> Result<Option<RatInterval>> {
    if height < 2 || !dist.is_positive() {
        return Ok(None);
    }
    let num = ln_interval(dist, bits)?.neg();
    let den = ln(&Rational::from_integer(height), bits)?;
    Ok(Some(num.div(&den)?.round_outward(bits)))
}

/// Closest reduced fraction `p/q` of height at most `h`.
///
/// The best approximation with denominator at most `h` is the last
/// convergent with `q_k ≤ h` or the intermediate fraction
/// `(p_{k-1} + t p_k)/(q_{k-1} + t q_k)` with the largest admissible `t`.
/// For `ξ ∈ (0, 1)` the height of `p/q` is `q`.
pub fn best_rational(xi: &mut XiEnclosure, h: u64, bits: u64) -> Result<AlgebraicCandidate> {
    if h == 0 || h > MAX_RATIONAL_HEIGHT {
        return Err(Error::OutOfRange {
            what: "H",
            value: h,
            min: 1,
            max: MAX_RATIONAL_HEIGHT,
        });
    }
    let h = u128::from(h);
    let (mut p0, mut q0) = (1u128, 0u128);
    let (mut p1, mut q1) = (0u128, 1u128);
    for a in PartialQuotients::new(*xi.params()) {
        let a = u128::from(a);
        let q2 = a * q1 + q0;
        if q2 > h {
            break;
        }
        let p2 = a * p1 + p0;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    let mut cands = alloc::vec![(p1, q1)];
    let t = (h - q0) / q1;
    if t >= 1 {
        cands.push((p0 + t * p1, q0 + t * q1));
    }
    let polys: Vec<Poly> = cands
        .iter()
        .map(|&(p, q)| Poly::new(alloc::vec![-(p as i64), q as i64]))
        .collect::<Result<_>>()?;
    let target = Rational::pow2_neg(bits);
    let h_bits = 128 - h.leading_zeros() as u64;
    for t in 0..=MAX_ESCALATIONS {
        let enc = xi.refine_bits(2 * h_bits + bits + (16u64 << t.min(40)))?;
        let dists: Vec<RatInterval> = cands
            .iter()
            .map(|&(p, q)| enc.add_scalar(&-Rational::from_frac(p as i64, q as i64)).abs())
            .collect();
        let best = if dists.len() == 2 && dists[1].hi() < dists[0].hi() { 1 } else { 0 };
        let separated = dists.len() == 1 || dists[best].strictly_below(&dists[1 - best]);
        if separated && dists[best].is_positive() && dists[best].relative_width_at_most(&target) {
            let (p, q) = cands[best];
            let height = p.max(q) as u64;
            return Ok(AlgebraicCandidate {
                poly: polys[best].clone(),
                height,
                roots: alloc::vec![RootEnclosure::Real(RatInterval::point(Rational::from_frac(
                    p as i64, q as i64
                )))],
                exponent: exponent(&dists[best], height, bits + 16)?,
                dist: dists[best].clone(),
            });
        }
    }
    Err(Error::Undecidable {
        what: "best rational approximation",
    })
}

/// `floor(v · 2^k)` as `i128`, or `None` when it does not fit.
fn fixed(v: &Rational, k: i64) -> Option<i128> {
    v.mul_pow2(k).floor().to_i128()
}

fn ceil_fixed(v: &Rational, k: i64) -> Option<i128> {
    v.mul_pow2(k).ceil().to_i128()
}

/// Fixed-point data for the pruning test `|P(ξ)| ≤ U · L`.
///
/// If `|ξ - α| < U` for a root `α` of `P`, then
/// `|P(ξ)| = |P(ξ) - P(α)| ≤ |ξ - α| Σ k |p_k| (ξ + U)^{k-1}`, so every
/// polynomial failing the test has all its roots at distance at least `U`.
struct Pruner {
    /// `floor(ξ^k 2^64)` for `k = 0..=3`; the true values are at most 2
    /// units larger.
    xi_pow: [i128; 4],
    /// `ceil((ξ + U)^k 2^32)` for `k = 0..=2`.
    lip: [i128; 3],
    u: i128,
}

const PRUNE_F: i64 = 64;
const PRUNE_G: i64 = 32;

impl Pruner {
    fn new(enc: &RatInterval, u: &Rational) -> Result<Self> {
        let overflow = Error::InvalidArgument("pruning bound out of range");
        let mut xi_pow = [0i128; 4];
        let mut lip = [0i128; 3];
        let top = enc.hi() + u;
        for k in 0..4u32 {
            xi_pow[k as usize] = fixed(&enc.lo().pow(k), PRUNE_F).ok_or(overflow.clone())?;
            if k < 3 {
                lip[k as usize] = ceil_fixed(&top.pow(k), PRUNE_G).ok_or(overflow.clone())?;
            }
        }
        let u = ceil_fixed(u, PRUNE_F).ok_or(overflow)?;
        Ok(Pruner { xi_pow, lip, u })
    }

    /// False only when every root of `p` is at distance at least `U`.
    fn may_beat(&self, p: &Poly) -> bool {
        let c = p.coeffs();
        let mut value = 0i128;
        let mut err = 0i128;
        let mut lip = 0i128;
        for (k, &ck) in c.iter().enumerate() {
            let ck = i128::from(ck);
            value += ck * self.xi_pow[k];
            if k >= 1 {
                err += 2 * ck.abs();
                lip += k as i128 * ck.abs() * self.lip[k - 1];
            }
        }
        let a = (value.abs() - err).max(0);
        a << PRUNE_G <= self.u * lip
    }
}

/// Approximate distance from `x` to the nearest root; only for ranking.
fn screen_score(p: &Poly, x: f64) -> f64 {
    let d = p.derivative_f64(x);
    if d == 0.0 {
        return f64::INFINITY;
    }
    (p.eval_f64(x) / d).abs()
}

/// Exact minimizer of `|ξ - α|` over the candidates of `kind` with height
/// at most `h` (`h = 0` is treated as 1).
///
/// A floating-point pass proposes a few close candidates; their exact
/// distances give a bound `U`; a rigorous fixed-point test then discards
/// every polynomial whose roots are all at distance at least `U`, and the
/// remaining ones are compared exactly. Partitions run on the executor and
/// the result is independent of it.
pub fn best_algebraic<E: Executor>(
    kind: SearchKind,
    xi: &mut XiEnclosure,
    h: u64,
    bits: u64,
    exec: &E,
) -> Result<AlgebraicSearch> {
    let h = h.max(1);
    if h > MAX_ALGEBRAIC_HEIGHT {
        return Err(Error::OutOfRange {
            what: "H",
            value: h,
            min: 1,
            max: MAX_ALGEBRAIC_HEIGHT,
        });
    }
    let parts: Vec<usize> = (0..partition_count(kind, h)).collect();
    let screen_enc = xi.refine_bits(96)?;
    let x = screen_enc.lo().to_f64();

    let ranked = exec.map(parts.clone(), |part| {
        let polys = enumerate_partition(kind, h, part);
        let n = polys.len() as u64;
        let mut scored: Vec<(f64, Poly)> = polys.into_iter().map(|p| (screen_score(&p, x), p)).collect();
        scored.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        scored.truncate(TOP_K);
        (n, scored)
    });
    let candidates: u64 = ranked.iter().map(|(n, _)| n).sum();
    let mut top: Vec<(f64, Poly)> = ranked.into_iter().flat_map(|(_, s)| s).collect();
    top.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    top.truncate(TOP_K);
    let top: Vec<Poly> = top.into_iter().map(|(_, p)| p).collect();
    if top.is_empty() {
        return Err(Error::InvalidArgument("no candidates"));
    }

    // Upper bound U on the optimum from the proposed candidates.
    let probe = xi.refine_bits(bits + 128)?;
    let u = exec
        .map(top.clone(), |p| closest_root(&p, &probe, bits + 128).map(|c| c.dist.hi().clone()))
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or(Error::InvalidArgument("no candidates"))?;
    let pruner = Pruner::new(&xi.refine_bits(PRUNE_F as u64 + 16)?, &u)?;
    let survivors = exec.map(parts, |part| {
        enumerate_partition(kind, h, part)
            .into_iter()
            .filter(|p| pruner.may_beat(p))
            .collect::<Vec<_>>()
    });
    let mut pool: Vec<Poly> = survivors.into_iter().flatten().chain(top).collect();
    pool.sort();
    pool.dedup();

    let target = Rational::pow2_neg(bits);
    let scale = (-u.log2_floor()).max(0) as u64;
    let mut last = None;
    for t in 0..=MAX_ESCALATIONS {
        let w = scale + bits + (16u64 << t.min(40));
        let Ok(enc) = xi.refine_bits(w) else { break };
        let exact = exec
            .map(pool.clone(), |p| closest_root(&p, &enc, w))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let best = (0..exact.len())
            .min_by(|&i, &j| {
                exact[i].dist.hi().cmp(exact[j].dist.hi()).then_with(|| pool[i].cmp(&pool[j]))
            })
            .ok_or(Error::InvalidArgument("no candidates"))?;
        let ties: Vec<Poly> = (0..exact.len())
            .filter(|&k| k != best && exact[k].dist.lo() <= exact[best].dist.hi())
            .map(|k| pool[k].clone())
            .collect();
        let b = &exact[best];
        let decided = ties.is_empty()
            && b.is_resolved()
            && b.dist.is_positive()
            && b.dist.relative_width_at_most(&target);
        last = Some((best, exact, ties));
        if decided {
            break;
        }
    }
    let (best, mut exact, ties) = last.ok_or(Error::Undecidable {
        what: "algebraic approximation",
    })?;
    let confirmed = pool.len();
    let found = exact.swap_remove(best);
    let poly = pool.swap_remove(best);
    let height = poly.height();
    Ok(AlgebraicSearch {
        best: AlgebraicCandidate {
            exponent: exponent(&found.dist, height, bits + 16)?,
            poly,
            height,
            roots: found.roots,
            dist: found.dist,
        },
        ties,
        candidates,
        confirmed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::xi_enclosure;
    use crate::dioph::poly::enumerate_candidates;
    use crate::exactnum::Params;
    use crate::exec::Sequential;
    use num_traits::One;
    use proptest::prelude::*;

    fn p12() -> Params {
        Params::new(1, 2).unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Every reduced p/q with 0 ≤ p ≤ q ≤ h, compared exactly.
    fn rational_oracle(h: i64) -> (i64, i64) {
        let xi = xi_enclosure(&p12(), &r("1e-40")).unwrap();
        let mut best: Option<((i64, i64), RatInterval)> = None;
        for q in 1..=h {
            for p in 0..=q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let d = xi.add_scalar(&-Rational::from_frac(p, q)).abs();
                if best.as_ref().map_or(true, |(_, b)| d.hi() < b.lo()) {
                    best = Some(((p, q), d));
                }
            }
        }
        best.unwrap().0
    }

    /// Exact minimum over every candidate without pruning.
    fn algebraic_oracle(kind: SearchKind, h: u64) -> Poly {
        let xi = xi_enclosure(&p12(), &r("1e-60")).unwrap();
        let mut best: Option<(Poly, RatInterval)> = None;
        for p in enumerate_candidates(kind, h) {
            let c = closest_root(&p, &xi, 200).unwrap();
            if best.as_ref().map_or(true, |(_, b)| c.dist.hi() < b.lo()) {
                best = Some((p, c.dist));
            }
        }
        best.unwrap().0
    }

    #[test]
    fn heights_of_rationals() {
        let h = |n: i64, d: i64| height_of_rational(&BigInt::from(n), &BigInt::from(d)).unwrap();
        assert_eq!(h(3, 4), BigInt::from(4));
        assert_eq!(h(0, 1), BigInt::one());
        assert_eq!(h(22, 7), BigInt::from(22));
        assert_eq!(h(-5, 3), BigInt::from(5));
        assert!(height_of_rational(&BigInt::from(2), &BigInt::from(4)).is_err());
        assert!(height_of_rational(&BigInt::from(1), &BigInt::from(0)).is_err());
    }

    #[test]
    fn rational_examples() {
        let mut src = XiEnclosure::new(p12());
        let c = best_rational(&mut src, 4, 64).unwrap();
        assert_eq!(c.poly.coeffs(), &[-3, 4]);
        assert!(c.dist.is_positive());
        let c = best_rational(&mut src, 1, 64).unwrap();
        assert_eq!(c.poly.coeffs(), &[-1, 1]);
        assert!(c.exponent.is_none());
        let d10 = best_rational(&mut src, 10, 64).unwrap().dist;
        let d100 = best_rational(&mut src, 100, 64).unwrap().dist;
        assert!(d100.strictly_below(&d10));
        assert!(best_rational(&mut src, 0, 64).is_err());
    }

    #[test]
    fn rational_matches_exhaustive_scan() {
        let mut src = XiEnclosure::new(p12());
        for h in 1..=60 {
            let c = best_rational(&mut src, h as u64, 64).unwrap();
            let (p, q) = rational_oracle(h);
            assert_eq!(c.poly.coeffs(), &[-p, q], "H={h}");
        }
        let mut src = XiEnclosure::new(Params::new(2, 1).unwrap());
        let c = best_rational(&mut src, 1, 64).unwrap();
        assert_eq!(c.poly.coeffs(), &[0, 1]);
    }

    #[test]
    fn pruned_search_matches_unpruned() {
        let mut src = XiEnclosure::new(p12());
        for h in 1..=5 {
            for kind in [SearchKind::Quadratic, SearchKind::CubicInteger] {
                let s = best_algebraic(kind, &mut src, h, 64, &Sequential).unwrap();
                assert!(s.is_decided());
                assert_eq!(s.best.poly, algebraic_oracle(kind, h), "{kind:?} H={h}");
                assert_eq!(s.candidates, enumerate_candidates(kind, h).len() as u64);
            }
        }
    }

    #[test]
    fn searches_are_nested() {
        let mut src = XiEnclosure::new(p12());
        for kind in [SearchKind::Quadratic, SearchKind::CubicInteger] {
            let a = best_algebraic(kind, &mut src, 10, 64, &Sequential).unwrap();
            let b = best_algebraic(kind, &mut src, 20, 64, &Sequential).unwrap();
            assert!(b.best.dist.lo() <= a.best.dist.hi());
            assert!(b.best.height <= 20 && a.best.height <= 10);
            let e = a.best.exponent.unwrap();
            assert!(e.is_positive());
        }
        let zero = best_algebraic(SearchKind::CubicInteger, &mut src, 0, 64, &Sequential).unwrap();
        let one = best_algebraic(SearchKind::CubicInteger, &mut src, 1, 64, &Sequential).unwrap();
        assert_eq!(zero.best.poly, one.best.poly);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn rational_beats_random_fractions(h in 2u64..5000, seeds in proptest::collection::vec((1u64..u64::MAX, 0u64..u64::MAX), 200)) {
            let mut src = XiEnclosure::new(p12());
            let c = best_rational(&mut src, h, 64).unwrap();
            prop_assert!(c.height <= h);
            let xi = src.refine_bits(200).unwrap();
            for (qs, ps) in seeds {
                let q = 1 + qs % h;
                let p = ps % (q + 1);
                if p.gcd(&q) != 1 {
                    continue;
                }
                let d = xi.add_scalar(&-Rational::from_frac(p as i64, q as i64)).abs();
                prop_assert!(c.dist.lo() <= d.hi());
            }
        }
    }
}
