use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{Round, Rational};
use crate::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// Every operation returns an enclosure: the result contains the exact
/// result of the operation applied to every choice of points in the inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument("interval with lo > hi"));
        }
        Ok(RatInterval { lo, hi })
    }

    /// Interval spanned by two values given in either order.
    pub fn spanning(x: Rational, y: Rational) -> Self {
        if x <= y {
            RatInterval { lo: x, hi: y }
        } else {
            RatInterval { lo: y, hi: x }
        }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Rational::from_integer(n))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi).mul_pow2(-1)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `other ⊆ self`.
    pub fn encloses(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Every point of `self` is below every point of `other`.
    pub fn strictly_below(&self, other: &RatInterval) -> bool {
        self.hi < other.lo
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Enclosure of `min(s, t)` for `s ∈ self`, `t ∈ other`.
    pub fn min_with(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }

    /// Enclosure of `max(s, t)`.
    pub fn max_with(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn add_scalar(&self, x: &Rational) -> RatInterval {
        RatInterval {
            lo: &self.lo + x,
            hi: &self.hi + x,
        }
    }

    pub fn scale(&self, x: &Rational) -> RatInterval {
        if x.is_negative() {
            RatInterval {
                lo: &self.hi * x,
                hi: &self.lo * x,
            }
        } else {
            RatInterval {
                lo: &self.lo * x,
                hi: &self.hi * x,
            }
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let (a, b) = (&self.lo, &self.hi);
        let (c, d) = (&other.lo, &other.hi);
        if !a.is_negative() {
            if !c.is_negative() {
                return RatInterval { lo: a * c, hi: b * d };
            }
            if !d.is_positive() {
                return RatInterval { lo: b * c, hi: a * d };
            }
            return RatInterval { lo: b * c, hi: b * d };
        }
        if !b.is_positive() {
            if !c.is_negative() {
                return RatInterval { lo: a * d, hi: b * c };
            }
            if !d.is_positive() {
                return RatInterval { lo: b * d, hi: a * c };
            }
            return RatInterval { lo: a * d, hi: a * c };
        }
        // self straddles zero
        if !c.is_negative() {
            return RatInterval { lo: a * d, hi: b * d };
        }
        if !d.is_positive() {
            return RatInterval { lo: b * c, hi: a * c };
        }
        let lo = (a * d).min(b * c);
        let hi = (a * c).max(b * d);
        RatInterval { lo, hi }
    }

    /// Enclosure of `{1/t : t ∈ self}`; fails when the interval contains 0.
    pub fn recip(&self) -> Result<RatInterval> {
        if self.contains_zero() {
            return Err(Error::InvalidArgument("reciprocal of an interval containing zero"));
        }
        Ok(RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &RatInterval) -> Result<RatInterval> {
        Ok(self.mul(&other.recip()?))
    }

    /// Enclosure of `{t^k : t ∈ self}` for `k ≥ 1`.
    pub fn pow(&self, k: u32) -> RatInterval {
        assert!(k >= 1, "exponent must be positive");
        if k % 2 == 1 || !self.lo.is_negative() {
            return RatInterval {
                lo: self.lo.pow(k),
                hi: self.hi.pow(k),
            };
        }
        if !self.hi.is_positive() {
            return RatInterval {
                lo: self.hi.pow(k),
                hi: self.lo.pow(k),
            };
        }
        let m = self.lo.abs().max(self.hi.clone());
        RatInterval {
            lo: Rational::zero(),
            hi: m.pow(k),
        }
    }

    /// Enclosure of `{|t| : t ∈ self}`.
    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RatInterval {
                lo: Rational::zero(),
                hi: self.hi.clone().max(-&self.lo),
            }
        }
    }

    /// Outward rounding of both endpoints to dyadic rationals with about
    /// `bits` significant bits. Keeps sizes bounded in long computations.
    pub fn round_outward(&self, bits: u64) -> RatInterval {
        RatInterval {
            lo: self.lo.round_to(bits, Round::Down),
            hi: self.hi.round_to(bits, Round::Up),
        }
    }

    /// Enclosure of `{√t : t ∈ self, t ≥ 0}` with endpoints on the grid
    /// `2^-bits`; fails when the interval is entirely negative.
    pub fn sqrt(&self, bits: u64) -> Result<RatInterval> {
        if self.hi.is_negative() {
            return Err(Error::InvalidArgument("square root of a negative interval"));
        }
        let lo = if self.lo.is_positive() {
            sqrt_bound(&self.lo, bits, Round::Down)
        } else {
            Rational::zero()
        };
        Ok(RatInterval {
            lo,
            hi: sqrt_bound(&self.hi, bits, Round::Up),
        })
    }

    /// Enclosure of the distance to the nearest integer, `{‖t‖ : t ∈ self}`.
    /// Intervals of width at least 1/2 get the trivial enclosure `[0, 1/2]`.
    pub fn nearest_int_distance(&self) -> RatInterval {
        let half = Rational::from_frac(1, 2);
        if self.width() >= half {
            return RatInterval {
                lo: Rational::zero(),
                hi: half,
            };
        }
        let n = Rational::from_integer(self.lo.floor());
        let fl = &self.lo - &n;
        let fh = &self.hi - &n;
        let one = Rational::one();
        let dist = |t: &Rational| -> Rational {
            if *t <= half {
                t.clone()
            } else if *t <= one {
                &one - t
            } else {
                t - &one
            }
        };
        let (dl, dh) = (dist(&fl), dist(&fh));
        if fh > one {
            return RatInterval {
                lo: Rational::zero(),
                hi: dl.max(dh),
            };
        }
        if fl <= half && half <= fh {
            return RatInterval {
                lo: dl.min(dh),
                hi: half,
            };
        }
        RatInterval::spanning(dl, dh)
    }

    /// `width ≤ rel · max(|lo|, |hi|)`.
    pub fn relative_width_at_most(&self, rel: &Rational) -> bool {
        let m = self.lo.abs().max(self.hi.abs());
        self.width() <= rel * &m
    }
}

/// `√x` rounded to the grid `2^-bits` in the given direction, `x > 0`.
fn sqrt_bound(x: &Rational, bits: u64, dir: Round) -> Rational {
    // floor(√(x · 4^bits)) / 2^bits
    let scaled = x.mul_pow2(2 * bits as i64);
    let n = match dir {
        Round::Down => scaled.floor(),
        Round::Up => scaled.ceil(),
    };
    let s = n.sqrt();
    let s = if dir == Round::Up && &s * &s < n {
        s + BigInt::one()
    } else {
        s
    };
    debug_assert!(!s.is_negative());
    if s.is_zero() {
        return Rational::zero();
    }
    Rational::dyadic(s, -(bits as i64))
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn iv(lo: &str, hi: &str) -> RatInterval {
        RatInterval::new(r(lo), r(hi)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(iv("1", "1").add(&iv("2", "2")), iv("3", "3"));
        assert_eq!(iv("0", "1").mul(&iv("-1", "1")), iv("-1", "1"));
        assert_eq!(iv("1/3", "1/2").mul(&iv("1/3", "1/2")), iv("1/9", "1/4"));
        assert_eq!(iv("2", "2").pow(2), iv("4", "4"));
        assert_eq!(iv("1/2", "1").pow(3), iv("1/8", "1"));
        assert_eq!(iv("-1", "2").pow(2), iv("0", "4"));
        assert!(RatInterval::new(r("1"), r("0")).is_err());
    }

    #[test]
    fn nearest_int_examples() {
        assert_eq!(iv("7/2", "7/2").nearest_int_distance(), iv("1/2", "1/2"));
        assert_eq!(iv("10/3", "10/3").nearest_int_distance(), iv("1/3", "1/3"));
        let d = iv("0.49", "0.51").nearest_int_distance();
        assert!(d.encloses(&iv("0.49", "1/2")));
        assert_eq!(iv("0", "3").nearest_int_distance(), iv("0", "1/2"));
        assert_eq!(iv("2.9", "3.2").nearest_int_distance(), iv("0", "0.2"));
        assert_eq!(iv("-0.3", "-0.2").nearest_int_distance(), iv("0.2", "0.3"));
    }

    #[test]
    fn sqrt_encloses() {
        let s = iv("2", "2").sqrt(64).unwrap();
        assert!(s.lo().pow(2) <= r("2") && r("2") <= s.hi().pow(2));
        assert!(s.width() <= Rational::pow2_neg(63));
        assert_eq!(iv("4", "9").sqrt(10).unwrap(), iv("2", "3"));
        assert!(iv("-2", "-1").sqrt(10).is_err());
    }

    #[test]
    fn recip_rejects_zero() {
        assert!(iv("-1", "1").recip().is_err());
        assert_eq!(iv("2", "4").recip().unwrap(), iv("1/4", "1/2"));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..50).prop_map(|(n, d)| Rational::from_frac(n, d))
    }

    fn interval_with_point() -> impl Strategy<Value = (RatInterval, Rational)> {
        (small_rat(), small_rat(), 0u32..=16).prop_map(|(x, y, t)| {
            let i = RatInterval::spanning(x, y);
            let p = i.lo() + &(i.width() * Rational::from_frac(t as i64, 16));
            (i, p)
        })
    }

    proptest! {
        #[test]
        fn ops_contain_pointwise_results(
            (x, s) in interval_with_point(),
            (y, t) in interval_with_point(),
            k in 1u32..=3,
        ) {
            prop_assert!(x.add(&y).contains(&(&s + &t)));
            prop_assert!(x.sub(&y).contains(&(&s - &t)));
            prop_assert!(x.mul(&y).contains(&(&s * &t)));
            prop_assert!(x.pow(k).contains(&s.pow(k)));
            prop_assert!(x.abs().contains(&s.abs()));
            let frac = &s - &Rational::from_integer(s.floor());
            let d = frac.clone().min(Rational::one() - frac);
            prop_assert!(x.nearest_int_distance().contains(&d));
            if !y.contains_zero() {
                prop_assert!(x.div(&y).unwrap().contains(&(&s / &t)));
            }
            let rounded = x.round_outward(4);
            prop_assert!(rounded.encloses(&x));
        }
    }
}
