//! Enclosures of the golden ratio, natural logarithms, and exponentials.
//!
//! All bounds are obtained with positive-term series and directed rounding
//! of every intermediate, so the returned intervals are guaranteed.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::interval::RatInterval;
use super::rational::{Round, Rational};
use crate::{Error, Result};

/// Interval containing `γ = (1 + √5)/2` of width at most `precision`.
///
/// Consecutive ratios `f(n+1)/f(n)` of Fibonacci numbers lie alternately
/// above and below `γ`, and two consecutive ones differ by
/// `1/(f(n) f(n+1))`.
pub fn golden_ratio(precision: &Rational) -> Result<RatInterval> {
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive"));
    }
    Ok(golden_until(|fa, fb| {
        precision * &Rational::from_integer(fa * fb) >= Rational::one()
    }))
}

/// Interval containing `γ` of width at most `2^-bits`.
pub fn golden_ratio_bits(bits: u64) -> RatInterval {
    golden_until(|fa, fb| (fa * fb).bits() > bits)
}

fn golden_until(mut done: impl FnMut(&BigInt, &BigInt) -> bool) -> RatInterval {
    // (f(n), f(n+1), f(n+2))
    let mut f0 = BigInt::one();
    let mut f1 = BigInt::one();
    let mut f2 = BigInt::from(2);
    while !done(&f0, &f1) {
        let next = &f1 + &f2;
        f0 = core::mem::replace(&mut f1, core::mem::replace(&mut f2, next));
    }
    // Bracket from f(n+1)/f(n) and f(n+2)/f(n+1); width 1/(f(n) f(n+1)).
    RatInterval::spanning(
        Rational::from_coprime(f1.clone(), f0),
        Rational::from_coprime(f2, f1),
    )
}

/// Lower or upper bound of `atanh(z)` for dyadic `0 ≤ z ≤ 1/2`, with
/// absolute error around `2^-w`.
fn atanh_bound(z: &Rational, w: u64, dir: Round) -> Rational {
    if z.is_zero() {
        return Rational::zero();
    }
    let prec = w + 16;
    let cutoff = Rational::pow2_neg(w + 8);
    let z2 = (z * z).round_to(prec, dir);
    let mut pow = z.round_to(prec, dir);
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let term = (&pow / &Rational::from_integer(2 * k + 1)).round_to(prec, dir);
        sum = sum + term;
        pow = (&pow * &z2).round_to(prec, dir);
        k += 1;
        if pow < cutoff {
            break;
        }
    }
    if dir == Round::Up {
        // Tail ≤ pow / ((2k+1)(1 - z²)) ≤ 2 pow for z² ≤ 1/2.
        sum = sum + pow.mul_pow2(1);
    }
    sum.round_to(prec, dir)
}

/// `ln 2 = 2 atanh(1/3)`, width about `2^-bits`.
pub fn ln2(bits: u64) -> RatInterval {
    let third = Rational::from_frac(1, 3);
    let w = bits + 4;
    let lo = atanh_bound(&third.round_to(w + 8, Round::Down), w, Round::Down).mul_pow2(1);
    let hi = atanh_bound(&third.round_to(w + 8, Round::Up), w, Round::Up).mul_pow2(1);
    RatInterval::spanning(lo, hi)
}

/// Natural logarithm of a positive rational, absolute width about `2^-bits`.
pub fn ln(x: &Rational, bits: u64) -> Result<RatInterval> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument("logarithm of a non-positive number"));
    }
    let k = x.log2_floor();
    let w = bits + 8;
    let m = x.mul_pow2(-k);
    let one = Rational::one();
    let z_of = |m: &Rational, dir: Round| -> Rational {
        let m = m.round_to(w + 8, dir);
        let num = &m - &one;
        if !num.is_positive() {
            return Rational::zero();
        }
        (&num / &(&m + &one)).round_to(w + 8, dir)
    };
    let z_lo = z_of(&m, Round::Down);
    let z_hi = z_of(&m, Round::Up);
    let ln_m = RatInterval::spanning(
        atanh_bound(&z_lo, w, Round::Down).mul_pow2(1),
        atanh_bound(&z_hi, w, Round::Up).mul_pow2(1),
    );
    let result = if k == 0 {
        ln_m
    } else {
        let kbits = 64 - k.unsigned_abs().leading_zeros() as u64;
        ln2(w + kbits).scale(&Rational::from_integer(k)).add(&ln_m)
    };
    let mag = 64 - k.unsigned_abs().leading_zeros() as u64;
    Ok(result.round_outward(w + mag + 2))
}

/// Enclosure of `[ln lo, ln hi]` for a positive interval.
pub fn ln_interval(x: &RatInterval, bits: u64) -> Result<RatInterval> {
    let lo = ln(x.lo(), bits)?;
    let hi = ln(x.hi(), bits)?;
    Ok(RatInterval::spanning(lo.lo().clone(), hi.hi().clone()))
}

/// Interval containing `ln x` of width at most `precision`.
pub fn log_enclosure(x: &Rational, precision: &Rational) -> Result<RatInterval> {
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive"));
    }
    let mut bits = (8 - precision.log2_floor()).max(8) as u64;
    loop {
        let iv = ln(x, bits)?;
        if &iv.width() <= precision {
            return Ok(iv);
        }
        bits *= 2;
    }
}

/// `exp(a)` bound for dyadic `0 ≤ a < 1`.
fn exp_small(a: &Rational, w: u64, dir: Round) -> Rational {
    let prec = w + 16;
    let cutoff = Rational::pow2_neg(w + 8);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    let mut n: i64 = 1;
    loop {
        term = (&(&term * a) / &Rational::from_integer(n)).round_to(prec, dir);
        sum = sum + &term;
        n += 1;
        if term < cutoff {
            break;
        }
    }
    if dir == Round::Up {
        // For a < 1 and n ≥ 1 the tail after the last term is below it.
        sum = sum + term;
    }
    sum.round_to(prec, dir)
}

/// Bound on `exp(t)` with relative error about `2^-w`.
fn exp_bound(t: &Rational, w: u64, dir: Round) -> Result<Rational> {
    // k ≈ t / ln 2; any integer k is correct, this one keeps the remainder small.
    let inv_ln2 = Rational::from_frac(1_442_695_040_888_963_407, 1_000_000_000_000_000_000);
    let k = (t * &inv_ln2)
        .floor()
        .to_i64()
        .filter(|k| k.unsigned_abs() < 1 << 60)
        .ok_or(Error::InvalidArgument("exponent argument too large"))?;
    let kbits = 64 - k.unsigned_abs().leading_zeros() as u64;
    let r_iv = RatInterval::point(t.clone()).sub(&ln2(w + kbits + 8).scale(&Rational::from_integer(k)));
    let r = match dir {
        Round::Down => r_iv.lo().round_to(w + 16, Round::Down),
        Round::Up => r_iv.hi().round_to(w + 16, Round::Up),
    };
    let e = if r.is_negative() {
        let a = -&r;
        let opposite = match dir {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        };
        (&Rational::one() / &exp_small(&a, w + 4, opposite)).round_to(w + 16, dir)
    } else {
        exp_small(&r, w + 4, dir)
    };
    Ok(e.mul_pow2(k).round_to(w + 8, dir))
}

/// Enclosure of `{exp(t) : t ∈ x}` with relative width about `2^-bits`
/// beyond the width inherited from `x`.
pub fn exp(x: &RatInterval, bits: u64) -> Result<RatInterval> {
    Ok(RatInterval::spanning(
        exp_bound(x.lo(), bits, Round::Down)?,
        exp_bound(x.hi(), bits, Round::Up)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// `(1 + √5)/2` to `digits` decimals from an integer square root.
    fn golden_oracle(digits: u32) -> RatInterval {
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let s = (BigInt::from(5) * &scale * &scale).sqrt();
        let lo = Rational::new(&scale + &s, BigInt::from(2) * &scale);
        let hi = Rational::new(&scale + &s + BigInt::one(), BigInt::from(2) * &scale);
        RatInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn golden_ratio_examples() {
        let g = golden_ratio(&r("0.01")).unwrap();
        assert!(g.width() <= r("0.01"));
        assert!(g.contains(&r("1.618")));
        assert!(g.recip().unwrap().contains(&r("0.618")));

        let tiny = r("1e-30");
        let g = golden_ratio(&tiny).unwrap();
        assert!(g.width() <= tiny);
        let sq = g.pow(2);
        let g1 = g.add_scalar(&Rational::one());
        assert!(sq.intersects(&g1));
        assert!(golden_ratio(&Rational::zero()).is_err());
    }

    #[test]
    fn golden_enclosures_nest_and_contain_oracle() {
        let oracle = golden_oracle(50);
        let mut prev: Option<RatInterval> = None;
        for k in 1..=40 {
            let g = golden_ratio(&r(&alloc::format!("1e-{k}"))).unwrap();
            assert!(g.intersects(&oracle), "k={k}");
            if k <= 48 {
                assert!(g.contains(oracle.lo()) || g.contains(oracle.hi()));
            }
            if let Some(p) = &prev {
                assert!(p.encloses(&g), "k={k}");
            }
            prev = Some(g);
        }
        let g = golden_ratio_bits(200);
        assert!(g.width() <= Rational::pow2_neg(200));
        assert!(g.intersects(&oracle));
    }

    #[test]
    fn logarithm_examples() {
        let p = r("1e-20");
        let l1 = log_enclosure(&Rational::one(), &p).unwrap();
        assert!(l1.contains(&Rational::zero()) && l1.width() <= p);

        let l4 = log_enclosure(&Rational::from_integer(4), &p).unwrap();
        let l2 = log_enclosure(&Rational::from_integer(2), &p).unwrap();
        assert!(l4.intersects(&l2.scale(&Rational::from_integer(2))));

        // Partial sums of Σ 1/n! bracket e: [s_N, s_N + 2/(N+1)!].
        let mut s = Rational::zero();
        let mut fact = BigInt::one();
        for n in 0..30u32 {
            if n > 0 {
                fact *= n;
            }
            s = s + Rational::new(BigInt::one(), fact.clone());
        }
        let le = log_enclosure(&s, &r("1e-12")).unwrap();
        assert!(le.lo() > &r("0.99999999") && le.hi() < &r("1.00000001"));
        assert!(log_enclosure(&Rational::zero(), &p).is_err());
    }

    #[test]
    fn ln_of_huge_and_tiny_values() {
        let big = Rational::from_integer(BigInt::one() << 100_000usize);
        let l = ln(&big, 64).unwrap();
        let expected = ln2(120).scale(&Rational::from_integer(100_000));
        assert!(l.intersects(&expected));
        assert!(l.width() < Rational::pow2_neg(50));
        // ln(1/1000) = -6.90775527898213705205...
        let t = ln(&r("1/1000"), 80).unwrap();
        assert!(t.lo() > &r("-6.9077552789821371") && t.hi() < &r("-6.9077552789821370"));
    }

    #[test]
    fn exp_inverts_ln() {
        for s in ["0", "1", "-1", "0.5", "10", "-37.25", "1000"] {
            let t = r(s);
            let e = exp(&RatInterval::point(t.clone()), 96).unwrap();
            assert!(e.is_positive());
            let back = ln_interval(&e, 96).unwrap();
            assert!(back.contains(&t), "{s}");
            assert!(e.relative_width_at_most(&Rational::pow2_neg(80)), "{s}");
        }
        let e1 = exp(&RatInterval::from_int(1), 64).unwrap();
        assert!(e1.lo() < &r("2.718281828459045236") && e1.hi() > &r("2.718281828459045235"));
    }

    #[test]
    fn exp_of_large_negative_argument() {
        let e = exp(&RatInterval::point(r("-18000")), 64).unwrap();
        assert!(e.is_positive());
        let back = ln_interval(&e, 64).unwrap();
        assert!(back.contains(&r("-18000")));
    }
}
