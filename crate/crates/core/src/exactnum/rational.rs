use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Above this size a full gcd reduction is skipped (binary gcd is quadratic).
const GCD_LIMIT_BITS: u64 = 4096;

/// Direction for rounding to a dyadic rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// Exact rational number with a positive denominator.
///
/// Common powers of two are always cancelled, and the fraction is fully
/// reduced whenever both parts are at most 4096 bits. Larger fractions may
/// carry a common odd factor; comparison and equality are by value.
#[derive(Clone, Debug)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// `num / den`, panicking on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(num, den)
    }

    /// `num / den` where the caller guarantees `gcd(num, den) = 1`.
    pub fn from_coprime(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            Rational { num: -num, den: -den }
        } else {
            Rational { num, den }
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    /// `m · 2^exp`.
    pub fn dyadic(m: BigInt, exp: i64) -> Self {
        if exp >= 0 {
            Self::from_integer(m << exp as usize)
        } else {
            Self::normalized(m, BigInt::one() << (-exp) as usize)
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u64) -> Self {
        Rational {
            num: BigInt::one(),
            den: BigInt::one() << k as usize,
        }
    }

    fn normalized(num: BigInt, den: BigInt) -> Self {
        let (mut num, mut den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        if num.is_zero() {
            return Rational {
                num,
                den: BigInt::one(),
            };
        }
        if den.is_one() {
            return Rational { num, den };
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(den.trailing_zeros().unwrap_or(0));
        if tz > 0 {
            num >>= tz as usize;
            den >>= tz as usize;
        }
        if !den.is_one()
            && !is_pow2(&den)
            && num.bits() <= GCD_LIMIT_BITS
            && den.bits() <= GCD_LIMIT_BITS
        {
            let g = num.gcd(&den);
            if !g.is_one() {
                num /= &g;
                den /= &g;
            }
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// True when the denominator is a power of two.
    pub fn is_dyadic(&self) -> bool {
        is_pow2(&self.den)
    }

    pub fn abs(&self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    pub fn ceil(&self) -> BigInt {
        -((-&self.num).div_floor(&self.den))
    }

    pub fn pow(&self, k: u32) -> Self {
        Rational::from_coprime(
            num_traits::pow(self.num.clone(), k as usize),
            num_traits::pow(self.den.clone(), k as usize),
        )
    }

    /// `self · 2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if k >= 0 {
            Self::normalized(&self.num << k as usize, self.den.clone())
        } else {
            Self::normalized(self.num.clone(), &self.den << (-k) as usize)
        }
    }

    /// Size proxy: bits of numerator plus bits of denominator.
    pub fn size_bits(&self) -> u64 {
        self.num.bits() + self.den.bits()
    }

    /// `floor(log2 |self|)` for non-zero values.
    pub fn log2_floor(&self) -> i64 {
        assert!(!self.is_zero(), "log2 of zero");
        let nb = self.num.bits() as i64;
        let db = self.den.bits() as i64;
        let e = nb - db;
        // |self| lies in [2^(e-1), 2^(e+1)); decide which side of 2^e.
        let a = self.abs();
        if a >= Rational::dyadic(BigInt::one(), e) {
            e
        } else {
            e - 1
        }
    }

    /// Dyadic rational `m · 2^e` with `bits` or `bits + 1` significant bits,
    /// rounded in the given direction. Dyadic values with at most `bits`
    /// significant bits are returned unchanged.
    pub fn round_to(&self, bits: u64, dir: Round) -> Self {
        assert!(bits >= 2);
        if self.is_zero() {
            return self.clone();
        }
        if self.is_negative() {
            let flipped = match dir {
                Round::Down => Round::Up,
                Round::Up => Round::Down,
            };
            return -(-self).round_to(bits, flipped);
        }
        if self.is_dyadic() && self.num.bits() <= bits {
            return self.clone();
        }
        let e = self.num.bits() as i64 - self.den.bits() as i64 - bits as i64;
        let (q, inexact) = if self.is_dyadic() {
            let k = self.den.trailing_zeros().unwrap_or(0) as i64;
            // value = num · 2^-k, mantissa = num · 2^(-k-e)
            let shift = -k - e;
            if shift >= 0 {
                (&self.num << shift as usize, false)
            } else {
                let s = (-shift) as u64;
                let exact = self.num.trailing_zeros().unwrap_or(0) >= s;
                (&self.num >> s as usize, !exact)
            }
        } else {
            let (nn, dd) = if e >= 0 {
                (self.num.clone(), &self.den << e as usize)
            } else {
                (&self.num << (-e) as usize, self.den.clone())
            };
            let (q, r) = nn.div_rem(&dd);
            (q, !r.is_zero())
        };
        let q = if inexact && dir == Round::Up { q + 1 } else { q };
        Rational::dyadic(q, e)
    }

    /// Approximate value; only for heuristics and display.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round_to(60, Round::Down);
        let k = r.den.trailing_zeros().unwrap_or(0) as i64;
        let m = r.num.to_f64().unwrap_or(f64::NAN);
        scale_f64(m, -k)
    }

    /// Scientific notation with `digits` significant digits, rounded in the
    /// given direction, e.g. `1.6180339887e0`.
    pub fn to_sci(&self, digits: u32, dir: Round) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        if self.is_negative() {
            let flipped = match dir {
                Round::Down => Round::Up,
                Round::Up => Round::Down,
            };
            let mut s = String::from("-");
            s.push_str(&(-self).to_sci(digits, flipped));
            return s;
        }
        let mut e10 = decimal_exponent_estimate(self);
        // Ensure 10^e10 <= self < 10^(e10+1).
        loop {
            if *self < pow10(e10) {
                e10 -= 1;
            } else if *self >= pow10(e10 + 1) {
                e10 += 1;
            } else {
                break;
            }
        }
        let scaled = self * &pow10(digits as i64 - 1 - e10);
        let mut m = match dir {
            Round::Down => scaled.floor(),
            Round::Up => scaled.ceil(),
        };
        let limit = num_traits::pow(BigInt::from(10), digits as usize);
        if m >= limit {
            m /= 10;
            e10 += 1;
        }
        let ds = m.to_string();
        let mut s = String::new();
        s.push_str(&ds[..1]);
        if ds.len() > 1 {
            let tail = ds[1..].trim_end_matches('0');
            if !tail.is_empty() {
                s.push('.');
                s.push_str(tail);
            }
        }
        s.push('e');
        s.push_str(&e10.to_string());
        s
    }
}

fn is_pow2(n: &BigInt) -> bool {
    n.is_positive() && n.trailing_zeros() == Some(n.bits() - 1)
}

fn scale_f64(mut m: f64, mut k: i64) -> f64 {
    while k > 0 {
        let s = k.min(1000);
        m *= pow2_f64(s);
        k -= s;
    }
    while k < 0 {
        let s = (-k).min(1000);
        m /= pow2_f64(s);
        k += s;
    }
    m
}

/// `2^k` for `0 ≤ k ≤ 1000`.
fn pow2_f64(k: i64) -> f64 {
    f64::from_bits(((1023 + k) as u64) << 52)
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::from_coprime(BigInt::one(), p)
    }
}

fn decimal_exponent_estimate(x: &Rational) -> i64 {
    // log10(2) ≈ 0.30103
    let l2 = x.num.bits() as i64 - x.den.bits() as i64;
    l2 * 30103 / 100000
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (s1, s2) = (self.num.sign(), other.num.sign());
        if s1 != s2 {
            return sign_rank(s1).cmp(&sign_rank(s2));
        }
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

fn add_impl(x: &Rational, y: &Rational, negate_y: bool) -> Rational {
    let yn = if negate_y { -&y.num } else { y.num.clone() };
    if x.den == y.den {
        return Rational::normalized(&x.num + yn, x.den.clone());
    }
    if y.den.is_one() {
        return Rational::normalized(&x.num + yn * &x.den, x.den.clone());
    }
    if x.den.is_one() {
        return Rational::normalized(&x.num * &y.den + yn, y.den.clone());
    }
    if x.is_dyadic() && y.is_dyadic() {
        let kx = x.den.bits();
        let ky = y.den.bits();
        return if kx >= ky {
            Rational::normalized(&x.num + (yn << (kx - ky) as usize), x.den.clone())
        } else {
            Rational::normalized((&x.num << (ky - kx) as usize) + yn, y.den.clone())
        };
    }
    Rational::normalized(&x.num * &y.den + yn * &x.den, &x.den * &y.den)
}

fn mul_impl(x: &Rational, y: &Rational) -> Rational {
    if x.is_zero() || y.is_zero() {
        return Rational::zero();
    }
    let den = if x.den.is_one() {
        y.den.clone()
    } else if y.den.is_one() {
        x.den.clone()
    } else if x.is_dyadic() && y.is_dyadic() {
        BigInt::one() << (x.den.bits() + y.den.bits() - 2) as usize
    } else {
        &x.den * &y.den
    };
    Rational::normalized(&x.num * &y.num, den)
}

fn div_impl(x: &Rational, y: &Rational) -> Rational {
    assert!(!y.is_zero(), "division by zero");
    mul_impl(x, &y.recip())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                $body(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                $body(&self, rhs)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| add_impl(x, y, false));
forward_binop!(Sub, sub, |x, y| add_impl(x, y, true));
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `n`, `n/d`, and decimals such as `-0.125`, `1e-5`, `2.5E+3`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        const BAD: Error = Error::InvalidArgument("not a rational number");
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| BAD)?;
            let d: BigInt = d.trim().parse().map_err(|_| BAD)?;
            if d.is_zero() {
                return Err(Error::InvalidArgument("zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        let (mantissa, exp) = match s.find(['e', 'E']) {
            Some(pos) => {
                let e: i64 = s[pos + 1..].parse().map_err(|_| BAD)?;
                (&s[..pos], e)
            }
            None => (s, 0),
        };
        let (neg, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(BAD);
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(BAD);
        }
        let all: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
        let all = core::str::from_utf8(&all).map_err(|_| BAD)?;
        let m: BigInt = if all.is_empty() {
            BigInt::zero()
        } else {
            all.parse().map_err(|_| BAD)?
        };
        let m = if neg { -m } else { m };
        let scale = exp - frac_part.len() as i64;
        Ok(Rational::from_integer(m) * pow10(scale))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_small_fractions() {
        let x = Rational::from_frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let y = Rational::from_frac(21, 14);
        assert_eq!(y.denom(), &BigInt::from(2));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r("1/3") + r("1/6"), r("1/2"));
        assert_eq!(r("1/3") - r("1/2"), r("-1/6"));
        assert_eq!(r("2/3") * r("9/4"), r("3/2"));
        assert_eq!(r("2/3") / r("4/9"), r("3/2"));
        assert_eq!(r("3/8") + r("1/16"), r("7/16"));
        assert_eq!(r("3/8") * r("1/16"), r("3/128"));
    }

    #[test]
    fn parse_decimals() {
        assert_eq!(r("0.1"), Rational::from_frac(1, 10));
        assert_eq!(r("-1.25"), Rational::from_frac(-5, 4));
        assert_eq!(r("1e-3"), Rational::from_frac(1, 1000));
        assert_eq!(r("2.5E+2"), Rational::from_integer(250));
        assert!("abc".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(r("7/2").floor(), BigInt::from(3));
        assert_eq!(r("7/2").ceil(), BigInt::from(4));
        assert_eq!(r("-7/2").floor(), BigInt::from(-4));
        assert_eq!(r("-7/2").ceil(), BigInt::from(-3));
        assert_eq!(r("4").ceil(), BigInt::from(4));
    }

    #[test]
    fn directed_rounding_brackets_value() {
        for s in ["1/3", "-1/3", "22/7", "-355/113", "1/1024", "123456789/1000"] {
            let x = r(s);
            let lo = x.round_to(8, Round::Down);
            let hi = x.round_to(8, Round::Up);
            assert!(lo <= x && x <= hi, "{s}");
            assert!(lo.is_dyadic() && hi.is_dyadic());
            assert!((&hi - &lo).abs() <= x.abs() * r("1/64"), "{s}");
        }
        let d = Rational::dyadic(BigInt::from(5), -3);
        assert_eq!(d.round_to(8, Round::Down), d);
    }

    #[test]
    fn sci_formatting() {
        assert_eq!(r("1/3").to_sci(5, Round::Down), "3.3333e-1");
        assert_eq!(r("1/3").to_sci(5, Round::Up), "3.3334e-1");
        assert_eq!(r("1000").to_sci(3, Round::Down), "1e3");
        assert_eq!(r("-1/3").to_sci(3, Round::Down), "-3.34e-1");
        assert_eq!(r("999999/1000").to_sci(3, Round::Up), "1e3");
        let s = r("1/3").to_sci(12, Round::Down);
        assert!(r(&s) <= r("1/3"));
    }

    #[test]
    fn log2_floor() {
        assert_eq!(r("1").log2_floor(), 0);
        assert_eq!(r("3").log2_floor(), 1);
        assert_eq!(r("4").log2_floor(), 2);
        assert_eq!(r("1/3").log2_floor(), -2);
        assert_eq!(r("-1/2").log2_floor(), -1);
    }

    #[test]
    fn large_values_compare_by_value() {
        let big = BigInt::one() << 9000usize;
        let three = BigInt::from(3);
        let x = Rational::new(&big * &three + &three, &big * &three * &three + &three * &three);
        assert_eq!(x, Rational::new(big.clone() + 1, (big + 1) * 3));
    }
}
