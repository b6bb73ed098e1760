//! Integer polynomials of degree at most three, candidate enumeration, and
//! the root of a polynomial nearest to `ξ`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Signed;

use crate::exactnum::{RatInterval, Rational};
use crate::{Error, Result};

/// Integer polynomial `c[0] + c[1] t + … + c[n] t^n` with `c[n] ≠ 0`.
///
/// Ordering (used to break ties) is lexicographic on the coefficient vector
/// in ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    /// Coefficients in ascending powers; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument("polynomial must have degree at least 1"));
        }
        if coeffs.len() > 4 {
            return Err(Error::InvalidArgument("polynomial degree above 3"));
        }
        Ok(Poly { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> i64 {
        self.coeffs[self.degree()]
    }

    /// Naive height `max |c_k|`.
    pub fn height(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn is_primitive(&self) -> bool {
        self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1
    }

    /// `c1² - 4 c0 c2` for quadratics.
    pub fn discriminant2(&self) -> Option<i128> {
        if self.degree() != 2 {
            return None;
        }
        let [c0, c1, c2] = [self.coeffs[0], self.coeffs[1], self.coeffs[2]].map(i128::from);
        Some(c1 * c1 - 4 * c0 * c2)
    }

    /// Discriminant of a cubic `c3 t³ + c2 t² + c1 t + c0`.
    pub fn discriminant3(&self) -> Option<BigInt> {
        if self.degree() != 3 {
            return None;
        }
        let [d, c, b, a] = [0, 1, 2, 3].map(|k| BigInt::from(self.coeffs[k]));
        Some(
            BigInt::from(18) * &a * &b * &c * &d - BigInt::from(4) * b.pow(3) * &d + b.pow(2) * c.pow(2)
                - BigInt::from(4) * &a * c.pow(3)
                - BigInt::from(27) * a.pow(2) * d.pow(2),
        )
    }

    pub fn eval_i128(&self, t: i128) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t + i128::from(c))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, &c| {
            acc * t + Rational::from_integer(c)
        })
    }

    /// Approximate value; only for screening.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c as f64)
    }

    pub fn derivative_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (k, &c)| acc * t + (k as f64) * c as f64)
    }

    /// True when the polynomial has no rational root and, for degree 2,
    /// is not a product of linear factors. Exact for degree at most 3.
    pub fn is_irreducible(&self) -> bool {
        if !self.is_primitive() {
            return false;
        }
        match self.degree() {
            1 => true,
            2 => !is_square(self.discriminant2().unwrap_or(0)),
            _ => !self.has_rational_root(),
        }
    }

    /// Rational root theorem: candidates `±p/q` with `p | c0`, `q | lead`.
    fn has_rational_root(&self) -> bool {
        let c0 = self.coeffs[0];
        if c0 == 0 {
            return true;
        }
        let lead = self.leading();
        let ps = divisors(c0.unsigned_abs());
        let qs = divisors(lead.unsigned_abs());
        for &p in &ps {
            for &q in &qs {
                for s in [1i64, -1] {
                    let r = Rational::from_frac(s * p as i64, q as i64);
                    if self.eval(&r).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn is_square(d: i128) -> bool {
    if d < 0 {
        return false;
    }
    let s = (d as u128).sqrt();
    s * s == d as u128
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n.sqrt())
        .filter(|d| n % d == 0)
        .flat_map(|d| [d, n / d])
        .collect()
}

/// Which family of algebraic numbers a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchKind {
    /// Irrational quadratic numbers: primitive `p2 t² + p1 t + p0`,
    /// `p2 > 0`, discriminant not a square.
    Quadratic,
    /// Algebraic integers of degree at most three: monic irreducible
    /// cubics and quadratics, and the integers `t - c`.
    CubicInteger,
}

/// Number of independent partitions of the candidate space at height `h`.
pub fn partition_count(kind: SearchKind, h: u64) -> usize {
    if h == 0 {
        // Every candidate has height at least 1.
        return 0;
    }
    match kind {
        SearchKind::Quadratic => h as usize,
        // One partition per c2 for cubics, plus one for degree ≤ 2.
        SearchKind::CubicInteger => 2 * h as usize + 2,
    }
}

/// Candidates of one partition, in ascending coefficient order.
pub fn enumerate_partition(kind: SearchKind, h: u64, part: usize) -> Vec<Poly> {
    let hi = h as i64;
    let mut out = Vec::new();
    match kind {
        SearchKind::Quadratic => {
            let p2 = part as i64 + 1;
            for p0 in -hi..=hi {
                for p1 in -hi..=hi {
                    let p = Poly {
                        coeffs: alloc::vec![p0, p1, p2],
                    };
                    if p.is_irreducible() {
                        out.push(p);
                    }
                }
            }
        }
        SearchKind::CubicInteger => {
            if part == 2 * h as usize + 1 {
                for c0 in -hi..=hi {
                    out.push(Poly {
                        coeffs: alloc::vec![c0, 1],
                    });
                }
                for c0 in -hi..=hi {
                    for c1 in -hi..=hi {
                        let p = Poly {
                            coeffs: alloc::vec![c0, c1, 1],
                        };
                        if p.is_irreducible() {
                            out.push(p);
                        }
                    }
                }
            } else {
                let c2 = part as i64 - hi;
                for c0 in -hi..=hi {
                    for c1 in -hi..=hi {
                        let p = Poly {
                            coeffs: alloc::vec![c0, c1, c2, 1],
                        };
                        if p.is_irreducible() {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every candidate of height at most `h`, in partition order.
pub fn enumerate_candidates(kind: SearchKind, h: u64) -> Vec<Poly> {
    (0..partition_count(kind, h))
        .flat_map(|part| enumerate_partition(kind, h, part))
        .collect()
}

/// Enclosure of one complex root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootEnclosure {
    Real(RatInterval),
    /// The root `re + i·im` with `im > 0`; its conjugate is also a root.
    Complex { re: RatInterval, im: RatInterval },
}

/// The root of a polynomial nearest to `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosestRoot {
    /// One entry, or several when the nearest root is not resolved.
    pub roots: Vec<RootEnclosure>,
    /// Enclosure of `min |ξ - α|` over all complex roots `α`.
    pub dist: RatInterval,
}

impl ClosestRoot {
    pub fn is_resolved(&self) -> bool {
        self.roots.len() == 1
    }
}

/// Nearest root of an irreducible polynomial to `ξ ∈ xi`, with real roots
/// and square roots refined to width `2^-bits`.
pub fn closest_root(poly: &Poly, xi: &RatInterval, bits: u64) -> Result<ClosestRoot> {
    if !poly.is_irreducible() {
        return Err(Error::InvalidArgument("polynomial is not irreducible"));
    }
    let roots = all_roots(poly, bits)?;
    let dists: Vec<RatInterval> = roots.iter().map(|r| distance(r, xi, bits)).collect::<Result<_>>()?;
    // Nearest by upper bound; every root that may be as near is a tie.
    let best = (0..dists.len())
        .min_by(|&i, &j| dists[i].hi().cmp(dists[j].hi()))
        .ok_or(Error::InvalidArgument("no roots"))?;
    let tied: Vec<usize> = (0..dists.len())
        .filter(|&k| k == best || dists[k].lo() <= dists[best].hi())
        .collect();
    let lo = tied.iter().map(|&k| dists[k].lo()).min().cloned().unwrap_or_else(Rational::zero);
    Ok(ClosestRoot {
        roots: tied.iter().map(|&k| roots[k].clone()).collect(),
        dist: RatInterval::spanning(lo, dists[best].hi().clone()),
    })
}

/// `|ξ - α|` for a root enclosure.
fn distance(root: &RootEnclosure, xi: &RatInterval, bits: u64) -> Result<RatInterval> {
    match root {
        RootEnclosure::Real(r) => Ok(xi.sub(r).abs()),
        RootEnclosure::Complex { re, im } => {
            let sq = xi.sub(re).pow(2).add(&im.pow(2));
            let d = sq.sqrt(bits)?;
            // |ξ - α| ≥ |Im α|
            Ok(RatInterval::spanning(d.lo().clone().max(im.lo().clone()), d.hi().clone()))
        }
    }
}

/// Enclosures of all roots, each complex pair once.
fn all_roots(poly: &Poly, bits: u64) -> Result<Vec<RootEnclosure>> {
    let c: Vec<Rational> = poly.coeffs.iter().map(|&x| Rational::from_integer(x)).collect();
    match poly.degree() {
        1 => Ok(alloc::vec![RootEnclosure::Real(RatInterval::point(
            -(&c[0] / &c[1])
        ))]),
        2 => {
            let d = poly.discriminant2().unwrap_or(0);
            let two_a = Rational::from_integer(2 * poly.coeffs[2]);
            let re = RatInterval::point(-(&c[1] / &two_a));
            let s = RatInterval::point(Rational::from_integer(BigInt::from(d.abs())))
                .sqrt(bits + 8)?
                .scale(&two_a.abs().recip());
            if d > 0 {
                Ok(alloc::vec![
                    RootEnclosure::Real(re.sub(&s)),
                    RootEnclosure::Real(re.add(&s)),
                ])
            } else {
                Ok(alloc::vec![RootEnclosure::Complex { re, im: s }])
            }
        }
        3 => cubic_roots(poly, &c, bits),
        _ => Err(Error::InvalidArgument("degree above 3")),
    }
}

fn cubic_roots(poly: &Poly, c: &[Rational], bits: u64) -> Result<Vec<RootEnclosure>> {
    let real: Vec<RatInterval> = isolate_real_roots(poly)
        .into_iter()
        .map(|(lo, hi)| refine_root(poly, lo, hi, bits))
        .collect();
    let disc = poly.discriminant3().unwrap_or_default();
    if disc.is_positive() {
        return Ok(real.into_iter().map(RootEnclosure::Real).collect());
    }
    let [r] = <[RatInterval; 1]>::try_from(real)
        .map_err(|_| Error::InvalidArgument("cubic root count mismatch"))?;
    // With r real and z, z̄ the complex pair (monic after dividing by c3):
    //   r + 2 Re z = -c2,   2 r Re z + |z|² = c1.
    let c2 = &c[2] / &c[3];
    let c1 = &c[1] / &c[3];
    let re = r.add_scalar(&c2).neg().scale(&Rational::from_frac(1, 2));
    let modsq = r.mul(&re).scale(&Rational::from_integer(-2)).add_scalar(&c1);
    let im_sq = modsq.sub(&re.pow(2));
    let im = im_sq.sqrt(bits + 8)?;
    Ok(alloc::vec![
        RootEnclosure::Real(r),
        RootEnclosure::Complex { re, im },
    ])
}

/// Sturm sequence of a square-free polynomial over the rationals.
fn sturm_sequence(poly: &Poly) -> Vec<Vec<Rational>> {
    let p: Vec<Rational> = poly.coeffs.iter().map(|&x| Rational::from_integer(x)).collect();
    let dp: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| x * &Rational::from_integer(k as i64))
        .collect();
    let mut seq = alloc::vec![p, dp];
    loop {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|x| -x).collect());
        if seq.last().map_or(0, Vec::len) <= 1 {
            break;
        }
    }
    seq
}

/// Remainder of `a / b` (ascending coefficients), with trailing zeros removed.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] / &b[db];
        for (i, bi) in b.iter().enumerate() {
            let idx = k - db + i;
            r[idx] = &r[idx] - &(&f * bi);
        }
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

fn eval_coeffs(c: &[Rational], t: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, x| acc * t + x)
}

fn sign_changes(seq: &[Vec<Rational>], t: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|c| eval_coeffs(c, t))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Disjoint intervals `(lo, hi)` each containing exactly one real root,
/// for a polynomial without rational roots.
fn isolate_real_roots(poly: &Poly) -> Vec<(Rational, Rational)> {
    let seq = sturm_sequence(poly);
    // Cauchy bound: every root has |t| < 1 + max |c_k / c_n|.
    let lead = poly.leading().unsigned_abs();
    let m = poly.coeffs[..poly.degree()].iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
    let bound = Rational::from_integer(1 + m.div_ceil(lead) as i64);
    let mut stack = alloc::vec![(-&bound, bound.clone())];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi).mul_pow2(-1);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Bisection on a sign change until the width is at most `2^-bits`.
fn refine_root(poly: &Poly, mut lo: Rational, mut hi: Rational, bits: u64) -> RatInterval {
    let eps = Rational::pow2_neg(bits);
    let lo_positive = poly.eval(&lo).is_positive();
    while &hi - &lo > eps {
        let mid = (&lo + &hi).mul_pow2(-1);
        let v = poly.eval(&mid);
        if v.is_zero() {
            return RatInterval::point(mid);
        }
        if v.is_positive() == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::spanning(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::xi_enclosure;
    use crate::exactnum::{golden_ratio, Params};
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.to_vec()).unwrap()
    }

    fn xi12() -> RatInterval {
        xi_enclosure(&Params::new(1, 2).unwrap(), &"1e-40".parse().unwrap()).unwrap()
    }

    /// Recount by brute force over all coefficient vectors, testing
    /// reducibility by searching for integer factorizations.
    fn recount(kind: SearchKind, h: i64) -> usize {
        let mut n = 0;
        match kind {
            SearchKind::Quadratic => {
                for p2 in 1..=h {
                    for p1 in -h..=h {
                        for p0 in -h..=h {
                            let g = p2.gcd(&p1).gcd(&p0);
                            // reducible iff (u t + v)(w t + x) with integers
                            let mut reducible = false;
                            for u in 1..=p2 {
                                if p2 % u != 0 {
                                    continue;
                                }
                                let w = p2 / u;
                                for v in -2 * h..=2 * h {
                                    for x in -2 * h..=2 * h {
                                        if u * x + v * w == p1 && v * x == p0 {
                                            reducible = true;
                                        }
                                    }
                                }
                            }
                            if g == 1 && !reducible {
                                n += 1;
                            }
                        }
                    }
                }
            }
            SearchKind::CubicInteger => {
                n += (2 * h + 1) as usize;
                for c1 in -h..=h {
                    for c0 in -h..=h {
                        if !(-4 * h..=4 * h).any(|r| r * r + c1 * r + c0 == 0) {
                            n += 1;
                        }
                    }
                }
                for c2 in -h..=h {
                    for c1 in -h..=h {
                        for c0 in -h..=h {
                            if !(-4 * h..=4 * h).any(|r| r * r * r + c2 * r * r + c1 * r + c0 == 0) {
                                n += 1;
                            }
                        }
                    }
                }
            }
        }
        n
    }

    #[test]
    fn quadratic_candidates_height_one() {
        let c = enumerate_candidates(SearchKind::Quadratic, 1);
        assert!(c.contains(&poly(&[-1, 1, 1])));
        assert!(c.contains(&poly(&[-1, -1, 1])));
        assert!(!c.contains(&poly(&[-1, 0, 1])));
        assert!(c.iter().all(|p| p.leading() > 0 && p.height() <= 1));
    }

    #[test]
    fn counts_match_recount() {
        for h in 1..=5 {
            for kind in [SearchKind::Quadratic, SearchKind::CubicInteger] {
                assert_eq!(enumerate_candidates(kind, h).len(), recount(kind, h as i64), "{kind:?} H={h}");
            }
        }
        assert!(enumerate_candidates(SearchKind::CubicInteger, 0).is_empty());
    }

    #[test]
    fn discriminants_never_square() {
        for p in enumerate_candidates(SearchKind::Quadratic, 8) {
            let d = p.discriminant2().unwrap();
            let s = (d.unsigned_abs()).sqrt();
            assert!(d < 0 || s * s != d as u128, "{p}");
            assert!(p.is_primitive());
        }
    }

    #[test]
    fn golden_root_is_nearest() {
        // t² - t - 1 has roots γ ≈ 1.618 and 1 - γ ≈ -0.618; ξ_{1,2} ≈ 0.70.
        let xi = xi12();
        let c = closest_root(&poly(&[-1, -1, 1]), &xi, 128).unwrap();
        assert!(c.is_resolved());
        let g = golden_ratio(&"1e-40".parse().unwrap()).unwrap();
        let RootEnclosure::Real(root) = &c.roots[0] else {
            panic!("expected a real root")
        };
        assert!(root.intersects(&g));
        let other = xi.sub(&g.neg().add_scalar(&Rational::one())).abs();
        assert!(c.dist.strictly_below(&other));
    }

    #[test]
    fn golden_pair_root_choice() {
        // t² + t - 1 has roots (−1 ± √5)/2; 0.618 is near ξ_{1,2} ≈ 0.70.
        let xi = xi12();
        let c = closest_root(&poly(&[-1, 1, 1]), &xi, 128).unwrap();
        let RootEnclosure::Real(root) = &c.roots[0] else {
            panic!("expected a real root")
        };
        let g = golden_ratio(&"1e-40".parse().unwrap()).unwrap();
        assert!(root.intersects(&g.add_scalar(&-Rational::one())));
        let far = xi.add(&g);
        assert!(c.dist.strictly_below(&far));
    }

    #[test]
    fn linear_and_complex_roots() {
        let xi = xi12();
        let c = closest_root(&poly(&[-1, 1]), &xi, 64).unwrap();
        assert_eq!(c.dist, xi.add_scalar(&Rational::from_integer(-1)).abs());
        // t² + 1: roots ±i, distance √(1 + ξ²) ≥ 1.
        let c = closest_root(&poly(&[1, 0, 1]), &xi, 64).unwrap();
        let RootEnclosure::Complex { im, .. } = &c.roots[0] else {
            panic!("expected a complex root")
        };
        assert!(c.dist.lo() >= im.lo());
        assert!(c.dist.pow(2).intersects(&xi.pow(2).add_scalar(&Rational::one())));
        assert!(closest_root(&poly(&[-1, 0, 1]), &xi, 64).is_err());
    }

    #[test]
    fn cubic_roots_satisfy_vieta() {
        // t³ - 2: real root 2^(1/3), complex pair with modulus 2^(1/3).
        let p = poly(&[-2, 0, 0, 1]);
        let roots = all_roots(&p, 100).unwrap();
        assert_eq!(roots.len(), 2);
        let RootEnclosure::Real(r) = &roots[0] else { panic!() };
        assert!(r.pow(3).contains(&Rational::from_integer(2)));
        let RootEnclosure::Complex { re, im } = &roots[1] else { panic!() };
        assert!(re.add(re).add(r).contains_zero());
        let m = re.pow(2).add(&im.pow(2));
        assert!(m.pow(3).contains(&Rational::from_integer(4)));
        // t³ - 3t + 1 has three real roots.
        let roots = all_roots(&poly(&[1, -3, 0, 1]), 80).unwrap();
        assert_eq!(roots.len(), 3);
    }

    proptest! {
        #[test]
        fn cubic_real_roots_bracket_sign_changes(c0 in -12i64..=12, c1 in -12i64..=12, c2 in -12i64..=12) {
            let p = poly(&[c0, c1, c2, 1]);
            prop_assume!(p.is_irreducible());
            let roots = all_roots(&p, 60).unwrap();
            let mut real = 0;
            for r in &roots {
                if let RootEnclosure::Real(iv) = r {
                    real += 1;
                    prop_assert!(iv.width() <= Rational::pow2_neg(60));
                    let (a, b) = (p.eval(iv.lo()), p.eval(iv.hi()));
                    prop_assert!(!a.is_positive() || !b.is_positive());
                    prop_assert!(!a.is_negative() || !b.is_negative());
                }
            }
            let expected = if p.discriminant3().unwrap().is_positive() { 3 } else { 1 };
            prop_assert_eq!(real, expected);
        }

        #[test]
        fn quadratic_roots_zero_the_polynomial(p0 in -30i64..=30, p1 in -30i64..=30, p2 in 1i64..=30) {
            let p = poly(&[p0, p1, p2]);
            prop_assume!(p.is_irreducible());
            for r in all_roots(&p, 80).unwrap() {
                match r {
                    RootEnclosure::Real(iv) => {
                        let (a, b) = (p.eval(iv.lo()), p.eval(iv.hi()));
                        prop_assert!(!a.is_positive() || !b.is_positive());
                    }
                    RootEnclosure::Complex { re, im } => {
                        // p2 (re² + im²) = p0 and 2 p2 re = -p1
                        let m = re.pow(2).add(&im.pow(2)).scale(&Rational::from_integer(p2));
                        prop_assert!(m.contains(&Rational::from_integer(p0)));
                        prop_assert!(re.scale(&Rational::from_integer(2 * p2)).contains(&Rational::from_integer(-p1)));
                    }
                }
            }
        }
    }
}
