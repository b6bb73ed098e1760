//! Convergents of `ξ_{a,b}`, rational enclosures of `ξ`, and the
//! approximation triples `x_i = (x_{i,0}, x_{i,1}, x_{i,2})`.
//!
//! The first `j` partial quotients of `ξ` are the images of the length-`j`
//! prefix of the Fibonacci word, and the product of their matrices is
//! `((q_j, q_{j-1}), (p_j, p_{j-1}))`. Any prefix splits greedily into word
//! terms `w_k`, so convergent matrices come from a cache of `Φ(w_k)` with
//! `O(log j)` products instead of `j`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactnum::{letter_matrix, phi, Mat2, Params, RatInterval, Rational};
use crate::fibword::{self, FibWordLetters, Letter};
use crate::{Error, Result};

/// Largest convergent index that may be requested.
pub const MAX_CONVERGENT_INDEX: u64 = 100_000_000;

/// Largest triple index accepted by [`triple_sequence`]. `X_40` already
/// has about 400 million bits.
pub const MAX_TRIPLE_INDEX: usize = 40;

/// The partial quotient `a_j` (`j ≥ 1`) of `ξ = [0; a_1, a_2, …]`.
pub fn partial_quotient(p: &Params, j: u64) -> Result<u64> {
    if j == 0 {
        return Err(Error::InvalidArgument("partial quotients start at index 1"));
    }
    Ok(p.value(fibword::letter_at(j - 1)))
}

/// Lazy stream `a_1, a_2, …` of partial quotients.
#[derive(Clone, Debug)]
pub struct PartialQuotients {
    params: Params,
    letters: FibWordLetters,
}

impl PartialQuotients {
    pub fn new(params: Params) -> Self {
        PartialQuotients {
            params,
            letters: FibWordLetters::new(),
        }
    }
}

impl Iterator for PartialQuotients {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        self.letters.next().map(|l| self.params.value(l))
    }
}

/// A reduced convergent `p_j / q_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub j: u64,
    pub p: BigInt,
    pub q: BigInt,
}

impl ConvergentPair {
    pub fn value(&self) -> Rational {
        Rational::from_coprime(self.p.clone(), self.q.clone())
    }
}

/// Cached matrices `Φ(w_k)` of the Fibonacci word terms for one `Params`.
#[derive(Clone, Debug)]
struct TermCache {
    params: Params,
    // terms[k] = Φ(w_k); w_0 = b, w_1 = a.
    terms: Vec<Mat2>,
}

impl TermCache {
    fn new(params: Params) -> Self {
        TermCache {
            params,
            terms: alloc::vec![
                letter_matrix(Letter::B, &params),
                letter_matrix(Letter::A, &params),
            ],
        }
    }

    fn term(&mut self, k: usize) -> &Mat2 {
        while self.terms.len() <= k {
            let n = self.terms.len();
            let next = self.terms[n - 1].mul(&self.terms[n - 2]);
            self.terms.push(next);
        }
        &self.terms[k]
    }

    /// `Φ` of the length-`j` prefix of the Fibonacci word.
    fn prefix(&mut self, j: u64) -> Mat2 {
        // Greedy split j = fib(k1) + fib(k2) + …, k1 > k2 > … ≥ 1; the
        // prefix is w_{k1} w_{k2} ….
        let mut parts = Vec::new();
        let mut rest = j;
        while rest > 0 {
            let mut k = 1;
            while fibword::fib(k + 1) <= rest {
                k += 1;
            }
            parts.push(k);
            rest -= fibword::fib(k);
        }
        let mut m = Mat2::identity();
        for k in parts {
            m = m.mul(self.term(k));
        }
        m
    }
}

fn check_index(j: u64) -> Result<()> {
    if j == 0 {
        return Err(Error::InvalidArgument("convergent index must be at least 1"));
    }
    if j > MAX_CONVERGENT_INDEX {
        return Err(Error::ResourceLimit {
            what: "convergent index",
            limit: MAX_CONVERGENT_INDEX,
        });
    }
    Ok(())
}

/// The product of the first `j` partial-quotient matrices,
/// `((q_j, q_{j-1}), (p_j, p_{j-1}))`.
pub fn convergent_matrix(p: &Params, j: u64) -> Result<Mat2> {
    check_index(j)?;
    Ok(TermCache::new(*p).prefix(j))
}

/// The convergent `p_j / q_j` of `ξ_{a,b}`.
pub fn convergent(p: &Params, j: u64) -> Result<ConvergentPair> {
    let m = convergent_matrix(p, j)?;
    Ok(ConvergentPair {
        j,
        p: m.m10,
        q: m.m00,
    })
}

/// Refinable source of enclosures of `ξ_{a,b}`.
///
/// The enclosure at level `k` is the bracket between the convergents of
/// index `fib(k) - 1` and `fib(k)`, so successive enclosures are nested.
#[derive(Clone, Debug)]
pub struct XiEnclosure {
    cache: TermCache,
}

impl XiEnclosure {
    pub fn new(params: Params) -> Self {
        XiEnclosure {
            cache: TermCache::new(params),
        }
    }

    pub fn params(&self) -> &Params {
        &self.cache.params
    }

    fn check_level(k: usize) -> Result<()> {
        if k > fibword::MAX_FIB_INDEX || fibword::fib(k) > MAX_CONVERGENT_INDEX {
            return Err(Error::ResourceLimit {
                what: "convergent index",
                limit: MAX_CONVERGENT_INDEX,
            });
        }
        Ok(())
    }

    fn bracket(&mut self, k: usize) -> Result<RatInterval> {
        Self::check_level(k)?;
        let m = self.cache.term(k);
        // Convergents j and j-1 are m10/m00 and m11/m01; for j = 1 the
        // second one is 1/0, so start at k = 2.
        Ok(RatInterval::spanning(
            Rational::from_coprime(m.m10.clone(), m.m00.clone()),
            Rational::from_coprime(m.m11.clone(), m.m01.clone()),
        ))
    }

    /// Enclosure of width at most `2^-bits`.
    pub fn refine_bits(&mut self, bits: u64) -> Result<RatInterval> {
        let mut k = 2;
        loop {
            // width = 1/(q_j q_{j-1}) ≤ 2^(2 - bits(q_j) - bits(q_{j-1}))
            let iv = self.bracket(k)?;
            let m = self.cache.term(k);
            if m.m00.bits() + m.m01.bits() >= bits + 2 {
                return Ok(iv);
            }
            k += 1;
        }
    }

    /// Enclosure of width at most `precision`.
    pub fn refine_to(&mut self, precision: &Rational) -> Result<RatInterval> {
        if !precision.is_positive() {
            return Err(Error::InvalidArgument("precision must be positive"));
        }
        let start = (-precision.log2_floor()).max(0) as u64;
        let mut k = 2;
        loop {
            Self::check_level(k)?;
            let m = self.cache.term(k);
            if m.m00.bits() + m.m01.bits() > start {
                let iv = self.bracket(k)?;
                if &iv.width() <= precision {
                    return Ok(iv);
                }
            }
            k += 1;
        }
    }
}

/// Interval containing `ξ_{a,b}` of width at most `precision`, bounded by
/// two consecutive convergents.
pub fn xi_enclosure(p: &Params, precision: &Rational) -> Result<RatInterval> {
    XiEnclosure::new(*p).refine_to(precision)
}

/// Entries of the symmetric matrix `M_i = Φ(m_i) = ((x0, x1), (x1, x2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxTriple {
    pub i: usize,
    pub x0: BigInt,
    pub x1: BigInt,
    pub x2: BigInt,
}

impl ApproxTriple {
    fn from_matrix(i: usize, m: Mat2) -> Self {
        assert!(m.is_symmetric(), "M_{i} is not symmetric");
        ApproxTriple {
            i,
            x0: m.m00,
            x1: m.m01,
            x2: m.m11,
        }
    }

    /// `X_i = x_{i,0}`.
    pub fn x(&self) -> &BigInt {
        &self.x0
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(
            self.x0.clone(),
            self.x1.clone(),
            self.x1.clone(),
            self.x2.clone(),
        )
    }

    /// `x0 x2 - x1²`.
    pub fn det(&self) -> BigInt {
        &self.x0 * &self.x2 - &self.x1 * &self.x1
    }

    /// Index `j = |m_i|` of the convergent `x1/x0`.
    pub fn convergent_index(&self) -> u64 {
        fibword::fib(self.i + 2) - 2
    }
}

/// `(-1)^{fib(i+2)}`, the determinant of `M_i`.
pub fn expected_det(i: usize) -> i32 {
    // fib(n) with fib(0) = fib(1) = 1 is even exactly when n ≡ 2 (mod 3).
    if (i + 2) % 3 == 2 {
        1
    } else {
        -1
    }
}

/// `x_i` read off `Φ(m_i)` computed from the materialized word.
pub fn triple_direct(p: &Params, i: usize) -> Result<ApproxTriple> {
    let m = fibword::palindromic_prefix(i)?;
    Ok(ApproxTriple::from_matrix(i, phi(&m, p)))
}

/// `M_1, …, M_n` from `M_i = M_{i-1} S_{i-1} M_{i-2}`, seeded with
/// `M_1 = Φ(a)`, `M_2 = Φ(aba)`.
pub fn triple_matrices(p: &Params, n: usize) -> Result<Vec<Mat2>> {
    if n > MAX_TRIPLE_INDEX {
        return Err(Error::OutOfRange {
            what: "triple index",
            value: n as u64,
            min: 1,
            max: MAX_TRIPLE_INDEX as u64,
        });
    }
    let a = letter_matrix(Letter::A, p);
    let b = letter_matrix(Letter::B, p);
    let ab = a.mul(&b);
    let ba = b.mul(&a);
    let mut out: Vec<Mat2> = Vec::with_capacity(n);
    for i in 1..=n {
        let m = match i {
            1 => a.clone(),
            2 => ab.mul(&a),
            _ => {
                let s = if (i - 1) % 2 == 0 { &ab } else { &ba };
                out[i - 2].mul(s).mul(&out[i - 3])
            }
        };
        out.push(m);
    }
    Ok(out)
}

/// `x_1, …, x_n` by the matrix recurrence.
pub fn triple_sequence(p: &Params, n: usize) -> Result<Vec<ApproxTriple>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "triple count",
            value: n as u64,
            min: 2,
            max: MAX_TRIPLE_INDEX as u64,
        });
    }
    Ok(triple_matrices(p, n)?
        .into_iter()
        .enumerate()
        .map(|(k, m)| ApproxTriple::from_matrix(k + 1, m))
        .collect())
}

/// Enclosure of `|x0 ξ - x1|` and `|x1 ξ - x2|` for the given `ξ` enclosure.
pub fn triple_errors(t: &ApproxTriple, xi: &RatInterval) -> (RatInterval, RatInterval) {
    let e0 = xi
        .scale(&Rational::from_integer(t.x0.clone()))
        .add_scalar(&Rational::from_integer(-&t.x1))
        .abs();
    let e1 = xi
        .scale(&Rational::from_integer(t.x1.clone()))
        .add_scalar(&Rational::from_integer(-&t.x2))
        .abs();
    (e0, e1)
}
