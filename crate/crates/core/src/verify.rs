//! Diagnostics of the approximation triples as guaranteed enclosures.
//!
//! For each index `i` the table reports
//!
//! * `E_i = X_i · max(|x0 ξ - x1|, |x0 ξ² - x2|)`, expected to stay bounded;
//! * `log X_i / log X_{i-1}`, expected to tend to the golden ratio `γ`;
//! * `X_i / (X_{i-1} X_{i-2})`, expected to tend to `ξ² + (a+b)ξ + (ab+1)`;
//! * `q_i = X_i X_{i-1}^{-γ} = exp(log X_i - γ log X_{i-1})`, expected to
//!   stay between two positive constants.
//!
//! The `ξ` enclosures are exact convergent brackets sized from `X_i`; a row
//! whose intervals miss the requested relative width is recomputed with a
//! wider bracket, and flagged as undecided once the escalation budget is
//! spent.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::construct::{triple_sequence, ApproxTriple, XiEnclosure};
use crate::exactnum::{exp, golden_ratio_bits, ln, Params, RatInterval, Rational};
use crate::exec::Executor;
use crate::{Error, Result, MAX_ESCALATIONS};

pub use crate::exactnum::log_enclosure;

/// Largest index accepted by [`theorem22_table`].
pub const MAX_TABLE_INDEX: usize = 30;

/// Largest index accepted by [`cube_experiment`].
pub const MAX_CUBE_INDEX: usize = 25;

/// Smallest `i_max` that [`fit_constants`] accepts.
pub const MIN_FIT_INDEX: usize = 10;

/// One row of the growth and error table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRow {
    pub i: usize,
    /// Number of decimal digits of `X_i`.
    pub x_digits: u64,
    pub e: RatInterval,
    /// Undefined when `X_{i-1} = 1`.
    pub growth_ratio: Option<RatInterval>,
    /// Undefined for `i = 2`.
    pub limit_val: Option<RatInterval>,
    pub q_ratio: RatInterval,
    /// All intervals reached the requested relative width.
    pub decided: bool,
}

/// Outcome of comparing `‖X_i ξ³‖` with `X_i^{-δ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeOutcome {
    /// `‖X_i ξ³‖ > X_i^{-δ}`.
    Pass,
    /// `‖X_i ξ³‖ < X_i^{-δ}`.
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeRow {
    pub i: usize,
    pub x_digits: u64,
    pub cube_dist: RatInterval,
    pub threshold: RatInterval,
    pub outcome: CubeOutcome,
}

/// Number of decimal digits of a positive integer.
pub fn decimal_digits(n: &BigInt) -> u64 {
    let bits = n.bits();
    if bits == 0 {
        return 1;
    }
    // 10^e ≤ n < 10^(e+1) for e = floor(log10 n); start from a close guess.
    let mut e = ((bits - 1) as f64 * core::f64::consts::LOG10_2) as u64;
    let ten = BigInt::from(10);
    let mut p = num_traits::pow(ten.clone(), e as usize);
    while &p > n {
        p /= &ten;
        e -= 1;
    }
    loop {
        let next = &p * &ten;
        if &next > n {
            return e + 1;
        }
        p = next;
        e += 1;
    }
}

/// Enclosure of `ξ² + (a+b)ξ + (ab+1)` over a `ξ` enclosure.
pub fn limit_target(p: &Params, xi: &RatInterval) -> RatInterval {
    let s = Rational::from_integer(p.a() + p.b());
    let c = Rational::from_integer(BigInt::from(p.a()) * p.b() + 1);
    xi.pow(2).add(&xi.scale(&s)).add_scalar(&c)
}

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            what,
            value: value as u64,
            min: min as u64,
            max: max as u64,
        });
    }
    Ok(())
}

/// Bits of the `ξ` bracket for row `i` at escalation step `t`.
fn row_bracket_bits(x: &BigInt, bits: u64, t: u32) -> u64 {
    2 * x.bits() + bits + (16u64 << t.min(40))
}

struct RowInput<'a> {
    i: usize,
    triples: &'a [ApproxTriple],
    xi: RatInterval,
    bits: u64,
    extra: u64,
}

fn theorem_row(input: RowInput<'_>) -> Result<TheoremRow> {
    let RowInput {
        i,
        triples,
        xi,
        bits,
        extra,
    } = input;
    let t = &triples[i - 1];
    let prev = &triples[i - 2];
    let x = Rational::from_integer(t.x0.clone());
    let target = Rational::pow2_neg(bits);
    let w = bits + extra;

    let e1 = xi.scale(&x).add_scalar(&Rational::from_integer(-&t.x1)).abs();
    let e2 = xi
        .pow(2)
        .scale(&x)
        .add_scalar(&Rational::from_integer(-&t.x2))
        .abs();
    let e = e1.max_with(&e2).scale(&x).round_outward(w + 8);

    let ln_x = ln(&x, w + 16)?;
    let ln_prev = ln(&Rational::from_integer(prev.x0.clone()), w + 16)?;
    let growth_ratio = if prev.x0.is_one() {
        None
    } else {
        Some(ln_x.div(&ln_prev)?.round_outward(w + 8))
    };
    let limit_val = if i >= 3 {
        let den = &prev.x0 * &triples[i - 3].x0;
        let v = Rational::new(t.x0.clone(), den);
        Some(RatInterval::point(v).round_outward(w + 8))
    } else {
        None
    };
    // Absolute width of γ log X_{i-1} stays near 2^-(w+8).
    let log_mag = ln_prev.hi().ceil().bits();
    let gamma = golden_ratio_bits(w + 16 + log_mag);
    let q_ratio = exp(&ln_x.sub(&gamma.mul(&ln_prev)), w + 16)?.round_outward(w + 8);

    let decided = e.relative_width_at_most(&target)
        && q_ratio.relative_width_at_most(&target)
        && growth_ratio
            .as_ref()
            .map_or(true, |g| g.relative_width_at_most(&target))
        && limit_val
            .as_ref()
            .map_or(true, |l| l.relative_width_at_most(&target));
    Ok(TheoremRow {
        i,
        x_digits: decimal_digits(&t.x0),
        e,
        growth_ratio,
        limit_val,
        q_ratio,
        decided,
    })
}

/// Rows `i = 2..=i_max` with every interval of relative width at most
/// `2^-bits` where possible. Rows run on the executor; the output is
/// ordered by `i` and independent of the executor.
pub fn theorem22_table<E: Executor>(
    p: &Params,
    i_max: usize,
    bits: u64,
    exec: &E,
) -> Result<Vec<TheoremRow>> {
    check_range("i_max", i_max, 2, MAX_TABLE_INDEX)?;
    let triples = triple_sequence(p, i_max)?;
    let mut src = XiEnclosure::new(*p);
    let mut inputs = Vec::new();
    for i in 2..=i_max {
        let xi = src.refine_bits(row_bracket_bits(&triples[i - 1].x0, bits, 0))?;
        inputs.push((i, xi));
    }
    let mut rows = exec
        .map(inputs, |(i, xi)| {
            theorem_row(RowInput {
                i,
                triples: &triples,
                xi,
                bits,
                extra: 16,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for row in rows.iter_mut().filter(|r| !r.decided) {
        for t in 1..=MAX_ESCALATIONS {
            let x = &triples[row.i - 1].x0;
            let Ok(xi) = src.refine_bits(row_bracket_bits(x, bits, t)) else {
                break;
            };
            *row = theorem_row(RowInput {
                i: row.i,
                triples: &triples,
                xi,
                bits,
                extra: 16 << t.min(40),
            })?;
            if row.decided {
                break;
            }
        }
    }
    Ok(rows)
}

/// Constants `(c1, c2, c3)` with `c1 ≤ q_i ≤ c2` and `E_i ≤ c3` on the
/// given rows.
pub fn fit_constants(rows: &[TheoremRow]) -> Result<(Rational, Rational, Rational)> {
    if let Some(r) = rows.iter().find(|r| !r.decided) {
        return Err(Error::UndecidedRow { i: r.i });
    }
    let i_max = rows.iter().map(|r| r.i).max().unwrap_or(0);
    let i_min = rows.iter().map(|r| r.i).min().unwrap_or(0);
    if i_min != 2 || i_max < MIN_FIT_INDEX || rows.len() != i_max - 1 {
        return Err(Error::InvalidArgument("rows must cover i = 2..=i_max with i_max ≥ 10"));
    }
    let c1 = rows.iter().map(|r| r.q_ratio.lo()).min().cloned();
    let c2 = rows.iter().map(|r| r.q_ratio.hi()).max().cloned();
    let c3 = rows.iter().map(|r| r.e.hi()).max().cloned();
    match (c1, c2, c3) {
        (Some(c1), Some(c2), Some(c3)) => Ok((c1, c2, c3)),
        _ => Err(Error::InvalidArgument("no rows")),
    }
}

fn cube_row(
    t: &ApproxTriple,
    xi: &RatInterval,
    delta: &Rational,
    extra: u64,
) -> Result<CubeRow> {
    let x = Rational::from_integer(t.x0.clone());
    let cube_dist = xi.pow(3).scale(&x).nearest_int_distance().round_outward(64 + extra);
    let ln_x = ln(&x, 64 + extra)?;
    let threshold = exp(&ln_x.scale(&-delta), 64 + extra)?;
    let outcome = if threshold.strictly_below(&cube_dist) {
        CubeOutcome::Pass
    } else if cube_dist.strictly_below(&threshold) {
        CubeOutcome::Fail
    } else {
        CubeOutcome::Undecided
    };
    Ok(CubeRow {
        i: t.i,
        x_digits: decimal_digits(&t.x0),
        cube_dist,
        threshold,
        outcome,
    })
}

/// Compares `‖X_i ξ³‖` with `X_i^{-δ}` for `i = 2..=i_max`.
pub fn cube_experiment<E: Executor>(
    p: &Params,
    i_max: usize,
    delta: &Rational,
    exec: &E,
) -> Result<Vec<CubeRow>> {
    check_range("i_max", i_max, 2, MAX_CUBE_INDEX)?;
    if !delta.is_positive() || delta >= &Rational::one() {
        return Err(Error::InvalidArgument("delta must lie in (0, 1)"));
    }
    let triples = triple_sequence(p, i_max)?;
    let mut src = XiEnclosure::new(*p);
    let bracket_bits = |x: &BigInt, t: u32| x.bits() + (32u64 << t.min(40));
    let mut inputs = Vec::new();
    for t in &triples[1..] {
        inputs.push((t, src.refine_bits(bracket_bits(&t.x0, 0))?));
    }
    let mut rows = exec
        .map(inputs, |(t, xi)| cube_row(t, &xi, delta, 0))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for row in rows.iter_mut() {
        let t = &triples[row.i - 1];
        for step in 1..=MAX_ESCALATIONS {
            if row.outcome != CubeOutcome::Undecided {
                break;
            }
            let Ok(xi) = src.refine_bits(bracket_bits(&t.x0, step)) else {
                break;
            };
            *row = cube_row(t, &xi, delta, 32 << step.min(40))?;
        }
    }
    Ok(rows)
}
