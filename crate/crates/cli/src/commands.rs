//! One function per subcommand, each producing a table and the number of
//! undecided rows in it.

use fibcf_core::construct::{expected_det, triple_sequence, XiEnclosure};
use fibcf_core::dioph::{
    best_algebraic, best_rational, best_simultaneous, AlgebraicCandidate, RootEnclosure,
    SearchKind,
};
use fibcf_core::exactnum::Round;
use fibcf_core::verify::{cube_experiment, decimal_digits, fit_constants, theorem22_table, CubeOutcome};
use fibcf_core::{RatInterval, Rational};
use num_bigint::BigInt;

use crate::config::{Kind, RunConfig};
use crate::pool::Pool;
use crate::table::{Record, Table};

pub struct Output {
    pub table: Table,
    pub undecided: usize,
}

pub fn construct(cfg: &RunConfig) -> anyhow::Result<Output> {
    let mut table = Table::new(&["i", "x_digits", "x0", "x1", "x2", "det", "rows", "det_ok"]);
    let triples = triple_sequence(&cfg.params, cfg.i_max.max(2))?;
    let mut ok = 0usize;
    for t in triples.iter().take(cfg.i_max) {
        let det = t.det();
        ok += usize::from(det == BigInt::from(expected_det(t.i)));
        let mut r = Record::new("row");
        r.set("i", t.i)
            .set("x_digits", decimal_digits(&t.x0))
            .set("x0", t.x0.to_string())
            .set("x1", t.x1.to_string())
            .set("x2", t.x2.to_string())
            .set("det", det.to_string());
        table.push(r);
    }
    let mut s = Record::new("summary");
    s.set("rows", cfg.i_max).set("det_ok", ok == cfg.i_max);
    table.push(s);
    Ok(Output { table, undecided: 0 })
}

pub fn verify(cfg: &RunConfig, pool: &Pool) -> anyhow::Result<Output> {
    let digits = cfg.precision_digits;
    let mut table = Table::new(&[
        "i", "x_digits", "digits", "e_lo", "e_hi", "growth_lo", "growth_hi", "limit_lo",
        "limit_hi", "q_lo", "q_hi", "decided", "rows", "undecided", "c1", "c2", "c3",
    ]);
    let rows = theorem22_table(&cfg.params, cfg.i_max, cfg.bits(), pool)?;
    for row in &rows {
        let mut r = Record::new("row");
        r.set("i", row.i)
            .set("x_digits", row.x_digits)
            .set("digits", u64::from(digits))
            .interval("e_lo", "e_hi", &row.e, digits);
        if let Some(g) = &row.growth_ratio {
            r.interval("growth_lo", "growth_hi", g, digits);
        }
        if let Some(l) = &row.limit_val {
            r.interval("limit_lo", "limit_hi", l, digits);
        }
        r.interval("q_lo", "q_hi", &row.q_ratio, digits)
            .set("decided", row.decided);
        table.push(r);
    }
    let undecided = rows.iter().filter(|r| !r.decided).count();
    let mut s = Record::new("summary");
    s.set("rows", rows.len()).set("undecided", undecided);
    // The fit needs every row decided and at least ten of them.
    if let Ok((c1, c2, c3)) = fit_constants(&rows) {
        s.bound("c1", &c1, digits, Round::Down)
            .bound("c2", &c2, digits, Round::Up)
            .bound("c3", &c3, digits, Round::Up);
    }
    table.push(s);
    Ok(Output { table, undecided })
}

pub fn cube(cfg: &RunConfig, pool: &Pool) -> anyhow::Result<Output> {
    let digits = cfg.precision_digits;
    let mut table = Table::new(&[
        "i", "x_digits", "digits", "cube_lo", "cube_hi", "threshold_lo", "threshold_hi",
        "outcome", "delta", "pass", "fail", "undecided",
    ]);
    let rows = cube_experiment(&cfg.params, cfg.i_max, &cfg.delta, pool)?;
    let count = |o: CubeOutcome| rows.iter().filter(|r| r.outcome == o).count();
    for row in &rows {
        let outcome = match row.outcome {
            CubeOutcome::Pass => "pass",
            CubeOutcome::Fail => "fail",
            CubeOutcome::Undecided => "undecided",
        };
        let mut r = Record::new("row");
        r.set("i", row.i)
            .set("x_digits", row.x_digits)
            .set("digits", u64::from(digits))
            .interval("cube_lo", "cube_hi", &row.cube_dist, digits)
            .interval("threshold_lo", "threshold_hi", &row.threshold, digits)
            .set("outcome", outcome);
        table.push(r);
    }
    let undecided = count(CubeOutcome::Undecided);
    let mut s = Record::new("summary");
    s.set("delta", cfg.delta.to_string())
        .set("pass", count(CubeOutcome::Pass))
        .set("fail", count(CubeOutcome::Fail))
        .set("undecided", undecided);
    table.push(s);
    Ok(Output { table, undecided })
}

fn join(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(";")
}

pub fn simul(cfg: &RunConfig, pool: &Pool) -> anyhow::Result<Output> {
    let digits = cfg.precision_digits;
    let mut table = Table::new(&[
        "X", "x0", "x1", "x2", "digits", "delta_lo", "delta_hi", "normalized_lo",
        "normalized_hi", "ties", "decided", "rows", "undecided", "normalized_min",
    ]);
    let mut src = XiEnclosure::new(cfg.params);
    let mut undecided = 0;
    let mut floor: Option<Rational> = None;
    for &x in &cfg.x_list {
        let res = best_simultaneous(&mut src, x, cfg.bits(), pool)?;
        undecided += usize::from(!res.is_decided());
        let lo = res.normalized.lo();
        if floor.as_ref().map_or(true, |f| lo < f) {
            floor = Some(lo.clone());
        }
        let mut r = Record::new("row");
        r.set("X", x)
            .set("x0", res.x0.to_string())
            .set("x1", res.x1.to_string())
            .set("x2", res.x2.to_string())
            .set("digits", u64::from(digits))
            .interval("delta_lo", "delta_hi", &res.delta, digits)
            .interval("normalized_lo", "normalized_hi", &res.normalized, digits)
            .set("decided", res.is_decided());
        if !res.ties.is_empty() {
            r.set("ties", join(res.ties.iter().map(u64::to_string)));
        }
        table.push(r);
    }
    let mut s = Record::new("summary");
    s.set("rows", cfg.x_list.len()).set("undecided", undecided);
    if let Some(f) = floor {
        s.bound("normalized_min", &f, digits, Round::Down);
    }
    table.push(s);
    Ok(Output { table, undecided })
}

fn candidate_record(
    kind: &'static str,
    h: u64,
    c: &AlgebraicCandidate,
    digits: u32,
) -> Record {
    let mut r = Record::new("row");
    r.set("kind", kind)
        .set("H", h)
        .set("poly", c.poly.to_string().replace(' ', ""))
        .set("height", c.height)
        .set("digits", u64::from(digits));
    // An unresolved nearest root prints the hull of the candidates.
    let mut re: Option<RatInterval> = None;
    let mut im: Option<RatInterval> = None;
    for root in &c.roots {
        let (x, y) = match root {
            RootEnclosure::Real(x) => (x, None),
            RootEnclosure::Complex { re, im } => (re, Some(im)),
        };
        re = Some(re.map_or(x.clone(), |v| v.hull(x)));
        if let Some(y) = y {
            im = Some(im.map_or(y.clone(), |v| v.hull(y)));
        }
    }
    if let Some(v) = &re {
        r.interval("root_lo", "root_hi", v, digits);
    }
    if let Some(v) = &im {
        r.interval("root_im_lo", "root_im_hi", v, digits);
    }
    r.interval("dist_lo", "dist_hi", &c.dist, digits);
    if let Some(e) = &c.exponent {
        r.interval("exponent_lo", "exponent_hi", e, digits);
    }
    r
}

pub fn algsearch(cfg: &RunConfig, pool: &Pool) -> anyhow::Result<Output> {
    let digits = cfg.precision_digits;
    let mut table = Table::new(&[
        "kind", "H", "poly", "height", "digits", "root_lo", "root_hi", "root_im_lo",
        "root_im_hi", "dist_lo", "dist_hi", "exponent_lo", "exponent_hi", "candidates",
        "ties", "decided", "rows", "undecided",
    ]);
    let mut src = XiEnclosure::new(cfg.params);
    let mut undecided = 0;
    let mut rows = 0usize;
    if matches!(cfg.kind, Kind::Rational | Kind::All) {
        let c = best_rational(&mut src, cfg.h, cfg.bits())?;
        let mut r = candidate_record("rational", cfg.h, &c, digits);
        r.set("decided", true);
        table.push(r);
        rows += 1;
    }
    for (kind, name, selected) in [
        (SearchKind::Quadratic, "quadratic", Kind::Quadratic),
        (SearchKind::CubicInteger, "cubic_integer", Kind::Cubic),
    ] {
        if !matches!(cfg.kind, Kind::All) && cfg.kind != selected {
            continue;
        }
        let s = best_algebraic(kind, &mut src, cfg.h, cfg.bits(), pool)?;
        undecided += usize::from(!s.is_decided());
        let mut r = candidate_record(name, cfg.h, &s.best, digits);
        r.set("candidates", s.candidates).set("decided", s.is_decided());
        if !s.ties.is_empty() {
            r.set("ties", join(s.ties.iter().map(|p| p.to_string().replace(' ', ""))));
        }
        table.push(r);
        rows += 1;
    }
    let mut s = Record::new("summary");
    s.set("rows", rows).set("undecided", undecided);
    table.push(s);
    Ok(Output { table, undecided })
}
