use std::sync::Arc;

use super::{CurveLevel, FunctionElement, LevelKind, Point, K};
use crate::error::{Error, Result};
use crate::exact::{Scalar, TruncatedSeries, UniPoly};

/// Starting precision of local expansions.
pub const START_PRECISION: usize = 8;
/// Default hard cap on the precision.
pub const DEFAULT_SERIES_CAP: usize = 1024;

/// `t` and `x` as power series in the uniformizer at a point.
#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub t: TruncatedSeries<K>,
    pub x: Option<TruncatedSeries<K>>,
}

/// Local parameter at `p`: `t - t0` unless `x0 = 0` on a double cover, where
/// `dF/dx = 2x` vanishes and `x` itself is used.
pub fn uniformizer(level: &Arc<CurveLevel>, p: &Point) -> Result<FunctionElement> {
    check_point(level, p)?;
    match p.x() {
        Some(x) if x.is_zero() => FunctionElement::x(level),
        _ => Ok(FunctionElement::t_minus(level, p.t())),
    }
}

fn check_point(level: &CurveLevel, p: &Point) -> Result<()> {
    if p.level() != level.id() {
        return Err(Error::LevelMismatch {
            expected: level.id().into(),
            found: p.level().into(),
        });
    }
    Ok(())
}

/// Expansion of the coordinates at `p` to the given precision.
pub fn local_expansion(level: &Arc<CurveLevel>, p: &Point, precision: usize) -> Result<LocalExpansion> {
    check_point(level, p)?;
    let one = level.one();
    let t0 = p.t().clone();
    let shifted_t = || TruncatedSeries::constant(t0.clone(), precision).add(&TruncatedSeries::var(&one, precision));
    match level.kind() {
        LevelKind::BaseLine => Ok(LocalExpansion {
            t: shifted_t(),
            x: None,
        }),
        LevelKind::DoubleCover { q } => {
            let x0 = p.x().expect("double-cover points carry x");
            if !x0.is_zero() {
                let t = shifted_t();
                let x = t
                    .eval_poly(q)
                    .sqrt_with(x0)
                    .expect("x0^2 = q(t0) at a point of the curve");
                Ok(LocalExpansion { t, x: Some(x) })
            } else {
                let s = solve_t_branch(q, &t0, &one, precision);
                Ok(LocalExpansion {
                    t: TruncatedSeries::constant(t0, precision).add(&s),
                    x: Some(TruncatedSeries::var(&one, precision)),
                })
            }
        }
    }
}

/// Solves `q(t0 + s) = u^2` for `s = s(u)` when `q(t0) = 0`, using
/// `s = (u^2 - sum_{k>=2} c_k s^k) / c_1` with `c_k` the Taylor coefficients.
/// Each pass fixes at least two more coefficients because `s = O(u^2)`.
fn solve_t_branch(q: &UniPoly<K>, t0: &K, one: &K, precision: usize) -> TruncatedSeries<K> {
    let c = q.taylor_shift(t0);
    let c1_inv = c.coeff_or(1, one).inv().expect("q is squarefree, so q'(t0) != 0");
    let higher = UniPoly::new(
        c.coeffs()
            .iter()
            .enumerate()
            .map(|(k, ck)| if k >= 2 { ck.clone() } else { one.zero_like() })
            .collect(),
    );
    let u2 = TruncatedSeries::var(one, precision).mul(&TruncatedSeries::var(one, precision));
    let mut s = u2.scale(&c1_inv);
    for _ in 0..precision / 2 + 1 {
        s = u2.sub(&s.eval_poly(&higher)).scale(&c1_inv);
    }
    s
}

/// Order of vanishing of `f` at `p`, negative at poles.
pub fn valuation(f: &FunctionElement, p: &Point) -> Result<i64> {
    valuation_capped(f, p, DEFAULT_SERIES_CAP)
}

pub fn valuation_capped(f: &FunctionElement, p: &Point, cap: usize) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let level = f.level();
    // t-only functions at points with t - t0 as parameter: read off directly
    if f.is_t_only() && !p.x().is_some_and(|x| x.is_zero()) {
        check_point(level, p)?;
        return Ok(t_order(f.numerator_t(), p.t()) - t_order(f.denominator(), p.t()));
    }
    let mut prec = START_PRECISION;
    loop {
        let le = local_expansion(level, p, prec)?;
        let mut num = le.t.eval_poly(f.numerator_t());
        if let Some(x) = &le.x {
            if !f.numerator_x().is_zero() {
                num = num.add(&le.t.eval_poly(f.numerator_x()).mul(x));
            }
        }
        let den = le.t.eval_poly(f.denominator());
        if let (Some(a), Some(b)) = (num.order(), den.order()) {
            return Ok(a as i64 - b as i64);
        }
        if prec >= cap {
            return Err(Error::PrecisionExhausted { cap });
        }
        prec = (prec * 2).min(cap);
    }
}

/// Multiplicity of `t0` as a root of `p`.
fn t_order(p: &UniPoly<K>, t0: &K) -> i64 {
    let lin = UniPoly::linear_root(t0);
    let mut p = p.clone();
    let mut k = 0;
    while let Some(q) = p.exact_div(&lin) {
        if p.is_zero() {
            break;
        }
        p = q;
        k += 1;
    }
    k
}

/// Points of a double cover of the base line above a base point, with
/// ramification degrees.
pub fn solve_fiber(level: &Arc<CurveLevel>, base: &Point) -> Result<Vec<(Point, u32)>> {
    if level.is_base() {
        return Err(Error::unsupported(level.id(), "the base line has no parent"));
    }
    if base.x().is_some() {
        return Err(Error::Precondition(format!(
            "{} is not a point of the base line below `{}`",
            base,
            level.id()
        )));
    }
    let pts = level.points_above(base.t())?;
    let tm = FunctionElement::t_minus(level, base.t());
    pts.into_iter()
        .map(|q| Ok((q.clone(), valuation(&tm, &q)? as u32)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::exact::{expr::parse_number, NumberField};

    #[test]
    fn valuations_on_the_congruent_curve() {
        let e = e_level("x^2 = t^3 - t");
        let origin = e.point_q(0, 0).unwrap();
        let t = FunctionElement::t(&e);
        assert_eq!(valuation(&t, &origin).unwrap(), 2);
        let x = FunctionElement::x(&e).unwrap();
        assert_eq!(valuation(&x, &e.point_q(1, 0).unwrap()).unwrap(), 1);
        assert_eq!(valuation(&t.inv().unwrap(), &origin).unwrap(), -2);
        let u = uniformizer(&e, &origin).unwrap();
        assert_eq!(u, x);
        assert_eq!(valuation(&u, &origin).unwrap(), 1);
    }

    #[test]
    fn uniformizer_at_a_non_branch_point() {
        let k = NumberField::new("s", crate::exact::expr::parse_rational_poly("s^2 - 6", "s").unwrap()).unwrap();
        let e = crate::curve::CurveLevel::plane(
            "E",
            &k,
            &crate::exact::expr::parse_bipoly("x^2 = t^3 - t", &k).unwrap(),
            None,
        )
        .unwrap();
        let p = e.point(e.num(2), Some(parse_number("s", &k).unwrap())).unwrap();
        let u = uniformizer(&e, &p).unwrap();
        assert_eq!(u, FunctionElement::t_minus(&e, &e.num(2)));
        assert_eq!(valuation(&u, &p).unwrap(), 1);
        // x - s vanishes simply at p
        let f = FunctionElement::parse(&e, "x - s").unwrap();
        assert_eq!(valuation(&f, &p).unwrap(), 1);
    }

    #[test]
    fn high_order_zero_doubles_precision() {
        let e = e_level("x^2 = t^3 - t");
        let origin = e.point_q(0, 0).unwrap();
        let f = FunctionElement::parse(&e, "x^11").unwrap();
        assert_eq!(valuation(&f, &origin).unwrap(), 11);
        assert_eq!(
            valuation_capped(&f, &origin, 8),
            Err(Error::PrecisionExhausted { cap: 8 })
        );
    }

    #[test]
    fn fibers_and_ramification() {
        let e = e_level("x^2 = t^3 - t");
        let l = crate::curve::CurveLevel::base("L", e.field());
        let fib = solve_fiber(&e, &l.base_point(e.num(0)).unwrap()).unwrap();
        assert_eq!(fib, vec![(e.point_q(0, 0).unwrap(), 2)]);
        let e2 = e_level("x^2 = t^3 - 2");
        let fib = solve_fiber(&e2, &l.base_point(e.num(3)).unwrap()).unwrap();
        assert_eq!(fib.iter().map(|(_, r)| r).sum::<u32>(), 2);
    }
}
