use std::sync::Arc;

use num_integer::Integer;
use serde_json::json;

use super::{torsion_bound, CheckOptions, Identity, Report};
use crate::curve::{CurveLevel, Point, K};
use crate::divisor::{parse_point, principal_divisor, Divisor};
use crate::error::{Error, Result};
use crate::exact::rational;
use crate::exact::{NumberField, Scalar, UniPoly};
use crate::pic::{
    is_principal, point_torsion, trace_check, EllipticCurve, GroupPoint, HClass, OrbitData, TorsionVerdict,
};
use crate::sampling::{Pools, Sampler};
use crate::tower::Tower;

/// Brute-force order search stops here (the largest rational torsion order).
const BRUTE_ORDER: i64 = 12;
const HEIGHT_BOUND: i64 = 100;
const DIVISIBILITY_SAMPLES: usize = 20;
const LINE_SAMPLES: usize = 50;

/// The trace argument on the tower's declared instance.
pub(super) fn trace(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let spec = tower
        .trace
        .as_ref()
        .ok_or_else(|| Error::Config(format!("tower `{}` declares no trace instance", tower.name)))?;
    let level = tower.level(&spec.level)?;
    let a1 = Divisor::parse(&level, &spec.a1)?;
    let a2 = Divisor::parse(&level, &spec.a2)?;
    let a3 = Divisor::parse(&level, &spec.a3)?;
    let points = spec
        .points
        .iter()
        .map(|p| parse_point(&level, p))
        .collect::<Result<Vec<Point>>>()?;
    let orbits = OrbitData::from_generators(points, &spec.generators)?;
    let r = trace_check(&level, &a1, &a2, &a3, &orbits, torsion_bound(tower, opts))?;
    let scope = level.id();
    let mut m = Identity::new(format!("tr(a1) = {} a1", r.group_order), scope);
    m.record(r.trace_a1_is_multiple, || format!("tr(a1) = {}", r.trace_a1));
    report.push(m);
    for (name, status, tr) in [
        ("tr(a2) = 0", &r.trace_a2_vanishes, &r.trace_a2),
        ("tr(a3) = 0", &r.trace_a3_vanishes, &r.trace_a3),
    ] {
        let mut id = Identity::new(name, scope);
        match status {
            crate::pic::IdentityStatus::Unknown { bound } => id.undecided(|| format!("{tr}: unknown within {bound}")),
            s => id.record(s.holds(), || tr.clone()),
        }
        report.push(id);
    }
    let mut agree = Identity::new("trace conclusion = group-law torsion test", scope);
    match r.agrees {
        Some(ok) => agree.record(ok, || format!("{:?}", r.independent)),
        None => agree.undecided(|| format!("{:?}", r.independent)),
    }
    report.push(agree);
    report.certify("trace", &r);
    Ok(report)
}

/// The level's equation over `Q`, when its coefficients are rational.
fn rational_model(level: &Arc<CurveLevel>) -> Option<Arc<CurveLevel>> {
    let q = level.q()?;
    let qf = NumberField::rationals();
    let coeffs: Option<Vec<K>> = q
        .coeffs()
        .iter()
        .map(|c| c.to_rational().map(|r| K::from_rational(&qf, r)))
        .collect();
    CurveLevel::double_cover(level.id(), &qf, UniPoly::new(coeffs?), level.parent().map(String::from)).ok()
}

/// All points with `t = a / b`, `|a|, b <= bound`.
fn points_of_height(level: &Arc<CurveLevel>, bound: i64) -> Result<Vec<Point>> {
    let q = level.q().expect("double cover");
    let qf = level.field();
    let mut out = Vec::new();
    for b in 1..=bound {
        for a in -bound..=bound {
            if a.gcd(&b) != 1 {
                continue;
            }
            let t = K::from_rational(qf, rational::frac(a, b));
            let v = q.eval(&t).to_rational().expect("rational model");
            if let Some(x) = rational::sqrt_exact(&v) {
                let neg = -x.clone();
                let mut xs = vec![x];
                if !xs[0].is_zero() {
                    xs.push(neg);
                }
                for x in xs {
                    out.push(level.point(t.clone(), Some(K::from_rational(qf, x)))?);
                }
            }
        }
    }
    Ok(out)
}

fn brute_order(ec: &EllipticCurve, p: &GroupPoint) -> Option<i64> {
    let mut acc = p.clone();
    for k in 1..=BRUTE_ORDER {
        if acc.is_infinity() {
            return Some(k);
        }
        acc = ec.add(&acc, p);
    }
    None
}

/// Lutz–Nagell classification against brute-force order search on all
/// points of height at most `bound` of the rational model of `level`.
pub fn lutz_nagell_vs_brute_force(level: &Arc<CurveLevel>, bound: i64, id: &mut Identity) -> Result<usize> {
    let Some(model) = rational_model(level) else {
        return Ok(0);
    };
    let ec = EllipticCurve::from_level(&model)?;
    let pts = points_of_height(&model, bound)?;
    for p in &pts {
        let g = GroupPoint::Affine(p.clone());
        let brute = brute_order(&ec, &g);
        let ln = point_torsion(&ec, &g, BRUTE_ORDER as u32);
        let ok = match (&ln, brute) {
            (TorsionVerdict::Torsion { order }, Some(k)) => *order as i64 == k,
            (TorsionVerdict::NonTorsion { .. }, None) => true,
            _ => false,
        };
        id.record(ok, || format!("{p}: {ln} vs brute force {brute:?}"));
    }
    Ok(pts.len())
}

/// Lutz–Nagell against brute force, and divisibility and torsion-freeness
/// of the classes modulo torsion.
pub(super) fn divisible_torsionfree(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    let bound = torsion_bound(tower, opts);
    let weierstrass: Vec<_> = tower.levels.iter().filter(|l| l.is_weierstrass()).collect();
    if weierstrass.is_empty() {
        return Err(Error::Config(format!(
            "tower `{}` has no Weierstrass level",
            tower.name
        )));
    }
    for level in weierstrass {
        let scope = level.id();
        let mut ln = Identity::new(format!("Lutz-Nagell = order search <= {BRUTE_ORDER}"), scope);
        let n = lutz_nagell_vs_brute_force(level, HEIGHT_BOUND, &mut ln)?;
        report.certify(&format!("points of height <= {HEIGHT_BOUND} on {scope}"), n);
        report.push(ln);

        let ec = EllipticCurve::from_level(level)?;
        let pts = pools.points(scope);
        let mut rng = Sampler::new(opts.seed, &format!("divisible {scope}"));
        let mut div = Identity::new("n (c / n) = c for n <= 5", scope);
        let mut free = Identity::new("n c = 0 implies c = 0 for n <= 5", scope);
        for _ in 0..DIVISIBILITY_SAMPLES {
            let d = rng.divisor(scope, pts, 3, 3, false);
            let c = HClass::new(level, d, rng.range(1, 3) as u64)?;
            for n in 1..=5u64 {
                let back = c.divide(n)?.scale(n as i64, 1)?;
                let same = back.equivalent(&c, bound)?;
                match same.decided() {
                    Some(s) => div.record(back == c && s, || format!("{c}, n = {n}")),
                    None => div.undecided(|| format!("{c}, n = {n}: {same}")),
                }
                let (nc, c0) = (c.scale(n as i64, 1)?.is_zero(bound)?, c.is_zero(bound)?);
                match (nc.decided(), c0.decided()) {
                    (Some(a), Some(b)) => free.record(a == b, || format!("{c}, n = {n}: {nc} vs {c0}")),
                    _ => free.undecided(|| format!("{c}, n = {n}: {nc} / {c0}")),
                }
            }
        }
        report.push(div);
        report.push(free);

        let mut tors = Identity::new("torsion classes vanish", scope);
        for p in pts {
            if brute_order(&ec, &GroupPoint::Affine(p.clone())).is_some() {
                let c = HClass::from_divisor(level, Divisor::point(p, 1))?;
                let v = c.is_zero(bound)?;
                tors.record(v.is_torsion(), || format!("{p}: {v}"));
            }
        }
        if tors.checked > 0 {
            report.push(tors);
        }
    }
    Ok(report)
}

/// The third affine point of the line through `p` and `q`, computed with
/// the chord and tangent slopes; `None` for vertical lines.
fn chord_tangent_third(q: &UniPoly<K>, p: &Point, r: &Point) -> Option<Point> {
    let (t1, x1) = (p.t(), p.x()?);
    let (t2, x2) = (r.t(), r.x()?);
    let lambda = if t1 != t2 {
        x2.sub_ref(x1).mul_ref(&t2.sub_ref(t1).inv()?)
    } else if x1 == x2 && !x1.is_zero() {
        q.derivative().eval(t1).mul_ref(&x1.add_ref(x1).inv()?)
    } else {
        return None;
    };
    // q = t^3 + a t^2 + ..., so the three roots sum to lambda^2 - a
    let a = q.coeffs()[2].clone();
    let t3 = lambda.mul_ref(&lambda).sub_ref(&a).sub_ref(t1).sub_ref(t2);
    let x3 = x1.add_ref(&lambda.mul_ref(&t3.sub_ref(t1)));
    Some(Point::unchecked(p.level(), t3, Some(x3)))
}

/// `is_principal` against an independent chord-and-tangent computation on
/// divisors of line functions through sampled pairs of points.
pub fn group_law_oracle(tower: &Tower, opts: &CheckOptions) -> Result<Report> {
    let mut report = Report::new("group-law", tower, opts);
    let pools = Pools::build(tower)?;
    let levels: Vec<_> = tower.levels.iter().filter(|l| l.is_weierstrass()).collect();
    if levels.is_empty() {
        return Err(Error::Config(format!(
            "tower `{}` has no Weierstrass level",
            tower.name
        )));
    }
    let mut rng = Sampler::new(opts.seed, "group-law");
    let mut ids: Vec<(Identity, Identity)> = levels
        .iter()
        .map(|l| {
            (
                Identity::new("P + Q + R principal with witness", l.id()),
                Identity::new("P + Q + (-R) not principal unless 2R = 0", l.id()),
            )
        })
        .collect();
    for k in 0..LINE_SAMPLES {
        let li = k % levels.len();
        let level = levels[li];
        let q = level.q().unwrap();
        let pts = pools.points(level.id());
        let (p, r) = (rng.pick(pts).clone(), rng.pick(pts).clone());
        let third = chord_tangent_third(q, &p, &r);
        let mut d = Divisor::point(&p, 1).add(&Divisor::point(&r, 1))?;
        if let Some(s) = &third {
            d.add_at(s.clone(), 1);
        }
        let (pos, neg) = &mut ids[li];
        let what = || format!("line through {p} and {r}");
        pos.record_result(
            (|| {
                let on_curve = third
                    .as_ref()
                    .is_none_or(|s| level.point(s.t().clone(), s.x().cloned()).is_ok());
                let pr = is_principal(level, &d)?;
                Ok(on_curve
                    && match pr.witness() {
                        Some(w) => principal_divisor(w)? == d,
                        None => false,
                    })
            })(),
            what,
        );
        if let Some(s) = &third {
            let x = s.x().unwrap();
            if !x.is_zero() {
                let flipped = Point::unchecked(s.level(), s.t().clone(), Some(x.neg_ref()));
                let mut e = Divisor::point(&p, 1).add(&Divisor::point(&r, 1))?;
                e.add_at(flipped, 1);
                neg.record_result(is_principal(level, &e).map(|pr| !pr.is_principal()), what);
            }
        }
    }
    for (a, b) in ids {
        report.push(a);
        report.push(b);
    }
    report.certify("instances", json!(LINE_SAMPLES));
    Ok(report.finish())
}
