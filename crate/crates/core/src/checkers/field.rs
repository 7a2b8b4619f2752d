use std::sync::Arc;

use serde_json::json;

use super::{torsion_bound, CheckOptions, Identity, Report};
use crate::curve::{CurveLevel, Point};
use crate::divisor::{Divisor, SupportSet};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::geom::{
    phi_approx, reconstruct_field, FieldElement, PhiContext, PhiDescriptor, QVector, ReconstructedField,
};
use crate::pic::{EllipticCurve, GroupPoint, HClass};
use crate::sampling::{point_height, Sampler};
use crate::tower::Tower;

const GRID: i64 = 3;
const RANDOM_PAIRS: usize = 100;
const DISTRIBUTIVE_TRIPLES: usize = 50;

fn point_class(level: &Arc<CurveLevel>, p: &Point) -> Result<HClass> {
    HClass::from_divisor(level, Divisor::point(p, 1))
}

fn random_fraction(rng: &mut Sampler) -> Rational {
    rational::frac(rng.range(-20, 20), rng.range(1, 20))
}

/// `r` as a formal ratio `r v / v` with a random nonzero `v`.
fn formal(rng: &mut Sampler, r: &Rational) -> Result<FieldElement> {
    let v = loop {
        let v = QVector::from_ints(&[rng.range(-5, 5), rng.range(-5, 5)]);
        if !v.is_zero() {
            break v;
        }
    };
    FieldElement::new(v.scale(r), v)
}

fn same(k: &ReconstructedField, x: &FieldElement, r: &Rational) -> Result<bool> {
    Ok(x.value() == *r && k.equivalent(x, &k.embed(r))?)
}

/// The field rebuilt on the plane of two classes, checked against rational
/// arithmetic on a grid and on random formal ratios.
pub(super) fn reconstruct(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let spec = tower
        .field_basis
        .as_ref()
        .ok_or_else(|| Error::Config(format!("tower `{}` declares no field basis", tower.name)))?;
    let level = tower.level(&spec.level)?;
    let (a1, a2) = (tower.point(&spec.a1)?, tower.point(&spec.a2)?);
    let (c1, c2) = (point_class(&level, &a1)?, point_class(&level, &a2)?);
    let k = reconstruct_field((&c1, &c2), tower.params.search_bound, torsion_bound(tower, opts))?;
    report.certify(
        "basis",
        json!({"a1": a1.to_string(), "a2": a2.to_string(), "independent_within": tower.params.search_bound}),
    );

    let grid = k.verify_grid(GRID)?;
    let mut g = Identity::new(format!("grid {{-{GRID}..{GRID}}}^2 add and mul"), level.id());
    g.checked = grid.checked;
    g.passed = grid.passed;
    g.failures = grid.failures.into_iter().take(5).collect();
    report.push(g);

    let mut rng = Sampler::new(opts.seed, "field-reconstruct");
    let mut add = Identity::new("x + y on formal ratios", level.id());
    let mut mul = Identity::new("x * y on formal ratios", level.id());
    let mut repr = Identity::new("u/v = u'/v' for two representations", level.id());
    let mut inv = Identity::new("x + (-x) = 0", level.id());
    for _ in 0..RANDOM_PAIRS {
        let (r, s) = (random_fraction(&mut rng), random_fraction(&mut rng));
        let (x, y) = (formal(&mut rng, &r)?, formal(&mut rng, &s)?);
        let what = || format!("{r}, {s}");
        add.record_result(k.field_add(&x, &y).and_then(|z| same(&k, &z, &(&r + &s))), what);
        mul.record_result(k.field_mul(&x, &y).and_then(|z| same(&k, &z, &(&r * &s))), what);
        let x2 = formal(&mut rng, &r)?;
        repr.record_result(k.equivalent(&x, &x2), what);
        inv.record_result(
            k.field_neg(&x)
                .and_then(|n| k.field_add(&x, &n))
                .and_then(|z| same(&k, &z, &rational::zero())),
            what,
        );
    }
    let mut dist = Identity::new("x (y + z) = x y + x z", level.id());
    for _ in 0..DISTRIBUTIVE_TRIPLES {
        let rs: Vec<Rational> = (0..3).map(|_| random_fraction(&mut rng)).collect();
        let xs = rs.iter().map(|r| formal(&mut rng, r)).collect::<Result<Vec<_>>>()?;
        dist.record_result(
            (|| {
                let lhs = k.field_mul(&xs[0], &k.field_add(&xs[1], &xs[2])?)?;
                let rhs = k.field_add(&k.field_mul(&xs[0], &xs[1])?, &k.field_mul(&xs[0], &xs[2])?)?;
                k.equivalent(&lhs, &rhs)
            })(),
            || format!("{}, {}, {}", rs[0], rs[1], rs[2]),
        );
    }
    for id in [add, mul, repr, inv, dist] {
        report.push(id);
    }
    Ok(report)
}

/// Number of closed points above `p` over all covers onto its level is one
/// per cover: the fiber polynomial is irreducible.
fn irreducible_fibers(tower: &Tower, p: &Point) -> Result<bool> {
    for c in tower.covers_onto(p.level()) {
        if c.closed_fiber_size(p)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn descriptor_contains(d: &PhiDescriptor, coords: &QVector) -> bool {
    let rows: Vec<Vec<Rational>> = d
        .w_basis
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| rational::parse(c).expect("printed rational"))
                .collect()
        })
        .collect();
    crate::exact::linalg::in_span(&rows, coords.coords(), coords.dim())
}

fn nested(small: &PhiDescriptor, big: &PhiDescriptor) -> bool {
    let dim = small.w_basis.first().or(big.w_basis.first()).map_or(0, |r| r.len());
    let within = small.w_basis.iter().all(|r| {
        descriptor_contains(
            big,
            &QVector::new(r.iter().map(|c| rational::parse(c).unwrap()).collect()),
        )
    });
    let bound_ok = match (small.dimension_bound, big.dimension_bound) {
        (Some(a), Some(b)) => a <= b,
        (_, None) => true,
        (None, Some(_)) => false,
    };
    dim == 0 || (within && bound_ok)
}

/// The shrinking of the smallest definable subspace containing `a`: with
/// `beta2` of irreducible fiber and `beta3 = beta1 - beta2`, the family
/// `{beta1}, {beta2, beta3}` cuts the space down to the line through `a`.
pub(super) fn phi_shrink(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let spec = tower
        .phi
        .as_ref()
        .ok_or_else(|| Error::Config(format!("tower `{}` declares no shrinking instance", tower.name)))?;
    let level = tower.level(&spec.level)?;
    let ec = EllipticCurve::from_level(&level)?;
    let basis_pts = spec.basis.iter().map(|n| tower.point(n)).collect::<Result<Vec<_>>>()?;
    let beta1 = tower.point(&spec.target)?;
    let ctx = PhiContext {
        basis: basis_pts
            .iter()
            .map(|p| point_class(&level, p))
            .collect::<Result<_>>()?,
        covers: tower.covers_onto(level.id()),
        search_bound: tower.params.search_bound,
        torsion_bound: torsion_bound(tower, opts),
    };
    let a = point_class(&level, &beta1)?;
    let coords = crate::geom::class_coordinates(&a, &ctx)?;

    // candidates m P1 + n P2 + ..., highest first
    let mut cands: Vec<(Point, Vec<i64>)> = Vec::new();
    let s = spec.search;
    let r = basis_pts.len();
    let mut combo = vec![-s; r];
    loop {
        let mut acc = GroupPoint::Infinity;
        for (p, &m) in basis_pts.iter().zip(&combo) {
            acc = ec.add(&acc, &ec.mul(&GroupPoint::Affine(p.clone()), m));
        }
        if let GroupPoint::Affine(p) = acc {
            cands.push((p, combo.clone()));
        }
        let mut i = 0;
        while i < r && combo[i] == s {
            combo[i] = -s;
            i += 1;
        }
        if i == r {
            break;
        }
        combo[i] += 1;
    }
    cands.sort_by(|x, y| point_height(&y.0).cmp(&point_height(&x.0)).then_with(|| x.0.cmp(&y.0)));

    let g1 = GroupPoint::Affine(beta1.clone());
    let mut chosen = None;
    let mut rejected = 0usize;
    for (b2, combo) in &cands {
        if *b2 == beta1 {
            continue;
        }
        let GroupPoint::Affine(b3) = ec.sub(&g1, &GroupPoint::Affine(b2.clone())) else {
            continue;
        };
        if b3 == *b2 || b3 == beta1 {
            continue;
        }
        if irreducible_fibers(tower, b2)? && irreducible_fibers(tower, &b3)? {
            chosen = Some((b2.clone(), b3, combo.clone()));
            break;
        }
        rejected += 1;
    }
    let scope = level.id();
    let mut found = Identity::new("beta2, beta3 with irreducible fibers", scope);
    let Some((b2, b3, combo)) = chosen else {
        found.fail(|| {
            format!(
                "no candidate among {} combinations with coefficients up to {s}",
                cands.len()
            )
        });
        report.push(found);
        return Ok(report);
    };
    found.pass();
    report.push(found);
    let mut sum = Identity::new("beta2 + beta3 = beta1 in the group law", scope);
    sum.record(
        ec.add(&GroupPoint::Affine(b2.clone()), &GroupPoint::Affine(b3.clone())) == g1,
        || format!("{b2} + {b3}"),
    );
    report.push(sum);

    // a support missing `a` in its span
    let decoy = basis_pts
        .iter()
        .find(|p| {
            let h = point_class(&level, p).and_then(|h| crate::geom::class_coordinates(&h, &ctx));
            h.is_ok_and(|v| crate::exact::linalg::rank(&[v.coords().to_vec(), coords.coords().to_vec()], r) == 2)
        })
        .cloned();
    let b1 = SupportSet::from_points(scope, [beta1.clone()])?;
    let b23 = SupportSet::from_points(scope, [b2.clone(), b3.clone()])?;
    let mut families = vec![vec![b1.clone()]];
    if let Some(p) = &decoy {
        families.push(vec![b1.clone(), SupportSet::from_points(scope, [p.clone()])?]);
    }
    let mut last = families.last().unwrap().clone();
    last.push(b23);
    families.push(last);
    let descriptors = families
        .iter()
        .map(|f| phi_approx(&a, f, &ctx))
        .collect::<Result<Vec<_>>>()?;

    let mut sound = Identity::new("a lies in every descriptor", scope);
    for (d, f) in descriptors.iter().zip(&families) {
        sound.record(descriptor_contains(d, &coords), || {
            format!("family of {} supports", f.len())
        });
    }
    report.push(sound);
    let mut anti = Identity::new("descriptors shrink as the family grows", scope);
    for w in descriptors.windows(2) {
        anti.record(nested(&w[1], &w[0]), || {
            format!("{:?} then {:?}", w[0].dimension_bound, w[1].dimension_bound)
        });
    }
    report.push(anti);
    if decoy.is_some() {
        let mut skip = Identity::new("a support missing a leaves the descriptor unchanged", scope);
        skip.record(
            descriptors[0] == descriptors[1]
                || descriptors[0].w_basis == descriptors[1].w_basis
                    && descriptors[0].dimension_bound == descriptors[1].dimension_bound,
            || "decoy".into(),
        );
        report.push(skip);
    }
    let mut line = Identity::new("descriptor reaches the line through a", scope);
    let last = descriptors.last().unwrap();
    line.record(last.reached_line, || {
        format!("dimension bound {:?}", last.dimension_bound)
    });
    report.push(line);

    report.certify(
        "instance",
        json!({
            "a": beta1.to_string(),
            "coordinates": coords.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "beta2": b2.to_string(),
            "beta2_combination": combo,
            "beta3": b3.to_string(),
            "decoy": decoy.map(|p| p.to_string()),
            "rejected_candidates": rejected,
        }),
    );
    report.certify("descriptors", &descriptors);
    Ok(report)
}
