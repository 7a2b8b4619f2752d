use std::sync::Arc;

use serde::Serialize;

use super::QVector;
use crate::cover::CoverMap;
use crate::divisor::{Divisor, SupportSet};
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::rational::{self, Rational};
use crate::pic::{span_membership, HClass, SpanVerdict};

/// What `phi_approx` needs besides the class and the supports: a declared
/// basis of the finite-rank part at the level, the covers whose source sits
/// above that level, and the search bounds.
#[derive(Clone)]
pub struct PhiContext {
    pub basis: Vec<HClass>,
    pub covers: Vec<Arc<CoverMap>>,
    pub search_bound: u32,
    pub torsion_bound: u32,
}

/// Upper bound for the smallest subspace cut out by the given supports.
///
/// The subspace is tracked as its part inside the span of the basis plus a
/// bound on the dimension of the part that pushes forward to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiDescriptor {
    /// Row basis of the part inside the declared basis, in its coordinates.
    pub w_basis: Vec<Vec<String>>,
    pub w_dimension: usize,
    /// `None` when no support used so far bounds it.
    pub perp_bound: Option<usize>,
    pub dimension_bound: Option<usize>,
    pub reached_line: bool,
    /// Indices of the supports `b` with `a` in `H(b)`.
    pub used: Vec<usize>,
}

/// Coordinates of a class in the basis, modulo torsion.
pub fn class_coordinates(a: &HClass, ctx: &PhiContext) -> Result<QVector> {
    match span_membership(a, &ctx.basis, ctx.search_bound, ctx.torsion_bound)? {
        SpanVerdict::Member { coefficients } => Ok(QVector::new(coefficients)),
        SpanVerdict::NotMemberWithinBound { bound } => Err(Error::UnrepresentableSupport(format!(
            "{} is not in the span of the basis within height {bound}",
            a.representative()
        ))),
    }
}

/// Extra closed points above `p`; `None` where a fiber cannot be counted
/// (a ramified fiber with no rational points).
fn closed_points_above(p: &crate::curve::Point, ctx: &PhiContext) -> Result<Option<usize>> {
    let mut excess = 0;
    for c in ctx.covers.iter().filter(|c| c.target().id() == p.level()) {
        match c.closed_fiber_size(p) {
            Ok(n) => excess += n.saturating_sub(1),
            Err(Error::FiberNotRational { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(excess))
}

/// Intersects, over the supports `b` whose span `H(b)` contains `a`, the
/// spaces `H(b)`, and reports the resulting dimension bound. Supports whose
/// span misses `a` are skipped; torsion `a` gives the zero space.
pub fn phi_approx(a: &HClass, family: &[SupportSet], ctx: &PhiContext) -> Result<PhiDescriptor> {
    let level = a.level();
    let r = ctx.basis.len();
    let one = rational::one();
    let coords = class_coordinates(a, ctx)?;
    if coords.is_zero() {
        return Ok(PhiDescriptor {
            w_basis: Vec::new(),
            w_dimension: 0,
            perp_bound: Some(0),
            dimension_bound: Some(0),
            reached_line: false,
            used: Vec::new(),
        });
    }
    let mut w: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if i == j { one.clone() } else { rational::zero() })
                .collect()
        })
        .collect();
    let mut perp: Option<usize> = None;
    let mut used = Vec::new();
    for (k, b) in family.iter().enumerate() {
        if b.level() != level.id() {
            return Err(Error::LevelMismatch {
                expected: level.id().into(),
                found: b.level().into(),
            });
        }
        let mut rows = Vec::new();
        let mut excess = Some(0);
        for p in b.iter() {
            let h = HClass::from_divisor(level, Divisor::point(p, 1))?;
            rows.push(class_coordinates(&h, ctx)?.coords().to_vec());
            let e = closed_points_above(p, ctx)?;
            excess = excess.zip(e).map(|(x, y)| x + y);
        }
        if !linalg::in_span(&rows, coords.coords(), r) {
            continue;
        }
        used.push(k);
        w = linalg::intersect_spans(&w, &rows, r, &one);
        // an uncountable fiber bounds nothing
        if let Some(e) = excess {
            perp = Some(perp.map_or(e, |q| q.min(e)));
        }
    }
    let w = linalg::row_basis(&w, r);
    let dimension_bound = perp.map(|q| q + w.len());
    Ok(PhiDescriptor {
        w_basis: w
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
        w_dimension: w.len(),
        perp_bound: perp,
        dimension_bound,
        reached_line: dimension_bound == Some(1),
        used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::curve::{CurveLevel, Point};

    fn ctx_for(e: &Arc<CurveLevel>, basis: &[&Point], covers: Vec<Arc<CoverMap>>) -> PhiContext {
        PhiContext {
            basis: basis
                .iter()
                .map(|p| HClass::from_divisor(e, Divisor::point(p, 1)).unwrap())
                .collect(),
            covers,
            search_bound: 4,
            torsion_bound: 60,
        }
    }

    #[test]
    fn rank_one_shrinks_to_line() {
        let e = e_level("x^2 = t^3 - 2");
        let p = e.point_q(3, 5).unwrap();
        let ctx = ctx_for(&e, &[&p], Vec::new());
        let a = HClass::from_divisor(&e, Divisor::point(&p, 2)).unwrap();
        let fam = vec![SupportSet::from_points("E", [p.clone()]).unwrap()];
        let d = phi_approx(&a, &fam, &ctx).unwrap();
        assert_eq!(d.w_dimension, 1);
        assert_eq!(d.dimension_bound, Some(1));
        assert!(d.reached_line);
        // nothing used: no bound
        let q = e.point_q(3, -5).unwrap();
        let missing = HClass::from_divisor(&e, Divisor::point(&q, 1).add(&Divisor::point(&p, 1)).unwrap()).unwrap();
        let d = phi_approx(&missing, &fam, &ctx).unwrap();
        assert!(d.used.is_empty() || d.w_dimension == 0);
    }

    #[test]
    fn torsion_is_zero_space() {
        let e = e_level("x^2 = t^3 - t");
        let t = e.point_q(0, 0).unwrap();
        let ctx = ctx_for(&e, &[], Vec::new());
        let a = HClass::from_divisor(&e, Divisor::point(&t, 1)).unwrap();
        let d = phi_approx(&a, &[], &ctx).unwrap();
        assert_eq!(d.dimension_bound, Some(0));
    }
}
