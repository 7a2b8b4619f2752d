use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use super::classes::is_torsion;
use super::group_law::is_principal;
use super::torsion::TorsionVerdict;
use crate::curve::{CurveLevel, Point};
use crate::divisor::Divisor;
use crate::error::{Error, Result};

/// A finite group acting on a listed set of points, stored as the full list
/// of its permutations (index `i` goes to `perm[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    points: Vec<Point>,
    index: BTreeMap<Point, usize>,
    elements: Vec<Vec<usize>>,
}

impl OrbitData {
    /// The group generated by `generators`.
    pub fn from_generators(points: Vec<Point>, generators: &[Vec<usize>]) -> Result<Self> {
        let n = points.len();
        let index: BTreeMap<Point, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != n {
            return Err(Error::ActionNotWellDefined("listed points repeat".into()));
        }
        for g in generators {
            let image: BTreeSet<usize> = g.iter().copied().collect();
            if g.len() != n || image.len() != n || image.iter().any(|&i| i >= n) {
                return Err(Error::ActionNotWellDefined(format!(
                    "{g:?} is not a permutation of {n} points"
                )));
            }
        }
        let id: Vec<usize> = (0..n).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            for g in generators {
                let gh: Vec<usize> = h.iter().map(|&i| g[i]).collect();
                if seen.insert(gh.clone()) {
                    queue.push_back(gh);
                }
            }
        }
        Ok(OrbitData {
            points,
            index,
            elements: seen.into_iter().collect(),
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// `m`, the group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut done = vec![false; self.points.len()];
        let mut out = Vec::new();
        for i in 0..self.points.len() {
            if done[i] {
                continue;
            }
            let orbit: BTreeSet<usize> = self.elements.iter().map(|g| g[i]).collect();
            for &j in &orbit {
                done[j] = true;
            }
            out.push(orbit.into_iter().map(|j| self.points[j].clone()).collect());
        }
        out
    }

    fn act(&self, g: &[usize], d: &Divisor) -> Result<Divisor> {
        let mut out = Divisor::zero(d.level());
        for (p, m) in d.iter() {
            let i = self
                .index
                .get(p)
                .ok_or_else(|| Error::ActionNotWellDefined(format!("{p} is not among the acted-on points")))?;
            out.add_at(self.points[g[*i]].clone(), m);
        }
        Ok(out)
    }

    /// `sum over g of g . d`.
    pub fn trace(&self, d: &Divisor) -> Result<Divisor> {
        let mut acc = Divisor::zero(d.level());
        for g in &self.elements {
            acc = acc.add(&self.act(g, d)?)?;
        }
        Ok(acc)
    }

    pub fn fixes(&self, d: &Divisor) -> Result<bool> {
        for g in &self.elements {
            if &self.act(g, d)? != d {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// How an identity `D = 0` was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IdentityStatus {
    /// `D` is the zero divisor.
    Exact,
    /// `D = (f)`.
    Principal {
        witness: String,
    },
    /// A multiple of `D` is principal.
    Torsion {
        order: u32,
    },
    Fails,
    Unknown {
        bound: u32,
    },
}

impl IdentityStatus {
    pub fn holds(&self) -> bool {
        matches!(
            self,
            IdentityStatus::Exact | IdentityStatus::Principal { .. } | IdentityStatus::Torsion { .. }
        )
    }
}

fn class_vanishes(level: &Arc<CurveLevel>, d: &Divisor, bound: u32) -> Result<IdentityStatus> {
    if d.is_zero() {
        return Ok(IdentityStatus::Exact);
    }
    if let Some(w) = is_principal(level, d)?.witness() {
        return Ok(IdentityStatus::Principal { witness: w.to_string() });
    }
    Ok(match is_torsion(level, d, bound)? {
        TorsionVerdict::Torsion { order } => IdentityStatus::Torsion { order },
        TorsionVerdict::NonTorsion { .. } => IdentityStatus::Fails,
        TorsionVerdict::Unknown { bound } => IdentityStatus::Unknown { bound },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub group_order: usize,
    pub a1: String,
    pub a2: String,
    pub a3: String,
    pub trace_a1: String,
    pub trace_a2: String,
    pub trace_a3: String,
    /// `tr(a1) = m a1` exactly.
    pub trace_a1_is_multiple: bool,
    pub trace_a2_vanishes: IdentityStatus,
    pub trace_a3_vanishes: IdentityStatus,
    /// `m a1 = tr(a2) + tr(a3)` vanishes modulo torsion, so `a1` is torsion.
    pub concludes_torsion: bool,
    /// The group-law torsion test on `a1`, when available.
    pub independent: Option<TorsionVerdict>,
    /// `None` when either side is undecided.
    pub agrees: Option<bool>,
}

impl TraceReport {
    pub fn passed(&self) -> bool {
        self.concludes_torsion && self.agrees != Some(false)
    }
}

/// Runs the trace argument on `a1 = a2 + a3` with `a1` fixed by the group.
///
/// The trace of a class depends only on the class, so
/// `m a1 = tr(a1) = tr(a2) + tr(a3)`; whenever both traces on the right
/// vanish modulo torsion, `a1` is torsion. The vanishing is accepted exactly
/// or up to a principal or torsion divisor.
pub fn trace_check(
    level: &Arc<CurveLevel>,
    a1: &Divisor,
    a2: &Divisor,
    a3: &Divisor,
    orbits: &OrbitData,
    bound: u32,
) -> Result<TraceReport> {
    if &a2.add(a3)? != a1 {
        return Err(Error::Precondition(format!("{a1} is not {a2} + {a3}")));
    }
    if !orbits.fixes(a1)? {
        return Err(Error::Precondition(format!("{a1} is not fixed by the group")));
    }
    let m = orbits.order();
    let (t1, t2, t3) = (orbits.trace(a1)?, orbits.trace(a2)?, orbits.trace(a3)?);
    let trace_a1_is_multiple = t1 == a1.scale(m as i64);
    let s2 = class_vanishes(level, &t2, bound)?;
    let s3 = class_vanishes(level, &t3, bound)?;
    let concludes_torsion = trace_a1_is_multiple && s2.holds() && s3.holds();
    let independent = match is_torsion(level, a1, bound) {
        Ok(v) => Some(v),
        Err(Error::UnsupportedLevel { .. }) => None,
        Err(e) => return Err(e),
    };
    // without a conclusion there is nothing to contradict
    let agrees = independent
        .as_ref()
        .and_then(|v| v.decided())
        .filter(|_| concludes_torsion);
    Ok(TraceReport {
        group_order: m,
        a1: a1.to_string(),
        a2: a2.to_string(),
        a3: a3.to_string(),
        trace_a1: t1.to_string(),
        trace_a2: t2.to_string(),
        trace_a3: t3.to_string(),
        trace_a1_is_multiple,
        trace_a2_vanishes: s2,
        trace_a3_vanishes: s3,
        concludes_torsion,
        independent,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;

    #[test]
    fn rank_one_pipeline() {
        let e = e_level("x^2 = t^3 - 2");
        let (p, q) = (e.point_q(3, 5).unwrap(), e.point_q(3, -5).unwrap());
        let orbits = OrbitData::from_generators(vec![p.clone(), q.clone()], &[vec![1, 0]]).unwrap();
        assert_eq!(orbits.order(), 2);
        assert_eq!(orbits.orbits().len(), 1);
        let a1 = Divisor::from_entries("E", [(p.clone(), 1), (q.clone(), 1)]).unwrap();
        let a2 = Divisor::from_entries("E", [(p.clone(), 1), (q.clone(), -1)]).unwrap();
        let a3 = a1.sub(&a2).unwrap();
        let r = trace_check(&e, &a1, &a2, &a3, &orbits, 60).unwrap();
        assert!(r.trace_a1_is_multiple);
        assert_eq!(r.trace_a2_vanishes, IdentityStatus::Exact);
        assert!(matches!(r.trace_a3_vanishes, IdentityStatus::Principal { .. }));
        assert!(r.concludes_torsion);
        assert_eq!(r.agrees, Some(true));
        assert!(r.passed());
    }

    #[test]
    fn orbit_sums_of_differences_vanish() {
        let e = e_level("x^2 = t^3 - t");
        let pts: Vec<_> = [(0, 0), (1, 0), (-1, 0)]
            .iter()
            .map(|&(t, x)| e.point_q(t, x).unwrap())
            .collect();
        let g = OrbitData::from_generators(pts.clone(), &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 3);
        let diff = Divisor::from_entries("E", [(pts[0].clone(), 1), (pts[2].clone(), -1)]).unwrap();
        assert!(g.trace(&diff).unwrap().is_zero());
        assert!(OrbitData::from_generators(pts, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn rejects_bad_decomposition() {
        let e = e_level("x^2 = t^3 - 2");
        let p = e.point_q(3, 5).unwrap();
        let orbits = OrbitData::from_generators(vec![p.clone()], &[]).unwrap();
        let a1 = Divisor::point(&p, 1);
        assert!(trace_check(&e, &a1, &a1, &a1, &orbits, 60).is_err());
    }
}
