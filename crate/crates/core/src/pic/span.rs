use num_bigint::BigInt;
use serde::Serialize;

use super::classes::HClass;
use super::group_law::{EllipticCurve, GroupPoint};
use super::torsion::point_torsion;
use crate::error::{Error, Result};
use crate::exact::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanVerdict {
    /// `a = sum c_i g_i` modulo torsion.
    Member {
        coefficients: Vec<Rational>,
    },
    NotMemberWithinBound {
        bound: u32,
    },
}

impl SpanVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, SpanVerdict::Member { .. })
    }
}

#[derive(Serialize)]
struct SpanVerdictJson {
    member: bool,
    coefficients: Vec<String>,
    bound: Option<u32>,
}

impl Serialize for SpanVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let j = match self {
            SpanVerdict::Member { coefficients } => SpanVerdictJson {
                member: true,
                coefficients: coefficients.iter().map(|c| c.to_string()).collect(),
                bound: None,
            },
            SpanVerdict::NotMemberWithinBound { bound } => SpanVerdictJson {
                member: false,
                coefficients: Vec::new(),
                bound: Some(*bound),
            },
        };
        j.serialize(s)
    }
}

/// Integer tuples `(n_0 >= 1, n_1, ..., n_k)` with `max |n_i| = h`.
fn tuples_of_height(h: i64, k: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for pos in 0..=k {
        let range: Vec<i64> = if pos == 0 {
            (1..=h).collect()
        } else {
            (-h..=h).collect()
        };
        out = out
            .into_iter()
            .flat_map(|v| {
                range.iter().map(move |&n| {
                    let mut w = v.clone();
                    w.push(n);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|n| n.abs() == h));
    out
}

/// Bounded search for a relation `N a = sum n_i g_i` modulo torsion with
/// `1 <= N <= bound` and `|n_i| <= bound`, smallest height first. Sound when
/// it answers member; `NotMemberWithinBound` only says the search failed.
pub fn span_membership(a: &HClass, gens: &[HClass], bound: u32, torsion_bound: u32) -> Result<SpanVerdict> {
    let level = a.level();
    if let Some(g) = gens.iter().find(|g| g.level().id() != level.id()) {
        return Err(Error::LevelMismatch {
            expected: level.id().into(),
            found: g.level().id().into(),
        });
    }
    let zero = || SpanVerdict::Member {
        coefficients: vec![Rational::from_integer(0.into()); gens.len()],
    };
    if level.is_base() {
        return Ok(zero());
    }
    let ec = EllipticCurve::from_level(level)?;
    let torsion = |p: &GroupPoint| point_torsion(&ec, p, torsion_bound).is_torsion();
    let sa = ec.sigma(a.representative())?;
    if torsion(&sa) {
        return Ok(zero());
    }
    let sg: Vec<GroupPoint> = gens
        .iter()
        .map(|g| ec.sigma(g.representative()))
        .collect::<Result<_>>()?;
    let b = bound as i64;
    // multiples [n] P for n in -b..=b, index n + b
    let multiples = |p: &GroupPoint| -> Vec<GroupPoint> {
        let mut pos = vec![GroupPoint::Infinity];
        for _ in 0..b {
            pos.push(ec.add(pos.last().unwrap(), p));
        }
        let mut all: Vec<GroupPoint> = pos[1..].iter().rev().map(|q| ec.neg(q)).collect();
        all.extend(pos);
        all
    };
    let ma = multiples(&sa);
    let mg: Vec<Vec<GroupPoint>> = sg.iter().map(multiples).collect();
    for h in 1..=b {
        for tuple in tuples_of_height(h, gens.len()) {
            let mut acc = ma[(tuple[0] + b) as usize].clone();
            for (i, n) in tuple[1..].iter().enumerate() {
                acc = ec.sub(&acc, &mg[i][(n + b) as usize]);
            }
            if torsion(&acc) {
                let big_n = BigInt::from(tuple[0]) * BigInt::from(a.denominator());
                let coefficients = tuple[1..]
                    .iter()
                    .zip(gens)
                    .map(|(n, g)| Rational::new(BigInt::from(*n) * BigInt::from(g.denominator()), big_n.clone()))
                    .collect();
                return Ok(SpanVerdict::Member { coefficients });
            }
        }
    }
    Ok(SpanVerdict::NotMemberWithinBound { bound })
}

/// Certifies within `bound` that no class is torsion and none lies in the
/// span of the others.
pub fn certify_independent(classes: &[HClass], bound: u32, torsion_bound: u32) -> Result<()> {
    for (i, c) in classes.iter().enumerate() {
        let others: Vec<HClass> = classes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.clone())
            .collect();
        if span_membership(c, &others, bound, torsion_bound)?.is_member() {
            return Err(Error::IndependenceNotCertified { bound });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::divisor::Divisor;
    use crate::exact::rational::int;

    #[test]
    fn memberships() {
        let e = e_level("x^2 = t^3 - 2");
        let p = Divisor::point(&e.point_q(3, 5).unwrap(), 1);
        let a = HClass::from_divisor(&e, p.clone()).unwrap();
        let two = HClass::from_divisor(&e, p.scale(2)).unwrap();
        assert_eq!(
            span_membership(&two, std::slice::from_ref(&a), 8, 60).unwrap(),
            SpanVerdict::Member {
                coefficients: vec![int(2)]
            }
        );
        assert_eq!(
            span_membership(&a, std::slice::from_ref(&a), 8, 60).unwrap(),
            SpanVerdict::Member {
                coefficients: vec![int(1)]
            }
        );
        let e1 = e_level("x^2 = t^3 - t");
        let o = HClass::from_divisor(&e1, Divisor::point(&e1.point_q(0, 0).unwrap(), 1)).unwrap();
        assert!(span_membership(&o, &[], 8, 60).unwrap().is_member());
        assert_eq!(
            span_membership(&a, &[], 4, 60).unwrap(),
            SpanVerdict::NotMemberWithinBound { bound: 4 }
        );
    }

    #[test]
    fn rank_two_basis_is_independent() {
        let e = e_level("x^2 = t^3 + 5*t^2 - 12*t");
        let c = |t, x| HClass::from_divisor(&e, Divisor::point(&e.point_q(t, x).unwrap(), 1)).unwrap();
        certify_independent(&[c(-6, 6), c(-4, 8)], 3, 60).unwrap();
        // (-6, 6) + (-4, 8) lies on the line through them; its class is in the span
        let s = c(-6, 6).add(&c(-4, 8)).unwrap();
        let v = span_membership(&s, &[c(-6, 6), c(-4, 8)], 3, 60).unwrap();
        assert_eq!(
            v,
            SpanVerdict::Member {
                coefficients: vec![int(1), int(1)]
            }
        );
    }
}
