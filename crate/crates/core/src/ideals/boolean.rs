use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::FgIdeal;
use crate::curve::{CurveLevel, Point};
use crate::divisor::{Divisor, SupportSet};
use crate::error::{Error, Result};

/// A radical ideal of the coordinate ring, stored as its finite zero set.
#[derive(Clone, PartialEq, Eq)]
pub struct RadicalIdeal {
    level: Arc<CurveLevel>,
    support: SupportSet,
}

impl RadicalIdeal {
    pub fn new(level: &Arc<CurveLevel>, support: SupportSet) -> Result<Self> {
        if support.level() != level.id() {
            return Err(Error::LevelMismatch {
                expected: level.id().into(),
                found: support.level().into(),
            });
        }
        Ok(RadicalIdeal {
            level: level.clone(),
            support,
        })
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    /// A finitely generated ideal with this radical: the reduced divisor
    /// `sum p` in two-generator form.
    pub fn ideal(&self) -> Result<FgIdeal> {
        FgIdeal::from_divisor(&self.level, &self.support.to_divisor())
    }

    pub fn meet(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.level, self.support.intersection(&rhs.support)?)
    }

    pub fn join(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.level, self.support.union(&rhs.support)?)
    }

    pub fn difference(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.level, self.support.difference(&rhs.support)?)
    }
}

impl fmt::Display for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.support)
    }
}

impl fmt::Debug for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoolOp {
    Meet,
    Join,
    Difference,
}

impl fmt::Display for BoolOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoolOp::Meet => "meet",
            BoolOp::Join => "join",
            BoolOp::Difference => "difference",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DictionaryCheck {
    pub op: BoolOp,
    pub left: String,
    pub right: String,
    pub set_route: String,
    pub ideal_route: String,
    pub agree: bool,
}

/// Computes `b op c` directly on point sets and again through ideals, and
/// compares:
/// - meet is the radical of `I_b + I_c`,
/// - join is the radical of `I_b I_c` (equal to that of `I_b` meet `I_c`),
/// - difference is the radical of the quotient `(I_b : I_c)`.
pub fn boolean_dictionary(op: BoolOp, b: &RadicalIdeal, c: &RadicalIdeal) -> Result<DictionaryCheck> {
    if b.level.id() != c.level.id() {
        return Err(Error::LevelMismatch {
            expected: b.level.id().into(),
            found: c.level.id().into(),
        });
    }
    let set = match op {
        BoolOp::Meet => b.meet(c)?,
        BoolOp::Join => b.join(c)?,
        BoolOp::Difference => b.difference(c)?,
    };
    let (ib, ic) = (b.ideal()?, c.ideal()?);
    let d: Divisor = match op {
        BoolOp::Meet => ib.sum_divisor(&ic)?,
        BoolOp::Join => ib.product_divisor(&ic)?,
        BoolOp::Difference => ib.quotient_divisor(&ic)?,
    };
    let ideal = RadicalIdeal::new(&b.level, d.support())?;
    Ok(DictionaryCheck {
        op,
        left: b.to_string(),
        right: c.to_string(),
        set_route: set.to_string(),
        ideal_route: ideal.to_string(),
        agree: set == ideal,
    })
}

/// Element of the Boolean algebra obtained from the finite point sets by
/// adjoining a top element: finite sets and their complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoolElem {
    Finite(SupportSet),
    /// The complement of the given finite set.
    Cofinite(SupportSet),
}

impl BoolElem {
    pub fn bottom(level: &str) -> Self {
        BoolElem::Finite(SupportSet::empty(level))
    }

    pub fn top(level: &str) -> Self {
        BoolElem::Cofinite(SupportSet::empty(level))
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            BoolElem::Finite(s) => s.contains(p),
            BoolElem::Cofinite(s) => !s.contains(p),
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            BoolElem::Finite(s) => BoolElem::Cofinite(s.clone()),
            BoolElem::Cofinite(s) => BoolElem::Finite(s.clone()),
        }
    }

    pub fn and(&self, rhs: &Self) -> Result<Self> {
        use BoolElem::*;
        Ok(match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b)?),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => Finite(a.difference(b)?),
            (Cofinite(a), Cofinite(b)) => Cofinite(a.union(b)?),
        })
    }

    pub fn or(&self, rhs: &Self) -> Result<Self> {
        Ok(self.complement().and(&rhs.complement())?.complement())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::exact::NumberField;

    #[test]
    fn dictionary_examples() {
        let l = CurveLevel::base("L", &NumberField::rationals());
        let set = |ts: &[i64]| {
            RadicalIdeal::new(
                &l,
                SupportSet::from_points("L", ts.iter().map(|&t| l.base_point(l.num(t)).unwrap())).unwrap(),
            )
            .unwrap()
        };
        let r = boolean_dictionary(BoolOp::Meet, &set(&[0]), &set(&[0, 1])).unwrap();
        assert!(r.agree);
        assert_eq!(r.set_route, "L: {t=0}");
        let r = boolean_dictionary(BoolOp::Difference, &set(&[0, 2]), &set(&[0, 2])).unwrap();
        assert!(r.agree);
        assert_eq!(r.set_route, "L: {}");

        let e = e_level("x^2 = t^3 - t");
        let one =
            |t, x| RadicalIdeal::new(&e, SupportSet::from_points("E", [e.point_q(t, x).unwrap()]).unwrap()).unwrap();
        let r = boolean_dictionary(BoolOp::Join, &one(0, 0), &one(1, 0)).unwrap();
        assert!(r.agree);
        assert_eq!(r.set_route, "E: {(0, 0), (1, 0)}");
    }

    #[test]
    fn boolean_axioms() {
        let e = e_level("x^2 = t^3 - t");
        let pts: Vec<_> = [(0, 0), (1, 0), (-1, 0)]
            .iter()
            .map(|&(t, x)| e.point_q(t, x).unwrap())
            .collect();
        let mut elems = Vec::new();
        for mask in 0..8u32 {
            let s =
                SupportSet::from_points("E", (0..3).filter(|i| mask >> i & 1 == 1).map(|i| pts[i].clone())).unwrap();
            elems.push(BoolElem::Finite(s.clone()));
            elems.push(BoolElem::Cofinite(s));
        }
        let (top, bot) = (BoolElem::top("E"), BoolElem::bottom("E"));
        for a in &elems {
            assert_eq!(a.and(&top).unwrap(), *a);
            assert_eq!(a.or(&bot).unwrap(), *a);
            assert_eq!(a.and(&a.complement()).unwrap(), bot);
            assert_eq!(a.or(&a.complement()).unwrap(), top);
            for b in &elems {
                assert_eq!(a.and(b).unwrap(), b.and(a).unwrap());
                assert_eq!(a.and(&a.or(b).unwrap()).unwrap(), *a);
                assert_eq!(
                    a.and(b).unwrap().complement(),
                    a.complement().or(&b.complement()).unwrap()
                );
                for c in &elems {
                    let lhs = a.and(&b.or(c).unwrap()).unwrap();
                    let rhs = a.and(b).unwrap().or(&a.and(c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(top.contains(&pts[0]) && !bot.contains(&pts[0]));
    }
}
