use std::fmt;
use std::sync::Arc;

use crate::curve::{CurveLevel, FunctionElement, Point, K};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::exact::{Scalar, UniPoly};

/// A point of the projective Weierstrass curve: an affine point or the point
/// at infinity, which is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupPoint {
    Infinity,
    Affine(Point),
}

impl GroupPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, GroupPoint::Infinity)
    }

    pub fn affine(&self) -> Option<&Point> {
        match self {
            GroupPoint::Infinity => None,
            GroupPoint::Affine(p) => Some(p),
        }
    }
}

impl fmt::Display for GroupPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupPoint::Infinity => write!(f, "infinity"),
            GroupPoint::Affine(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for GroupPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x^2 = t^3 + a2 t^2 + a4 t + a6` with its chord-tangent law. The roles of
/// the usual `(x, y)` are played by `(t, x)`.
#[derive(Clone, Debug)]
pub struct EllipticCurve {
    level: Arc<CurveLevel>,
    a2: K,
    a4: K,
    a6: K,
}

impl EllipticCurve {
    pub fn from_level(level: &Arc<CurveLevel>) -> Result<Self> {
        if !level.is_weierstrass() {
            return Err(Error::unsupported(
                level.id(),
                "the group law needs genus 1 in the form x^2 = t^3 + a2 t^2 + a4 t + a6",
            ));
        }
        let q = level.q().unwrap();
        let zero = level.num(0);
        Ok(EllipticCurve {
            level: level.clone(),
            a2: q.coeff_or(2, &zero),
            a4: q.coeff_or(1, &zero),
            a6: q.coeff_or(0, &zero),
        })
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    /// `(a2, a4, a6)`.
    pub fn coefficients(&self) -> (&K, &K, &K) {
        (&self.a2, &self.a4, &self.a6)
    }

    fn check(&self, p: &GroupPoint) -> Result<()> {
        match p {
            GroupPoint::Affine(q) if q.level() != self.level.id() => Err(Error::LevelMismatch {
                expected: self.level.id().into(),
                found: q.level().into(),
            }),
            _ => Ok(()),
        }
    }

    fn make(&self, t: K, x: K) -> GroupPoint {
        GroupPoint::Affine(Point::unchecked(self.level.id(), t, Some(x)))
    }

    pub fn neg(&self, p: &GroupPoint) -> GroupPoint {
        match p {
            GroupPoint::Infinity => GroupPoint::Infinity,
            GroupPoint::Affine(q) => self.make(q.t().clone(), q.x().unwrap().neg_ref()),
        }
    }

    /// Slope of the chord or tangent through `p` and `q`, or `None` when
    /// the line is vertical (`p = -q`).
    fn slope(&self, p: &Point, q: &Point) -> Option<K> {
        let (t1, x1) = (p.t(), p.x().unwrap());
        let (t2, x2) = (q.t(), q.x().unwrap());
        if t1 != t2 {
            return x2.sub_ref(x1).div_ref(&t2.sub_ref(t1));
        }
        if x1 != x2 || x1.is_zero() {
            return None;
        }
        let three = t1.from_i64_like(3);
        let two = t1.from_i64_like(2);
        let num = three
            .mul_ref(t1)
            .mul_ref(t1)
            .add_ref(&two.mul_ref(&self.a2).mul_ref(t1))
            .add_ref(&self.a4);
        num.div_ref(&two.mul_ref(x1))
    }

    pub fn add(&self, p: &GroupPoint, q: &GroupPoint) -> GroupPoint {
        let (pa, qa) = match (p, q) {
            (GroupPoint::Infinity, _) => return q.clone(),
            (_, GroupPoint::Infinity) => return p.clone(),
            (GroupPoint::Affine(a), GroupPoint::Affine(b)) => (a, b),
        };
        let Some(l) = self.slope(pa, qa) else {
            return GroupPoint::Infinity;
        };
        let t3 = l.mul_ref(&l).sub_ref(&self.a2).sub_ref(pa.t()).sub_ref(qa.t());
        let x3 = pa.x().unwrap().add_ref(&l.mul_ref(&t3.sub_ref(pa.t()))).neg_ref();
        self.make(t3, x3)
    }

    pub fn sub(&self, p: &GroupPoint, q: &GroupPoint) -> GroupPoint {
        self.add(p, &self.neg(q))
    }

    /// `[n] p` by double and add.
    pub fn mul(&self, p: &GroupPoint, n: i64) -> GroupPoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = GroupPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    pub fn point(&self, p: &Point) -> Result<GroupPoint> {
        let g = GroupPoint::Affine(p.clone());
        self.check(&g)?;
        Ok(g)
    }

    /// The group-law sum of `d`: `sum of n_P P`.
    pub fn sigma(&self, d: &Divisor) -> Result<GroupPoint> {
        if d.level() != self.level.id() {
            return Err(Error::LevelMismatch {
                expected: self.level.id().into(),
                found: d.level().into(),
            });
        }
        let mut acc = GroupPoint::Infinity;
        for (p, n) in d.iter() {
            acc = self.add(&acc, &self.mul(&GroupPoint::Affine(p.clone()), n));
        }
        Ok(acc)
    }

    /// `t - t(p)`, with affine divisor `p + (-p)`.
    pub fn vertical(&self, p: &Point) -> FunctionElement {
        FunctionElement::t_minus(&self.level, p.t())
    }

    /// The chord or tangent `x - x(p) - l (t - t(p))` through `p` and `q`
    /// (`p != -q`), with affine divisor `p + q + (-(p + q))`.
    pub fn line(&self, p: &Point, q: &Point) -> Result<FunctionElement> {
        let l = self
            .slope(p, q)
            .ok_or_else(|| Error::Degenerate(format!("the line through {p} and {q} is vertical")))?;
        let c = p.x().unwrap().sub_ref(&l.mul_ref(p.t()));
        FunctionElement::regular(
            &self.level,
            UniPoly::new(vec![c.neg_ref(), l.neg_ref()]),
            UniPoly::constant(self.level.one()),
        )
    }

    /// A function with affine divisor `[p] + [q] - [p + q]`, where `[O] = 0`.
    pub fn addition_function(&self, p: &GroupPoint, q: &GroupPoint) -> Result<FunctionElement> {
        let one = FunctionElement::constant(&self.level, self.level.one());
        let (pa, qa) = match (p, q) {
            (GroupPoint::Affine(a), GroupPoint::Affine(b)) => (a, b),
            _ => return Ok(one),
        };
        match self.add(p, q) {
            GroupPoint::Infinity => Ok(self.vertical(pa)),
            GroupPoint::Affine(r) => Ok(self
                .line(pa, qa)?
                .div_ref(&self.vertical(&r))
                .expect("verticals are nonzero")),
        }
    }

    /// Decides principality of an affine divisor: `d` is the divisor of a
    /// function on the affine curve iff its group-law sum is the identity.
    /// The witness is assembled Miller-style, one point at a time.
    pub fn principality(&self, d: &Divisor) -> Result<Principality> {
        let s = self.sigma(d)?;
        if !s.is_infinity() {
            return Ok(Principality::NotPrincipal { sum: s });
        }
        // invariant: (f) = processed part of d - [r]
        let mut f = FunctionElement::constant(&self.level, self.level.one());
        let mut r = GroupPoint::Infinity;
        for (p, n) in d.iter() {
            let gp = GroupPoint::Affine(p.clone());
            for _ in 0..n.unsigned_abs() {
                if n > 0 {
                    f = f.mul_ref(&self.addition_function(&r, &gp)?);
                    r = self.add(&r, &gp);
                } else {
                    let next = self.sub(&r, &gp);
                    let g = self.addition_function(&next, &gp)?;
                    f = f.div_ref(&g).expect("addition functions are nonzero");
                    r = next;
                }
            }
        }
        debug_assert!(r.is_infinity());
        Ok(Principality::Principal { witness: f })
    }
}

/// Answer of a principality test, with a witness `f` satisfying `(f) = d`
/// when the divisor is principal.
#[derive(Clone, Debug)]
pub enum Principality {
    Principal {
        witness: FunctionElement,
    },
    /// The group-law sum of the divisor, which is not the identity.
    NotPrincipal {
        sum: GroupPoint,
    },
}

impl Principality {
    pub fn is_principal(&self) -> bool {
        matches!(self, Principality::Principal { .. })
    }

    pub fn witness(&self) -> Option<&FunctionElement> {
        match self {
            Principality::Principal { witness } => Some(witness),
            Principality::NotPrincipal { .. } => None,
        }
    }
}

/// The group-law sum of a divisor on a Weierstrass level.
pub fn sigma(level: &Arc<CurveLevel>, d: &Divisor) -> Result<GroupPoint> {
    EllipticCurve::from_level(level)?.sigma(d)
}

/// Principality of an affine divisor on the base line (always, with witness
/// `prod (t - t_i)^{m_i}`) or on a Weierstrass level.
pub fn is_principal(level: &Arc<CurveLevel>, d: &Divisor) -> Result<Principality> {
    if d.level() != level.id() {
        return Err(Error::LevelMismatch {
            expected: level.id().into(),
            found: d.level().into(),
        });
    }
    if level.is_base() {
        let one = level.one();
        let mut num = UniPoly::constant(one.clone());
        let mut den = UniPoly::constant(one);
        for (p, m) in d.iter() {
            let lin = UniPoly::linear_root(p.t()).pow(m.unsigned_abs() as u32);
            if m > 0 {
                num = num.mul(&lin);
            } else {
                den = den.mul(&lin);
            }
        }
        let witness = FunctionElement::new(level, num, UniPoly::zero(), den)?;
        return Ok(Principality::Principal { witness });
    }
    EllipticCurve::from_level(level)?.principality(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::divisor::principal_divisor;
    use crate::exact::{rational::frac, NumberField};

    #[test]
    fn doubling_on_the_rank_one_curve() {
        let e = e_level("x^2 = t^3 - 2");
        let p = e.point_q(3, 5).unwrap();
        let s = sigma(&e, &Divisor::point(&p, 2)).unwrap();
        let q = e.field();
        let expect = e
            .point(
                K::from_rational(q, frac(129, 100)),
                Some(K::from_rational(q, frac(-383, 1000))),
            )
            .unwrap();
        assert_eq!(s, GroupPoint::Affine(expect));
    }

    #[test]
    fn two_torsion_points_sum_to_infinity() {
        let e = e_level("x^2 = t^3 - t");
        let d = Divisor::from_entries(
            "E",
            [(0, 0), (1, 0), (-1, 0)].map(|(t, x)| (e.point_q(t, x).unwrap(), 1)),
        )
        .unwrap();
        assert!(sigma(&e, &d).unwrap().is_infinity());
        let o = e.point_q(0, 0).unwrap();
        assert_eq!(
            sigma(&e, &Divisor::point(&o, 1)).unwrap(),
            GroupPoint::Affine(o.clone())
        );
        assert!(!is_principal(&e, &Divisor::point(&o, 1)).unwrap().is_principal());
        let w = is_principal(&e, &d).unwrap();
        assert_eq!(principal_divisor(w.witness().unwrap()).unwrap(), d);
    }

    #[test]
    fn base_line_witness() {
        let q = NumberField::rationals();
        let l = CurveLevel::base("L", &q);
        let d = Divisor::from_entries(
            "L",
            [
                (l.base_point(l.num(0)).unwrap(), 2),
                (l.base_point(l.num(1)).unwrap(), -1),
            ],
        )
        .unwrap();
        let w = is_principal(&l, &d).unwrap();
        assert_eq!(w.witness().unwrap(), &FunctionElement::parse(&l, "t^2/(t-1)").unwrap());
    }

    #[test]
    fn witness_for_principal_divisor_of_x() {
        let e = e_level("x^2 = t^3 - 2");
        let f = FunctionElement::parse(&e, "x - 5 - 27/10*(t - 3)").unwrap();
        let d = principal_divisor(&f).unwrap();
        let w = is_principal(&e, &d).unwrap();
        assert_eq!(principal_divisor(w.witness().unwrap()).unwrap(), d);
        let mixed = d.sub(&Divisor::point(&e.point_q(3, 5).unwrap(), 1)).unwrap();
        let mixed = mixed.add(&Divisor::point(&e.point_q(3, 5).unwrap(), 1)).unwrap();
        assert!(is_principal(&e, &mixed).unwrap().is_principal());
    }

    #[test]
    fn group_law_is_associative_on_samples() {
        let e = e_level("x^2 = t^3 + 5*t^2 - 12*t");
        let ec = EllipticCurve::from_level(&e).unwrap();
        let pts: Vec<_> = [(-6, 6), (-4, 8), (-2, 6), (2, 2)]
            .iter()
            .map(|&(t, x)| GroupPoint::Affine(e.point_q(t, x).unwrap()))
            .collect();
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    let l = ec.add(&ec.add(a, b), c);
                    let r = ec.add(a, &ec.add(b, c));
                    assert_eq!(l, r);
                }
            }
        }
        assert!(ec.add(&pts[0], &ec.neg(&pts[0])).is_infinity());
        assert_eq!(ec.mul(&pts[1], -2), ec.neg(&ec.add(&pts[1], &pts[1])));
    }
}
