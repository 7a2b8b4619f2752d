use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::group_law::{is_principal, EllipticCurve, Principality};
use super::torsion::{point_torsion, TorsionVerdict};
use crate::curve::CurveLevel;
use crate::divisor::Divisor;
use crate::error::{Error, Result};

fn same_level(level: &CurveLevel, d: &Divisor) -> Result<()> {
    if d.level() != level.id() {
        return Err(Error::LevelMismatch {
            expected: level.id().into(),
            found: d.level().into(),
        });
    }
    Ok(())
}

/// Torsion test for the class of `d`. `Pic` of the base line is trivial; on
/// a Weierstrass level the class is torsion iff its group-law sum is.
pub fn is_torsion(level: &Arc<CurveLevel>, d: &Divisor, bound: u32) -> Result<TorsionVerdict> {
    same_level(level, d)?;
    if level.is_base() {
        return Ok(TorsionVerdict::Torsion { order: 1 });
    }
    let ec = EllipticCurve::from_level(level)?;
    Ok(point_torsion(&ec, &ec.sigma(d)?, bound))
}

/// A divisor class, represented by any divisor in it.
#[derive(Clone, Debug)]
pub struct PicClass {
    level: Arc<CurveLevel>,
    rep: Divisor,
}

impl PicClass {
    pub fn new(level: &Arc<CurveLevel>, rep: Divisor) -> Result<Self> {
        same_level(level, &rep)?;
        Ok(PicClass {
            level: level.clone(),
            rep,
        })
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    pub fn representative(&self) -> &Divisor {
        &self.rep
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.level, self.rep.add(&rhs.rep)?)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Self::new(&self.level, self.rep.sub(&rhs.rep)?)
    }

    pub fn scale(&self, n: i64) -> Self {
        PicClass {
            level: self.level.clone(),
            rep: self.rep.scale(n),
        }
    }

    pub fn is_trivial(&self) -> Result<Principality> {
        is_principal(&self.level, &self.rep)
    }

    /// `d ~ e` iff `d - e` is principal.
    pub fn equivalent(&self, rhs: &Self) -> Result<bool> {
        Ok(self.sub(rhs)?.is_trivial()?.is_principal())
    }

    pub fn is_torsion(&self, bound: u32) -> Result<TorsionVerdict> {
        is_torsion(&self.level, &self.rep, bound)
    }
}

/// An element `rep / den` of `Q (x) Pic`, so equal when a multiple of the
/// difference is torsion.
#[derive(Clone, PartialEq, Eq)]
pub struct HClass {
    level: Arc<CurveLevel>,
    rep: Divisor,
    den: u64,
}

impl HClass {
    /// `rep / den`, reduced by the common factor of `den` and the entries.
    pub fn new(level: &Arc<CurveLevel>, rep: Divisor, den: u64) -> Result<Self> {
        same_level(level, &rep)?;
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = rep.iter().fold(den, |g, (_, m)| g.gcd(&m.unsigned_abs()));
        let rep = if g > 1 {
            Divisor::from_entries(rep.level(), rep.iter().map(|(p, m)| (p.clone(), m / g as i64)))?
        } else {
            rep
        };
        Ok(HClass {
            level: level.clone(),
            rep,
            den: den / g,
        })
    }

    pub fn from_divisor(level: &Arc<CurveLevel>, rep: Divisor) -> Result<Self> {
        Self::new(level, rep, 1)
    }

    pub fn zero(level: &Arc<CurveLevel>) -> Self {
        HClass {
            level: level.clone(),
            rep: Divisor::zero(level.id()),
            den: 1,
        }
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    pub fn representative(&self) -> &Divisor {
        &self.rep
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let l = self.den.lcm(&rhs.den);
        let a = self.rep.scale((l / self.den) as i64);
        let b = rhs.rep.scale((l / rhs.den) as i64);
        Self::new(&self.level, a.add(&b)?, l)
    }

    pub fn neg(&self) -> Self {
        HClass {
            level: self.level.clone(),
            rep: self.rep.neg(),
            den: self.den,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// `(num / den) * self`.
    pub fn scale(&self, num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.level, self.rep.scale(num), self.den * den)
    }

    /// `self / n`: the class `(rep, n den)`, which is divisible by
    /// construction.
    pub fn divide(&self, n: u64) -> Result<Self> {
        self.scale(1, n)
    }

    /// Whether `self` is zero modulo torsion.
    pub fn is_zero(&self, bound: u32) -> Result<TorsionVerdict> {
        is_torsion(&self.level, &self.rep, bound)
    }

    /// `(d, m) = (e, n)` iff `n d - m e` is torsion.
    pub fn equivalent(&self, rhs: &Self, bound: u32) -> Result<TorsionVerdict> {
        let diff = self.rep.scale(rhs.den as i64).sub(&rhs.rep.scale(self.den as i64))?;
        is_torsion(&self.level, &diff, bound)
    }
}

impl fmt::Display for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.rep)
        } else {
            write!(f, "(1/{})*{}", self.den, self.rep)
        }
    }
}

impl fmt::Debug for HClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;

    #[test]
    fn torsion_of_classes() {
        let e = e_level("x^2 = t^3 - t");
        let o = Divisor::point(&e.point_q(0, 0).unwrap(), 1);
        assert_eq!(is_torsion(&e, &o, 60).unwrap(), TorsionVerdict::Torsion { order: 2 });
        assert_eq!(
            is_torsion(&e, &Divisor::zero("E"), 60).unwrap(),
            TorsionVerdict::Torsion { order: 1 }
        );
        let e2 = e_level("x^2 = t^3 - 2");
        let p = Divisor::point(&e2.point_q(3, 5).unwrap(), 1);
        assert!(matches!(
            is_torsion(&e2, &p, 60).unwrap(),
            TorsionVerdict::NonTorsion { .. }
        ));
    }

    #[test]
    fn h_classes_divide_and_reduce() {
        let e = e_level("x^2 = t^3 - 2");
        let p = Divisor::point(&e.point_q(3, 5).unwrap(), 1);
        let a = HClass::from_divisor(&e, p.clone()).unwrap();
        let half = a.divide(2).unwrap();
        assert_eq!(half.denominator(), 2);
        let back = half.scale(2, 1).unwrap();
        assert_eq!(back, a);
        let two_p = HClass::new(&e, p.scale(2), 2).unwrap();
        assert_eq!(two_p, a);
        assert!(half.add(&half).unwrap().equivalent(&a, 60).unwrap().is_torsion());
        assert!(!a.is_zero(60).unwrap().is_torsion());
        let pic = PicClass::new(&e, p.clone()).unwrap();
        let conj = PicClass::new(&e, Divisor::point(&e.point_q(3, -5).unwrap(), -1)).unwrap();
        assert!(pic.equivalent(&conj).unwrap());
    }
}
