use serde::Serialize;

use super::{colinear, intersect, Line, QVector};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::pic::{certify_independent, HClass};

/// Origin `O`, unit `E = a1` on the axis carrying the field, and an
/// auxiliary point `A = a2` off that axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub o: QVector,
    pub e: QVector,
    pub a: QVector,
}

impl Frame {
    /// The frame of the plane `Q a1 + Q a2` in its own coordinates.
    pub fn standard() -> Self {
        Frame {
            o: QVector::from_ints(&[0, 0]),
            e: QVector::from_ints(&[1, 0]),
            a: QVector::from_ints(&[0, 1]),
        }
    }

    fn axis(&self) -> Line {
        Line::through(&self.o, &self.e).expect("E is not O")
    }

    fn second_axis(&self) -> Line {
        Line::through(&self.o, &self.a).expect("A is not O")
    }
}

/// A formal ratio `u / v` with `v != 0` and `u` on the line `O v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    u: QVector,
    v: QVector,
}

impl FieldElement {
    pub fn new(u: QVector, v: QVector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::Degenerate("a ratio needs a nonzero denominator".into()));
        }
        if !colinear(&QVector::zero(v.dim()), &v, &u)? {
            return Err(Error::Degenerate(format!("{u} is not on the line through 0 and {v}")));
        }
        Ok(FieldElement { u, v })
    }

    pub fn numerator(&self) -> &QVector {
        &self.u
    }

    pub fn denominator(&self) -> &QVector {
        &self.v
    }

    /// The rational `r` with `u = r v`, read from coordinates. Used only to
    /// check the constructions.
    pub fn value(&self) -> Rational {
        self.u.ratio_to(&self.v).unwrap().expect("u is on the line O v")
    }
}

/// The field `Q` rebuilt on the axis `O E` using only lines through given
/// points, parallels and intersections.
#[derive(Clone, Debug)]
pub struct ReconstructedField {
    frame: Frame,
}

impl ReconstructedField {
    pub fn new(frame: Frame) -> Result<Self> {
        if colinear(&frame.o, &frame.e, &frame.a)? {
            return Err(Error::Degenerate("the frame points are colinear".into()));
        }
        Ok(ReconstructedField { frame })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `r -> (r E) / E`.
    pub fn embed(&self, r: &Rational) -> FieldElement {
        let f = &self.frame;
        let u = f.o.add(&f.e.sub(&f.o).unwrap().scale(r)).unwrap();
        FieldElement {
            u,
            v: f.e.sub(&f.o).unwrap(),
        }
    }

    /// `u / v = u' / w` where `u'` is where the parallel to `v w` through
    /// `u` meets the line `O w` (Thales).
    fn transfer(&self, x: &FieldElement, w: &QVector) -> Result<FieldElement> {
        let o = &self.frame.o;
        let (u, v) = (o.add(&x.u)?, o.add(&x.v)?);
        let w_abs = o.add(w)?;
        let target = Line::through(o, &w_abs)?;
        let u2 = if v == w_abs {
            u
        } else {
            intersect(&Line::through(&v, &w_abs)?.parallel_through(&u)?, &target)?
        };
        FieldElement::new(u2.sub(o)?, w.clone())
    }

    /// The point of the axis representing `x`.
    fn on_axis(&self, x: &FieldElement) -> Result<QVector> {
        let f = &self.frame;
        let o = &f.o;
        let v_abs = o.add(&x.v)?;
        let unit = f.e.sub(o)?;
        let y = if colinear(o, &f.e, &v_abs)? && x.v != unit {
            // denominators on the axis go through the second axis first
            self.transfer(x, &f.a.sub(o)?)?
        } else {
            x.clone()
        };
        o.add(&self.transfer(&y, &unit)?.u)
    }

    fn from_axis(&self, p: &QVector) -> Result<FieldElement> {
        let o = &self.frame.o;
        FieldElement::new(p.sub(o)?, self.frame.e.sub(o)?)
    }

    /// Parallelogram construction: `C = X + (A - O)` as the meet of the
    /// parallel to `O A` through `X` and the parallel to the axis through
    /// `A`; then the parallel to `A Y` through `C` meets the axis in `X + Y`.
    pub fn field_add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let f = &self.frame;
        let (x, y) = (self.on_axis(a)?, self.on_axis(b)?);
        let c = intersect(
            &f.second_axis().parallel_through(&x)?,
            &f.axis().parallel_through(&f.a)?,
        )?;
        let s = intersect(&Line::through(&f.a, &y)?.parallel_through(&c)?, &f.axis())?;
        self.from_axis(&s)
    }

    /// Similar triangles: `Y` is carried to `Y'` on `O A` by the parallel to
    /// `E A`; then the parallel to `A X` through `Y'` meets the axis in `X Y`.
    pub fn field_mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let f = &self.frame;
        let (x, y) = (self.on_axis(a)?, self.on_axis(b)?);
        let y2 = intersect(&Line::through(&f.e, &f.a)?.parallel_through(&y)?, &f.second_axis())?;
        let p = if x == f.o {
            f.o.clone()
        } else {
            intersect(&Line::through(&f.a, &x)?.parallel_through(&y2)?, &f.axis())?
        };
        self.from_axis(&p)
    }

    /// The additive inverse: with `C = X + (A - O)`, the parallel to `O C`
    /// through `A` meets the axis in `-X`.
    pub fn field_neg(&self, a: &FieldElement) -> Result<FieldElement> {
        let f = &self.frame;
        let x = self.on_axis(a)?;
        if x == f.o {
            return self.from_axis(&x);
        }
        let c = intersect(
            &f.second_axis().parallel_through(&x)?,
            &f.axis().parallel_through(&f.a)?,
        )?;
        let m = intersect(&Line::through(&f.o, &c)?.parallel_through(&f.a)?, &f.axis())?;
        self.from_axis(&m)
    }

    /// `u / v = u' / v'`: by the parallel rule when `v` and `v'` are
    /// independent, through the axis otherwise.
    pub fn equivalent(&self, a: &FieldElement, b: &FieldElement) -> Result<bool> {
        let o = QVector::zero(a.v.dim());
        if !colinear(&o, &a.v, &b.v)? {
            if a.u == b.u {
                return Ok(a.u.is_zero());
            }
            let l = Line::through(&a.u, &b.u)?;
            let m = Line::through(&a.v, &b.v)?;
            return super::parallel(&l, &m);
        }
        Ok(self.on_axis(a)? == self.on_axis(b)?)
    }

    /// Checks the constructions on the grid `{-k..k}^2` for addition and
    /// multiplication against rational arithmetic.
    pub fn verify_grid(&self, k: i64) -> Result<GridReport> {
        let mut report = GridReport::default();
        for x in -k..=k {
            for y in -k..=k {
                let (rx, ry) = (rational::int(x), rational::int(y));
                let (fx, fy) = (self.embed(&rx), self.embed(&ry));
                let sum = self.field_add(&fx, &fy)?;
                let ok = self.equivalent(&sum, &self.embed(&(&rx + &ry)))? && sum.value() == &rx + &ry;
                report.record(ok, || format!("{x} + {y}"));
                let prod = self.field_mul(&fx, &fy)?;
                let ok = self.equivalent(&prod, &self.embed(&(&rx * &ry)))? && prod.value() == &rx * &ry;
                report.record(ok, || format!("{x} * {y}"));
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl GridReport {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checked == self.passed
    }
}

/// The field on the plane spanned by two classes certified independent
/// within `bound`.
pub fn reconstruct_field(basis: (&HClass, &HClass), bound: u32, torsion_bound: u32) -> Result<ReconstructedField> {
    certify_independent(&[basis.0.clone(), basis.1.clone()], bound, torsion_bound)?;
    ReconstructedField::new(Frame::standard())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn field() -> ReconstructedField {
        ReconstructedField::new(Frame::standard()).unwrap()
    }

    #[test]
    fn small_examples() {
        let k = field();
        let (two, three) = (k.embed(&rational::int(2)), k.embed(&rational::int(3)));
        assert_eq!(k.field_mul(&two, &three).unwrap().value(), rational::int(6));
        let a = k.embed(&frac(-5, 7));
        let one = k.embed(&rational::int(1));
        assert!(k.equivalent(&k.field_mul(&a, &one).unwrap(), &a).unwrap());
        let s = k.field_add(&k.embed(&frac(1, 2)), &k.embed(&frac(1, 3))).unwrap();
        assert_eq!(s.value(), frac(5, 6));
        let z = k.field_add(&a, &k.field_neg(&a).unwrap()).unwrap();
        assert!(k.equivalent(&z, &k.embed(&rational::zero())).unwrap());
    }

    #[test]
    fn grid() {
        let r = field().verify_grid(3).unwrap();
        assert_eq!(r.checked, 98);
        assert!(r.all_passed(), "{:?}", r.failures);
    }

    #[test]
    fn formal_ratios() {
        let k = field();
        // 3/4 written as (3, 6)/(4, 8) and as (-3/2, 0)/(-2, 0)
        let a = FieldElement::new(QVector::from_ints(&[3, 6]), QVector::from_ints(&[4, 8])).unwrap();
        let b = FieldElement::new(
            QVector::new(vec![frac(-3, 2), rational::zero()]),
            QVector::from_ints(&[-2, 0]),
        )
        .unwrap();
        assert!(k.equivalent(&a, &b).unwrap());
        assert!(k.equivalent(&a, &k.embed(&frac(3, 4))).unwrap());
        let p = k.field_mul(&a, &b).unwrap();
        assert_eq!(p.value(), frac(9, 16));
        assert!(FieldElement::new(QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])).is_err());
    }
}
