//! Rational vector spaces spanned by classes, colinearity and lines, the
//! ruler-and-parallels reconstruction of the field `Q`, and the shrinking
//! approximation of the smallest definable subspace containing a class.

mod field;
mod phi;

pub use field::{reconstruct_field, FieldElement, Frame, GridReport, ReconstructedField};
pub use phi::{class_coordinates, phi_approx, PhiContext, PhiDescriptor};

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::rational::{self, Rational};
use crate::exact::Scalar;

/// Coordinates relative to a declared finite basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        QVector(vec![rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    fn same_basis(&self, rhs: &Self) -> Result<()> {
        if self.dim() != rhs.dim() {
            return Err(Error::Precondition(format!(
                "vectors over bases of sizes {} and {}",
                self.dim(),
                rhs.dim()
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_basis(rhs)?;
        Ok(QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_basis(rhs)?;
        Ok(QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QVector(self.0.iter().map(|a| a * c).collect())
    }

    /// `r` with `self = r v`, if any.
    pub fn ratio_to(&self, v: &Self) -> Result<Option<Rational>> {
        self.same_basis(v)?;
        let Some(i) = v.0.iter().position(|c| !c.is_zero()) else {
            return Ok(None);
        };
        let r = &self.0[i] / &v.0[i];
        Ok((v.scale(&r) == *self).then_some(r))
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `z - x` and `y - x` are linearly dependent.
pub fn colinear(x: &QVector, y: &QVector, z: &QVector) -> Result<bool> {
    let rows = vec![y.sub(x)?.0, z.sub(x)?.0];
    Ok(linalg::rank(&rows, x.dim()) <= 1)
}

/// The line through two distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    p: QVector,
    q: QVector,
}

impl Line {
    pub fn through(p: &QVector, q: &QVector) -> Result<Self> {
        if p.sub(q)?.is_zero() {
            return Err(Error::Degenerate(format!("no unique line through {p} twice")));
        }
        Ok(Line {
            p: p.clone(),
            q: q.clone(),
        })
    }

    pub fn direction(&self) -> QVector {
        self.q.sub(&self.p).expect("same basis")
    }

    /// The line through `p` parallel to `self`.
    pub fn parallel_through(&self, p: &QVector) -> Result<Self> {
        Line::through(p, &p.add(&self.direction())?)
    }

    pub fn contains(&self, x: &QVector) -> Result<bool> {
        colinear(&self.p, &self.q, x)
    }
}

/// Parallel means colinear directions.
pub fn parallel(l: &Line, m: &Line) -> Result<bool> {
    colinear(&QVector::zero(l.p.dim()), &l.direction(), &m.direction())
}

/// The common point of two non-parallel coplanar lines.
pub fn intersect(l: &Line, m: &Line) -> Result<QVector> {
    if parallel(l, m)? {
        return Err(Error::Degenerate("parallel lines do not meet".into()));
    }
    let (d1, d2) = (l.direction(), m.direction());
    let rhs = m.p.sub(&l.p)?;
    let rows: Vec<Vec<Rational>> = (0..d1.dim()).map(|i| vec![d1.0[i].clone(), -d2.0[i].clone()]).collect();
    let s = linalg::solve(&rows, &rhs.0, 2).ok_or_else(|| Error::Degenerate("skew lines do not meet".into()))?;
    l.p.add(&d1.scale(&s[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> QVector {
        QVector::from_ints(c)
    }

    #[test]
    fn colinearity() {
        assert!(colinear(&v(&[0, 0]), &v(&[1, 0]), &v(&[2, 0])).unwrap());
        assert!(!colinear(&v(&[0, 0]), &v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert!(colinear(&v(&[1, 1]), &v(&[2, 3]), &v(&[3, 5])).unwrap());
        assert!(colinear(&v(&[0, 0]), &v(&[1]), &v(&[0, 1])).is_err());
    }

    #[test]
    fn lines_meet() {
        let l = Line::through(&v(&[0, 0]), &v(&[2, 2])).unwrap();
        let m = Line::through(&v(&[0, 2]), &v(&[2, 0])).unwrap();
        assert_eq!(intersect(&l, &m).unwrap(), v(&[1, 1]));
        let p = l.parallel_through(&v(&[0, 1])).unwrap();
        assert!(parallel(&l, &p).unwrap());
        assert!(intersect(&l, &p).is_err());
        let skew_a = Line::through(&v(&[0, 0, 0]), &v(&[1, 0, 0])).unwrap();
        let skew_b = Line::through(&v(&[0, 1, 1]), &v(&[0, 2, 1])).unwrap();
        assert!(intersect(&skew_a, &skew_b).is_err());
    }
}
