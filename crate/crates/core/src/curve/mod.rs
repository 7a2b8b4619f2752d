//! Levels of the tower: the base `t`-line and double covers `x^2 = q(t)`,
//! their affine points, function elements and local expansions.

mod function;
mod local;

pub use function::FunctionElement;
pub use local::{local_expansion, solve_fiber, uniformizer, valuation, LocalExpansion};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{AlgebraicNumber, BiPoly, NumberField, Scalar, UniPoly};

pub type K = AlgebraicNumber;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LevelKind {
    /// `Spec k[t]`.
    BaseLine,
    /// The affine plane curve `x^2 = q(t)` with `q` squarefree.
    DoubleCover { q: UniPoly<K> },
}

/// One curve of the tower.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveLevel {
    id: String,
    field: Arc<NumberField>,
    kind: LevelKind,
    parent: Option<String>,
}

impl CurveLevel {
    pub fn base(id: impl Into<String>, field: &Arc<NumberField>) -> Arc<Self> {
        Arc::new(CurveLevel {
            id: id.into(),
            field: field.clone(),
            kind: LevelKind::BaseLine,
            parent: None,
        })
    }

    /// A plane level from its defining polynomial `F(x, t)`.
    ///
    /// `F` must have the shape `c x^2 - q(t)` with `c` a nonzero constant and
    /// `q` squarefree of degree 1 to 4 (genus 0 or 1).
    pub fn plane(
        id: impl Into<String>,
        field: &Arc<NumberField>,
        f: &BiPoly<K>,
        parent: Option<String>,
    ) -> Result<Arc<Self>> {
        let id = id.into();
        let bad = |reason: &str| Error::InvalidLevel {
            level: id.clone(),
            reason: reason.into(),
        };
        if f.deg_x() != 2 {
            return Err(bad("defining polynomial must be quadratic in x"));
        }
        if !f.x_coeff(1).is_zero() {
            return Err(bad(
                "defining polynomial must have no x-linear term (complete the square)",
            ));
        }
        let c = f.x_coeff(2);
        if !c.is_constant() {
            return Err(bad("coefficient of x^2 must be constant"));
        }
        let c = c.coeffs()[0].clone();
        if c.field() != field {
            return Err(Error::FieldMismatch);
        }
        let q = f.x_coeff(0).neg().scale(&c.inv().unwrap());
        Self::double_cover(id, field, q, parent)
    }

    /// The level `x^2 = q(t)`.
    pub fn double_cover(
        id: impl Into<String>,
        field: &Arc<NumberField>,
        q: UniPoly<K>,
        parent: Option<String>,
    ) -> Result<Arc<Self>> {
        let id = id.into();
        let bad = |reason: String| Error::InvalidLevel {
            level: id.clone(),
            reason,
        };
        let d = q.deg();
        if !(1..=4).contains(&d) {
            return Err(bad(format!("q(t) has degree {d}; only degrees 1 to 4 are supported")));
        }
        if !q.is_squarefree() {
            return Err(bad("q(t) is not squarefree, so the affine model is singular".into()));
        }
        Ok(Arc::new(CurveLevel {
            id,
            field: field.clone(),
            kind: LevelKind::DoubleCover { q },
            parent,
        }))
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn kind(&self) -> &LevelKind {
        &self.kind
    }

    pub fn parent(&self) -> Option<&str> {
        self.parent.as_deref()
    }

    pub fn is_base(&self) -> bool {
        matches!(self.kind, LevelKind::BaseLine)
    }

    /// `q(t)` for a double cover.
    pub fn q(&self) -> Option<&UniPoly<K>> {
        match &self.kind {
            LevelKind::DoubleCover { q } => Some(q),
            LevelKind::BaseLine => None,
        }
    }

    pub fn genus(&self) -> u32 {
        match &self.kind {
            LevelKind::BaseLine => 0,
            LevelKind::DoubleCover { q } if q.deg() <= 2 => 0,
            LevelKind::DoubleCover { .. } => 1,
        }
    }

    /// `x^2 = t^3 + a2 t^2 + a4 t + a6`.
    pub fn is_weierstrass(&self) -> bool {
        self.q().is_some_and(|q| q.deg() == 3 && q.is_monic())
    }

    /// The defining polynomial `x^2 - q(t)`; `t` itself on the base line.
    pub fn equation(&self) -> BiPoly<K> {
        let one = self.one();
        match &self.kind {
            LevelKind::BaseLine => BiPoly::zero(),
            LevelKind::DoubleCover { q } => BiPoly::monomial(one, 2, 0).sub(&BiPoly::from_t(q.clone())),
        }
    }

    pub fn one(&self) -> K {
        K::from_i64(&self.field, 1)
    }

    pub fn num(&self, n: i64) -> K {
        K::from_i64(&self.field, n)
    }

    /// Builds a point after checking the equation.
    pub fn point(self: &Arc<Self>, t: K, x: Option<K>) -> Result<Point> {
        let not_on = |p: String| Error::NotOnCurve {
            level: self.id.clone(),
            point: p,
        };
        if t.field() != &self.field || x.as_ref().is_some_and(|x| x.field() != &self.field) {
            return Err(Error::FieldMismatch);
        }
        match (&self.kind, &x) {
            (LevelKind::BaseLine, None) => {}
            (LevelKind::BaseLine, Some(x)) => return Err(not_on(format!("({t}, {x})"))),
            (LevelKind::DoubleCover { .. }, None) => return Err(not_on(format!("({t})"))),
            (LevelKind::DoubleCover { q }, Some(x)) => {
                if x.mul_ref(x) != q.eval(&t) {
                    return Err(not_on(format!("({t}, {x})")));
                }
            }
        }
        Ok(Point {
            level: self.id.clone(),
            t,
            x,
        })
    }

    pub fn point_q(self: &Arc<Self>, t: i64, x: i64) -> Result<Point> {
        self.point(self.num(t), Some(self.num(x)))
    }

    pub fn base_point(self: &Arc<Self>, t: K) -> Result<Point> {
        self.point(t, None)
    }

    /// Points above `t` with coordinates in the working field.
    ///
    /// `FiberNotRational` carries `x^2 - q(t)` when `q(t)` is not a square.
    pub fn points_above(self: &Arc<Self>, t: &K) -> Result<Vec<Point>> {
        match &self.kind {
            LevelKind::BaseLine => Ok(vec![self.base_point(t.clone())?]),
            LevelKind::DoubleCover { q } => {
                let v = q.eval(t);
                if v.is_zero() {
                    return Ok(vec![self.point(t.clone(), Some(v))?]);
                }
                match v.sqrt() {
                    Some(r) => {
                        let mut pts = vec![
                            self.point(t.clone(), Some(r.clone()))?,
                            self.point(t.clone(), Some(r.neg_ref()))?,
                        ];
                        pts.sort();
                        Ok(pts)
                    }
                    None => Err(Error::FiberNotRational {
                        variable: 'x',
                        polynomial: format!("x^2 - ({v})"),
                    }),
                }
            }
        }
    }
}

impl fmt::Debug for CurveLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if let Some(q) = self.q() {
            write!(f, ": x^2 = {}", q.display_with("t"))?;
        }
        Ok(())
    }
}

impl fmt::Display for CurveLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Affine point of a level: `(t)` on the base line, `(t, x)` on a double cover.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    level: String,
    t: K,
    x: Option<K>,
}

impl Point {
    /// Skips the curve check; for coordinates produced by the group law.
    pub(crate) fn unchecked(level: &str, t: K, x: Option<K>) -> Self {
        Point {
            level: level.into(),
            t,
            x,
        }
    }

    pub fn level(&self) -> &str {
        &self.level
    }

    pub fn t(&self) -> &K {
        &self.t
    }

    pub fn x(&self) -> Option<&K> {
        self.x.as_ref()
    }

    /// The coordinates as a vector (length 1 or 2).
    pub fn coords(&self) -> Vec<K> {
        std::iter::once(self.t.clone()).chain(self.x.clone()).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.x {
            None => write!(f, "t={}", self.t),
            Some(x) => write!(f, "({}, {})", self.t, x),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level, self)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exact::expr::parse_bipoly;

    pub(crate) fn e_level(eq: &str) -> Arc<CurveLevel> {
        let q = NumberField::rationals();
        CurveLevel::plane("E", &q, &parse_bipoly(eq, &q).unwrap(), Some("L".into())).unwrap()
    }

    #[test]
    fn plane_levels() {
        let e = e_level("x^2 = t^3 - t");
        assert_eq!(e.genus(), 1);
        assert!(e.is_weierstrass());
        assert!(e.point_q(1, 0).is_ok());
        assert!(e.point_q(2, 1).is_err());
        let q = NumberField::rationals();
        assert!(CurveLevel::plane("B", &q, &parse_bipoly("x^2 = t^2", &q).unwrap(), None).is_err());
        assert!(CurveLevel::plane("B", &q, &parse_bipoly("x^2 + x = t^3", &q).unwrap(), None).is_err());
        let c = CurveLevel::plane("C", &q, &parse_bipoly("2*x^2 = t^4 - 1", &q).unwrap(), None).unwrap();
        assert_eq!(c.genus(), 1);
        assert!(!c.is_weierstrass());
    }

    #[test]
    fn fibers() {
        let e = e_level("x^2 = t^3 - 2");
        let pts = e.points_above(&e.num(3)).unwrap();
        assert_eq!(pts, vec![e.point_q(3, -5).unwrap(), e.point_q(3, 5).unwrap()]);
        let e = e_level("x^2 = t^3 - t");
        match e.points_above(&e.num(2)) {
            Err(Error::FiberNotRational { polynomial, .. }) => assert_eq!(polynomial, "x^2 - (6)"),
            other => panic!("{other:?}"),
        }
    }
}
