use std::fmt;
use std::sync::Arc;

use super::{CurveLevel, Point, K};
use crate::error::{Error, Result};
use crate::exact::expr::{self, Expr};
use crate::exact::{Scalar, UniPoly};

/// Element `(a(t) + b(t) x) / d(t)` of the function field of a level.
///
/// Normal form: `gcd(a, b, d) = 1` and `d` monic; on the base line `b = 0`.
/// Since `{1, x}` is a basis of the function field over `k(t)` this form is
/// unique, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FunctionElement {
    level: Arc<CurveLevel>,
    a: UniPoly<K>,
    b: UniPoly<K>,
    d: UniPoly<K>,
}

impl FunctionElement {
    pub fn new(level: &Arc<CurveLevel>, a: UniPoly<K>, b: UniPoly<K>, d: UniPoly<K>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if level.is_base() && !b.is_zero() {
            return Err(Error::unsupported(level.id(), "x is not a coordinate on the base line"));
        }
        Ok(Self::normalized(level, a, b, d))
    }

    fn normalized(level: &Arc<CurveLevel>, a: UniPoly<K>, b: UniPoly<K>, d: UniPoly<K>) -> Self {
        let one = level.one();
        if a.is_zero() && b.is_zero() {
            return FunctionElement {
                level: level.clone(),
                a,
                b,
                d: UniPoly::constant(one),
            };
        }
        let g = a.gcd(&b).gcd(&d);
        let (mut a, mut b, mut d) = if g.is_constant() {
            (a, b, d)
        } else {
            (
                a.exact_div(&g).unwrap(),
                b.exact_div(&g).unwrap(),
                d.exact_div(&g).unwrap(),
            )
        };
        let lc = d.lc().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            a = a.scale(&inv);
            b = b.scale(&inv);
            d = d.scale(&inv);
        }
        FunctionElement {
            level: level.clone(),
            a,
            b,
            d,
        }
    }

    /// A polynomial in `t`.
    pub fn from_t_poly(level: &Arc<CurveLevel>, a: UniPoly<K>) -> Self {
        Self::normalized(level, a, UniPoly::zero(), UniPoly::constant(level.one()))
    }

    /// `a(t) + b(t) x`.
    pub fn regular(level: &Arc<CurveLevel>, a: UniPoly<K>, b: UniPoly<K>) -> Result<Self> {
        Self::new(level, a, b, UniPoly::constant(level.one()))
    }

    pub fn constant(level: &Arc<CurveLevel>, c: K) -> Self {
        Self::from_t_poly(level, UniPoly::constant(c))
    }

    pub fn t(level: &Arc<CurveLevel>) -> Self {
        Self::from_t_poly(level, UniPoly::var(&level.one()))
    }

    /// The coordinate `x`; an error on the base line.
    pub fn x(level: &Arc<CurveLevel>) -> Result<Self> {
        Self::regular(level, UniPoly::zero(), UniPoly::constant(level.one()))
    }

    /// `t - c`.
    pub fn t_minus(level: &Arc<CurveLevel>, c: &K) -> Self {
        Self::from_t_poly(level, UniPoly::linear_root(c))
    }

    /// Parses a rational expression in `t`, `x` and the field generator.
    pub fn parse(level: &Arc<CurveLevel>, s: &str) -> Result<Self> {
        let field = level.field();
        let gen = (!field.is_rationals()).then(|| field.generator_name());
        let e = expr::parse(s, gen)?;
        Self::from_expr(level, &e)
    }

    pub fn from_expr(level: &Arc<CurveLevel>, e: &Expr) -> Result<Self> {
        let one = Self::constant(level, level.one());
        let gen = Self::constant(level, K::generator(level.field()));
        let t = Self::t(level);
        let x = if level.is_base() {
            if e.mentions_x() {
                return Err(Error::parse_at(1, "x is not a coordinate on the base line"));
            }
            one.clone()
        } else {
            Self::x(level)?
        };
        e.eval(&one, &gen, &t, &x)
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    pub fn numerator_t(&self) -> &UniPoly<K> {
        &self.a
    }

    pub fn numerator_x(&self) -> &UniPoly<K> {
        &self.b
    }

    pub fn denominator(&self) -> &UniPoly<K> {
        &self.d
    }

    /// No poles on the affine level, i.e. an element of the coordinate ring.
    pub fn is_regular(&self) -> bool {
        self.d.is_constant()
    }

    /// Depends on `t` only.
    pub fn is_t_only(&self) -> bool {
        self.b.is_zero()
    }

    /// `N(a + b x) = a^2 - b^2 q` over `d^2`: the numerator and denominator
    /// of the norm to `k(t)` (on the base line just `a` and `d`).
    pub fn norm_parts(&self) -> (UniPoly<K>, UniPoly<K>) {
        match self.level.q() {
            None => (self.a.clone(), self.d.clone()),
            Some(q) => (
                self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(q)),
                self.d.mul(&self.d),
            ),
        }
    }

    /// Value at a point, `None` at a pole (or where the normal form cannot
    /// be evaluated because `d` vanishes).
    pub fn eval_at(&self, p: &Point) -> Option<K> {
        let dv = self.d.eval(p.t());
        let inv = dv.inv()?;
        let mut v = self.a.eval(p.t());
        if let Some(x) = p.x() {
            v = v.add_ref(&self.b.eval(p.t()).mul_ref(x));
        }
        Some(v.mul_ref(&inv))
    }

    /// Composition with a map into this level: `t` and `x` are replaced by
    /// the given elements (of another level).
    pub fn substitute(&self, t: &FunctionElement, x: Option<&FunctionElement>) -> Result<FunctionElement> {
        let ev = |p: &UniPoly<K>| {
            let mut acc = t.zero_like();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul_ref(t).add_ref(&FunctionElement::constant(t.level(), c.clone()));
            }
            acc
        };
        let mut num = ev(&self.a);
        if !self.b.is_zero() {
            let x = x.ok_or_else(|| Error::Precondition("substitution needs an image for x".into()))?;
            num = num.add_ref(&ev(&self.b).mul_ref(x));
        }
        num.div_ref(&ev(&self.d)).ok_or(Error::DivisionByZero)
    }

    /// The conjugate `(a - b x)/d` under `x -> -x`.
    pub fn conjugate(&self) -> Self {
        Self::normalized(&self.level, self.a.clone(), self.b.neg(), self.d.clone())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.same_level(rhs)?;
        Ok(self.add_ref(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_level(rhs)?;
        Ok(self.mul_ref(rhs))
    }

    fn same_level(&self, rhs: &Self) -> Result<()> {
        if self.level.id() != rhs.level.id() {
            return Err(Error::LevelMismatch {
                expected: self.level.id().into(),
                found: rhs.level.id().into(),
            });
        }
        Ok(())
    }
}

impl Scalar for FunctionElement {
    fn zero_like(&self) -> Self {
        Self::from_t_poly(&self.level, UniPoly::zero())
    }
    fn one_like(&self) -> Self {
        Self::constant(&self.level, self.level.one())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::constant(&self.level, self.level.num(n))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.level.id(), rhs.level.id(), "level mismatch");
        if self.d == rhs.d {
            return Self::normalized(&self.level, self.a.add(&rhs.a), self.b.add(&rhs.b), self.d.clone());
        }
        Self::normalized(
            &self.level,
            self.a.mul(&rhs.d).add(&rhs.a.mul(&self.d)),
            self.b.mul(&rhs.d).add(&rhs.b.mul(&self.d)),
            self.d.mul(&rhs.d),
        )
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.level.id(), rhs.level.id(), "level mismatch");
        let mut a = self.a.mul(&rhs.a);
        if let Some(q) = self.level.q() {
            a = a.add(&self.b.mul(&rhs.b).mul(q));
        }
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        Self::normalized(&self.level, a, b, self.d.mul(&rhs.d))
    }
    fn neg_ref(&self) -> Self {
        FunctionElement {
            level: self.level.clone(),
            a: self.a.neg(),
            b: self.b.neg(),
            d: self.d.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.level.is_base() {
            return Some(Self::normalized(
                &self.level,
                self.d.clone(),
                UniPoly::zero(),
                self.a.clone(),
            ));
        }
        let (n, _) = self.norm_parts();
        Some(Self::normalized(
            &self.level,
            self.d.mul(&self.a),
            self.d.mul(&self.b).neg(),
            n,
        ))
    }
}

impl fmt::Display for FunctionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.a.display_with("t").to_string();
        let b = self.b.display_with("t").to_string();
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => a,
            (true, false) if b == "1" => "x".to_string(),
            (true, false) => format!("({b})*x"),
            (false, false) if b == "1" => format!("{a} + x"),
            (false, false) => format!("{a} + ({b})*x"),
        };
        if self.d.is_constant() {
            write!(f, "{num}")
        } else {
            let wrap = num.contains(' ');
            if wrap {
                write!(f, "({num})/({})", self.d.display_with("t"))
            } else {
                write!(f, "{num}/({})", self.d.display_with("t"))
            }
        }
    }
}

impl fmt::Debug for FunctionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.level.id(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;

    #[test]
    fn arithmetic_in_the_function_field() {
        let e = e_level("x^2 = t^3 - t");
        let x = FunctionElement::x(&e).unwrap();
        let q = FunctionElement::parse(&e, "t^3 - t").unwrap();
        assert_eq!(x.mul_ref(&x), q);
        let f = FunctionElement::parse(&e, "x/(t^2 - 1)").unwrap();
        // x / (t^2 - 1) = t / x
        let g = FunctionElement::parse(&e, "t/x").unwrap();
        assert_eq!(f, g);
        assert_eq!(f.mul_ref(&f.inv().unwrap()), f.one_like());
        assert!(FunctionElement::parse(&e, "x^3 + t").unwrap().is_regular());
        assert!(!g.is_regular());
    }

    #[test]
    fn display_round_trip() {
        let e = e_level("x^2 = t^3 - 2");
        for s in ["x - 3*t + 4", "(t^2 + x)/(t - 1)", "x", "-t^2/(t + 1)"] {
            let f = FunctionElement::parse(&e, s).unwrap();
            assert_eq!(FunctionElement::parse(&e, &f.to_string()).unwrap(), f, "{s}");
        }
    }

    #[test]
    fn substitution() {
        let e = e_level("x^2 = t^3 - t");
        let f = FunctionElement::parse(&e, "x + t").unwrap();
        let p = e.point_q(0, 0).unwrap();
        assert_eq!(f.eval_at(&p), Some(e.num(0)));
        // pulling back along (t, x) -> (t, -x) gives the conjugate
        let t = FunctionElement::t(&e);
        let mx = FunctionElement::x(&e).unwrap().neg_ref();
        assert_eq!(f.substitute(&t, Some(&mx)).unwrap(), f.conjugate());
    }
}
