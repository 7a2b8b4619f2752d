//! Simple number fields `Q(theta)` and their elements.

use std::fmt;
use std::sync::Arc;

use super::factor::factor_rational;
use super::linalg;
use super::rational::{self, Rational};
use super::{Scalar, UniPoly};
use crate::error::{Error, Result};

/// `Q(theta)` with `theta` a root of a monic irreducible polynomial.
///
/// The rationals themselves are the degree-one field with minimal polynomial
/// `X`, so every coordinate in the crate is an [`AlgebraicNumber`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumberField {
    generator: String,
    minpoly: UniPoly<Rational>,
}

impl NumberField {
    /// Builds the field, rejecting reducible or non-monic minimal polynomials.
    pub fn new(generator: impl Into<String>, minpoly: UniPoly<Rational>) -> Result<Arc<Self>> {
        let generator = generator.into();
        let deg = minpoly
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidField("minimal polynomial must be non-constant".into()))?;
        if !minpoly.is_monic() {
            return Err(Error::InvalidField(format!(
                "minimal polynomial {} is not monic",
                minpoly.display_with(&generator)
            )));
        }
        if deg > 1 {
            let factors = factor_rational(&minpoly);
            if factors.len() != 1 || factors[0].1 != 1 {
                return Err(Error::InvalidField(format!(
                    "minimal polynomial {} is reducible over Q",
                    minpoly.display_with(&generator)
                )));
            }
        }
        Ok(Arc::new(NumberField { generator, minpoly }))
    }

    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            generator: "theta".into(),
            minpoly: UniPoly::new(vec![rational::zero(), rational::one()]),
        })
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn minimal_polynomial(&self) -> &UniPoly<Rational> {
        &self.minpoly
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            write!(f, "Q")
        } else {
            write!(
                f,
                "Q({}: {} = 0)",
                self.generator,
                self.minpoly.display_with(&self.generator)
            )
        }
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Element `c_0 + c_1 theta + ... + c_{n-1} theta^{n-1}` of a number field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraicNumber {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl AlgebraicNumber {
    pub fn from_rational(field: &Arc<NumberField>, r: Rational) -> Self {
        let mut coords = vec![rational::zero(); field.degree()];
        coords[0] = r;
        AlgebraicNumber {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_i64(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, rational::int(n))
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &UniPoly::var(&rational::one()))
    }

    /// Reduces a rational polynomial in `theta` modulo the minimal polynomial.
    pub fn from_poly(field: &Arc<NumberField>, p: &UniPoly<Rational>) -> Self {
        let r = p.rem(&field.minpoly);
        let mut coords = r.into_coeffs();
        coords.resize(field.degree(), rational::zero());
        AlgebraicNumber {
            field: field.clone(),
            coords,
        }
    }

    /// Coordinates in the power basis; the slice length is the field degree.
    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::InvalidField(format!(
                "expected {} coordinates, got {}",
                field.degree(),
                coords.len()
            )));
        }
        Ok(AlgebraicNumber {
            field: field.clone(),
            coords,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn as_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coords.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Scalar::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    fn same_field(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field
    }

    fn check(&self, rhs: &Self) {
        assert!(self.same_field(rhs), "{}", Error::FieldMismatch);
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if !self.same_field(rhs) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.add_ref(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.same_field(rhs) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul_ref(rhs))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if !self.same_field(rhs) {
            return Err(Error::FieldMismatch);
        }
        self.div_ref(rhs).ok_or(Error::DivisionByZero)
    }

    /// Minimal polynomial over `Q`, monic.
    pub fn minimal_polynomial(&self) -> UniPoly<Rational> {
        let n = self.field.degree();
        let mut powers: Vec<Vec<Rational>> = vec![self.one_like().coords];
        let mut cur = self.one_like();
        for k in 1..=n {
            cur = cur.mul_ref(self);
            powers.push(cur.coords.clone());
            // columns are powers 0..=k, rows are coordinates
            let rows: Vec<Vec<Rational>> = (0..n).map(|i| powers.iter().map(|p| p[i].clone()).collect()).collect();
            let ns = linalg::nullspace(&rows, k + 1);
            if let Some(v) = ns.into_iter().find(|v| !Scalar::is_zero(&v[k])) {
                return UniPoly::new(v).monic();
            }
        }
        unreachable!("powers up to the field degree are always dependent")
    }

    /// Characteristic polynomial of multiplication by `self`, of degree `[K:Q]`.
    pub fn characteristic_polynomial(&self) -> UniPoly<Rational> {
        let m = self.minimal_polynomial();
        m.pow((self.field.degree() / m.deg()) as u32)
    }

    /// Field norm to `Q`.
    pub fn norm(&self) -> Rational {
        let c = self.characteristic_polynomial();
        let c0 = c.coeff_or(0, &rational::zero());
        if c.deg().is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// A square root in the same field, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.field.is_rationals() {
            return rational::sqrt_exact(&self.coords[0]).map(|r| Self::from_rational(&self.field, r));
        }
        let p = UniPoly::new(vec![self.neg_ref(), self.zero_like(), self.one_like()]);
        super::factor::roots_in_field(&p).into_iter().map(|(r, _)| r).max()
    }
}

impl Scalar for AlgebraicNumber {
    fn zero_like(&self) -> Self {
        Self::from_rational(&self.field, rational::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rational(&self.field, rational::one())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_i64(&self.field, n)
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.field.is_rationals() {
            return AlgebraicNumber {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        Self::from_poly(&self.field, &self.as_poly().mul(&rhs.as_poly()))
    }
    fn neg_ref(&self) -> Self {
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.field.is_rationals() {
            return Some(Self::from_rational(&self.field, self.coords[0].inv()?));
        }
        let (g, s, _) = self.as_poly().xgcd(&self.field.minpoly);
        debug_assert!(g.is_constant());
        Some(Self::from_poly(&self.field, &s))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = &self.field.generator;
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if Scalar::is_zero(c) {
                continue;
            }
            let neg = c < &rational::zero();
            let a = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let one = a == rational::one();
            match k {
                0 => write!(f, "{a}")?,
                1 if one => write!(f, "{name}")?,
                1 => write!(f, "{a}*{name}")?,
                _ if one => write!(f, "{name}^{k}")?,
                _ => write!(f, "{a}*{name}^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    fn qsqrt2() -> Arc<NumberField> {
        NumberField::new("r", UniPoly::new(vec![int(-2), int(0), int(1)])).unwrap()
    }

    #[test]
    fn defining_relation_and_inverse() {
        let k = qsqrt2();
        let r = AlgebraicNumber::generator(&k);
        assert_eq!(r.mul_ref(&r), AlgebraicNumber::from_i64(&k, 2));
        let one_plus = r.add_ref(&r.one_like());
        let inv = one_plus.inv().unwrap();
        // conjugate trick: (1+r)(-1+r) = 1
        assert_eq!(inv, r.sub_ref(&r.one_like()));
        assert_eq!(inv.to_string(), "-1 + r");
    }

    #[test]
    fn rejects_reducible() {
        assert!(NumberField::new("a", UniPoly::new(vec![int(-1), int(0), int(1)])).is_err());
        assert!(NumberField::new("a", UniPoly::new(vec![int(1), int(2)])).is_err());
    }

    #[test]
    fn minimal_polynomial_and_norm() {
        let k = qsqrt2();
        let r = AlgebraicNumber::generator(&k);
        let a = r.add_ref(&AlgebraicNumber::from_i64(&k, 3)); // 3 + r
        assert_eq!(a.minimal_polynomial(), UniPoly::new(vec![int(7), int(-6), int(1)]));
        assert_eq!(a.norm(), int(7));
        let q = AlgebraicNumber::from_rational(&k, frac(1, 2));
        assert_eq!(
            q.characteristic_polynomial(),
            UniPoly::new(vec![frac(1, 4), int(-1), int(1)])
        );
    }

    #[test]
    fn square_roots() {
        let k = qsqrt2();
        let two = AlgebraicNumber::from_i64(&k, 2);
        let s = two.sqrt().unwrap();
        assert_eq!(s.mul_ref(&s), two);
        assert!(AlgebraicNumber::from_i64(&k, 3).sqrt().is_none());
        let q = NumberField::rationals();
        assert_eq!(
            AlgebraicNumber::from_i64(&q, 25).sqrt(),
            Some(AlgebraicNumber::from_i64(&q, 5))
        );
    }
}
