//! Exact arithmetic: rationals, simple number fields `Q(theta)`, dense
//! univariate and bivariate polynomials, factorization, truncated power
//! series and a small expression grammar for reading all of these from text.

pub mod bipoly;
pub mod expr;
pub mod factor;
pub mod linalg;
pub mod number_field;
pub mod poly;
pub mod rational;
pub mod series;

pub use bipoly::{BiPoly, Var};
pub use factor::{factor_rational, factor_unipoly, roots_in_field, Factorization};
pub use number_field::{AlgebraicNumber, NumberField};
pub use poly::UniPoly;
pub use rational::Rational;
pub use series::TruncatedSeries;

use std::fmt;

/// Element of a commutative field whose context (the field it lives in) is
/// carried by the value itself, so that zero and one can be produced from any
/// element.
///
/// `inv` returns `None` exactly for zero.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        rational::zero()
    }
    fn one_like(&self) -> Self {
        rational::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        rational::int(n)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
}
