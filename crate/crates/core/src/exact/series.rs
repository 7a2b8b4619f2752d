//! Truncated power series `c_0 + c_1 u + ... + c_{n-1} u^{n-1} + O(u^n)`.

use super::{Scalar, UniPoly};

/// Power series known modulo `u^precision`. The coefficient vector always has
/// exactly `precision` entries, so a series is never empty.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: S, precision: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); precision.max(1)];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// The series variable `u` itself.
    pub fn var(one: &S, precision: usize) -> Self {
        let mut s = Self::constant(one.zero_like(), precision.max(2));
        s.coeffs[1] = one.one_like();
        s
    }

    /// Expansion of a polynomial around `u = 0` at the given precision.
    pub fn from_poly(p: &UniPoly<S>, one: &S, precision: usize) -> Self {
        let coeffs = (0..precision.max(1)).map(|k| p.coeff_or(k, one)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(precision.max(1));
        TruncatedSeries { coeffs }
    }

    /// Index of the first nonzero coefficient, or `None` when the series is
    /// zero to the known precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].add_ref(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].sub_ref(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.precision().min(rhs.precision());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inv(&self) -> Option<Self> {
        let c0inv = self.coeffs[0].inv()?;
        let n = self.precision();
        let mut out: Vec<S> = Vec::with_capacity(n);
        out.push(c0inv.clone());
        for k in 1..n {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                acc = acc.add_ref(&self.coeffs[i].mul_ref(&out[k - i]));
            }
            out.push(acc.neg_ref().mul_ref(&c0inv));
        }
        Some(TruncatedSeries { coeffs: out })
    }

    /// The square root with constant term `root`, where `root^2 = c_0 != 0`.
    pub fn sqrt_with(&self, root: &S) -> Option<Self> {
        if root.is_zero() || root.mul_ref(root) != self.coeffs[0] {
            return None;
        }
        let two_inv = root.add_ref(root).inv()?;
        let n = self.precision();
        let mut out: Vec<S> = Vec::with_capacity(n);
        out.push(root.clone());
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.sub_ref(&out[i].mul_ref(&out[k - i]));
            }
            out.push(acc.mul_ref(&two_inv));
        }
        Some(TruncatedSeries { coeffs: out })
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly<S>) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut acc = Self::constant(zero, self.precision());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            acc.coeffs[0] = acc.coeffs[0].add_ref(c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int, Rational};

    #[test]
    fn geometric_series() {
        let one = int(1);
        let s = TruncatedSeries::constant(one.clone(), 12).sub(&TruncatedSeries::var(&one, 12));
        let inv = s.inv().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == one));
        assert_eq!(inv.precision(), 12);
    }

    #[test]
    fn square_root_of_one_plus_u() {
        let one = int(1);
        let s = TruncatedSeries::constant(one.clone(), 5).add(&TruncatedSeries::var(&one, 5));
        let r = s.sqrt_with(&one).unwrap();
        assert_eq!(r.coeff(1), &frac(1, 2));
        assert_eq!(r.coeff(2), &frac(-1, 8));
        assert_eq!(r.mul(&r), s);
    }

    #[test]
    fn order_and_composition() {
        let one = int(1);
        let u = TruncatedSeries::var(&one, 6);
        let p: UniPoly<Rational> = UniPoly::new(vec![int(0), int(0), int(3), int(1)]);
        let v = u.eval_poly(&p);
        assert_eq!(v.order(), Some(2));
        assert_eq!(TruncatedSeries::constant(int(0), 4).order(), None);
    }
}
