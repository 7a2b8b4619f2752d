//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;

use super::Scalar;

/// Dense polynomial, coefficients stored from the constant term upwards.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and the representation is unique.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The polynomial `X`, using `one` for its field context.
    pub fn var(one: &S) -> Self {
        Self::monomial(one.one_like(), 1)
    }

    /// `X - root`.
    pub fn linear_root(root: &S) -> Self {
        Self::new(vec![root.neg_ref(), root.one_like()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    /// Coefficient of `X^k`, or `zero` when past the degree.
    pub fn coeff_or(&self, k: usize, zero: &S) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(|| zero.zero_like())
    }

    /// Some element of the coefficient field (for context), if nonzero.
    pub fn sample(&self) -> Option<&S> {
        self.coeffs.first()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.add_ref(c);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let Some(s) = self.sample() else {
            return if e == 0 {
                panic!("0^0 of a polynomial without field context")
            } else {
                Self::zero()
            };
        };
        let mut acc = Self::constant(s.one_like());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.lc()?.inv()?;
        let dd = d.deg();
        if self.coeffs.len() < d.coeffs.len() {
            return Some((Self::zero(), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let zero = dl.zero_like();
        let mut q = vec![zero; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul_ref(&dl);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub_ref(&c.mul_ref(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("division by zero polynomial").1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Some((_, r)) => r.is_zero(),
            None => other.is_zero(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.lc().and_then(|l| l.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let one = match self.sample().or(other.sample()) {
            Some(c) => c.one_like(),
            None => return (Self::zero(), Self::zero(), Self::zero()),
        };
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(one.clone()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(one));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.lc().unwrap().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&c.from_i64_like(k as i64)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// `self(other(X))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `self(X + c)`.
    pub fn taylor_shift(&self, c: &S) -> Self {
        let x_plus_c = Self::new(vec![c.clone(), c.one_like()]);
        self.compose(&x_plus_c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<UniPoly<T>, E> {
        Ok(UniPoly::new(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Product of the distinct monic irreducible factors (up to the leading
    /// coefficient, which is dropped).
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `(a_i, i)` with
    /// `self = lc * prod a_i^i`. Constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.exact_div(&a).unwrap();
        let mut c = df.exact_div(&a).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            a = b.gcd(&d);
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((a.monic(), i));
            }
            i += 1;
        }
        out
    }
}

impl<S: Scalar> UniPoly<S> {
    /// Formats with the given variable name; coefficients that print as sums
    /// are parenthesised.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a
    where
        S: fmt::Display,
    {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a, S> {
    poly: &'a UniPoly<S>,
    var: &'a str,
}

impl<S: Scalar + fmt::Display> fmt::Display for PolyDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = s.starts_with('-') && !s[1..].contains(['+', '-']);
            if negative {
                s.remove(0);
            }
            let compound = s.contains(['+', '-']) || (k > 0 && s.contains('/'));
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = s == "1";
            match k {
                0 => write!(f, "{s}")?,
                _ => {
                    if !unit {
                        if compound {
                            write!(f, "({s})*")?;
                        } else {
                            write!(f, "{s}*")?;
                        }
                    }
                    if k == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{}", self.var, k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("X"))
    }
}

impl<S: fmt::Debug> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int, Rational};

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&k| int(k)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&[-1, 0, 1]); // X^2 - 1
        let g = p(&[-1, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&p(&[1, 1])), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3])), p(&[1]));
    }

    #[test]
    fn xgcd_identity() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[5, 0, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert!(g.is_monic());
    }

    #[test]
    fn yun_decomposition() {
        // (X-1)^3 (X+2)^2 X
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[0, 1]));
        let dec = f.squarefree_decomposition();
        let back = dec.iter().fold(p(&[1]), |acc, (a, i)| acc.mul(&a.pow(*i as u32)));
        assert_eq!(back, f);
        assert_eq!(dec.len(), 3);
        assert_eq!(f.squarefree_part(), p(&[0, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1])));
    }

    #[test]
    fn shift_and_compose() {
        let f = p(&[0, 0, 1]);
        assert_eq!(f.taylor_shift(&int(1)), p(&[1, 2, 1]));
        assert_eq!(f.eval(&frac(1, 2)), frac(1, 4));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).display_with("t").to_string(), "t^2 - 1");
        assert_eq!(p(&[0, -3, 0, 1]).display_with("t").to_string(), "t^3 - 3*t");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
