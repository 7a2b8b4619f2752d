//! Bivariate polynomials in `(x, t)`, stored as polynomials in `x` whose
//! coefficients are polynomials in `t`.

use std::fmt;

use super::{Scalar, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    T,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<S> {
    /// `coeffs[i]` is the coefficient of `x^i`.
    coeffs: Vec<UniPoly<S>>,
}

impl<S: Scalar> BiPoly<S> {
    pub fn new(mut coeffs: Vec<UniPoly<S>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    /// A polynomial in `t` only.
    pub fn from_t(p: UniPoly<S>) -> Self {
        Self::new(vec![p])
    }

    /// `c * x^i * t^j`.
    pub fn monomial(c: S, i: usize, j: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); i + 1];
        coeffs[i] = UniPoly::monomial(c, j);
        BiPoly { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Self::from_t(UniPoly::constant(c))
    }

    pub fn x_coeffs(&self) -> &[UniPoly<S>] {
        &self.coeffs
    }

    pub fn x_coeff(&self, i: usize) -> UniPoly<S> {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_t(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> usize {
        match v {
            Var::X => self.deg_x(),
            Var::T => self.deg_t(),
        }
    }

    /// Some scalar from the coefficients, for field context.
    pub fn sample(&self) -> Option<&S> {
        self.coeffs.iter().find_map(|c| c.sample())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.x_coeff(i).add(&rhs.x_coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale_t(&self, p: &UniPoly<S>) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(p)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let one = match self.sample() {
            Some(s) => Self::constant(s.one_like()),
            None => return Self::zero(),
        };
        (0..e).fold(one, |acc, _| acc.mul(self))
    }

    /// Substitutes a value for `t`, leaving a polynomial in `x`.
    pub fn eval_t(&self, t: &S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    /// Substitutes a value for `x`, leaving a polynomial in `t`.
    pub fn eval_x(&self, x: &S) -> UniPoly<S> {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    pub fn eval(&self, x: &S, t: &S) -> S {
        self.eval_t(t).eval(x)
    }

    pub fn derivative(&self, v: Var) -> Self {
        match v {
            Var::T => Self::new(self.coeffs.iter().map(|c| c.derivative()).collect()),
            Var::X => Self::new(
                self.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, c)| match c.sample() {
                        Some(s) => c.scale(&s.from_i64_like(i as i64)),
                        None => UniPoly::zero(),
                    })
                    .collect(),
            ),
        }
    }

    /// Exchanges the roles of `x` and `t`.
    pub fn swap_vars(&self) -> Self {
        let dt = self.deg_t();
        let Some(zero) = self.sample().map(|s| s.zero_like()) else {
            return Self::zero();
        };
        Self::new(
            (0..=dt)
                .map(|j| UniPoly::new(self.coeffs.iter().map(|c| c.coeff_or(j, &zero)).collect()))
                .collect(),
        )
    }

    /// Resultant eliminating `v`, as the determinant of the Sylvester matrix
    /// with the coefficients of `self` in the first rows:
    /// `Res(f, g) = lc(f)^deg g * prod_{f(r)=0} g(r)`.
    ///
    /// So `Res_x(x^2 - t, x) = -t` and `Res_x(x - 1, x + 1) = 2`.
    pub fn resultant(&self, g: &Self, v: Var) -> UniPoly<S> {
        match v {
            Var::X => resultant_x(self, g),
            Var::T => resultant_x(&self.swap_vars(), &g.swap_vars()),
        }
    }
}

fn resultant_x<S: Scalar>(f: &BiPoly<S>, g: &BiPoly<S>) -> UniPoly<S> {
    if f.is_zero() || g.is_zero() {
        return UniPoly::zero();
    }
    let (m, n) = (f.deg_x(), g.deg_x());
    if m == 0 {
        return f.coeffs[0].pow(n as u32);
    }
    if n == 0 {
        return g.coeffs[0].pow(m as u32);
    }
    let size = m + n;
    let mut a = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            a[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            a[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(a)
}

/// Fraction-free determinant over a polynomial ring.
fn bareiss_det<S: Scalar>(mut a: Vec<Vec<UniPoly<S>>>) -> UniPoly<S> {
    let n = a.len();
    let one = a
        .iter()
        .flatten()
        .find_map(|p| p.sample())
        .map(|s| s.one_like())
        .expect("nonzero matrix");
    let mut prev = UniPoly::constant(one);
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

impl<S: Scalar + fmt::Display> BiPoly<S> {
    pub fn display_with<'a>(&'a self, x: &'a str, t: &'a str) -> impl fmt::Display + 'a {
        BiDisplay { p: self, x, t }
    }
}

struct BiDisplay<'a, S> {
    p: &'a BiPoly<S>,
    x: &'a str,
    t: &'a str,
}

impl<S: Scalar + fmt::Display> fmt::Display for BiDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.p.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.display_with(self.t).to_string();
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    let xs = if i == 1 {
                        self.x.to_string()
                    } else {
                        format!("{}^{}", self.x, i)
                    };
                    if cs == "1" {
                        write!(f, "{xs}")?
                    } else {
                        write!(f, "({cs})*{xs}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "t"))
    }
}

impl<S: fmt::Debug> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("BiPoly").field(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, Rational};

    fn t_poly(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&k| int(k)).collect())
    }

    #[test]
    fn sylvester_resultants() {
        // x^2 - t and x
        let f = BiPoly::new(vec![t_poly(&[0, -1]), t_poly(&[]), t_poly(&[1])]);
        let g = BiPoly::monomial(int(1), 1, 0);
        assert_eq!(f.resultant(&g, Var::X), t_poly(&[0, -1]));
        let a = BiPoly::new(vec![t_poly(&[-1]), t_poly(&[1])]);
        let b = BiPoly::new(vec![t_poly(&[1]), t_poly(&[1])]);
        assert_eq!(a.resultant(&b, Var::X), t_poly(&[2]));
        assert_eq!(f.resultant(&BiPoly::constant(int(1)), Var::X), t_poly(&[1]));
    }

    #[test]
    fn resultant_matches_norm_formula() {
        // Res_x(x^2 - q, a + b x) = a^2 - b^2 q for the monic quadratic.
        let q = t_poly(&[0, -1, 0, 1]);
        let f = BiPoly::new(vec![q.neg(), t_poly(&[]), t_poly(&[1])]);
        let a = t_poly(&[1, 2]);
        let b = t_poly(&[-3, 0, 1]);
        let g = BiPoly::new(vec![a.clone(), b.clone()]);
        assert_eq!(f.resultant(&g, Var::X), a.mul(&a).sub(&b.mul(&b).mul(&q)));
    }

    #[test]
    fn swap_and_eliminate_t() {
        // x - t and x + t - 2 meet at t = 1, x = 1
        let f = BiPoly::new(vec![t_poly(&[0, -1]), t_poly(&[1])]);
        let g = BiPoly::new(vec![t_poly(&[-2, 1]), t_poly(&[1])]);
        let r = f.resultant(&g, Var::T);
        assert_eq!(r.deg(), 1);
        assert!(r.eval(&int(1)) == int(0));
        assert_eq!(f.swap_vars().swap_vars(), f);
    }
}
