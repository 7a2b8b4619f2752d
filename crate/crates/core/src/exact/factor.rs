//! Factorization of univariate polynomials over `Q` and over simple number
//! fields.
//!
//! Over `Q` the integer factorization of the `algebraics` crate does the work.
//! Over `K = Q(theta)` we use Trager's norm method: shift the squarefree input
//! until its norm to `Q` is squarefree, factor the norm over `Q`, and pull the
//! factors back with gcds over `K`.

use std::sync::Arc;

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;

use super::rational::{self, Rational};
use super::{AlgebraicNumber, BiPoly, NumberField, Scalar, UniPoly, Var};

/// `unit * prod factor^multiplicity`, factors monic, irreducible and sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<S> {
    pub unit: S,
    pub factors: Vec<(UniPoly<S>, usize)>,
}

impl<S: Scalar> Factorization<S> {
    pub fn expand(&self) -> UniPoly<S> {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| {
                acc.mul(&f.pow(*m as u32))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Monic irreducible factors of a rational polynomial with multiplicities,
/// sorted by degree then coefficients. Constants have no factors.
pub fn factor_rational(f: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, usize)> {
    if f.is_constant() {
        return Vec::new();
    }
    if f.deg() == 1 {
        return vec![(f.monic(), 1)];
    }
    let den = rational::common_denominator(f.coeffs());
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let p: Polynomial<BigInt> = ints.into_iter().collect();
    let mut out: Vec<(UniPoly<Rational>, usize)> = p
        .factor()
        .polynomial_factors
        .into_iter()
        .map(|pf| {
            let coeffs: Vec<Rational> = pf
                .polynomial
                .into_coefficients()
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            (UniPoly::new(coeffs).monic(), pf.power)
        })
        .filter(|(g, _)| !g.is_constant())
        .collect();
    out.sort_by(|a, b| (a.0.deg(), &a.0).cmp(&(b.0.deg(), &b.0)));
    out
}

/// Factorization over the number field of the coefficients.
///
/// Panics on the zero polynomial.
pub fn factor_unipoly(f: &UniPoly<AlgebraicNumber>) -> Factorization<AlgebraicNumber> {
    let lc = f.lc().expect("cannot factor the zero polynomial").clone();
    let field = lc.field().clone();
    let mut factors = Vec::new();
    if field.is_rationals() {
        let fr = f.map(|c| c.to_rational().unwrap());
        for (g, m) in factor_rational(&fr) {
            factors.push((g.map(|c| AlgebraicNumber::from_rational(&field, c.clone())), m));
        }
    } else {
        for (g, m) in f.squarefree_decomposition() {
            for h in factor_squarefree(&g, &field) {
                factors.push((h, m));
            }
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), &a.0).cmp(&(b.0.deg(), &b.0)));
    Factorization { unit: lc, factors }
}

/// Distinct roots in the coefficient field with multiplicities, sorted.
pub fn roots_in_field(f: &UniPoly<AlgebraicNumber>) -> Vec<(AlgebraicNumber, usize)> {
    if f.is_constant() {
        return Vec::new();
    }
    let mut roots: Vec<_> = factor_unipoly(f)
        .factors
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, m)| (g.coeffs()[0].neg_ref(), m))
        .collect();
    roots.sort();
    roots
}

/// `g` monic squarefree over a proper number field.
fn factor_squarefree(g: &UniPoly<AlgebraicNumber>, field: &Arc<NumberField>) -> Vec<UniPoly<AlgebraicNumber>> {
    if g.deg() <= 1 {
        return vec![g.monic()];
    }
    let theta = AlgebraicNumber::generator(field);
    for s in shifts() {
        let st = theta.mul_ref(&theta.from_i64_like(s));
        // g(y - s theta)
        let shifted = g.taylor_shift(&st.neg_ref());
        let norm = norm_to_q(&shifted, field);
        if !norm.is_squarefree() {
            continue;
        }
        let parts = factor_rational(&norm);
        if parts.len() == 1 {
            return vec![g.clone()];
        }
        let mut out = Vec::new();
        for (p, _) in parts {
            let pk = p.map(|c| AlgebraicNumber::from_rational(field, c.clone()));
            let h = shifted.gcd(&pk);
            if !h.is_constant() {
                out.push(h.taylor_shift(&st).monic());
            }
        }
        return out;
    }
    unreachable!("some shift always gives a squarefree norm")
}

fn shifts() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}

/// `N_{K/Q}(g) = Res_z(m(z), g_z(y))` where `g_z` replaces `theta` by `z`.
pub(crate) fn norm_to_q(g: &UniPoly<AlgebraicNumber>, field: &NumberField) -> UniPoly<Rational> {
    // outer variable z, inner variable y
    let lift = |a: &AlgebraicNumber| BiPoly::new(a.coords().iter().map(|c| UniPoly::constant(c.clone())).collect());
    let y = BiPoly::from_t(UniPoly::var(&rational::one()));
    let mut gz = BiPoly::zero();
    for c in g.coeffs().iter().rev() {
        gz = gz.mul(&y).add(&lift(c));
    }
    let m = BiPoly::new(
        field
            .minimal_polynomial()
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect(),
    );
    m.resultant(&gz, Var::X)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn q(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(c.iter().map(|&k| int(k)).collect())
    }

    #[test]
    fn over_rationals() {
        let f = factor_rational(&q(&[-1, 0, 1]));
        assert_eq!(f, vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1)]);
        assert_eq!(factor_rational(&q(&[-2, 0, 1])), vec![(q(&[-2, 0, 1]), 1)]);
        let g = q(&[-1, 1]).pow(2).mul(&q(&[1, 0, 1])).scale(&int(3));
        assert_eq!(factor_rational(&g), vec![(q(&[-1, 1]), 2), (q(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn over_quadratic_field() {
        let k = NumberField::new("r", q(&[-2, 0, 1])).unwrap();
        let lift = |p: &UniPoly<Rational>| p.map(|c| AlgebraicNumber::from_rational(&k, c.clone()));
        let f = lift(&q(&[-2, 0, 1]));
        let fac = factor_unipoly(&f);
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(), f);
        let r = AlgebraicNumber::generator(&k);
        let roots: Vec<_> = roots_in_field(&f).into_iter().map(|(x, _)| x).collect();
        assert!(roots.contains(&r) && roots.contains(&r.neg_ref()));
        // t^2 - 3 stays irreducible over Q(sqrt 2)
        assert!(factor_unipoly(&lift(&q(&[-3, 0, 1]))).is_irreducible());
        // t^4 - 4 = (t^2 - 2)(t^2 + 2) splits further into linear factors over Q(sqrt 2)
        let g = lift(&q(&[-4, 0, 0, 0, 1]));
        let fac = factor_unipoly(&g);
        assert_eq!(
            fac.factors.iter().map(|(h, _)| h.deg()).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
        assert_eq!(fac.expand(), g);
    }

    #[test]
    fn norm_of_shifted_generator() {
        let k = NumberField::new("i", q(&[1, 0, 1])).unwrap();
        let i = AlgebraicNumber::generator(&k);
        // N(y - i) = y^2 + 1
        let g = UniPoly::new(vec![i.neg_ref(), i.one_like()]);
        assert_eq!(norm_to_q(&g, &k), q(&[1, 0, 1]));
    }
}
