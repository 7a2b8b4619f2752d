//! Finitely generated ideals of the coordinate rings through the divisor
//! dictionary: an ideal `(f, g)` corresponds to `min((f), (g))`, its radical
//! to the support of that divisor, and the Boolean operations on finite
//! point sets to sums, products and quotients of ideals.

mod boolean;

pub use boolean::{boolean_dictionary, BoolElem, BoolOp, DictionaryCheck, RadicalIdeal};

use std::sync::Arc;

use crate::curve::{local_expansion, valuation, CurveLevel, FunctionElement, Point, K};
use crate::divisor::{alpha, principal_divisor, Divisor};
use crate::error::{Error, Result};
use crate::exact::{linalg, Scalar, TruncatedSeries, UniPoly};

/// Largest `t`-degree tried when interpolating generators.
pub const INTERPOLATION_CAP: usize = 96;

/// The ideal `(f, g)` of the coordinate ring of a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgIdeal {
    level: Arc<CurveLevel>,
    f: FunctionElement,
    g: FunctionElement,
}

impl FgIdeal {
    pub fn new(f: FunctionElement, g: FunctionElement) -> Result<Self> {
        let level = f.level().clone();
        if g.level().id() != level.id() {
            return Err(Error::LevelMismatch {
                expected: level.id().into(),
                found: g.level().id().into(),
            });
        }
        if !f.is_regular() || !g.is_regular() {
            return Err(Error::NotRegular);
        }
        Ok(FgIdeal { level, f, g })
    }

    /// The ideal with divisor `d` (effective).
    pub fn from_divisor(level: &Arc<CurveLevel>, d: &Divisor) -> Result<Self> {
        let (f, g) = two_generators(level, d)?;
        Self::new(f, g)
    }

    pub fn level(&self) -> &Arc<CurveLevel> {
        &self.level
    }

    pub fn generators(&self) -> (&FunctionElement, &FunctionElement) {
        (&self.f, &self.g)
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    /// `p -> min(v_p(f), v_p(g))`.
    pub fn divisor(&self) -> Result<Divisor> {
        match (self.f.is_zero(), self.g.is_zero()) {
            (true, true) => Err(Error::ZeroIdeal),
            (true, false) => principal_divisor(&self.g),
            (false, true) => principal_divisor(&self.f),
            (false, false) => alpha(&self.f, &self.g),
        }
    }

    /// Ideals are equal iff their divisors are.
    pub fn same_ideal(&self, other: &Self) -> Result<bool> {
        Ok(self.divisor()? == other.divisor()?)
    }

    /// Divisor of `I + J`, from all four generators.
    pub fn sum_divisor(&self, other: &Self) -> Result<Divisor> {
        self.divisor()?.min(&other.divisor()?)
    }

    /// Divisor of `I J = (f f', f g', g f', g g')`, from the generators.
    pub fn product_divisor(&self, other: &Self) -> Result<Divisor> {
        let p = |a: &FunctionElement, b: &FunctionElement| a.mul_ref(b);
        let first = FgIdeal::new(p(&self.f, &other.f), p(&self.g, &other.g))?;
        let second = FgIdeal::new(p(&self.f, &other.g), p(&self.g, &other.f))?;
        let a = first.divisor();
        let b = second.divisor();
        match (a, b) {
            (Ok(a), Ok(b)) => a.min(&b),
            (Ok(a), Err(Error::ZeroIdeal)) => Ok(a),
            (Err(Error::ZeroIdeal), Ok(b)) => Ok(b),
            (Err(e), _) | (_, Err(e)) => Err(e),
        }
    }

    /// Divisor of `(I : J)`: `max(d_I - d_J, 0)`, since ideals of a Dedekind
    /// domain are determined by their divisors.
    pub fn quotient_divisor(&self, other: &Self) -> Result<Divisor> {
        Ok(self.divisor()?.sub(&other.divisor()?)?.positive_part())
    }

    /// On the base line `(f, g) = (gcd(f, g))`. Checks that the gcd has the
    /// same divisor as the ideal and that `gcd = u f + v g` with explicit
    /// polynomial cofactors.
    pub fn base_line_cross_check(&self) -> Result<bool> {
        if !self.level.is_base() {
            return Err(Error::unsupported(
                self.level.id(),
                "the gcd check runs on the base line",
            ));
        }
        let (a, b) = (self.f.numerator_t(), self.g.numerator_t());
        let (gcd, u, v) = a.xgcd(b);
        let combo = u.mul(a).add(&v.mul(b));
        let gcd_fn = FunctionElement::from_t_poly(&self.level, gcd.clone());
        Ok(combo == gcd && principal_divisor(&gcd_fn)? == self.divisor()?)
    }
}

/// The radical of `I`: the support of its divisor.
pub fn radical(ideal: &FgIdeal) -> Result<RadicalIdeal> {
    RadicalIdeal::new(ideal.level(), ideal.divisor()?.support())
}

/// Whether the radical is exactly the set of common zeros of the generators
/// among `points`.
pub fn radical_matches_common_zeros(ideal: &FgIdeal, points: &[Point]) -> Result<bool> {
    let r = radical(ideal)?;
    for p in points {
        let vanishes = |f: &FunctionElement| f.eval_at(p).map(|v| v.is_zero()).ok_or(Error::NotRegular);
        if (vanishes(&ideal.f)? && vanishes(&ideal.g)?) != r.support().contains(p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two regular functions with `min((f), (g)) = d` for effective `d`.
///
/// On the base line `f = g = prod (t - t_i)^{m_i}`. On a double cover the
/// conditions `v_p(h) >= m_p` are linear in the coefficients of
/// `h = a(t) + b(t) x`, read off local expansions; `f` is taken from the
/// solution space with `v_p(f) = m_p` exactly, and `g` from the same space
/// so that `f` and `g` have no further common zero. The degree bound grows
/// until both exist.
pub fn two_generators(level: &Arc<CurveLevel>, d: &Divisor) -> Result<(FunctionElement, FunctionElement)> {
    if d.level() != level.id() {
        return Err(Error::LevelMismatch {
            expected: level.id().into(),
            found: d.level().into(),
        });
    }
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    let one = FunctionElement::constant(level, level.one());
    if d.is_zero() {
        return Ok((one.clone(), one));
    }
    if level.is_base() {
        let f = d.iter().fold(one, |acc, (p, m)| {
            acc.mul_ref(&FunctionElement::t_minus(level, p.t()).pow(m as u32))
        });
        return Ok((f.clone(), f));
    }
    let mut deg = d.degree() as usize + 2;
    loop {
        if let Some(pair) = generators_up_to(level, d, deg)? {
            return Ok(pair);
        }
        if deg >= INTERPOLATION_CAP {
            return Err(Error::InterpolationCap { cap: INTERPOLATION_CAP });
        }
        deg = (deg * 2).min(INTERPOLATION_CAP);
    }
}

fn generators_up_to(
    level: &Arc<CurveLevel>,
    d: &Divisor,
    deg: usize,
) -> Result<Option<(FunctionElement, FunctionElement)>> {
    let one = level.one();
    let qdeg = level.q().map_or(0, |q| q.deg());
    // monomials t^i x^j by pole order at infinity, up to `deg`
    let mut monomials: Vec<(usize, usize)> = (0..=deg)
        .flat_map(|i| [(i, 0), (i, 1)])
        .filter(|&(i, j)| 2 * i + j * qdeg <= deg.max(qdeg))
        .collect();
    monomials.sort_by_key(|&(i, j)| (2 * i + j * qdeg, j));
    let mut rows: Vec<Vec<K>> = Vec::new();
    for (p, m) in d.iter() {
        let m = m as usize;
        let le = local_expansion(level, p, m.max(2))?;
        let x = le.x.as_ref().expect("double cover");
        let mut tpow = vec![TruncatedSeries::constant(one.clone(), m.max(2))];
        for _ in 0..deg {
            tpow.push(tpow.last().unwrap().mul(&le.t));
        }
        let series: Vec<TruncatedSeries<K>> = monomials
            .iter()
            .map(|&(i, j)| if j == 0 { tpow[i].clone() } else { tpow[i].mul(x) })
            .collect();
        for k in 0..m {
            rows.push(series.iter().map(|s| s.coeff(k).clone()).collect());
        }
    }
    let basis = linalg::nullspace_with(&rows, monomials.len(), &one);
    let to_function = |v: &[K]| -> Result<FunctionElement> {
        let zero = one.zero_like();
        let mut a = vec![zero.clone(); deg + 1];
        let mut b = vec![zero; deg + 1];
        for (c, &(i, j)) in v.iter().zip(&monomials) {
            if j == 0 {
                a[i] = c.clone();
            } else {
                b[i] = c.clone();
            }
        }
        FunctionElement::regular(level, UniPoly::new(a), UniPoly::new(b))
    };
    let candidates = candidate_vectors(&basis, &one);
    let exact = |f: &FunctionElement| -> Result<bool> {
        for (p, m) in d.iter() {
            if valuation(f, p)? != m {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut f = None;
    for (k, v) in candidates.iter().enumerate() {
        let h = to_function(v)?;
        if !h.is_zero() && exact(&h)? {
            f = Some((k, h));
            break;
        }
    }
    let Some((fk, f)) = f else {
        return Ok(None);
    };
    // alpha(f, f) is the whole divisor of f, and slow to factor
    for (k, v) in candidates.iter().enumerate() {
        if k == fk {
            continue;
        }
        let g = to_function(v)?;
        if g.is_zero() {
            continue;
        }
        match alpha(&f, &g) {
            Ok(a) if &a == d => return Ok(Some((f, g))),
            Ok(_) | Err(Error::FiberNotRational { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Basis vectors first, then a few fixed dense combinations, then sums of
/// pairs. Deterministic, and dense combinations are generic enough in
/// practice.
fn candidate_vectors(basis: &[Vec<K>], one: &K) -> Vec<Vec<K>> {
    let mut out: Vec<Vec<K>> = basis.to_vec();
    if basis.len() < 2 {
        return out;
    }
    let n = basis[0].len();
    let combo = |coef: &dyn Fn(usize) -> i64| -> Vec<K> {
        let mut v = vec![one.zero_like(); n];
        for (k, b) in basis.iter().enumerate() {
            let c = one.from_i64_like(coef(k));
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = vi.add_ref(&c.mul_ref(bi));
            }
        }
        v
    };
    out.push(combo(&|k| k as i64 + 1));
    out.push(combo(&|k| (k as i64 * 7 + 3) % 11 - 5));
    out.push(combo(&|k| if k % 2 == 0 { 1 } else { -2 }));
    for i in 0..basis.len() {
        for j in i + 1..basis.len().min(i + 4) {
            out.push(basis[i].iter().zip(&basis[j]).map(|(a, b)| a.add_ref(b)).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::exact::NumberField;

    fn check(level: &Arc<CurveLevel>, d: &Divisor) -> (FunctionElement, FunctionElement) {
        let (f, g) = two_generators(level, d).unwrap();
        assert_eq!(&alpha(&f, &g).unwrap(), d, "generators {f}, {g}");
        (f, g)
    }

    #[test]
    fn spec_shapes() {
        let e = e_level("x^2 = t^3 - t");
        let o = Divisor::point(&e.point_q(0, 0).unwrap(), 1);
        let (f, g) = check(&e, &o);
        assert_eq!(f, FunctionElement::x(&e).unwrap());
        assert_eq!(g, FunctionElement::t(&e));
        let l = CurveLevel::base("L", &NumberField::rationals());
        let d = Divisor::from_entries(
            "L",
            [
                (l.base_point(l.num(0)).unwrap(), 2),
                (l.base_point(l.num(1)).unwrap(), 1),
            ],
        )
        .unwrap();
        let (f, g) = two_generators(&l, &d).unwrap();
        assert_eq!(f, FunctionElement::parse(&l, "t^2*(t-1)").unwrap());
        assert_eq!(f, g);
        let (f, g) = two_generators(&e, &Divisor::zero("E")).unwrap();
        assert!(f.is_one() && g.is_one());
        assert!(two_generators(&e, &o.neg()).is_err());
    }

    #[test]
    fn higher_multiplicities() {
        let e = e_level("x^2 = t^3 - 2");
        let d = Divisor::from_entries("E", [(e.point_q(3, 5).unwrap(), 3), (e.point_q(3, -5).unwrap(), 1)]).unwrap();
        check(&e, &d);
        let e1 = e_level("x^2 = t^3 - t");
        let d = Divisor::from_entries(
            "E",
            [
                (e1.point_q(0, 0).unwrap(), 3),
                (e1.point_q(1, 0).unwrap(), 2),
                (e1.point_q(-1, 0).unwrap(), 1),
            ],
        )
        .unwrap();
        check(&e1, &d);
    }

    #[test]
    fn radicals() {
        let l = CurveLevel::base("L", &NumberField::rationals());
        let i = FgIdeal::new(
            FunctionElement::parse(&l, "t^2").unwrap(),
            FunctionElement::parse(&l, "t^3").unwrap(),
        )
        .unwrap();
        let r = radical(&i).unwrap();
        assert_eq!(
            r.support().points().iter().collect::<Vec<_>>(),
            vec![&l.base_point(l.num(0)).unwrap()]
        );
        assert!(i.base_line_cross_check().unwrap());
        let e = e_level("x^2 = t^3 - t");
        let j = FgIdeal::new(FunctionElement::x(&e).unwrap(), FunctionElement::t(&e)).unwrap();
        let pts: Vec<_> = [(0, 0), (1, 0), (-1, 0)]
            .iter()
            .map(|&(t, x)| e.point_q(t, x).unwrap())
            .collect();
        assert_eq!(radical(&j).unwrap().support().len(), 1);
        assert!(radical_matches_common_zeros(&j, &pts).unwrap());
        let unit = FgIdeal::new(FunctionElement::constant(&e, e.one()), FunctionElement::x(&e).unwrap()).unwrap();
        assert!(radical(&unit).unwrap().support().is_empty());
        let zero = FgIdeal::new(
            FunctionElement::constant(&e, e.num(0)),
            FunctionElement::constant(&e, e.num(0)),
        )
        .unwrap();
        assert_eq!(radical(&zero), Err(Error::ZeroIdeal));
    }
}
