//! Covers between levels: pullback and pushforward of divisors and supports,
//! fibers with ramification degrees, and the norm of functions.
//!
//! A cover `p: C_j -> C_i` is given by forward formulas (the target
//! coordinates as regular functions on the source) together with a
//! presentation of `k(C_j)` over `k(C_i)`: a generator `Y`, its monic minimal
//! polynomial `m(Y)` with coefficients in `k(C_i)`, and the source
//! coordinates as polynomials in `Y`. All of it is checked when the cover is
//! built; the degree is `deg m`.

use std::sync::Arc;

use crate::curve::{uniformizer, valuation, CurveLevel, FunctionElement, Point, K};
use crate::divisor::{rational_roots, Divisor, SupportSet};
use crate::error::{Error, Result};
use crate::exact::{expr, linalg, Scalar, UniPoly};

type Poly = UniPoly<FunctionElement>;

#[derive(Clone, Debug)]
pub struct Presentation {
    /// `Y`, a function on the source.
    pub generator: FunctionElement,
    /// Monic `m(Y)` over the target's function field.
    pub minpoly: Poly,
    /// Source `t` as a polynomial in `Y`.
    pub t: Poly,
    /// Source `x` as a polynomial in `Y`.
    pub x: Poly,
}

#[derive(Clone, Debug)]
pub struct CoverMap {
    source: Arc<CurveLevel>,
    target: Arc<CurveLevel>,
    t_img: FunctionElement,
    x_img: Option<FunctionElement>,
    presentation: Presentation,
}

impl CoverMap {
    /// The projection `(t, x) -> t` of a double cover onto the base line.
    pub fn projection(source: &Arc<CurveLevel>, target: &Arc<CurveLevel>) -> Result<Self> {
        let q = source
            .q()
            .ok_or_else(|| invalid(source, target, "source must be a double cover"))?;
        if !target.is_base() {
            return Err(invalid(source, target, "projection needs the base line as target"));
        }
        let x = FunctionElement::x(source)?;
        let tt = FunctionElement::t(target);
        let qt = FunctionElement::from_t_poly(target, q.clone());
        let one = tt.one_like();
        let presentation = Presentation {
            generator: x,
            minpoly: UniPoly::new(vec![qt.neg_ref(), tt.zero_like(), one.clone()]),
            t: UniPoly::constant(tt),
            x: UniPoly::var(&one),
        };
        Self::new(source, target, FunctionElement::t(source), None, presentation, 2)
    }

    /// Builds and verifies a cover.
    pub fn new(
        source: &Arc<CurveLevel>,
        target: &Arc<CurveLevel>,
        t_img: FunctionElement,
        x_img: Option<FunctionElement>,
        presentation: Presentation,
        declared_degree: usize,
    ) -> Result<Self> {
        let c = CoverMap {
            source: source.clone(),
            target: target.clone(),
            t_img,
            x_img,
            presentation,
        };
        c.verify(declared_degree)?;
        Ok(c)
    }

    /// Parses the formulas and presentation from strings: `t_img`, `x_img`
    /// are expressions on the source; `minpoly` and the inverse formulas are
    /// polynomials in `Y` over target expressions.
    pub fn from_strings(
        source: &Arc<CurveLevel>,
        target: &Arc<CurveLevel>,
        t_img: &str,
        x_img: Option<&str>,
        generator: &str,
        minpoly: &str,
        inverse_t: &str,
        inverse_x: &str,
        declared_degree: usize,
    ) -> Result<Self> {
        let t_img = FunctionElement::parse(source, t_img)?;
        let x_img = x_img.map(|s| FunctionElement::parse(source, s)).transpose()?;
        let generator = FunctionElement::parse(source, generator)?;
        let field = target.field();
        let gname = (!field.is_rationals()).then(|| field.generator_name());
        let one = FunctionElement::constant(target, target.one());
        let gen = FunctionElement::constant(target, K::generator(field));
        let tt = FunctionElement::t(target);
        let xt = if target.is_base() {
            one.clone()
        } else {
            FunctionElement::x(target)?
        };
        let poly = |s: &str| expr::parse(s, gname)?.to_poly_in_y(&one, &gen, &tt, &xt);
        let presentation = Presentation {
            generator,
            minpoly: poly(minpoly)?,
            t: poly(inverse_t)?,
            x: poly(inverse_x)?,
        };
        Self::new(source, target, t_img, x_img, presentation, declared_degree)
    }

    pub fn source(&self) -> &Arc<CurveLevel> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CurveLevel> {
        &self.target
    }

    pub fn degree(&self) -> usize {
        self.presentation.minpoly.deg()
    }

    pub fn formulas(&self) -> (&FunctionElement, Option<&FunctionElement>) {
        (&self.t_img, self.x_img.as_ref())
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn verify(&self, declared: usize) -> Result<()> {
        let bad = |r: String| invalid(&self.source, &self.target, &r);
        if self.t_img.level().id() != self.source.id()
            || self.x_img.as_ref().is_some_and(|x| x.level().id() != self.source.id())
        {
            return Err(bad("formulas must be functions on the source".into()));
        }
        if !self.t_img.is_regular() || self.x_img.as_ref().is_some_and(|x| !x.is_regular()) {
            return Err(bad("formulas must be regular on the source".into()));
        }
        match (self.target.q(), &self.x_img) {
            (None, None) => {}
            (Some(q), Some(x)) => {
                let lhs = x.mul_ref(x);
                let rhs = FunctionElement::from_t_poly(&self.target, q.clone()).substitute(&self.t_img, None)?;
                if lhs != rhs {
                    return Err(bad("formulas do not satisfy the target equation".into()));
                }
            }
            (None, Some(_)) => return Err(bad("the base line has no x coordinate".into())),
            (Some(_), None) => return Err(bad("a formula for the target x is required".into())),
        }
        let p = &self.presentation;
        let n = p.minpoly.deg();
        if n == 0 || !p.minpoly.is_monic() {
            return Err(bad("the minimal polynomial must be monic of positive degree".into()));
        }
        if n != declared {
            return Err(bad(format!(
                "declared degree {declared} but the presentation has degree {n}"
            )));
        }
        let y = &p.generator;
        let at_y = |poly: &Poly| -> Result<FunctionElement> {
            let mut acc = y.zero_like();
            for c in poly.coeffs().iter().rev() {
                acc = acc.mul_ref(y).add_ref(&self.pull_function(c)?);
            }
            Ok(acc)
        };
        if !at_y(&p.minpoly)?.is_zero() {
            return Err(bad("the generator does not satisfy its minimal polynomial".into()));
        }
        if at_y(&p.t)? != FunctionElement::t(&self.source) {
            return Err(bad("the inverse formula for t does not recover t".into()));
        }
        if !self.source.is_base() && at_y(&p.x)? != FunctionElement::x(&self.source)? {
            return Err(bad("the inverse formula for x does not recover x".into()));
        }
        if n > 1 && !self.certify_irreducible()? {
            return Err(bad(format!(
                "could not certify that the minimal polynomial {} is irreducible",
                p.minpoly.display_with("Y")
            )));
        }
        Ok(())
    }

    /// `m(Y)` is irreducible over `k(C_i)` if its specialization at some
    /// rational point where the coefficients are regular is irreducible over
    /// the working field (the local ring at a smooth point is integrally
    /// closed, so a factorization would specialize).
    fn certify_irreducible(&self) -> Result<bool> {
        let level = &self.target;
        let theta = K::generator(level.field());
        let mut tvals: Vec<K> = (-20..=20).map(|k| level.num(k)).collect();
        if !level.field().is_rationals() {
            for a in -4..=4 {
                for b in (-4..=4).filter(|&b| b != 0) {
                    tvals.push(level.num(a).add_ref(&theta.mul_ref(&level.num(b))));
                }
            }
        }
        for tv in tvals {
            let pts = match level.points_above(&tv) {
                Ok(p) => p,
                Err(Error::FiberNotRational { .. }) => continue,
                Err(e) => return Err(e),
            };
            for pt in pts {
                let spec: Option<Vec<K>> = self
                    .presentation
                    .minpoly
                    .coeffs()
                    .iter()
                    .map(|c| c.eval_at(&pt))
                    .collect();
                let Some(spec) = spec else { continue };
                let sp = UniPoly::new(spec);
                if sp.deg() == self.degree() && crate::exact::factor_unipoly(&sp).is_irreducible() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// `m(Y)` specialized at a target point, when its coefficients are
    /// regular there.
    pub fn specialized_minpoly(&self, p: &Point) -> Result<Option<UniPoly<K>>> {
        self.check_target(p.level())?;
        let spec: Option<Vec<K>> = self
            .presentation
            .minpoly
            .coeffs()
            .iter()
            .map(|c| c.eval_at(p))
            .collect();
        Ok(spec.map(UniPoly::new))
    }

    /// Number of closed points above `p`: the rational points of the fiber
    /// when it is rational, otherwise the irreducible factors of the
    /// specialized `m(Y)` when that is squarefree of full degree.
    pub fn closed_fiber_size(&self, p: &Point) -> Result<usize> {
        match self.fiber(p) {
            Ok(f) => Ok(f.len()),
            Err(e @ Error::FiberNotRational { .. }) => match self.specialized_minpoly(p)? {
                Some(sp) if sp.deg() == self.degree() && sp.is_squarefree() => {
                    Ok(crate::exact::factor_unipoly(&sp).factors.len())
                }
                _ => Err(e),
            },
            Err(e) => Err(e),
        }
    }

    /// `g o p` for a function `g` on the target.
    pub fn pull_function(&self, g: &FunctionElement) -> Result<FunctionElement> {
        if g.level().id() != self.target.id() {
            return Err(mismatch(&self.target, g.level()));
        }
        g.substitute(&self.t_img, self.x_img.as_ref())
    }

    /// `p(q)` for a source point.
    pub fn image(&self, q: &Point) -> Result<Point> {
        if q.level() != self.source.id() {
            return Err(Error::LevelMismatch {
                expected: self.source.id().into(),
                found: q.level().into(),
            });
        }
        let t = self.t_img.eval_at(q).expect("formulas are regular");
        let x = self.x_img.as_ref().map(|f| f.eval_at(q).expect("formulas are regular"));
        self.target.point(t, x)
    }

    /// All source points above `p` with their ramification degrees.
    pub fn fiber(&self, p: &Point) -> Result<Vec<(Point, u32)>> {
        if p.level() != self.target.id() {
            return Err(Error::LevelMismatch {
                expected: self.target.id().into(),
                found: p.level().into(),
            });
        }
        let s = &self.source;
        let q_s = s.q().cloned().unwrap_or_else(UniPoly::zero);
        // A + B x = 0 with A = a - c d, B = b, for the coordinate value c
        let eqn = |f: &FunctionElement, c: &K| {
            let a = f.numerator_t().sub(&f.denominator().scale(c));
            (a, f.numerator_x().clone())
        };
        let (a1, b1) = eqn(&self.t_img, p.t());
        let mut g = a1.mul(&a1).sub(&b1.mul(&b1).mul(&q_s));
        if let (Some(xf), Some(xv)) = (&self.x_img, p.x()) {
            let (a2, b2) = eqn(xf, xv);
            let r2 = a2.mul(&a2).sub(&b2.mul(&b2).mul(&q_s));
            let cross = a1.mul(&b2).sub(&a2.mul(&b1));
            g = g.gcd(&r2).gcd(&cross);
        }
        if g.is_zero() {
            return Err(invalid(s, &self.target, "formulas are constant"));
        }
        let mut out = Vec::new();
        let u = uniformizer(&self.target, p)?;
        let pulled_u = self.pull_function(&u)?;
        for (tau, _) in rational_roots(&g)? {
            let cands = if s.is_base() {
                vec![s.base_point(tau.clone())?]
            } else {
                s.points_above(&tau)?
            };
            for q in cands {
                if &self.image(&q)? == p {
                    let r = valuation(&pulled_u, &q)?;
                    out.push((q, r as u32));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// `p^*(d)(q) = r(q) d(p(q))`.
    pub fn pullback_div(&self, d: &Divisor) -> Result<Divisor> {
        self.check_target(d.level())?;
        let mut out = Divisor::zero(self.source.id());
        for (p, m) in d.iter() {
            for (q, r) in self.fiber(p)? {
                out.add_at(q, m * r as i64);
            }
        }
        Ok(out)
    }

    /// `p_*(e)(p) = sum_{p(q) = p} e(q)`.
    pub fn pushforward_div(&self, e: &Divisor) -> Result<Divisor> {
        if e.level() != self.source.id() {
            return Err(Error::LevelMismatch {
                expected: self.source.id().into(),
                found: e.level().into(),
            });
        }
        let mut out = Divisor::zero(self.target.id());
        for (q, m) in e.iter() {
            out.add_at(self.image(q)?, m);
        }
        Ok(out)
    }

    /// The full preimage of a set of target points.
    pub fn pullback_support(&self, b: &SupportSet) -> Result<SupportSet> {
        self.check_target(b.level())?;
        let mut pts = Vec::new();
        for p in b.iter() {
            pts.extend(self.fiber(p)?.into_iter().map(|(q, _)| q));
        }
        SupportSet::from_points(self.source.id(), pts)
    }

    /// `N(f)`: the determinant of multiplication by `f` on the basis
    /// `1, Y, ..., Y^{n-1}`, which is the resultant `Res_Y(m, f(Y))`.
    pub fn norm(&self, f: &FunctionElement) -> Result<FunctionElement> {
        if f.level().id() != self.source.id() {
            return Err(mismatch(&self.source, f.level()));
        }
        if f.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let p = &self.presentation;
        let one = FunctionElement::constant(&self.target, self.target.one());
        let lift = |c: &UniPoly<K>| -> Poly {
            let mut acc = Poly::zero();
            for k in c.coeffs().iter().rev() {
                acc = acc
                    .mul(&p.t)
                    .add(&Poly::constant(FunctionElement::constant(&self.target, k.clone())));
            }
            acc.rem(&p.minpoly)
        };
        let num = lift(f.numerator_t())
            .add(&lift(f.numerator_x()).mul(&p.x))
            .rem(&p.minpoly);
        let den = lift(f.denominator());
        let n = self.norm_poly(&num, &one);
        let d = self.norm_poly(&den, &one);
        n.div_ref(&d).ok_or(Error::DivisionByZero)
    }

    fn norm_poly(&self, a: &Poly, one: &FunctionElement) -> FunctionElement {
        let m = &self.presentation.minpoly;
        let n = m.deg();
        let zero = one.zero_like();
        let mut cols = Vec::with_capacity(n);
        let mut cur = a.rem(m);
        for _ in 0..n {
            cols.push((0..n).map(|i| cur.coeff_or(i, &zero)).collect::<Vec<_>>());
            cur = cur.shift(1).rem(m);
        }
        let rows: Vec<Vec<FunctionElement>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        linalg::determinant(&rows, one)
    }

    fn check_target(&self, level: &str) -> Result<()> {
        if level != self.target.id() {
            return Err(Error::LevelMismatch {
                expected: self.target.id().into(),
                found: level.into(),
            });
        }
        Ok(())
    }
}

fn invalid(s: &CurveLevel, t: &CurveLevel, reason: &str) -> Error {
    Error::InvalidCover {
        source_level: s.id().into(),
        target_level: t.id().into(),
        reason: reason.into(),
    }
}

fn mismatch(expected: &CurveLevel, found: &CurveLevel) -> Error {
    Error::LevelMismatch {
        expected: expected.id().into(),
        found: found.id().into(),
    }
}

/// A composite cover `C_{j_0} -> C_{j_1} -> ... -> C_{j_k}`, composed
/// explicitly from its steps (first map has the top level as source).
#[derive(Clone, Debug)]
pub struct CoverChain {
    maps: Vec<Arc<CoverMap>>,
}

impl CoverChain {
    pub fn new(maps: Vec<Arc<CoverMap>>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Precondition("a cover chain needs at least one map".into()));
        }
        for w in maps.windows(2) {
            if w[0].target().id() != w[1].source().id() {
                return Err(invalid(w[0].source(), w[1].target(), "steps do not compose"));
            }
        }
        Ok(CoverChain { maps })
    }

    pub fn source(&self) -> &Arc<CurveLevel> {
        self.maps[0].source()
    }

    pub fn target(&self) -> &Arc<CurveLevel> {
        self.maps.last().unwrap().target()
    }

    pub fn maps(&self) -> &[Arc<CoverMap>] {
        &self.maps
    }

    pub fn degree(&self) -> usize {
        self.maps.iter().map(|m| m.degree()).product()
    }

    pub fn image(&self, q: &Point) -> Result<Point> {
        self.maps.iter().try_fold(q.clone(), |p, m| m.image(&p))
    }

    pub fn fiber(&self, p: &Point) -> Result<Vec<(Point, u32)>> {
        let mut cur = vec![(p.clone(), 1u32)];
        for m in self.maps.iter().rev() {
            let mut next = Vec::new();
            for (pt, r) in cur {
                for (q, s) in m.fiber(&pt)? {
                    next.push((q, r * s));
                }
            }
            cur = next;
        }
        cur.sort();
        Ok(cur)
    }

    pub fn pullback_div(&self, d: &Divisor) -> Result<Divisor> {
        self.maps
            .iter()
            .rev()
            .try_fold(d.clone(), |acc, m| m.pullback_div(&acc))
    }

    pub fn pushforward_div(&self, e: &Divisor) -> Result<Divisor> {
        self.maps.iter().try_fold(e.clone(), |acc, m| m.pushforward_div(&acc))
    }

    pub fn pullback_support(&self, b: &SupportSet) -> Result<SupportSet> {
        self.maps
            .iter()
            .rev()
            .try_fold(b.clone(), |acc, m| m.pullback_support(&acc))
    }

    pub fn norm(&self, f: &FunctionElement) -> Result<FunctionElement> {
        self.maps.iter().try_fold(f.clone(), |acc, m| m.norm(&acc))
    }

    pub fn pull_function(&self, g: &FunctionElement) -> Result<FunctionElement> {
        self.maps
            .iter()
            .rev()
            .try_fold(g.clone(), |acc, m| m.pull_function(&acc))
    }
}

/// What the rest of the library needs from a cover, single or composite.
pub trait Cover {
    fn source(&self) -> &Arc<CurveLevel>;
    fn target(&self) -> &Arc<CurveLevel>;
    fn degree(&self) -> usize;
    fn image(&self, q: &Point) -> Result<Point>;
    fn fiber(&self, p: &Point) -> Result<Vec<(Point, u32)>>;
    fn pullback_div(&self, d: &Divisor) -> Result<Divisor>;
    fn pushforward_div(&self, e: &Divisor) -> Result<Divisor>;
    fn pullback_support(&self, b: &SupportSet) -> Result<SupportSet>;
    fn norm(&self, f: &FunctionElement) -> Result<FunctionElement>;
    fn pull_function(&self, g: &FunctionElement) -> Result<FunctionElement>;
}

macro_rules! delegate_cover {
    ($ty:ty) => {
        impl Cover for $ty {
            fn source(&self) -> &Arc<CurveLevel> {
                <$ty>::source(self)
            }
            fn target(&self) -> &Arc<CurveLevel> {
                <$ty>::target(self)
            }
            fn degree(&self) -> usize {
                <$ty>::degree(self)
            }
            fn image(&self, q: &Point) -> Result<Point> {
                <$ty>::image(self, q)
            }
            fn fiber(&self, p: &Point) -> Result<Vec<(Point, u32)>> {
                <$ty>::fiber(self, p)
            }
            fn pullback_div(&self, d: &Divisor) -> Result<Divisor> {
                <$ty>::pullback_div(self, d)
            }
            fn pushforward_div(&self, e: &Divisor) -> Result<Divisor> {
                <$ty>::pushforward_div(self, e)
            }
            fn pullback_support(&self, b: &SupportSet) -> Result<SupportSet> {
                <$ty>::pullback_support(self, b)
            }
            fn norm(&self, f: &FunctionElement) -> Result<FunctionElement> {
                <$ty>::norm(self, f)
            }
            fn pull_function(&self, g: &FunctionElement) -> Result<FunctionElement> {
                <$ty>::pull_function(self, g)
            }
        }
    };
}

delegate_cover!(CoverMap);
delegate_cover!(CoverChain);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::principal_divisor;
    use crate::exact::{expr::parse_bipoly, NumberField};

    fn setup(eq: &str) -> (Arc<CurveLevel>, Arc<CurveLevel>, CoverMap) {
        let q = NumberField::rationals();
        let l = CurveLevel::base("L", &q);
        let e = CurveLevel::plane("E", &q, &parse_bipoly(eq, &q).unwrap(), Some("L".into())).unwrap();
        let c = CoverMap::projection(&e, &l).unwrap();
        (l, e, c)
    }

    #[test]
    fn ramified_and_split_fibers() {
        let (l, e, c) = setup("x^2 = t^3 - t");
        let d = Divisor::parse(&l, "{t=0:1}").unwrap();
        let up = c.pullback_div(&d).unwrap();
        assert_eq!(up, Divisor::parse(&e, "{(0,0):2}").unwrap());
        assert_eq!(c.pushforward_div(&up).unwrap(), d.scale(2));
        assert!(c.pullback_div(&Divisor::zero("L")).unwrap().is_zero());

        let (l, e, c) = setup("x^2 = t^3 - 2");
        let d = Divisor::parse(&l, "{t=3:1}").unwrap();
        assert_eq!(
            c.pullback_div(&d).unwrap(),
            Divisor::parse(&e, "{(3,5):1, (3,-5):1}").unwrap()
        );
        let e2 = Divisor::parse(&e, "{(3,5):1, (3,-5):-1}").unwrap();
        assert!(c.pushforward_div(&e2).unwrap().is_zero());
        let s = c.pullback_support(&d.support()).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn norms() {
        let (l, e, c) = setup("x^2 = t^3 - t");
        let x = FunctionElement::x(&e).unwrap();
        assert_eq!(c.norm(&x).unwrap(), FunctionElement::parse(&l, "-(t^3 - t)").unwrap());
        let f = FunctionElement::parse(&e, "x - 1").unwrap();
        let nf = c.norm(&f).unwrap();
        assert_eq!(nf, FunctionElement::parse(&l, "1 - (t^3 - t)").unwrap());
        let g = FunctionElement::parse(&l, "t^2 - 4").unwrap();
        assert_eq!(c.norm(&c.pull_function(&g).unwrap()).unwrap(), g.mul_ref(&g));
        // pushforward of (x) equals (N x)
        let px = principal_divisor(&x).unwrap();
        assert_eq!(
            c.pushforward_div(&px).unwrap(),
            principal_divisor(&c.norm(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn second_story_cover() {
        let k = NumberField::new("i", crate::exact::expr::parse_rational_poly("i^2 + 1", "i").unwrap()).unwrap();
        let e = CurveLevel::plane("E", &k, &parse_bipoly("x^2 = t^3 - t", &k).unwrap(), Some("L".into())).unwrap();
        let s = CurveLevel::plane("S", &k, &parse_bipoly("x^2 = t^4 - 1", &k).unwrap(), Some("E".into())).unwrap();
        let c = CoverMap::from_strings(&s, &e, "t^2", Some("t*x"), "t", "Y^2 - t", "Y", "x*Y/t", 2).unwrap();
        let origin = e.point_q(0, 0).unwrap();
        let fib = c.fiber(&origin).unwrap();
        assert_eq!(fib.len(), 2);
        assert!(fib.iter().all(|(_, r)| *r == 1));
        // a wrong degree or a wrong inverse is rejected
        assert!(CoverMap::from_strings(&s, &e, "t^2", Some("t*x"), "t", "Y^2 - t", "Y", "x*Y/t", 3).is_err());
        assert!(CoverMap::from_strings(&s, &e, "t^2", Some("t*x"), "t", "Y^2 - t", "Y", "x", 2).is_err());
        assert!(CoverMap::from_strings(&s, &e, "t^2", Some("x"), "t", "Y^2 - t", "Y", "x*Y/t", 2).is_err());
        let x = FunctionElement::x(&s).unwrap();
        let nx = c.norm(&x).unwrap();
        assert_eq!(
            c.pushforward_div(&principal_divisor(&x).unwrap()).unwrap(),
            principal_divisor(&nx).unwrap()
        );
    }
}
