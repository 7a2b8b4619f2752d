//! Divisors on a single level: finite-support integer maps on affine points,
//! with the lattice operations, supports, principal divisors and `alpha`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::curve::{valuation, CurveLevel, FunctionElement, Point, K};
use crate::error::{Error, Result};
use crate::exact::{expr, factor_unipoly, Scalar, UniPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    level: String,
    entries: BTreeMap<Point, i64>,
}

/// Finite set of points of one level.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    level: String,
    points: BTreeSet<Point>,
}

fn mismatch(a: &str, b: &str) -> Error {
    Error::LevelMismatch {
        expected: a.into(),
        found: b.into(),
    }
}

impl Divisor {
    pub fn zero(level: impl Into<String>) -> Self {
        Divisor {
            level: level.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(level: impl Into<String>, entries: impl IntoIterator<Item = (Point, i64)>) -> Result<Self> {
        let mut d = Self::zero(level);
        for (p, m) in entries {
            if p.level() != d.level {
                return Err(mismatch(&d.level, p.level()));
            }
            d.add_at(p, m);
        }
        Ok(d)
    }

    pub fn point(p: &Point, m: i64) -> Self {
        let mut d = Self::zero(p.level());
        d.add_at(p.clone(), m);
        d
    }

    pub fn level(&self) -> &str {
        &self.level
    }

    pub fn add_at(&mut self, p: Point, m: i64) {
        debug_assert_eq!(p.level(), self.level);
        let e = self.entries.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.retain(|_, v| *v != 0);
        }
    }

    pub fn get(&self, p: &Point) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.entries.iter().map(|(p, m)| (p, *m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if self.level != rhs.level {
            return Err(mismatch(&self.level, &rhs.level));
        }
        let keys: BTreeSet<&Point> = self.entries.keys().chain(rhs.entries.keys()).collect();
        let entries = keys
            .into_iter()
            .filter_map(|p| {
                let v = f(self.get(p), rhs.get(p));
                (v != 0).then(|| (p.clone(), v))
            })
            .collect();
        Ok(Divisor {
            level: self.level.clone(),
            entries,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, n: i64) -> Self {
        Divisor {
            level: self.level.clone(),
            entries: if n == 0 {
                BTreeMap::new()
            } else {
                self.entries.iter().map(|(p, m)| (p.clone(), m * n)).collect()
            },
        }
    }

    /// Lattice meet (pointwise minimum, absent points count as 0).
    pub fn min(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, i64::min)
    }

    /// Lattice join.
    pub fn max(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, i64::max)
    }

    /// `max(d, 0)`.
    pub fn positive_part(&self) -> Self {
        self.filter(|m| m > 0)
    }

    /// `max(-d, 0)`, so that `d = d+ - d-`.
    pub fn negative_part(&self) -> Self {
        self.filter(|m| m < 0).neg()
    }

    fn filter(&self, keep: impl Fn(i64) -> bool) -> Self {
        Divisor {
            level: self.level.clone(),
            entries: self
                .entries
                .iter()
                .filter(|(_, &m)| keep(m))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    /// `self <= rhs` pointwise.
    pub fn le(&self, rhs: &Self) -> bool {
        self.level == rhs.level && rhs.sub(self).unwrap().entries.values().all(|&m| m >= 0)
    }

    pub fn support(&self) -> SupportSet {
        SupportSet {
            level: self.level.clone(),
            points: self.entries.keys().cloned().collect(),
        }
    }

    /// Parses `level: {(t,x):m, ...}`; the level prefix is optional but must
    /// name `level` when present. Base-line keys are `t=c`, `(c)` or `c`.
    pub fn parse(level: &Arc<CurveLevel>, s: &str) -> Result<Self> {
        let (body, offset) = match s.find('{') {
            Some(open) => {
                let prefix = s[..open].trim().trim_end_matches(':').trim();
                if !prefix.is_empty() && prefix != level.id() {
                    return Err(Error::parse_at(
                        1,
                        format!("divisor is for level `{prefix}`, expected `{}`", level.id()),
                    ));
                }
                let close = s
                    .rfind('}')
                    .ok_or_else(|| Error::parse_at(s.chars().count() + 1, "expected `}`"))?;
                if !s[close + 1..].trim().is_empty() {
                    return Err(Error::parse_at(close + 2, "trailing input after `}`"));
                }
                (&s[open + 1..close], open + 1)
            }
            None => return Err(Error::parse_at(1, "expected `{`")),
        };
        let mut d = Divisor::zero(level.id());
        for (start, entry) in split_top_level(body) {
            let col = offset + start + 1;
            if entry.trim().is_empty() {
                continue;
            }
            let colon = entry
                .rfind(':')
                .ok_or_else(|| Error::parse_at(col, "expected `point:multiplicity`"))?;
            let mult: i64 = entry[colon + 1..]
                .trim()
                .parse()
                .map_err(|_| Error::parse_at(col + colon + 1, "multiplicity must be an integer"))?;
            let p = parse_point(level, &entry[..colon]).map_err(|e| relocate(e, col))?;
            d.add_at(p, mult);
        }
        Ok(d)
    }
}

fn relocate(e: Error, col: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column: column + col - 1,
            message,
        },
        Error::NotOnCurve { level, point } => Error::Parse {
            line: 1,
            column: col,
            message: format!("point {point} does not lie on level `{level}`"),
        },
        other => other,
    }
}

/// Splits at commas outside parentheses, with byte offsets.
fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parses `(t, x)`, `(t)`, `t=c` or `c` as a point of `level`.
pub fn parse_point(level: &Arc<CurveLevel>, s: &str) -> Result<Point> {
    let field = level.field();
    let trimmed = s.trim();
    let lead = s.len() - s.trim_start().len();
    let inner = if let Some(rest) = trimmed.strip_prefix("t=") {
        rest
    } else if trimmed.starts_with('(') && trimmed.ends_with(')') {
        &trimmed[1..trimmed.len() - 1]
    } else {
        trimmed
    };
    let inner_off = lead + (trimmed.len() - inner.len()).min(if trimmed.starts_with('(') { 1 } else { 2 });
    let parts = split_top_level(inner);
    let num = |(o, p): (usize, &str)| expr::parse_number(p, field).map_err(|e| relocate(e, inner_off + o + 1));
    match (level.is_base(), parts.len()) {
        (true, 1) => level.point(num(parts[0])?, None),
        (false, 2) => level.point(num(parts[0])?, Some(num(parts[1])?)),
        _ => Err(Error::parse_at(
            lead + 1,
            format!(
                "expected {} coordinate(s) for level `{}`",
                if level.is_base() { 1 } else { 2 },
                level.id()
            ),
        )),
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{", self.level)?;
        for (i, (p, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}:{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl SupportSet {
    pub fn empty(level: impl Into<String>) -> Self {
        SupportSet {
            level: level.into(),
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(level: impl Into<String>, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut s = Self::empty(level);
        for p in points {
            if p.level() != s.level {
                return Err(mismatch(&s.level, p.level()));
            }
            s.points.insert(p);
        }
        Ok(s)
    }

    pub fn level(&self) -> &str {
        &self.level
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.level == other.level && self.points.is_subset(&other.points)
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&BTreeSet<Point>, &BTreeSet<Point>) -> BTreeSet<Point>) -> Result<Self> {
        if self.level != rhs.level {
            return Err(mismatch(&self.level, &rhs.level));
        }
        Ok(SupportSet {
            level: self.level.clone(),
            points: f(&self.points, &rhs.points),
        })
    }

    pub fn union(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, |a, b| a.union(b).cloned().collect())
    }

    pub fn intersection(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, |a, b| a.intersection(b).cloned().collect())
    }

    pub fn difference(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, |a, b| a.difference(b).cloned().collect())
    }

    /// The reduced divisor `sum p`.
    pub fn to_divisor(&self) -> Divisor {
        Divisor {
            level: self.level.clone(),
            entries: self.points.iter().map(|p| (p.clone(), 1)).collect(),
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{", self.level)?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Distinct roots of `p` in the working field; any irreducible factor of
/// higher degree is reported as `FiberNotRational` in `t`.
pub(crate) fn rational_roots(p: &UniPoly<K>) -> Result<Vec<(K, usize)>> {
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let fac = factor_unipoly(p);
    let mut out = Vec::new();
    for (g, m) in fac.factors {
        if g.deg() > 1 {
            return Err(Error::FiberNotRational {
                variable: 't',
                polynomial: g.display_with("t").to_string(),
            });
        }
        out.push((g.coeffs()[0].neg_ref(), m));
    }
    out.sort();
    Ok(out)
}

/// The affine divisor `p -> v_p(f)`.
pub fn principal_divisor(f: &FunctionElement) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let level = f.level();
    let mut d = Divisor::zero(level.id());
    if level.is_base() {
        for (r, m) in rational_roots(f.numerator_t())? {
            d.add_at(level.base_point(r)?, m as i64);
        }
        for (r, m) in rational_roots(f.denominator())? {
            d.add_at(level.base_point(r)?, -(m as i64));
        }
        return Ok(d);
    }
    let (n, _) = f.norm_parts();
    // zeros and poles lie above roots of the norm numerator or of d
    let cand = n.mul(f.denominator()).squarefree_part();
    for (tau, _) in rational_roots(&cand)? {
        for p in level.points_above(&tau)? {
            let v = valuation(f, &p)?;
            if v != 0 {
                d.add_at(p, v);
            }
        }
    }
    Ok(d)
}

/// `p -> min(v_p(a), v_p(b))` for nonzero regular `a`, `b`.
///
/// Only common zeros matter, and these lie above roots of
/// `gcd(N(a), N(b), a1 b2 - a2 b1)` where `a = a1 + b1 x`, `b = a2 + b2 x`.
pub fn alpha(a: &FunctionElement, b: &FunctionElement) -> Result<Divisor> {
    if a.level().id() != b.level().id() {
        return Err(mismatch(a.level().id(), b.level().id()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if !a.is_regular() || !b.is_regular() {
        return Err(Error::NotRegular);
    }
    let level = a.level();
    let mut d = Divisor::zero(level.id());
    if level.is_base() {
        let g = a.numerator_t().gcd(b.numerator_t());
        for (r, m) in rational_roots(&g)? {
            d.add_at(level.base_point(r)?, m as i64);
        }
        return Ok(d);
    }
    let (na, _) = a.norm_parts();
    let (nb, _) = b.norm_parts();
    let cross = a
        .numerator_t()
        .mul(b.numerator_x())
        .sub(&b.numerator_t().mul(a.numerator_x()));
    let g = na.gcd(&nb).gcd(&cross);
    for (tau, _) in rational_roots(&g)? {
        for p in level.points_above(&tau)? {
            let v = valuation(a, &p)?.min(valuation(b, &p)?);
            if v > 0 {
                d.add_at(p, v);
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveLevel;
    use crate::exact::{expr::parse_bipoly, NumberField};

    fn e(eq: &str) -> Arc<CurveLevel> {
        let q = NumberField::rationals();
        CurveLevel::plane("E", &q, &parse_bipoly(eq, &q).unwrap(), Some("L".into())).unwrap()
    }

    #[test]
    fn lattice_operations() {
        let l = CurveLevel::base("L", &NumberField::rationals());
        let p = l.base_point(l.num(0)).unwrap();
        let q = l.base_point(l.num(1)).unwrap();
        let d = Divisor::from_entries("L", [(p.clone(), 2), (q.clone(), 1)]).unwrap();
        let e = Divisor::point(&p, 1);
        assert_eq!(d.min(&e).unwrap(), e);
        assert!(d.add(&d.neg()).unwrap().is_zero());
        let m = Divisor::from_entries("L", [(p.clone(), 2), (q.clone(), -3)]).unwrap();
        assert_eq!(m.positive_part().sub(&m.negative_part()).unwrap(), m);
        assert_eq!(m.support().len(), 2);
        assert!(Divisor::zero("L").support().is_empty());
    }

    #[test]
    fn principal_divisors() {
        let l = CurveLevel::base("L", &NumberField::rationals());
        let f = FunctionElement::parse(&l, "t^2 - 1").unwrap();
        assert_eq!(
            principal_divisor(&f).unwrap(),
            Divisor::parse(&l, "{t=1:1, t=-1:1}").unwrap()
        );

        let c = e("x^2 = t^3 - t");
        let x = FunctionElement::x(&c).unwrap();
        assert_eq!(
            principal_divisor(&x).unwrap(),
            Divisor::parse(&c, "E: {(0,0):1, (1,0):1, (-1,0):1}").unwrap()
        );
        let t = FunctionElement::t(&c);
        assert_eq!(principal_divisor(&t).unwrap(), Divisor::parse(&c, "{(0,0):2}").unwrap());
        let g = FunctionElement::parse(&c, "(t - 2)").unwrap();
        assert!(matches!(
            principal_divisor(&g),
            Err(Error::FiberNotRational { variable: 'x', .. })
        ));
        let h = FunctionElement::parse(&c, "t^2 + 1").unwrap();
        assert!(matches!(
            principal_divisor(&h),
            Err(Error::FiberNotRational { variable: 't', .. })
        ));
    }

    #[test]
    fn alpha_examples() {
        let c = e("x^2 = t^3 - t");
        let x = FunctionElement::x(&c).unwrap();
        let t = FunctionElement::t(&c);
        assert_eq!(alpha(&x, &t).unwrap(), Divisor::parse(&c, "{(0,0):1}").unwrap());
        assert_eq!(alpha(&x, &x).unwrap(), principal_divisor(&x).unwrap());
        let l = CurveLevel::base("L", &NumberField::rationals());
        let a = FunctionElement::parse(&l, "t").unwrap();
        let b = FunctionElement::parse(&l, "t - 1").unwrap();
        assert!(alpha(&a, &b).unwrap().is_zero());
        // t - 2 has non-rational zeros but no common zero with x
        let g = FunctionElement::parse(&c, "t - 2").unwrap();
        assert!(alpha(&x, &g).unwrap().is_zero());
    }

    #[test]
    fn literal_errors_have_columns() {
        let c = e("x^2 = t^3 - t");
        match Divisor::parse(&c, "{(0,0):1, (2,1):1}") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 10),
            other => panic!("{other:?}"),
        }
        match Divisor::parse(&c, "{(0,0):one}") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 8),
            other => panic!("{other:?}"),
        }
        let d = Divisor::parse(&c, "{(1,0):2, (-1,0):-1}").unwrap();
        assert_eq!(Divisor::parse(&c, &d.to_string()).unwrap(), d);
    }
}
