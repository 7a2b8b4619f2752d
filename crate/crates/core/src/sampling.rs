//! Seeded sampling of points, divisors and functions on a tower.
//!
//! Random instances are drawn from per-level pools of points whose
//! coordinates lie in the working field, so that every fiber and divisor the
//! checkers need stays rational.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{Cover, CoverMap};
use crate::curve::{CurveLevel, FunctionElement, Point, K};
use crate::divisor::{principal_divisor, Divisor};
use crate::error::Result;
use crate::exact::rational;
use crate::exact::Scalar;
use crate::pic::{EllipticCurve, GroupPoint};
use crate::tower::Tower;

/// Largest pool kept per level.
pub const POOL_CAP: usize = 48;
/// Points whose coordinates exceed this height are not added by closure.
pub const POOL_HEIGHT: u64 = 1_000_000;

/// Naive height: the largest numerator or denominator among all rational
/// coordinates of all point coordinates.
pub fn point_height(p: &Point) -> BigInt {
    p.coords()
        .iter()
        .flat_map(|c| c.coords().iter().map(rational::height).collect::<Vec<_>>())
        .max()
        .unwrap_or_default()
}

/// Deterministic generator for one named stream under a seed.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: &str) -> Self {
        // FNV-1a, so that streams are independent of each other and of
        // the standard library's hasher
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in stream.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ h),
        }
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn nonzero(&mut self, bound: i64) -> i64 {
        let v = self.rng.gen_range(1..=bound);
        if self.rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        xs.choose(&mut self.rng).expect("nonempty choice")
    }

    /// Between `min` and `max` distinct elements, in pool order.
    pub fn subset<T: Clone>(&mut self, xs: &[T], min: usize, max: usize) -> Vec<T> {
        let max = max.min(xs.len());
        let k = self.rng.gen_range(min.min(max)..=max);
        let mut idx: Vec<usize> = rand::seq::index::sample(&mut self.rng, xs.len(), k).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| xs[i].clone()).collect()
    }

    /// A divisor with support of size 1 to `max_support` in `points` and
    /// multiplicities in `1..=max_mult`, negated at random unless
    /// `effective`.
    pub fn divisor(
        &mut self,
        level: &str,
        points: &[Point],
        max_support: usize,
        max_mult: i64,
        effective: bool,
    ) -> Divisor {
        let mut d = Divisor::zero(level);
        for p in self.subset(points, 1, max_support) {
            let m = if effective {
                self.range(1, max_mult)
            } else {
                self.nonzero(max_mult)
            };
            d.add_at(p, m);
        }
        d
    }

    /// A product of 1 to `max_factors` atoms times a small constant.
    pub fn function(&mut self, atoms: &[FunctionElement], max_factors: usize) -> FunctionElement {
        let k = self.range(1, max_factors as i64) as usize;
        let first = self.pick(atoms).clone();
        let c = self.nonzero(3);
        let mut f = first.mul_ref(&first.from_i64_like(c));
        for _ in 1..k {
            f = f.mul_ref(self.pick(atoms));
        }
        f
    }
}

/// Per-level point pools for a tower.
pub struct Pools {
    by_level: BTreeMap<String, Vec<Point>>,
}

impl Pools {
    pub fn build(tower: &Tower) -> Result<Self> {
        let mut sets: BTreeMap<String, BTreeSet<Point>> = tower
            .levels
            .iter()
            .map(|l| (l.id().to_string(), BTreeSet::new()))
            .collect();
        for p in tower.points.values() {
            sets.get_mut(p.level()).unwrap().insert(p.clone());
        }
        for l in tower.levels.iter().filter(|l| l.is_base()) {
            let s = sets.get_mut(l.id()).unwrap();
            for c in -3..=3 {
                s.insert(l.base_point(l.num(c))?);
            }
        }
        for _ in 0..2 {
            for l in &tower.levels {
                if l.is_weierstrass() {
                    let closed = group_closure(l, &sets[l.id()])?;
                    sets.insert(l.id().to_string(), closed);
                }
            }
            for c in &tower.covers {
                let images: Vec<Point> = sets[c.source().id()]
                    .iter()
                    .map(|p| c.image(p))
                    .collect::<Result<_>>()?;
                let tgt = sets.get_mut(c.target().id()).unwrap();
                tgt.extend(images);
            }
            for c in &tower.covers {
                let lifted: Vec<Point> = sets[c.target().id()]
                    .iter()
                    .filter_map(|p| c.fiber(p).ok())
                    .flatten()
                    .map(|(q, _)| q)
                    .collect();
                let src = sets.get_mut(c.source().id()).unwrap();
                for q in lifted {
                    if src.len() >= POOL_CAP {
                        break;
                    }
                    src.insert(q);
                }
            }
        }
        let by_level = sets
            .into_iter()
            .map(|(k, v)| {
                let mut v: Vec<Point> = v.into_iter().collect();
                v.sort_by(|a, b| point_height(a).cmp(&point_height(b)).then_with(|| a.cmp(b)));
                v.truncate(POOL_CAP);
                (k, v)
            })
            .collect();
        Ok(Pools { by_level })
    }

    pub fn points(&self, level: &str) -> &[Point] {
        self.by_level.get(level).map_or(&[], |v| v.as_slice())
    }

    /// Pool points of the target whose whole fiber is rational.
    pub fn rational_fiber_targets<C: Cover + ?Sized>(&self, cover: &C) -> Vec<Point> {
        self.points(cover.target().id())
            .iter()
            .filter(|p| cover.fiber(p).is_ok())
            .cloned()
            .collect()
    }

    /// Regular functions on `level` whose divisors are rational: `t - c`
    /// for pool abscissae, `x` when its zeros are rational, and on
    /// Weierstrass levels the lines through pairs of pool points.
    pub fn atoms(&self, level: &Arc<CurveLevel>) -> Result<Vec<FunctionElement>> {
        let pts = self.points(level.id());
        let ts: BTreeSet<K> = pts.iter().map(|p| p.t().clone()).collect();
        let mut out: Vec<FunctionElement> = ts.iter().map(|c| FunctionElement::t_minus(level, c)).collect();
        if !level.is_base() {
            out.push(FunctionElement::x(level)?);
        }
        if level.is_weierstrass() {
            let ec = EllipticCurve::from_level(level)?;
            for (i, p) in pts.iter().enumerate().take(8) {
                for q in pts.iter().skip(i).take(8) {
                    if let Ok(l) = ec.line(p, q) {
                        out.push(l);
                    }
                }
            }
        }
        out.retain(|f| principal_divisor(f).is_ok());
        out.dedup();
        Ok(out)
    }
}

fn group_closure(level: &Arc<CurveLevel>, seed: &BTreeSet<Point>) -> Result<BTreeSet<Point>> {
    let ec = EllipticCurve::from_level(level)?;
    let gens: Vec<GroupPoint> = seed.iter().map(|p| GroupPoint::Affine(p.clone())).collect();
    let mut out = seed.clone();
    let mut frontier: Vec<GroupPoint> = gens.clone();
    let cap = BigInt::from(POOL_HEIGHT);
    while !frontier.is_empty() && out.len() < POOL_CAP {
        let mut next = Vec::new();
        for f in &frontier {
            for g in &gens {
                for r in [ec.add(f, g), ec.sub(f, g), ec.neg(f)] {
                    if let GroupPoint::Affine(p) = &r {
                        if point_height(p) <= cap && out.len() < POOL_CAP && out.insert(p.clone()) {
                            next.push(r.clone());
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Names a cover in reports.
pub fn cover_label(c: &CoverMap) -> String {
    format!("{}->{}", c.source().id(), c.target().id())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic() {
        let mut a = Sampler::new(0, "x");
        let mut b = Sampler::new(0, "x");
        let mut c = Sampler::new(0, "y");
        let va: Vec<i64> = (0..8).map(|_| a.range(0, 1000)).collect();
        let vb: Vec<i64> = (0..8).map(|_| b.range(0, 1000)).collect();
        let vc: Vec<i64> = (0..8).map(|_| c.range(0, 1000)).collect();
        assert_eq!(va, vb);
        assert_ne!(va, vc);
    }
}
