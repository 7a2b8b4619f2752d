use serde_json::json;

use super::{CheckOptions, Identity, Report};
use crate::cover::CoverMap;
use crate::divisor::{principal_divisor, Divisor};
use crate::error::Result;
use crate::pic::{decompose_h, HClass};
use crate::sampling::{cover_label, Pools, Sampler};
use crate::tower::Tower;

const PULL_PUSH_SAMPLES: usize = 100;
const NORM_SAMPLES: usize = 50;
const BASE_POINTS: usize = 20;

/// `p_* p^* d = n d` and `supp p^* d = p^{-1} supp d` on random divisors
/// supported where fibers are rational.
pub(super) fn pull_push(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    for c in &tower.covers {
        let label = cover_label(c);
        let n = c.degree() as i64;
        let mut rng = Sampler::new(opts.seed, &format!("pull-push {label}"));
        let targets = pools.rational_fiber_targets(c.as_ref());
        let mut pp = Identity::new(format!("p_* p^* = [{n}]"), &label);
        let mut supp = Identity::new("supp p^* = p^-1 supp", &label);
        if targets.is_empty() {
            pp.fail(|| "no target point with a rational fiber in the pool".into());
        } else {
            for _ in 0..PULL_PUSH_SAMPLES {
                let d = rng.divisor(c.target().id(), &targets, 4, 3, false);
                let pulled = c.pullback_div(&d);
                pp.record_result(
                    pulled.clone().and_then(|e| Ok(c.pushforward_div(&e)? == d.scale(n))),
                    || d.to_string(),
                );
                supp.record_result(
                    pulled.and_then(|e| Ok(e.support() == c.pullback_support(&d.support())?)),
                    || d.to_string(),
                );
            }
        }
        report.push(pp);
        report.push(supp);
    }
    Ok(report)
}

/// `p_* (f) = (N f)` for random regular `f` on the source, and
/// `p^* (g) = (g o p)` for atoms `g` on the target with rational fibers.
pub(super) fn norm_compat(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    for c in &tower.covers {
        let label = cover_label(c);
        let mut rng = Sampler::new(opts.seed, &format!("norm-compat {label}"));
        let atoms = pools.atoms(c.source())?;
        let mut norm = Identity::new("p_* (f) = (N f)", &label);
        if atoms.is_empty() {
            norm.fail(|| "no function with a rational divisor in the pool".into());
        }
        for _ in 0..NORM_SAMPLES.min(if atoms.is_empty() { 0 } else { usize::MAX }) {
            let f = rng.function(&atoms, 3);
            norm.record_result(norm_identity(c, &f), || f.to_string());
        }
        report.push(norm);

        let mut pull = Identity::new("p^* (g) = (g o p)", &label);
        for g in pools.atoms(c.target())? {
            let Ok(dg) = principal_divisor(&g) else { continue };
            if dg.support().iter().any(|p| c.fiber(p).is_err()) {
                continue;
            }
            pull.record_result(
                (|| Ok(c.pullback_div(&dg)? == principal_divisor(&c.pull_function(&g)?)?))(),
                || g.to_string(),
            );
        }
        report.push(pull);
    }
    Ok(report)
}

fn norm_identity(c: &CoverMap, f: &crate::curve::FunctionElement) -> Result<bool> {
    let lhs = c.pushforward_div(&principal_divisor(f)?)?;
    let rhs = principal_divisor(&c.norm(f)?)?;
    Ok(lhs == rhs)
}

/// `n e = p^* p_* e - (p^* p_* e - n e)` with the second part pushing
/// forward to zero, for every point above sampled base points.
pub(super) fn decomposition(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    for c in &tower.covers {
        let label = cover_label(c);
        let n = c.degree();
        let mut rng = Sampler::new(opts.seed, &format!("lemma-ic3 {label}"));
        let targets = pools.rational_fiber_targets(c.as_ref());
        let mut ident = Identity::new("n e = p^* p_* e - n hperp", &label);
        let mut vanish = Identity::new("p_* hperp = 0", &label);
        let mut base = Identity::new("h1 = (1/n) p^* beta", &label);
        let mut sampled = Vec::new();
        if targets.is_empty() {
            ident.fail(|| "no target point with a rational fiber in the pool".into());
        } else {
            for _ in 0..BASE_POINTS {
                sampled.push(rng.pick(&targets).clone());
            }
        }
        for beta in &sampled {
            let fiber = c.fiber(beta)?;
            let pulled = c.pullback_div(&Divisor::point(beta, 1))?;
            for (y, _) in fiber {
                let e = Divisor::point(&y, 1);
                match decompose_h(&e, c.as_ref()) {
                    Ok(dec) => {
                        let what = || format!("{y} above {beta}");
                        ident.record(dec.certificate.scaled_identity, what);
                        vanish.record(dec.certificate.pushforward_vanishes, what);
                        let expect = HClass::new(c.source(), pulled.clone(), n as u64)?;
                        base.record(dec.h1 == expect && dec.base == Divisor::point(beta, 1), what);
                    }
                    Err(err) => ident.fail(|| format!("{y} above {beta}: {err}")),
                }
            }
        }
        let mut distinct: Vec<String> = sampled.iter().map(|p| p.to_string()).collect();
        distinct.sort();
        distinct.dedup();
        report.certify(
            &format!("base points {label}"),
            json!({"sampled": sampled.len(), "distinct": distinct}),
        );
        report.push(ident);
        report.push(vanish);
        report.push(base);
    }
    Ok(report)
}
