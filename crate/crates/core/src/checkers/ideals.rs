use super::{CheckOptions, Identity, Report};
use crate::divisor::{alpha, SupportSet};
use crate::error::Result;
use crate::ideals::{
    boolean_dictionary, radical, radical_matches_common_zeros, two_generators, BoolOp, FgIdeal, RadicalIdeal,
};
use crate::sampling::{Pools, Sampler};
use crate::tower::Tower;

const TWO_GEN_SAMPLES: usize = 100;
const DICTIONARY_SAMPLES: usize = 200;

/// `min((f), (g)) = d` for the two generators of random effective `d`.
pub(super) fn two_gen(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    for level in &tower.levels {
        let id = level.id();
        let pts = pools.points(id);
        let mut rng = Sampler::new(opts.seed, &format!("two-gen {id}"));
        let mut round = Identity::new("min((f), (g)) = d", id);
        let mut cross = Identity::new("ideal cross-check by cofactors", id);
        for _ in 0..TWO_GEN_SAMPLES {
            let d = rng.divisor(id, pts, 4, 3, true);
            match two_generators(level, &d) {
                Ok((f, g)) => {
                    round.record_result(alpha(&f, &g).map(|a| a == d), || d.to_string());
                    if level.is_base() {
                        cross.record_result(FgIdeal::new(f, g).and_then(|i| i.base_line_cross_check()), || {
                            d.to_string()
                        });
                    }
                }
                Err(e) => round.fail(|| format!("{d}: {e}")),
            }
        }
        report.push(round);
        if level.is_base() {
            report.push(cross);
        }
    }
    Ok(report)
}

/// The set route and the ideal route of meet, join and difference agree,
/// and radicals are the common zeros of the generators.
pub(super) fn dictionary(tower: &Tower, opts: &CheckOptions, mut report: Report) -> Result<Report> {
    let pools = Pools::build(tower)?;
    let mut rng = Sampler::new(opts.seed, "ideal-dict");
    let ops = [BoolOp::Meet, BoolOp::Join, BoolOp::Difference];
    let mut per_level: Vec<(Identity, Identity)> = tower
        .levels
        .iter()
        .map(|l| {
            (
                Identity::new("set route = ideal route", l.id()),
                Identity::new("radical = common zeros", l.id()),
            )
        })
        .collect();
    for k in 0..DICTIONARY_SAMPLES {
        let li = k % tower.levels.len();
        let level = &tower.levels[li];
        let pts = pools.points(level.id());
        let set = |rng: &mut Sampler| -> Result<RadicalIdeal> {
            RadicalIdeal::new(level, SupportSet::from_points(level.id(), rng.subset(pts, 0, 3))?)
        };
        let (b, c) = (set(&mut rng)?, set(&mut rng)?);
        let op = *rng.pick(&ops);
        let (agree, zeros) = &mut per_level[li];
        match boolean_dictionary(op, &b, &c) {
            Ok(chk) => agree.record(chk.agree, || {
                format!("{b} {op} {c}: {} vs {}", chk.set_route, chk.ideal_route)
            }),
            Err(e) => agree.fail(|| format!("{b} {op} {c}: {e}")),
        }
        zeros.record_result(
            (|| {
                let i = b.ideal()?;
                Ok(radical(&i)? == b && radical_matches_common_zeros(&i, pts)?)
            })(),
            || b.to_string(),
        );
    }
    for (a, z) in per_level {
        report.push(a);
        report.push(z);
    }
    Ok(report)
}
