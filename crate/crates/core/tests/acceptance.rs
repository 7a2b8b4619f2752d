//! End-to-end acceptance: every criterion runs against a bundled tower with
//! seed 0 and must pass within its time limit. One line per criterion.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use divtower::checkers::{group_law_oracle, run_checker, CheckOptions, Report};
use divtower::tower::Tower;

fn tower(name: &str) -> Tower {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(format!("{name}.json"));
    Tower::load(&p).unwrap_or_else(|e| panic!("{name}: {e}"))
}

struct Criterion {
    label: &'static str,
    tower: &'static str,
    limit: u64,
    run: fn(&Tower, &CheckOptions) -> divtower::Result<Report>,
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion {
            label: "pull-push, 100 divisors per cover",
            tower: "e1",
            limit: 10,
            run: |t, o| run_checker("pull-push", t, o),
        },
        Criterion {
            label: "norm compatibility, 50 functions per cover",
            tower: "e1",
            limit: 30,
            run: |t, o| run_checker("norm-compat", t, o),
        },
        Criterion {
            label: "two generators, 100 divisors per level",
            tower: "e1",
            limit: 60,
            run: |t, o| run_checker("two-gen", t, o),
        },
        Criterion {
            label: "ideal dictionary, 200 instances",
            tower: "e1",
            limit: 20,
            run: |t, o| run_checker("ideal-dict", t, o),
        },
        Criterion {
            label: "decomposition, 20 base points per cover",
            tower: "e1",
            limit: 20,
            run: |t, o| run_checker("lemma-ic3", t, o),
        },
        Criterion {
            label: "trace on the rank one tower",
            tower: "rank1",
            limit: 5,
            run: |t, o| run_checker("lemma-ic6", t, o),
        },
        Criterion {
            label: "group law against chord and tangent, 50 lines",
            tower: "e1",
            limit: 10,
            run: group_law_oracle,
        },
        Criterion {
            label: "field reconstruction, grid and 100 random pairs",
            tower: "rank2",
            limit: 5,
            run: |t, o| run_checker("field-reconstruct", t, o),
        },
        Criterion {
            label: "Lutz-Nagell and divisibility on both curves",
            tower: "e1",
            limit: 60,
            run: |t, o| run_checker("divisible-torsionfree", t, o),
        },
    ];
    let opts = CheckOptions::default();
    let mut failed = Vec::new();
    for (k, c) in criteria.iter().enumerate() {
        let t = tower(c.tower);
        let start = Instant::now();
        let r = (c.run)(&t, &opts);
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(c.limit);
        let (ok, detail) = match &r {
            Ok(rep) => (rep.passed(), format!("{:?}", rep.verdict).to_lowercase()),
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if ok && in_time { "PASS" } else { "FAIL" };
        // straight to the handle, so the lines show without --nocapture
        let mut out = std::io::stdout().lock();
        writeln!(
            out,
            "criterion {}: {status} {} [{}] {detail} in {:.2}s (limit {}s)",
            k + 1,
            c.label,
            c.tower,
            took.as_secs_f64(),
            c.limit
        )
        .unwrap();
        if let Ok(rep) = &r {
            if !ok {
                for l in rep.summary_lines() {
                    writeln!(out, "    {l}").unwrap();
                }
            }
        }
        drop(out);
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
