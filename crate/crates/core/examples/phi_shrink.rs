//! Shrinking the smallest definable subspace containing a class by adding
//! supports with irreducible fibers.

use divtower::checkers::{run_checker, CheckOptions};
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rank2.json"))?;
    let report = run_checker("phi-shrink", &tower, &CheckOptions::default())?;
    for l in report.summary_lines() {
        println!("{l}");
    }
    println!("{}", serde_json::to_string_pretty(&report.certificates).expect("json"));
    Ok(())
}
