//! The trace argument on the rank one tower.

use divtower::checkers::{run_checker, CheckOptions};
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rank1.json"))?;
    let report = run_checker("lemma-ic6", &tower, &CheckOptions::default())?;
    for l in report.summary_lines() {
        println!("{l}");
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&report.certificates["trace"]).expect("json")
    );
    Ok(())
}
