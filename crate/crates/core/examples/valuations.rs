//! Local expansions, valuations and principal divisors on a plane curve.

use divtower::curve::{local_expansion, valuation, FunctionElement};
use divtower::divisor::principal_divisor;
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e1.json"))?;
    let e1 = tower.level("E1")?;
    let o = tower.point("T0")?;
    println!("E1: {}", e1.equation());

    // at a 2-torsion point t vanishes to order 2 and x to order 1
    let le = local_expansion(&e1, &o, 4)?;
    let coeffs: Vec<String> = (0..4).map(|k| le.t.coeff(k).to_string()).collect();
    println!("t in a local parameter at {o}: coefficients {coeffs:?}");
    for s in ["t", "x", "t^2 - x", "x^3 / t"] {
        let f = FunctionElement::parse(&e1, s)?;
        println!("v_{o}({s}) = {}", valuation(&f, &o)?);
    }
    let f = FunctionElement::parse(&e1, "x / (t + 1)")?;
    println!("div({f}) = {}", principal_divisor(&f)?);
    Ok(())
}
