//! Two-generator ideals of effective divisors, radicals and the Boolean
//! dictionary between point sets and ideals.

use divtower::divisor::{alpha, Divisor};
use divtower::ideals::{boolean_dictionary, radical, two_generators, BoolOp, FgIdeal, RadicalIdeal};
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e1.json"))?;
    let e2 = tower.level("E2")?;
    let d = Divisor::parse(&e2, "E2: {(3, 5):2, (1, i):1}")?;
    let (f, g) = two_generators(&e2, &d)?;
    println!("d = {d}\nf = {f}\ng = {g}\nmin((f), (g)) = {}", alpha(&f, &g)?);

    let i = FgIdeal::new(f, g)?;
    println!("radical = {}", radical(&i)?);

    let b = RadicalIdeal::new(&e2, Divisor::parse(&e2, "E2: {(3, 5):1, (1, i):1}")?.support())?;
    let c = RadicalIdeal::new(&e2, Divisor::parse(&e2, "E2: {(1, i):1, (3, -5):1}")?.support())?;
    for op in [BoolOp::Meet, BoolOp::Join, BoolOp::Difference] {
        let chk = boolean_dictionary(op, &b, &c)?;
        println!(
            "{op}: sets {} / ideals {} agree {}",
            chk.set_route, chk.ideal_route, chk.agree
        );
    }
    Ok(())
}
