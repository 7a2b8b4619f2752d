//! Divisor arithmetic, supports and the min construction on regular functions.

use divtower::curve::FunctionElement;
use divtower::divisor::{alpha, Divisor};
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e1.json"))?;
    let e1 = tower.level("E1")?;
    let d = Divisor::parse(&e1, "E1: {(0, 0):2, (1, 0):-1, (i, 1 - i):3}")?;
    let e = Divisor::parse(&e1, "E1: {(1, 0):1, (-1, 0):1}")?;
    println!("d = {d}\ne = {e}");
    println!("deg d = {}, d + e = {}", d.degree(), d.add(&e)?);
    println!("max(d, e) = {}, min(d, e) = {}", d.max(&e)?, d.min(&e)?);
    println!("d+ = {}, d- = {}", d.positive_part(), d.negative_part());
    println!("supp d = {}", d.support());

    let f = FunctionElement::parse(&e1, "x")?;
    let g = FunctionElement::parse(&e1, "t^2 - t")?;
    println!("min((x), (t^2 - t)) = {}", alpha(&f, &g)?);
    Ok(())
}
