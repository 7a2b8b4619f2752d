//! Rebuilding Q by ruler-and-parallels constructions on the plane spanned by
//! two independent classes.

use divtower::divisor::Divisor;
use divtower::exact::rational;
use divtower::geom::reconstruct_field;
use divtower::pic::HClass;
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rank2.json"))?;
    let e = tower.level("E")?;
    let class = |n: &str| -> divtower::Result<HClass> { HClass::from_divisor(&e, Divisor::point(&tower.point(n)?, 1)) };
    let k = reconstruct_field((&class("P1")?, &class("P2")?), 8, 60)?;

    let (a, b) = (k.embed(&rational::frac(2, 3)), k.embed(&rational::frac(-5, 4)));
    let sum = k.field_add(&a, &b)?;
    let prod = k.field_mul(&a, &b)?;
    println!("2/3 + -5/4 = {} ({sum:?})", sum.value());
    println!("2/3 * -5/4 = {} ({prod:?})", prod.value());
    println!("-(2/3) = {}", k.field_neg(&a)?.value());

    let grid = k.verify_grid(3)?;
    println!("grid: {}/{} checks passed", grid.passed, grid.checked);
    Ok(())
}
