//! Classes modulo principal divisors and modulo torsion.

use divtower::divisor::Divisor;
use divtower::pic::{is_principal, point_torsion, EllipticCurve, GroupPoint, HClass};
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rank2.json"))?;
    let e = tower.level("E")?;
    let ec = EllipticCurve::from_level(&e)?;
    let (p1, p2) = (tower.point("P1")?, tower.point("P2")?);
    let sum = ec.add(&GroupPoint::Affine(p1.clone()), &GroupPoint::Affine(p2.clone()));
    println!("P1 + P2 = {sum}");

    // P1 + P2 - (P1 + P2) - O is principal, with a witness
    let s = sum.affine().expect("affine sum").clone();
    let d = Divisor::parse(&e, &format!("E: {{{p1}:1, {p2}:1, {s}:-1}}"))?;
    let pr = is_principal(&e, &d)?;
    println!(
        "{d} principal: {}, witness {:?}",
        pr.is_principal(),
        pr.witness().map(|w| w.to_string())
    );

    let t = tower.point("T")?;
    println!("T: {}", point_torsion(&ec, &GroupPoint::Affine(t.clone()), 12));
    println!("P1: {}", point_torsion(&ec, &GroupPoint::Affine(p1.clone()), 12));

    let c = HClass::from_divisor(&e, Divisor::point(&p1, 1))?;
    let half = c.divide(2)?;
    println!("[P1] / 2 = {half}, doubled back equal: {}", half.scale(2, 1)? == c);
    println!(
        "[T] is zero modulo torsion: {}",
        HClass::from_divisor(&e, Divisor::point(&t, 1))?.is_zero(60)?
    );
    Ok(())
}
