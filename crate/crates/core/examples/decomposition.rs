//! Splitting a class pulled back along a cover into its part from the base
//! and a part that pushes forward to zero.

use divtower::divisor::Divisor;
use divtower::pic::decompose_h;
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e1.json"))?;
    let cover = tower.covers.iter().find(|c| c.source().id() == "S").expect("S over E1");
    let s = cover.source();
    let e = Divisor::parse(s, "S: {(1, 0):1, (i, 0):2, (0, i):-1}")?;
    let h = decompose_h(&e, cover.as_ref())?;
    println!("e = {e}");
    println!("p_* e = {}", h.base);
    println!("h1 = {}\nhperp = {}", h.h1, h.hperp);
    println!(
        "certificate: {}",
        serde_json::to_string_pretty(&h.certificate).expect("json")
    );
    println!("holds: {}", h.certificate.holds());
    Ok(())
}
