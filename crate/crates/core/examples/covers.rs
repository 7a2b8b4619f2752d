//! Pullback, pushforward and norms along the covers of a tower.

use divtower::cover::Cover;
use divtower::curve::FunctionElement;
use divtower::divisor::{principal_divisor, Divisor};
use divtower::sampling::cover_label;
use divtower::tower::Tower;

fn main() -> divtower::Result<()> {
    let tower = Tower::load(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/e1.json"))?;
    let cover = tower.covers.iter().find(|c| c.source().id() == "S").expect("S over E1");
    let e1 = cover.target();
    println!(
        "cover {} of degree {}",
        cover_label(cover),
        Cover::degree(cover.as_ref())
    );

    let d = Divisor::parse(e1, "E1: {(1, 0):1, (0, 0):2}")?;
    let up = cover.pullback_div(&d)?;
    println!("p^* {d} = {up}");
    println!("p_* p^* = {}", cover.pushforward_div(&up)?);

    let s = cover.source();
    let f = FunctionElement::parse(s, "x * (t - 1)")?;
    let nf = cover.norm(&f)?;
    println!("N({f}) = {nf}");
    println!("p_* (f) = {}", cover.pushforward_div(&principal_divisor(&f)?)?);
    println!("(N f)  = {}", principal_divisor(&nf)?);
    Ok(())
}
