use divtower::tower::Tower;

fn load(name: &str) -> Tower {
    Tower::load(format!("{}/examples/{name}.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn bundled_towers_load() {
    let e1 = load("e1");
    assert_eq!(e1.levels.len(), 4);
    assert_eq!(e1.covers.len(), 3);
    let r1 = load("rank1");
    assert!(r1.trace.is_some());
    let r2 = load("rank2");
    assert!(r2.phi.is_some() && r2.field_basis.is_some());
    assert_eq!(r2.name, "rank2");
}

#[test]
fn pools() {
    use divtower::sampling::Pools;
    for name in ["e1", "rank1", "rank2"] {
        let t = load(name);
        let p = Pools::build(&t).unwrap();
        for l in &t.levels {
            let atoms = p.atoms(l).unwrap();
            eprintln!(
                "{name} {}: {} points, {} atoms",
                l.id(),
                p.points(l.id()).len(),
                atoms.len()
            );
        }
        for c in &t.covers {
            eprintln!(
                "  {}->{}: {} good targets",
                c.source().id(),
                c.target().id(),
                p.rational_fiber_targets(c.as_ref()).len()
            );
        }
    }
}
