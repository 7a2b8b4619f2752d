//! Randomized invariants over the bundled towers. Instances are built from
//! pool points and atom functions picked by index, so shrinking stays
//! meaningful.

use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use divtower::cover::Cover;
use divtower::curve::{valuation, CurveLevel, FunctionElement, Point};
use divtower::divisor::{alpha, principal_divisor, Divisor, SupportSet};
use divtower::exact::rational::{self, Rational};
use divtower::exact::{linalg, Scalar};
use divtower::geom::{
    class_coordinates, colinear, phi_approx, reconstruct_field, FieldElement, PhiContext, PhiDescriptor, QVector,
    ReconstructedField,
};
use divtower::pic::{sigma, EllipticCurve, HClass};
use divtower::sampling::Pools;
use divtower::tower::Tower;

struct Fixture {
    e1: Tower,
    e1_pools: Pools,
    rank2: Tower,
    rank2_pools: Pools,
    field: ReconstructedField,
    phi: PhiContext,
}

fn load(name: &str) -> Tower {
    Tower::load(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("examples")
            .join(format!("{name}.json")),
    )
    .unwrap()
}

fn class(level: &Arc<CurveLevel>, p: &Point) -> HClass {
    HClass::from_divisor(level, Divisor::point(p, 1)).unwrap()
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let e1 = load("e1");
        let rank2 = load("rank2");
        let e = rank2.level("E").unwrap();
        let (p1, p2) = (rank2.point("P1").unwrap(), rank2.point("P2").unwrap());
        let field = reconstruct_field((&class(&e, &p1), &class(&e, &p2)), 8, 60).unwrap();
        let phi = PhiContext {
            basis: vec![class(&e, &p1), class(&e, &p2)],
            covers: rank2.covers_onto("E"),
            search_bound: 8,
            torsion_bound: 60,
        };
        Fixture {
            e1_pools: Pools::build(&e1).unwrap(),
            rank2_pools: Pools::build(&rank2).unwrap(),
            e1,
            rank2,
            field,
            phi,
        }
    })
}

fn divisor(level: &str, pts: &[Point], picks: &[(usize, i64)]) -> Divisor {
    let mut d = Divisor::zero(level);
    for &(i, m) in picks {
        d.add_at(pts[i % pts.len()].clone(), m);
    }
    d
}

fn product(atoms: &[FunctionElement], picks: &[usize]) -> FunctionElement {
    picks
        .iter()
        .map(|&i| atoms[i % atoms.len()].clone())
        .reduce(|a, b| a.mul_ref(&b))
        .unwrap()
}

fn in_descriptor(d: &PhiDescriptor, v: &QVector) -> bool {
    let rows: Vec<Vec<Rational>> = d
        .w_basis
        .iter()
        .map(|r| r.iter().map(|c| rational::parse(c).unwrap()).collect())
        .collect();
    linalg::in_span(&rows, v.coords(), v.dim())
}

fn affine(m: &[i64; 9], c: &[i64; 3], p: &QVector) -> QVector {
    let x = p.coords();
    QVector::new(
        (0..3)
            .map(|r| {
                (0..3).fold(Rational::from_integer(c[r].into()), |acc, k| {
                    acc + Rational::from_integer(m[3 * r + k].into()) * &x[k]
                })
            })
            .collect(),
    )
}

fn det3(m: &[i64; 9]) -> i64 {
    m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6])
}

fn frac() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(a, b)| rational::frac(a, b))
}

fn formal(f: &ReconstructedField, r: &Rational, v: (i64, i64)) -> FieldElement {
    let v = if v == (0, 0) {
        QVector::from_ints(&[1, 0])
    } else {
        QVector::from_ints(&[v.0, v.1])
    };
    let e = FieldElement::new(v.scale(r), v).unwrap();
    assert!(f.equivalent(&e, &f.embed(r)).unwrap());
    e
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn valuations_add(lv in 0usize..2, fs in prop::collection::vec(0usize..64, 1..3), gs in prop::collection::vec(0usize..64, 1..3)) {
        let fx = fixture();
        let (tower, pools, id) = if lv == 0 { (&fx.rank2, &fx.rank2_pools, "E") } else { (&fx.e1, &fx.e1_pools, "E1") };
        let level = tower.level(id).unwrap();
        let atoms = pools.atoms(&level).unwrap();
        let (f, g) = (product(&atoms, &fs), product(&atoms, &gs));
        let fg = f.mul_ref(&g);
        prop_assert_eq!(
            principal_divisor(&fg).unwrap(),
            principal_divisor(&f).unwrap().add(&principal_divisor(&g).unwrap()).unwrap()
        );
        for p in pools.points(id).iter().take(6) {
            prop_assert_eq!(valuation(&fg, p).unwrap(), valuation(&f, p).unwrap() + valuation(&g, p).unwrap());
        }
    }

    #[test]
    fn push_after_pull_is_degree(ci in 0usize..8, picks in prop::collection::vec((0usize..64, -3i64..=3), 0..4)) {
        let fx = fixture();
        let cover = &fx.e1.covers[ci % fx.e1.covers.len()];
        let target = cover.target().id().to_string();
        let pts = fx.e1_pools.rational_fiber_targets(cover.as_ref());
        prop_assume!(!pts.is_empty());
        let d = divisor(&target, &pts, &picks);
        let back = cover.pushforward_div(&cover.pullback_div(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d.scale(Cover::degree(cover.as_ref()) as i64));
    }

    #[test]
    fn sigma_is_additive(a in prop::collection::vec((0usize..64, -2i64..=2), 0..4), b in prop::collection::vec((0usize..64, -2i64..=2), 0..4)) {
        let fx = fixture();
        let level = fx.rank2.level("E").unwrap();
        let ec = EllipticCurve::from_level(&level).unwrap();
        let pts = fx.rank2_pools.points("E");
        let (d1, d2) = (divisor("E", pts, &a), divisor("E", pts, &b));
        let lhs = sigma(&level, &d1.add(&d2).unwrap()).unwrap();
        let rhs = ec.add(&sigma(&level, &d1).unwrap(), &sigma(&level, &d2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn principal_divisors_sum_to_zero(picks in prop::collection::vec(0usize..64, 1..4)) {
        let fx = fixture();
        let level = fx.rank2.level("E").unwrap();
        let f = product(&fx.rank2_pools.atoms(&level).unwrap(), &picks);
        prop_assert!(sigma(&level, &principal_divisor(&f).unwrap()).unwrap().is_infinity());
    }

    #[test]
    fn colinearity_is_affine_invariant(
        x in prop::array::uniform3(-9i64..=9),
        v in prop::array::uniform3(-9i64..=9),
        w in prop::array::uniform3(-9i64..=9),
        s in frac(),
        m in prop::array::uniform9(-4i64..=4),
        c in prop::array::uniform3(-5i64..=5),
    ) {
        prop_assume!(det3(&m) != 0);
        let (x, v, w) = (QVector::from_ints(&x), QVector::from_ints(&v), QVector::from_ints(&w));
        let y = x.add(&v).unwrap();
        let z = x.add(&v.scale(&s)).unwrap();
        prop_assert!(colinear(&x, &y, &z).unwrap());
        let f = |p: &QVector| affine(&m, &c, p);
        prop_assert!(colinear(&f(&x), &f(&y), &f(&z)).unwrap());
        prop_assert_eq!(colinear(&x, &y, &w).unwrap(), colinear(&f(&x), &f(&y), &f(&w)).unwrap());
    }

    #[test]
    fn field_axioms(r in frac(), s in frac(), u in frac(), vs in prop::array::uniform3((-4i64..=4, -4i64..=4))) {
        let k = &fixture().field;
        let (a, b, c) = (formal(k, &r, vs[0]), formal(k, &s, vs[1]), formal(k, &u, vs[2]));
        let eq = |x: &FieldElement, y: &FieldElement| k.equivalent(x, y).unwrap();
        prop_assert!(eq(&k.field_add(&a, &b).unwrap(), &k.field_add(&b, &a).unwrap()));
        prop_assert!(eq(&k.field_mul(&a, &b).unwrap(), &k.field_mul(&b, &a).unwrap()));
        let ab_c = k.field_add(&k.field_add(&a, &b).unwrap(), &c).unwrap();
        let a_bc = k.field_add(&a, &k.field_add(&b, &c).unwrap()).unwrap();
        prop_assert!(eq(&ab_c, &a_bc));
        let ab_c = k.field_mul(&k.field_mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = k.field_mul(&a, &k.field_mul(&b, &c).unwrap()).unwrap();
        prop_assert!(eq(&ab_c, &a_bc));
        let lhs = k.field_mul(&a, &k.field_add(&b, &c).unwrap()).unwrap();
        let rhs = k.field_add(&k.field_mul(&a, &b).unwrap(), &k.field_mul(&a, &c).unwrap()).unwrap();
        prop_assert!(eq(&lhs, &rhs));
        let zero = k.field_add(&a, &k.field_neg(&a).unwrap()).unwrap();
        prop_assert!(eq(&zero, &k.embed(&rational::zero())));
        prop_assert!(eq(&k.field_mul(&a, &k.embed(&rational::one())).unwrap(), &a));
    }

    #[test]
    fn phi_is_sound_and_antitone(
        target in 0usize..64,
        family in prop::collection::vec(prop::collection::vec(0usize..64, 1..3), 1..4),
    ) {
        let fx = fixture();
        let level = fx.rank2.level("E").unwrap();
        let pts = fx.rank2_pools.points("E");
        let a = class(&level, &pts[target % pts.len()]);
        let Ok(coords) = class_coordinates(&a, &fx.phi) else {
            return Ok(());
        };
        let supports: Vec<SupportSet> = family
            .iter()
            .map(|ix| SupportSet::from_points("E", ix.iter().map(|&i| pts[i % pts.len()].clone())).unwrap())
            .collect();
        let mut prev: Option<PhiDescriptor> = None;
        for k in 1..=supports.len() {
            let d = phi_approx(&a, &supports[..k], &fx.phi).unwrap();
            prop_assert!(in_descriptor(&d, &coords));
            if let Some(p) = &prev {
                for row in &d.w_basis {
                    let v = QVector::new(row.iter().map(|c| rational::parse(c).unwrap()).collect());
                    prop_assert!(in_descriptor(p, &v));
                }
                if let (Some(x), Some(y)) = (d.dimension_bound, p.dimension_bound) {
                    prop_assert!(x <= y);
                }
            }
            prev = Some(d);
        }
    }

    #[test]
    fn classes_divide(picks in prop::collection::vec((0usize..64, -3i64..=3), 0..4), den in 1u64..4, n in 1u64..7) {
        let fx = fixture();
        let level = fx.rank2.level("E").unwrap();
        let c = HClass::new(&level, divisor("E", fx.rank2_pools.points("E"), &picks), den).unwrap();
        let back = c.divide(n).unwrap().scale(n as i64, 1).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert!(back.equivalent(&c, 60).unwrap().is_torsion());
    }

    #[test]
    fn alpha_is_symmetric(fs in prop::collection::vec(0usize..64, 1..3), gs in prop::collection::vec(0usize..64, 1..3)) {
        let fx = fixture();
        let level = fx.rank2.level("E").unwrap();
        let atoms = fx.rank2_pools.atoms(&level).unwrap();
        let (f, g) = (product(&atoms, &fs), product(&atoms, &gs));
        let m = alpha(&f, &g).unwrap();
        prop_assert_eq!(&m, &alpha(&g, &f).unwrap());
        prop_assert!(m.le(&principal_divisor(&f).unwrap().positive_part()));
        prop_assert!(m.le(&principal_divisor(&g).unwrap().positive_part()));
    }
}
