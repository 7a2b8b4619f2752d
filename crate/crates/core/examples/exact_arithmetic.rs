//! Arithmetic in Q(i) and factoring over it.

use divtower::exact::rational::{self, Rational};
use divtower::exact::{factor_rational, factor_unipoly, roots_in_field, AlgebraicNumber, NumberField, Scalar, UniPoly};

fn main() -> divtower::Result<()> {
    let qi = NumberField::new(
        "i",
        UniPoly::new(vec![rational::one(), rational::zero(), rational::one()]),
    )?;
    let i = AlgebraicNumber::generator(&qi);
    let two = AlgebraicNumber::from_i64(&qi, 2);
    let z = two.add_ref(&i); // 2 + i
    println!("z = {z}, z^2 = {}, 1/z = {}", z.mul_ref(&z), z.inv().unwrap());

    // t^4 - 1 splits over Q(i)
    let c = |n: i64| AlgebraicNumber::from_i64(&qi, n);
    let f = UniPoly::new(vec![c(-1), c(0), c(0), c(0), c(1)]);
    let fact = factor_unipoly(&f);
    for (g, m) in &fact.factors {
        println!("factor ({g})^{m}");
    }
    println!(
        "roots: {:?}",
        roots_in_field(&f)
            .iter()
            .map(|(r, m)| format!("{r} x{m}"))
            .collect::<Vec<_>>()
    );

    // over Q it does not
    let q = |n: i64| Rational::from_integer(n.into());
    let g = UniPoly::new(vec![q(-1), q(0), q(0), q(0), q(1)]);
    for (h, m) in factor_rational(&g) {
        println!("over Q: ({h})^{m}");
    }
    Ok(())
}
