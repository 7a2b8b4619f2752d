use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::group_law::{EllipticCurve, GroupPoint};
use crate::curve::K;
use crate::exact::rational::{self, Rational};

/// Default order-search bound over proper number fields.
pub const DEFAULT_TORSION_BOUND: u32 = 60;

/// Largest order of a rational torsion point.
const RATIONAL_TORSION_MAX: u32 = 12;

/// Result of a torsion test. Over `Q` it is never `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum TorsionVerdict {
    Torsion { order: u32 },
    NonTorsion { certificate: String },
    Unknown { bound: u32 },
}

impl TorsionVerdict {
    /// `Some(true)` for torsion, `Some(false)` for certified non-torsion.
    pub fn decided(&self) -> Option<bool> {
        match self {
            TorsionVerdict::Torsion { .. } => Some(true),
            TorsionVerdict::NonTorsion { .. } => Some(false),
            TorsionVerdict::Unknown { .. } => None,
        }
    }

    pub fn is_torsion(&self) -> bool {
        matches!(self, TorsionVerdict::Torsion { .. })
    }
}

impl fmt::Display for TorsionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionVerdict::Torsion { order } => write!(f, "torsion of order {order}"),
            TorsionVerdict::NonTorsion { certificate } => write!(f, "non-torsion ({certificate})"),
            TorsionVerdict::Unknown { bound } => write!(f, "unknown within bound {bound}"),
        }
    }
}

/// Smallest `u > 0` making `u^2 a2, u^4 a4, u^6 a6` integral, as an integer.
/// Over a number field, integrality is coordinatewise in the power basis,
/// which lands in the ring of integers only when the generator is integral.
fn integral_scale(ec: &EllipticCurve) -> BigInt {
    let (a2, a4, a6) = ec.coefficients();
    let mut u = BigInt::one();
    for (c, w) in [(a2, 2u32), (a4, 4), (a6, 6)] {
        for r in c.coords() {
            // need u^w * r integral: every prime p^e || den needs p^ceil(e/w) | u
            let den = r.denom();
            let mut need = BigInt::one();
            let mut rest = den.clone();
            let mut p = BigInt::from(2);
            while rest > BigInt::one() {
                if (&p * &p) > rest {
                    // rest is prime
                    need *= &rest;
                    break;
                }
                let mut e = 0u32;
                while (&rest % &p).is_zero() {
                    rest /= &p;
                    e += 1;
                }
                if e > 0 {
                    need *= p.pow(e.div_ceil(w));
                }
                p += 1;
            }
            u = u.lcm(&need);
        }
    }
    u
}

fn disc_of_cubic(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    let four = BigInt::from(4);
    -(&four * a.pow(3) * c) + a.pow(2) * b.pow(2) + BigInt::from(18) * a * b * c
        - &four * b.pow(3)
        - BigInt::from(27) * c.pow(2)
}

fn scaled(c: &K, s: &BigInt) -> Rational {
    c.to_rational().unwrap() * Rational::from_integer(s.clone())
}

/// Torsion test for a point of a Weierstrass curve.
///
/// Over `Q` (curve and point rational): on an integral model, torsion points
/// have integral coordinates with `x = 0` or `x^2 | disc` (Lutz-Nagell), so
/// the first multiple breaking this certifies non-torsion; otherwise the
/// order is found within 12.
///
/// Otherwise multiples are searched up to `bound`. A multiple `kP` whose
/// `M t(kP)` is not an algebraic integer certifies non-torsion, where
/// `M = 4 * 3 * prod of primes 5 <= p <= 2d + 1` and `d` is the field degree:
/// on an integral model a torsion point of prime-power order `p^n` has
/// `v(t) >= -2 v(p) / (p - 1)`, so `M` clears every allowed denominator.
pub fn point_torsion(ec: &EllipticCurve, p: &GroupPoint, bound: u32) -> TorsionVerdict {
    let Some(pa) = p.affine() else {
        return TorsionVerdict::Torsion { order: 1 };
    };
    let (a2, a4, a6) = ec.coefficients();
    let rational_data =
        [a2, a4, a6].iter().all(|c| c.is_rational()) && pa.t().is_rational() && pa.x().unwrap().is_rational();
    if rational_data {
        return lutz_nagell(ec, p);
    }
    let field = ec.level().field();
    let generator_integral = field.minimal_polynomial().coeffs().iter().all(rational::is_integer);
    let scale = generator_integral.then(|| {
        let u = integral_scale(ec);
        let m = clearing_multiplier(field.degree());
        Rational::from_integer(u.pow(2) * m)
    });
    let mut q = p.clone();
    for k in 1..=bound {
        let Some(qa) = q.affine() else {
            return TorsionVerdict::Torsion { order: k };
        };
        if let Some(s) = &scale {
            let st = qa.t().clone().mul_scalar(s);
            if !is_algebraic_integer(&st) {
                return TorsionVerdict::NonTorsion {
                    certificate: format!("[{k}]P has t-coordinate with a denominator no torsion point allows"),
                };
            }
        }
        q = ec.add(&q, p);
    }
    TorsionVerdict::Unknown { bound }
}

fn clearing_multiplier(degree: usize) -> BigInt {
    let mut m = BigInt::from(12);
    for p in 5..=(2 * degree as u64 + 1) {
        if (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            m *= p;
        }
    }
    m
}

fn is_algebraic_integer(a: &K) -> bool {
    a.characteristic_polynomial().coeffs().iter().all(rational::is_integer)
}

trait ScaleRational {
    fn mul_scalar(self, s: &Rational) -> Self;
}

impl ScaleRational for K {
    fn mul_scalar(self, s: &Rational) -> Self {
        let coords = self.coords().iter().map(|c| c * s).collect();
        K::from_coords(self.field(), coords).expect("same degree")
    }
}

fn lutz_nagell(ec: &EllipticCurve, p: &GroupPoint) -> TorsionVerdict {
    let u = integral_scale(ec);
    let (a2, a4, a6) = ec.coefficients();
    let (u2, u3) = (u.pow(2), u.pow(3));
    let a = scaled(a2, &u2).to_integer();
    let b = scaled(a4, &u2.pow(2)).to_integer();
    let c = scaled(a6, &u3.pow(2)).to_integer();
    let disc = disc_of_cubic(&a, &b, &c);
    let mut q = p.clone();
    for k in 1..=RATIONAL_TORSION_MAX {
        let Some(qa) = q.affine() else {
            return TorsionVerdict::Torsion { order: k };
        };
        let tt = scaled(qa.t(), &u2);
        let xx = scaled(qa.x().unwrap(), &u3);
        if !rational::is_integer(&tt) || !rational::is_integer(&xx) {
            return TorsionVerdict::NonTorsion {
                certificate: format!("[{k}]P is not integral on the integral model"),
            };
        }
        let x = xx.to_integer();
        if !x.is_zero() && !(&disc % (&x * &x)).is_zero() {
            return TorsionVerdict::NonTorsion {
                certificate: format!(
                    "[{k}]P has x^2 = {} not dividing the discriminant {disc}",
                    (&x * &x).abs()
                ),
            };
        }
        q = ec.add(&q, p);
    }
    TorsionVerdict::NonTorsion {
        certificate: format!("no multiple up to {RATIONAL_TORSION_MAX} vanishes, beyond the rational torsion bound"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tests::e_level;
    use crate::curve::CurveLevel;
    use crate::exact::expr::{parse_bipoly, parse_number, parse_rational_poly};
    use crate::exact::NumberField;

    fn verdict(eq: &str, t: i64, x: i64) -> TorsionVerdict {
        let e = e_level(eq);
        let ec = EllipticCurve::from_level(&e).unwrap();
        point_torsion(
            &ec,
            &GroupPoint::Affine(e.point_q(t, x).unwrap()),
            DEFAULT_TORSION_BOUND,
        )
    }

    #[test]
    fn rational_points() {
        assert_eq!(verdict("x^2 = t^3 - t", 0, 0), TorsionVerdict::Torsion { order: 2 });
        assert!(matches!(
            verdict("x^2 = t^3 - 2", 3, 5),
            TorsionVerdict::NonTorsion { .. }
        ));
        // y^2 = x^3 + 1 has torsion of order 6
        assert_eq!(verdict("x^2 = t^3 + 1", 2, 3), TorsionVerdict::Torsion { order: 6 });
        assert_eq!(verdict("x^2 = t^3 + 1", 0, 1), TorsionVerdict::Torsion { order: 3 });
        assert!(matches!(
            verdict("x^2 = t^3 + 5*t^2 - 12*t", -6, 6),
            TorsionVerdict::NonTorsion { .. }
        ));
    }

    #[test]
    fn non_integral_model_is_rescaled() {
        // y^2 = x^3 + 1/64 is y^2 = X^3 + 1 with X = 4x, Y = 8y
        let e = e_level("x^2 = t^3 + 1/64");
        let ec = EllipticCurve::from_level(&e).unwrap();
        let q = e.field();
        let p = e
            .point(
                K::from_rational(q, rational::frac(1, 2)),
                Some(K::from_rational(q, rational::frac(3, 8))),
            )
            .unwrap();
        assert_eq!(
            point_torsion(&ec, &GroupPoint::Affine(p), 60),
            TorsionVerdict::Torsion { order: 6 }
        );
    }

    #[test]
    fn gaussian_points() {
        let k = NumberField::new("i", parse_rational_poly("i^2 + 1", "i").unwrap()).unwrap();
        let e = CurveLevel::plane("E", &k, &parse_bipoly("x^2 = t^3 - t", &k).unwrap(), None).unwrap();
        let ec = EllipticCurve::from_level(&e).unwrap();
        let p = e
            .point(parse_number("i", &k).unwrap(), Some(parse_number("1 - i", &k).unwrap()))
            .unwrap();
        assert_eq!(
            point_torsion(&ec, &GroupPoint::Affine(p), 60),
            TorsionVerdict::Torsion { order: 4 }
        );
        let e2 = CurveLevel::plane("E2", &k, &parse_bipoly("x^2 = t^3 - 2", &k).unwrap(), None).unwrap();
        let ec2 = EllipticCurve::from_level(&e2).unwrap();
        let p2 = e2.point(e2.num(1), Some(parse_number("i", &k).unwrap())).unwrap();
        assert!(matches!(
            point_torsion(&ec2, &GroupPoint::Affine(p2), 60),
            TorsionVerdict::NonTorsion { .. }
        ));
        assert_eq!(clearing_multiplier(2), BigInt::from(60));
    }
}
