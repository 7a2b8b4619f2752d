use serde::Serialize;

use super::classes::HClass;
use crate::cover::Cover;
use crate::divisor::Divisor;
use crate::error::{Error, Result};

/// `e = h1 - hperp` with `h1` pulled back from the base of the cover and
/// `hperp` pushing forward to zero, both with denominator `n = deg p`.
#[derive(Clone, Debug)]
pub struct HDecomposition {
    pub degree: usize,
    /// `p_* e` on the target.
    pub base: Divisor,
    pub h1: HClass,
    pub hperp: HClass,
    pub certificate: DecompositionCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCertificate {
    /// `n e = p^* p_* e - (p^* p_* e - n e)` as divisors.
    pub scaled_identity: bool,
    /// `p_* (p^* p_* e - n e) = 0`.
    pub pushforward_vanishes: bool,
}

impl DecompositionCertificate {
    pub fn holds(&self) -> bool {
        self.scaled_identity && self.pushforward_vanishes
    }
}

/// Splits `e` on the source of `cover` into a part pulled back from the
/// target and a part in the kernel of pushforward.
///
/// For a point `e` above `b` with fiber `y` (ramification `r(y)`),
/// `n e = p^* b - sum r(y) (y - e)`; extended linearly this is
/// `n e = p^* p_* e - (p^* p_* e - n e)`.
pub fn decompose_h<C: Cover + ?Sized>(e: &Divisor, cover: &C) -> Result<HDecomposition> {
    let src = cover.source();
    if e.level() != src.id() {
        return Err(Error::LevelMismatch {
            expected: src.id().into(),
            found: e.level().into(),
        });
    }
    let n = cover.degree();
    let base = cover.pushforward_div(e)?;
    let pulled = cover.pullback_div(&base)?;
    let ne = e.scale(n as i64);
    let perp = pulled.sub(&ne)?;
    let certificate = DecompositionCertificate {
        scaled_identity: pulled.sub(&perp)? == ne,
        pushforward_vanishes: cover.pushforward_div(&perp)?.is_zero(),
    };
    Ok(HDecomposition {
        degree: n,
        base,
        h1: HClass::new(src, pulled, n as u64)?,
        hperp: HClass::new(src, perp, n as u64)?,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::CoverMap;
    use crate::curve::tests::e_level;
    use crate::curve::CurveLevel;

    #[test]
    fn ramified_and_split_singletons() {
        let e = e_level("x^2 = t^3 - t");
        let l = CurveLevel::base("L", e.field());
        let p = CoverMap::projection(&e, &l).unwrap();
        let o = Divisor::point(&e.point_q(0, 0).unwrap(), 1);
        let dec = decompose_h(&o, &p).unwrap();
        assert!(dec.certificate.holds());
        assert!(dec.hperp.representative().is_zero());
        assert_eq!(dec.h1, HClass::new(&e, o.scale(2), 2).unwrap());

        let e2 = e_level("x^2 = t^3 - 2");
        let p2 = CoverMap::projection(&e2, &l).unwrap();
        let (a, b) = (e2.point_q(3, 5).unwrap(), e2.point_q(3, -5).unwrap());
        let dec = decompose_h(&Divisor::point(&a, 1), &p2).unwrap();
        assert!(dec.certificate.holds());
        let expect = Divisor::from_entries("E", [(b.clone(), 1), (a.clone(), -1)]).unwrap();
        assert_eq!(dec.hperp.representative(), &expect);
        assert_eq!(dec.hperp.denominator(), 2);

        // linearity
        let e1 = Divisor::point(&a, 2);
        let e2d = Divisor::point(&b, -1);
        let sum = decompose_h(&e1.add(&e2d).unwrap(), &p2).unwrap();
        let (d1, d2) = (decompose_h(&e1, &p2).unwrap(), decompose_h(&e2d, &p2).unwrap());
        assert_eq!(sum.h1, d1.h1.add(&d2.h1).unwrap());
        assert_eq!(sum.hperp, d1.hperp.add(&d2.hperp).unwrap());
    }
}
