//! Picard classes of the levels, the chord-tangent group law on Weierstrass
//! levels, torsion tests, classes modulo torsion with rational coefficients,
//! the splitting of a divisor along a cover and the trace argument.

mod classes;
mod decompose;
mod group_law;
mod span;
mod torsion;
mod trace;

pub use classes::{is_torsion, HClass, PicClass};
pub use decompose::{decompose_h, DecompositionCertificate, HDecomposition};
pub use group_law::{is_principal, sigma, EllipticCurve, GroupPoint, Principality};
pub use span::{certify_independent, span_membership, SpanVerdict};
pub use torsion::{point_torsion, TorsionVerdict, DEFAULT_TORSION_BOUND};
pub use trace::{trace_check, IdentityStatus, OrbitData, TraceReport};
