//! Exact arithmetic for the inverse semigroup `B[0,∞)`.
//!
//! Elements are pairs `(a,b)` of non-negative numbers with the product
//! `(a,b)(c,d) = (a+c-min{b,c}, b+d-min{b,c})`. The crate provides the
//! natural partial order, the decomposition into diagonal lines `L±α`,
//! symbolic down-rays and up-segments, neighbourhood models for the usual,
//! order-generated and discrete topologies together with the two compact
//! topologies on the semigroup with an adjoined zero, and certificates for
//! separate continuity of the product at zero.
//!
//! All algebra is generic over a [`Coord`] type. Exact work uses
//! [`Rational`]; the aliases at the crate root fix that choice.

pub mod cert;
pub mod coord;
pub mod error;
pub mod falsify;
pub mod format;
pub mod geometry;
pub mod semigroup;
pub mod topology;

pub use coord::{Coord, NonNeg};
pub use error::{Error, Result};
pub use geometry::{DownRay, Part, Region, Side, UpSegment};
pub use semigroup::{Branch, Elem, ExtElem, LineRef, Sign};
pub use topology::{Nbhd, NbhdAc1, NbhdAc2, NbhdDiscrete, NbhdOrder, NbhdUsual};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Exact non-negative rational coordinate.
pub type Scalar = NonNeg<Rational>;

pub type QElem = Elem<Rational>;
pub type QExtElem = ExtElem<Rational>;
pub type QLine = LineRef<Rational>;
pub type QDownRay = DownRay<Rational>;
pub type QUpSegment = UpSegment<Rational>;
pub type QRegion = Region<Rational>;
pub type QNbhdAc1 = NbhdAc1<Rational>;
pub type QNbhdAc2 = NbhdAc2<Rational>;
pub type QCert = cert::ContinuityCert<Rational>;

/// Integer coordinates: the bicyclic monoid sits inside as `Elem<i64>`.
pub type ZElem = Elem<i64>;

/// Floating-point coordinates. Products are exact only on dyadic inputs.
pub type FElem = Elem<f64>;

/// Shorthand for an exact rational `num/den`.
///
/// # Panics
/// If `den` is zero.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Shorthand for an exact rational element `(a,b)` with integer coordinates.
///
/// # Panics
/// If either coordinate is negative.
pub fn qe(a: i64, b: i64) -> QElem {
    Elem::new(q(a, 1), q(b, 1)).expect("non-negative coordinates")
}
