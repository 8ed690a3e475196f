use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// A number type usable as a coordinate.
///
/// Elements only ever hold non-negative values, but intermediate quantities
/// such as diagonal offsets `a - b` are signed, so the carrier must be too.
pub trait Coord: Num + Signed + PartialOrd + Clone + Debug {}

impl<T: Num + Signed + PartialOrd + Clone + Debug> Coord for T {}

pub(crate) fn min_of<T: Coord>(x: &T, y: &T) -> T {
    if x <= y {
        x.clone()
    } else {
        y.clone()
    }
}

pub(crate) fn max_of<T: Coord>(x: &T, y: &T) -> T {
    if x >= y {
        x.clone()
    } else {
        y.clone()
    }
}

pub(crate) fn two<T: Coord>() -> T {
    T::one() + T::one()
}

/// Wraps a value the caller has already shown to be non-negative.
pub(crate) fn nonneg<T: Coord>(value: T) -> NonNeg<T> {
    debug_assert!(!value.is_negative(), "{value:?} is negative");
    NonNeg(value)
}

/// A coordinate known to be `>= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NonNeg<T>(T);

impl<T: Coord> NonNeg<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_negative() {
            Err(Error::NegativeScalar(format!("{value:?}")))
        } else {
            Ok(NonNeg(value))
        }
    }

    /// Like [`NonNeg::new`] but also rejects zero.
    pub fn positive(value: T, what: &'static str) -> Result<Self> {
        if value > T::zero() {
            Ok(NonNeg(value))
        } else {
            Err(Error::NonPositive { what, value: format!("{value:?}") })
        }
    }

    pub fn zero() -> Self {
        NonNeg(T::zero())
    }

    pub fn get(&self) -> &T {
        &self.0
    }

    pub fn into_inner(self) -> T {
        self.0
    }
}

impl<T> AsRef<T> for NonNeg<T> {
    fn as_ref(&self) -> &T {
        &self.0
    }
}
