//! The scalar abstraction the rest of the crate is generic over.

use std::fmt;

use num::traits::{FromPrimitive, Num, Signed};

use crate::Rat;

/// Field-like scalar the linear algebra and the algebras are generic over.
///
/// Division must be exact for ranks, echelon forms and feasibility results to
/// be meaningful; the supported instantiation is [`crate::Rat`]. Floating
/// types satisfy the bounds and can be used for quick numeric experiments,
/// but none of the decision procedures are trustworthy under rounding.
pub trait Scalar:
    Num
    + Signed
    + FromPrimitive
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + FromPrimitive
        + Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Scalars that can decide whether an element is a perfect square and, if
/// so, produce the exact square root. The quadratic stage of the bimodule
/// solver needs this to enumerate rational roots.
pub trait RootScalar: Scalar {
    fn sqrt_exact(&self) -> Option<Self>;
}

impl RootScalar for Rat {
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // The fraction is reduced, so both parts must be perfect squares.
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(Rat::new(ns, ds))
        } else {
            None
        }
    }
}

impl RootScalar for f64 {
    fn sqrt_exact(&self) -> Option<Self> {
        if *self < 0.0 {
            return None;
        }
        let r = self.sqrt();
        (r * r == *self).then_some(r)
    }
}

/// Shorthand for building exact rationals in tests and examples.
pub fn rat(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(numer.into(), denom.into())
}

/// Converts a small integer into any scalar.
pub fn from_int<T: Scalar>(value: i64) -> T {
    T::from_i64(value).expect("integer not representable in scalar type")
}
