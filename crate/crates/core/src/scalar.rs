//! Scalar trait bound shared by the generic matrix and polynomial types.

use num_traits::{Num, Signed};
use std::fmt::{Debug, Display};

/// Field-like scalars the generic linear algebra is written against.
///
/// Instantiated with [`crate::Rat`] on every verdict path and with `f64`
/// where a numeric guide is good enough.
pub trait Scalar: Clone + Num + Signed + PartialOrd + Debug + Display {}

impl<T> Scalar for T where T: Clone + Num + Signed + PartialOrd + Debug + Display {}
