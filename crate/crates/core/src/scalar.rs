//! Scalar traits the spectral machinery is generic over.
//!
//! Multiplicities are lattice counts, so they only need a commutative monoid
//! with subtraction where the result is known to be non-negative. Character
//! polynomial coefficients are signed integers. Both traits are implemented
//! for the fixed-width primitives and for the arbitrary-precision types from
//! `num-bigint`; the crate root picks the big-integer instantiations as the
//! default aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, Mul, SubAssign};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Exact non-negative counts.
pub trait Count:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + FromPrimitive
    + ToPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Zero
        + One
        + FromPrimitive
        + ToPrimitive
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + Send
        + Sync
{
}

/// Exact signed integer coefficients.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Signed
    + FromPrimitive
    + ToPrimitive
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every coefficient type holds an i64")
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}
