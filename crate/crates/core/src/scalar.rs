//! Integer scalar abstraction for weight arithmetic.
//!
//! Weight coordinates, pairings and `n(λ)` are computed generically over any
//! signed integer type. `i64` is the everyday choice; [`num::BigInt`] is used
//! whenever coefficients may grow without bound (large Frobenius digits,
//! high-rank products).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num::bigint::ToBigInt;
use num::{BigInt, Integer, Signed, ToPrimitive};

/// Signed integer usable as a weight coordinate.
pub trait WeightScalar:
    Integer + Signed + Clone + Debug + Display + Hash + From<i64> + ToBigInt + ToPrimitive + Send + Sync + 'static
{
    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("integer scalars always convert to BigInt")
    }
}

impl<T> WeightScalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + From<i64>
        + ToBigInt
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
