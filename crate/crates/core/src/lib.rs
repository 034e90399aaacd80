//! Complete reducibility toolkit: root-system invariants, characteristic
//! bounds, an implication engine, and finite-field module computations.
//!
//! Weight arithmetic is generic over [`scalar::WeightScalar`]; the aliases
//! below fix the scalar to `i64` or to arbitrary-precision integers.

pub mod criteria;
pub mod ffalg;
pub mod meataxe;
pub mod repcalc;
pub mod rootsys;
pub mod saturate;
pub mod scalar;

use num::BigInt;

pub use ffalg::{FqElem, FqField, MatRep, Matrix};
pub use rootsys::{Family, GroupSpec, RootSystem, SimpleType};

pub type Weight = rootsys::Weight<i64>;
pub type BigWeight = rootsys::Weight<BigInt>;
pub type ModuleSpec = repcalc::ModuleSpec<i64>;
pub type BigModuleSpec = repcalc::ModuleSpec<BigInt>;
pub type Factor = repcalc::Factor<i64>;
pub type PDigits = repcalc::PDigits<i64>;
