//! Finite fields, dense matrices over them, and matrix representations.

pub mod field;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod rep;

pub use field::{FieldError, FqElem, FqField};
pub use io::{parse_rep, write_rep, RepFileError};
pub use matrix::{solve, Matrix, MatrixError};
pub use poly::{Poly, PolyRing};
pub use rep::{sl2_generators, MatRep, RepError};
