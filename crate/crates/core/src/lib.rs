//! Order-6 two-prime Whiteman generalized cyclotomy and the objects built on it:
//! binary sequences, their autocorrelation and linear complexity, and the cyclic
//! codes they define over prime fields.

pub mod arith;
pub mod codes;
pub mod cyclotomy;
pub mod error;
pub mod gf;
pub mod linear_complexity;
pub mod poly;
pub mod sequence;
pub mod verify;

pub use codes::CyclicCode;
pub use cyclotomy::{Label, WhitemanCyclotomy};
pub use error::{Error, Result};
pub use gf::{ExtField, FieldElem, PrimeField};
pub use poly::Poly;
pub use sequence::{AcfValue, PeriodicSequence};
