//! Euclidean division of formal power series over the rationals, with
//! the Schur-function closed forms of its remainders, Padé approximants,
//! Wronskians of complete functions and J-fraction expansions.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals
//! and every truncated series carries the order it is valid to.

pub mod alphabet;
pub mod arith;
pub mod cli;
pub mod closedform;
pub mod contfrac;
pub mod error;
pub mod euclid;
pub mod schur;
pub mod verify;
pub mod wronskian;

pub use alphabet::{complete, complete_with_letter, parse_alphabet, sigma, Alphabet, Sign, VirtualAlphabet};
pub use arith::{DensePoly, LaurentPoly, Rational, Series};
pub use error::{Error, Result};
pub use schur::{conjugate, jacobi_trudi, schur, IntVector, Partition};
