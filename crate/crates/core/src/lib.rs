//! Marked bases over strongly stable monomial ideals.
//!
//! Polynomials and marked sets are generic over a coefficient ring
//! ([`ring::CoeffRing`]); the aliases below fix the common choices.

// `from_*` on a ring context is intended: the modulus lives in `self`.
#![allow(clippy::wrong_self_convention, clippy::type_complexity)]

pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod json;
pub mod marked;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scheme;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, StableIdeal};
pub use marked::{MarkedPolynomial, MarkedSet};
pub use monomial::{Monomial, TermOrder};
pub use poly::Poly;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type IntegerPoly = Poly<BigInt>;
pub type RationalPoly = Poly<BigRational>;
pub type PrimePoly = Poly<ring::Fp>;
pub type ParamCoeffPoly = Poly<ring::ParamPoly>;

pub type IntegerMarkedSet = MarkedSet<ring::Integers>;
pub type RationalMarkedSet = MarkedSet<ring::Rationals>;
pub type PrimeMarkedSet = MarkedSet<ring::PrimeField>;
pub type GenericMarkedSet = MarkedSet<ring::ParamRing>;
