//! Exact coefficient rings.
//!
//! Elements carry enough information to do arithmetic on their own (a prime
//! field element knows its modulus), so polynomial code only needs the
//! [`Scalar`] bound. Constants, parsing and inverses go through a ring
//! context implementing [`CoeffRing`], because some rings are only known at
//! runtime.

mod hom;
mod integers;
mod param;
mod prime;
mod rationals;
mod unipoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use hom::RingHomomorphism;
pub use integers::Integers;
pub use param::{ParamMonomial, ParamPoly, ParamRing, ParamStyle, ParameterVariable};
pub use prime::{is_prime, Fp, PrimeField};
pub use rationals::Rationals;
pub use unipoly::{UniPoly, UniRing};

/// Arithmetic of a ring element.
///
/// Mixing elements of different rings (e.g. two prime fields) panics.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool;

    /// Whether the printed form starts with a minus sign that a printer may
    /// pull out in front of a term.
    fn is_negative(&self) -> bool {
        false
    }

    /// Whether the printed form is a single token that needs no
    /// parentheses when used as a factor.
    fn is_atomic(&self) -> bool {
        true
    }

    /// Spelling for machine-readable output; parameters use the tuple form.
    fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// A coefficient ring context.
pub trait CoeffRing: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Scalar;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }

    /// Image of an integer under the canonical map from `ZZ`.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    /// The element `n/d`, if it exists in the ring.
    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<Self::Elem>;

    /// The element standing for a parameter `C_{alpha,beta}`, for rings that
    /// have them.
    fn parameter(&self, _v: &ParameterVariable) -> Option<Self::Elem> {
        None
    }

    /// A named ring variable such as `t`.
    fn named_variable(&self, _name: &str) -> Option<Self::Elem> {
        None
    }

    fn is_field(&self) -> bool {
        false
    }
}

/// Rings in which every nonzero element is invertible.
pub trait Field: CoeffRing {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
}

/// Names the coefficient rings available from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    PrimeField(u64),
    Parameters,
    UnivariateT,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "ZZ"),
            RingDescriptor::Rationals => write!(f, "QQ"),
            RingDescriptor::PrimeField(p) => write!(f, "ZZ/{p}"),
            RingDescriptor::Parameters => write!(f, "ZZ[C]"),
            RingDescriptor::UnivariateT => write!(f, "ZZ[t]"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "ZZ" | "Z" => Ok(RingDescriptor::Integers),
            "QQ" | "Q" => Ok(RingDescriptor::Rationals),
            "ZZ[C]" => Ok(RingDescriptor::Parameters),
            "ZZ[t]" => Ok(RingDescriptor::UnivariateT),
            _ => {
                let p = s
                    .strip_prefix("ZZ/")
                    .or_else(|| s.strip_prefix("GF("))
                    .map(|rest| rest.trim_end_matches(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown ring `{s}`")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Ok(RingDescriptor::PrimeField(p))
            }
        }
    }
}
