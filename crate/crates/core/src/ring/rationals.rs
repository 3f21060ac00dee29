use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CoeffRing, Field, RingDescriptor, Scalar};
use crate::error::{Error, Result};

/// The rationals, kept as fully reduced fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_atomic(&self) -> bool {
        // a/b binds looser than a product
        self.is_integer()
    }
}

impl CoeffRing for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<BigRational> {
        if Zero::is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(n.clone(), d.clone()))
    }

    fn is_field(&self) -> bool {
        true
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if Zero::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}
