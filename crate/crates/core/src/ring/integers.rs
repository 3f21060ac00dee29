use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CoeffRing, RingDescriptor, Scalar};
use crate::error::{Error, Result};

/// The integers, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<BigInt> {
        if Zero::is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = n.div_rem(d);
        if !Zero::is_zero(&r) {
            return Err(Error::Parse(format!("{n}/{d} is not an integer")));
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_only() {
        let z = Integers;
        assert_eq!(z.from_ratio(&6.into(), &3.into()), Ok(BigInt::from(2)));
        assert!(z.from_ratio(&1.into(), &2.into()).is_err());
        assert_eq!(z.from_ratio(&1.into(), &0.into()), Err(Error::DivisionByZero));
    }

    #[test]
    fn additive_inverse() {
        let a = BigInt::from(-91);
        assert!(Scalar::is_zero(&(a.clone() + -a)));
    }
}
