use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{CoeffRing, Field, RingDescriptor, Scalar};
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The field `ZZ/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Fp {
        Fp { v: v % self.p, p: self.p }
    }
}

/// An element of `ZZ/p`, printed as its representative in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.p, other.p, "mixing elements of ZZ/{} and ZZ/{}", self.p, other.p);
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            v: (self.v + rhs.v) % self.p,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            v: (self.v + self.p - rhs.v) % self.p,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
}

impl Add<&Fp> for Fp {
    type Output = Fp;
    fn add(self, rhs: &Fp) -> Fp {
        self + *rhs
    }
}

impl Sub<&Fp> for Fp {
    type Output = Fp;
    fn sub(self, rhs: &Fp) -> Fp {
        self - *rhs
    }
}

impl Mul<&Fp> for Fp {
    type Output = Fp;
    fn mul(self, rhs: &Fp) -> Fp {
        self * *rhs
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }
}

impl CoeffRing for PrimeField {
    type Elem = Fp;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PrimeField(self.p)
    }

    fn zero(&self) -> Fp {
        self.elem(0)
    }

    fn from_bigint(&self, n: &BigInt) -> Fp {
        let r = n.mod_floor(&BigInt::from(self.p));
        self.elem(r.to_u64().expect("residue fits"))
    }

    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<Fp> {
        let d = self.from_bigint(d);
        Ok(self.from_bigint(n) * self.inv(&d)?)
    }

    fn is_field(&self) -> bool {
        true
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &Fp) -> Result<Fp> {
        if a.v == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(a.pow(self.p - 2))
    }
}
