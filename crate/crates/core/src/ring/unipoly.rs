use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoeffRing, Integers, RingDescriptor};
use crate::error::Result;

/// A polynomial in one variable `t` over the integers, dense, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn t() -> Self {
        UniPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly::new(vec![c])
    }

    /// Coefficients from the constant term up.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn zip_with(&self, rhs: &UniPoly, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    op(
                        self.coeffs.get(i).unwrap_or(&zero),
                        rhs.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&UniPoly> for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&UniPoly> for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&UniPoly> for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        self * &rhs
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl super::Scalar for UniPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && One::is_one(&self.coeffs[0])
    }

    fn is_negative(&self) -> bool {
        self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).count() == 1
            && self.coeffs.last().is_some_and(Signed::is_negative)
    }

    fn is_atomic(&self) -> bool {
        self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).count() <= 1
    }
}

/// The ring `ZZ[t]`, used for one-parameter specializations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UniRing;

impl CoeffRing for UniRing {
    type Elem = UniPoly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::UnivariateT
    }

    fn zero(&self) -> UniPoly {
        UniPoly::default()
    }

    fn from_bigint(&self, n: &BigInt) -> UniPoly {
        UniPoly::constant(n.clone())
    }

    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<UniPoly> {
        Integers.from_ratio(n, d).map(UniPoly::constant)
    }

    fn named_variable(&self, name: &str) -> Option<UniPoly> {
        (name == "t").then(UniPoly::t)
    }
}
