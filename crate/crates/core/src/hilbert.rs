//! Hilbert polynomial, Gotzmann number and the `rho` invariant of a
//! strongly stable ideal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::StableIdeal;

/// Dense polynomial in `t` with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
#[derive(Default)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn add_scaled(&mut self, other: &RatPoly, c: &BigRational) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
        let trimmed = std::mem::take(self).trim();
        *self = trimmed;
    }

    fn mul_linear(&self, shift: &BigRational) -> RatPoly {
        // (t + shift) * self
        let mut out = vec![BigRational::zero(); self.0.len() + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i + 1] += c;
            out[i] += c * shift;
        }
        RatPoly(out).trim()
    }

    fn eval(&self, t: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}


/// `C(t + shift, k)` as a polynomial in `t`.
fn binomial_poly(shift: i64, k: usize) -> RatPoly {
    let mut p = RatPoly(vec![BigRational::one()]);
    for j in 0..k {
        // factor (t + shift - j) / (j + 1)
        p = p.mul_linear(&BigRational::from_integer(BigInt::from(shift - j as i64)));
        let d = BigRational::from_integer(BigInt::from(j + 1));
        for c in &mut p.0 {
            *c /= &d;
        }
    }
    p
}

/// An integer-valued polynomial `p(t) = sum_k a_k * C(t + k, k)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    binomial: Vec<BigInt>,
    power: RatPoly,
}

impl HilbertPolynomial {
    /// From coordinates `a_k` in the basis `C(t + k, k)`.
    pub fn from_binomial(coords: Vec<BigInt>) -> Self {
        let mut power = RatPoly::default();
        for (k, a) in coords.iter().enumerate() {
            power.add_scaled(&binomial_poly(k as i64, k), &BigRational::from_integer(a.clone()));
        }
        let mut binomial = coords;
        while binomial.last().is_some_and(Zero::is_zero) {
            binomial.pop();
        }
        HilbertPolynomial { binomial, power }
    }

    fn from_power(power: RatPoly) -> Result<Self> {
        let mut rest = power.clone();
        let mut coords = vec![BigInt::zero(); power.0.len()];
        while let Some(d) = rest.degree() {
            // leading coefficient of C(t+d,d) is 1/d!
            let fact: BigInt = (1..=d).map(BigInt::from).product();
            let a = &rest.0[d] * BigRational::from_integer(fact);
            if !a.is_integer() {
                return Err(Error::NotAdmissible(
                    "polynomial is not integer-valued".into(),
                ));
            }
            rest.add_scaled(&binomial_poly(d as i64, d), &-a.clone());
            coords[d] = a.to_integer();
        }
        Ok(Self::from_binomial(coords))
    }

    /// Coordinates in the basis `C(t + k, k)`, lowest `k` first.
    pub fn binomial_coordinates(&self) -> &[BigInt] {
        &self.binomial
    }

    pub fn degree(&self) -> Option<usize> {
        self.power.degree()
    }

    pub fn eval(&self, s: i64) -> BigInt {
        let v = self.power.eval(&BigRational::from_integer(BigInt::from(s)));
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Number of summands in the Gotzmann decomposition
    /// `p(t) = C(t+a1, a1) + C(t+a2-1, a2) + ... + C(t+ar-(r-1), ar)`.
    pub fn gotzmann_number(&self) -> Result<u64> {
        const LIMIT: u64 = 1 << 24;
        let mut rest = self.power.clone();
        let mut r: u64 = 0;
        while let Some(a) = rest.degree() {
            if !rest.0[a].is_positive() {
                return Err(Error::NotAdmissible(format!(
                    "negative leading coefficient after {r} summands"
                )));
            }
            if r >= LIMIT {
                return Err(Error::NotAdmissible("Gotzmann number too large".into()));
            }
            let shift = a as i64 - r as i64;
            rest.add_scaled(&binomial_poly(shift, a), &-BigRational::one());
            r += 1;
        }
        Ok(r)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.power.0.iter().enumerate().rev() {
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
            let coeff = if a.is_integer() {
                a.to_string()
            } else {
                format!("({a})")
            };
            match i {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coeff}*")?;
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

impl fmt::Debug for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub polynomial: HilbertPolynomial,
    pub gotzmann_number: u64,
    pub rho: u32,
}

impl StableIdeal {
    /// Interpolates `|N(J)_s|` for `s = m..m+n` and checks the next value.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        let m = self.max_degree() as i64;
        let n = self.nvars() as i64 - 1;
        let points: Vec<(i64, BigInt)> = (m..=m + n)
            .map(|s| (s, BigInt::from(self.sous_escalier(s as u32).len())))
            .collect();
        let power = lagrange(&points);
        let polynomial = HilbertPolynomial::from_power(power)
            .map_err(|e| Error::Internal(format!("Hilbert function not polynomial: {e}")))?;
        let check = m + n + 1;
        if polynomial.eval(check) != BigInt::from(self.sous_escalier(check as u32).len()) {
            return Err(Error::Internal(format!(
                "Hilbert polynomial check failed in degree {check}"
            )));
        }
        let gotzmann_number = polynomial.gotzmann_number()?;
        Ok(HilbertData {
            polynomial,
            gotzmann_number,
            rho: self.rho(),
        })
    }
}

fn lagrange(points: &[(i64, BigInt)]) -> RatPoly {
    let mut out = RatPoly::default();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly(vec![BigRational::one()]);
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul_linear(&BigRational::from_integer(BigInt::from(-xj)));
                denom *= BigInt::from(xi - xj);
            }
        }
        out.add_scaled(&basis, &BigRational::new(yi.clone(), denom));
    }
    out
}
