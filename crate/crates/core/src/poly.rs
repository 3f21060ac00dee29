//! Sparse homogeneous-friendly polynomials in `x0..xn` over a [`Scalar`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::ring::Scalar;

/// A polynomial stored as a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms ascending by `DegLex`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Monomial, S)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&S> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn remove_term(&mut self, m: &Monomial) -> Option<S> {
        self.terms.remove(m)
    }

    /// `self += c * shift * other`.
    pub fn add_scaled(&mut self, other: &Poly<S>, c: &S, shift: &Monomial) {
        for (m, d) in &other.terms {
            self.add_term(m.mul(shift), c.clone() * d);
        }
    }

    /// `self -= c * shift * other`.
    pub fn sub_scaled(&mut self, other: &Poly<S>, c: &S, shift: &Monomial) {
        for (m, d) in &other.terms {
            self.add_term(m.mul(shift), -(c.clone() * d));
        }
    }

    pub fn mul_monomial(&self, shift: &Monomial) -> Poly<S> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(shift), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Poly<S> {
        let mut out = Poly::zero(self.nvars);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), c.clone() * d);
        }
        out
    }

    pub fn neg(&self) -> Poly<S> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.mul(b), c.clone() * d);
            }
        }
        out
    }

    /// The common degree of all terms; `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(d) = degrees.next() else {
            return Ok(None);
        };
        if degrees.any(|e| e != d) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(d))
    }

    pub fn map_coeffs<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Text with terms sorted descending by the given order.
    pub fn to_string_ordered(&self, order: TermOrder) -> String {
        let mut terms: Vec<(&Monomial, &S)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        if terms.is_empty() {
            return "0".into();
        }
        let single = terms.len() == 1;
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let a = if neg { -c.clone() } else { c.clone() };
            if m.is_one() {
                if a.is_atomic() || single {
                    out.push_str(&a.to_string());
                } else {
                    out.push_str(&format!("({a})"));
                }
            } else if a.is_one() {
                out.push_str(&m.to_string());
            } else if a.is_atomic() {
                out.push_str(&format!("{a}*{m}"));
            } else {
                out.push_str(&format!("({a})*{m}"));
            }
        }
        out
    }
}

/// Prints terms descending by `DegRevLex`.
impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_ordered(TermOrder::DegRevLex))
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
