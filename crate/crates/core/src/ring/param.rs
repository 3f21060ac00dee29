//! The parameter ring `ZZ[C]`, one variable `C_{alpha,beta}` per pair of a
//! minimal generator and a sous-escalier monomial of the same degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::{CoeffRing, RingDescriptor};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// The parameter `C_{alpha,beta}`: coefficient of `x^beta` in `f_alpha`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParameterVariable {
    pub head: Monomial,
    pub tail: Monomial,
}

/// How parameters are spelled in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ParamStyle {
    /// `C_{011,020}`: exponent digits, x0-first.
    #[default]
    Alias,
    /// `C[0,1,1|0,2,0]`: exponent tuples, x0-first.
    Tuple,
}

impl ParameterVariable {
    pub fn new(head: Monomial, tail: Monomial) -> Self {
        ParameterVariable { head, tail }
    }

    pub fn nvars(&self) -> usize {
        self.head.nvars()
    }

    /// Falls back to the tuple form when an exponent exceeds 9.
    pub fn to_string_with(&self, style: ParamStyle) -> String {
        if style == ParamStyle::Alias {
            if let (Some(h), Some(t)) = (self.head.digit_string(), self.tail.digit_string()) {
                return format!("C_{{{h},{t}}}");
            }
        }
        let join = |m: &Monomial| {
            m.exponents()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("C[{}|{}]", join(&self.head), join(&self.tail))
    }

    /// Accepts either spelling.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("bad parameter `{text}`"));
        if let Some(body) = text.strip_prefix("C_{").and_then(|r| r.strip_suffix('}')) {
            let (h, t) = body.split_once(',').ok_or_else(bad)?;
            let digits = |s: &str| -> Result<Monomial> {
                let e = s
                    .trim()
                    .chars()
                    .map(|c| c.to_digit(10).ok_or_else(bad))
                    .collect::<Result<Vec<u32>>>()?;
                if e.is_empty() {
                    return Err(bad());
                }
                Ok(Monomial::new(e))
            };
            let (h, t) = (digits(h)?, digits(t)?);
            if h.nvars() != t.nvars() {
                return Err(bad());
            }
            return Ok(ParameterVariable::new(h, t));
        }
        if let Some(body) = text.strip_prefix("C[").and_then(|r| r.strip_suffix(']')) {
            let (h, t) = body.split_once('|').ok_or_else(bad)?;
            let tuple = |s: &str| -> Result<Monomial> {
                let e = s
                    .split(',')
                    .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<u32>>>()?;
                Ok(Monomial::new(e))
            };
            let (h, t) = (tuple(h)?, tuple(t)?);
            if h.nvars() != t.nvars() {
                return Err(bad());
            }
            return Ok(ParameterVariable::new(h, t));
        }
        Err(bad())
    }
}

/// Canonical parameter order: head descending by `DegLex`, then tail
/// descending. `Less` means earlier in the list.
impl Ord for ParameterVariable {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .head
            .cmp(&self.head)
            .then_with(|| other.tail.cmp(&self.tail))
    }
}

impl PartialOrd for ParameterVariable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ParameterVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(ParamStyle::Alias))
    }
}

impl fmt::Debug for ParameterVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial in the parameters, as sorted `(variable, exponent)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamMonomial {
    factors: SmallVec<[(ParameterVariable, u32); 2]>,
}

impl ParamMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: ParameterVariable) -> Self {
        let mut factors = SmallVec::new();
        factors.push((v, 1));
        ParamMonomial { factors }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(ParameterVariable, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        let mut out = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().cloned());
        ParamMonomial { factors: out }
    }

    fn write_with(&self, f: &mut impl fmt::Write, style: ParamStyle) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", v.to_string_with(style))?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `DegRevLex`, where parameters earlier in the canonical order are the
/// greater variables.
impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut a, mut b) = (self.factors.iter().rev(), other.factors.iter().rev());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                // the exhausted side has exponent 0 on a smaller variable
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Equal if ea == eb => continue,
                    Ordering::Equal => return eb.cmp(ea),
                    // va is the smaller variable and b does not contain it
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                },
            }
        }
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, ParamStyle::Alias)
    }
}

/// An element of `ZZ[C]`: sparse, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMonomial, BigInt>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(ParamMonomial::one(), c);
        p
    }

    pub fn var(v: ParameterVariable) -> Self {
        let mut p = Self::zero();
        p.add_term(ParamMonomial::var(v), BigInt::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ParamMonomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: ParamMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree in the parameters; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ParamMonomial::degree).max()
    }

    /// `Some(v)` if the polynomial is `v` or `-v` for a single parameter.
    pub fn as_signed_variable(&self) -> Option<&ParameterVariable> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if m.factors.len() == 1 && m.factors[0].1 == 1 && c.abs().is_one() {
            Some(&m.factors[0].0)
        } else {
            None
        }
    }

    pub fn variables(&self) -> Vec<ParameterVariable> {
        let mut vs: Vec<ParameterVariable> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Sets the given parameters to zero.
    pub fn kill(&self, vars: &[ParameterVariable]) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.factors.iter().any(|(v, _)| vars.contains(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_string_with(&self, style: ParamStyle) -> String {
        let mut out = String::new();
        self.write_with(&mut out, style).expect("writing to a string");
        out
    }

    fn write_with(&self, f: &mut impl fmt::Write, style: ParamStyle) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_with(f, style)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, ParamStyle::Alias)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add<&ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: &ParamPoly) -> ParamPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Sub<&ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: &ParamPoly) -> ParamPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
        self
    }
}

impl Mul<&ParamPoly> for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        self + &rhs
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self - &rhs
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        self * &rhs
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(mut self) -> ParamPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl super::Scalar for ParamPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && One::is_one(c))
    }

    fn is_negative(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(Signed::is_negative)
    }

    fn is_atomic(&self) -> bool {
        self.terms.len() <= 1
    }

    fn to_canonical_string(&self) -> String {
        self.to_string_with(ParamStyle::Tuple)
    }
}

/// The ring context for [`ParamPoly`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParamRing;

impl CoeffRing for ParamRing {
    type Elem = ParamPoly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Parameters
    }

    fn zero(&self) -> ParamPoly {
        ParamPoly::zero()
    }

    fn from_bigint(&self, n: &BigInt) -> ParamPoly {
        ParamPoly::constant(n.clone())
    }

    fn from_ratio(&self, n: &BigInt, d: &BigInt) -> Result<ParamPoly> {
        super::Integers.from_ratio(n, d).map(ParamPoly::constant)
    }

    fn parameter(&self, v: &ParameterVariable) -> Option<ParamPoly> {
        Some(ParamPoly::var(v.clone()))
    }
}
