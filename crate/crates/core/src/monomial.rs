//! Exponent-vector monomials, term orders and the Borel partial order.
//!
//! Variables are indexed `x0 < x1 < ... < xn`. Exponent vectors are stored
//! x0-first, so `[0, 1, 1]` is `x2*x1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 6]>;

/// A monomial `x^alpha` in a fixed number of variables.
///
/// The `Ord` implementation is `DegLex`, which is also the canonical order
/// for every sorted collection of monomials in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the smallest variable dividing the monomial.
    pub fn min_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .position(|&e| e > 0)
            .ok_or(Error::UnitMonomial)
    }

    /// Index of the greatest variable dividing the monomial.
    pub fn max_var(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .ok_or(Error::UnitMonomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Multiplies by a single variable.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// `self / divisor`, failing when `divisor` does not divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.checked_div(divisor).ok_or_else(|| Error::NotDivisible {
            divisor: divisor.clone(),
            dividend: self.clone(),
        })
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Divides by `x_i`, returning `None` if `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// `(x_to / x_from) * self`; requires `x_from | self`.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        self.div_var(from).map(|m| m.mul_var(to))
    }

    /// Parses the text syntax `x2^2*x1` (or `1` for the unit monomial).
    pub fn parse(text: &str, nvars: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(nvars);
        if text == "1" {
            return Ok(m);
        }
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected a variable, found `{factor}`")))?;
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i.trim(), p.trim()),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let pow: u32 = pow
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if idx >= nvars {
                return Err(Error::Parse(format!(
                    "variable x{idx} out of range for {nvars} variables"
                )));
            }
            m.exps[idx] += pow;
        }
        Ok(m)
    }

    /// Exponent digits x0-first, e.g. `011` for `x2*x1`; `None` if an
    /// exponent does not fit in one digit.
    pub fn digit_string(&self) -> Option<String> {
        self.exps
            .iter()
            .map(|&e| std::char::from_digit(e, 10))
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        TermOrder::DegLex.compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Term orders on monomials, always with `x0 < x1 < ... < xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Ungraded lexicographic order: the greatest variable decides first.
    Lex,
    /// Degree first, then `Lex`.
    DegLex,
    /// Degree first; on ties the monomial with the smaller exponent on the
    /// smallest differing variable is greater.
    DegRevLex,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
            TermOrder::DegRevLex => "degrevlex",
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "deglex" | "grlex" => Ok(TermOrder::DegLex),
            "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
            other => Err(Error::Parse(format!("unknown term order `{other}`"))),
        }
    }
}

/// `a >=_B b` in the Borel order.
///
/// Uses the cumulative criterion: for every `i`, the part of `a` in the
/// variables `x_i..x_n` has degree at least that of `b`.
pub fn borel_geq(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::VarCountMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    let (mut sa, mut sb) = (0u32, 0u32);
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        sa += x;
        sb += y;
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monomials of degree `s` in `nvars` variables, sorted descending by
/// `DegLex`.
pub fn monomials_of_degree(nvars: usize, s: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, nvars - 1, s, &mut out);
    out
}

// Walks the highest variable first so the output is already DegLex-descending.
fn fill(exps: &mut [u32], idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if idx == 0 {
        exps[0] = remaining;
        out.push(Monomial::new(exps.iter().copied()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[idx] = e;
        fill(exps, idx - 1, remaining - e, out);
    }
    exps[idx] = 0;
}
