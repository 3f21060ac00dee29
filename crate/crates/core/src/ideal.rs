//! Monomial ideals and strongly stable ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

/// Removes every monomial divisible by another one in the collection.
///
/// The result is sorted descending by `DegLex` and free of duplicates.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    // ascending degree, so divisors are seen before their multiples
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A monomial ideal stored by its minimal generators.
///
/// An empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Invalid("at least one variable is required".into()));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::VarCountMismatch {
                expected: nvars,
                found: g.nvars(),
            });
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimalize(gens),
        })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    /// Parses a comma-separated generator list such as `x2^2,x2*x1,x1^3`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::zero(nvars));
        }
        let gens = text
            .split(',')
            .map(|g| Monomial::parse(g, nvars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, descending by `DegLex`.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.generators.contains(m)
    }

    /// First failure of the exchange condition, as `(generator, j, i)` with
    /// `x_i/x_j * generator` outside the ideal.
    pub fn stability_violation(&self) -> Option<(Monomial, usize, usize)> {
        for g in &self.generators {
            for j in 0..self.nvars {
                if g.exponent(j) == 0 {
                    continue;
                }
                for i in j + 1..self.nvars {
                    let moved = g.exchange(j, i).expect("x_j divides g");
                    if !self.contains(&moved) {
                        return Some((g.clone(), j, i));
                    }
                }
            }
        }
        None
    }

    /// Checking the generators suffices: the exchange condition propagates
    /// to every multiple.
    pub fn is_strongly_stable(&self) -> bool {
        self.stability_violation().is_none()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "0");
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.is_strongly_stable()
}

/// The unique factorization `m = generator * cofactor` with the generator in
/// `B_J` and `min generator >= max cofactor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarDecomposition {
    pub generator: Monomial,
    pub cofactor: Monomial,
}

/// A proper, nonzero, strongly stable monomial ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StableIdeal {
    ideal: MonomialIdeal,
    max_degree: u32,
    min_degree: u32,
}

impl StableIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if let Some((generator, from, to)) = ideal.stability_violation() {
            return Err(Error::NotStronglyStable {
                generator,
                from,
                to,
            });
        }
        let degrees = ideal.generators().iter().map(Monomial::degree);
        let max_degree = degrees.clone().max().unwrap_or(0);
        let min_degree = degrees.min().unwrap_or(0);
        Ok(StableIdeal {
            ideal,
            max_degree,
            min_degree,
        })
    }

    pub fn from_generators(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::new(MonomialIdeal::new(nvars, gens)?)
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        Self::new(MonomialIdeal::parse(text, nvars)?)
    }

    pub fn as_monomial_ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn generators(&self) -> &[Monomial] {
        self.ideal.generators()
    }

    /// Largest degree of a minimal generator (the `m` of the degree bounds).
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn min_degree(&self) -> u32 {
        self.min_degree
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.ideal.contains(m)
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.ideal.is_generator(m)
    }

    /// Degree-`s` monomials outside the ideal, descending by `DegLex`.
    pub fn sous_escalier(&self, s: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), s)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Degree-`s` monomials of the ideal, descending by `DegLex`.
    pub fn monomials_in_degree(&self, s: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), s)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Rank of `J_s` as a free module.
    pub fn rank_in_degree(&self, s: u32) -> usize {
        self.monomials_in_degree(s).len()
    }

    /// Peels off the smallest variable while the current monomial is in
    /// `J` but not a minimal generator.
    pub fn star_decompose(&self, m: &Monomial) -> Result<StarDecomposition> {
        if !self.contains(m) {
            return Err(Error::NotInIdeal(m.clone()));
        }
        let mut current = m.clone();
        let mut cofactor = Monomial::one(self.nvars());
        while !self.is_generator(&current) {
            let j = current.min_var()?;
            current = current.div_var(j).expect("min var divides");
            cofactor = cofactor.mul_var(j);
            debug_assert!(self.contains(&current));
        }
        Ok(StarDecomposition {
            generator: current,
            cofactor,
        })
    }

    /// Minimal generators of `J_{>=m}`.
    pub fn truncate(&self, m: u32) -> StableIdeal {
        let mut gens: Vec<Monomial> = self
            .generators()
            .iter()
            .filter(|g| g.degree() > m)
            .cloned()
            .collect();
        gens.extend(self.monomials_in_degree(m));
        let ideal = MonomialIdeal::new(self.nvars(), gens).expect("same variable count");
        StableIdeal::new(ideal).expect("truncations of strongly stable ideals are strongly stable")
    }

    /// For strongly stable ideals: saturated iff no generator involves `x0`.
    pub fn is_saturated(&self) -> bool {
        self.generators().iter().all(|g| g.exponent(0) == 0)
    }

    /// `J : x0^infinity`, obtained by setting `x0 = 1` in the generators.
    pub fn saturation(&self) -> Result<StableIdeal> {
        let gens = self.generators().iter().map(|g| {
            let mut e = g.exponents().to_vec();
            e[0] = 0;
            Monomial::new(e)
        });
        StableIdeal::new(MonomialIdeal::new(self.nvars(), gens)?)
    }

    /// Largest degree of a generator divisible by `x1`, or 0.
    pub fn rho(&self) -> u32 {
        if self.nvars() < 2 {
            return 0;
        }
        self.generators()
            .iter()
            .filter(|g| g.exponent(1) > 0)
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Decides whether `J = J'_{>=m}` for a saturated strongly stable `J'`.
    pub fn m_truncation(&self) -> MTruncation {
        let saturation = match self.saturation() {
            Ok(s) => s,
            Err(_) => return MTruncation::No,
        };
        if &saturation == self {
            return MTruncation::Yes {
                min_degree: self.min_degree,
                saturation,
            };
        }
        // generators involving x0 can only sit in the truncation degree
        let mut x0_degrees = self
            .generators()
            .iter()
            .filter(|g| g.exponent(0) > 0)
            .map(Monomial::degree);
        let m = x0_degrees.next().expect("non-saturated ideal has an x0 generator");
        if x0_degrees.any(|d| d != m) {
            return MTruncation::No;
        }
        if &saturation.truncate(m) == self {
            MTruncation::Yes {
                min_degree: m,
                saturation,
            }
        } else {
            MTruncation::No
        }
    }
}

/// Answer of [`StableIdeal::m_truncation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MTruncation {
    /// `J = saturation_{>=m}` for every `m <= min_degree` when `J` is
    /// saturated, and for exactly `m = min_degree` otherwise.
    Yes {
        saturation: StableIdeal,
        min_degree: u32,
    },
    No,
}

impl MTruncation {
    pub fn is_yes(&self) -> bool {
        matches!(self, MTruncation::Yes { .. })
    }
}

impl fmt::Display for StableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

impl fmt::Debug for StableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.ideal)
    }
}
