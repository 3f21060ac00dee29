//! Marked polynomials and marked sets over a strongly stable ideal.
//!
//! A marked polynomial is stored as `f = Ht(f) + T(f)`: the tail holds the
//! coefficients exactly as they appear in `f`.

mod obstruction;
mod reduce;
mod slice;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::StableIdeal;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::{CoeffRing, Scalar};

pub use obstruction::{ek_pairs, BasisCertificate, EkPair, EkWitness, ObstructionModule};
pub use reduce::{NormalFormTable, ReductionStep};
pub use slice::{AuxiliaryBasis, DegreeSlice, Multiple};

/// A homogeneous polynomial with a distinguished head term of coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct MarkedPolynomial<S: Scalar> {
    head: Monomial,
    poly: Poly<S>,
}

impl<S: Scalar> MarkedPolynomial<S> {
    /// Builds `head + tail`; the tail must not mention the head.
    pub fn new(head: Monomial, one: S, tail: Poly<S>) -> Result<Self> {
        if tail.coeff(&head).is_some() {
            return Err(Error::InvalidMarkedSet(format!(
                "tail of {head} contains its head"
            )));
        }
        let d = head.degree();
        if tail.support().any(|m| m.degree() != d) {
            return Err(Error::NotHomogeneous);
        }
        let mut poly = tail;
        poly.add_term(head.clone(), one);
        Ok(MarkedPolynomial { head, poly })
    }

    pub fn head(&self) -> &Monomial {
        &self.head
    }

    pub fn degree(&self) -> u32 {
        self.head.degree()
    }

    /// The whole polynomial `f`.
    pub fn poly(&self) -> &Poly<S> {
        &self.poly
    }

    /// `T(f) = f - Ht(f)`, ascending by `DegLex`.
    pub fn tail(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        let head = &self.head;
        self.poly.terms().filter(move |(m, _)| *m != head)
    }

    pub fn tail_poly(&self) -> Poly<S> {
        let mut p = self.poly.clone();
        p.remove_term(&self.head);
        p
    }
}

impl<S: Scalar> std::fmt::Display for MarkedPolynomial<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl<S: Scalar> std::fmt::Debug for MarkedPolynomial<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}", self.head, self.poly)
    }
}

/// One marked polynomial per minimal generator, tails on the sous-escalier.
#[derive(Clone)]
pub struct MarkedSet<R: CoeffRing> {
    ideal: StableIdeal,
    ring: R,
    polys: Vec<MarkedPolynomial<R::Elem>>,
    index: HashMap<Monomial, usize>,
}

impl<R: CoeffRing> MarkedSet<R> {
    fn assemble(ideal: StableIdeal, ring: R, polys: Vec<MarkedPolynomial<R::Elem>>) -> Self {
        let index = polys
            .iter()
            .enumerate()
            .map(|(i, f)| (f.head.clone(), i))
            .collect();
        MarkedSet {
            ideal,
            ring,
            polys,
            index,
        }
    }

    /// Tail coefficients keyed by `(head, tail monomial)`; missing entries
    /// are zero.
    pub fn from_tails(
        ideal: StableIdeal,
        ring: R,
        tails: impl IntoIterator<Item = ((Monomial, Monomial), R::Elem)>,
    ) -> Result<Self> {
        let n = ideal.nvars();
        let mut per_head: HashMap<Monomial, Poly<R::Elem>> = ideal
            .generators()
            .iter()
            .map(|g| (g.clone(), Poly::zero(n)))
            .collect();
        for ((head, beta), c) in tails {
            let tail = per_head.get_mut(&head).ok_or_else(|| {
                Error::InvalidMarkedSet(format!("{head} is not a minimal generator"))
            })?;
            check_tail_monomial(&ideal, &head, &beta)?;
            if tail.coeff(&beta).is_some() {
                return Err(Error::InvalidMarkedSet(format!(
                    "duplicate tail entry ({head}, {beta})"
                )));
            }
            tail.add_term(beta, c);
        }
        let polys = ideal
            .generators()
            .iter()
            .map(|g| {
                let tail = per_head.remove(g).expect("one entry per generator");
                MarkedPolynomial::new(g.clone(), ring.one(), tail)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(ideal, ring, polys))
    }

    /// Reads the head of each polynomial off its unique monomial in `J`.
    pub fn from_polynomials(ideal: StableIdeal, ring: R, polys: Vec<Poly<R::Elem>>) -> Result<Self> {
        let mut by_head: HashMap<Monomial, Poly<R::Elem>> = HashMap::new();
        for p in polys {
            if p.nvars() != ideal.nvars() {
                return Err(Error::VarCountMismatch {
                    expected: ideal.nvars(),
                    found: p.nvars(),
                });
            }
            p.homogeneous_degree()?;
            let in_j: Vec<&Monomial> = p.support().filter(|m| ideal.contains(m)).collect();
            let [head] = in_j.as_slice() else {
                return Err(Error::InvalidMarkedSet(format!(
                    "`{p}` must have exactly one monomial in the ideal, found {}",
                    in_j.len()
                )));
            };
            let head = (*head).clone();
            if !ideal.is_generator(&head) {
                return Err(Error::InvalidMarkedSet(format!(
                    "head {head} of `{p}` is not a minimal generator"
                )));
            }
            if !p.coeff(&head).is_some_and(Scalar::is_one) {
                return Err(Error::NonMonic(head));
            }
            if by_head.insert(head.clone(), p).is_some() {
                return Err(Error::InvalidMarkedSet(format!("two polynomials with head {head}")));
            }
        }
        let mut out = Vec::with_capacity(ideal.generators().len());
        for g in ideal.generators() {
            let mut p = by_head
                .remove(g)
                .ok_or_else(|| Error::InvalidMarkedSet(format!("no polynomial with head {g}")))?;
            p.remove_term(g);
            out.push(MarkedPolynomial::new(g.clone(), ring.one(), p)?);
        }
        Ok(Self::assemble(ideal, ring, out))
    }

    /// `B_J` itself, with zero tails.
    pub fn monomial(ideal: StableIdeal, ring: R) -> Self {
        Self::from_tails(ideal, ring, std::iter::empty()).expect("empty tails are valid")
    }

    pub fn ideal(&self) -> &StableIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// In the order of `ideal().generators()`.
    pub fn polys(&self) -> &[MarkedPolynomial<R::Elem>] {
        &self.polys
    }

    pub fn get(&self, head: &Monomial) -> Option<&MarkedPolynomial<R::Elem>> {
        self.index.get(head).map(|&i| &self.polys[i])
    }

    fn expect_poly(&self, head: &Monomial) -> &MarkedPolynomial<R::Elem> {
        self.get(head).expect("head is a minimal generator")
    }

    /// Coefficient of `x^beta` in `f_alpha` (zero if absent).
    pub fn tail_coefficient(&self, head: &Monomial, beta: &Monomial) -> Option<R::Elem> {
        let f = self.get(head)?;
        Some(f.poly.coeff(beta).cloned().unwrap_or_else(|| self.ring.zero()))
    }

    /// Applies `f` to every tail coefficient.
    pub fn map_ring<R2: CoeffRing>(
        &self,
        ring: R2,
        mut f: impl FnMut(&R::Elem) -> R2::Elem,
    ) -> MarkedSet<R2> {
        let polys = self
            .polys
            .iter()
            .map(|p| {
                let tail = p.tail_poly().map_coeffs(&mut f);
                MarkedPolynomial::new(p.head.clone(), ring.one(), tail).expect("same shape")
            })
            .collect();
        MarkedSet::assemble(self.ideal.clone(), ring, polys)
    }

    /// Fallible variant of [`MarkedSet::map_ring`].
    pub fn try_map_ring<R2: CoeffRing>(
        &self,
        ring: R2,
        mut f: impl FnMut(&R::Elem) -> Result<R2::Elem>,
    ) -> Result<MarkedSet<R2>> {
        let mut polys = Vec::with_capacity(self.polys.len());
        for p in &self.polys {
            let mut tail = Poly::zero(self.nvars());
            for (m, c) in p.tail() {
                tail.add_term(m.clone(), f(c)?);
            }
            polys.push(MarkedPolynomial::new(p.head.clone(), ring.one(), tail)?);
        }
        Ok(MarkedSet::assemble(self.ideal.clone(), ring, polys))
    }
}

impl<R: CoeffRing> std::fmt::Debug for MarkedSet<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MarkedSet")
            .field("ring", &self.ring.descriptor())
            .field("polys", &self.polys)
            .finish()
    }
}

impl<R: CoeffRing> PartialEq for MarkedSet<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal
            && self.ring.descriptor() == other.ring.descriptor()
            && self.polys == other.polys
    }
}

fn check_tail_monomial(ideal: &StableIdeal, head: &Monomial, beta: &Monomial) -> Result<()> {
    if beta.nvars() != ideal.nvars() {
        return Err(Error::VarCountMismatch {
            expected: ideal.nvars(),
            found: beta.nvars(),
        });
    }
    if beta.degree() != head.degree() {
        return Err(Error::DegreeMismatch(head.degree(), beta.degree()));
    }
    if ideal.contains(beta) {
        return Err(Error::InvalidMarkedSet(format!(
            "tail monomial {beta} of {head} lies in the ideal"
        )));
    }
    Ok(())
}
