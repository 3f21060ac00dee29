//! Degree-`s` multiples of a marked set: `F^(s)`, its complement and the
//! induced marked set on `J_s`.

use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;
use crate::ring::{CoeffRing, Scalar};

use super::{MarkedPolynomial, MarkedSet, NormalFormTable};

/// The multiple `x^delta * f_alpha`, recorded by cofactor and head.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiple {
    pub cofactor: Monomial,
    pub base: Monomial,
}

impl Multiple {
    pub fn head(&self) -> Monomial {
        self.cofactor.mul(&self.base)
    }

    /// Whether `min x^alpha >= max x^delta` (or `delta = 1`).
    pub fn is_v_multiple(&self) -> bool {
        match (self.cofactor.max_var(), self.base.min_var()) {
            (Err(_), _) => true,
            (Ok(max), Ok(min)) => max <= min,
            (Ok(_), Err(_)) => unreachable!("generators of a proper ideal are not 1"),
        }
    }
}

impl std::fmt::Display for Multiple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cofactor.is_one() {
            write!(f, "f[{}]", self.base)
        } else {
            write!(f, "{}*f[{}]", self.cofactor, self.base)
        }
    }
}

/// All degree-`s` multiples split into `F^(s)` and the rest.
///
/// Both lists are ordered by base head ascending by `DegLex`, then by
/// cofactor descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSlice {
    pub s: u32,
    pub v_multiples: Vec<Multiple>,
    pub hat_multiples: Vec<Multiple>,
}

/// The marked set `F~^(s)` on `J_s`, one polynomial per monomial of `J_s`,
/// ordered descending by head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryBasis<S: Scalar> {
    pub s: u32,
    pub polys: Vec<MarkedPolynomial<S>>,
}

impl<S: Scalar> AuxiliaryBasis<S> {
    pub fn get(&self, head: &Monomial) -> Option<&MarkedPolynomial<S>> {
        self.polys.iter().find(|f| f.head() == head)
    }
}

impl<R: CoeffRing> MarkedSet<R> {
    pub fn degree_slice(&self, s: u32) -> DegreeSlice {
        let mut gens: Vec<&Monomial> = self
            .ideal()
            .generators()
            .iter()
            .filter(|g| g.degree() <= s)
            .collect();
        gens.sort();
        let mut v_multiples = Vec::new();
        let mut hat_multiples = Vec::new();
        for g in gens {
            // monomials_of_degree is descending
            for delta in monomials_of_degree(self.nvars(), s - g.degree()) {
                let m = Multiple {
                    cofactor: delta,
                    base: g.clone(),
                };
                if m.is_v_multiple() {
                    v_multiples.push(m);
                } else {
                    hat_multiples.push(m);
                }
            }
        }
        DegreeSlice {
            s,
            v_multiples,
            hat_multiples,
        }
    }

    pub fn multiple_poly(&self, m: &Multiple) -> Poly<R::Elem> {
        self.expect_poly(&m.base).poly().mul_monomial(&m.cofactor)
    }

    /// `f~_gamma = x^gamma - NF(x^gamma)` for every `x^gamma` in `J_s`.
    pub fn auxiliary_basis(&self, s: u32) -> AuxiliaryBasis<R::Elem> {
        let table = NormalFormTable::new(self, s);
        let polys = self
            .ideal()
            .monomials_in_degree(s)
            .into_iter()
            .map(|gamma| {
                let tail = table.normal_form(&gamma).expect("tabulated").neg();
                MarkedPolynomial::new(gamma, self.ring().one(), tail).expect("tail on N(J)")
            })
            .collect();
        AuxiliaryBasis { s, polys }
    }
}
