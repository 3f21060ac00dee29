//! Eliahou-Kervaire pairs, obstruction modules and basis certificates.

use std::fmt;

use crate::ideal::StableIdeal;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::{CoeffRing, Scalar};

use super::{MarkedSet, Multiple};

/// The syzygy `x_j * x^alpha = x^alpha' *_J x^nu` with `x_j > min x^alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EkPair {
    pub base: Monomial,
    pub variable: usize,
    pub partner: Monomial,
    pub partner_cofactor: Monomial,
}

impl EkPair {
    pub fn degree(&self) -> u32 {
        self.base.degree() + 1
    }
}

impl fmt::Display for EkPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x{}*f[{}] - {}*f[{}]",
            self.variable, self.base, self.partner_cofactor, self.partner
        )
    }
}

/// All EK pairs, by base head ascending (`DegLex`), then variable ascending.
pub fn ek_pairs(ideal: &StableIdeal) -> Vec<EkPair> {
    let mut gens: Vec<&Monomial> = ideal.generators().iter().collect();
    gens.sort();
    let mut out = Vec::new();
    for g in gens {
        let min = g.min_var().expect("proper ideal");
        for j in min + 1..ideal.nvars() {
            let d = ideal
                .star_decompose(&g.mul_var(j))
                .expect("multiples of generators lie in the ideal");
            out.push(EkPair {
                base: g.clone(),
                variable: j,
                partner: d.generator,
                partner_cofactor: d.cofactor,
            });
        }
    }
    out
}

/// Remainders of the elements of `F^(s)`'s complement, in slice order.
/// Zero remainders are kept so that positions line up with the slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionModule<S: Scalar> {
    pub s: u32,
    pub remainders: Vec<(Multiple, Poly<S>)>,
}

impl<S: Scalar> ObstructionModule<S> {
    /// The nonzero remainders: generators of `N(J, I)_s`.
    pub fn generators(&self) -> Vec<&Poly<S>> {
        self.remainders
            .iter()
            .map(|(_, p)| p)
            .filter(|p| !p.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.remainders.iter().all(|(_, p)| p.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkWitness<S: Scalar> {
    pub pair: EkPair,
    pub remainder: Poly<S>,
}

/// Result of the EK criterion; witnesses are the nonzero remainders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCertificate<S: Scalar> {
    pub basis: bool,
    pub witnesses: Vec<EkWitness<S>>,
}

impl<R: CoeffRing> MarkedSet<R> {
    pub fn ek_pairs(&self) -> Vec<EkPair> {
        ek_pairs(self.ideal())
    }

    /// `x_j f_alpha - x^nu f_alpha'`.
    pub fn ek_polynomial(&self, pair: &EkPair) -> Poly<R::Elem> {
        let xj = Monomial::var(self.nvars(), pair.variable);
        let a = self.expect_poly(&pair.base).poly().mul_monomial(&xj);
        let b = self
            .expect_poly(&pair.partner)
            .poly()
            .mul_monomial(&pair.partner_cofactor);
        a.sub(&b)
    }

    pub fn obstructions(&self, s: u32) -> ObstructionModule<R::Elem> {
        let slice = self.degree_slice(s);
        let remainders = slice
            .hat_multiples
            .into_iter()
            .map(|m| {
                let h = self.multiple_poly(&m);
                let r = self.reduce(&h).expect("multiples are homogeneous");
                (m, r)
            })
            .collect();
        ObstructionModule { s, remainders }
    }

    /// Every EK polynomial reduces to zero.
    pub fn is_marked_basis(&self) -> BasisCertificate<R::Elem> {
        let witnesses: Vec<EkWitness<R::Elem>> = self
            .ek_pairs()
            .into_iter()
            .filter_map(|pair| {
                let r = self
                    .reduce(&self.ek_polynomial(&pair))
                    .expect("EK polynomials are homogeneous");
                (!r.is_zero()).then_some(EkWitness { pair, remainder: r })
            })
            .collect();
        BasisCertificate {
            basis: witnesses.is_empty(),
            witnesses,
        }
    }

    /// `N(J, I)_s = 0` for every `s` from the least generator degree to
    /// `m + 1`.
    pub fn degree_bound_basis_test(&self) -> bool {
        let ideal = self.ideal();
        (ideal.min_degree()..=ideal.max_degree() + 1).all(|s| self.obstructions(s).is_zero())
    }
}
