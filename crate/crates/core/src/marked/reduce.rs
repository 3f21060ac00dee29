//! Term-order-free reduction by a marked set.

use std::collections::HashMap;

use crate::error::{Error, Result};
#[cfg(debug_assertions)]
use crate::monomial::TermOrder;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::{CoeffRing, Scalar};

use super::MarkedSet;

/// One step `h -> h - c * x^delta * f_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep<S> {
    pub monomial: Monomial,
    pub coefficient: S,
    pub generator: Monomial,
    pub cofactor: Monomial,
}

impl<R: CoeffRing> MarkedSet<R> {
    /// The `J`-remainder of a homogeneous polynomial.
    ///
    /// Always eliminates the `DegLex`-greatest monomial of `Supp(h)` in `J`;
    /// the result does not depend on that choice.
    pub fn reduce(&self, h: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
        self.reduce_core(h, |c| c.len() - 1, None)
    }

    pub fn reduce_traced(
        &self,
        h: &Poly<R::Elem>,
    ) -> Result<(Poly<R::Elem>, Vec<ReductionStep<R::Elem>>)> {
        let mut steps = Vec::new();
        let g = self.reduce_core(h, |c| c.len() - 1, Some(&mut steps))?;
        Ok((g, steps))
    }

    /// Reduction where `pick` chooses which of the candidate monomials
    /// (ascending by `DegLex`) to eliminate next.
    pub fn reduce_with_strategy(
        &self,
        h: &Poly<R::Elem>,
        pick: impl FnMut(&[Monomial]) -> usize,
    ) -> Result<Poly<R::Elem>> {
        self.reduce_core(h, pick, None)
    }

    fn reduce_core(
        &self,
        h: &Poly<R::Elem>,
        mut pick: impl FnMut(&[Monomial]) -> usize,
        mut trace: Option<&mut Vec<ReductionStep<R::Elem>>>,
    ) -> Result<Poly<R::Elem>> {
        if h.nvars() != self.nvars() {
            return Err(Error::VarCountMismatch {
                expected: self.nvars(),
                found: h.nvars(),
            });
        }
        h.homogeneous_degree()?;
        let ideal = self.ideal();
        let mut h = h.clone();
        loop {
            let candidates: Vec<Monomial> =
                h.support().filter(|m| ideal.contains(m)).cloned().collect();
            if candidates.is_empty() {
                return Ok(h);
            }
            let eta = candidates[pick(&candidates)].clone();
            let c = h.coeff(&eta).cloned().expect("candidate in support");
            let d = ideal.star_decompose(&eta)?;
            let f = self.expect_poly(&d.generator);
            #[cfg(debug_assertions)]
            self.check_lex_decrease(f, &d.cofactor);
            h.sub_scaled(f.poly(), &c, &d.cofactor);
            debug_assert!(h.coeff(&eta).is_none());
            if let Some(t) = trace.as_deref_mut() {
                t.push(ReductionStep {
                    monomial: eta,
                    coefficient: c,
                    generator: d.generator,
                    cofactor: d.cofactor,
                });
            }
        }
    }

    /// Monomials of `J` created by a step have a `Lex`-smaller cofactor than
    /// the step's own, which is what makes reduction terminate.
    #[cfg(debug_assertions)]
    fn check_lex_decrease(&self, f: &super::MarkedPolynomial<R::Elem>, delta: &Monomial) {
        for (beta, _) in f.tail() {
            let eta = beta.mul(delta);
            if self.ideal().contains(&eta) {
                let d = self.ideal().star_decompose(&eta).expect("in ideal");
                debug_assert_eq!(
                    TermOrder::Lex.compare(&d.cofactor, delta),
                    std::cmp::Ordering::Less,
                    "cofactor {} does not decrease from {}",
                    d.cofactor,
                    delta
                );
            }
        }
    }
}

/// Normal forms `NF(x^eta)` of every monomial of `J_s`, for single-pass
/// reduction in degree `s`.
#[derive(Clone, Debug)]
pub struct NormalFormTable<S: Scalar> {
    degree: u32,
    nvars: usize,
    forms: HashMap<Monomial, Poly<S>>,
}

impl<S: Scalar> NormalFormTable<S> {
    pub fn new<R: CoeffRing<Elem = S>>(set: &MarkedSet<R>, s: u32) -> Self {
        let mut table = NormalFormTable {
            degree: s,
            nvars: set.nvars(),
            forms: HashMap::new(),
        };
        for eta in set.ideal().monomials_in_degree(s) {
            table.fill(set, &eta);
        }
        table
    }

    /// `x^eta = x^delta f_alpha - sum_beta c_beta x^delta x^beta`, so
    /// `NF(x^eta) = -sum_beta c_beta NF(x^delta x^beta)`.
    fn fill<R: CoeffRing<Elem = S>>(&mut self, set: &MarkedSet<R>, eta: &Monomial) {
        if self.forms.contains_key(eta) {
            return;
        }
        let d = set
            .ideal()
            .star_decompose(eta)
            .expect("table entries lie in the ideal");
        let f = set.expect_poly(&d.generator);
        let mut nf = Poly::zero(self.nvars);
        for (beta, c) in f.tail() {
            let m = beta.mul(&d.cofactor);
            let neg = -c.clone();
            if set.ideal().contains(&m) {
                self.fill(set, &m);
                nf.add_scaled(&self.forms[&m], &neg, &Monomial::one(self.nvars));
            } else {
                nf.add_term(m, neg);
            }
        }
        self.forms.insert(eta.clone(), nf);
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn normal_form(&self, eta: &Monomial) -> Option<&Poly<S>> {
        self.forms.get(eta)
    }

    /// Single-pass reduction of a polynomial of this table's degree.
    pub fn reduce(&self, h: &Poly<S>) -> Result<Poly<S>> {
        match h.homogeneous_degree()? {
            None => return Ok(h.clone()),
            Some(d) if d != self.degree => return Err(Error::DegreeMismatch(self.degree, d)),
            Some(_) => {}
        }
        let one = Monomial::one(self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in h.terms() {
            match self.forms.get(m) {
                Some(nf) => out.add_scaled(nf, c, &one),
                None => out.add_term(m.clone(), c.clone()),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::StableIdeal;
    use crate::parse::{parse_poly, parse_poly_list};
    use crate::ring::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn example() -> MarkedSet<Integers> {
        let j = StableIdeal::parse("x2^2,x2*x1,x1^3", 3).unwrap();
        let polys = parse_poly_list(
            &Integers,
            3,
            "x2^2 + 3*x1^2 - x2*x0 + x1*x0; x2*x1 - x1*x0; x1^3 - 3*x1^2*x0",
        )
        .unwrap();
        MarkedSet::from_polynomials(j, Integers, polys).unwrap()
    }

    fn p(text: &str) -> Poly<BigInt> {
        parse_poly(&Integers, 3, text).unwrap()
    }

    #[test]
    fn remainders_of_the_worked_example() {
        let f = example();
        assert_eq!(f.reduce(&p("x2^2*x1")).unwrap(), p("-10*x1^2*x0 + x1*x0^2"));
        assert_eq!(
            f.reduce(&p("x2^3")).unwrap(),
            p("-6*x1^2*x0 + x2*x0^2 - 2*x1*x0^2")
        );
        let untouched = p("x1^2*x0 + 5*x0^3");
        assert_eq!(f.reduce(&untouched).unwrap(), untouched);
    }

    #[test]
    fn traced_steps_replay() {
        let f = example();
        let h = p("x2^2*x1");
        let (g, steps) = f.reduce_traced(&h).unwrap();
        let mut replay = h.clone();
        for s in &steps {
            replay.sub_scaled(f.get(&s.generator).unwrap().poly(), &s.coefficient, &s.cofactor);
        }
        assert_eq!(replay, g);
        assert_eq!(steps[0].generator, Monomial::parse("x2^2", 3).unwrap());
        assert_eq!(steps[0].cofactor, Monomial::parse("x1", 3).unwrap());
    }

    #[test]
    fn table_agrees_with_stepwise() {
        let f = example();
        for s in 2..=5 {
            let table = NormalFormTable::new(&f, s);
            for eta in f.ideal().monomials_in_degree(s) {
                let h = Poly::term(eta.clone(), BigInt::from(1));
                assert_eq!(table.reduce(&h).unwrap(), f.reduce(&h).unwrap(), "{eta}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let f = example();
        assert_eq!(f.reduce(&p("x2^2 + x1")), Err(Error::NotHomogeneous));
        let table = NormalFormTable::new(&f, 3);
        assert!(matches!(table.reduce(&p("x2^2")), Err(Error::DegreeMismatch(3, 2))));
    }

    #[test]
    fn works_over_prime_fields() {
        let f5 = PrimeField::new(5).unwrap();
        let f = example().map_ring(f5, |c| f5.from_bigint(c));
        let h = parse_poly(&f5, 3, "x2^2*x1").unwrap();
        assert_eq!(f.reduce(&h).unwrap().to_string(), "x1*x0^2");
    }
}
