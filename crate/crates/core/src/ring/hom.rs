use std::collections::HashMap;

use super::{CoeffRing, ParamPoly, ParameterVariable, Scalar};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// The ring map `ZZ[C] -> A` sending each parameter to an assigned value.
#[derive(Clone, Debug)]
pub struct RingHomomorphism<R: CoeffRing> {
    target: R,
    assignment: HashMap<ParameterVariable, R::Elem>,
}

impl<R: CoeffRing> RingHomomorphism<R> {
    pub fn new(target: R, assignment: HashMap<ParameterVariable, R::Elem>) -> Self {
        RingHomomorphism { target, assignment }
    }

    /// Every listed parameter is sent to zero unless assigned.
    pub fn with_defaults(
        target: R,
        params: &[ParameterVariable],
        assignment: HashMap<ParameterVariable, R::Elem>,
    ) -> Self {
        let mut full = assignment;
        for p in params {
            full.entry(p.clone()).or_insert_with(|| target.zero());
        }
        RingHomomorphism::new(target, full)
    }

    pub fn target(&self) -> &R {
        &self.target
    }

    pub fn image(&self, v: &ParameterVariable) -> Option<&R::Elem> {
        self.assignment.get(v)
    }

    pub fn evaluate(&self, e: &ParamPoly) -> Result<R::Elem> {
        let mut acc = self.target.zero();
        for (m, c) in e.terms() {
            let mut term = self.target.from_bigint(c);
            for (v, k) in m.factors() {
                let value = self
                    .assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                for _ in 0..*k {
                    term = term * value;
                }
            }
            acc = acc + &term;
        }
        Ok(acc)
    }

    /// Applies the map to every coefficient of a polynomial.
    pub fn evaluate_poly(&self, p: &Poly<ParamPoly>) -> Result<Poly<R::Elem>> {
        let mut out = Poly::zero(p.nvars());
        for (m, c) in p.terms() {
            let v = self.evaluate(c)?;
            if !v.is_zero() {
                out.add_term(m.clone(), v);
            }
        }
        Ok(out)
    }
}
