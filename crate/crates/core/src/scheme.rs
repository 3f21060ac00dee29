//! The generic marked family over `ZZ[C]` and the equations of marked
//! schemes and Groebner strata.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::ideal::{MTruncation, StableIdeal};
use crate::marked::{EkPair, MarkedSet, NormalFormTable};
use crate::monomial::{Monomial, TermOrder};
use crate::ring::{CoeffRing, ParamPoly, ParamRing, ParameterVariable};

/// `f_alpha = x^alpha + sum_beta C_{alpha,beta} x^beta` for every generator.
#[derive(Clone, Debug)]
pub struct GenericFamily {
    pub params: Vec<ParameterVariable>,
    pub family: MarkedSet<ParamRing>,
}

impl GenericFamily {
    pub fn ideal(&self) -> &StableIdeal {
        self.family.ideal()
    }
}

/// Every parameter `C_{alpha,beta}` of `J`, in canonical order.
pub fn parameters(ideal: &StableIdeal) -> Vec<ParameterVariable> {
    let mut params: Vec<ParameterVariable> = ideal
        .generators()
        .iter()
        .flat_map(|alpha| {
            ideal
                .sous_escalier(alpha.degree())
                .into_iter()
                .map(move |beta| ParameterVariable::new(alpha.clone(), beta))
        })
        .collect();
    params.sort();
    params
}

pub fn generic_family(ideal: &StableIdeal) -> GenericFamily {
    family_with_params(ideal, parameters(ideal))
}

fn family_with_params(ideal: &StableIdeal, params: Vec<ParameterVariable>) -> GenericFamily {
    let tails = params
        .iter()
        .map(|v| ((v.head.clone(), v.tail.clone()), ParamPoly::var(v.clone())));
    let family = MarkedSet::from_tails(ideal.clone(), ParamRing, tails)
        .expect("parameters index valid tail positions");
    GenericFamily { params, family }
}

/// The coefficient of `residual` in the remainder of the EK polynomial of
/// `pair`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationGenerator {
    pub pair: EkPair,
    pub residual: Monomial,
    pub poly: ParamPoly,
}

#[derive(Clone, Debug)]
pub struct SchemeEquations {
    pub ideal: StableIdeal,
    pub params: Vec<ParameterVariable>,
    /// By EK pair, then residual descending by `DegLex`.
    pub generators: Vec<EquationGenerator>,
    /// Number of (pair, residual) positions before zeros were dropped.
    pub slots: usize,
}

impl SchemeEquations {
    /// Largest total degree in the parameters over all generators.
    pub fn max_param_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.poly.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Whether `Mf(J)` is the whole affine space.
    pub fn is_affine_space(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Remainders of all EK polynomials of `set`, in pair order.
///
/// `jobs = 0` lets rayon pick the thread count; `jobs = 1` stays on the
/// calling thread.
pub fn ek_remainders<R: CoeffRing>(
    set: &MarkedSet<R>,
    jobs: usize,
) -> Result<Vec<(EkPair, crate::poly::Poly<R::Elem>)>> {
    let pairs = set.ek_pairs();
    let mut degrees: Vec<u32> = pairs.iter().map(EkPair::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let work = || -> Result<Vec<_>> {
        let tables: BTreeMap<u32, NormalFormTable<R::Elem>> = degrees
            .par_iter()
            .map(|&s| (s, NormalFormTable::new(set, s)))
            .collect();
        pairs
            .par_iter()
            .map(|pair| {
                let r = tables[&pair.degree()].reduce(&set.ek_polynomial(pair))?;
                Ok((pair.clone(), r))
            })
            .collect()
    };
    if jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(work)
    }
}

fn equations_of(family: GenericFamily, jobs: usize) -> Result<SchemeEquations> {
    let ideal = family.family.ideal().clone();
    let mut generators = Vec::new();
    let mut slots = 0;
    for (pair, r) in ek_remainders(&family.family, jobs)? {
        let residuals = ideal.sous_escalier(pair.degree());
        slots += residuals.len();
        for delta in residuals {
            if let Some(c) = r.coeff(&delta) {
                generators.push(EquationGenerator {
                    pair: pair.clone(),
                    residual: delta,
                    poly: c.clone(),
                });
            }
        }
    }
    Ok(SchemeEquations {
        ideal,
        params: family.params,
        generators,
        slots,
    })
}

/// Generators of the ideal defining `Mf(J)`.
pub fn marked_scheme_equations(ideal: &StableIdeal, jobs: usize) -> Result<SchemeEquations> {
    equations_of(generic_family(ideal), jobs)
}

#[derive(Clone, Debug)]
pub struct StratumEquations {
    pub base: SchemeEquations,
    pub order: TermOrder,
    /// Parameters whose tail monomial exceeds the head in `order`.
    pub vanishing_params: Vec<ParameterVariable>,
}

fn vanishing_params(ideal: &StableIdeal, order: TermOrder) -> Result<Vec<ParameterVariable>> {
    if !ideal.m_truncation().is_yes() {
        return Err(Error::NotTruncation);
    }
    Ok(parameters(ideal)
        .into_iter()
        .filter(|v| order.compare(&v.tail, &v.head).is_gt())
        .collect())
}

/// `Mf(J)` equations plus the parameters killed by `order`, kept apart.
pub fn groebner_stratum_equations(
    ideal: &StableIdeal,
    order: TermOrder,
    jobs: usize,
) -> Result<StratumEquations> {
    let vanishing_params = vanishing_params(ideal, order)?;
    Ok(StratumEquations {
        base: marked_scheme_equations(ideal, jobs)?,
        order,
        vanishing_params,
    })
}

/// The same stratum with the vanishing parameters set to zero inside the
/// family before reduction; `params` lists only the surviving ones.
pub fn substituted_stratum_equations(
    ideal: &StableIdeal,
    order: TermOrder,
    jobs: usize,
) -> Result<SchemeEquations> {
    let killed = vanishing_params(ideal, order)?;
    let params = parameters(ideal)
        .into_iter()
        .filter(|v| !killed.contains(v))
        .collect();
    equations_of(family_with_params(ideal, params), jobs)
}

/// Truncation degrees `s` at which `Mf(J_{>=s})` is studied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingRow {
    pub s: u32,
    /// `Mf(J_{>=s-1}) = Mf(J_{>=s})`.
    pub equal_to_next: bool,
    pub status: EmbeddingStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingStatus {
    Open,
    LocallyClosed,
}

impl std::fmt::Display for EmbeddingStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EmbeddingStatus::Open => "open",
            EmbeddingStatus::LocallyClosed => "locally_closed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub saturated_ideal: StableIdeal,
    pub hilbert: HilbertData,
    pub rows: Vec<EmbeddingRow>,
}

/// Classifies `Mf(J_{>=s})` inside the Hilbert scheme for each `s`.
///
/// The default range is `max(1, min degree - 1) ..= r`.
pub fn embedding_report(
    ideal: &StableIdeal,
    range: Option<RangeInclusive<u32>>,
) -> Result<EmbeddingReport> {
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let hilbert = ideal.hilbert_data()?;
    let range = match range {
        Some(r) => r,
        None => {
            let hi = u32::try_from(hilbert.gotzmann_number)
                .map_err(|_| Error::Invalid("Gotzmann number too large".into()))?;
            ideal.min_degree().saturating_sub(1).max(1)..=hi
        }
    };
    let x1_degrees: Vec<u32> = if ideal.nvars() < 2 {
        Vec::new()
    } else {
        ideal
            .generators()
            .iter()
            .filter(|g| g.exponent(1) > 0)
            .map(Monomial::degree)
            .collect()
    };
    let rows = range
        .map(|s| {
            let no_x1_generator = !x1_degrees.contains(&(s + 1));
            let same_truncation = s >= 1 && ideal.truncate(s - 1) == ideal.truncate(s);
            let status = if i64::from(s) >= i64::from(hilbert.rho) - 1 {
                EmbeddingStatus::Open
            } else {
                EmbeddingStatus::LocallyClosed
            };
            EmbeddingRow {
                s,
                equal_to_next: no_x1_generator || same_truncation,
                status,
            }
        })
        .collect();
    Ok(EmbeddingReport {
        saturated_ideal: ideal.clone(),
        hilbert,
        rows,
    })
}

/// Parameters that occur, up to sign, as a generator on their own.
pub fn stratum_members(ideal: &StableIdeal, jobs: usize) -> Result<Vec<ParameterVariable>> {
    let eqs = marked_scheme_equations(ideal, jobs)?;
    let mut out: Vec<ParameterVariable> = eqs
        .generators
        .iter()
        .filter_map(|g| g.poly.as_signed_variable().cloned())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Witness for [`StableIdeal::m_truncation`], re-exported for callers that
/// only deal with this module.
pub fn is_m_truncation(ideal: &StableIdeal) -> MTruncation {
    ideal.m_truncation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_scalar;

    fn j(s: &str) -> StableIdeal {
        StableIdeal::parse(s, 3).unwrap()
    }

    fn c(s: &str) -> ParameterVariable {
        ParameterVariable::parse(s).unwrap()
    }

    #[test]
    fn parameter_counts() {
        assert_eq!(generic_family(&j("x2^2,x2*x1,x1^3")).params.len(), 12);
        assert_eq!(generic_family(&j("x2")).params.len(), 2);
        assert_eq!(generic_family(&j("x2^2,x2*x1,x1^4").truncate(3)).params.len(), 30);
    }

    #[test]
    fn worked_example_equations() {
        let eqs = marked_scheme_equations(&j("x2^2,x2*x1,x1^3"), 1).unwrap();
        assert_eq!(eqs.generators.len(), 8);
        assert_eq!(eqs.slots, 8);
        let x2x0x0 = Monomial::parse("x2*x0^2", 3).unwrap();
        let p201 = eqs.generators.iter().find(|g| g.residual == x2x0x0).unwrap();
        assert_eq!(p201.pair.base, Monomial::parse("x2*x1", 3).unwrap());
        let want = parse_scalar(
            &ParamRing,
            "C_{011,020}*C_{011,101}^2 + C_{011,020}^2*C_{030,201} - C_{011,101}*C_{011,110} \
             + C_{002,020}*C_{030,201} + C_{011,200}",
        )
        .unwrap();
        assert!(p201.poly == want || p201.poly == -want.clone());
    }

    #[test]
    fn jobs_do_not_change_output() {
        let ideal = j("x2^2,x2*x1,x1^3");
        let a = marked_scheme_equations(&ideal, 1).unwrap();
        let b = marked_scheme_equations(&ideal, 4).unwrap();
        assert_eq!(a.generators, b.generators);
    }

    #[test]
    fn single_generator_is_affine_space() {
        let eqs = marked_scheme_equations(&j("x2"), 0).unwrap();
        assert!(eqs.is_affine_space());
        assert_eq!(eqs.params.len(), 2);
    }

    #[test]
    fn stratum() {
        let s = groebner_stratum_equations(&j("x2^2,x2*x1,x1^3"), TermOrder::DegLex, 1).unwrap();
        assert_eq!(s.vanishing_params, vec![c("C_{030,201}")]);
        let s = groebner_stratum_equations(&j("x2"), TermOrder::DegRevLex, 1).unwrap();
        assert!(s.vanishing_params.is_empty());
        let sub = substituted_stratum_equations(&j("x2^2,x2*x1,x1^3"), TermOrder::DegLex, 1).unwrap();
        assert_eq!(sub.params.len(), 11);
        assert!(groebner_stratum_equations(&j("x2,x1^3,x1^2*x0"), TermOrder::DegLex, 1).is_err());
    }

    #[test]
    fn embedding() {
        let r = embedding_report(&j("x2^2,x2*x1,x1^4"), None).unwrap();
        assert_eq!(r.rows.first().unwrap().s, 1);
        assert_eq!(r.rows.last().unwrap().s, 5);
        for row in &r.rows {
            assert_eq!(row.status == EmbeddingStatus::Open, row.s >= 3, "s = {}", row.s);
        }
        let r = embedding_report(&j("x2^3,x2^2*x1,x2*x1^2"), Some(3..=5)).unwrap();
        assert!(r.rows.iter().find(|row| row.s == 4).unwrap().equal_to_next);
        let r = embedding_report(&j("x2"), Some(1..=4)).unwrap();
        assert!(r.rows.iter().all(|row| row.status == EmbeddingStatus::Open));
        assert!(embedding_report(&j("x2,x1^2,x1*x0"), None).is_err());
    }

    #[test]
    fn members() {
        let ideal = j("x2^3,x2^2*x1,x2*x1^2").truncate(4);
        assert!(stratum_members(&ideal, 0).unwrap().contains(&c("C_{121,040}")));
        assert!(stratum_members(&j("x2^2,x2*x1,x1^3"), 1).unwrap().is_empty());
        assert!(stratum_members(&j("x2"), 1).unwrap().is_empty());
    }
}
