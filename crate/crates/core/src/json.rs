//! JSON forms of ideals, polynomials, marked sets and equations.
//!
//! Objects are `serde_json::Value`s whose maps keep keys sorted, so the
//! serialized bytes are deterministic.  Exponent vectors are listed x0-first.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::StableIdeal;
use crate::marked::{EkPair, MarkedSet};
use crate::monomial::Monomial;
use crate::parse::parse_scalar;
use crate::poly::Poly;
use crate::ring::{CoeffRing, ParamPoly, ParamStyle, ParameterVariable, Scalar};
use crate::scheme::{EmbeddingReport, SchemeEquations, StratumEquations};

pub fn monomial(m: &Monomial) -> Value {
    json!(m.exponents())
}

pub fn monomial_from(v: &Value, nvars: usize) -> Result<Monomial> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected an exponent array, got {v}")))?;
    let exps = arr
        .iter()
        .map(|e| {
            e.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::Parse(format!("bad exponent {e}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    if exps.len() != nvars {
        return Err(Error::VarCountMismatch {
            expected: nvars,
            found: exps.len(),
        });
    }
    Ok(Monomial::new(exps))
}

pub fn ideal(j: &StableIdeal) -> Value {
    json!({
        "vars": j.nvars(),
        "generators": j.generators().iter().map(monomial).collect::<Vec<_>>(),
    })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn vars_of(v: &Value) -> Result<usize> {
    field(v, "vars")?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse("`vars` must be a positive integer".into()))
}

pub fn ideal_from(v: &Value) -> Result<StableIdeal> {
    let nvars = vars_of(v)?;
    let gens = field(v, "generators")?
        .as_array()
        .ok_or_else(|| Error::Parse("`generators` must be an array".into()))?
        .iter()
        .map(|g| monomial_from(g, nvars))
        .collect::<Result<Vec<_>>>()?;
    StableIdeal::from_generators(nvars, gens)
}

fn terms<S: Scalar>(p: &Poly<S>) -> Value {
    // descending, matching the printed order of sets
    Value::Array(
        p.terms()
            .rev()
            .map(|(m, c)| json!({"monomial": monomial(m), "coefficient": c.to_canonical_string()}))
            .collect(),
    )
}

pub fn poly<S: Scalar>(p: &Poly<S>) -> Value {
    json!({"vars": p.nvars(), "terms": terms(p)})
}

fn terms_from<R: CoeffRing>(ring: &R, v: &Value, nvars: usize) -> Result<Poly<R::Elem>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a term array".into()))?;
    let mut p = Poly::zero(nvars);
    for t in arr {
        let m = monomial_from(field(t, "monomial")?, nvars)?;
        let c = field(t, "coefficient")?
            .as_str()
            .ok_or_else(|| Error::Parse("coefficients are strings".into()))?;
        p.add_term(m, parse_scalar(ring, c)?);
    }
    Ok(p)
}

pub fn poly_from<R: CoeffRing>(ring: &R, v: &Value) -> Result<Poly<R::Elem>> {
    terms_from(ring, field(v, "terms")?, vars_of(v)?)
}

pub fn marked_set<R: CoeffRing>(set: &MarkedSet<R>) -> Value {
    let polys: Vec<Value> = set
        .polys()
        .iter()
        .map(|f| json!({"head": monomial(f.head()), "tail": terms(&f.tail_poly())}))
        .collect();
    json!({
        "ring": set.ring().descriptor().to_string(),
        "vars": set.nvars(),
        "ideal": ideal(set.ideal())["generators"].clone(),
        "polys": polys,
    })
}

/// Reads a marked set; the ideal is taken from `ideal` when present,
/// otherwise from the heads.
pub fn marked_set_from<R: CoeffRing>(ring: R, v: &Value) -> Result<MarkedSet<R>> {
    let nvars = vars_of(v)?;
    let entries = field(v, "polys")?
        .as_array()
        .ok_or_else(|| Error::Parse("`polys` must be an array".into()))?;
    let mut heads = Vec::new();
    let mut tails = Vec::new();
    for e in entries {
        let head = monomial_from(field(e, "head")?, nvars)?;
        let tail = terms_from(&ring, field(e, "tail")?, nvars)?;
        for (beta, c) in tail.into_terms() {
            tails.push(((head.clone(), beta), c));
        }
        heads.push(head);
    }
    let j = match v.get("ideal") {
        Some(g) => ideal_from(&json!({"vars": nvars, "generators": g}))?,
        None => StableIdeal::from_generators(nvars, heads.iter().cloned())?,
    };
    if heads.len() != j.generators().len() {
        return Err(Error::InvalidMarkedSet(format!(
            "{} polynomials for {} generators",
            heads.len(),
            j.generators().len()
        )));
    }
    MarkedSet::from_tails(j, ring, tails)
}

pub fn parameter(v: &ParameterVariable) -> Value {
    Value::String(v.to_string_with(ParamStyle::Tuple))
}

/// Terms of a parameter polynomial: coefficient plus `[parameter, power]`
/// factors.
pub fn param_poly(p: &ParamPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                let factors: Vec<Value> = m
                    .factors()
                    .iter()
                    .map(|(v, e)| json!([parameter(v), e]))
                    .collect();
                json!({"coefficient": c.to_string(), "factors": factors})
            })
            .collect(),
    )
}

pub fn ek_pair(p: &EkPair) -> Value {
    json!({
        "base": monomial(&p.base),
        "variable": p.variable,
        "partner": monomial(&p.partner),
        "partner_cofactor": monomial(&p.partner_cofactor),
    })
}

pub fn equations(eqs: &SchemeEquations) -> Value {
    let generators: Vec<Value> = eqs
        .generators
        .iter()
        .map(|g| {
            json!({
                "ek": ek_pair(&g.pair),
                "residual": monomial(&g.residual),
                "poly": param_poly(&g.poly),
                "text": g.poly.to_string_with(ParamStyle::Tuple),
            })
        })
        .collect();
    json!({
        "ideal": ideal(&eqs.ideal),
        "params": eqs.params.iter().map(parameter).collect::<Vec<_>>(),
        "generators": generators,
        "slots": eqs.slots,
    })
}

pub fn stratum(s: &StratumEquations) -> Value {
    let mut v = equations(&s.base);
    v["order"] = Value::String(s.order.to_string());
    v["vanishing_params"] = s.vanishing_params.iter().map(parameter).collect();
    v
}

pub fn embedding_report(r: &EmbeddingReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "s": row.s,
                "equal_to_next": row.equal_to_next,
                "status": row.status.to_string(),
            })
        })
        .collect();
    json!({
        "saturated_ideal": ideal(&r.saturated_ideal),
        "hilbert_polynomial": r.hilbert.polynomial.to_string(),
        "hilbert_binomial_coordinates": r
            .hilbert
            .polynomial
            .binomial_coordinates()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
        "gotzmann_number": r.hilbert.gotzmann_number,
        "rho": r.hilbert.rho,
        "rows": rows,
    })
}
