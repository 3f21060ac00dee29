//! Reading ideals, marked sets and polynomials from arguments and files.

use markedfam::json;
use markedfam::parse::parse_poly_list;
use markedfam::ring::CoeffRing;
use markedfam::{Error, MarkedSet, MonomialIdeal, Result, StableIdeal};
use serde_json::Value;

use crate::MarkedArgs;

/// Either a JSON ideal or the comma-separated text form.
pub enum IdealSource {
    Json(Value),
    Text(String),
}

/// `@path` reads a file; anything else is taken literally.
pub fn read_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

pub fn ideal_source(arg: &str) -> Result<IdealSource> {
    let text = read_arg(arg)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad JSON ideal: {e}")))?;
        Ok(IdealSource::Json(v))
    } else {
        Ok(IdealSource::Text(trimmed.to_string()))
    }
}

/// One more than the largest `x<i>` index in `text`.
pub fn infer_vars(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(k) = text[start..end].parse::<usize>() {
                best = best.max(k + 1);
            }
            i = end.max(i + 1);
        } else {
            i += 1;
        }
    }
    best.max(1)
}

pub fn monomial_ideal(arg: &str, vars: Option<usize>) -> Result<MonomialIdeal> {
    match ideal_source(arg)? {
        IdealSource::Json(v) => {
            let nvars = v
                .get("vars")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("JSON ideal needs `vars`".into()))? as usize;
            check_vars(vars, nvars)?;
            let gens = v
                .get("generators")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("JSON ideal needs `generators`".into()))?
                .iter()
                .map(|g| json::monomial_from(g, nvars))
                .collect::<Result<Vec<_>>>()?;
            MonomialIdeal::new(nvars, gens)
        }
        IdealSource::Text(t) => {
            let nvars = vars.unwrap_or_else(|| infer_vars(&t));
            MonomialIdeal::parse(&t, nvars)
        }
    }
}

fn check_vars(flag: Option<usize>, found: usize) -> Result<()> {
    match flag {
        Some(n) if n != found => Err(Error::VarCountMismatch { expected: n, found }),
        _ => Ok(()),
    }
}

pub fn stable_ideal(arg: &str, vars: Option<usize>) -> Result<StableIdeal> {
    StableIdeal::new(monomial_ideal(arg, vars)?)
}

/// Ring named by `--ring`, else by the marked-set file, else `ZZ`.
pub fn ring_name(args: &MarkedArgs) -> Result<String> {
    if let Some(r) = &args.ring {
        return Ok(r.clone());
    }
    if let Some(path) = &args.marked {
        let v = marked_json(path)?;
        if let Some(r) = v.get("ring").and_then(Value::as_str) {
            return Ok(r.to_string());
        }
    }
    Ok("ZZ".to_string())
}

fn marked_json(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad marked-set JSON: {e}")))
}

pub fn marked_set<R: CoeffRing>(ring: R, ideal: &StableIdeal, args: &MarkedArgs) -> Result<MarkedSet<R>> {
    let set = match (&args.marked, &args.marked_polys) {
        (Some(path), _) => json::marked_set_from(ring, &marked_json(path)?)?,
        (None, Some(text)) => {
            let text = read_arg(text)?;
            let polys = parse_poly_list(&ring, ideal.nvars(), &text)?;
            MarkedSet::from_polynomials(ideal.clone(), ring, polys)?
        }
        (None, None) => {
            return Err(Error::Invalid(
                "a marked set is required: pass --marked FILE or --marked-polys TEXT".into(),
            ))
        }
    };
    if set.ideal() != ideal {
        return Err(Error::InvalidMarkedSet(format!(
            "marked set is over {} but the ideal is {}",
            set.ideal(),
            ideal
        )));
    }
    Ok(set)
}
