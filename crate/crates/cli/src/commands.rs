use std::fmt::Write as _;

use markedfam::ideal::MTruncation;
use markedfam::json;
use markedfam::marked::MarkedSet;
use markedfam::monomial::Monomial;
use markedfam::parse::parse_poly;
use markedfam::ring::{
    CoeffRing, Integers, ParamRing, ParamStyle, PrimeField, Rationals, RingDescriptor, UniRing,
};
use markedfam::scheme::{self, EquationGenerator, SchemeEquations};
use markedfam::{Error, Result, StableIdeal, TermOrder};
use serde_json::{json, Value};

use crate::input;
use crate::{Cli, Command, MarkedArgs};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
    /// Printed on stderr after the result.
    pub message: Option<String>,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
            message: None,
        }
    }
}

macro_rules! with_ring {
    ($name:expr, $ring:ident => $body:expr) => {{
        let desc: RingDescriptor = $name.parse()?;
        match desc {
            RingDescriptor::Integers => {
                let $ring = Integers;
                $body
            }
            RingDescriptor::Rationals => {
                let $ring = Rationals;
                $body
            }
            RingDescriptor::PrimeField(p) => {
                let $ring = PrimeField::new(p)?;
                $body
            }
            RingDescriptor::Parameters => {
                let $ring = ParamRing;
                $body
            }
            RingDescriptor::UnivariateT => {
                let $ring = UniRing;
                $body
            }
        }
    }};
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let vars = cli.vars;
    if vars == Some(0) {
        return Err(Error::Invalid("--vars must be at least 1".into()));
    }
    let stable = |arg: &str| input::stable_ideal(arg, vars);
    match &cli.command {
        Command::Check { ideal } => check(ideal, vars),
        Command::SousEscalier { ideal, degree } => {
            let j = stable(ideal)?;
            let ms = j.sous_escalier(*degree);
            Ok(Outcome::ok(
                lines(&ms),
                json!({"degree": degree, "monomials": ms.iter().map(json::monomial).collect::<Vec<_>>()}),
            ))
        }
        Command::StarDecompose { ideal, monomial } => {
            let j = stable(ideal)?;
            let m = Monomial::parse(monomial, j.nvars())?;
            let d = j.star_decompose(&m)?;
            Ok(Outcome::ok(
                format!("generator: {}\ncofactor: {}\n", d.generator, d.cofactor),
                json!({"generator": json::monomial(&d.generator), "cofactor": json::monomial(&d.cofactor)}),
            ))
        }
        Command::Truncate { ideal, degree } => {
            let t = stable(ideal)?.truncate(*degree);
            Ok(Outcome::ok(format!("{t}\n"), json::ideal(&t)))
        }
        Command::Hilbert { ideal } => {
            let h = stable(ideal)?.hilbert_data()?;
            let coords: Vec<String> = h
                .polynomial
                .binomial_coordinates()
                .iter()
                .map(ToString::to_string)
                .collect();
            Ok(Outcome::ok(
                format!(
                    "hilbert_polynomial: {}\ngotzmann_number: {}\nrho: {}\n",
                    h.polynomial, h.gotzmann_number, h.rho
                ),
                json!({
                    "hilbert_polynomial": h.polynomial.to_string(),
                    "binomial_coordinates": coords,
                    "gotzmann_number": h.gotzmann_number,
                    "rho": h.rho,
                }),
            ))
        }
        Command::Reduce {
            ideal,
            poly,
            marked,
            trace,
        } => {
            let j = stable(ideal)?;
            with_ring!(input::ring_name(marked)?, ring => reduce(ring, &j, marked, poly, *trace))
        }
        Command::BasisTest { ideal, marked } => {
            let j = stable(ideal)?;
            with_ring!(input::ring_name(marked)?, ring => basis_test(ring, &j, marked))
        }
        Command::AuxBasis {
            ideal,
            marked,
            degree,
        } => {
            let j = stable(ideal)?;
            with_ring!(input::ring_name(marked)?, ring => aux_basis(ring, &j, marked, *degree))
        }
        Command::Obstructions {
            ideal,
            marked,
            degree,
        } => {
            let j = stable(ideal)?;
            with_ring!(input::ring_name(marked)?, ring => obstructions(ring, &j, marked, *degree))
        }
        Command::MfEquations { ideal } => {
            let eqs = scheme::marked_scheme_equations(&stable(ideal)?, cli.jobs)?;
            Ok(Outcome::ok(equations_text(&eqs), json::equations(&eqs)))
        }
        Command::GsEquations {
            ideal,
            order,
            substituted,
        } => {
            let j = stable(ideal)?;
            let order: TermOrder = order.parse()?;
            if *substituted {
                let eqs = scheme::substituted_stratum_equations(&j, order, cli.jobs)?;
                let mut v = json::equations(&eqs);
                v["order"] = Value::String(order.to_string());
                v["presentation"] = Value::String("substituted".into());
                Ok(Outcome::ok(equations_text(&eqs), v))
            } else {
                let s = scheme::groebner_stratum_equations(&j, order, cli.jobs)?;
                let mut text = equations_text(&s.base);
                writeln!(text, "vanishing parameters ({order}): {}", s.vanishing_params.len()).unwrap();
                for v in &s.vanishing_params {
                    writeln!(text, "{v}").unwrap();
                }
                let mut v = json::stratum(&s);
                v["presentation"] = Value::String("sum".into());
                Ok(Outcome::ok(text, v))
            }
        }
        Command::EmbeddingReport { ideal, from, to } => {
            let j = stable(ideal)?;
            let range = match (from, to) {
                (None, None) => None,
                (a, b) => {
                    let h = j.hilbert_data()?;
                    let lo = a.unwrap_or_else(|| j.min_degree().saturating_sub(1).max(1));
                    let hi = b.unwrap_or(h.gotzmann_number as u32);
                    Some(lo..=hi)
                }
            };
            let r = scheme::embedding_report(&j, range)?;
            let mut text = format!(
                "hilbert_polynomial: {}\ngotzmann_number: {}\nrho: {}\n",
                r.hilbert.polynomial, r.hilbert.gotzmann_number, r.hilbert.rho
            );
            writeln!(text, "s\tequal_to_next\tstatus").unwrap();
            for row in &r.rows {
                writeln!(text, "{}\t{}\t{}", row.s, row.equal_to_next, row.status).unwrap();
            }
            Ok(Outcome::ok(text, json::embedding_report(&r)))
        }
        Command::StratumMembers { ideal } => {
            let members = scheme::stratum_members(&stable(ideal)?, cli.jobs)?;
            let text = members.iter().map(|v| format!("{v}\n")).collect();
            Ok(Outcome::ok(
                text,
                json!({"members": members.iter().map(json::parameter).collect::<Vec<_>>()}),
            ))
        }
    }
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn check(arg: &str, vars: Option<usize>) -> Result<Outcome> {
    let ideal = input::monomial_ideal(arg, vars)?;
    let gens: Vec<Value> = ideal.generators().iter().map(json::monomial).collect();
    let m = ideal.generators().iter().map(Monomial::degree).max().unwrap_or(0);
    let mut text = format!("generators: {ideal}\nm: {m}\n");
    let mut v = json!({"vars": ideal.nvars(), "generators": gens, "m": m});
    let stable = match StableIdeal::new(ideal.clone()) {
        Ok(j) => j,
        Err(e @ Error::NotStronglyStable { .. }) => {
            let Error::NotStronglyStable { generator, from, to } = &e else { unreachable!() };
            text.push_str("strongly_stable: false\n");
            v["strongly_stable"] = Value::Bool(false);
            v["violation"] = json!({
                "generator": json::monomial(generator),
                "from": from,
                "to": to,
            });
            return Ok(Outcome {
                text,
                json: v,
                code: 2,
                message: Some(format!("error: {e}")),
            });
        }
        Err(e) => return Err(e),
    };
    let saturated = stable.is_saturated();
    writeln!(text, "strongly_stable: true\nsaturated: {saturated}").unwrap();
    v["strongly_stable"] = Value::Bool(true);
    v["saturated"] = Value::Bool(saturated);
    match stable.m_truncation() {
        MTruncation::Yes {
            saturation,
            min_degree,
        } => {
            writeln!(text, "m_truncation: {saturation} truncated at {min_degree}").unwrap();
            v["m_truncation"] = json!({"saturation": json::ideal(&saturation), "degree": min_degree});
        }
        MTruncation::No => {
            text.push_str("m_truncation: no\n");
            v["m_truncation"] = Value::Null;
        }
    }
    Ok(Outcome::ok(text, v))
}

fn reduce<R: CoeffRing>(
    ring: R,
    j: &StableIdeal,
    args: &MarkedArgs,
    poly: &str,
    trace: bool,
) -> Result<Outcome> {
    let set = input::marked_set(ring, j, args)?;
    let h = parse_poly(set.ring(), j.nvars(), &input::read_arg(poly)?)?;
    let (g, steps) = set.reduce_traced(&h)?;
    let mut text = String::new();
    if trace {
        for s in &steps {
            writeln!(
                text,
                "eliminate ({})*{} using {}*f[{}]",
                s.coefficient, s.monomial, s.cofactor, s.generator
            )
            .unwrap();
        }
    }
    writeln!(text, "{g}").unwrap();
    let mut v = json!({"remainder": json::poly(&g), "text": g.to_string()});
    if trace {
        v["trace"] = steps
            .iter()
            .map(|s| {
                json!({
                    "monomial": json::monomial(&s.monomial),
                    "coefficient": markedfam::ring::Scalar::to_canonical_string(&s.coefficient),
                    "generator": json::monomial(&s.generator),
                    "cofactor": json::monomial(&s.cofactor),
                })
            })
            .collect();
    }
    Ok(Outcome::ok(text, v))
}

fn basis_test<R: CoeffRing>(ring: R, j: &StableIdeal, args: &MarkedArgs) -> Result<Outcome> {
    let set: MarkedSet<R> = input::marked_set(ring, j, args)?;
    let cert = set.is_marked_basis();
    let mut text = format!("ring: {}\nbasis: {}\n", set.ring().descriptor(), cert.basis);
    for w in &cert.witnesses {
        writeln!(text, "witness {}: {}", w.pair, w.remainder).unwrap();
    }
    let witnesses: Vec<Value> = cert
        .witnesses
        .iter()
        .map(|w| json!({"ek": json::ek_pair(&w.pair), "remainder": json::poly(&w.remainder), "text": w.remainder.to_string()}))
        .collect();
    Ok(Outcome {
        text,
        json: json!({"ring": set.ring().descriptor().to_string(), "basis": cert.basis, "witnesses": witnesses}),
        code: if cert.basis { 0 } else { 1 },
        message: None,
    })
}

fn aux_basis<R: CoeffRing>(ring: R, j: &StableIdeal, args: &MarkedArgs, s: u32) -> Result<Outcome> {
    let set = input::marked_set(ring, j, args)?;
    let aux = set.auxiliary_basis(s);
    let text = aux.polys.iter().map(|f| format!("{}\n", f.poly())).collect();
    let polys: Vec<Value> = aux
        .polys
        .iter()
        .map(|f| json!({"head": json::monomial(f.head()), "poly": json::poly(f.poly()), "text": f.poly().to_string()}))
        .collect();
    Ok(Outcome::ok(text, json!({"degree": s, "polys": polys})))
}

fn obstructions<R: CoeffRing>(ring: R, j: &StableIdeal, args: &MarkedArgs, s: u32) -> Result<Outcome> {
    let set = input::marked_set(ring, j, args)?;
    let o = set.obstructions(s);
    let mut text = String::new();
    for (m, r) in &o.remainders {
        writeln!(text, "{m}: {r}").unwrap();
    }
    let rows: Vec<Value> = o
        .remainders
        .iter()
        .map(|(m, r)| {
            json!({
                "cofactor": json::monomial(&m.cofactor),
                "base": json::monomial(&m.base),
                "remainder": json::poly(r),
                "text": r.to_string(),
            })
        })
        .collect();
    Ok(Outcome::ok(
        text,
        json!({"degree": s, "remainders": rows, "zero": o.is_zero()}),
    ))
}

/// `P^{delta}_{alpha,alpha'}` with x0-first digit subscripts.
fn label(g: &EquationGenerator) -> String {
    let d = |m: &Monomial| m.digit_string().unwrap_or_else(|| format!("[{m}]"));
    format!(
        "P^{{{}}}_{{{},{}}}",
        d(&g.residual),
        d(&g.pair.base),
        d(&g.pair.partner)
    )
}

fn equations_text(eqs: &SchemeEquations) -> String {
    let mut text = format!(
        "ideal: {}\nparameters: {}\ngenerators: {}\n",
        eqs.ideal,
        eqs.params.len(),
        eqs.generators.len()
    );
    for g in &eqs.generators {
        writeln!(text, "{} = {}", label(g), g.poly.to_string_with(ParamStyle::Alias)).unwrap();
    }
    text
}
