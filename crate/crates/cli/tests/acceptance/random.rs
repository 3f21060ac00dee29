//! Seeded random instances: strongly stable ideals, marked sets, marked
//! bases and homogeneous polynomials.

use std::collections::{BTreeSet, VecDeque};

use markedfam::monomial::monomials_of_degree;
use markedfam::ring::{CoeffRing, Field, RingDescriptor};
use markedfam::verify::extract_marked_set;
use markedfam::{MarkedSet, Monomial, Poly, StableIdeal};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every monomial reachable from `b` by elementary moves `x_j -> x_i`,
/// `i > j`: the set of `a` with `a >=_B b`.
pub fn borel_up(b: &Monomial) -> BTreeSet<Monomial> {
    let n = b.nvars();
    let mut seen = BTreeSet::from([b.clone()]);
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(m) = queue.pop_front() {
        for j in 0..n {
            for i in j + 1..n {
                if let Some(next) = m.exchange(j, i) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen
}

/// A strongly stable ideal generated by the Borel closures of up to three
/// random monomials of degree at most 4.
pub fn ideal(rng: &mut ChaCha8Rng, nvars: usize) -> StableIdeal {
    loop {
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let all = monomials_of_degree(nvars, rng.gen_range(1..=4));
            let a = &all[rng.gen_range(0..all.len())];
            gens.extend(borel_up(a));
        }
        if let Ok(j) = StableIdeal::from_generators(nvars, gens) {
            return j;
        }
    }
}

pub fn scalar<R: CoeffRing>(rng: &mut ChaCha8Rng, ring: &R) -> R::Elem {
    let n: i64 = rng.gen_range(-3..=3);
    if ring.descriptor() == RingDescriptor::Rationals && rng.gen_bool(0.3) {
        let d: i64 = rng.gen_range(2..=3);
        ring.from_ratio(&n.into(), &d.into()).expect("QQ divides")
    } else {
        ring.from_int(n)
    }
}

/// Each tail entry is nonzero with probability one half.
pub fn marked_set<R: CoeffRing>(rng: &mut ChaCha8Rng, ring: &R, j: &StableIdeal) -> MarkedSet<R> {
    let mut tails = Vec::new();
    for alpha in j.generators() {
        for beta in j.sous_escalier(alpha.degree()) {
            if rng.gen_bool(0.5) {
                tails.push(((alpha.clone(), beta), scalar(rng, ring)));
            }
        }
    }
    MarkedSet::from_tails(j.clone(), ring.clone(), tails).expect("valid positions")
}

pub fn homogeneous<R: CoeffRing>(rng: &mut ChaCha8Rng, ring: &R, nvars: usize, s: u32) -> Poly<R::Elem> {
    let mut p = Poly::zero(nvars);
    for m in monomials_of_degree(nvars, s) {
        if rng.gen_bool(0.6) {
            p.add_term(m, scalar(rng, ring));
        }
    }
    p
}

/// The marked basis of `g(J)` for a random substitution
/// `x_i -> x_i + sum_{k < i} a_ik x_k`.
///
/// Every extra term of `g(x^alpha)` is `DegLex`-smaller than `x^alpha` and
/// `g(J)` has the Hilbert function of `J`, so its `DegLex` initial ideal is
/// `J` and its reduced Groebner basis is a `J`-marked basis.
pub fn basis<F: Field>(rng: &mut ChaCha8Rng, field: &F, j: &StableIdeal) -> MarkedSet<F> {
    let n = j.nvars();
    let forms: Vec<Poly<F::Elem>> = (0..n)
        .map(|i| {
            let mut l = Poly::term(Monomial::var(n, i), field.one());
            for k in 0..i {
                l.add_term(Monomial::var(n, k), scalar(rng, field));
            }
            l
        })
        .collect();
    let gens: Vec<Poly<F::Elem>> = j
        .generators()
        .iter()
        .map(|g| {
            let mut p = Poly::term(Monomial::one(n), field.one());
            for (i, &e) in g.exponents().iter().enumerate() {
                for _ in 0..e {
                    p = p.mul(&forms[i]);
                }
            }
            p
        })
        .collect();
    extract_marked_set(field, j, &gens).expect("a triangular change of coordinates keeps J")
}
