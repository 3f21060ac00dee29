//! Linear-algebra oracle over fields: degree slices as matrices, ranks,
//! `I_s` meets `<N(J)_s>`, and recovery of the unique marked set of an ideal.
//!
//! Independent of the reduction engine; used to cross-check it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::StableIdeal;
use crate::marked::MarkedSet;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;
use crate::ring::{CoeffRing, Field, Scalar};

/// Rows of coefficients against every degree-`s` monomial, columns
/// descending by `DegLex`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeMatrix<S> {
    pub s: u32,
    pub columns: Vec<Monomial>,
    pub rows: Vec<Vec<S>>,
}

impl<S: Scalar> DegreeMatrix<S> {
    pub fn new<R: CoeffRing<Elem = S>>(ring: &R, nvars: usize, s: u32, polys: &[Poly<S>]) -> Result<Self> {
        Self::with_columns(ring, s, monomials_of_degree(nvars, s), polys)
    }

    fn with_columns<R: CoeffRing<Elem = S>>(
        ring: &R,
        s: u32,
        columns: Vec<Monomial>,
        polys: &[Poly<S>],
    ) -> Result<Self> {
        let position: std::collections::HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = polys
            .iter()
            .map(|p| {
                let mut row = vec![ring.zero(); columns.len()];
                for (m, c) in p.terms() {
                    let &i = position.get(m).ok_or(Error::DegreeMismatch(s, m.degree()))?;
                    row[i] = c.clone();
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeMatrix { s, columns, rows })
    }

    pub fn to_polys(&self) -> Vec<Poly<S>> {
        let nvars = self.columns.first().map_or(0, Monomial::nvars);
        self.rows
            .iter()
            .map(|row| {
                Poly::from_terms(
                    nvars,
                    self.columns
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (m.clone(), c.clone())),
                )
            })
            .collect()
    }
}

/// Reduced row echelon form; zero rows are dropped.  Returns the pivot
/// columns alongside.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<(Vec<Vec<F::Elem>>, Vec<usize>)> {
    let mut rows: Vec<Vec<F::Elem>> = rows.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col])?;
        for x in rows[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * y;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Ok((rows, pivots))
}

pub fn row_space_rank<F: Field>(field: &F, m: &DegreeMatrix<F::Elem>) -> Result<usize> {
    Ok(rref(field, &m.rows)?.1.len())
}

/// Fraction-free (Bareiss) rank of an integer matrix; equals the rank over
/// `QQ`.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !Zero::is_zero(&a[i][col])) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in col + 1..ncols {
                let v = (&a[r][col] * &a[i][j] - &a[i][col] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// All degree-`s` multiples of the given homogeneous polynomials: a spanning
/// set of `I_s`.
pub fn ideal_slice<S: Scalar>(gens: &[Poly<S>], nvars: usize, s: u32) -> Result<Vec<Poly<S>>> {
    let mut out = Vec::new();
    for g in gens {
        let Some(d) = g.homogeneous_degree()? else {
            continue;
        };
        if d <= s {
            out.extend(monomials_of_degree(nvars, s - d).iter().map(|m| g.mul_monomial(m)));
        }
    }
    Ok(out)
}

/// Basis of `I_s` meets `<N(J)_s>` in echelon form, given rows spanning
/// `I_s`.
///
/// Columns of `J_s` come first, so after elimination the rows whose pivot
/// lies in an `N(J)` column are exactly the intersection.
pub fn intersect_with_sous_escalier<F: Field>(
    field: &F,
    ideal: &StableIdeal,
    s: u32,
    span: &[Poly<F::Elem>],
) -> Result<Vec<Poly<F::Elem>>> {
    let j_cols = ideal.monomials_in_degree(s);
    let split = j_cols.len();
    let mut columns = j_cols;
    columns.extend(ideal.sous_escalier(s));
    let m = DegreeMatrix::with_columns(field, s, columns, span)?;
    let (rows, pivots) = rref(field, &m.rows)?;
    let kept = DegreeMatrix {
        s,
        columns: m.columns,
        rows: rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= split)
            .map(|(r, _)| r)
            .collect(),
    };
    Ok(kept.to_polys())
}

/// Checks `A[x]_s = I_s (+) <N(J)_s>` by rank.
pub fn direct_sum_holds<F: Field>(
    field: &F,
    ideal: &StableIdeal,
    s: u32,
    span: &[Poly<F::Elem>],
) -> Result<std::result::Result<(), String>> {
    let m = DegreeMatrix::new(field, ideal.nvars(), s, span)?;
    let rank = row_space_rank(field, &m)?;
    let want = ideal.rank_in_degree(s);
    let meet = intersect_with_sous_escalier(field, ideal, s, span)?;
    if !meet.is_empty() {
        return Ok(Err(format!(
            "I_{s} meets <N(J)_{s}> in dimension {} (e.g. {})",
            meet.len(),
            meet[0]
        )));
    }
    if rank != want {
        return Ok(Err(format!("rank I_{s} = {rank} but rank J_{s} = {want}")));
    }
    Ok(Ok(()))
}

/// Tail coefficients of the unique `J`-marked set inside the ideal generated
/// by `gens`, keyed by `(head, tail monomial)`.
pub fn unique_marked_set_solver<F: Field>(
    field: &F,
    ideal: &StableIdeal,
    gens: &[Poly<F::Elem>],
) -> Result<Vec<((Monomial, Monomial), F::Elem)>> {
    let mut degrees: Vec<u32> = ideal.generators().iter().map(Monomial::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut tails = Vec::new();
    for s in degrees {
        let span = ideal_slice(gens, ideal.nvars(), s)?;
        if let Err(reason) = direct_sum_holds(field, ideal, s, &span)? {
            return Err(Error::DirectSumFailure { degree: s, reason });
        }
        // with J columns first and full rank on them, each generator's row
        // of the RREF is x^alpha + (combination of N(J)_s)
        let j_cols = ideal.monomials_in_degree(s);
        let split = j_cols.len();
        let mut columns = j_cols;
        columns.extend(ideal.sous_escalier(s));
        let m = DegreeMatrix::with_columns(field, s, columns, &span)?;
        let (rows, pivots) = rref(field, &m.rows)?;
        for (row, p) in rows.iter().zip(&pivots) {
            let head = &m.columns[*p];
            if !ideal.is_generator(head) {
                continue;
            }
            for (col, c) in row.iter().enumerate().skip(split) {
                if !c.is_zero() {
                    tails.push(((head.clone(), m.columns[col].clone()), c.clone()));
                }
            }
        }
    }
    Ok(tails)
}

/// The unique marked set of the ideal generated by `gens`, after checking
/// the direct-sum condition in every degree up to `m + 1`.
pub fn extract_marked_set<F: Field>(
    field: &F,
    ideal: &StableIdeal,
    gens: &[Poly<F::Elem>],
) -> Result<MarkedSet<F>> {
    let tails = unique_marked_set_solver(field, ideal, gens)?;
    for s in ideal.min_degree()..=ideal.max_degree() + 1 {
        let span = ideal_slice(gens, ideal.nvars(), s)?;
        if let Err(reason) = direct_sum_holds(field, ideal, s, &span)? {
            return Err(Error::DirectSumFailure { degree: s, reason });
        }
    }
    MarkedSet::from_tails(ideal.clone(), field.clone(), tails)
}

/// `N(J, I)_s` for the ideal generated by a marked set.
pub fn obstruction_space<F: Field>(set: &MarkedSet<F>, s: u32) -> Result<Vec<Poly<F::Elem>>> {
    let gens: Vec<Poly<F::Elem>> = set.polys().iter().map(|f| f.poly().clone()).collect();
    let span = ideal_slice(&gens, set.nvars(), s)?;
    intersect_with_sous_escalier(set.ring(), set.ideal(), s, &span)
}

/// Basis test by linear algebra: `N(J, I)_s = 0` for `s <= m + 1`.
pub fn linear_basis_test<F: Field>(set: &MarkedSet<F>) -> Result<bool> {
    let ideal = set.ideal();
    for s in ideal.min_degree()..=ideal.max_degree() + 1 {
        if !obstruction_space(set, s)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the span of `F^(s)`.
pub fn rank_of_v_multiples<F: Field>(set: &MarkedSet<F>, s: u32) -> Result<usize> {
    let polys: Vec<Poly<F::Elem>> = set
        .degree_slice(s)
        .v_multiples
        .iter()
        .map(|m| set.multiple_poly(m))
        .collect();
    row_space_rank(set.ring(), &DegreeMatrix::new(set.ring(), set.nvars(), s, &polys)?)
}
