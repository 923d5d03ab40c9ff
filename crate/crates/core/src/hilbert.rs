//! Hilbert functions, graded dimensions and h-vectors.

use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::monomial::{count_monomials, monomials_of_degree, MonomialOrder};
use crate::error::{Error, Result};
use crate::graded::GradedPieces;
use crate::groebner::{Ideal, MonomialIdeal, Saturation};

/// `h(t)` for `t = offset, offset + 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    pub offset: usize,
    pub values: Vec<u64>,
    /// First degree from which the function is known to be constant.
    pub stable_from: Option<usize>,
}

impl HilbertFunction {
    pub fn at(&self, t: usize) -> Option<u64> {
        t.checked_sub(self.offset).and_then(|k| self.values.get(k).copied())
    }

    pub fn stable_value(&self) -> Option<u64> {
        self.stable_from.and_then(|d| self.at(d))
    }

    /// Value at any degree once stability is known.
    pub fn eval(&self, t: usize) -> Option<u64> {
        match (self.at(t), self.stable_from) {
            (Some(v), _) => Some(v),
            (None, Some(d)) if t >= d => self.at(d),
            _ => None,
        }
    }
}

/// First differences up to stabilization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub offset: usize,
    pub entries: Vec<u64>,
}

impl HVector {
    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }
}

/// `dim [R/M]_t`: degree-`t` monomials outside `M`.
pub fn standard_monomial_count(m: &MonomialIdeal, t: usize) -> u64 {
    if m.is_zero() {
        return count_monomials(m.nvars(), t) as u64;
    }
    let mut count = 0u64;
    let mut cur = vec![0u32; m.nvars()];
    count_rec(m, &mut cur, 0, t as u32, &mut count);
    count
}

// Builds exponent vectors variable by variable; a partial vector already in
// `M` (with the remaining degree unassigned) prunes the whole subtree since
// every completion is a multiple of it.
fn count_rec(m: &MonomialIdeal, cur: &mut Vec<u32>, i: usize, left: u32, count: &mut u64) {
    let n = cur.len();
    if partial_in(m, cur, i) {
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        if !partial_in(m, cur, n) {
            *count += 1;
        }
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        count_rec(m, cur, i + 1, left - e, count);
    }
    cur[i] = 0;
}

fn partial_in(m: &MonomialIdeal, cur: &[u32], upto: usize) -> bool {
    m.generators().iter().any(|g| {
        (0..cur.len()).all(|k| {
            let e = g.exp(k);
            if k < upto {
                e <= cur[k]
            } else {
                e == 0
            }
        })
    })
}

/// `h_{R/M}(t)` for `t = 0..=t_max`.
pub fn monomial_hilbert_function(m: &MonomialIdeal, t_max: usize) -> Vec<u64> {
    (0..=t_max).map(|t| standard_monomial_count(m, t)).collect()
}

fn stable_from(values: &[u64], max_gen_degree: usize, saturated: bool) -> Option<usize> {
    // Saturated: R/I has depth >= 1, so the first difference is the Hilbert
    // function of R/(I, l) for a general linear form l and stays zero once zero.
    // Otherwise Gotzmann persistence: with all generators in degree <= d-1 and
    // h(d) = h(d-1) <= d-1 (maximal growth), the function stays constant.
    (1..values.len()).find(|&d| {
        values[d] == values[d - 1]
            && (saturated || (d > max_gen_degree && values[d - 1] <= (d - 1) as u64))
    })
}

/// `h_{R/I}(t)` for `0 <= t <= t_max`, through the degrevlex initial ideal.
pub fn hilbert_function<F: Field>(ideal: &Ideal<F>, t_max: usize) -> Result<HilbertFunction> {
    hilbert_function_with(ideal, t_max, MonomialOrder::DegRevLex)
}

pub fn hilbert_function_with<F: Field>(
    ideal: &Ideal<F>,
    t_max: usize,
    ord: MonomialOrder,
) -> Result<HilbertFunction> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous(
            "Hilbert functions need a homogeneous ideal".into(),
        ));
    }
    let init = ideal.initial_ideal_to(ord, t_max)?;
    let values = monomial_hilbert_function(&init, t_max);
    let max_gen = ideal.generators().iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let saturated = ideal.saturation_flag() == Saturation::Saturated;
    let stable = stable_from(&values, max_gen, saturated);
    Ok(HilbertFunction {
        offset: 0,
        values,
        stable_from: stable,
    })
}

/// `dim [I]_t`.
pub fn graded_dim_ideal<F: Field>(ideal: &Ideal<F>, t: usize) -> Result<u64> {
    let h = hilbert_function(ideal, t)?;
    Ok(count_monomials(ideal.nvars(), t) as u64 - h.values[t])
}

/// `dim [I]_t` by row-reducing all monomial multiples of the generators.
pub fn graded_dim_linear_algebra<F: Field>(ideal: &Ideal<F>, t: usize) -> Result<u64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous("graded dimension".into()));
    }
    let n = ideal.nvars();
    let basis = crate::linalg::MonomialBasis::lex(n, t);
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let d = g.degree().unwrap();
        if d > t {
            continue;
        }
        for m in monomials_of_degree(n, t - d) {
            let gm = g.mul_term(&m, &ideal.field().one());
            rows.push(basis.vector(&gm));
        }
    }
    Ok(crate::linalg::rank(ideal.field(), rows, basis.len()) as u64)
}

/// Hilbert function of `R/I` computed degree by degree with linear algebra.
pub fn hilbert_function_linear_algebra<F: Field>(ideal: &Ideal<F>, t_max: usize) -> Result<Vec<u64>> {
    let mut g = GradedPieces::new(ideal.field(), ideal.nvars(), ideal.generators())?;
    Ok((0..=t_max)
        .map(|t| (count_monomials(ideal.nvars(), t) - g.dim(t)) as u64)
        .collect())
}

/// Hilbert function extended until it is certified constant.
pub fn stabilized_hilbert_function<F: Field>(ideal: &Ideal<F>, limit: usize) -> Result<HilbertFunction> {
    let mut t_max = ideal
        .generators()
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0)
        + 4;
    loop {
        let h = hilbert_function(ideal, t_max.min(limit))?;
        if h.stable_from.is_some() {
            return Ok(h);
        }
        if t_max >= limit {
            return Err(Error::NotStabilized(limit));
        }
        t_max *= 2;
    }
}

/// h-vector of a quotient whose Hilbert function becomes constant.
pub fn h_vector<F: Field>(ideal: &Ideal<F>) -> Result<HVector> {
    let h = stabilized_hilbert_function(ideal, 128)?;
    let s = h.stable_from.unwrap();
    let mut entries = Vec::new();
    let mut prev = 0u64;
    for t in 0..=s {
        let v = h.values[t];
        entries.push(v - prev);
        prev = v;
    }
    while entries.last() == Some(&0) && entries.len() > 1 {
        entries.pop();
    }
    Ok(HVector { offset: 0, entries })
}

/// Degree and genus of a curve read off `h(t) = e t - g + 1` on `[t0, t_max]`.
pub fn curve_degree_genus(h: &HilbertFunction, t0: usize) -> Option<(i64, i64)> {
    let v = &h.values;
    if v.len() < t0 + 3 {
        return None;
    }
    let e = v[t0 + 1] as i64 - v[t0] as i64;
    for t in t0..v.len() - 1 {
        if v[t + 1] as i64 - v[t] as i64 != e {
            return None;
        }
    }
    let g = e * t0 as i64 + 1 - v[t0] as i64;
    Some((e, g))
}
