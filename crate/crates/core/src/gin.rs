//! Generic initial ideals in lex order and the monomial predicates around them.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::{Field, FieldSpec};
use crate::algebra::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::algebra::poly::{LinearChange, Polynomial};
use crate::error::{Error, Result};
use crate::graded::GradedPieces;
use crate::groebner::{Ideal, MonomialIdeal};
use crate::seed;
use crate::sequences::is_o_sequence;

#[derive(Clone, Debug, Serialize)]
pub struct GinResult {
    pub monomial_ideal: MonomialIdeal,
    pub seeds_used: Vec<u64>,
    pub trials: usize,
    pub borel_certified: bool,
    pub field_mode: FieldSpec,
    pub probabilistic: bool,
    /// Generators are complete up to this degree.
    pub degree_cap: usize,
}

impl GinResult {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.monomial_ideal
    }
}

/// Image of the generators under a linear change of coordinates.
pub fn transform_generators<F: Field>(ideal: &Ideal<F>, change: &LinearChange<F>) -> Result<Vec<Polynomial<F>>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.apply_linear_change(change))
        .collect()
}

/// `in_lex` of `ideal` after the given change, complete up to degree `cap`.
pub fn lex_initial_after_change<F: Field>(
    ideal: &Ideal<F>,
    change: &LinearChange<F>,
    cap: usize,
) -> Result<MonomialIdeal> {
    let gens = transform_generators(ideal, change)?;
    let mut pieces = GradedPieces::new(ideal.field(), ideal.nvars(), &gens)?;
    Ok(lex_initial_from_pieces(&mut pieces, cap))
}

pub(crate) fn lex_initial_from_pieces<F: Field>(pieces: &mut GradedPieces<F>, cap: usize) -> MonomialIdeal {
    let n = pieces.nvars();
    let mut all: Vec<Monomial> = Vec::new();
    let mut so_far = MonomialIdeal::zero(n);
    for d in 0..=cap {
        let lead = pieces.lex_leading_monomials(d);
        // only monomials not already generated in lower degrees can be minimal
        let fresh: Vec<Monomial> = lead.into_iter().filter(|m| !so_far.contains(m)).collect();
        if !fresh.is_empty() {
            all.extend(fresh);
            so_far = MonomialIdeal::new(n, all.iter().copied());
        }
    }
    so_far
}

/// `gin(I)` truncated at `degree_cap`, by consensus of `trials` random changes.
pub fn gin<F: Field>(ideal: &Ideal<F>, trials: usize, seed: u64, degree_cap: usize) -> Result<GinResult> {
    if trials < 2 {
        return Err(Error::invalid("gin needs at least two trials"));
    }
    ideal.require_homogeneous("gin needs a homogeneous ideal")?;
    let seeds: Vec<u64> = (0..trials as u64).map(|k| seed::derive(seed, "gin", k)).collect();
    let results: Vec<Result<MonomialIdeal>> = seeds
        .par_iter()
        .map(|&s| {
            let change = LinearChange::random(ideal.field(), ideal.nvars(), s);
            lex_initial_after_change(ideal, &change, degree_cap)
        })
        .collect();
    let mut ideals = Vec::with_capacity(trials);
    for r in results {
        ideals.push(r?);
    }
    let first = ideals[0].clone();
    if let Some(k) = ideals.iter().position(|m| *m != first) {
        return Err(Error::Genericity(format!(
            "gin trials disagree (trial 0: {first}, trial {k}: {})",
            ideals[k]
        )));
    }
    if !is_borel_fixed(&first) {
        return Err(Error::Genericity(format!(
            "initial ideal {first} is not strongly stable"
        )));
    }
    let spec = ideal.field().spec();
    Ok(GinResult {
        monomial_ideal: first,
        seeds_used: seeds,
        trials,
        borel_certified: true,
        field_mode: spec,
        probabilistic: spec.is_probabilistic(),
        degree_cap,
    })
}

/// Strongly stable: `m x_i / x_j` stays in `M` for every generator `m`,
/// every `x_j | m` and every `i < j`.
pub fn is_borel_fixed(m: &MonomialIdeal) -> bool {
    let n = m.nvars();
    m.generators().iter().all(|g| {
        (1..n).all(|j| {
            g.exp(j) == 0
                || (0..j).all(|i| {
                    let mut h = *g;
                    h.set_exp(j, g.exp(j) - 1);
                    h.set_exp(i, g.exp(i) + 1);
                    m.contains(&h)
                })
        })
    })
}

/// The degree-`t` monomials of `M` are an initial lex segment.
pub fn is_lex_segment(m: &MonomialIdeal, t: usize) -> bool {
    let all = monomials_of_degree(m.nvars(), t);
    let k = all.iter().filter(|x| m.contains(x)).count();
    all[..k].iter().all(|x| m.contains(x))
}

/// `M : x0^k`.
pub fn monomial_colon_by_power(m: &MonomialIdeal, k: u32) -> MonomialIdeal {
    m.colon_x0_power(k)
}

/// The lex-segment ideal with Hilbert function `h(0..=degree_cap)`.
pub fn lex_segment_ideal_for(h: &[u64], nvars: usize, degree_cap: usize) -> Result<MonomialIdeal> {
    let check = is_o_sequence(h);
    if !check.ok {
        return Err(Error::invalid(format!(
            "not an O-sequence (violation at degree {})",
            check.violation.unwrap()
        )));
    }
    let mut gens = Vec::new();
    for d in 0..=degree_cap {
        let all = monomials_of_degree(nvars, d);
        let hd = h.get(d).copied().unwrap_or(0) as usize;
        if hd > all.len() {
            return Err(Error::invalid(format!(
                "h({d}) = {hd} exceeds the {} monomials of degree {d}",
                all.len()
            )));
        }
        gens.extend_from_slice(&all[..all.len() - hd]);
    }
    Ok(MonomialIdeal::new(nvars, gens))
}

/// `adim(X, t, m)` read from a gin: degree-`t` monomials with x0-exponent at most `t - m`.
pub fn adim_via_gin(g: &GinResult, t: usize, m: usize) -> Result<u64> {
    if g.degree_cap < t {
        return Err(Error::CapTooSmall {
            cap: g.degree_cap,
            needed: t,
        });
    }
    if m > t {
        return Ok(0);
    }
    Ok(g
        .monomial_ideal
        .monomials_in_degree(t)
        .iter()
        .filter(|x| x.tail_degree() >= m)
        .count() as u64)
}

/// `dim [M]_t`.
pub fn monomial_dim(m: &MonomialIdeal, t: usize) -> u64 {
    count_monomials(m.nvars(), t) as u64 - crate::hilbert::standard_monomial_count(m, t)
}
