//! AV sequences `AV_{X,j}(m) = adim(X, m+j, m) - vdim(X, m+j, m)`.
//!
//! Two routes compute the same numbers:
//! - direct: `dim [R/(I_X + I_P^m)]_{m+j}` at general points, in the original
//!   coordinates, with `[I_P^m]_t` spanned by `l^a x0^(t-|a|)` for
//!   `l_i = x_i - p_i x0` and `m <= |a| <= t`;
//! - gin colon: `h_{R/J}(m-1)` for `J = gin(I_X) : x0^(j+1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::monomial::{monomials_of_degree, Monomial};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::geometry::ProjPoint;
use crate::gin::{gin, GinResult};
use crate::groebner::Ideal;
use crate::hilbert::standard_monomial_count;
use crate::linalg::{Echelon, MonomialBasis};
use crate::seed;
use crate::sequences::{is_o_sequence, IntSequence, Tail};
use crate::unexpected::dims::{ambient_dim, graded_piece_rows};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Direct,
    GinColon,
    Both,
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Route::Direct),
            "gin_colon" | "gin-colon" | "gin" => Ok(Route::GinColon),
            "both" => Ok(Route::Both),
            _ => Err(Error::invalid(format!("unknown route `{s}`"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Direct => "direct",
            Route::GinColon => "gin_colon",
            Route::Both => "both",
        })
    }
}

/// `h_{R/(gin : x0^(j+1))}(m - 1)`, which needs the gin complete through degree `m + j`.
pub fn av_gin_colon(g: &GinResult, j: usize, m: usize) -> Result<u64> {
    if m == 0 {
        return Ok(0);
    }
    if g.degree_cap < m + j {
        return Err(Error::CapTooSmall {
            cap: g.degree_cap,
            needed: m + j,
        });
    }
    let colon = g.ideal().colon_x0_power(j as u32 + 1);
    Ok(standard_monomial_count(&colon, m - 1))
}

struct DirectProbe<F: Field> {
    seed: u64,
    // forms x_i - p_i x0 for i = 1..n
    lines: Vec<Polynomial<F>>,
    powers: Mutex<HashMap<Monomial, Arc<Polynomial<F>>>>,
}

impl<F: Field> DirectProbe<F> {
    fn new(field: &F, nvars: usize, seed: u64) -> Self {
        let mut k = 0;
        let p = loop {
            let p = ProjPoint::random(field, nvars, seed::derive(seed, "direct-point", k));
            if p.pivot() == 0 {
                break p;
            }
            k += 1;
        };
        let x0 = Polynomial::var(field, nvars, 0);
        let lines = (1..nvars)
            .map(|i| Polynomial::var(field, nvars, i).sub(&x0.scale(&p.coords()[i])))
            .collect();
        DirectProbe {
            seed,
            lines,
            powers: Mutex::new(HashMap::new()),
        }
    }

    // l^a for an exponent vector a over the n forms
    fn power(&self, field: &F, nvars: usize, a: &Monomial) -> Arc<Polynomial<F>> {
        if let Some(p) = self.powers.lock().unwrap().get(a) {
            return p.clone();
        }
        let value = match (0..a.nvars()).find(|&i| a.exp(i) > 0) {
            None => Arc::new(Polynomial::one(field, nvars)),
            Some(i) => {
                let mut b = *a;
                b.set_exp(i, a.exp(i) - 1);
                Arc::new(self.power(field, nvars, &b).mul(&self.lines[i]))
            }
        };
        self.powers.lock().unwrap().insert(*a, value.clone());
        value
    }

    fn av(&self, field: &F, ideal_rows: &Echelon<F>, basis: &MonomialBasis, t: usize, m: usize) -> u64 {
        let nvars = self.lines.len() + 1;
        let mut ech = ideal_rows.clone();
        for k in m..=t {
            let mut x0 = Monomial::one(nvars);
            x0.set_exp(0, (t - k) as u32);
            for a in monomials_of_degree(nvars - 1, k) {
                let p = self.power(field, nvars, &a).mul_term(&x0, &field.one());
                ech.insert(basis.vector(&p));
                if ech.rank() == basis.len() {
                    return 0;
                }
            }
        }
        (basis.len() - ech.rank()) as u64
    }
}

/// Direct AV values at general points; reuses the graded pieces of `I_X` across queries.
pub struct DirectAv<F: Field> {
    ideal: Ideal<F>,
    trials: usize,
    seed: u64,
    probes: Mutex<Vec<Arc<DirectProbe<F>>>>,
    pieces: Mutex<HashMap<usize, Arc<(MonomialBasis, Echelon<F>)>>>,
}

impl<F: Field> DirectAv<F> {
    pub fn new(ideal: &Ideal<F>, trials: usize, seed: u64) -> Result<Self> {
        ideal.require_homogeneous("AV needs a homogeneous ideal")?;
        Ok(DirectAv {
            ideal: ideal.clone(),
            trials: trials.max(1),
            seed,
            probes: Mutex::new(Vec::new()),
            pieces: Mutex::new(HashMap::new()),
        })
    }

    fn piece(&self, t: usize) -> Result<Arc<(MonomialBasis, Echelon<F>)>> {
        if let Some(p) = self.pieces.lock().unwrap().get(&t) {
            return Ok(p.clone());
        }
        let (basis, rows) = graded_piece_rows(&self.ideal, t)?;
        let mut ech = Echelon::new(self.ideal.field(), basis.len());
        for r in rows {
            ech.insert(r);
        }
        let p = Arc::new((basis, ech));
        self.pieces.lock().unwrap().insert(t, p.clone());
        Ok(p)
    }

    fn probes(&self, k: usize) -> Vec<Arc<DirectProbe<F>>> {
        let mut guard = self.probes.lock().unwrap();
        while guard.len() < k {
            let s = seed::derive(self.seed, "av-direct", guard.len() as u64);
            guard.push(Arc::new(DirectProbe::new(self.ideal.field(), self.ideal.nvars(), s)));
        }
        guard[..k].to_vec()
    }

    pub fn seeds(&self) -> Vec<u64> {
        self.probes.lock().unwrap().iter().map(|p| p.seed).collect()
    }

    /// `AV_{X,j}(m)`, the minimum over the sampled points.
    pub fn av(&self, j: usize, m: usize) -> Result<u64> {
        if m == 0 {
            return Ok(0);
        }
        let t = m + j;
        let piece = self.piece(t)?;
        let field = self.ideal.field();
        let mut probes = self.probes(self.trials);
        let mut values: Vec<u64> = probes
            .iter()
            .map(|p| p.av(field, &piece.1, &piece.0, t, m))
            .collect();
        if values.iter().any(|&v| v != values[0]) {
            probes = self.probes(self.trials + 1);
            values.push(probes.last().unwrap().av(field, &piece.1, &piece.0, t, m));
        }
        debug_assert!(piece.0.len() as u64 == ambient_dim(self.ideal.nvars(), t));
        Ok(*values.iter().min().unwrap())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AvReport {
    pub j: usize,
    pub route: Route,
    /// `values.values[k]` is `AV_{X,j}(k + 1)`.
    pub values: IntSequence,
    /// The left-shifted values form an O-sequence.
    pub o_sequence_check: bool,
    pub positive_support: IntSequence,
    /// The tail follows from a vanishing value; otherwise it is read off the
    /// computed window.
    pub tail_certified: bool,
    pub seeds: Vec<u64>,
    pub gin_cap: Option<usize>,
}

impl AvReport {
    pub fn at(&self, m: usize) -> Option<u64> {
        m.checked_sub(self.values.offset).and_then(|k| self.values.values.get(k).copied())
    }
}

/// Classifies the tail of `h(0), h(1), ...` for a standard graded quotient.
///
/// A zero value forces zeros afterwards. Otherwise a value repeated over the
/// last three degrees, or a repeat in degree `d` with `h(d) <= d` (maximal
/// growth), is read as a constant tail without certification.
pub fn classify_tail(h: &[u64]) -> (Tail, bool) {
    if h.contains(&0) {
        return (Tail::Zero, true);
    }
    let n = h.len();
    let gotzmann = (1..n).any(|d| h[d] == h[d - 1] && h[d - 1] <= (d - 1) as u64 && h[d..].iter().all(|&v| v == h[d]));
    if gotzmann || (n >= 3 && h[n - 1] == h[n - 2] && h[n - 2] == h[n - 3]) {
        return (Tail::Constant(h[n - 1]), false);
    }
    (Tail::Unknown, false)
}

fn o_sequence_ok(h: &[u64]) -> bool {
    if h.first() == Some(&0) {
        return h.iter().all(|&v| v == 0);
    }
    is_o_sequence(h).ok
}

/// `AV_{X,j}(m)` for `m = 1..=m_max`.
pub fn av_sequence<F: Field>(
    ideal: &Ideal<F>,
    j: usize,
    m_max: usize,
    route: Route,
    trials: usize,
    seed: u64,
) -> Result<AvReport> {
    if m_max == 0 {
        return Err(Error::invalid("m_max must be at least 1"));
    }
    let mut seeds = Vec::new();
    let mut gin_cap = None;
    let by_gin = if route != Route::Direct {
        let g = gin(ideal, trials.max(2), seed::derive(seed, "av-gin", 0), m_max + j)?;
        seeds.extend(g.seeds_used.iter().copied());
        gin_cap = Some(g.degree_cap);
        Some((1..=m_max).map(|m| av_gin_colon(&g, j, m)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    let by_direct = if route != Route::GinColon {
        let d = DirectAv::new(ideal, trials, seed::derive(seed, "av-direct", 0))?;
        let v = (1..=m_max)
            .into_par_iter()
            .map(|m| d.av(j, m))
            .collect::<Result<Vec<_>>>()?;
        seeds.extend(d.seeds());
        Some(v)
    } else {
        None
    };
    if let (Some(a), Some(b)) = (&by_direct, &by_gin) {
        if let Some(k) = (0..m_max).find(|&k| a[k] != b[k]) {
            return Err(Error::RouteMismatch {
                j,
                m: k + 1,
                direct: a[k] as i64,
                gin_colon: b[k] as i64,
            });
        }
    }
    let values = by_gin.or(by_direct).unwrap();
    let (tail, certified) = classify_tail(&values);
    let seq = IntSequence {
        offset: 1,
        values: values.clone(),
        tail,
    };
    Ok(AvReport {
        j,
        route,
        o_sequence_check: o_sequence_ok(&values),
        positive_support: seq.positive_support(),
        values: seq,
        tail_certified: certified,
        seeds,
        gin_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;
    use crate::geometry::Fixture;
    use crate::unexpected::dims::{adim, vdim_edim};

    #[test]
    fn tail_classes() {
        assert_eq!(classify_tail(&[1, 2, 1, 0]), (Tail::Zero, true));
        assert_eq!(classify_tail(&[1, 3, 4, 4, 4]), (Tail::Constant(4), false));
        assert_eq!(classify_tail(&[1, 1]), (Tail::Unknown, false));
        assert_eq!(classify_tail(&[1, 2, 2, 2]), (Tail::Constant(2), false));
        assert_eq!(classify_tail(&[1, 4, 8]), (Tail::Unknown, false));
    }

    #[test]
    fn routes_agree_with_the_definition() {
        // oracle: adim - vdim computed independently through the moved-point route
        let fp = PrimeField::default();
        let x = Fixture::X1.recipe(0).build(&fp).unwrap();
        let r = av_sequence(&x, 1, 6, Route::Both, 2, 3).unwrap();
        for m in 1..=6 {
            let a = adim(&x, m + 1, m, 2, 11).unwrap().value as i64;
            let (v, _) = vdim_edim(&x, m + 1, m).unwrap();
            assert_eq!(r.at(m).unwrap() as i64, a - v, "m = {m}");
        }
        assert!(r.o_sequence_check);
    }

    #[test]
    fn route_both_on_twisted_cubic() {
        let fp = PrimeField::default();
        let c = Fixture::TwistedCubic.recipe(0).build(&fp).unwrap();
        let r = av_sequence(&c, 0, 6, Route::Both, 2, 1).unwrap();
        assert_eq!(&r.values.values[2..], &[1, 1, 1, 1]);
    }
}
