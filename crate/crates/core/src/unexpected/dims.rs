//! Actual, virtual and expected dimensions of `[I_X ∩ I_P^m]_t`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::monomial::{binomial_i, count_monomials, monomials_of_degree, MonomialOrder};
use crate::algebra::poly::LinearChange;
use crate::error::{Error, Result};
use crate::gin::transform_generators;
use crate::groebner::Ideal;
use crate::hilbert::graded_dim_ideal;
use crate::linalg::{rank, MonomialBasis};
use crate::seed;

pub const DEFAULT_TRIALS: usize = 2;

/// `C(m - 1 + n, n)`: conditions imposed by an `m`-fold point of `P^n`.
pub fn fat_point_conditions(n: usize, m: usize) -> i64 {
    if m == 0 {
        return 0;
    }
    binomial_i((m - 1 + n) as i64, n as i64)
}

/// Rows of a basis of `[I]_t` over `MonomialBasis::lex(nvars, t)`, one
/// multiple `(u / lm g) g` of a degrevlex Gröbner basis element per monomial
/// `u` of `in(I)_t`.
pub fn graded_piece_rows<F: Field>(ideal: &Ideal<F>, t: usize) -> Result<(MonomialBasis, Vec<Vec<F::Elem>>)> {
    let n = ideal.nvars();
    let gb = ideal.groebner_basis_to(MonomialOrder::DegRevLex, Some(t))?;
    let basis = MonomialBasis::lex(n, t);
    let one = ideal.field().one();
    let pairs: Vec<_> = gb
        .polynomials()
        .iter()
        .zip(gb.leading_monomials())
        .filter(|(_, lm)| lm.degree() <= t)
        .collect();
    let mut rows = Vec::new();
    for u in monomials_of_degree(n, t) {
        if let Some((g, lm)) = pairs.iter().find(|(_, lm)| lm.divides(&u)) {
            let q = lm.div(&u).unwrap();
            rows.push(basis.vector(&g.mul_term(&q, &one)));
        }
    }
    Ok((basis, rows))
}

/// `(vdim, edim)` with `vdim = dim [I_X]_t - C(m - 1 + n, n)`.
pub fn vdim_edim<F: Field>(ideal: &Ideal<F>, t: usize, m: usize) -> Result<(i64, u64)> {
    let n = ideal.nvars() - 1;
    let v = graded_dim_ideal(ideal, t)? as i64 - fat_point_conditions(n, m);
    Ok((v, v.max(0) as u64))
}

/// One general point `P`, realized as `(1:0:...:0)` after a random change of coordinates.
struct Probe<F: Field> {
    seed: u64,
    point: Vec<F::Elem>,
    moved: Ideal<F>,
    rows: Mutex<HashMap<usize, Arc<(MonomialBasis, Vec<Vec<F::Elem>>)>>>,
}

impl<F: Field> Probe<F> {
    fn new(ideal: &Ideal<F>, seed: u64) -> Result<Self> {
        let change = LinearChange::random(ideal.field(), ideal.nvars(), seed);
        let gens = transform_generators(ideal, &change)?;
        let moved = Ideal::new(ideal.field(), ideal.nvars(), gens)?.with_budget(ideal.budget());
        Ok(Probe {
            seed,
            point: change.image_of_first_point(),
            moved,
            rows: Mutex::new(HashMap::new()),
        })
    }

    fn piece(&self, t: usize) -> Result<Arc<(MonomialBasis, Vec<Vec<F::Elem>>)>> {
        if let Some(p) = self.rows.lock().unwrap().get(&t) {
            return Ok(p.clone());
        }
        let p = Arc::new(graded_piece_rows(&self.moved, t)?);
        self.rows.lock().unwrap().insert(t, p.clone());
        Ok(p)
    }

    // f vanishes to order m at (1:0:...:0) iff every term has degree >= m in x1..xn,
    // so adim is the kernel of the projection onto the remaining columns
    fn adim(&self, t: usize, m: usize) -> Result<u64> {
        let piece = self.piece(t)?;
        let (basis, rows) = (&piece.0, &piece.1);
        let low: Vec<usize> = (0..basis.len())
            .filter(|&c| basis.monomials()[c].tail_degree() < m)
            .collect();
        let projected = rows.iter().map(|r| low.iter().map(|&c| r[c].clone()).collect());
        let r = rank(self.moved.field(), projected, low.len());
        Ok((rows.len() - r) as u64)
    }
}

/// `adim(X, t, m)` at general points, the minimum over independent trials.
#[derive(Clone, Debug, Serialize)]
pub struct AdimResult {
    pub value: u64,
    pub per_trial: Vec<u64>,
    pub seeds: Vec<u64>,
    pub trials_agreed: bool,
}

/// Reusable sampler of general points for repeated `adim` queries on one ideal.
pub struct AdimSampler<F: Field> {
    ideal: Ideal<F>,
    seed: u64,
    trials: usize,
    probes: Mutex<Vec<Arc<Probe<F>>>>,
}

impl<F: Field> AdimSampler<F> {
    pub fn new(ideal: &Ideal<F>, trials: usize, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::invalid("adim needs at least one trial"));
        }
        ideal.require_homogeneous("adim needs a homogeneous ideal")?;
        Ok(AdimSampler {
            ideal: ideal.clone(),
            seed,
            trials,
            probes: Mutex::new(Vec::new()),
        })
    }

    fn probes(&self, k: usize) -> Result<Vec<Arc<Probe<F>>>> {
        let mut guard = self.probes.lock().unwrap();
        while guard.len() < k {
            let s = seed::derive(self.seed, "adim-point", guard.len() as u64);
            guard.push(Arc::new(Probe::new(&self.ideal, s)?));
        }
        Ok(guard[..k].to_vec())
    }

    /// The general points used so far, in the original coordinates.
    pub fn points(&self) -> Vec<Vec<F::Elem>> {
        self.probes.lock().unwrap().iter().map(|p| p.point.clone()).collect()
    }

    pub fn adim(&self, t: usize, m: usize) -> Result<AdimResult> {
        let mut probes = self.probes(self.trials)?;
        let mut values = probes
            .par_iter()
            .map(|p| p.adim(t, m))
            .collect::<Result<Vec<_>>>()?;
        let mut agreed = values.iter().all(|&v| v == values[0]);
        if !agreed && probes.len() < self.trials + 1 {
            // one more sample before settling on the minimum
            probes = self.probes(self.trials + 1)?;
            values.push(probes.last().unwrap().adim(t, m)?);
            agreed = false;
        }
        Ok(AdimResult {
            value: *values.iter().min().unwrap(),
            per_trial: values,
            seeds: probes.iter().map(|p| p.seed).collect(),
            trials_agreed: agreed,
        })
    }
}

pub fn adim<F: Field>(ideal: &Ideal<F>, t: usize, m: usize, trials: usize, seed: u64) -> Result<AdimResult> {
    AdimSampler::new(ideal, trials, seed)?.adim(t, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimTriple {
    pub t: usize,
    pub m: usize,
    pub adim: u64,
    pub vdim: i64,
    pub edim: u64,
    pub trials_agreed: bool,
    pub seeds: Vec<u64>,
}

impl<F: Field> AdimSampler<F> {
    pub fn triple(&self, t: usize, m: usize) -> Result<DimTriple> {
        let a = self.adim(t, m)?;
        let (vdim, edim) = vdim_edim(&self.ideal, t, m)?;
        Ok(DimTriple {
            t,
            m,
            adim: a.value,
            vdim,
            edim,
            trials_agreed: a.trials_agreed,
            seeds: a.seeds,
        })
    }
}

pub fn dim_triple<F: Field>(ideal: &Ideal<F>, t: usize, m: usize, trials: usize, seed: u64) -> Result<DimTriple> {
    AdimSampler::new(ideal, trials, seed)?.triple(t, m)
}

/// `dim R_t = C(t + n, n)`.
pub(crate) fn ambient_dim(nvars: usize, t: usize) -> u64 {
    count_monomials(nvars, t) as u64
}
