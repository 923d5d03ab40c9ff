//! Verdicts, persistence tables, certificates and the lex-segment criterion.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::Field;
use crate::error::{Error, Result};
use crate::gin::{adim_via_gin, gin, is_lex_segment, GinResult};
use crate::groebner::Ideal;
use crate::seed;
use crate::unexpected::av::{av_gin_colon, DirectAv};
use crate::unexpected::dims::{AdimSampler, DimTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Unexpected,
    Expected,
    NoHypersurface,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnexpectednessVerdict {
    pub t: usize,
    pub m: usize,
    pub verdict: Verdict,
    pub adim: u64,
    pub vdim: i64,
    pub edim: u64,
    pub trials_agreed: bool,
    pub seeds: Vec<u64>,
    pub witness_hint: Option<String>,
}

impl UnexpectednessVerdict {
    pub fn from_triple(d: DimTriple) -> Self {
        let verdict = if d.adim == 0 {
            Verdict::NoHypersurface
        } else if d.adim > d.edim {
            Verdict::Unexpected
        } else {
            Verdict::Expected
        };
        let witness_hint = (verdict == Verdict::Unexpected && d.t == d.m)
            .then(|| "degree equals multiplicity: the hypersurfaces are cones with vertex P".to_string());
        UnexpectednessVerdict {
            t: d.t,
            m: d.m,
            verdict,
            adim: d.adim,
            vdim: d.vdim,
            edim: d.edim,
            trials_agreed: d.trials_agreed,
            seeds: d.seeds,
            witness_hint,
        }
    }
}

pub fn detect<F: Field>(ideal: &Ideal<F>, t: usize, m: usize, trials: usize, seed: u64) -> Result<UnexpectednessVerdict> {
    if t == 0 || m == 0 {
        return Err(Error::invalid("detect needs t, m >= 1"));
    }
    let triple = AdimSampler::new(ideal, trials, seed)?.triple(t, m)?;
    Ok(UnexpectednessVerdict::from_triple(triple))
}

/// Region of a persistence-table cell relative to `alpha`, the initial degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    /// `t < alpha`
    I,
    /// `t >= alpha`, `m >= alpha`
    II,
    /// `t >= alpha`, `m < alpha`
    III,
}

pub fn region(alpha: usize, t: usize, m: usize) -> Region {
    if t < alpha {
        Region::I
    } else if m >= alpha {
        Region::II
    } else {
        Region::III
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub t: usize,
    pub m: usize,
    /// `min(adim, AV_{X,t-m}(m))`.
    pub value: u64,
    pub adim: u64,
    pub av: u64,
    pub region: Region,
}

#[derive(Clone, Debug, Serialize)]
pub struct PersistenceTable {
    pub t_max: usize,
    pub m_max: usize,
    pub alpha: usize,
    pub cells: Vec<TableCell>,
    pub seeds: Vec<u64>,
}

impl PersistenceTable {
    pub fn get(&self, t: usize, m: usize) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.t == t && c.m == m)
    }

    pub fn nonzero(&self) -> Vec<(usize, usize)> {
        self.cells.iter().filter(|c| c.value > 0).map(|c| (c.t, c.m)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(|c| c.value == 0)
    }
}

/// `T_{t,m}` for `1 <= m <= t <= t_max`, `m <= m_max`, read from one gin;
/// every nonzero cell is recomputed at fresh general points.
pub fn persistence_table<F: Field>(
    ideal: &Ideal<F>,
    t_max: usize,
    m_max: usize,
    trials: usize,
    seed: u64,
) -> Result<PersistenceTable> {
    if t_max == 0 || m_max == 0 {
        return Err(Error::invalid("table bounds must be at least 1"));
    }
    let alpha = ideal
        .initial_degree()
        .ok_or_else(|| Error::invalid("the zero ideal has no initial degree"))?;
    let g = gin(ideal, trials.max(2), seed::derive(seed, "table-gin", 0), t_max)?;
    let mut cells = Vec::new();
    for t in 1..=t_max {
        for m in 1..=m_max.min(t) {
            let adim = adim_via_gin(&g, t, m)?;
            let av = av_gin_colon(&g, t - m, m)?;
            cells.push(TableCell {
                t,
                m,
                value: adim.min(av),
                adim,
                av,
                region: region(alpha, t, m),
            });
        }
    }
    let sampler = AdimSampler::new(ideal, trials, seed::derive(seed, "table-adim", 0))?;
    let direct = DirectAv::new(ideal, trials, seed::derive(seed, "table-av", 0))?;
    cells
        .par_iter()
        .filter(|c| c.value > 0)
        .try_for_each(|c| -> Result<()> {
            let a = sampler.adim(c.t, c.m)?.value;
            let v = direct.av(c.t - c.m, c.m)?;
            if v != c.av {
                return Err(Error::RouteMismatch {
                    j: c.t - c.m,
                    m: c.m,
                    direct: v as i64,
                    gin_colon: c.av as i64,
                });
            }
            if a != c.adim {
                return Err(Error::Genericity(format!(
                    "adim({}, {}) is {a} at sampled points but {} from the gin",
                    c.t, c.m, c.adim
                )));
            }
            Ok(())
        })?;
    let mut seeds = g.seeds_used.clone();
    seeds.extend(direct.seeds());
    Ok(PersistenceTable {
        t_max,
        m_max,
        alpha,
        cells,
        seeds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Certification {
    /// `AV_{X,0}(alpha) = 0`: no unexpected hypersurface for any `(t, m)`.
    Certificate { alpha: usize, av: u64, seeds: Vec<u64> },
    Refusal { alpha: usize, av: u64, seeds: Vec<u64> },
}

impl Certification {
    pub fn is_certificate(&self) -> bool {
        matches!(self, Certification::Certificate { .. })
    }
}

/// Computes `AV_{X,0}(alpha)` by both routes.
pub fn certify_no_unexpected<F: Field>(ideal: &Ideal<F>, trials: usize, seed: u64) -> Result<Certification> {
    let alpha = ideal
        .initial_degree()
        .ok_or_else(|| Error::invalid("the zero ideal has no initial degree"))?;
    let g = gin(ideal, trials.max(2), seed::derive(seed, "certify-gin", 0), alpha)?;
    let by_gin = av_gin_colon(&g, 0, alpha)?;
    let direct = DirectAv::new(ideal, trials, seed::derive(seed, "certify-direct", 0))?;
    let by_direct = direct.av(0, alpha)?;
    if by_gin != by_direct {
        return Err(Error::RouteMismatch {
            j: 0,
            m: alpha,
            direct: by_direct as i64,
            gin_colon: by_gin as i64,
        });
    }
    let mut seeds = g.seeds_used.clone();
    seeds.extend(direct.seeds());
    Ok(if by_gin == 0 {
        Certification::Certificate { alpha, av: 0, seeds }
    } else {
        Certification::Refusal {
            alpha,
            av: by_gin,
            seeds,
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LexCriterion {
    /// `[gin]_t` is a lex segment and `adim > 0`, so `AV_{X,t-m}(m) = 0`.
    AvZero,
    /// `adim = 0`: nothing to be unexpected about.
    NoHypersurface,
    Inconclusive,
}

pub fn lex_segment_criterion(g: &GinResult, t: usize, m: usize) -> Result<LexCriterion> {
    let adim = adim_via_gin(g, t, m)?;
    if adim == 0 {
        return Ok(LexCriterion::NoHypersurface);
    }
    Ok(if is_lex_segment(g.ideal(), t) {
        LexCriterion::AvZero
    } else {
        LexCriterion::Inconclusive
    })
}
