//! Experimental check that `AV_{X,1}` of a curve is an SI-sequence ending in degree `deg X - 6`.
//!
//! The outcome is evidence on one configuration and never a proof.

use serde::Serialize;

use crate::algebra::field::Field;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::sequences::{increasing_part, is_differentiable, is_si_sequence, is_unimodal, SiVerdict};
use crate::unexpected::av::{av_sequence, AvReport, Route};
use crate::unexpected::curves::degree_genus;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub degree: i64,
    pub av: AvReport,
    pub nonzero: bool,
    pub unimodal: bool,
    pub increasing_part_differentiable: bool,
    pub si: SiVerdict,
    /// Last degree with a nonzero value after shifting left by one.
    pub end_degree: Option<usize>,
    pub expected_end: i64,
    pub outcome: Outcome,
}

pub fn si_harness<F: Field>(curve: &Ideal<F>, m_max: usize, trials: usize, seed: u64) -> Result<HarnessReport> {
    let (degree, _) = degree_genus(curve, 6, 14)?;
    let av = av_sequence(curve, 1, m_max, Route::Both, trials, seed)?;
    let v = &av.values.values;
    let nonzero = v.iter().any(|&x| x > 0);
    let si = is_si_sequence(&av.values);
    // values[k] is AV(k + 1), which sits in degree k of the shifted sequence
    let end_degree = av.values.last_nonzero_index().map(|i| i - 1);
    let expected_end = degree - 6;
    let end_ok = end_degree.map(|d| d as i64 == expected_end);
    let outcome = match (si.verdict, end_ok) {
        (Some(true), Some(true)) => Outcome::Pass,
        (Some(false), _) | (_, Some(false)) => Outcome::Fail,
        _ => Outcome::Undetermined,
    };
    Ok(HarnessReport {
        degree,
        nonzero,
        unimodal: is_unimodal(v),
        increasing_part_differentiable: is_differentiable(increasing_part(v)),
        si,
        end_degree,
        expected_end,
        outcome,
        av,
    })
}
