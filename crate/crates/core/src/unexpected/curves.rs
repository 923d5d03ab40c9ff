//! `AV_{C,0}(t) = C(e-1, 2) - g` for a curve of degree `e` and arithmetic genus `g`,
//! and its additivity over unions with finite sets.

use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::monomial::binomial_i;
use crate::error::{Error, Result};
use crate::geometry::union;
use crate::groebner::Ideal;
use crate::hilbert::{curve_degree_genus, hilbert_function};
use crate::seed;
use crate::unexpected::av::DirectAv;
use crate::unexpected::av::{av_sequence, Route};

/// `C(e-1, 2) - g`.
pub fn curve_av_value(e: i64, g: i64) -> i64 {
    binomial_i(e - 1, 2) - g
}

/// Degree and genus read from `h(t) = e t - g + 1` on `[t0, t_max]`.
pub fn degree_genus<F: Field>(curve: &Ideal<F>, t0: usize, t_max: usize) -> Result<(i64, i64)> {
    let h = hilbert_function(curve, t_max)?;
    curve_degree_genus(&h, t0).ok_or_else(|| {
        Error::invalid(format!(
            "Hilbert function not linear on [{t0}, {t_max}]; increase the degree range"
        ))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveAvCheck {
    pub degree: i64,
    pub genus: i64,
    pub expected: i64,
    /// `(t, AV_{C,0}(t))`
    pub values: Vec<(usize, u64)>,
    pub matches: bool,
}

/// Compares `AV_{C,0}(t)` for `t` in `t_range` with the closed form, both AV routes cross-checked.
pub fn curve_av_formula_check<F: Field>(
    curve: &Ideal<F>,
    t_range: std::ops::RangeInclusive<usize>,
    trials: usize,
    seed: u64,
) -> Result<CurveAvCheck> {
    let (lo, hi) = (*t_range.start(), *t_range.end());
    let (e, g) = degree_genus(curve, lo, hi + 3)?;
    if lo < e as usize {
        return Err(Error::invalid(format!("the closed form holds for t >= e = {e}")));
    }
    let report = av_sequence(curve, 0, hi, Route::Both, trials, seed)?;
    let values: Vec<(usize, u64)> = (lo..=hi).map(|t| (t, report.at(t).unwrap())).collect();
    let expected = curve_av_value(e, g);
    Ok(CurveAvCheck {
        degree: e,
        genus: g,
        expected,
        matches: values.iter().all(|&(_, v)| v as i64 == expected),
        values,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct UnionShiftCheck {
    pub t: usize,
    pub degree: i64,
    pub genus: i64,
    /// `AV_{X ∪ C, 0}(t + e)`
    pub union_value: u64,
    /// `AV_{X, 0}(t)`
    pub points_value: u64,
    pub holds: bool,
}

/// `AV_{X ∪ C, 0}(t + e) = AV_{X,0}(t) + C(e-1, 2) - g` for a finite set `X` and a curve `C`.
pub fn union_shift_check<F: Field>(
    points: &Ideal<F>,
    curve: &Ideal<F>,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<UnionShiftCheck> {
    let (e, g) = degree_genus(curve, 4, 12)?;
    let both = union(&[points.clone(), curve.clone()])?;
    let big = DirectAv::new(&both, trials, seed::derive(seed, "union", 0))?.av(0, t + e as usize)?;
    let small = DirectAv::new(points, trials, seed::derive(seed, "points", 0))?.av(0, t)?;
    Ok(UnionShiftCheck {
        t,
        degree: e,
        genus: g,
        union_value: big,
        points_value: small,
        holds: big as i64 == small as i64 + curve_av_value(e, g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;
    use crate::geometry::Fixture;

    #[test]
    fn closed_form_values() {
        assert_eq!(curve_av_value(3, 0), 1);
        assert_eq!(curve_av_value(3, 1), 0);
        assert_eq!(curve_av_value(8, 7), 14);
    }

    #[test]
    fn twisted_and_plane_cubics() {
        let fp = PrimeField::default();
        let tc = Fixture::TwistedCubic.recipe(0).build(&fp).unwrap();
        let r = curve_av_formula_check(&tc, 3..=6, 2, 1).unwrap();
        assert!(r.matches && r.expected == 1);
        let pc = Fixture::PlaneCubic.recipe(0).build(&fp).unwrap();
        let r = curve_av_formula_check(&pc, 3..=5, 2, 1).unwrap();
        assert!(r.matches && r.expected == 0);
    }
}
