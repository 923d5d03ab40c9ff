//! The fixture catalog with stored expectations, and the checks that replay them.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::Field;
use crate::error::{Error, Result};
use crate::geometry::{Fixture, SchemeRecipe};
use crate::gin::gin;
use crate::groebner::{Budget, Ideal};
use crate::hilbert::{graded_dim_ideal, h_vector, hilbert_function, stabilized_hilbert_function};
use crate::report::{ExpectationOutcome, FixtureOutcome};
use crate::seed;
use crate::sequences::Tail;
use crate::unexpected::{
    av_sequence, certify_no_unexpected, ci_vdim_closed_form, curve_av_formula_check, degree_genus, detect,
    persistence_table, si_harness, sylvester_witness, union_shift_check, vdim_edim, Certification, Outcome, Route,
    Verdict,
};

/// One stored expectation about a fixture.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expectation {
    /// `h_{R/I}(0), h_{R/I}(1), ...`
    HilbertFunction { values: Vec<u64> },
    HVector { entries: Vec<u64> },
    /// `dim [I]_t` for the listed degrees.
    GradedDims { dims: Vec<(usize, u64)> },
    /// Length of a zero-dimensional scheme.
    Length { points: u64 },
    CurveDegreeGenus { degree: i64, genus: i64 },
    /// `[gin I]_{<= cap}` has exactly these minimal generators.
    GinThrough { cap: usize, generators: Vec<String> },
    /// Positive part of `AV_{X,j}` computed for `m <= m_max`, followed by `tail`.
    Av {
        j: usize,
        m_max: usize,
        positive_part: Vec<u64>,
        tail: Tail,
    },
    AvValue { j: usize, m: usize, value: u64 },
    Detect {
        t: usize,
        m: usize,
        verdict: Verdict,
        adim: Option<u64>,
        vdim: Option<i64>,
        edim: Option<u64>,
    },
    /// No unexpected cone of degree `t` for `1 <= t <= t_max`.
    NoUnexpectedCone { t_max: usize },
    /// `AV_{X,0}(alpha)`; zero means a certificate.
    Certify { alpha: usize, av: u64 },
    TableZero { t_max: usize, m_max: usize },
    /// `AV_{C,0}(t) = value` for `t_from <= t <= t_to`.
    CurveAv { t_from: usize, t_to: usize, value: i64 },
    /// `AV_{X ∪ C, 0}(t + deg C) = AV_{X,0}(t) + C(e-1, 2) - g` with the union value pinned.
    UnionWithCurve { curve: Fixture, t: usize, union_value: u64 },
    /// The SI-sequence experiment passes.
    SiHarness { m_max: usize },
    /// A hypersurface from two general forms of degrees `a`, `b` in the ambient ring.
    CiWitness { a: usize, b: usize, j: usize },
    /// `vdim` from the ideal equals the complete-intersection closed form.
    CiVdim { a: usize, b: usize, t: usize, m: usize, value: i64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub fixture: String,
    pub description: String,
    pub deep: bool,
    pub recipe: SchemeRecipe,
    pub expectations: Vec<Expectation>,
}

fn gens(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

const THIRTEEN_POINT_HF: [u64; 7] = [1, 3, 6, 10, 12, 13, 13];
const EX74_H_VECTOR: [u64; 7] = [1, 3, 6, 6, 3, 3, 2];

fn g1() -> Vec<String> {
    gens(&["x^4", "x^3*y", "x^3*z", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^3", "x*y^5"])
}

fn detect_exp(t: usize, m: usize, verdict: Verdict, adim: Option<u64>, edim: Option<u64>) -> Expectation {
    Expectation::Detect {
        t,
        m,
        verdict,
        adim,
        vdim: None,
        edim,
    }
}

fn av_exp(j: usize, m_max: usize, positive_part: &[u64], tail: Tail) -> Expectation {
    Expectation::Av {
        j,
        m_max,
        positive_part: positive_part.to_vec(),
        tail,
    }
}

/// Stored expectations for a fixture; empty for fixtures without any.
pub fn expectations(f: Fixture) -> Vec<Expectation> {
    use Expectation as E;
    match f {
        Fixture::X1 | Fixture::X2 => vec![
            E::HilbertFunction {
                values: THIRTEEN_POINT_HF.to_vec(),
            },
            E::GradedDims { dims: vec![(6, 15)] },
            E::GinThrough { cap: 6, generators: g1() },
            E::Detect {
                t: 6,
                m: 5,
                verdict: Verdict::Unexpected,
                adim: Some(1),
                vdim: Some(0),
                edim: Some(0),
            },
        ],
        Fixture::Ci34PlusPoint => vec![
            E::HilbertFunction {
                values: THIRTEEN_POINT_HF.to_vec(),
            },
            E::GinThrough {
                cap: 13,
                generators: gens(&[
                    "x^4", "x^3*y", "x^3*z", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^3", "x^2*z^4", "x*y^6", "x*y^5*z",
                    "x*y^4*z^3", "x*y^3*z^5", "x*y^2*z^7", "x*y*z^9", "x*z^11", "y^13",
                ]),
            },
            detect_exp(6, 5, Verdict::NoHypersurface, Some(0), Some(0)),
        ],
        Fixture::RootAn(2) => vec![E::Certify { alpha: 3, av: 2 }],
        Fixture::RootAn(_) => vec![E::Certify { alpha: 3, av: 0 }],
        Fixture::RootYn(_) => vec![detect_exp(3, 3, Verdict::Unexpected, None, None)],
        Fixture::TwistedCubic => vec![
            E::CurveDegreeGenus { degree: 3, genus: 0 },
            E::CurveAv {
                t_from: 3,
                t_to: 6,
                value: 1,
            },
            detect_exp(3, 3, Verdict::Unexpected, Some(1), Some(0)),
        ],
        Fixture::B3DualPoints => vec![
            E::Length { points: 9 },
            detect_exp(4, 3, Verdict::Unexpected, Some(1), Some(0)),
        ],
        Fixture::ThreeDisjointLines => vec![E::CurveDegreeGenus { degree: 3, genus: -2 }],
        Fixture::Ex74TwistedCubic => vec![
            E::HVector {
                entries: EX74_H_VECTOR.to_vec(),
            },
            E::GradedDims {
                dims: vec![(3, 4), (4, 16), (5, 34)],
            },
            E::NoUnexpectedCone { t_max: 6 },
        ],
        Fixture::Ex74ThreeLines => vec![
            E::HVector {
                entries: EX74_H_VECTOR.to_vec(),
            },
            detect_exp(5, 5, Verdict::Unexpected, Some(2), Some(0)),
        ],
        Fixture::Ex74PlaneCubic => vec![
            E::HVector {
                entries: EX74_H_VECTOR.to_vec(),
            },
            E::AvValue { j: 0, m: 5, value: 1 },
            detect_exp(5, 5, Verdict::NoHypersurface, Some(0), Some(0)),
        ],
        Fixture::Ex74PlaneCubicLines => vec![
            E::HVector {
                entries: EX74_H_VECTOR.to_vec(),
            },
            detect_exp(5, 5, Verdict::Unexpected, None, Some(0)),
        ],
        Fixture::Ex74GeneralSeven => vec![
            E::AvValue { j: 0, m: 2, value: 1 },
            detect_exp(2, 2, Verdict::NoHypersurface, Some(0), None),
            E::UnionWithCurve {
                curve: Fixture::PlaneCubic,
                t: 2,
                union_value: 1,
            },
        ],
        Fixture::PlaneCubic => vec![
            E::CurveDegreeGenus { degree: 3, genus: 1 },
            E::CurveAv {
                t_from: 3,
                t_to: 5,
                value: 0,
            },
        ],
        Fixture::Linked87 => vec![
            E::CurveDegreeGenus { degree: 8, genus: 7 },
            av_exp(1, 6, &[1, 2, 1], Tail::Zero),
            av_exp(0, 9, &[1, 4, 8, 11, 13, 14], Tail::Constant(14)),
            av_exp(2, 6, &[], Tail::Zero),
            E::CurveAv {
                t_from: 8,
                t_to: 9,
                value: 14,
            },
            E::SiHarness { m_max: 8 },
        ],
        Fixture::Linked74 => vec![
            E::CurveDegreeGenus { degree: 7, genus: 4 },
            av_exp(1, 6, &[1, 2], Tail::Zero),
        ],
        Fixture::Linked1528 => vec![
            E::CurveDegreeGenus { degree: 15, genus: 28 },
            av_exp(2, 8, &[1, 2, 2], Tail::Zero),
        ],
        Fixture::Linked87PlusPoint => vec![av_exp(1, 6, &[1, 3, 2], Tail::Zero)],
        Fixture::Ci444Points => vec![E::Length { points: 64 }, av_exp(1, 8, &[1, 4, 7, 8, 5], Tail::Zero)],
        Fixture::ConeB3 => vec![av_exp(1, 7, &[1, 3, 4], Tail::Constant(4))],
        Fixture::ConeGeneral9 => vec![av_exp(1, 7, &[1, 3], Tail::Constant(3))],
        Fixture::Ci33P3 => vec![
            E::CiVdim {
                a: 3,
                b: 3,
                t: 5,
                m: 4,
                value: 0,
            },
            E::CiWitness { a: 3, b: 3, j: 1 },
            detect_exp(5, 4, Verdict::Unexpected, None, Some(0)),
        ],
        Fixture::Ci33P4 => vec![
            E::HilbertFunction {
                values: vec![1, 5, 15, 33, 60, 96, 141],
            },
            E::CiVdim {
                a: 3,
                b: 3,
                t: 5,
                m: 4,
                value: -5,
            },
            E::CiWitness { a: 3, b: 3, j: 1 },
            detect_exp(5, 4, Verdict::Unexpected, Some(1), Some(0)),
        ],
        Fixture::DegeneratePoints => vec![E::TableZero { t_max: 6, m_max: 6 }],
        Fixture::LinkedSurfaceP4 => vec![av_exp(1, 6, &[1, 3, 4], Tail::Constant(4))],
        Fixture::Ci44TriplePoint => vec![av_exp(
            1,
            14,
            &[1, 4, 8, 12, 15, 16, 15, 12, 8, 4, 2],
            Tail::Constant(2),
        )],
    }
}

/// Fixtures replayed by default.
pub fn default_fixtures() -> Vec<Fixture> {
    let mut out = vec![Fixture::X1, Fixture::X2, Fixture::Ci34PlusPoint];
    out.extend((2..=6).map(Fixture::RootAn));
    out.push(Fixture::RootYn(3));
    out.extend(
        Fixture::ALL_DEFAULT
            .iter()
            .copied()
            .filter(|f| !matches!(f, Fixture::X1 | Fixture::X2 | Fixture::Ci34PlusPoint | Fixture::RootAn(_) | Fixture::RootYn(_))),
    );
    out
}

/// Extra fixtures replayed with `--deep`.
pub fn deep_fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = Fixture::DEEP_ONLY.to_vec();
    out.extend((7..=12).map(Fixture::RootAn));
    out.extend((4..=12).map(Fixture::RootYn));
    out
}

pub fn manifest_entry(f: Fixture, seed: u64) -> ManifestEntry {
    ManifestEntry {
        fixture: f.name(),
        description: f.description(),
        deep: deep_fixtures().contains(&f),
        recipe: f.recipe(seed),
        expectations: expectations(f),
    }
}

/// The whole catalog, default fixtures first.
pub fn fixtures_manifest(seed: u64) -> Vec<ManifestEntry> {
    default_fixtures()
        .into_iter()
        .chain(deep_fixtures())
        .map(|f| manifest_entry(f, seed))
        .collect()
}

/// Settings shared by every check of a replay.
#[derive(Clone, Copy, Debug)]
pub struct CheckSettings {
    /// Seed of the random constructions inside the recipes.
    pub construction_seed: u64,
    /// Seed of the general points and coordinate changes.
    pub seed: u64,
    pub trials: usize,
    pub budget: Budget,
}

fn outcome(check: String, passed: bool, detail: String) -> ExpectationOutcome {
    ExpectationOutcome { check, passed, detail }
}

fn describe(e: &Expectation) -> String {
    match e {
        Expectation::HilbertFunction { values } => format!("hilbert function {values:?}"),
        Expectation::HVector { entries } => format!("h-vector {entries:?}"),
        Expectation::GradedDims { dims } => format!("dim [I]_t {dims:?}"),
        Expectation::Length { points } => format!("length {points}"),
        Expectation::CurveDegreeGenus { degree, genus } => format!("degree {degree}, genus {genus}"),
        Expectation::GinThrough { cap, .. } => format!("gin through degree {cap}"),
        Expectation::Av {
            j,
            positive_part,
            tail,
            ..
        } => format!("AV_{{X,{j}}} positive part {positive_part:?} then {tail:?}"),
        Expectation::AvValue { j, m, value } => format!("AV_{{X,{j}}}({m}) = {value}"),
        Expectation::Detect { t, m, verdict, .. } => format!("detect({t}, {m}) = {verdict:?}"),
        Expectation::NoUnexpectedCone { t_max } => format!("no unexpected cone for t <= {t_max}"),
        Expectation::Certify { alpha, av } => format!("AV_{{X,0}}({alpha}) = {av}"),
        Expectation::TableZero { t_max, m_max } => format!("persistence table zero for t <= {t_max}, m <= {m_max}"),
        Expectation::CurveAv { t_from, t_to, value } => format!("AV_{{C,0}}(t) = {value} for {t_from} <= t <= {t_to}"),
        Expectation::UnionWithCurve { curve, t, union_value } => {
            format!("union with {} shifts AV_{{X,0}}({t}) to {union_value}", curve.name())
        }
        Expectation::SiHarness { m_max } => format!("SI experiment with m <= {m_max}"),
        Expectation::CiWitness { a, b, j } => format!("witness for CI({a},{b}) with j = {j}"),
        Expectation::CiVdim { a, b, t, m, value } => format!("vdim of CI({a},{b}) at ({t},{m}) = {value}"),
    }
}

/// Checks one expectation; `Err` only for computations that could not run.
pub fn check_expectation<F: Field>(
    field: &F,
    fixture: Fixture,
    ideal: &Ideal<F>,
    e: &Expectation,
    s: &CheckSettings,
) -> Result<ExpectationOutcome> {
    let name = describe(e);
    let seed = s.seed;
    let trials = s.trials;
    let res = match e {
        Expectation::HilbertFunction { values } => {
            let h = hilbert_function(ideal, values.len() - 1)?;
            outcome(name, h.values == *values, format!("{:?}", h.values))
        }
        Expectation::HVector { entries } => {
            let h = h_vector(ideal)?;
            outcome(name, h.entries == *entries, format!("{:?}", h.entries))
        }
        Expectation::GradedDims { dims } => {
            let got = dims
                .iter()
                .map(|&(t, _)| graded_dim_ideal(ideal, t).map(|d| (t, d)))
                .collect::<Result<Vec<_>>>()?;
            outcome(name, got == *dims, format!("{got:?}"))
        }
        Expectation::Length { points } => {
            let h = stabilized_hilbert_function(ideal, 64)?;
            let v = h.stable_value().unwrap_or(0);
            outcome(name, v == *points, format!("stable value {v}"))
        }
        Expectation::CurveDegreeGenus { degree, genus } => {
            let (d, g) = degree_genus(ideal, 8, 20)?;
            outcome(name, (d, g) == (*degree, *genus), format!("degree {d}, genus {g}"))
        }
        Expectation::GinThrough { cap, generators } => {
            let g = gin(ideal, trials.max(2), seed::derive(seed, "gin", 0), *cap)?;
            let got = g.ideal().generator_strings();
            outcome(name, got == *generators, got.join(", "))
        }
        Expectation::Av {
            j,
            m_max,
            positive_part,
            tail,
        } => {
            let r = av_sequence(ideal, *j, *m_max, Route::Both, trials, seed)?;
            let pos = &r.positive_support.values;
            let ok = match tail {
                Tail::Constant(c) => {
                    r.values.tail == Tail::Constant(*c)
                        && pos.len() >= positive_part.len()
                        && pos[..positive_part.len()] == positive_part[..]
                        && pos[positive_part.len()..].iter().all(|v| v == c)
                }
                _ => r.values.tail == *tail && pos == positive_part,
            };
            outcome(
                name,
                ok && r.o_sequence_check,
                format!("values {:?}, tail {:?}, O-sequence {}", r.values.values, r.values.tail, r.o_sequence_check),
            )
        }
        Expectation::AvValue { j, m, value } => {
            let r = av_sequence(ideal, *j, *m, Route::Both, trials, seed)?;
            let v = r.at(*m).unwrap();
            outcome(name, v == *value, format!("{v}"))
        }
        Expectation::Detect {
            t,
            m,
            verdict,
            adim,
            vdim,
            edim,
        } => {
            let v = detect(ideal, *t, *m, trials, seed)?;
            let ok = v.verdict == *verdict
                && adim.is_none_or(|a| a == v.adim)
                && vdim.is_none_or(|a| a == v.vdim)
                && edim.is_none_or(|a| a == v.edim);
            outcome(
                name,
                ok,
                format!("{:?}: adim {}, vdim {}, edim {}", v.verdict, v.adim, v.vdim, v.edim),
            )
        }
        Expectation::NoUnexpectedCone { t_max } => {
            let mut bad = Vec::new();
            for t in 1..=*t_max {
                if detect(ideal, t, t, trials, seed)?.verdict == Verdict::Unexpected {
                    bad.push(t);
                }
            }
            outcome(name, bad.is_empty(), format!("unexpected cones in degrees {bad:?}"))
        }
        Expectation::Certify { alpha, av } => {
            let c = certify_no_unexpected(ideal, trials, seed)?;
            let (a, v) = match &c {
                Certification::Certificate { alpha, av, .. } | Certification::Refusal { alpha, av, .. } => (*alpha, *av),
            };
            outcome(name, (a, v) == (*alpha, *av), format!("alpha {a}, AV {v}"))
        }
        Expectation::TableZero { t_max, m_max } => {
            let tab = persistence_table(ideal, *t_max, *m_max, trials, seed)?;
            outcome(name, tab.is_zero(), format!("nonzero cells {:?}", tab.nonzero()))
        }
        Expectation::CurveAv { t_from, t_to, value } => {
            let r = curve_av_formula_check(ideal, *t_from..=*t_to, trials, seed)?;
            outcome(
                name,
                r.matches && r.expected == *value,
                format!("closed form {}, computed {:?}", r.expected, r.values),
            )
        }
        Expectation::UnionWithCurve { curve, t, union_value } => {
            let c = curve.recipe(s.construction_seed).build(field)?.with_budget(s.budget);
            let r = union_shift_check(ideal, &c, *t, trials, seed)?;
            outcome(
                name,
                r.holds && r.union_value == *union_value,
                format!("union {}, points {}, holds {}", r.union_value, r.points_value, r.holds),
            )
        }
        Expectation::SiHarness { m_max } => {
            let r = si_harness(ideal, *m_max, trials, seed)?;
            let ok = r.outcome == Outcome::Pass && r.unimodal && r.increasing_part_differentiable;
            outcome(
                name,
                ok,
                format!("{:?}, positive part {:?}, {}", r.outcome, r.av.positive_support.values, r.si.reason),
            )
        }
        Expectation::CiWitness { a, b, j } => {
            let w = sylvester_witness(field, *a, *b, *j, fixture.nvars(), seed)?;
            outcome(name, true, format!("t = {}, m = {}, det degree {:?}", w.t, w.m, w.matrix_det.degree()))
        }
        Expectation::CiVdim { a, b, t, m, value } => {
            let (v, _) = vdim_edim(ideal, *t, *m)?;
            let closed = ci_vdim_closed_form(*a, *b, fixture.nvars() - 1, *t, *m);
            outcome(name, v == closed && v == *value, format!("from ideal {v}, closed form {closed}"))
        }
    };
    Ok(res)
}

/// Builds a fixture and replays all its expectations.
pub fn run_fixture<F: Field>(field: &F, fixture: Fixture, s: &CheckSettings) -> FixtureOutcome {
    let name = fixture.name();
    let fs = CheckSettings {
        seed: seed::derive(s.seed, &name, 0),
        ..*s
    };
    let built = fixture
        .recipe(s.construction_seed)
        .build(field)
        .map(|i| i.with_budget(s.budget));
    let ideal = match built {
        Ok(i) => i,
        Err(e) => {
            return FixtureOutcome {
                fixture: name,
                passed: false,
                error: Some(e.to_string()),
                checks: vec![],
            }
        }
    };
    let mut checks = Vec::new();
    let mut error = None;
    for e in expectations(fixture) {
        match check_expectation(field, fixture, &ideal, &e, &fs) {
            Ok(o) => checks.push(o),
            Err(err) => {
                error = Some(format!("{}: {err}", describe(&e)));
                break;
            }
        }
    }
    FixtureOutcome {
        fixture: name,
        passed: error.is_none() && checks.iter().all(|c| c.passed),
        error,
        checks,
    }
}

/// Replays the given fixtures in parallel; results come back in input order.
pub fn run_fixtures<F: Field>(field: &F, fixtures: &[Fixture], s: &CheckSettings) -> Vec<FixtureOutcome> {
    fixtures.par_iter().map(|&f| run_fixture(field, f, s)).collect()
}

/// Resolves `name` to fixtures: `all` or a single fixture name.
pub fn select_fixtures(name: &str, n: Option<usize>, deep: bool) -> Result<Vec<Fixture>> {
    if name == "all" {
        let mut v = default_fixtures();
        if deep {
            v.extend(deep_fixtures());
        }
        return Ok(v);
    }
    let f = Fixture::parse(name, n)?;
    if deep_fixtures().contains(&f) && !deep && f.is_deep_only() {
        return Err(Error::invalid(format!("{} runs only with --deep", f.name())));
    }
    Ok(vec![f])
}
