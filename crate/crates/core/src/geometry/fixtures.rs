//! Deterministic recipes for schemes and the named configurations built from them.

use serde::{Deserialize, Serialize};

use crate::algebra::field::Field;
use crate::algebra::parse::parse_polynomial;
use crate::error::{Error, Result};
use crate::geometry::constructions::{
    complete_intersection, cone_over, distraction, linked_curve, points_on_variety, random_points, union, Curve,
};
use crate::geometry::points::{fat_point_ideal, points_ideal, ProjPoint};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::seed;

/// A curve with a stored way of sampling points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "curve", rename_all = "snake_case")]
pub enum CurveKind {
    TwistedCubic,
    /// Plane cubic in `x3 = 0`.
    PlaneCubic,
    /// Line through two integer points.
    Line { a: Vec<i64>, b: Vec<i64> },
    /// Line through two random points.
    GeneralLine { nvars: usize, seed: u64 },
}

impl CurveKind {
    pub fn build<F: Field>(&self, field: &F) -> Result<Curve<F>> {
        match self {
            CurveKind::TwistedCubic => Ok(Curve::twisted_cubic(field)),
            CurveKind::PlaneCubic => Ok(Curve::plane_cubic(field)),
            CurveKind::Line { a, b } => Curve::line(field, &ProjPoint::from_i64(field, a)?, &ProjPoint::from_i64(field, b)?),
            CurveKind::GeneralLine { nvars, seed } => Curve::random_line(field, *nvars, *seed),
        }
    }
}

/// Where a batch of points comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum PointSource {
    Explicit { points: Vec<Vec<i64>> },
    General { nvars: usize, count: usize, seed: u64 },
    /// General points of the hyperplane `x_{nvars-1} = 0`.
    InHyperplane { nvars: usize, count: usize, seed: u64 },
    OnCurve { curve: CurveKind, count: usize, seed: u64 },
}

impl PointSource {
    pub fn points<F: Field>(&self, field: &F) -> Result<Vec<ProjPoint<F>>> {
        match self {
            PointSource::Explicit { points } => points.iter().map(|p| ProjPoint::from_i64(field, p)).collect(),
            PointSource::General { nvars, count, seed } => Ok(random_points(field, *nvars, *count, *seed)),
            PointSource::InHyperplane { nvars, count, seed } => random_points(field, nvars - 1, *count, *seed)
                .into_iter()
                .map(|p| {
                    let mut c = p.coords().to_vec();
                    c.push(field.zero());
                    ProjPoint::new(field, c)
                })
                .collect(),
            PointSource::OnCurve { curve, count, seed } => points_on_variety(field, &curve.build(field)?, *count, *seed),
        }
    }
}

/// How to build the point of a fat point or the vertex of a cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "point", rename_all = "snake_case")]
pub enum PointSpec {
    Explicit { coords: Vec<i64> },
    General { nvars: usize, seed: u64 },
}

impl PointSpec {
    pub fn point<F: Field>(&self, field: &F) -> Result<ProjPoint<F>> {
        match self {
            PointSpec::Explicit { coords } => ProjPoint::from_i64(field, coords),
            PointSpec::General { nvars, seed } => Ok(ProjPoint::random(field, *nvars, *seed)),
        }
    }
}

/// A scheme described by how to build it; `build` is a pure function of the recipe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchemeRecipe {
    /// Reduced points from several sources, which must not overlap.
    PointSet { sources: Vec<PointSource> },
    FatPoint { point: PointSpec, m: usize },
    Union { parts: Vec<SchemeRecipe> },
    CompleteIntersection {
        degrees: Vec<usize>,
        nvars: usize,
        seed: u64,
        through: Option<Box<SchemeRecipe>>,
    },
    /// Residual of `inside` in a complete intersection of forms of `degrees` containing it.
    Linked {
        degrees: Vec<usize>,
        seed: u64,
        inside: Box<SchemeRecipe>,
    },
    /// Cone in `P^n` over a scheme of the hyperplane `x_n = 0`.
    Cone { base: Box<SchemeRecipe>, vertex: PointSpec },
    /// Distraction of an artinian monomial ideal given by exponent vectors.
    Distraction { nvars: usize, generators: Vec<Vec<u32>> },
    /// Saturated ideal given by generators.
    Equations { nvars: usize, generators: Vec<String> },
    Curve { curve: CurveKind },
    NamedFixture { fixture: Fixture, seed: u64 },
}

impl SchemeRecipe {
    pub fn build<F: Field>(&self, field: &F) -> Result<Ideal<F>> {
        match self {
            SchemeRecipe::PointSet { sources } => {
                let mut pts = Vec::new();
                for s in sources {
                    pts.extend(s.points(field)?);
                }
                points_ideal(field, &pts)
            }
            SchemeRecipe::FatPoint { point, m } => fat_point_ideal(field, &point.point(field)?, *m),
            SchemeRecipe::Union { parts } => {
                let built = parts.iter().map(|p| p.build(field)).collect::<Result<Vec<_>>>()?;
                union(&built)
            }
            SchemeRecipe::CompleteIntersection {
                degrees,
                nvars,
                seed,
                through,
            } => {
                let through = through.as_ref().map(|r| r.build(field)).transpose()?;
                complete_intersection(field, degrees, *nvars, *seed, through.as_ref())
            }
            SchemeRecipe::Linked { degrees, seed, inside } => {
                let inside = inside.build(field)?;
                let ci = complete_intersection(field, degrees, inside.nvars(), *seed, Some(&inside))?;
                linked_curve(&ci, &inside)
            }
            SchemeRecipe::Cone { base, vertex } => cone_over(&base.build(field)?, &vertex.point(field)?),
            SchemeRecipe::Distraction { nvars, generators } => {
                let m = MonomialIdeal::new(
                    *nvars,
                    generators.iter().map(|e| crate::algebra::monomial::Monomial::from_exps(e)),
                );
                Ok(distraction(field, &m)?.0)
            }
            SchemeRecipe::Equations { nvars, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| parse_polynomial(field, g, *nvars))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Ideal::new(field, *nvars, gens)?.mark_saturated())
            }
            SchemeRecipe::Curve { curve } => Ok(curve.build(field)?.ideal),
            SchemeRecipe::NamedFixture { fixture, seed } => fixture.recipe(*seed).build(field),
        }
    }

    /// The explicit points of a point-set recipe, if it is one.
    pub fn explicit_points<F: Field>(&self, field: &F) -> Option<Result<Vec<ProjPoint<F>>>> {
        match self {
            SchemeRecipe::PointSet { sources } => Some(
                sources
                    .iter()
                    .map(|s| s.points(field))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| v.concat()),
            ),
            SchemeRecipe::NamedFixture { fixture, seed } => fixture.recipe(*seed).explicit_points(field),
            _ => None,
        }
    }
}

/// The named configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fixture {
    X1,
    X2,
    Ci34PlusPoint,
    RootAn(usize),
    RootYn(usize),
    TwistedCubic,
    B3DualPoints,
    ThreeDisjointLines,
    Ex74TwistedCubic,
    Ex74ThreeLines,
    Ex74PlaneCubic,
    Ex74PlaneCubicLines,
    /// Seven general points of `P^3`, the extra points of [`Fixture::Ex74PlaneCubic`].
    Ex74GeneralSeven,
    PlaneCubic,
    Linked87,
    Linked74,
    Linked1528,
    Linked87PlusPoint,
    Ci444Points,
    ConeB3,
    ConeGeneral9,
    Ci33P3,
    Ci33P4,
    DegeneratePoints,
    LinkedSurfaceP4,
    Ci44TriplePoint,
}

const X1_POINTS: [[i64; 3]; 13] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
    [1, 0, 1],
    [-1, 1, 0],
    [0, -1, 1],
    [-1, 0, 1],
    [1, 1, 1],
    [-1, 1, 1],
    [-1, 1, -1],
    [1, 1, -1],
];

const X2_EXTRA: [[i64; 3]; 4] = [[2, 1, 1], [-2, 1, 1], [-2, 1, -1], [2, 1, -1]];

const B3_POINTS: [[i64; 3]; 9] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
];

fn explicit(points: impl IntoIterator<Item = Vec<i64>>) -> PointSource {
    PointSource::Explicit {
        points: points.into_iter().collect(),
    }
}

fn eqs(nvars: usize, gens: &[&str]) -> SchemeRecipe {
    SchemeRecipe::Equations {
        nvars,
        generators: gens.iter().map(|s| s.to_string()).collect(),
    }
}

/// `e_i - e_j` (or `e_i + e_j`) for `i < j`, plus the coordinate points of `P^n`.
fn root_points(n: usize, sign: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut v = vec![0; n + 1];
            v[i] = 1;
            v[j] = sign;
            out.push(v);
        }
    }
    for i in 0..=n {
        let mut v = vec![0; n + 1];
        v[i] = 1;
        out.push(v);
    }
    out
}

// the three skew lines V(x0,x1), V(x2,x3), V(x0-x2,x1-x3)
fn skew_line(k: usize) -> CurveKind {
    let (a, b) = match k {
        0 => (vec![0, 0, 1, 0], vec![0, 0, 0, 1]),
        1 => (vec![1, 0, 0, 0], vec![0, 1, 0, 0]),
        _ => (vec![1, 0, 1, 0], vec![0, 1, 0, 1]),
    };
    CurveKind::Line { a, b }
}

fn line_x0x1() -> SchemeRecipe {
    eqs(4, &["x0", "x1"])
}

impl Fixture {
    pub const ALL_DEFAULT: [Fixture; 24] = [
        Fixture::X1,
        Fixture::X2,
        Fixture::Ci34PlusPoint,
        Fixture::RootAn(3),
        Fixture::RootYn(3),
        Fixture::TwistedCubic,
        Fixture::B3DualPoints,
        Fixture::ThreeDisjointLines,
        Fixture::Ex74TwistedCubic,
        Fixture::Ex74ThreeLines,
        Fixture::Ex74PlaneCubic,
        Fixture::Ex74PlaneCubicLines,
        Fixture::Ex74GeneralSeven,
        Fixture::PlaneCubic,
        Fixture::Linked87,
        Fixture::Linked74,
        Fixture::Linked1528,
        Fixture::Linked87PlusPoint,
        Fixture::Ci444Points,
        Fixture::ConeB3,
        Fixture::ConeGeneral9,
        Fixture::Ci33P3,
        Fixture::Ci33P4,
        Fixture::DegeneratePoints,
    ];

    pub const DEEP_ONLY: [Fixture; 2] = [Fixture::LinkedSurfaceP4, Fixture::Ci44TriplePoint];

    pub fn name(&self) -> String {
        match self {
            Fixture::X1 => "X1".into(),
            Fixture::X2 => "X2".into(),
            Fixture::Ci34PlusPoint => "ci34_plus_point".into(),
            Fixture::RootAn(n) => format!("root_An:{n}"),
            Fixture::RootYn(n) => format!("root_Yn:{n}"),
            Fixture::TwistedCubic => "twisted_cubic".into(),
            Fixture::B3DualPoints => "b3_dual_points".into(),
            Fixture::ThreeDisjointLines => "three_disjoint_lines".into(),
            Fixture::Ex74TwistedCubic => "ex74_twisted_cubic".into(),
            Fixture::Ex74ThreeLines => "ex74_three_lines".into(),
            Fixture::Ex74PlaneCubic => "ex74_plane_cubic".into(),
            Fixture::Ex74PlaneCubicLines => "ex74_plane_cubic_lines".into(),
            Fixture::Ex74GeneralSeven => "ex74_general_seven".into(),
            Fixture::PlaneCubic => "plane_cubic".into(),
            Fixture::Linked87 => "linked_8_7".into(),
            Fixture::Linked74 => "linked_7_4".into(),
            Fixture::Linked1528 => "linked_15_28".into(),
            Fixture::Linked87PlusPoint => "linked_8_7_plus_point".into(),
            Fixture::Ci444Points => "ci_444_points".into(),
            Fixture::ConeB3 => "cone_b3".into(),
            Fixture::ConeGeneral9 => "cone_general9".into(),
            Fixture::Ci33P3 => "ci33_p3".into(),
            Fixture::Ci33P4 => "ci33_p4".into(),
            Fixture::DegeneratePoints => "degenerate_points".into(),
            Fixture::LinkedSurfaceP4 => "linked_surface_p4".into(),
            Fixture::Ci44TriplePoint => "ci44_triple_point".into(),
        }
    }

    /// Parses a name as printed by [`Fixture::name`]; `n` fills in the root-system rank
    /// when the name carries none.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Fixture> {
        let (base, param) = match name.split_once(':') {
            Some((b, p)) => (
                b,
                Some(p.parse::<usize>().map_err(|_| Error::invalid(format!("bad fixture parameter `{p}`")))?),
            ),
            None => (name, n),
        };
        let rank = || {
            let r = param.unwrap_or(3);
            if r < 2 {
                Err(Error::invalid("root-system fixtures need n >= 2"))
            } else {
                Ok(r)
            }
        };
        let all = Fixture::ALL_DEFAULT.iter().chain(Fixture::DEEP_ONLY.iter());
        match base {
            "root_An" => Ok(Fixture::RootAn(rank()?)),
            "root_Yn" => Ok(Fixture::RootYn(rank()?)),
            _ => all
                .copied()
                .find(|f| f.name().eq_ignore_ascii_case(base))
                .ok_or_else(|| Error::invalid(format!("unknown fixture `{name}`"))),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Fixture::X1 | Fixture::X2 | Fixture::Ci34PlusPoint | Fixture::B3DualPoints => 3,
            Fixture::RootAn(n) | Fixture::RootYn(n) => n + 1,
            Fixture::Ci33P4 | Fixture::LinkedSurfaceP4 => 5,
            _ => 4,
        }
    }

    pub fn is_deep_only(&self) -> bool {
        Fixture::DEEP_ONLY.contains(self)
    }

    pub fn recipe(&self, seed: u64) -> SchemeRecipe {
        let s = |label: &str| seed::derive(seed, label, 0);
        let general_point = |nvars: usize, label: &str| PointSpec::General { nvars, seed: s(label) };
        let linked = |degrees: Vec<usize>, inside: SchemeRecipe| SchemeRecipe::Linked {
            degrees,
            seed: s("link"),
            inside: Box::new(inside),
        };
        match *self {
            Fixture::X1 => SchemeRecipe::PointSet {
                sources: vec![explicit(X1_POINTS.iter().map(|p| p.to_vec()))],
            },
            Fixture::X2 => SchemeRecipe::PointSet {
                sources: vec![explicit(
                    X1_POINTS[..9].iter().chain(X2_EXTRA.iter()).map(|p| p.to_vec()),
                )],
            },
            Fixture::Ci34PlusPoint => SchemeRecipe::Union {
                parts: vec![
                    SchemeRecipe::CompleteIntersection {
                        degrees: vec![3, 4],
                        nvars: 3,
                        seed: s("ci"),
                        through: None,
                    },
                    SchemeRecipe::PointSet {
                        sources: vec![PointSource::General {
                            nvars: 3,
                            count: 1,
                            seed: s("point"),
                        }],
                    },
                ],
            },
            Fixture::RootAn(n) => SchemeRecipe::PointSet {
                sources: vec![explicit(root_points(n, -1))],
            },
            Fixture::RootYn(n) => SchemeRecipe::PointSet {
                sources: vec![explicit(root_points(n, 1))],
            },
            Fixture::TwistedCubic => SchemeRecipe::Curve {
                curve: CurveKind::TwistedCubic,
            },
            Fixture::B3DualPoints => SchemeRecipe::PointSet {
                sources: vec![explicit(B3_POINTS.iter().map(|p| p.to_vec()))],
            },
            Fixture::ThreeDisjointLines => SchemeRecipe::Union {
                parts: (0..3).map(|k| SchemeRecipe::Curve { curve: skew_line(k) }).collect(),
            },
            Fixture::Ex74TwistedCubic => SchemeRecipe::PointSet {
                sources: vec![
                    PointSource::OnCurve {
                        curve: CurveKind::TwistedCubic,
                        count: 18,
                        seed: s("curve-points"),
                    },
                    PointSource::General {
                        nvars: 4,
                        count: 6,
                        seed: s("general-points"),
                    },
                ],
            },
            Fixture::Ex74ThreeLines => {
                let mut sources: Vec<PointSource> = [6, 7, 7]
                    .iter()
                    .enumerate()
                    .map(|(k, &count)| PointSource::OnCurve {
                        curve: skew_line(k),
                        count,
                        seed: seed::derive(seed, "line-points", k as u64),
                    })
                    .collect();
                sources.push(PointSource::General {
                    nvars: 4,
                    count: 4,
                    seed: s("general-points"),
                });
                SchemeRecipe::PointSet { sources }
            }
            Fixture::Ex74PlaneCubic => SchemeRecipe::PointSet {
                sources: vec![
                    PointSource::OnCurve {
                        curve: CurveKind::PlaneCubic,
                        count: 17,
                        seed: s("curve-points"),
                    },
                    PointSource::General {
                        nvars: 4,
                        count: 7,
                        seed: s("general-points"),
                    },
                ],
            },
            Fixture::Ex74GeneralSeven => SchemeRecipe::PointSet {
                sources: vec![PointSource::General {
                    nvars: 4,
                    count: 7,
                    seed: s("general-points"),
                }],
            },
            Fixture::Ex74PlaneCubicLines => SchemeRecipe::PointSet {
                sources: vec![
                    PointSource::OnCurve {
                        curve: CurveKind::PlaneCubic,
                        count: 17,
                        seed: s("curve-points"),
                    },
                    PointSource::OnCurve {
                        curve: CurveKind::GeneralLine {
                            nvars: 4,
                            seed: s("lambda-1"),
                        },
                        count: 4,
                        seed: s("lambda-1-points"),
                    },
                    PointSource::OnCurve {
                        curve: CurveKind::GeneralLine {
                            nvars: 4,
                            seed: s("lambda-2"),
                        },
                        count: 3,
                        seed: s("lambda-2-points"),
                    },
                ],
            },
            Fixture::PlaneCubic => SchemeRecipe::Curve {
                curve: CurveKind::PlaneCubic,
            },
            Fixture::Linked87 => linked(vec![3, 3], line_x0x1()),
            Fixture::Linked74 => linked(vec![3, 3], eqs(4, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"])),
            Fixture::Linked1528 => linked(vec![4, 4], line_x0x1()),
            Fixture::Linked87PlusPoint => SchemeRecipe::Union {
                parts: vec![
                    Fixture::Linked87.recipe(seed),
                    SchemeRecipe::PointSet {
                        sources: vec![PointSource::General {
                            nvars: 4,
                            count: 1,
                            seed: s("point"),
                        }],
                    },
                ],
            },
            Fixture::Ci444Points => SchemeRecipe::CompleteIntersection {
                degrees: vec![4, 4, 4],
                nvars: 4,
                seed: s("ci"),
                through: None,
            },
            Fixture::ConeB3 => SchemeRecipe::Cone {
                base: Box::new(Fixture::B3DualPoints.recipe(seed)),
                vertex: general_point(4, "vertex"),
            },
            Fixture::ConeGeneral9 => SchemeRecipe::Cone {
                base: Box::new(SchemeRecipe::PointSet {
                    sources: vec![PointSource::General {
                        nvars: 3,
                        count: 9,
                        seed: s("base-points"),
                    }],
                }),
                vertex: general_point(4, "vertex"),
            },
            Fixture::Ci33P3 => SchemeRecipe::CompleteIntersection {
                degrees: vec![3, 3],
                nvars: 4,
                seed: s("ci"),
                through: None,
            },
            Fixture::Ci33P4 => SchemeRecipe::CompleteIntersection {
                degrees: vec![3, 3],
                nvars: 5,
                seed: s("ci"),
                through: None,
            },
            Fixture::DegeneratePoints => SchemeRecipe::PointSet {
                sources: vec![PointSource::InHyperplane {
                    nvars: 4,
                    count: 10,
                    seed: s("points"),
                }],
            },
            Fixture::LinkedSurfaceP4 => linked(vec![3, 3], eqs(5, &["x0", "x1"])),
            Fixture::Ci44TriplePoint => SchemeRecipe::CompleteIntersection {
                degrees: vec![4, 4],
                nvars: 4,
                seed: s("ci"),
                through: Some(Box::new(SchemeRecipe::FatPoint {
                    point: general_point(4, "triple-point"),
                    m: 3,
                })),
            },
        }
    }

    /// One-line description of the configuration.
    pub fn description(&self) -> String {
        match self {
            Fixture::X1 => "13 points of P^2 with an unexpected sextic".into(),
            Fixture::X2 => "13 points of P^2 with the Hilbert function of X1 and an unexpected sextic".into(),
            Fixture::Ci34PlusPoint => "complete intersection of a cubic and a quartic in P^2 plus a general point".into(),
            Fixture::RootAn(n) => format!("root system A_{n} points with the coordinate points of P^{n}"),
            Fixture::RootYn(n) => format!("A_{n} points with -1 replaced by +1, with the coordinate points of P^{n}"),
            Fixture::TwistedCubic => "twisted cubic curve in P^3".into(),
            Fixture::B3DualPoints => "nine points of P^2 dual to the B3 arrangement".into(),
            Fixture::ThreeDisjointLines => "three pairwise skew lines in P^3".into(),
            Fixture::Ex74TwistedCubic => "18 points on a twisted cubic plus 6 general points".into(),
            Fixture::Ex74ThreeLines => "6, 7 and 7 points on three skew lines plus 4 general points".into(),
            Fixture::Ex74PlaneCubic => "17 points on a plane cubic plus 7 general points".into(),
            Fixture::Ex74PlaneCubicLines => "17 points on a plane cubic plus 4 and 3 points on two general lines".into(),
            Fixture::Ex74GeneralSeven => "7 general points of P^3".into(),
            Fixture::PlaneCubic => "plane cubic curve in P^3".into(),
            Fixture::Linked87 => "curve of degree 8 and genus 7 linked to a line by two cubics".into(),
            Fixture::Linked74 => "curve of degree 7 and genus 4 linked to two skew lines by two cubics".into(),
            Fixture::Linked1528 => "curve of degree 15 and genus 28 linked to a line by two quartics".into(),
            Fixture::Linked87PlusPoint => "degree 8 genus 7 linked curve plus a general point".into(),
            Fixture::Ci444Points => "64 points cut by three general quartics in P^3".into(),
            Fixture::ConeB3 => "cone over the B3 dual points with a general vertex".into(),
            Fixture::ConeGeneral9 => "cone over 9 general points of P^2 with a general vertex".into(),
            Fixture::Ci33P3 => "complete intersection of two general cubics in P^3".into(),
            Fixture::Ci33P4 => "complete intersection of two general cubics in P^4".into(),
            Fixture::DegeneratePoints => "10 general points of a plane in P^3".into(),
            Fixture::LinkedSurfaceP4 => "surface of P^4 linked to a plane by two cubics".into(),
            Fixture::Ci44TriplePoint => "two general quartics of P^3 singular to order 3 at a general point".into(),
        }
    }
}
