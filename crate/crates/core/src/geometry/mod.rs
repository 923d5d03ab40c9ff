//! Points, fat points and the schemes built from them.

pub mod constructions;
pub mod fixtures;
pub mod points;

pub use constructions::{
    complete_intersection, cone_over, curve_invariants, distraction, koszul_hilbert_function, linked_curve,
    points_on_variety, random_points, standard_monomials, union, Curve, Sampler,
};
pub use fixtures::{CurveKind, Fixture, PointSource, PointSpec, SchemeRecipe};
pub use points::{fat_point_ideal, point_ideal, points_hilbert_function, points_ideal, ProjPoint};
