//! Complete intersections, links, cones, unions, distractions and points
//! sampled on curves.

use std::collections::HashSet;

use crate::algebra::field::Field;
use crate::algebra::monomial::{binomial_i, Monomial};
use crate::algebra::poly::{random_form, Polynomial};
use crate::error::{Error, Result};
use crate::geometry::points::{random_element_of_degree, ProjPoint};
use crate::groebner::{ideal_colon, ideal_intersection, saturation, Ideal, MonomialIdeal, Saturation};
use crate::hilbert::{hilbert_function, standard_monomial_count};
use crate::seed;

/// Hilbert function of `R/(f_1, ..., f_k)` for a regular sequence of the given degrees.
pub fn koszul_hilbert_function(degrees: &[usize], nvars: usize, t: usize) -> u64 {
    let k = degrees.len();
    let mut total: i128 = 0;
    for mask in 0u32..(1 << k) {
        let shift: usize = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i]).sum();
        if shift > t {
            continue;
        }
        let term = binomial_i((t - shift + nvars - 1) as i64, (nvars - 1) as i64) as i128;
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.max(0) as u64
}

/// Ideal of random forms of the given degrees, optionally taken inside `through`.
///
/// The forms are accepted when the quotient has the Hilbert function of a
/// regular sequence up to the sum of the degrees; otherwise they are redrawn
/// with a derived seed, at most three times.
pub fn complete_intersection<F: Field>(
    field: &F,
    degrees: &[usize],
    nvars: usize,
    seed: u64,
    through: Option<&Ideal<F>>,
) -> Result<Ideal<F>> {
    if degrees.is_empty() || degrees.len() > nvars {
        return Err(Error::invalid(format!(
            "{} forms cannot cut a complete intersection in {nvars} variables",
            degrees.len()
        )));
    }
    if degrees.contains(&0) {
        return Err(Error::invalid("complete intersection degrees must be positive"));
    }
    let check_to: usize = degrees.iter().sum::<usize>() + 1;
    for attempt in 0..4u64 {
        let s = seed::derive(seed, "complete-intersection", attempt);
        let mut forms = Vec::with_capacity(degrees.len());
        for (k, &d) in degrees.iter().enumerate() {
            let fs = seed::derive(s, "form", k as u64);
            let f = match through {
                Some(j) => random_element_of_degree(j, d, fs)?,
                None => random_form(field, d, nvars, fs),
            };
            forms.push(f);
        }
        let ideal = Ideal::new(field, nvars, forms)?;
        let h = hilbert_function(&ideal, check_to)?;
        let regular = (0..=check_to).all(|t| h.values[t] == koszul_hilbert_function(degrees, nvars, t));
        if regular {
            // complete intersections of positive dimension are unmixed, hence saturated
            return Ok(if degrees.len() < nvars {
                ideal.mark_saturated()
            } else {
                ideal
            });
        }
    }
    Err(Error::Genericity(format!(
        "random forms of degrees {degrees:?} failed the regular sequence check four times"
    )))
}

/// The scheme linked to `inside` by `ci`: `ci : inside`, saturated.
pub fn linked_curve<F: Field>(ci: &Ideal<F>, inside: &Ideal<F>) -> Result<Ideal<F>> {
    if !inside.contains_ideal(ci)? {
        return Err(Error::invalid("the linking ideal must be contained in the linked scheme's ideal"));
    }
    let colon = ideal_colon(ci, inside)?;
    if ci.saturation_flag() == Saturation::Saturated {
        // a colon of a saturated ideal is saturated
        return colon.with_generators_from_gb().map(|c| c.mark_saturated());
    }
    saturation(&colon, None)
}

/// Cone over a scheme of `P^{n-1}` with vertex `v` in `P^n`.
///
/// The base lives in the hyperplane `x_n = 0`; its generators are pulled back
/// along the projection from `v`, `x_i -> v_n x_i - v_i x_n`.
pub fn cone_over<F: Field>(base: &Ideal<F>, vertex: &ProjPoint<F>) -> Result<Ideal<F>> {
    let field = base.field();
    let n = base.nvars();
    if vertex.nvars() != n + 1 {
        return Err(Error::Dimension {
            expected: n + 1,
            got: vertex.nvars(),
        });
    }
    let v = vertex.coords();
    if field.is_zero(&v[n]) {
        return Err(Error::invalid("the vertex lies on the hyperplane of the base"));
    }
    let last = Polynomial::var(field, n + 1, n);
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| {
            Polynomial::var(field, n + 1, i)
                .scale(&v[n])
                .sub(&last.scale(&v[i]))
        })
        .collect();
    let gens = base
        .generators()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<Vec<_>>>()?;
    let cone = Ideal::new(field, n + 1, gens)?.with_budget(base.budget());
    Ok(if base.saturation_flag() == Saturation::Saturated {
        cone.mark_saturated()
    } else {
        cone
    })
}

/// `I_1 ∩ ... ∩ I_k`.
pub fn union<F: Field>(parts: &[Ideal<F>]) -> Result<Ideal<F>> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::invalid("union of no schemes"))?;
    let mut acc = first.clone();
    for p in rest {
        acc = ideal_intersection(&acc, p)?;
    }
    let all_saturated = parts.iter().all(|p| p.saturation_flag() == Saturation::Saturated);
    Ok(if all_saturated { acc.mark_saturated() } else { acc })
}

/// Standard monomials of an artinian monomial ideal.
pub fn standard_monomials(m: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if !m.is_artinian() {
        return Err(Error::invalid(format!("{m} is not artinian")));
    }
    let n = m.nvars();
    let mut out = Vec::new();
    let mut d = 0;
    while standard_monomial_count(m, d) > 0 {
        out.extend(
            crate::algebra::monomial::monomials_of_degree(n, d)
                .into_iter()
                .filter(|x| !m.contains(x)),
        );
        d += 1;
    }
    Ok(out)
}

/// Reduced points lifting an artinian monomial ideal of `K[y_1..y_n]` to `P^n`.
///
/// `y_i^e` lifts to `prod_{c < e} (x_i - c x_0)`, and the standard monomial
/// `y^a` becomes the point `(1 : a_1 : ... : a_n)`.
pub fn distraction<F: Field>(field: &F, m: &MonomialIdeal) -> Result<(Ideal<F>, Vec<ProjPoint<F>>)> {
    let std = standard_monomials(m)?;
    let n = m.nvars();
    let x0 = Polynomial::var(field, n + 1, 0);
    let ladder = |i: usize, c: u32| Polynomial::var(field, n + 1, i + 1).sub(&x0.scale(&field.from_i64(c as i64)));
    let gens = m
        .generators()
        .iter()
        .map(|g| {
            let mut acc = Polynomial::one(field, n + 1);
            for i in 0..n {
                for c in 0..g.exp(i) {
                    acc = acc.mul(&ladder(i, c));
                }
            }
            acc
        })
        .collect();
    let points = std
        .iter()
        .map(|a| {
            let mut coords = vec![field.one()];
            coords.extend((0..n).map(|i| field.from_i64(a.exp(i) as i64)));
            ProjPoint::new(field, coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Ideal::new(field, n + 1, gens)?.mark_saturated(), points))
}

/// How points are drawn on a curve.
#[derive(Clone, Debug)]
pub enum Sampler<F: Field> {
    /// Binary forms in `(s, u)`, evaluated at `(s, 1)`.
    Parametrized(Vec<Polynomial<F>>),
    /// `y^2 z = x^3 + a x z^2 + b z^3` in the plane `x_3 = 0` of `P^3`,
    /// sampled by choosing `x` and extracting a square root.
    Weierstrass { a: i64, b: i64 },
}

/// A curve together with a way to produce points on it.
#[derive(Clone, Debug)]
pub struct Curve<F: Field> {
    pub ideal: Ideal<F>,
    pub sampler: Sampler<F>,
    pub degree: usize,
    pub genus: i64,
}

impl<F: Field> Curve<F> {
    /// The line through two points.
    pub fn line(field: &F, a: &ProjPoint<F>, b: &ProjPoint<F>) -> Result<Self> {
        let n = a.nvars();
        let s = Polynomial::var(field, 2, 0);
        let u = Polynomial::var(field, 2, 1);
        let forms = (0..n)
            .map(|i| s.scale(&a.coords()[i]).add(&u.scale(&b.coords()[i])))
            .collect();
        let ideal = crate::geometry::points::points_ideal(field, &[a.clone(), b.clone()])?;
        // two points span the line: keep only the linear forms
        let linear: Vec<Polynomial<F>> = ideal
            .generators()
            .iter()
            .filter(|g| g.degree() == Some(1))
            .cloned()
            .collect();
        if linear.len() + 2 != n {
            return Err(Error::invalid("the two points coincide"));
        }
        Ok(Curve {
            ideal: Ideal::new(field, n, linear)?.mark_saturated(),
            sampler: Sampler::Parametrized(forms),
            degree: 1,
            genus: 0,
        })
    }

    /// A random line of `P^{n-1}`.
    pub fn random_line(field: &F, nvars: usize, seed: u64) -> Result<Self> {
        for k in 0..8 {
            let a = ProjPoint::random(field, nvars, seed::derive(seed, "line-a", k));
            let b = ProjPoint::random(field, nvars, seed::derive(seed, "line-b", k));
            if a != b {
                return Self::line(field, &a, &b);
            }
        }
        Err(Error::Genericity("could not draw two distinct points".into()))
    }

    /// `(s^3 : s^2 u : s u^2 : u^3)`.
    pub fn twisted_cubic(field: &F) -> Self {
        let q = |s: &str| crate::algebra::parse::parse_polynomial(field, s, 4).unwrap();
        let ideal = Ideal::new(field, 4, vec![q("x0*x2 - x1^2"), q("x0*x3 - x1*x2"), q("x1*x3 - x2^2")])
            .unwrap()
            .mark_saturated();
        let b = |s: &str| crate::algebra::parse::parse_polynomial(field, s, 2).unwrap();
        let forms = vec![b("x0^3"), b("x0^2*x1"), b("x0*x1^2"), b("x1^3")];
        Curve {
            ideal,
            sampler: Sampler::Parametrized(forms),
            degree: 3,
            genus: 0,
        }
    }

    /// A plane cubic in `x_3 = 0`: smooth over prime fields, nodal over the rationals
    /// (where a smooth cubic has too few points of small height).
    pub fn plane_cubic(field: &F) -> Self {
        let q = |s: &str| crate::algebra::parse::parse_polynomial(field, s, 4).unwrap();
        match field.spec() {
            crate::algebra::field::FieldSpec::PrimeField { .. } => Curve {
                ideal: Ideal::new(field, 4, vec![q("x3"), q("x1^2*x2 - x0^3 - x0*x2^2 - x2^3")])
                    .unwrap()
                    .mark_saturated(),
                sampler: Sampler::Weierstrass { a: 1, b: 1 },
                degree: 3,
                genus: 1,
            },
            crate::algebra::field::FieldSpec::Rationals => {
                let b = |s: &str| crate::algebra::parse::parse_polynomial(field, s, 2).unwrap();
                Curve {
                    ideal: Ideal::new(field, 4, vec![q("x3"), q("x1^2*x2 - x0^3 - x0^2*x2")])
                        .unwrap()
                        .mark_saturated(),
                    sampler: Sampler::Parametrized(vec![
                        b("x0^2*x1 - x1^3"),
                        b("x0^3 - x0*x1^2"),
                        b("x1^3"),
                        b("0"),
                    ]),
                    degree: 3,
                    genus: 1,
                }
            }
        }
    }
}

/// `count` distinct points on the curve, deterministic in `seed`.
pub fn points_on_variety<F: Field>(field: &F, curve: &Curve<F>, count: usize, seed: u64) -> Result<Vec<ProjPoint<F>>> {
    let mut rng = seed::rng(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > 64 * count + 64 {
            return Err(Error::Genericity(format!(
                "sampled only {} of {count} distinct points",
                out.len()
            )));
        }
        let coords = match &curve.sampler {
            Sampler::Parametrized(forms) => {
                let s = field.random(&mut rng);
                let pt = [s, field.one()];
                forms.iter().map(|f| f.eval(&pt)).collect::<Vec<_>>()
            }
            Sampler::Weierstrass { a, b } => {
                let x = field.random(&mut rng);
                let (fa, fb) = (field.from_i64(*a), field.from_i64(*b));
                let x3 = field.mul(&field.mul(&x, &x), &x);
                let rhs = field.add(&field.add(&x3, &field.mul(&fa, &x)), &fb);
                let Some(y) = field.square_root(&rhs) else { continue };
                vec![x, y, field.one(), field.zero()]
            }
        };
        let Ok(p) = ProjPoint::new(field, coords) else { continue };
        if !curve.ideal.generators().iter().all(|g| p.satisfies(g)) {
            return Err(Error::invalid("sampled point is off the curve"));
        }
        if seen.insert(p.coords().to_vec()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// `count` random points of `P^{nvars-1}`.
pub fn random_points<F: Field>(field: &F, nvars: usize, count: usize, seed: u64) -> Vec<ProjPoint<F>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut k = 0;
    while out.len() < count {
        let p = ProjPoint::random(field, nvars, seed::derive(seed, "point", k));
        k += 1;
        if seen.insert(p.coords().to_vec()) {
            out.push(p);
        }
    }
    out
}

/// Degree `e` and arithmetic genus `g` of a curve from `h(t) = e t - g + 1` for large `t`.
pub fn curve_invariants<F: Field>(ideal: &Ideal<F>, t_max: usize) -> Result<(i64, i64)> {
    let h = hilbert_function(ideal, t_max)?;
    let v = &h.values;
    let e = v[t_max] as i64 - v[t_max - 1] as i64;
    if v[t_max - 1] as i64 - v[t_max - 2] as i64 != e {
        return Err(Error::invalid("Hilbert function not yet linear; increase the degree range"));
    }
    Ok((e, e * t_max as i64 + 1 - v[t_max] as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::geometry::points::{point_ideal, points_hilbert_function, points_ideal};
    use crate::gin::lex_segment_ideal_for;
    use crate::hilbert::{h_vector, monomial_hilbert_function};

    #[test]
    fn koszul_counts() {
        // two cubics in P^3: h(t) = 9t - 9 for t >= 4
        assert_eq!(koszul_hilbert_function(&[3, 3], 4, 5), 36);
        assert_eq!(koszul_hilbert_function(&[3, 3], 5, 6), 141);
        assert_eq!(koszul_hilbert_function(&[1], 4, 3), 10);
    }

    #[test]
    fn complete_intersection_of_cubics() {
        let fp = PrimeField::default();
        let ci = complete_intersection(&fp, &[3, 3], 4, 7, None).unwrap();
        assert_eq!(ci.saturation_flag(), Saturation::Saturated);
        assert_eq!(crate::hilbert::graded_dim_ideal(&ci, 5).unwrap(), 20);
        let ci5 = complete_intersection(&fp, &[3, 3], 5, 7, None).unwrap();
        let h = hilbert_function(&ci5, 6).unwrap();
        assert_eq!(h.values, vec![1, 5, 15, 33, 60, 96, 141]);
        assert!(complete_intersection(&fp, &[2, 2, 2, 2, 2], 4, 1, None).is_err());
    }

    #[test]
    fn linked_curve_degree_genus() {
        let fp = PrimeField::default();
        let line = Ideal::new(&fp, 4, vec![Polynomial::var(&fp, 4, 0), Polynomial::var(&fp, 4, 1)])
            .unwrap()
            .mark_saturated();
        let ci = complete_intersection(&fp, &[3, 3], 4, 11, Some(&line)).unwrap();
        let c = linked_curve(&ci, &line).unwrap();
        assert_eq!(curve_invariants(&c, 10).unwrap(), (8, 7));
    }

    #[test]
    fn cone_hilbert_function_is_a_running_sum() {
        let fp = PrimeField::default();
        let base_pts = random_points(&fp, 3, 5, 3);
        let base = points_ideal(&fp, &base_pts).unwrap();
        let v = ProjPoint::random(&fp, 4, 9);
        let cone = cone_over(&base, &v).unwrap();
        let hb = hilbert_function(&base, 6).unwrap().values;
        let hc = hilbert_function(&cone, 6).unwrap().values;
        for t in 1..=6 {
            assert_eq!(hc[t] - hc[t - 1], hb[t]);
        }
        // the vertex lies on every line of the cone
        assert!(cone.generators().iter().all(|g| v.satisfies(g)));
        let on_plane = ProjPoint::from_i64(&fp, &[1, 2, 3, 0]).unwrap();
        assert!(cone_over(&base, &on_plane).is_err());
    }

    #[test]
    fn union_of_points() {
        let q = Rationals;
        let a = point_ideal(&q, &ProjPoint::from_i64(&q, &[1, 0, 0]).unwrap());
        let b = point_ideal(&q, &ProjPoint::from_i64(&q, &[0, 1, 0]).unwrap());
        let u = union(&[a, b]).unwrap();
        assert_eq!(hilbert_function(&u, 3).unwrap().values, vec![1, 2, 2, 2]);
    }

    #[test]
    fn distraction_keeps_the_hilbert_function() {
        let q = Rationals;
        let m = lex_segment_ideal_for(&[1, 2, 1, 0], 2, 3).unwrap();
        let (i, pts) = distraction(&q, &m).unwrap();
        assert_eq!(pts.len(), 4);
        assert!(i.same_ideal(&points_ideal(&q, &pts).unwrap()).unwrap());
        assert_eq!(h_vector(&i).unwrap().entries, vec![1, 2, 1]);
        let single = MonomialIdeal::maximal(2);
        let (_, p) = distraction(&q, &single).unwrap();
        assert_eq!(p, vec![ProjPoint::from_i64(&q, &[1, 0, 0]).unwrap()]);
        assert!(distraction(&q, &MonomialIdeal::from_exponents(2, &[&[1, 0]])).is_err());
    }

    #[test]
    fn distraction_of_a_long_h_vector() {
        let fp = PrimeField::default();
        let h = [1u64, 3, 6, 10, 5, 5, 2, 0];
        let m = lex_segment_ideal_for(&h, 3, 7).unwrap();
        let (i, pts) = distraction(&fp, &m).unwrap();
        assert_eq!(pts.len(), 32);
        assert_eq!(h_vector(&i).unwrap().entries, vec![1, 3, 6, 10, 5, 5, 2]);
        assert_eq!(monomial_hilbert_function(&m, 7), h.to_vec());
    }

    #[test]
    fn sampled_points_lie_on_their_curves() {
        let fp = PrimeField::default();
        let tc = Curve::twisted_cubic(&fp);
        let pts = points_on_variety(&fp, &tc, 18, 5).unwrap();
        assert_eq!(h_vector(&points_ideal(&fp, &pts).unwrap()).unwrap().entries, vec![1, 3, 3, 3, 3, 3, 2]);
        for field_pts in [
            points_on_variety(&fp, &Curve::plane_cubic(&fp), 17, 5).unwrap(),
        ] {
            let i = points_ideal(&fp, &field_pts).unwrap();
            assert_eq!(h_vector(&i).unwrap().entries, vec![1, 2, 3, 3, 3, 3, 2]);
        }
        let q = Rationals;
        let pts = points_on_variety(&q, &Curve::plane_cubic(&q), 17, 5).unwrap();
        assert_eq!(points_hilbert_function(&q, &pts, 7), vec![1, 3, 6, 9, 12, 15, 17, 17]);
        let line = Curve::random_line(&q, 4, 2).unwrap();
        let p = points_on_variety(&q, &line, 1, 0).unwrap();
        assert!(line.ideal.generators().iter().all(|g| p[0].satisfies(g)));
    }

    #[test]
    fn twisted_cubic_invariants() {
        let q = Rationals;
        let c = Curve::twisted_cubic(&q);
        assert_eq!(curve_invariants(&c.ideal, 6).unwrap(), (3, 0));
        let p = Curve::plane_cubic(&q);
        assert_eq!(curve_invariants(&p.ideal, 6).unwrap(), (3, 1));
    }
}
