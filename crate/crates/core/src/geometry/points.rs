//! Points of projective space and the ideals they define.

use std::collections::HashSet;

use num_rational::BigRational;

use crate::algebra::field::Field;
use crate::algebra::monomial::{monomials_of_degree, Monomial};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::graded::GradedPieces;
use crate::groebner::Ideal;
use crate::linalg::{kernel, Echelon, MonomialBasis};
use crate::seed;

/// A point of `P^n`, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, Debug)]
pub struct ProjPoint<F: Field> {
    coords: Vec<F::Elem>,
    pivot: usize,
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> Eq for ProjPoint<F> {}

impl<F: Field> ProjPoint<F> {
    pub fn new(field: &F, coords: Vec<F::Elem>) -> Result<Self> {
        let k = coords
            .iter()
            .position(|c| !field.is_zero(c))
            .ok_or_else(|| Error::invalid("the zero vector is not a projective point"))?;
        let inv = field.inv(&coords[k]).unwrap();
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(ProjPoint { coords, pivot: k })
    }

    pub fn from_i64(field: &F, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn from_rationals(field: &F, coords: &[BigRational]) -> Result<Self> {
        let v = coords
            .iter()
            .map(|c| field.from_ratio(c.numer(), c.denom()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, v)
    }

    /// A point with coordinates drawn from the field's pool.
    pub fn random(field: &F, nvars: usize, seed: u64) -> Self {
        let mut rng = seed::rng(seed);
        loop {
            let v: Vec<F::Elem> = (0..nvars).map(|_| field.random(&mut rng)).collect();
            if let Ok(p) = Self::new(field, v) {
                return p;
            }
        }
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    /// Index of the first nonzero coordinate.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn satisfies(&self, f: &Polynomial<F>) -> bool {
        f.field().is_zero(&f.eval(&self.coords))
    }
}

/// `I_P`: the forms `x_i - p_i x_k` with `k` the pivot of `P`.
pub fn point_ideal<F: Field>(field: &F, p: &ProjPoint<F>) -> Ideal<F> {
    let n = p.nvars();
    let k = p.pivot;
    let xk = Polynomial::var(field, n, k);
    let gens = (0..n)
        .filter(|&i| i != k)
        .map(|i| Polynomial::var(field, n, i).sub(&xk.scale(&p.coords[i])))
        .collect();
    Ideal::new(field, n, gens).unwrap().mark_saturated()
}

/// `I_P^m`.
pub fn fat_point_ideal<F: Field>(field: &F, p: &ProjPoint<F>, m: usize) -> Result<Ideal<F>> {
    if m == 0 {
        return Err(Error::invalid("fat point multiplicity must be at least 1"));
    }
    Ok(point_ideal(field, p).power(m)?.mark_saturated())
}

/// Ideal of a finite set of distinct points, by interpolation degree by degree.
///
/// `[I_X]_d` is the kernel of the evaluation map on degree-`d` forms. New
/// generators in degree `d` are the kernel vectors outside `R_1 [I_X]_{d-1}`;
/// the search stops one degree after the Hilbert function reaches `|X|`.
pub fn points_ideal<F: Field>(field: &F, points: &[ProjPoint<F>]) -> Result<Ideal<F>> {
    let Some(first) = points.first() else {
        return Err(Error::invalid("empty point set"));
    };
    let n = first.nvars();
    if points.iter().any(|p| p.nvars() != n) {
        return Err(Error::invalid("points live in different projective spaces"));
    }
    let mut seen = HashSet::new();
    for (k, p) in points.iter().enumerate() {
        if !seen.insert(p.coords.clone()) {
            return Err(Error::invalid(format!("point {k} repeats an earlier point")));
        }
    }
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    let mut prev: Vec<Polynomial<F>> = Vec::new();
    let mut reached: Option<usize> = None;
    let mut d = 1;
    loop {
        let basis = MonomialBasis::lex(n, d);
        let rows: Vec<Vec<F::Elem>> = points
            .iter()
            .map(|p| basis.monomials().iter().map(|m| eval_monomial(field, m, &p.coords)).collect())
            .collect();
        // kernel of the evaluation matrix = forms vanishing on every point
        let ker = kernel(field, &rows, basis.len());
        let h = basis.len() - ker.len();
        let mut span = Echelon::new(field, basis.len());
        for g in &prev {
            for i in 0..n {
                let xi = Monomial::var(n, i);
                span.insert(basis.vector(&g.mul_term(&xi, &field.one())));
            }
        }
        let cur: Vec<Polynomial<F>> = ker.iter().map(|v| basis.polynomial(field, n, v)).collect();
        for (v, p) in ker.into_iter().zip(&cur) {
            if span.insert(v) {
                gens.push(p.clone());
            }
        }
        prev = cur;
        if let Some(r) = reached {
            if d > r {
                break;
            }
        } else if h == points.len() {
            reached = Some(d);
        }
        d += 1;
    }
    Ok(Ideal::new(field, n, gens)?.mark_saturated())
}

fn eval_monomial<F: Field>(field: &F, m: &Monomial, coords: &[F::Elem]) -> F::Elem {
    let mut acc = field.one();
    for (i, c) in coords.iter().enumerate() {
        for _ in 0..m.exp(i) {
            acc = field.mul(&acc, c);
        }
    }
    acc
}

/// Hilbert function of the points, `h_X(d) = rank` of the evaluation matrix.
pub fn points_hilbert_function<F: Field>(field: &F, points: &[ProjPoint<F>], t_max: usize) -> Vec<u64> {
    let n = points.first().map(|p| p.nvars()).unwrap_or(1);
    (0..=t_max)
        .map(|d| {
            let mons = monomials_of_degree(n, d);
            let rows: Vec<Vec<F::Elem>> = points
                .iter()
                .map(|p| mons.iter().map(|m| eval_monomial(field, m, &p.coords)).collect())
                .collect();
            crate::linalg::rank(field, rows, mons.len()) as u64
        })
        .collect()
}

/// Random elements of `[I]_d` as forms in the given ideal.
pub(crate) fn random_element_of_degree<F: Field>(ideal: &Ideal<F>, d: usize, seed: u64) -> Result<Polynomial<F>> {
    let field = ideal.field();
    let mut g = GradedPieces::new(field, ideal.nvars(), ideal.generators())?;
    let basis = g.basis_polynomials(d);
    if basis.is_empty() {
        return Err(Error::invalid(format!("the ideal has no forms of degree {d}")));
    }
    let mut rng = seed::rng(seed);
    let mut acc = Polynomial::zero(field, ideal.nvars());
    for b in &basis {
        acc = acc.add(&b.scale(&field.random(&mut rng)));
    }
    Ok(acc)
}
