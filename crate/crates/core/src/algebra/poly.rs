use std::collections::HashMap;
use std::fmt;

use crate::algebra::field::Field;
use crate::algebra::monomial::{default_names, monomials_of_degree, Monomial, MonomialOrder, SLOTS};
use crate::error::{Error, Result};
use crate::seed;

/// Sparse multivariate polynomial.
///
/// Terms are kept sorted descending in degrevlex with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.field == other.field && self.terms == other.terms
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.terms.hash(state);
    }
}

/// Binary operation selector for [`poly_arith`].
#[derive(Clone, Debug)]
pub enum PolyOp<E> {
    Add,
    Sub,
    Mul,
    Scale(E),
}

/// Checked arithmetic: rejects operands from different rings or fields.
pub fn poly_arith<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    op: PolyOp<F::Elem>,
) -> Result<Polynomial<F>> {
    f.check_same_ring(g)?;
    Ok(match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
        PolyOp::Scale(c) => f.scale(&c),
    })
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Polynomial {
            field: field.clone(),
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn term(field: &F, m: Monomial, c: F::Elem) -> Self {
        let nvars = m.nvars();
        let terms = if field.is_zero(&c) { vec![] } else { vec![(m, c)] };
        Polynomial {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn monomial(field: &F, m: Monomial) -> Self {
        Self::term(field, m, field.one())
    }

    pub fn var(field: &F, nvars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(nvars, i))
    }

    /// Builds from arbitrary terms: duplicates are combined, zeros dropped.
    pub fn from_terms(field: &F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(field, nvars, acc)
    }

    fn from_map(field: &F, nvars: usize, acc: HashMap<Monomial, F::Elem>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
        Polynomial {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(Monomial, F::Elem)> {
        if ord == MonomialOrder::DegRevLex {
            return self.terms.first().cloned();
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .cloned()
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: MonomialOrder) -> Self {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(&c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub(crate) fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.spec(),
                other.field.spec()
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match MonomialOrder::DegRevLex.cmp(&a[i].0, &b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { f.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { f.neg(&t.1) } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars);
        }
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves every monomial order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars);
        }
        Polynomial {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f, self.nvars);
        }
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(v) => *v = f.mul_add(ca, cb, v),
                    None => {
                        acc.insert(m, f.mul(ca, cb));
                    }
                }
            }
        }
        Self::from_map(f, self.nvars, acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let mut total = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                for _ in 0..m.exp(i) {
                    v = f.mul(&v, x);
                }
            }
            total = f.add(&total, &v);
        }
        total
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Substitutes variable `i` by `images[i]` (all in a common target ring).
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let f = &self.field;
        let mut max_exp = vec![0u32; self.nvars];
        for (m, _) in &self.terms {
            for (i, e) in max_exp.iter_mut().enumerate() {
                *e = (*e).max(m.exp(i));
            }
        }
        let powers: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &e)| {
                let mut v = vec![Polynomial::one(f, target)];
                for k in 1..=e as usize {
                    let next = v[k - 1].mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(f, target, c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    prod = prod.mul(&pw[e]);
                }
            }
            for (tm, tc) in prod.terms {
                match acc.get_mut(&tm) {
                    Some(v) => *v = f.add(v, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Self::from_map(f, target, acc))
    }

    pub fn apply_linear_change(&self, change: &LinearChange<F>) -> Result<Self> {
        if change.dim() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: change.dim(),
            });
        }
        self.substitute(&change.images())
    }

    /// Coefficients in `K[x1..][x0]`: entry `k` multiplies `x0^(d-k)` where `d`
    /// is the total degree; for a form of degree `d` entry `k` has degree `k`.
    pub fn x0_coefficients(&self) -> Vec<Polynomial<F>> {
        let f = &self.field;
        let d = match self.degree() {
            None => return vec![],
            Some(d) => d,
        };
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(0) as usize;
            let mut rest = *m;
            rest.set_exp(0, 0);
            buckets[d - e].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Polynomial::from_terms(f, self.nvars, t))
            .collect()
    }

    /// Inverse of [`Self::x0_coefficients`] for total degree `d`.
    pub fn from_x0_coefficients(field: &F, nvars: usize, coeffs: &[Polynomial<F>]) -> Self {
        let d = coeffs.len().saturating_sub(1);
        let mut acc = Polynomial::zero(field, nvars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut x0 = Monomial::one(nvars);
            x0.set_exp(0, (d - k) as u32);
            acc = acc.add(&c.mul_term(&x0, &field.one()));
        }
        acc
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial<F>) -> Option<Polynomial<F>> {
        let f = &self.field;
        let ord = MonomialOrder::DegRevLex;
        let (lm, lc) = divisor.leading_term(ord)?;
        let lc_inv = f.inv(&lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.div(&m)?;
            let qc = f.mul(&c, &lc_inv);
            rem = rem.sub(&divisor.mul_term(&q, &qc));
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(f, self.nvars, quot))
    }

    /// Same polynomial viewed in a ring with a different number of variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars > SLOTS {
            return Err(Error::TooManyVariables(nvars));
        }
        if nvars < self.nvars {
            for (m, _) in &self.terms {
                if (nvars..self.nvars).any(|i| m.exp(i) > 0) {
                    return Err(Error::invalid("polynomial uses dropped variables"));
                }
            }
        }
        let terms = self.terms.iter().map(|(m, c)| (m.with_nvars(nvars), c.clone())).collect();
        Ok(Polynomial::from_terms(&self.field, nvars, terms))
    }

    pub(crate) fn map_monomials(&self, nvars: usize, map: impl Fn(&Monomial) -> Monomial) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (map(m), c.clone())).collect();
        Polynomial::from_terms(&self.field, nvars, terms)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let f = &self.field;
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut s = f.format(c);
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.display_with(names);
            if m.degree() == 0 {
                out.push_str(&s);
            } else if s == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{s}*{mono}"));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}", self.to_string_with(&default_names(self.nvars)))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{self}")
    }
}

/// Dense form of degree `degree` with coefficients drawn from the field's pool.
pub fn random_form<F: Field>(field: &F, degree: usize, nvars: usize, seed: u64) -> Polynomial<F> {
    let mut rng = seed::rng(seed);
    let terms = monomials_of_degree(nvars, degree)
        .into_iter()
        .map(|m| {
            let c = if degree == 0 {
                field.random_nonzero(&mut rng)
            } else {
                field.random(&mut rng)
            };
            (m, c)
        })
        .collect();
    Polynomial::from_terms(field, nvars, terms)
}

/// Invertible linear substitution `x_i -> sum_j a_ij x_j`.
#[derive(Clone, Debug)]
pub struct LinearChange<F: Field> {
    field: F,
    matrix: Vec<Vec<F::Elem>>,
    seed: Option<u64>,
}

impl<F: Field> LinearChange<F> {
    pub fn new(field: &F, matrix: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("linear change matrix must be square"));
        }
        if crate::linalg::determinant(field, &matrix) == field.zero() {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange {
            field: field.clone(),
            matrix,
            seed: None,
        })
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange {
            field: field.clone(),
            matrix,
            seed: None,
        }
    }

    /// Swaps two variables.
    pub fn swap(field: &F, n: usize, a: usize, b: usize) -> Self {
        let mut c = Self::identity(field, n);
        c.matrix.swap(a, b);
        c
    }

    /// Uniform random invertible change; redraws (deterministically) on singular samples.
    pub fn random(field: &F, n: usize, seed: u64) -> Self {
        let mut rng = seed::rng(seed);
        loop {
            let matrix: Vec<Vec<F::Elem>> = (0..n)
                .map(|_| (0..n).map(|_| field.random(&mut rng)).collect())
                .collect();
            if let Ok(mut c) = Self::new(field, matrix) {
                c.seed = Some(seed);
                return c;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn matrix(&self) -> &[Vec<F::Elem>] {
        &self.matrix
    }

    /// Image of each variable as a linear form.
    pub fn images(&self) -> Vec<Polynomial<F>> {
        let n = self.dim();
        self.matrix
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::var(n, j), c.clone()))
                    .collect();
                Polynomial::from_terms(&self.field, n, terms)
            })
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let inv = crate::linalg::inverse(&self.field, &self.matrix).expect("invertible by construction");
        LinearChange {
            field: self.field.clone(),
            matrix: inv,
            seed: self.seed,
        }
    }

    /// The change equal to applying `inner` first and then `self`.
    pub fn compose(&self, inner: &LinearChange<F>) -> Self {
        // f(A_inner x) then substitute x -> A_self x gives f(A_inner A_self x)
        let matrix = crate::linalg::mat_mul(&self.field, &inner.matrix, &self.matrix);
        LinearChange {
            field: self.field.clone(),
            matrix,
            seed: None,
        }
    }

    /// Where the point `(1:0:...:0)` of the new coordinates sits in the old ones.
    pub fn image_of_first_point(&self) -> Vec<F::Elem> {
        self.matrix.iter().map(|row| row[0].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::parse::parse_polynomial;
    use proptest::prelude::*;

    fn q(s: &str, n: usize) -> Polynomial<Rationals> {
        parse_polynomial(&Rationals, s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q("x+y", 3).add(&q("-x", 3)), q("y", 3));
        assert_eq!(q("x+y", 3).mul(&q("x-y", 3)), q("x^2-y^2", 3));
        let three = Rationals.from_i64(3);
        let r = poly_arith(&q("1/2*x", 3), &q("0", 3), PolyOp::Scale(three)).unwrap();
        assert_eq!(r, q("3/2*x", 3));
        assert!(poly_arith(&q("x", 3), &q("x", 4), PolyOp::Add).is_err());
        let fa = Polynomial::var(&PrimeField::new(1_048_583).unwrap(), 2, 0);
        let fb = Polynomial::var(&PrimeField::new(2_147_483_647).unwrap(), 2, 0);
        assert!(matches!(
            poly_arith(&fa, &fb, PolyOp::Add),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn linear_change_examples() {
        let f = q("x0", 2);
        assert_eq!(f.apply_linear_change(&LinearChange::identity(&Rationals, 2)).unwrap(), f);
        assert_eq!(
            f.apply_linear_change(&LinearChange::swap(&Rationals, 2, 0, 1)).unwrap(),
            q("x1", 2)
        );
        let one = Rationals.one();
        let zero = Rationals.zero();
        let shear = LinearChange::new(&Rationals, vec![vec![one.clone(), one.clone()], vec![zero, one.clone()]]).unwrap();
        assert_eq!(
            q("x0^2", 2).apply_linear_change(&shear).unwrap(),
            q("x0^2 + 2*x0*x1 + x1^2", 2)
        );
        assert!(matches!(
            LinearChange::new(&Rationals, vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]),
            Err(Error::SingularChange)
        ));
    }

    #[test]
    fn x0_coefficient_examples() {
        let f = q("x^2 + x*y + z^2", 3);
        let c = f.x0_coefficients();
        assert_eq!(c, vec![q("1", 3), q("y", 3), q("z^2", 3)]);
        let g = q("y^3*z - y*z^3", 3);
        let c = g.x0_coefficients();
        assert!(c[..4].iter().all(|p| p.is_zero()));
        assert_eq!(c[4], g);
        let h = q("(x+y)^2", 3);
        assert_eq!(h.x0_coefficients(), vec![q("1", 3), q("2*y", 3), q("y^2", 3)]);
    }

    #[test]
    fn random_form_examples() {
        let fp = PrimeField::default();
        let c = random_form(&fp, 0, 3, 11);
        assert!(c.is_constant() && !c.is_zero());
        assert_eq!(random_form(&fp, 3, 4, 5), random_form(&fp, 3, 4, 5));
        assert_eq!(random_form(&fp, 3, 4, 5).len(), 20);
        let r = random_form(&Rationals, 3, 4, 5);
        assert!(r.is_homogeneous() && r.degree() == Some(3));
    }

    #[test]
    fn exact_division() {
        let f = q("x^2 - y^2", 3);
        assert_eq!(f.exact_div(&q("x - y", 3)), Some(q("x + y", 3)));
        assert_eq!(f.exact_div(&q("x - z", 3)), None);
    }

    #[test]
    fn composition_law() {
        let fld = Rationals;
        let l1 = LinearChange::random(&fld, 3, 1);
        let l2 = LinearChange::random(&fld, 3, 2);
        let f = q("x^2*y - 3*z^3 + x*y*z", 3);
        let lhs = f.apply_linear_change(&l1.compose(&l2)).unwrap();
        let rhs = f.apply_linear_change(&l2).unwrap().apply_linear_change(&l1).unwrap();
        assert_eq!(lhs, rhs);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rationals>> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -20i64..20), 0..6).prop_map(|ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c]), Rationals.from_i64(k)))
                .collect();
            Polynomial::from_terms(&Rationals, 3, terms)
        })
    }

    proptest! {
        #[test]
        fn change_then_inverse_is_identity(f in arb_poly(), seed in 0u64..1000) {
            let l = LinearChange::random(&Rationals, 3, seed);
            let g = f.apply_linear_change(&l).unwrap().apply_linear_change(&l.inverse()).unwrap();
            prop_assert_eq!(g, f);
        }

        #[test]
        fn x0_coefficients_round_trip(f in arb_poly()) {
            let c = f.x0_coefficients();
            prop_assert_eq!(Polynomial::from_x0_coefficients(&Rationals, 3, &c), f);
        }

        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert!(f.sub(&f).is_zero());
        }
    }
}
