//! Dense exact linear algebra over a [`Field`].

use std::collections::HashMap;

use crate::algebra::field::Field;
use crate::algebra::monomial::{monomials_of_degree, Monomial};
use crate::algebra::poly::Polynomial;

pub type Matrix<E> = Vec<Vec<E>>;

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(&a[r][col])) else {
            return field.zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[col][col]);
        let inv = field.inv(&a[col][col]).unwrap();
        for r in col + 1..n {
            if field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = field.neg(&field.mul(&a[r][col], &inv));
            let (top, bottom) = a.split_at_mut(r);
            field.axpy(&mut bottom[0][col..], &factor, &top[col][col..]);
        }
    }
    det
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.len();
    let mut a: Matrix<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !field.is_zero(&a[r][col]))?;
        a.swap(piv, col);
        let inv = field.inv(&a[col][col]).unwrap();
        for x in a[col].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !field.is_zero(&row[col]) {
                let factor = field.neg(&row[col]);
                field.axpy(row, &factor, &pivot_row);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    a.iter()
        .map(|row| {
            let mut out = vec![field.zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if !field.is_zero(x) {
                    field.axpy(&mut out, x, &b[k]);
                }
            }
            out
        })
        .collect()
}

/// Incrementally maintained reduced row echelon form.
///
/// Pivot columns are the leftmost nonzero entries, so when columns are listed
/// in decreasing monomial order the pivots are the leading monomials of the
/// row space.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    pivot_of_col: HashMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Echelon {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: HashMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` modulo the current row space.
    pub fn reduce(&self, mut row: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&row[pc]) {
                let c = f.neg(&row[pc]);
                f.axpy(&mut row[pc..], &c, &r[pc..]);
            }
        }
        row
    }

    pub fn contains(&self, row: Vec<F::Elem>) -> bool {
        let f = &self.field;
        self.reduce(row).iter().all(|x| f.is_zero(x))
    }

    /// Adds a row; returns `true` when it enlarged the row space.
    pub fn insert(&mut self, row: Vec<F::Elem>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let f = self.field.clone();
        let mut row = self.reduce(row);
        let Some(pc) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[pc]).unwrap();
        for x in row[pc..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in self.rows.iter_mut() {
            if !f.is_zero(&r[pc]) {
                let c = f.neg(&r[pc]);
                f.axpy(&mut r[pc..], &c, &row[pc..]);
            }
        }
        self.pivot_of_col.insert(pc, self.rows.len());
        self.rows.push(row);
        self.pivots.push(pc);
        true
    }

    pub fn pivot_row(&self, col: usize) -> Option<&[F::Elem]> {
        self.pivot_of_col.get(&col).map(|&i| self.rows[i].as_slice())
    }
}

pub fn rank<F: Field>(field: &F, rows: impl IntoIterator<Item = Vec<F::Elem>>, ncols: usize) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{v : row . v = 0 for every row}`.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    let pivot_set: std::collections::HashSet<usize> = e.pivots().iter().copied().collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (r, &pc) in e.rows().iter().zip(e.pivots()) {
            v[pc] = field.neg(&r[free]);
        }
        out.push(v);
    }
    out
}

/// Index of each monomial of a fixed degree within a chosen column order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    /// Degree-`d` monomials in lex-descending order.
    pub fn lex(nvars: usize, d: usize) -> Self {
        Self::from_list(monomials_of_degree(nvars, d))
    }

    pub fn from_list(monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coefficient vector; panics if `f` has a term outside the basis.
    pub fn vector<F: Field>(&self, f: &Polynomial<F>) -> Vec<F::Elem> {
        let field = f.field();
        let mut v = vec![field.zero(); self.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn polynomial<F: Field>(&self, field: &F, nvars: usize, v: &[F::Elem]) -> Polynomial<F> {
        let terms = self
            .monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Polynomial::from_terms(field, nvars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    fn qm(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_and_inverse() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&Rationals, &m), Rationals.from_i64(1));
        let inv = inverse(&Rationals, &m).unwrap();
        assert_eq!(inv, qm(&[&[1, -1], &[-1, 2]]));
        assert_eq!(mat_mul(&Rationals, &m, &inv), qm(&[&[1, 0], &[0, 1]]));
        let s = qm(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(determinant(&Rationals, &s), Rationals.zero());
        assert!(inverse(&Rationals, &s).is_none());
        let p = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&Rationals, &p), Rationals.from_i64(-1));
    }

    #[test]
    fn echelon_and_kernel() {
        let f = PrimeField::new(101).unwrap();
        let rows: Vec<Vec<u64>> = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, rows.clone(), 3), 2);
        let k = kernel(&f, &rows, 3);
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&k[0]).fold(0, |acc, (a, b)| f.mul_add(a, b, &acc));
            assert_eq!(dot, 0);
        }
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(vec![0, 0, 5]));
        assert!(e.insert(vec![0, 3, 1]));
        assert_eq!(e.pivots(), &[2, 1]);
        assert!(e.contains(vec![0, 6, 7]));
        assert!(!e.contains(vec![1, 0, 0]));
    }
}
