//! Graded components of a homogeneous ideal by linear algebra.
//!
//! `[I]_d` is spanned by `x_i [I]_{d-1}` together with the generators of
//! degree `d`; each component is kept in reduced echelon form over the
//! degree-`d` monomials listed lex-descending, so its pivots are exactly the
//! lex-leading monomials of the component.

use std::collections::BTreeMap;

use crate::algebra::field::Field;
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, MonomialBasis};

pub struct GradedPieces<F: Field> {
    field: F,
    nvars: usize,
    gens: BTreeMap<usize, Vec<Polynomial<F>>>,
    bases: Vec<MonomialBasis>,
    pieces: Vec<Echelon<F>>,
}

impl<F: Field> GradedPieces<F> {
    pub fn new(field: &F, nvars: usize, generators: &[Polynomial<F>]) -> Result<Self> {
        let mut gens: BTreeMap<usize, Vec<Polynomial<F>>> = BTreeMap::new();
        for g in generators.iter().filter(|g| !g.is_zero()) {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous(g.to_string()));
            }
            gens.entry(g.degree().unwrap()).or_default().push(g.clone());
        }
        Ok(GradedPieces {
            field: field.clone(),
            nvars,
            gens,
            bases: Vec::new(),
            pieces: Vec::new(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    fn ensure(&mut self, d: usize) {
        while self.pieces.len() <= d {
            let e = self.pieces.len();
            let basis = MonomialBasis::lex(self.nvars, e);
            let mut ech = Echelon::new(&self.field, basis.len());
            if e > 0 {
                let prev_basis = &self.bases[e - 1];
                let prev = &self.pieces[e - 1];
                let maps: Vec<Vec<usize>> = (0..self.nvars)
                    .map(|i| {
                        let xi = Monomial::var(self.nvars, i);
                        prev_basis
                            .monomials()
                            .iter()
                            .map(|m| basis.index_of(&m.mul(&xi)).unwrap())
                            .collect()
                    })
                    .collect();
                for row in prev.rows() {
                    for map in &maps {
                        let mut v = vec![self.field.zero(); basis.len()];
                        for (k, c) in row.iter().enumerate() {
                            if !self.field.is_zero(c) {
                                v[map[k]] = c.clone();
                            }
                        }
                        ech.insert(v);
                    }
                }
            }
            if let Some(gs) = self.gens.get(&e) {
                for g in gs {
                    ech.insert(basis.vector(g));
                }
            }
            self.bases.push(basis);
            self.pieces.push(ech);
        }
    }

    /// `dim [I]_d`.
    pub fn dim(&mut self, d: usize) -> usize {
        self.ensure(d);
        self.pieces[d].rank()
    }

    pub fn piece(&mut self, d: usize) -> (&MonomialBasis, &Echelon<F>) {
        self.ensure(d);
        (&self.bases[d], &self.pieces[d])
    }

    /// Basis of `[I]_d` as polynomials.
    pub fn basis_polynomials(&mut self, d: usize) -> Vec<Polynomial<F>> {
        self.ensure(d);
        let (b, e) = (&self.bases[d], &self.pieces[d]);
        e.rows()
            .iter()
            .map(|r| b.polynomial(&self.field, self.nvars, r))
            .collect()
    }

    /// Lex-leading monomials of `[I]_d`, i.e. `[in_lex(I)]_d`.
    pub fn lex_leading_monomials(&mut self, d: usize) -> Vec<Monomial> {
        self.ensure(d);
        let b = &self.bases[d];
        let mut v: Vec<Monomial> = self.pieces[d].pivots().iter().map(|&c| b.monomials()[c]).collect();
        v.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
        v
    }

    pub fn contains(&mut self, f: &Polynomial<F>) -> bool {
        let Some(d) = f.degree() else { return true };
        if !f.is_homogeneous() {
            return false;
        }
        self.ensure(d);
        let v = self.bases[d].vector(f);
        self.pieces[d].contains(v)
    }
}
