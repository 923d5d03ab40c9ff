use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::field::Field;
use crate::algebra::monomial::{default_names, Monomial, MonomialOrder, MAX_VARS};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::buchberger::{buchberger, normal_form_terms, to_terms, Budget, Terms};
use crate::groebner::monomial_ideal::MonomialIdeal;

/// A reduced Gröbner basis, possibly truncated at a degree.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub order: MonomialOrder,
    /// `None` for a complete basis.
    pub truncated_at: Option<usize>,
    polys: Vec<Polynomial<F>>,
    terms: Vec<Terms<F::Elem>>,
    lms: Vec<Monomial>,
}

impl<F: Field> GroebnerBasis<F> {
    fn new(order: MonomialOrder, truncated_at: Option<usize>, polys: Vec<Polynomial<F>>) -> Self {
        let terms: Vec<_> = polys.iter().map(|p| to_terms(p, order)).collect();
        let lms = terms.iter().map(|t| t[0].0).collect();
        GroebnerBasis {
            order,
            truncated_at,
            polys,
            terms,
            lms,
        }
    }

    pub fn polynomials(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Covers every degree up to `d`.
    pub fn valid_to(&self, d: Option<usize>) -> bool {
        match (self.truncated_at, d) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(t), Some(d)) => d <= t,
        }
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let field = f.field();
        let active = vec![true; self.lms.len()];
        let t = normal_form_terms(field, self.order, to_terms(f, self.order), &self.terms, &self.lms, &active);
        Polynomial::from_terms(field, f.nvars(), t)
    }

    pub fn initial_ideal(&self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::new(nvars, self.lms.iter().copied())
    }
}

type CacheSlot<F> = Arc<Mutex<Option<Arc<GroebnerBasis<F>>>>>;

/// Whether an ideal is known to be saturated with respect to the irrelevant ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Saturation {
    Unknown,
    Saturated,
}

/// An ideal given by generators, with lazily computed Gröbner bases.
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<Polynomial<F>>,
    homogeneous: bool,
    saturated: Saturation,
    budget: Budget,
    gb_cache: Mutex<HashMap<MonomialOrder, CacheSlot<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let cache = self.gb_cache.lock().unwrap().clone();
        Ideal {
            field: self.field.clone(),
            nvars: self.nvars,
            generators: self.generators.clone(),
            homogeneous: self.homogeneous,
            saturated: self.saturated,
            budget: self.budget,
            gb_cache: Mutex::new(cache),
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(field: &F, nvars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if nvars > MAX_VARS + 1 {
            return Err(Error::TooManyVariables(nvars));
        }
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(format!("{} vs {}", field.spec(), g.field().spec())));
            }
        }
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            field: field.clone(),
            nvars,
            generators,
            homogeneous,
            saturated: Saturation::Unknown,
            budget: Budget::default(),
            gb_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(field: &F, nvars: usize) -> Self {
        Self::new(field, nvars, vec![]).unwrap()
    }

    pub fn unit(field: &F, nvars: usize) -> Self {
        Self::new(field, nvars, vec![Polynomial::one(field, nvars)]).unwrap()
    }

    pub fn from_monomial_ideal(field: &F, m: &MonomialIdeal) -> Self {
        let gens = m
            .generators()
            .iter()
            .map(|g| Polynomial::monomial(field, *g))
            .collect();
        Self::new(field, m.nvars(), gens).unwrap()
    }

    /// The irrelevant ideal `(x0, ..., x_{n-1})`.
    pub fn maximal(field: &F, nvars: usize) -> Self {
        Self::from_monomial_ideal(field, &MonomialIdeal::maximal(nvars))
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub(crate) fn mark_saturated(mut self) -> Self {
        self.saturated = Saturation::Saturated;
        self
    }

    pub fn saturation_flag(&self) -> Saturation {
        self.saturated
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub(crate) fn require_homogeneous(&self, what: &str) -> Result<()> {
        if self.homogeneous {
            Ok(())
        } else {
            Err(Error::NonHomogeneous(what.to_string()))
        }
    }

    pub(crate) fn check_same_ring(&self, other: &Ideal<F>) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field.spec(), other.field.spec())));
        }
        Ok(())
    }

    fn slot(&self, ord: MonomialOrder) -> CacheSlot<F> {
        self.gb_cache
            .lock()
            .unwrap()
            .entry(ord)
            .or_insert_with(|| Arc::new(Mutex::new(None)))
            .clone()
    }

    /// Reduced Gröbner basis for `ord`, computed once and cached.
    pub fn groebner_basis(&self, ord: MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner_basis_to(ord, None)
    }

    /// Basis valid in degrees at most `bound` (homogeneous ideals only truncate).
    pub fn groebner_basis_to(&self, ord: MonomialOrder, bound: Option<usize>) -> Result<Arc<GroebnerBasis<F>>> {
        let bound = if self.homogeneous { bound } else { None };
        let slot = self.slot(ord);
        let mut guard = slot.lock().unwrap();
        if let Some(gb) = guard.as_ref() {
            if gb.valid_to(bound) {
                return Ok(gb.clone());
            }
        }
        let polys = buchberger(&self.field, self.nvars, &self.generators, ord, &self.budget, bound)?;
        let gb = Arc::new(GroebnerBasis::new(ord, bound, polys));
        *guard = Some(gb.clone());
        Ok(gb)
    }

    pub fn normal_form(&self, f: &Polynomial<F>, ord: MonomialOrder) -> Result<Polynomial<F>> {
        if f.nvars() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: f.nvars(),
            });
        }
        let bound = if self.homogeneous && f.is_homogeneous() { f.degree() } else { None };
        Ok(self.groebner_basis_to(ord, bound)?.normal_form(f))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f, MonomialOrder::DegRevLex)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals via their reduced degrevlex bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_same_ring(other)?;
        let a = self.groebner_basis(MonomialOrder::DegRevLex)?;
        let b = other.groebner_basis(MonomialOrder::DegRevLex)?;
        Ok(a.polynomials() == b.polynomials())
    }

    pub fn initial_ideal(&self, ord: MonomialOrder) -> Result<MonomialIdeal> {
        Ok(self.groebner_basis(ord)?.initial_ideal(self.nvars))
    }

    pub fn initial_ideal_to(&self, ord: MonomialOrder, bound: usize) -> Result<MonomialIdeal> {
        Ok(self
            .groebner_basis_to(ord, Some(bound))?
            .initial_ideal(self.nvars)
            .truncate(bound))
    }

    /// Least degree of a nonzero element.
    pub fn initial_degree(&self) -> Option<usize> {
        self.generators.iter().filter_map(|g| g.degree()).min()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(Ideal::new(&self.field, self.nvars, gens)?.with_budget(self.budget))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ok(Ideal::new(&self.field, self.nvars, gens)?.with_budget(self.budget))
    }

    pub fn power(&self, m: usize) -> Result<Ideal<F>> {
        let mut acc = Ideal::unit(&self.field, self.nvars).with_budget(self.budget);
        for _ in 0..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The same ideal with generators replaced by a minimal-looking reduced basis.
    pub fn with_generators_from_gb(&self) -> Result<Ideal<F>> {
        let gb = self.groebner_basis(MonomialOrder::DegRevLex)?;
        let mut out = Ideal::new(&self.field, self.nvars, gb.polynomials().to_vec())?.with_budget(self.budget);
        out.saturated = self.saturated;
        Ok(out)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_names(self.nvars)))
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
