use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::monomial::{default_names, monomials_of_degree, Monomial, MonomialOrder};

/// Monomial ideal stored by its minimal generators, sorted lex-descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut v: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(v.iter().all(|m| m.nvars() == nvars));
        // ascending degree so that divisors come first
        v.sort_by(|a, b| a.degree().cmp(&b.degree()).then(MonomialOrder::Lex.cmp(b, a)));
        v.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(v.len());
        for m in v {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
        MonomialIdeal { nvars, gens: min }
    }

    pub fn from_exponents(nvars: usize, exps: &[&[u32]]) -> Self {
        Self::new(nvars, exps.iter().map(|e| Monomial::from_exps(e)))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![] }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The irrelevant maximal ideal `(x0, ..., x_{n-1})`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_generator_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exp(i) > 0 && g.exp(i) as usize == g.degree())
        })
    }

    /// Generators of degree at most `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self.gens.iter().filter(|g| g.degree() <= cap).copied().collect(),
        }
    }

    /// Degree-`t` monomials of the ideal, lex-descending.
    pub fn monomials_in_degree(&self, t: usize) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, t)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    pub fn colon_monomial(&self, m: &Monomial) -> Self {
        Self::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let l = g.lcm(m);
                m.div(&l).expect("m divides lcm")
            }),
        )
    }

    /// `M : x0^k`.
    pub fn colon_x0_power(&self, k: u32) -> Self {
        Self::new(
            self.nvars,
            self.gens.iter().map(|g| {
                let mut h = *g;
                h.set_exp(0, g.exp(0).saturating_sub(k));
                h
            }),
        )
    }

    pub fn colon(&self, other: &MonomialIdeal) -> Self {
        if other.is_zero() {
            return Self::unit(self.nvars);
        }
        other
            .gens
            .iter()
            .map(|m| self.colon_monomial(m))
            .reduce(|a, b| a.intersection(&b))
            .unwrap()
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Self {
        let mut v = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                v.push(a.lcm(b));
            }
        }
        Self::new(self.nvars, v)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).copied())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        let mut v = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                v.push(a.mul(b));
            }
        }
        Self::new(self.nvars, v)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(names)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn generator_strings(&self) -> Vec<String> {
        let names = default_names(self.nvars);
        self.gens.iter().map(|g| g.display_with(&names)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_names(self.nvars)))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generator_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(e[0].len(), e)
    }

    #[test]
    fn minimalization_and_order() {
        let m = mi(&[&[1, 1, 0], &[2, 0, 0], &[2, 1, 0], &[0, 0, 3]]);
        assert_eq!(m.to_string(), "(x^2, x*y, z^3)");
        assert!(m.contains(&Monomial::from_exps(&[1, 2, 0])));
        assert!(!m.is_artinian());
        assert!(mi(&[&[2, 0], &[0, 5]]).is_artinian());
    }

    #[test]
    fn colon_examples() {
        let m = mi(&[&[4, 0, 0], &[3, 1, 0]]);
        assert_eq!(m.colon_x0_power(3), mi(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(m.colon_x0_power(0), m);
        let x2 = mi(&[&[2, 0]]);
        assert_eq!(x2.colon_monomial(&Monomial::from_exps(&[1, 0])), mi(&[&[1, 0]]));
        assert_eq!(x2.colon(&MonomialIdeal::unit(2)), x2);
    }

    #[test]
    fn intersection_example() {
        let a = mi(&[&[1, 0]]);
        let b = mi(&[&[0, 1]]);
        assert_eq!(a.intersection(&b), mi(&[&[1, 1]]));
    }
}
