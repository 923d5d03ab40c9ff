//! Buchberger's algorithm with the Gebauer–Möller pair criteria and sugar
//! selection, operating on term lists sorted in the working order.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::field::Field;
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::Polynomial;
use crate::error::{BudgetStats, Error, Result};

/// Resource limits turning runaway computations into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub pair_cap: usize,
    /// Largest coefficient size in bits (rationals only).
    pub bit_cap: u64,
    pub time_cap_ms: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            pair_cap: 2_000_000,
            bit_cap: 1 << 16,
            time_cap_ms: None,
        }
    }
}

pub(crate) type Terms<E> = Vec<(Monomial, E)>;

pub(crate) fn sort_terms<E>(terms: &mut Terms<E>, ord: MonomialOrder) {
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
}

pub(crate) fn to_terms<F: Field>(p: &Polynomial<F>, ord: MonomialOrder) -> Terms<F::Elem> {
    let mut t = p.terms().to_vec();
    if ord != MonomialOrder::DegRevLex {
        sort_terms(&mut t, ord);
    }
    t
}

pub(crate) fn from_terms<F: Field>(field: &F, nvars: usize, t: Terms<F::Elem>) -> Polynomial<F> {
    Polynomial::from_terms(field, nvars, t)
}

/// `p - c * m * g`, all sorted descending in `ord`.
pub(crate) fn sub_mul<F: Field>(
    field: &F,
    ord: MonomialOrder,
    p: &[(Monomial, F::Elem)],
    c: &F::Elem,
    m: &Monomial,
    g: &[(Monomial, F::Elem)],
) -> Terms<F::Elem> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let negc = field.neg(c);
    while i < p.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match ord.cmp(&p[i].0, &gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, field.mul(&negc, &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.mul_add(&negc, &g[j].1, &p[i].1);
                if !field.is_zero(&v) {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    for t in &g[j..] {
        out.push((t.0.mul(m), field.mul(&negc, &t.1)));
    }
    out
}

fn make_monic<F: Field>(field: &F, t: &mut Terms<F::Elem>) {
    if let Some((_, lc)) = t.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc).unwrap();
            for (_, c) in t.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
    }
}

/// Divisor lookup over leading monomials.
pub(crate) fn find_divisor(lms: &[Monomial], active: &[bool], m: &Monomial) -> Option<usize> {
    lms.iter()
        .zip(active)
        .position(|(l, &a)| a && l.divides(m))
}

/// Full reduction of `p` by `basis` (monic, sorted in `ord`).
pub(crate) fn normal_form_terms<F: Field>(
    field: &F,
    ord: MonomialOrder,
    mut p: Terms<F::Elem>,
    basis: &[Terms<F::Elem>],
    lms: &[Monomial],
    active: &[bool],
) -> Terms<F::Elem> {
    let mut rem: Terms<F::Elem> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = p[start].clone();
        match find_divisor(lms, active, &m) {
            Some(k) => {
                let g = &basis[k];
                let q = g[0].0.div(&m).unwrap();
                let coef = field.div(&c, &g[0].1).unwrap();
                p = sub_mul(field, ord, &p[start..], &coef, &q, g);
                start = 0;
            }
            None => {
                rem.push((m, c));
                start += 1;
            }
        }
    }
    rem
}

/// Reduces only while the leading term is divisible.
fn top_reduce<F: Field>(
    field: &F,
    ord: MonomialOrder,
    mut p: Terms<F::Elem>,
    basis: &[Terms<F::Elem>],
    lms: &[Monomial],
    active: &[bool],
) -> Terms<F::Elem> {
    while let Some((m, c)) = p.first().cloned() {
        match find_divisor(lms, active, &m) {
            Some(k) => {
                let g = &basis[k];
                let q = g[0].0.div(&m).unwrap();
                let coef = field.div(&c, &g[0].1).unwrap();
                p = sub_mul(field, ord, &p, &coef, &q, g);
            }
            None => break,
        }
    }
    p
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: usize,
    alive: bool,
}

struct State<F: Field> {
    polys: Vec<Terms<F::Elem>>,
    lms: Vec<Monomial>,
    sugar: Vec<usize>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    heap: BinaryHeap<Reverse<(usize, usize, usize)>>,
    processed: usize,
    max_bits: u64,
}

impl<F: Field> State<F> {
    fn pending(&self) -> usize {
        self.pairs.iter().filter(|p| p.alive).count()
    }

    fn stats(&self, started: Instant) -> BudgetStats {
        BudgetStats {
            pairs_processed: self.processed,
            pairs_pending: self.pending(),
            basis_size: self.active.iter().filter(|a| **a).count(),
            max_coeff_bits: self.max_bits,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    fn push_pair(&mut self, p: Pair) {
        let idx = self.pairs.len();
        self.heap.push(Reverse((p.sugar, p.lcm.degree(), idx)));
        self.pairs.push(p);
    }

    /// Gebauer–Möller update after appending `h`.
    fn insert(&mut self, h: Terms<F::Elem>, sugar: usize) {
        let hidx = self.polys.len();
        let hl = h[0].0;
        self.polys.push(h);
        self.lms.push(hl);
        self.sugar.push(sugar);
        self.active.push(true);

        let pair_sugar = |s: &Self, i: usize, l: &Monomial| {
            let a = s.sugar[i] + l.degree() - s.lms[i].degree();
            let b = sugar + l.degree() - hl.degree();
            a.max(b)
        };

        // candidate pairs with h
        let mut cand: Vec<(usize, Monomial, bool)> = (0..hidx)
            .filter(|&i| self.active[i])
            .map(|i| {
                let l = self.lms[i].lcm(&hl);
                (i, l, self.lms[i].is_coprime(&hl))
            })
            .collect();

        // criterion M: drop (i,h) when some (k,h) has an lcm properly dividing it
        let lcms: Vec<Monomial> = cand.iter().map(|c| c.1).collect();
        cand.retain(|(_, l, _)| !lcms.iter().any(|o| o.divides(l) && o != l));

        // criterion F: one pair per lcm; drop the class if any member is coprime
        cand.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&a.1, &b.1).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        let mut k = 0;
        while k < cand.len() {
            let mut e = k;
            let mut any_coprime = false;
            while e < cand.len() && cand[e].1 == cand[k].1 {
                any_coprime |= cand[e].2;
                e += 1;
            }
            if !any_coprime {
                kept.push((cand[k].0, cand[k].1));
            }
            k = e;
        }

        // criterion B: old pairs whose lcm is divisible by lm(h) strictly
        for p in self.pairs.iter_mut().filter(|p| p.alive) {
            if hl.divides(&p.lcm) {
                let li = self.lms[p.i].lcm(&hl);
                let lj = self.lms[p.j].lcm(&hl);
                if li != p.lcm && lj != p.lcm {
                    p.alive = false;
                }
            }
        }

        for (i, l) in kept {
            let s = pair_sugar(self, i, &l);
            self.push_pair(Pair {
                i,
                j: hidx,
                lcm: l,
                sugar: s,
                alive: true,
            });
        }

        // elements whose leading monomial h divides leave the active set
        for i in 0..hidx {
            if self.active[i] && hl.divides(&self.lms[i]) {
                self.active[i] = false;
            }
        }
    }
}

/// Reduced Gröbner basis, each element monic, sorted by leading monomial descending.
///
/// With `degree_bound = Some(d)` and homogeneous input the result is a
/// truncated basis, correct for every component of degree at most `d`.
pub fn buchberger<F: Field>(
    field: &F,
    nvars: usize,
    generators: &[Polynomial<F>],
    ord: MonomialOrder,
    budget: &Budget,
    degree_bound: Option<usize>,
) -> Result<Vec<Polynomial<F>>> {
    let started = Instant::now();
    let homogeneous = generators.iter().all(|g| g.is_homogeneous());
    let bound = if homogeneous { degree_bound } else { None };
    let mut st: State<F> = State {
        polys: Vec::new(),
        lms: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        heap: BinaryHeap::new(),
        processed: 0,
        max_bits: 0,
    };

    let mut input: Vec<(Terms<F::Elem>, usize)> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (to_terms(g, ord), g.degree().unwrap()))
        .collect();
    input.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| ord.cmp(&a.0[0].0, &b.0[0].0)));

    for (t, sugar) in input {
        if let Some(d) = bound {
            if sugar > d {
                continue;
            }
        }
        let mut r = top_reduce(field, ord, t, &st.polys, &st.lms, &st.active);
        if r.is_empty() {
            continue;
        }
        make_monic(field, &mut r);
        st.insert(r, sugar);
    }

    let time_cap = budget.time_cap_ms.map(Duration::from_millis);
    while let Some(Reverse((_, _, idx))) = st.heap.pop() {
        if !st.pairs[idx].alive {
            continue;
        }
        st.pairs[idx].alive = false;
        let Pair { i, j, lcm, sugar, .. } = st.pairs[idx].clone();
        if let Some(d) = bound {
            if lcm.degree() > d {
                continue;
            }
        }
        st.processed += 1;
        if st.processed > budget.pair_cap {
            return Err(Error::BudgetExhausted {
                reason: format!("pair cap {}", budget.pair_cap),
                stats: st.stats(started),
            });
        }
        if let Some(cap) = time_cap {
            if started.elapsed() > cap {
                return Err(Error::BudgetExhausted {
                    reason: format!("time cap {} ms", cap.as_millis()),
                    stats: st.stats(started),
                });
            }
        }
        let (gi, gj) = (&st.polys[i], &st.polys[j]);
        let mi = gi[0].0.div(&lcm).unwrap();
        let mj = gj[0].0.div(&lcm).unwrap();
        // both are monic
        let si: Terms<F::Elem> = gi[1..].iter().map(|(m, c)| (m.mul(&mi), c.clone())).collect();
        let s = sub_mul(field, ord, &si, &field.one(), &mj, &gj[1..]);
        let mut r = top_reduce(field, ord, s, &st.polys, &st.lms, &st.active);
        if r.is_empty() {
            continue;
        }
        make_monic(field, &mut r);
        let bits = r.iter().map(|(_, c)| field.bits(c)).max().unwrap_or(0);
        st.max_bits = st.max_bits.max(bits);
        if bits > budget.bit_cap {
            return Err(Error::BudgetExhausted {
                reason: format!("coefficient size cap {} bits", budget.bit_cap),
                stats: st.stats(started),
            });
        }
        st.insert(r, sugar);
    }

    // interreduce the minimal leading set
    let mut keep: Vec<usize> = (0..st.polys.len()).filter(|&i| st.active[i]).collect();
    keep.sort_by(|&a, &b| ord.cmp(&st.lms[a], &st.lms[b]));
    let basis: Vec<Terms<F::Elem>> = keep.iter().map(|&i| st.polys[i].clone()).collect();
    let lms: Vec<Monomial> = keep.iter().map(|&i| st.lms[i]).collect();
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let mut act = vec![true; basis.len()];
        act[k] = false;
        let head = basis[k][0].clone();
        let mut tail = normal_form_terms(field, ord, basis[k][1..].to_vec(), &basis, &lms, &act);
        let mut full = vec![head];
        full.append(&mut tail);
        make_monic(field, &mut full);
        out.push(from_terms(field, nvars, full));
    }
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Rationals;
    use crate::algebra::parse::parse_polynomial;

    fn q(s: &str, n: usize) -> Polynomial<Rationals> {
        parse_polynomial(&Rationals, s, n).unwrap()
    }

    #[test]
    fn linear_example_lex() {
        let gb = buchberger(
            &Rationals,
            3,
            &[q("x - y", 3), q("y - z", 3)],
            MonomialOrder::Lex,
            &Budget::default(),
            None,
        )
        .unwrap();
        assert_eq!(gb, vec![q("x - z", 3), q("y - z", 3)]);
    }

    #[test]
    fn principal_is_monic() {
        let gb = buchberger(&Rationals, 2, &[q("2*x^2 + 4*y^2", 2)], MonomialOrder::DegRevLex, &Budget::default(), None).unwrap();
        assert_eq!(gb, vec![q("x^2 + 2*y^2", 2)]);
    }

    #[test]
    fn budget_is_enforced() {
        let gens = [q("x^3 - y*z^2", 3), q("y^3 - x*z^2", 3), q("x*y - z^2", 3)];
        let tight = Budget {
            pair_cap: 1,
            ..Budget::default()
        };
        match buchberger(&Rationals, 3, &gens, MonomialOrder::Lex, &tight, None) {
            Err(Error::BudgetExhausted { stats, .. }) => assert!(stats.pairs_processed > 1),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
