use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of ring variables accepted from users (P^12).
pub const MAX_VARS: usize = 13;
/// Exponent slots; one more than [`MAX_VARS`] leaves room for an auxiliary
/// elimination variable.
pub(crate) const SLOTS: usize = MAX_VARS + 2;

/// A monomial `x0^a0 * ... * x_{n-1}^a_{n-1}` with its degree cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; SLOTS],
    nvars: u8,
    deg: u16,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= SLOTS, "too many variables");
        Monomial {
            exps: [0; SLOTS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.len() > SLOTS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e > u8::MAX as u32 {
                return Err(Error::invalid(format!("exponent {e} exceeds 255")));
            }
            m.exps[i] = e as u8;
            m.deg += e as u16;
        }
        Ok(m)
    }

    /// Panicking constructor for literals.
    pub fn from_exps(exps: &[u32]) -> Self {
        Self::new(exps).expect("valid monomial")
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.exps[..self.nvars()].iter().map(|&e| e as u32).collect()
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.deg = self.deg - self.exps[i] as u16 + e as u16;
        self.exps[i] = e as u8;
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars() {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.nvars()).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.nvars() {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        m.deg = 0;
        for i in 0..self.nvars() {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u16;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        m.deg = 0;
        for i in 0..self.nvars() {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u16;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars()).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Degree in the variables `x1..x_{n-1}`, i.e. the order of vanishing at `(1:0:...:0)`.
    pub fn tail_degree(&self) -> usize {
        self.degree() - self.exp(0) as usize
    }

    /// Same exponents in a ring with `nvars` variables (extra slots are zero).
    pub fn with_nvars(&self, nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for i in 0..self.nvars().min(nvars) {
            m.exps[i] = self.exps[i];
            m.deg += self.exps[i] as u16;
        }
        m
    }

    /// Insert `k` fresh variables in front (exponent zero).
    pub(crate) fn shift_right(&self, k: usize) -> Monomial {
        let mut m = Monomial::one(self.nvars() + k);
        for i in 0..self.nvars() {
            m.exps[i + k] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    /// Drop the first `k` variables, which must have exponent zero.
    pub(crate) fn shift_left(&self, k: usize) -> Monomial {
        debug_assert!((0..k).all(|i| self.exps[i] == 0));
        let mut m = Monomial::one(self.nvars() - k);
        for i in k..self.nvars() {
            m.exps[i - k] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    pub(crate) fn permute(&self, perm: &[usize]) -> Monomial {
        // variable i goes to slot perm[i]
        let mut m = *self;
        for i in 0..self.nvars() {
            m.exps[perm[i]] = self.exps[i];
        }
        m
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(names[i].clone()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Default variable names: `x,y,z,w` for up to four variables, `x0..` beyond.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars())))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars())))
    }
}

/// Monomial orders, all with `x0 > x1 > ... > x_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order eliminating the first `block` variables: compare the degree in
    /// the block first, then fall back to degrevlex on the whole monomial.
    Elim { block: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Elim { block } => {
                let da: u32 = (0..block).map(|i| a.exp(i)).sum();
                let db: u32 = (0..block).map(|i| b.exp(i)).sum();
                da.cmp(&db).then_with(|| degrevlex_cmp(a, b))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

/// Checked comparison; rejects monomials from different rings.
pub fn monomial_compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            got: b.nvars(),
        });
    }
    Ok(ord.cmp(a, b))
}

#[inline]
fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps[..a.nvars()].cmp(&b.exps[..b.nvars()])
}

#[inline]
fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {
            for i in (0..a.nvars()).rev() {
                match a.exps[i].cmp(&b.exps[i]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

/// All monomials of degree `d` in `nvars` variables, lex-descending.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, d as u32);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        out.push(Monomial::from_exps(cur));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

/// `C(n, k)` as `u128`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(top, k)` for a possibly negative top, zero when `top < k`.
pub fn binomial_i(top: i64, k: i64) -> i64 {
    if k < 0 || top < k {
        0
    } else {
        binomial(top as u64, k as u64) as i64
    }
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: usize) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binomial((d + nvars - 1) as u64, (nvars - 1) as u64) as usize
}
