//! Macaulay representations and predicates on integer sequences.

use serde::Serialize;

use crate::algebra::monomial::binomial;

/// Behaviour after the listed values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Tail {
    Zero,
    Constant(u64),
    Unknown,
}

/// `values[k]` is the entry at index `offset + k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntSequence {
    pub offset: usize,
    pub values: Vec<u64>,
    pub tail: Tail,
}

impl IntSequence {
    pub fn finite(values: Vec<u64>) -> Self {
        IntSequence {
            offset: 0,
            values,
            tail: Tail::Zero,
        }
    }

    pub fn with_tail(values: Vec<u64>, tail: Tail) -> Self {
        IntSequence { offset: 0, values, tail }
    }

    /// Entries between the first and the last nonzero value, with the zero
    /// tail convention; a constant positive tail is kept.
    pub fn positive_support(&self) -> IntSequence {
        let first = self.values.iter().position(|&v| v > 0);
        let Some(first) = first else {
            let tail = match self.tail {
                Tail::Constant(v) if v > 0 => Tail::Constant(v),
                Tail::Unknown => Tail::Unknown,
                _ => Tail::Zero,
            };
            return IntSequence {
                offset: self.offset + self.values.len(),
                values: vec![],
                tail,
            };
        };
        let last = match self.tail {
            Tail::Zero | Tail::Constant(0) => self.values.iter().rposition(|&v| v > 0).unwrap(),
            _ => self.values.len() - 1,
        };
        IntSequence {
            offset: self.offset + first,
            values: self.values[first..=last].to_vec(),
            tail: match self.tail {
                Tail::Constant(0) => Tail::Zero,
                t => t,
            },
        }
    }

    /// `None` when the tail is unknown.
    pub fn is_finite(&self) -> Option<bool> {
        match self.tail {
            Tail::Zero | Tail::Constant(0) => Some(true),
            Tail::Constant(_) => Some(false),
            Tail::Unknown => None,
        }
    }

    /// Last index carrying a nonzero value for a finite sequence.
    pub fn last_nonzero_index(&self) -> Option<usize> {
        if self.is_finite() != Some(true) {
            return None;
        }
        self.values.iter().rposition(|&v| v > 0).map(|k| self.offset + k)
    }
}

/// `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)` with
/// `k_d > k_{d-1} > ... > k_j >= j >= 1`, as `(k_i, i)` pairs from the top.
pub fn macaulay_rep(a: u64, d: u64) -> Vec<(u64, u64)> {
    assert!(d >= 1, "Macaulay representation needs d >= 1");
    let mut rest = a as u128;
    let mut out = Vec::new();
    let mut i = d;
    while rest > 0 && i >= 1 {
        // largest k with C(k, i) <= rest
        let mut k = i;
        while binomial(k + 1, i) <= rest {
            k += 1;
        }
        out.push((k, i));
        rest -= binomial(k, i);
        i -= 1;
    }
    out
}

/// `a^{<d>} = sum C(k_i + 1, i + 1)`; zero for `a = 0`.
pub fn macaulay_growth(a: u64, d: u64) -> u64 {
    macaulay_rep(a, d)
        .into_iter()
        .map(|(k, i)| binomial(k + 1, i + 1) as u64)
        .sum()
}

/// Outcome of a predicate check with the first offending index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub ok: bool,
    pub violation: Option<usize>,
}

impl Check {
    fn pass() -> Self {
        Check { ok: true, violation: None }
    }
    fn fail(at: usize) -> Self {
        Check {
            ok: false,
            violation: Some(at),
        }
    }
}

/// `s(0) = 1` and `s(d+1) <= s(d)^{<d>}` for all `d >= 1` (zero beyond the list).
pub fn is_o_sequence(s: &[u64]) -> Check {
    if s.first() != Some(&1) {
        return Check::fail(0);
    }
    for d in 1..s.len() {
        let next = s.get(d + 1).copied().unwrap_or(0);
        if next > macaulay_growth(s[d], d as u64) {
            return Check::fail(d);
        }
    }
    Check::pass()
}

/// Same test for a sequence with an explicit tail.
pub fn is_o_sequence_seq(s: &IntSequence) -> Check {
    let mut v = s.values.clone();
    if let Tail::Constant(c) = s.tail {
        v.push(c);
        v.push(c);
    }
    is_o_sequence(&v)
}

pub fn first_difference(s: &[u64]) -> Vec<i64> {
    let mut prev = 0i64;
    s.iter()
        .map(|&v| {
            let d = v as i64 - prev;
            prev = v as i64;
            d
        })
        .collect()
}

pub fn is_unimodal(s: &[u64]) -> bool {
    let mut k = 0;
    while k + 1 < s.len() && s[k] <= s[k + 1] {
        k += 1;
    }
    while k + 1 < s.len() && s[k] >= s[k + 1] {
        k += 1;
    }
    k + 1 >= s.len()
}

/// Symmetry of the positive support.
pub fn is_symmetric(s: &[u64]) -> bool {
    let p = IntSequence::finite(s.to_vec()).positive_support().values;
    p.iter().eq(p.iter().rev())
}

/// The first difference is a (nonnegative) O-sequence.
pub fn is_differentiable(s: &[u64]) -> bool {
    let d = first_difference(s);
    if d.iter().any(|&x| x < 0) {
        return false;
    }
    let d: Vec<u64> = d.into_iter().map(|x| x as u64).collect();
    is_o_sequence(&d).ok
}

/// Increasing initial segment (up to and including the first maximum).
pub fn increasing_part(s: &[u64]) -> &[u64] {
    let mut k = 0;
    while k + 1 < s.len() && s[k] < s[k + 1] {
        k += 1;
    }
    &s[..s.len().min(k + 1)]
}

/// Verdict with an explanation; `verdict = None` means undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SiVerdict {
    pub verdict: Option<bool>,
    pub reason: String,
}

/// Finite, nonzero, symmetric O-sequence whose first half (indices
/// `0..ceil(len/2)` of the positive support) has an O-sequence first difference.
pub fn is_si_sequence(s: &IntSequence) -> SiVerdict {
    let verdict = |v: Option<bool>, r: &str| SiVerdict {
        verdict: v,
        reason: r.to_string(),
    };
    match s.is_finite() {
        None => return verdict(None, "tail undetermined"),
        Some(false) => return verdict(Some(false), "not finite"),
        Some(true) => {}
    }
    let p = s.positive_support().values;
    if p.is_empty() {
        return verdict(Some(false), "zero sequence");
    }
    if !p.iter().eq(p.iter().rev()) {
        return verdict(Some(false), "not symmetric");
    }
    if !is_o_sequence(&p).ok {
        return verdict(Some(false), "not an O-sequence");
    }
    let half = &p[..p.len().div_ceil(2)];
    if !is_differentiable(half) {
        return verdict(Some(false), "first half not differentiable");
    }
    verdict(Some(true), "SI-sequence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn macaulay_examples() {
        assert!(macaulay_rep(0, 3).is_empty());
        assert_eq!(macaulay_growth(0, 4), 0);
        assert_eq!(macaulay_rep(13, 3), vec![(5, 3), (3, 2)]);
        assert_eq!(macaulay_growth(13, 3), 19);
        for t in 2..12u64 {
            assert_eq!(macaulay_growth(2 * t + 1, t), 2 * t + 3);
            let full = binomial(t + 2, t) as u64;
            assert_eq!(macaulay_rep(full, t).len(), 1);
        }
    }

    #[test]
    fn o_sequence_examples() {
        assert!(is_o_sequence(&[1, 3, 6, 6, 3, 3, 2]).ok);
        assert_eq!(is_o_sequence(&[1, 2, 4]), Check::fail(1));
        assert_eq!(is_o_sequence(&[1, 0, 1]), Check::fail(1));
        assert!(is_o_sequence(&[1, 3, 6, 10, 12, 13, 13]).ok);
        assert!(!is_o_sequence(&[2, 3]).ok);
    }

    #[test]
    fn sequence_op_examples() {
        assert_eq!(first_difference(&[1, 3, 6, 10, 12, 13]), vec![1, 2, 3, 4, 2, 1]);
        assert!(is_symmetric(&[1, 2, 1]) && is_unimodal(&[1, 2, 1]));
        assert!(!is_symmetric(&[1, 4, 7, 8, 5]));
        assert!(is_unimodal(&[1, 4, 7, 8, 5]));
        assert!(!is_unimodal(&[1, 3, 2, 3]));
        assert_eq!(IntSequence::with_tail(vec![1, 3], Tail::Unknown).is_finite(), None);
        assert_eq!(increasing_part(&[1, 2, 1]), &[1, 2]);
    }

    #[test]
    fn si_examples() {
        assert_eq!(is_si_sequence(&IntSequence::finite(vec![0, 1, 2, 1, 0])).verdict, Some(true));
        let r = is_si_sequence(&IntSequence::finite(vec![1, 2]));
        assert_eq!((r.verdict, r.reason.as_str()), (Some(false), "not symmetric"));
        let r = is_si_sequence(&IntSequence::with_tail(vec![1, 3, 4, 4], Tail::Constant(4)));
        assert_eq!((r.verdict, r.reason.as_str()), (Some(false), "not finite"));
        let r = is_si_sequence(&IntSequence::with_tail(vec![1, 3], Tail::Unknown));
        assert_eq!(r.verdict, None);
        assert_eq!(is_si_sequence(&IntSequence::finite(vec![1, 3, 1])).verdict, Some(true));
        let r = is_si_sequence(&IntSequence::finite(vec![1, 4, 3, 4, 1]));
        assert_eq!(r.reason, "first half not differentiable");
    }

    #[test]
    fn macaulay_reconstruction_exhaustive() {
        for d in 1..=6u64 {
            for a in 0..=10_000u64 {
                let rep = macaulay_rep(a, d);
                let sum: u128 = rep.iter().map(|&(k, i)| binomial(k, i)).sum();
                assert_eq!(sum, a as u128);
                assert!(rep.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1));
                assert!(rep.iter().all(|&(k, i)| k >= i && i >= 1));
            }
        }
    }

    proptest! {
        #[test]
        fn growth_is_at_least_identity(a in 0u64..5000, d in 1u64..8) {
            prop_assert!(macaulay_growth(a, d) >= a);
        }
    }
}
