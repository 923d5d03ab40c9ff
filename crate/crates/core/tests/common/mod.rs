//! Small independent oracles over Z/p, written without the library's linear algebra.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: u64 = 2_147_483_647;

pub fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    powmod(a, P - 2)
}

/// Exponent vectors of degree `d` in `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e as u32);
            out.push(rest);
        }
    }
    out
}

/// Binomial coefficient, zero for a negative top.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Rank over Z/p by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let s = inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = mulmod(*v, s);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - mulmod(f, *y)) % P;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(1..P)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Row of the evaluation of every degree-`t` monomial at `pt`.
fn eval_row(pt: &[u64], mons: &[Vec<u32>]) -> Vec<u64> {
    mons.iter()
        .map(|a| a.iter().zip(pt).fold(1, |acc, (&e, &x)| mulmod(acc, powmod(x, e as u64))))
        .collect()
}

/// Rows imposing vanishing of every partial derivative of order `m - 1` at `q`
/// on forms of degree `t`, that is multiplicity at least `m` at `q`.
fn derivative_rows(q: &[u64], mons: &[Vec<u32>], m: usize) -> Vec<Vec<u64>> {
    if m == 0 {
        return Vec::new();
    }
    monomials(q.len(), m - 1)
        .into_iter()
        .map(|beta| {
            mons.iter()
                .map(|alpha| {
                    if alpha.iter().zip(&beta).any(|(a, b)| a < b) {
                        return 0;
                    }
                    let mut acc = 1;
                    for i in 0..q.len() {
                        for k in 0..beta[i] {
                            acc = mulmod(acc, (alpha[i] - k) as u64);
                        }
                        acc = mulmod(acc, powmod(q[i], (alpha[i] - beta[i]) as u64));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `h_X(t)` of a finite point set.
pub fn points_hf(points: &[Vec<u64>], t: usize) -> u64 {
    let n = points[0].len();
    let mons = monomials(n, t);
    rank(points.iter().map(|p| eval_row(p, &mons)).collect()) as u64
}

/// `dim [I_X]_t`.
pub fn points_ideal_dim(points: &[Vec<u64>], t: usize) -> u64 {
    let n = points[0].len();
    binom((t + n - 1) as i64, (n - 1) as i64) as u64 - points_hf(points, t)
}

/// `dim [I_X ∩ I_q^m]_t` by conditions on the coefficients.
pub fn points_adim(points: &[Vec<u64>], q: &[u64], t: usize, m: usize) -> u64 {
    let n = q.len();
    let mons = monomials(n, t);
    let mut rows: Vec<Vec<u64>> = points.iter().map(|p| eval_row(p, &mons)).collect();
    rows.extend(derivative_rows(q, &mons, m));
    (mons.len() - rank(rows)) as u64
}

/// `dim [I_X]_t - C(m - 1 + n, n)` with `n + 1` coordinates.
pub fn points_vdim(points: &[Vec<u64>], t: usize, m: usize) -> i64 {
    let n = points[0].len() as i64 - 1;
    let fat = if m == 0 { 0 } else { binom(m as i64 - 1 + n, n) };
    points_ideal_dim(points, t) as i64 - fat
}

/// `AV_{X,j}(m)` at a random general point.
pub fn points_av(points: &[Vec<u64>], j: usize, m: usize, seed: u64) -> i64 {
    let q = random_point(&mut rng(seed), points[0].len());
    points_adim(points, &q, m + j, m) as i64 - points_vdim(points, m + j, m)
}

/// Number of degree-`t` monomials outside the monomial ideal generated by `gens`.
pub fn standard_count(n: usize, gens: &[Vec<u32>], t: usize) -> u64 {
    monomials(n, t)
        .iter()
        .filter(|u| !gens.iter().any(|g| g.iter().zip(u.iter()).all(|(a, b)| a <= b)))
        .count() as u64
}

/// A generator as `(exponents, coefficient)` terms.
pub type Terms = Vec<(Vec<u32>, u64)>;

/// Rows of all degree-`t` multiples `u * g` of the generators.
pub fn multiples(gens: &[Terms], n: usize, t: usize) -> Vec<Vec<u64>> {
    let target = monomials(n, t);
    let mut rows = Vec::new();
    for g in gens {
        let d = g[0].0.iter().sum::<u32>() as usize;
        if d > t {
            continue;
        }
        for u in monomials(n, t - d) {
            let mut row = vec![0u64; target.len()];
            for (e, c) in g {
                let prod: Vec<u32> = e.iter().zip(&u).map(|(a, b)| a + b).collect();
                let col = target.iter().position(|x| *x == prod).unwrap();
                row[col] = (row[col] + c) % P;
            }
            rows.push(row);
        }
    }
    rows
}

/// `AV_{X,j}(m)` from generators spanning `[I_X]_{m+j}`, at a random point.
pub fn ideal_av(gens: &[Terms], n: usize, j: usize, m: usize, seed: u64) -> i64 {
    let t = m + j;
    let q = random_point(&mut rng(seed), n);
    let g = multiples(gens, n, t);
    let dim_i = if g.is_empty() { 0 } else { rank(g.clone()) };
    let d = derivative_rows(&q, &monomials(n, t), m);
    // rank of the conditions restricted to the span of g
    let restricted: Vec<Vec<u64>> = g
        .iter()
        .map(|row| {
            d.iter()
                .map(|dr| row.iter().zip(dr).fold(0, |acc, (a, b)| (acc + mulmod(*a, *b)) % P))
                .collect()
        })
        .collect();
    let lost = if restricted.is_empty() { 0 } else { rank(restricted) };
    let adim = (dim_i - lost) as i64;
    let vdim = dim_i as i64 - binom((m + n - 2) as i64, (n - 1) as i64);
    adim - vdim
}
