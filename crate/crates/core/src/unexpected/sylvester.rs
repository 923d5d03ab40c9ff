//! Hypersurfaces with a point of high multiplicity on a codimension-two
//! complete intersection, built from a Sylvester-type matrix.
//!
//! Expand `F` and `G` in powers of `x0`. The rows of `M` are the `x0`-strips
//! of `x0^s F` (`s < b - j`) and `x0^s G` (`s < a - j`) in the exponents
//! `j, j+1, ..., a+b-j-1`. Combining the rows with the cofactors of the first
//! column kills every strip above `x0^j` and leaves `det M` in front of `x0^j`.

use std::collections::HashMap;

use crate::algebra::field::Field;
use crate::algebra::monomial::binomial_i;
use crate::algebra::poly::{random_form, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::seed;

#[derive(Clone, Debug)]
pub struct SylvesterWitness<F: Field> {
    pub a: usize,
    pub b: usize,
    pub j: usize,
    pub nvars: usize,
    pub t: usize,
    pub m: usize,
    pub f: Polynomial<F>,
    pub g: Polynomial<F>,
    /// `det M`, free of `x0`, of degree `m`.
    pub matrix_det: Polynomial<F>,
    /// `T`, of degree `t`, in `(F, G)` and vanishing to order `m` at `(1:0:...:0)`.
    pub witness_form: Polynomial<F>,
    pub seed: u64,
}

// coefficient of x0^e in x0^s h, where h has degree d
fn strip<F: Field>(coeffs: &[Polynomial<F>], d: usize, s: usize, e: usize) -> Option<&Polynomial<F>> {
    let k = e.checked_sub(s)?;
    if k > d {
        return None;
    }
    Some(&coeffs[d - k])
}

/// Determinants of the minors obtained by deleting column 0 and each row,
/// by dynamic programming over the sets of rows used by columns `1..N`.
fn first_column_minors<F: Field>(field: &F, nvars: usize, mat: &[Vec<Option<Polynomial<F>>>]) -> Vec<Polynomial<F>> {
    let n = mat.len();
    let mut layer: HashMap<u32, Polynomial<F>> = HashMap::new();
    layer.insert(0, Polynomial::one(field, nvars));
    for c in 1..n {
        let mut next: HashMap<u32, Polynomial<F>> = HashMap::new();
        for (mask, val) in &layer {
            for (r, row) in mat.iter().enumerate() {
                if mask >> r & 1 == 1 {
                    continue;
                }
                let Some(entry) = &row[c] else { continue };
                // rows already used with a larger index are inversions
                let above = (mask >> (r + 1)).count_ones();
                let mut term = val.mul(entry);
                if above % 2 == 1 {
                    term = term.neg();
                }
                let slot = next.entry(mask | 1 << r).or_insert_with(|| Polynomial::zero(field, nvars));
                *slot = slot.add(&term);
            }
        }
        layer = next;
    }
    let full: u32 = (1u32 << n) - 1;
    (0..n)
        .map(|i| {
            layer
                .get(&(full ^ (1 << i)))
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(field, nvars))
        })
        .collect()
}

/// Builds `T` from two general forms of degrees `a <= b` and checks its shape.
pub fn sylvester_witness<F: Field>(
    field: &F,
    a: usize,
    b: usize,
    j: usize,
    nvars: usize,
    seed: u64,
) -> Result<SylvesterWitness<F>> {
    if !(j < a && a <= b) {
        return Err(Error::invalid(format!("need 0 <= j < a <= b, got a={a} b={b} j={j}")));
    }
    if nvars < 3 {
        return Err(Error::invalid("the witness needs at least three variables"));
    }
    let size = a + b - 2 * j;
    if size > 20 {
        return Err(Error::invalid(format!("matrix of size {size} is too large")));
    }
    let m = (a - j) * (b - j);
    let t = m + j;
    for attempt in 0..4u64 {
        let s = seed::derive(seed, "sylvester", attempt);
        let f = random_form(field, a, nvars, seed::derive(s, "F", 0));
        let g = random_form(field, b, nvars, seed::derive(s, "G", 0));
        let (fc, gc) = (f.x0_coefficients(), g.x0_coefficients());
        let x0 = |e: usize| {
            let mut mon = crate::algebra::monomial::Monomial::one(nvars);
            mon.set_exp(0, e as u32);
            mon
        };
        let mut rows_poly = Vec::with_capacity(size);
        let mut mat = Vec::with_capacity(size);
        for sft in 0..b - j {
            rows_poly.push(f.mul_term(&x0(sft), &field.one()));
            mat.push((0..size).map(|c| strip(&fc, a, sft, j + c).filter(|p| !p.is_zero()).cloned()).collect::<Vec<_>>());
        }
        for sft in 0..a - j {
            rows_poly.push(g.mul_term(&x0(sft), &field.one()));
            mat.push((0..size).map(|c| strip(&gc, b, sft, j + c).filter(|p| !p.is_zero()).cloned()).collect::<Vec<_>>());
        }
        let minors = first_column_minors(field, nvars, &mat);
        let mut det = Polynomial::zero(field, nvars);
        let mut witness = Polynomial::zero(field, nvars);
        for (i, minor) in minors.iter().enumerate() {
            let cof = if i % 2 == 1 { minor.neg() } else { minor.clone() };
            if let Some(e) = &mat[i][0] {
                det = det.add(&e.mul(&cof));
            }
            witness = witness.add(&cof.mul(&rows_poly[i]));
        }
        if det.is_zero() {
            continue;
        }
        check_shape(&det, &witness, j, m, t)?;
        let ci = Ideal::new(field, nvars, vec![f.clone(), g.clone()])?;
        if !ci.contains(&witness)? {
            return Err(Error::invalid("witness form is not in (F, G)"));
        }
        return Ok(SylvesterWitness {
            a,
            b,
            j,
            nvars,
            t,
            m,
            f,
            g,
            matrix_det: det,
            witness_form: witness,
            seed: s,
        });
    }
    Err(Error::Genericity("det M vanished for four draws of F and G".into()))
}

fn check_shape<F: Field>(det: &Polynomial<F>, witness: &Polynomial<F>, j: usize, m: usize, t: usize) -> Result<()> {
    if det.degree() != Some(m) || !det.is_homogeneous() || det.terms().iter().any(|(mon, _)| mon.exp(0) > 0) {
        return Err(Error::invalid("det M is not an x0-free form of degree m"));
    }
    if witness.degree() != Some(t) || !witness.is_homogeneous() {
        return Err(Error::invalid(format!("witness form does not have degree {t}")));
    }
    let coeffs = witness.x0_coefficients();
    // entry k multiplies x0^(t-k); everything above x0^j must vanish
    if coeffs[..t - j].iter().any(|c| !c.is_zero()) {
        return Err(Error::invalid("witness form has x0-strips above x0^j"));
    }
    if coeffs[t - j] != *det {
        return Err(Error::invalid("coefficient of x0^j differs from det M"));
    }
    Ok(())
}

/// `vdim` of a codimension-two complete intersection of type `(a, b)` in `P^n`:
/// `C(t-a+n, n) + C(t-b+n, n) - C(t-a-b+n, n) - C(m-1+n, n)`.
pub fn ci_vdim_closed_form(a: usize, b: usize, n: usize, t: usize, m: usize) -> i64 {
    let c = |top: i64| binomial_i(top, n as i64);
    let (a, b, n, t, m) = (a as i64, b as i64, n as i64, t as i64, m as i64);
    c(t - a + n) + c(t - b + n) - c(t - a - b + n) - if m >= 1 { c(m - 1 + n) } else { 0 }
}
