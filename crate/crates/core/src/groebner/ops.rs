use crate::algebra::field::Field;
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::buchberger::buchberger;
use crate::groebner::ideal::{Ideal, Saturation};

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn ideal_intersection<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    i.check_same_ring(j)?;
    let (field, n) = (i.field(), i.nvars());
    if i.generators().is_empty() || j.generators().is_empty() {
        return Ok(Ideal::zero(field, n).with_budget(i.budget()));
    }
    let t = Polynomial::var(field, n + 1, 0);
    let one_minus_t = Polynomial::one(field, n + 1).sub(&t);
    let lift = |p: &Polynomial<F>| p.map_monomials(n + 1, |m| m.shift_right(1));
    let mut gens = Vec::new();
    for f in i.generators() {
        gens.push(t.mul(&lift(f)));
    }
    for g in j.generators() {
        gens.push(one_minus_t.mul(&lift(g)));
    }
    let gb = buchberger(field, n + 1, &gens, MonomialOrder::Elim { block: 1 }, &i.budget(), None)?;
    let kept: Vec<Polynomial<F>> = gb
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| p.map_monomials(n, |m| m.shift_left(1)))
        .collect();
    Ok(Ideal::new(field, n, kept)?.with_budget(i.budget()))
}

fn as_variable<F: Field>(g: &Polynomial<F>) -> Option<usize> {
    if g.len() != 1 || g.degree() != Some(1) {
        return None;
    }
    let (m, _) = &g.terms()[0];
    (0..g.nvars()).find(|&k| m.exp(k) == 1)
}

/// `I : x_k` for homogeneous `I`: in degrevlex with `x_k` last, divide every
/// basis element whose leading monomial is divisible by `x_k`.
fn colon_variable<F: Field>(i: &Ideal<F>, k: usize) -> Result<Ideal<F>> {
    let (field, n) = (i.field(), i.nvars());
    // swap x_k with the last variable
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(k, n - 1);
    let permuted: Vec<Polynomial<F>> = i
        .generators()
        .iter()
        .map(|p| p.map_monomials(n, |m| m.permute(&perm)))
        .collect();
    let gb = buchberger(field, n, &permuted, MonomialOrder::DegRevLex, &i.budget(), None)?;
    let last = Monomial::var(n, n - 1);
    let gens = gb
        .into_iter()
        .map(|p| {
            let lm = p.leading_monomial(MonomialOrder::DegRevLex).unwrap();
            let q = if last.divides(&lm) {
                p.map_monomials(n, |m| last.div(m).expect("homogeneous divisibility"))
            } else {
                p
            };
            q.map_monomials(n, |m| m.permute(&perm))
        })
        .collect();
    Ok(Ideal::new(field, n, gens)?.with_budget(i.budget()))
}

/// `I : (g)`.
pub fn colon_element<F: Field>(i: &Ideal<F>, g: &Polynomial<F>) -> Result<Ideal<F>> {
    if g.is_zero() {
        return Err(Error::invalid("colon by the zero ideal"));
    }
    if g.nvars() != i.nvars() {
        return Err(Error::Dimension {
            expected: i.nvars(),
            got: g.nvars(),
        });
    }
    if g.is_constant() {
        return Ok(i.clone());
    }
    if i.is_homogeneous() {
        if let Some(k) = as_variable(g) {
            return colon_variable(i, k);
        }
    }
    let principal = Ideal::new(i.field(), i.nvars(), vec![g.clone()])?.with_budget(i.budget());
    let inter = ideal_intersection(i, &principal)?;
    let gens = inter
        .generators()
        .iter()
        .map(|h| h.exact_div(g).ok_or_else(|| Error::invalid("intersection element not divisible")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(i.field(), i.nvars(), gens)?.with_budget(i.budget()))
}

/// `I : J`, the intersection of the colons by the generators of `J`.
pub fn ideal_colon<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    i.check_same_ring(j)?;
    if j.generators().is_empty() {
        return Err(Error::invalid("colon by the zero ideal"));
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let c = colon_element(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => ideal_intersection(&a, &c)?,
        });
    }
    Ok(acc.unwrap())
}

/// `I : J^∞` by iterated colon; `J` defaults to the irrelevant ideal.
pub fn saturation<F: Field>(i: &Ideal<F>, j: Option<&Ideal<F>>) -> Result<Ideal<F>> {
    if i.saturation_flag() == Saturation::Saturated && j.is_none() {
        return Ok(i.clone());
    }
    let max;
    let j = match j {
        Some(j) => j,
        None => {
            max = Ideal::maximal(i.field(), i.nvars());
            &max
        }
    };
    let mut cur = i.clone();
    for _ in 0..256 {
        let next = ideal_colon(&cur, j)?;
        if next.same_ideal(&cur)? {
            return cur.with_generators_from_gb().map(|c| c.mark_saturated());
        }
        cur = next;
    }
    Err(Error::invalid("saturation did not stabilize"))
}

/// `I ∩ K[x_k, ..., x_{n-1}]` where `drop_vars = {0, ..., k-1}`.
pub fn elimination_ideal<F: Field>(i: &Ideal<F>, drop_vars: &[usize]) -> Result<Ideal<F>> {
    let k = drop_vars.len();
    let mut sorted = drop_vars.to_vec();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(a, &b)| a != b) {
        return Err(Error::invalid(
            "eliminated variables must be an initial segment x0, ..., x_{k-1}",
        ));
    }
    if k > i.nvars() {
        return Err(Error::invalid("cannot eliminate more variables than the ring has"));
    }
    if k == 0 {
        return Ok(i.clone());
    }
    let gb = buchberger(i.field(), i.nvars(), i.generators(), MonomialOrder::Elim { block: k }, &i.budget(), None)?;
    let kept = gb
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| (0..k).all(|v| m.exp(v) == 0)))
        .collect();
    Ok(Ideal::new(i.field(), i.nvars(), kept)?.with_budget(i.budget()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::parse::parse_polynomial;

    fn id(gens: &[&str], n: usize) -> Ideal<Rationals> {
        let g = gens.iter().map(|s| parse_polynomial(&Rationals, s, n).unwrap()).collect();
        Ideal::new(&Rationals, n, g).unwrap()
    }

    #[test]
    fn intersection_examples() {
        let a = id(&["x"], 2);
        let b = id(&["y"], 2);
        assert!(ideal_intersection(&a, &b).unwrap().same_ideal(&id(&["x*y"], 2)).unwrap());
        let c = id(&["x^2 - y*z", "x*y"], 3);
        assert!(ideal_intersection(&c, &c).unwrap().same_ideal(&c).unwrap());
    }

    #[test]
    fn colon_examples() {
        let a = id(&["x^2"], 2);
        assert!(colon_element(&a, &parse_polynomial(&Rationals, "x", 2).unwrap())
            .unwrap()
            .same_ideal(&id(&["x"], 2))
            .unwrap());
        assert!(ideal_colon(&a, &Ideal::unit(&Rationals, 2)).unwrap().same_ideal(&a).unwrap());
        // non-variable element goes through the intersection route
        let b = id(&["x^2 - y^2"], 2);
        let c = colon_element(&b, &parse_polynomial(&Rationals, "x + y", 2).unwrap()).unwrap();
        assert!(c.same_ideal(&id(&["x - y"], 2)).unwrap());
        assert!(ideal_colon(&a, &Ideal::zero(&Rationals, 2)).is_err());
    }

    #[test]
    fn saturation_examples() {
        let a = id(&["x*y", "x*z"], 3);
        assert!(saturation(&a, None).unwrap().same_ideal(&a).unwrap());
        let b = id(&["x^2", "x*y", "x*z"], 3);
        assert!(saturation(&b, None).unwrap().same_ideal(&id(&["x"], 3)).unwrap());
        let fp = PrimeField::default();
        let p = parse_polynomial(&fp, "y", 3).unwrap();
        let q = parse_polynomial(&fp, "z", 3).unwrap();
        let pt = Ideal::new(&fp, 3, vec![p, q]).unwrap();
        let fat = pt.power(3).unwrap();
        assert!(saturation(&fat, None).unwrap().same_ideal(&fat).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let a = id(&["x - y"], 3);
        assert!(elimination_ideal(&a, &[0]).unwrap().generators().is_empty());
        let b = id(&["x - y", "x - z"], 3);
        assert!(elimination_ideal(&b, &[0]).unwrap().same_ideal(&id(&["y - z"], 3)).unwrap());
        assert!(elimination_ideal(&b, &[1]).is_err());
    }
}
