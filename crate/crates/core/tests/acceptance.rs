//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Values are exact integers. Each criterion carries a wall-clock budget in
//! seconds that is part of its verdict.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use avkit::algebra::{random_form, MonomialOrder, PrimeField};
use avkit::cli::manifest::default_fixtures;
use avkit::geometry::{random_points, Fixture};
use avkit::gin::gin;
use avkit::groebner::{ideal_colon, Ideal, MonomialIdeal};
use avkit::hilbert::{graded_dim_ideal, graded_dim_linear_algebra, hilbert_function};
use avkit::sequences::{is_symmetric, macaulay_rep, Tail};
use avkit::unexpected::{
    av_gin_colon, av_sequence, certify_no_unexpected, ci_vdim_closed_form, curve_av_formula_check, detect,
    lex_segment_criterion, persistence_table, si_harness, sylvester_witness, union_shift_check, vdim_edim,
    Certification, LexCriterion, Outcome, Route, Verdict,
};
use common::{binom, points_adim, points_av, points_hf, points_ideal_dim, points_vdim};

const TRIALS: usize = 2;
const SEED: u64 = 1;

struct Checks {
    items: Vec<(String, bool)>,
}

impl Checks {
    fn new() -> Self {
        Checks { items: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push((name.into(), ok));
    }

    fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

fn fp() -> PrimeField {
    PrimeField::default()
}

fn build(f: Fixture) -> Ideal<PrimeField> {
    f.recipe(0).build(&fp()).unwrap_or_else(|e| panic!("{}: {e}", f.name()))
}

fn points_of(f: Fixture) -> Vec<Vec<u64>> {
    f.recipe(0)
        .explicit_points(&fp())
        .expect("a point-set fixture")
        .unwrap()
        .iter()
        .map(|p| p.coords().to_vec())
        .collect()
}

fn terms_of(i: &Ideal<PrimeField>) -> Vec<common::Terms> {
    i.generators()
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| (m.exponents(), *c)).collect())
        .collect()
}

fn gin_strings(i: &Ideal<PrimeField>, cap: usize) -> Vec<String> {
    let mut v = gin(i, TRIALS, SEED, cap).unwrap().ideal().generator_strings();
    v.sort();
    v
}

fn sorted(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

fn av_values(f: Fixture, j: usize, m_max: usize) -> (Vec<u64>, Tail) {
    let r = av_sequence(&build(f), j, m_max, Route::Both, TRIALS, SEED).unwrap();
    (r.values.values.clone(), r.values.tail)
}

// (1) thirteen points of the plane
fn thirteen_points(c: &mut Checks) {
    let hf = [1, 3, 6, 10, 12, 13, 13];
    let g1 = sorted(&["x^4", "x^3*y", "x^3*z", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^3", "x*y^5"]);
    for f in [Fixture::X1, Fixture::X2] {
        let name = f.name();
        let i = build(f);
        let pts = points_of(f);
        let h = hilbert_function(&i, 6).unwrap();
        c.check(format!("{name} Hilbert function"), h.values == hf);
        c.check(
            format!("{name} Hilbert function oracle"),
            (0..=6).all(|t| points_hf(&pts, t) == hf[t]),
        );
        c.check(format!("{name} dim [I]_6 = 15"), graded_dim_ideal(&i, 6).unwrap() == 15);
        c.check(format!("{name} dim [I]_6 oracle"), points_ideal_dim(&pts, 6) == 15);
        c.check(format!("{name} vdim(6,5) = 0"), vdim_edim(&i, 6, 5).unwrap() == (0, 0));
        c.check(format!("{name} vdim oracle"), points_vdim(&pts, 6, 5) == 0);
        let v = detect(&i, 6, 5, TRIALS, SEED).unwrap();
        c.check(
            format!("{name} unexpected sextic"),
            v.verdict == Verdict::Unexpected && v.adim == 1 && v.edim == 0,
        );
        let q = common::random_point(&mut common::rng(7), 3);
        c.check(format!("{name} adim oracle"), points_adim(&pts, &q, 6, 5) == 1);
        c.check(format!("{name} gin through degree 6"), gin_strings(&i, 6) == g1);
    }
    let ci = build(Fixture::Ci34PlusPoint);
    c.check("CI(3,4)+point Hilbert function", hilbert_function(&ci, 6).unwrap().values == hf);
    let full = sorted(&[
        "x^4", "x^3*y", "x^3*z", "x^2*y^3", "x^2*y^2*z", "x^2*y*z^3", "x^2*z^4", "x*y^6", "x*y^5*z", "x*y^4*z^3",
        "x*y^3*z^5", "x*y^2*z^7", "x*y*z^9", "x*z^11", "y^13",
    ]);
    c.check("CI(3,4)+point full gin", gin_strings(&ci, 13) == full);
    let v = detect(&ci, 6, 5, TRIALS, SEED).unwrap();
    c.check(
        "CI(3,4)+point (6,5) not unexpected",
        v.verdict != Verdict::Unexpected && v.adim <= v.edim,
    );
    let g = gin(&ci, TRIALS, SEED, 6).unwrap();
    c.check(
        "CI(3,4)+point lex segment in degree 6",
        lex_segment_criterion(&g, 6, 5).unwrap() != LexCriterion::Inconclusive,
    );
}

// (2) AV sequences of the linked curves, complete intersections and cones
fn example_sequences(c: &mut Checks) {
    let cases: [(&str, Fixture, usize, usize, Vec<u64>); 9] = [
        ("(a)", Fixture::Linked87, 1, 6, vec![1, 2, 1, 0, 0, 0]),
        ("(b)", Fixture::Linked74, 1, 6, vec![1, 2, 0, 0, 0, 0]),
        ("(d)", Fixture::Linked87PlusPoint, 1, 6, vec![1, 3, 2, 0, 0, 0]),
        ("(e)", Fixture::Linked87, 0, 9, vec![1, 4, 8, 11, 13, 14, 14, 14, 14]),
        ("(f) degree 15", Fixture::Linked1528, 2, 8, vec![1, 2, 2, 0, 0, 0, 0, 0]),
        ("(f) degree 8", Fixture::Linked87, 2, 6, vec![0; 6]),
        ("(g)", Fixture::Ci444Points, 1, 8, vec![1, 4, 7, 8, 5, 0, 0, 0]),
        ("(h)", Fixture::ConeB3, 1, 7, vec![1, 3, 4, 4, 4, 4, 4]),
        ("(i)", Fixture::ConeGeneral9, 1, 7, vec![1, 3, 3, 3, 3, 3, 3]),
    ];
    for (label, f, j, m_max, want) in cases {
        let (values, tail) = av_values(f, j, m_max);
        let tail_ok = match want.last() {
            Some(0) => tail == Tail::Zero,
            Some(&v) => tail == Tail::Constant(v),
            None => true,
        };
        c.check(format!("{label} {} AV_{j}", f.name()), values == want && tail_ok);
    }
    let gens = terms_of(&build(Fixture::Ci444Points));
    c.check(
        "(g) oracle",
        (1..=6).all(|m| common::ideal_av(&gens, 4, 1, m, 11) == [1, 4, 7, 8, 5, 0][m - 1]),
    );
}

// (3) direct and gin-colon routes agree and give O-sequences
fn route_equivalence(c: &mut Checks) {
    for f in default_fixtures() {
        let i = build(f);
        let max_j = if f.nvars() > 5 { 1 } else { 2 };
        for j in 0..=max_j {
            let ok = match av_sequence(&i, j, 4, Route::Both, TRIALS, SEED) {
                Ok(r) => r.o_sequence_check,
                Err(_) => false,
            };
            c.check(format!("{} j={j}", f.name()), ok);
        }
    }
    let field = fp();
    let mut rng = common::rng(2024);
    for k in 0..20u64 {
        use rand::Rng;
        let nvars = rng.random_range(3..=4usize);
        let count = rng.random_range(2..=10usize);
        let pts = random_points(&field, nvars, count, 1000 + k);
        let raw: Vec<Vec<u64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        let i = avkit::geometry::points_ideal(&field, &pts).unwrap();
        for j in 0..=1 {
            let ok = match av_sequence(&i, j, 4, Route::Both, TRIALS, SEED + k) {
                Ok(r) => r.o_sequence_check && (1..=4).all(|m| r.at(m).unwrap() as i64 == points_av(&raw, j, m, 99 + k)),
                Err(_) => false,
            };
            c.check(format!("random set {k} ({count} points in P^{}) j={j}", nvars - 1), ok);
        }
    }
}

// (4) monotonicity in j and descent along fixed t
fn monotonicity_and_descent(c: &mut Checks) {
    for f in default_fixtures() {
        let i = build(f);
        let cap = if f.nvars() > 5 { 5 } else { 6 };
        let g = gin(&i, TRIALS, SEED, cap).unwrap();
        let av = |j: usize, m: usize| av_gin_colon(&g, j, m).unwrap();
        let mut mono = true;
        let mut descent = true;
        for t in 1..=cap {
            for m in 1..=t {
                let j = t - m;
                if j + 1 + m <= cap && av(j, m) < av(j + 1, m) {
                    mono = false;
                }
                if m >= 2 && av(j, m) == 0 && av(j + 1, m - 1) != 0 {
                    descent = false;
                }
            }
        }
        c.check(format!("{} monotone in j", f.name()), mono);
        c.check(format!("{} descent", f.name()), descent);
    }
}

// (5) certificates for the root systems, cones for the second family, degenerate table
fn certificates(c: &mut Checks) {
    for n in 2..=6 {
        let f = Fixture::RootAn(n);
        let i = build(f);
        let pts = points_of(f);
        c.check(
            format!("root_An({n}) initial degree 3"),
            i.initial_degree() == Some(3) && points_ideal_dim(&pts, 2) == 0 && points_ideal_dim(&pts, 3) > 0,
        );
        let cert = certify_no_unexpected(&i, TRIALS, SEED).unwrap();
        c.check(
            format!("root_An({n}) certificate"),
            matches!(cert, Certification::Certificate { alpha: 3, av: 0, .. }),
        );
    }
    let yn = build(Fixture::RootYn(3));
    let v = detect(&yn, 3, 3, TRIALS, SEED).unwrap();
    c.check("root_Yn(3) unexpected cubic cone", v.verdict == Verdict::Unexpected);
    let deg = build(Fixture::DegeneratePoints);
    let table = persistence_table(&deg, 6, 6, TRIALS, SEED).unwrap();
    c.check("degenerate points table is zero", table.is_zero());
    c.check(
        "degenerate points certificate",
        certify_no_unexpected(&deg, TRIALS, SEED).unwrap().is_certificate(),
    );
    c.check(
        "X1 refusal",
        !certify_no_unexpected(&build(Fixture::X1), TRIALS, SEED).unwrap().is_certificate(),
    );
}

// (6) complete intersections of two forms
fn complete_intersections(c: &mut Checks) {
    let field = fp();
    let w = sylvester_witness(&field, 3, 3, 1, 4, SEED).unwrap();
    c.check("witness (t, m) = (5, 4)", (w.t, w.m) == (5, 4));
    c.check("witness degree 5", w.witness_form.degree() == Some(5) && w.witness_form.is_homogeneous());
    c.check("det M degree 4", w.matrix_det.degree() == Some(4));
    let fg = Ideal::new(&field, 4, vec![w.f.clone(), w.g.clone()]).unwrap();
    c.check("witness in (F, G)", fg.contains(&w.witness_form).unwrap());
    c.check(
        "witness vanishes to order 4 at Q",
        w.witness_form.terms().iter().all(|(mon, _)| mon.tail_degree() >= 4),
    );
    let koszul = |a: i64, b: i64, n: i64, t: i64, m: i64| {
        binom(t - a + n, n) + binom(t - b + n, n) - binom(t - a - b + n, n) - binom(m - 1 + n, n)
    };
    c.check("vdim CI(3,3) in P^3", ci_vdim_closed_form(3, 3, 3, 5, 4) == 0 && koszul(3, 3, 3, 5, 4) == 0);
    c.check("vdim CI(3,3) in P^4", ci_vdim_closed_form(3, 3, 4, 5, 4) == -5 && koszul(3, 3, 4, 5, 4) == -5);
    let p4 = build(Fixture::Ci33P4);
    let hf = [1, 5, 15, 33, 60, 96, 141];
    c.check("CI(3,3) in P^4 Hilbert function", hilbert_function(&p4, 6).unwrap().values == hf);
    c.check(
        "CI(3,3) in P^4 Hilbert function oracle",
        (0..=6).all(|t| binom(t + 4, 4) - 2 * binom(t + 1, 4) + binom(t - 2, 4) == hf[t as usize] as i64),
    );
    c.check("CI(3,3) in P^4 vdim from the ideal", vdim_edim(&p4, 5, 4).unwrap().0 == -5);
    for (a, b) in [(3usize, 5usize), (4, 4), (4, 5)] {
        let (ai, bi) = (a as i64, b as i64);
        let m = (a - 1) * (b - 1);
        let closed = -(ai - 2) * (bi - 2) * (ai + bi - 4) / 2 + 1;
        c.check(
            format!("closed form ({a},{b})"),
            ci_vdim_closed_form(a, b, 3, m + 1, m) == closed && koszul(ai, bi, 3, m as i64 + 1, m as i64) == closed,
        );
    }
    let p3 = build(Fixture::Ci33P3);
    c.check("CI(3,3) in P^3 vdim from the ideal", vdim_edim(&p3, 5, 4).unwrap().0 == 0);
    let v = detect(&p3, 5, 4, TRIALS, SEED).unwrap();
    c.check("CI(3,3) in P^3 unexpected quintic", v.verdict == Verdict::Unexpected);
}

// (7) curve formulas and additivity over a union
fn curve_formulas(c: &mut Checks) {
    let tc = curve_av_formula_check(&build(Fixture::TwistedCubic), 3..=6, TRIALS, SEED).unwrap();
    c.check(
        "twisted cubic",
        (tc.degree, tc.genus, tc.expected) == (3, 0, 1) && tc.matches,
    );
    let pc = curve_av_formula_check(&build(Fixture::PlaneCubic), 3..=6, TRIALS, SEED).unwrap();
    c.check("plane cubic", (pc.degree, pc.genus, pc.expected) == (3, 1, 0) && pc.matches);
    let lc = curve_av_formula_check(&build(Fixture::Linked87), 8..=9, TRIALS, SEED).unwrap();
    c.check(
        "linked curve of degree 8 and genus 7",
        (lc.degree, lc.genus, lc.expected) == (8, 7, 14) && lc.matches,
    );
    let seven = build(Fixture::Ex74GeneralSeven);
    let u = union_shift_check(&seven, &build(Fixture::PlaneCubic), 2, TRIALS, SEED).unwrap();
    c.check("union with the plane cubic", u.union_value == 1 && u.points_value == 1 && u.holds);
    let pts = points_of(Fixture::Ex74GeneralSeven);
    let q = common::random_point(&mut common::rng(5), 4);
    c.check("seven general points oracle", points_av(&pts, 0, 2, 5) == 1 && points_adim(&pts, &q, 2, 2) == 0);
    c.check(
        "seven general points adim(2,2) = 0",
        detect(&seven, 2, 2, TRIALS, SEED).unwrap().adim == 0,
    );
    let (values, _) = av_values(Fixture::Ex74PlaneCubic, 0, 5);
    c.check("17 points on a plane cubic plus 7 general", values[4] == 1);
}

// (8) verdicts for the configurations sharing one h-vector
fn configuration_verdicts(c: &mut Checks) {
    let tw = build(Fixture::Ex74TwistedCubic);
    for t in 1..=6 {
        let v = detect(&tw, t, t, TRIALS, SEED).unwrap();
        c.check(format!("twisted cubic configuration, no unexpected cone of degree {t}"), v.verdict != Verdict::Unexpected);
    }
    let lines = build(Fixture::Ex74ThreeLines);
    let v = detect(&lines, 5, 5, TRIALS, SEED).unwrap();
    c.check(
        "three lines configuration, pencil of quintic cones",
        v.verdict == Verdict::Unexpected && v.adim == 2 && v.edim == 0,
    );
    let pts = points_of(Fixture::Ex74ThreeLines);
    let q = common::random_point(&mut common::rng(3), 4);
    c.check(
        "three lines configuration oracle",
        points_adim(&pts, &q, 5, 5) == 2 && points_vdim(&pts, 5, 5) <= 0,
    );
}

// (9) SI-sequence harness on the degree-8 genus-7 curve
fn si_sequence_harness(c: &mut Checks) {
    let r = si_harness(&build(Fixture::Linked87), 8, TRIALS, SEED).unwrap();
    let v = &r.av.values.values;
    c.check("nonzero", r.nonzero);
    c.check("unimodal", r.unimodal);
    c.check("finite", r.av.values.is_finite() == Some(true));
    c.check("symmetric", is_symmetric(v));
    c.check("SI-sequence", r.si.verdict == Some(true));
    c.check("ends in degree deg X - 6 = 2", r.end_degree == Some(2) && r.expected_end == 2);
    c.check("increasing part differentiable", r.increasing_part_differentiable);
    c.check("outcome", r.outcome == Outcome::Pass);
}

fn all_monomials(n: usize, max_deg: usize) -> Vec<Vec<u32>> {
    (0..=max_deg).flat_map(|d| common::monomials(n, d)).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

// (10) kernel self-checks
fn kernel(c: &mut Checks) {
    let field = fp();
    // Gröbner basis idempotence
    let mut idem = true;
    for k in 0..12u64 {
        let n = 3 + (k % 2) as usize;
        let gens: Vec<_> = (0..3).map(|g| random_form(&field, 2 + ((k + g) % 2) as usize, n, 40 * k + g)).collect();
        let i = Ideal::new(&field, n, gens).unwrap();
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = i.groebner_basis(ord).unwrap();
            let again = Ideal::new(&field, n, gb.polynomials().to_vec()).unwrap().groebner_basis(ord).unwrap();
            idem &= gb.polynomials() == again.polynomials();
        }
    }
    c.check("Groebner basis idempotence", idem);

    // monomial colon against divisibility, every principal and two-generator
    // ideal with generators of degree <= 4 and every monomial of degree <= 4
    let mut comb = true;
    let mut poly_route = true;
    let mut pairs = 0usize;
    for n in 1..=3 {
        let mons = all_monomials(n, 4);
        let probes = all_monomials(n, 6);
        let mut ideals: Vec<Vec<Vec<u32>>> = mons.iter().map(|a| vec![a.clone()]).collect();
        for a in 0..mons.len() {
            for b in a + 1..mons.len() {
                ideals.push(vec![mons[a].clone(), mons[b].clone()]);
            }
        }
        for gens in &ideals {
            let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
            let m = MonomialIdeal::from_exponents(n, &refs);
            for u in &mons {
                pairs += 1;
                let um = avkit::algebra::Monomial::from_exps(u);
                let colon = m.colon_monomial(&um);
                let want = |v: &[u32]| {
                    let vu: Vec<u32> = v.iter().zip(u).map(|(a, b)| a + b).collect();
                    gens.iter().any(|g| divides(g, &vu))
                };
                comb &= probes
                    .iter()
                    .all(|v| colon.contains(&avkit::algebra::Monomial::from_exps(v)) == want(v));
                if pairs % 11 == 0 {
                    let i = Ideal::from_monomial_ideal(&field, &m);
                    let j = Ideal::from_monomial_ideal(&field, &MonomialIdeal::new(n, [um.clone()]));
                    let q = ideal_colon(&i, &j).unwrap().initial_ideal(MonomialOrder::DegRevLex).unwrap();
                    poly_route &= q.generators() == colon.generators();
                }
            }
        }
    }
    c.check(format!("monomial colon by divisibility ({pairs} pairs)"), comb);
    c.check("monomial colon by the polynomial route", poly_route);

    // graded dimensions against a plain rank of generator multiples
    let mut dims = true;
    for k in 0..10u64 {
        let n = 2 + (k % 2) as usize;
        let gens: Vec<_> = (0..2).map(|g| random_form(&field, 2 + ((k + g) % 2) as usize, n, 7 * k + g + 1)).collect();
        let i = Ideal::new(&field, n, gens).unwrap();
        for t in 0..=6 {
            let rows = common::multiples(&terms_of(&i), n, t);
            let want = if rows.is_empty() { 0 } else { common::rank(rows) as u64 };
            dims &= graded_dim_ideal(&i, t).unwrap() == want && graded_dim_linear_algebra(&i, t).unwrap() == want;
        }
    }
    c.check("graded dimension oracle", dims);

    let mut rep = true;
    for d in 1..=6u64 {
        for a in 1..=10_000u64 {
            let r = macaulay_rep(a, d);
            let sum: i64 = r.iter().map(|&(k, i)| binom(k as i64, i as i64)).sum();
            let shape = r.iter().enumerate().all(|(idx, &(k, i))| i == d - idx as u64 && k >= i)
                && r.windows(2).all(|w| w[0].0 > w[1].0);
            rep &= sum == a as i64 && shape;
        }
    }
    c.check("Macaulay representation reconstruction", rep);
}

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn(&mut Checks),
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "thirteen points of the plane", budget: Duration::from_secs(180), run: thirteen_points },
    Criterion { id: 2, name: "AV sequence regression", budget: Duration::from_secs(600), run: example_sequences },
    Criterion { id: 3, name: "route equivalence", budget: Duration::from_secs(300), run: route_equivalence },
    Criterion { id: 4, name: "monotonicity and descent", budget: Duration::from_secs(180), run: monotonicity_and_descent },
    Criterion { id: 5, name: "certificates", budget: Duration::from_secs(240), run: certificates },
    Criterion { id: 6, name: "complete intersections", budget: Duration::from_secs(300), run: complete_intersections },
    Criterion { id: 7, name: "curve formulas", budget: Duration::from_secs(360), run: curve_formulas },
    Criterion { id: 8, name: "configuration verdicts", budget: Duration::from_secs(360), run: configuration_verdicts },
    Criterion { id: 9, name: "SI-sequence harness", budget: Duration::from_secs(120), run: si_sequence_harness },
    Criterion { id: 10, name: "kernel self-checks", budget: Duration::from_secs(120), run: kernel },
];

/// Sub-checks known to fail, with the value actually computed.
///
/// For `n = 2` the set is six points of `P^2` with no cubic triple at a general
/// point through them, so `adim(X,3,3) = 0`, `vdim(X,3,3) = -2` and
/// `AV_{X,0}(3) = 2`: no certificate exists.
const KNOWN_FAILURES: [(usize, &str); 1] = [(5, "root_An(2) certificate")];

#[test]
fn acceptance_criteria() {
    let results: Vec<(usize, Checks, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|c| {
                s.spawn(move || {
                    let start = Instant::now();
                    let mut checks = Checks::new();
                    (c.run)(&mut checks);
                    (c.id, checks, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut unexpected = Vec::new();
    // straight to the real stdout so the summary shows without --nocapture
    let mut out = std::io::stdout().lock();
    for ((id, checks, elapsed), c) in results.iter().zip(CRITERIA.iter()) {
        let failures = checks.failures();
        let over = *elapsed > c.budget;
        let pass = failures.is_empty() && !over;
        let _ = writeln!(
            out,
            "criterion {id:>2} {} {}: {}/{} checks, {:.1}s of {}s{}",
            if pass { "PASS" } else { "FAIL" },
            c.name,
            checks.items.len() - failures.len(),
            checks.items.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            if failures.is_empty() { String::new() } else { format!(" [failed: {}]", failures.join("; ")) },
        );
        if over {
            unexpected.push(format!("criterion {id} over budget"));
        }
        for f in failures {
            if !KNOWN_FAILURES.contains(&(*id, f)) {
                unexpected.push(format!("criterion {id}: {f}"));
            }
        }
        for (kid, kf) in KNOWN_FAILURES {
            if kid == *id && !checks.items.iter().any(|(n, ok)| n == kf && !ok) {
                unexpected.push(format!("criterion {id}: `{kf}` now passes; update KNOWN_FAILURES"));
            }
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}

/// The two sequences whose computation is tiered behind `--deep`.
#[test]
#[ignore = "deep tier"]
fn deep_sequences() {
    let (surface, tail) = av_values(Fixture::LinkedSurfaceP4, 1, 6);
    assert_eq!(surface, vec![1, 3, 4, 4, 4, 4]);
    assert_eq!(tail, Tail::Constant(4));
    let (long, tail) = av_values(Fixture::Ci44TriplePoint, 1, 14);
    assert_eq!(&long[..11], &[1, 4, 8, 12, 15, 16, 15, 12, 8, 4, 2]);
    assert_eq!(tail, Tail::Constant(2));
}
