//! Property tests across modules.

mod common;

use proptest::prelude::*;

use avkit::algebra::{random_form, Monomial, MonomialOrder, PrimeField, Rationals};
use avkit::geometry::{distraction, fat_point_ideal, points_ideal, random_points, union, ProjPoint};
use avkit::gin::{gin, is_borel_fixed, is_lex_segment, lex_segment_ideal_for, monomial_colon_by_power};
use avkit::groebner::{ideal_intersection, saturation, Ideal, MonomialIdeal};
use avkit::hilbert::{
    graded_dim_ideal, h_vector, hilbert_function, monomial_hilbert_function, stabilized_hilbert_function,
};
use avkit::sequences::is_o_sequence;
use avkit::unexpected::{av_gin_colon, dim_triple, DirectAv};

fn fp() -> PrimeField {
    PrimeField::default()
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..4, n), 1..=4).prop_map(move |gens| {
        let gens: Vec<Monomial> = gens
            .into_iter()
            .map(|mut e| {
                if e.iter().all(|&x| x == 0) {
                    e[0] = 1;
                }
                Monomial::from_exps(&e)
            })
            .collect();
        MonomialIdeal::new(n, gens)
    })
}

fn random_ideal(n: usize, count: usize, seed: u64) -> Ideal<PrimeField> {
    let field = fp();
    let gens = (0..count as u64)
        .map(|k| random_form(&field, 2 + (k as usize % 2), n, seed.wrapping_mul(31).wrapping_add(k)))
        .collect();
    Ideal::new(&field, n, gens).unwrap()
}

fn point_set(nvars: usize, count: usize, seed: u64) -> (Ideal<PrimeField>, Vec<ProjPoint<PrimeField>>) {
    let pts = random_points(&fp(), nvars, count, seed);
    (points_ideal(&fp(), &pts).unwrap(), pts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_form_ignores_ideal_multiples(seed in any::<u64>(), n in 2usize..=3) {
        let field = fp();
        let i = random_ideal(n, 2, seed);
        let a = random_form(&field, 2, n, seed ^ 1);
        let h = random_form(&field, 4, n, seed ^ 2);
        let f = a.mul(&i.generators()[0]).add(&h);
        let ord = MonomialOrder::DegRevLex;
        prop_assert_eq!(i.normal_form(&f, ord).unwrap(), i.normal_form(&h, ord).unwrap());
    }

    #[test]
    fn intersection_commutes_and_associates(a in monomial_ideal(3), b in monomial_ideal(3), c in monomial_ideal(3)) {
        let field = fp();
        let (a, b, c) = (
            Ideal::from_monomial_ideal(&field, &a),
            Ideal::from_monomial_ideal(&field, &b),
            Ideal::from_monomial_ideal(&field, &c),
        );
        let ab = ideal_intersection(&a, &b).unwrap();
        prop_assert!(ab.same_ideal(&ideal_intersection(&b, &a).unwrap()).unwrap());
        let left = ideal_intersection(&ab, &c).unwrap();
        let right = ideal_intersection(&a, &ideal_intersection(&b, &c).unwrap()).unwrap();
        prop_assert!(left.same_ideal(&right).unwrap());
    }

    #[test]
    fn saturation_is_idempotent_and_grows(seed in any::<u64>()) {
        // a point ideal times the maximal ideal squared, plus a random form
        let field = fp();
        let p = ProjPoint::random(&field, 3, seed);
        let pt = fat_point_ideal(&field, &p, 1).unwrap();
        let i = pt.product(&Ideal::maximal(&field, 3).power(2).unwrap()).unwrap();
        let s = saturation(&i, None).unwrap();
        prop_assert!(saturation(&s, None).unwrap().same_ideal(&s).unwrap());
        for t in 0..=5 {
            prop_assert!(graded_dim_ideal(&i, t).unwrap() <= graded_dim_ideal(&s, t).unwrap());
        }
        prop_assert!(s.same_ideal(&pt).unwrap());
    }

    #[test]
    fn hilbert_function_is_order_independent(seed in any::<u64>(), n in 2usize..=4) {
        let i = random_ideal(n, n, seed);
        let lex = i.initial_ideal(MonomialOrder::Lex).unwrap();
        let grevlex = i.initial_ideal(MonomialOrder::DegRevLex).unwrap();
        prop_assert_eq!(monomial_hilbert_function(&lex, 8), monomial_hilbert_function(&grevlex, 8));
    }

    #[test]
    fn monomial_hilbert_functions_are_o_sequences(m in monomial_ideal(3)) {
        let h = monomial_hilbert_function(&m, 10);
        let gens: Vec<Vec<u32>> = m.generators().iter().map(|g| g.exponents()).collect();
        for (t, v) in h.iter().enumerate() {
            prop_assert_eq!(*v, common::standard_count(3, &gens, t));
        }
        prop_assert!(is_o_sequence(&h).ok);
    }

    #[test]
    fn point_hilbert_functions(nvars in 3usize..=4, count in 1usize..=12, seed in any::<u64>()) {
        let (i, pts) = point_set(nvars, count, seed);
        let raw: Vec<Vec<u64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        let h = stabilized_hilbert_function(&i, 32).unwrap();
        prop_assert_eq!(h.stable_value(), Some(count as u64));
        prop_assert!(h.values.windows(2).all(|w| w[0] <= w[1]));
        for t in 0..h.values.len().min(6) {
            prop_assert_eq!(h.values[t], common::points_hf(&raw, t));
        }
        prop_assert!(is_o_sequence(&h_vector(&i).unwrap().entries).ok);
    }

    #[test]
    fn disjoint_unions_add_lengths(a in 1usize..=6, b in 1usize..=6, seed in any::<u64>()) {
        let (x, _) = point_set(4, a, seed);
        let (y, _) = point_set(4, b, seed ^ 0x5555);
        let u = union(&[x, y]).unwrap();
        prop_assert_eq!(stabilized_hilbert_function(&u, 32).unwrap().stable_value(), Some((a + b) as u64));
    }

    #[test]
    fn fat_point_dimensions(m in 1usize..=4, seed in any::<u64>()) {
        let field = fp();
        let p = ProjPoint::random(&field, 4, seed);
        let i = fat_point_ideal(&field, &p, m).unwrap();
        for t in m - 1..=m + 2 {
            let want = common::binom(t as i64 + 3, 3) - common::binom(m as i64 + 2, 3);
            prop_assert_eq!(graded_dim_ideal(&i, t).unwrap() as i64, want);
        }
    }

    #[test]
    fn colon_by_powers_grows(m in monomial_ideal(3), j in 0u32..4) {
        let small = monomial_colon_by_power(&m, j);
        let big = monomial_colon_by_power(&m, j + 1);
        prop_assert!(small.generators().iter().all(|g| big.contains(g)));
    }

    #[test]
    fn lex_segments_from_hilbert_functions(m in monomial_ideal(3)) {
        let h = monomial_hilbert_function(&m, 6);
        let lex = lex_segment_ideal_for(&h, 3, 6).unwrap();
        prop_assert_eq!(monomial_hilbert_function(&lex, 6), h);
        for t in 0..=6 {
            prop_assert!(is_lex_segment(&lex, t));
        }
    }

    #[test]
    fn distraction_keeps_the_hilbert_function(m in monomial_ideal(2)) {
        // make it artinian
        let mut gens = m.generators().to_vec();
        gens.push(Monomial::from_exps(&[4, 0]));
        gens.push(Monomial::from_exps(&[0, 4]));
        let art = MonomialIdeal::new(2, gens);
        let (i, pts) = distraction(&fp(), &art).unwrap();
        let mut h = monomial_hilbert_function(&art, 10);
        while h.last() == Some(&0) && h.len() > 1 {
            h.pop();
        }
        prop_assert_eq!(h_vector(&i).unwrap().entries, h);
        prop_assert!(pts.iter().all(|p| i.generators().iter().all(|g| p.satisfies(g))));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gin_preserves_hilbert_function(seed in any::<u64>(), n in 3usize..=4) {
        let i = random_ideal(n, 2, seed);
        let g = gin(&i, 2, seed, 6).unwrap();
        let h = hilbert_function(&i, 6).unwrap();
        prop_assert_eq!(monomial_hilbert_function(g.ideal(), 6), h.values);
        prop_assert!(g.borel_certified);
    }

    #[test]
    fn gin_over_the_rationals_is_borel_fixed(count in 2usize..=7, seed in 0u64..1000) {
        let q = Rationals;
        let pts = random_points(&q, 3, count, seed);
        let i = points_ideal(&q, &pts).unwrap();
        let g = gin(&i, 2, seed, 5).unwrap();
        prop_assert!(is_borel_fixed(g.ideal()));
    }

    #[test]
    fn triples_are_ordered(nvars in 3usize..=4, count in 2usize..=10, t in 1usize..=5, m in 1usize..=5, seed in any::<u64>()) {
        let (i, _) = point_set(nvars, count, seed);
        let d = dim_triple(&i, t, m, 2, seed).unwrap();
        prop_assert!(d.adim >= d.edim);
        prop_assert!(d.edim as i64 >= d.vdim);
    }

    #[test]
    fn av_is_monotone_in_j_and_an_o_sequence(nvars in 3usize..=4, count in 2usize..=10, seed in any::<u64>()) {
        let (i, pts) = point_set(nvars, count, seed);
        let raw: Vec<Vec<u64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
        let g = gin(&i, 2, seed, 6).unwrap();
        for j in 0..=2usize {
            let seq: Vec<u64> = (1..=6 - j).map(|m| av_gin_colon(&g, j, m).unwrap()).collect();
            if seq[0] > 0 {
                prop_assert!(is_o_sequence(&seq).ok);
            }
            for m in 1..=5 - j {
                prop_assert!(av_gin_colon(&g, j, m).unwrap() >= av_gin_colon(&g, j + 1, m).unwrap());
            }
        }
        let direct = DirectAv::new(&i, 2, seed).unwrap();
        for m in 1..=3 {
            let v = direct.av(1, m).unwrap();
            prop_assert_eq!(v, av_gin_colon(&g, 1, m).unwrap());
            prop_assert_eq!(v as i64, common::points_av(&raw, 1, m, seed));
        }
    }

    #[test]
    fn points_in_a_plane_impose_expected_conditions(count in 2usize..=9, seed in any::<u64>(), t in 1usize..=5) {
        // points on the plane x3 = 0 of P^3: adim = vdim for t >= m
        let field = fp();
        let pts: Vec<ProjPoint<PrimeField>> = random_points(&field, 3, count, seed)
            .into_iter()
            .map(|p| {
                let mut c = p.coords().to_vec();
                c.push(0);
                ProjPoint::new(&field, c).unwrap()
            })
            .collect();
        let i = points_ideal(&field, &pts).unwrap();
        for m in 1..=t {
            let d = dim_triple(&i, t, m, 2, seed).unwrap();
            prop_assert_eq!(d.adim as i64, d.vdim);
        }
    }
}
