//! Property tests over randomized small instances: canonical bases,
//! parse/print round trips, monoid invariance of the associated ideal,
//! monotonicity in the multiplicative set, and the equivalence of the
//! membership and ideal-equality views.

use proptest::prelude::*;

use locus_core::localization;
use locus_core::monomial::{Monomial, MonomialOrder};
use locus_core::parse::parse_polynomial;
use locus_core::poly::Polynomial;
use locus_core::ring::{MultSetSpec, RingPresentation};
use locus_core::scalar::FieldSpec;
use locus_core::Ideal;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Q),
        Just(FieldSpec::Fp(2)),
        Just(FieldSpec::Fp(5)),
        Just(FieldSpec::Fp(13)),
    ]
}

/// Random polynomial in two variables: up to `terms` terms of degree at
/// most 2 in each variable, coefficients in a small window.
fn polys(field: FieldSpec, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..=terms).prop_map(move |raw| {
        let terms = raw
            .into_iter()
            .map(|((a, b), c)| (Monomial::from_exps(vec![a, b]), field.from_i64(c)))
            .collect();
        Polynomial::from_terms(field, 2, terms)
    })
}

fn nonzero_polys(field: FieldSpec, terms: usize) -> impl Strategy<Value = Polynomial> {
    polys(field, terms).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_is_permutation_invariant(
        field in fields(),
        g1 in prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4),
        g2 in prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4),
        g3 in prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4),
    ) {
        let build = |raw: &[((u32, u32), i64)]| {
            let terms = raw
                .iter()
                .map(|((a, b), c)| (Monomial::from_exps(vec![*a, *b]), field.from_i64(*c)))
                .collect();
            Polynomial::from_terms(field, 2, terms)
        };
        let gens = vec![build(&g1), build(&g2), build(&g3)];
        let forward = Ideal::new(field, 2, gens.clone());
        let mut rev = gens;
        rev.reverse();
        let backward = Ideal::new(field, 2, rev);
        for ord in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let a = forward.groebner(&ord);
            let b = backward.groebner(&ord);
            prop_assert_eq!(a.as_ref(), b.as_ref());
        }
    }

    #[test]
    fn print_parse_roundtrip(field in fields(), p in polys(FieldSpec::Q, 5)) {
        // re-key the polynomial into the sampled field so both Q and GF(p)
        // printers are exercised
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let locus_core::Scalar::Q(r) = c else { unreachable!() };
                use num_traits::ToPrimitive;
                (m.clone(), field.from_i64(r.numer().to_i64().unwrap()))
            })
            .collect();
        let p = Polynomial::from_terms(field, 2, terms);
        let vars = vec!["x".to_string(), "y".to_string()];
        let printed = p.render(&vars);
        let reparsed = parse_polynomial(&printed, field, &vars).unwrap();
        prop_assert_eq!(p, reparsed, "printed form: {}", printed);
    }

    #[test]
    fn membership_matches_ideal_equality(
        field in fields(),
        f in polys(FieldSpec::Q, 3),
        g in nonzero_polys(FieldSpec::Q, 3),
        h in nonzero_polys(FieldSpec::Q, 3),
    ) {
        let rekey = |p: &Polynomial| {
            let terms = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let locus_core::Scalar::Q(r) = c else { unreachable!() };
                    use num_traits::ToPrimitive;
                    (m.clone(), field.from_i64(r.numer().to_i64().unwrap()))
                })
                .collect();
            Polynomial::from_terms(field, 2, terms)
        };
        let (f, g, h) = (rekey(&f), rekey(&g), rekey(&h));
        let ideal = Ideal::new(field, 2, vec![g, h]);
        let member = ideal.contains(&f);
        let same = ideal.add_poly(&f) == ideal;
        prop_assert_eq!(member, same);
        prop_assert_eq!(member, ideal.reduce(&f, &MonomialOrder::GrevLex).is_zero());
    }
}

fn small_ring(which: usize) -> RingPresentation {
    let rings = [
        RingPresentation::parse(FieldSpec::Q, &["x", "y"], &["x*y"]).unwrap(),
        RingPresentation::parse(FieldSpec::Q, &["x", "y"], &["x^2*y"]).unwrap(),
        RingPresentation::parse(FieldSpec::Q, &["x", "y"], &[]).unwrap(),
        RingPresentation::parse(FieldSpec::Fp(5), &["x", "y"], &["x*y"]).unwrap(),
        RingPresentation::parse(FieldSpec::Fp(2), &["x", "y"], &["x^2 + x"]).unwrap(),
    ];
    rings[which % rings.len()].clone()
}

fn gen_pool(r: &RingPresentation) -> Vec<Polynomial> {
    ["x", "y", "x + 1", "y + 1", "x + y", "x*y + 1", "2", "x^2"]
        .iter()
        .map(|s| r.poly(s).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // enlarging a generating set by monoid products changes nothing
    #[test]
    fn monoid_closure_invariance(which in 0usize..5, i in 0usize..8, j in 0usize..8) {
        let r = small_ring(which);
        let pool = gen_pool(&r);
        let (g1, g2) = (pool[i].clone(), pool[j].clone());
        let small = MultSetSpec::gens(vec![g1.clone(), g2.clone()]).unwrap();
        let big = MultSetSpec::gens(vec![
            g1.clone(),
            g2.clone(),
            g1.mul(&g2),
            g1.mul(&g1),
        ])
        .unwrap();
        let a_small = localization::ass_set(&r, &small).unwrap();
        let a_big = localization::ass_set(&r, &big).unwrap();
        prop_assert_eq!(&a_small, &a_big);
        if !a_small.is_trivial() {
            prop_assert!(localization::localization_iso(&r, &small, &big).unwrap());
        }
    }

    // a larger multiplicative set has a larger associated ideal, and the
    // canonical map exists whenever the larger set stays localizable
    #[test]
    fn subset_monotonicity(which in 0usize..5, i in 0usize..8, j in 0usize..8) {
        let r = small_ring(which);
        let pool = gen_pool(&r);
        let s = MultSetSpec::gens(vec![pool[i].clone()]).unwrap();
        let t = MultSetSpec::gens(vec![pool[i].clone(), pool[j].clone()]).unwrap();
        let a_s = localization::ass_set(&r, &s).unwrap();
        let a_t = localization::ass_set(&r, &t).unwrap();
        prop_assert!(a_t.contains_ideal(&a_s), "ass must grow with the set");
        if !a_t.is_trivial() && !a_s.is_trivial() {
            prop_assert!(localization::hom_exists(&r, &s, &t).unwrap());
        }
    }

    // inverting units does nothing
    #[test]
    fn unit_generators_are_invisible(which in 0usize..5, c in 1i64..6) {
        let r = small_ring(which);
        let konst = Polynomial::constant(r.field(), r.nvars(), r.field().from_i64(c));
        if konst.is_zero() {
            return Ok(()); // c collapsed mod p
        }
        let s = MultSetSpec::gens(vec![konst]).unwrap();
        let ass = localization::ass_set(&r, &s).unwrap();
        prop_assert_eq!(&ass, r.ideal());
        let pres = localization::localize_presentation(&r, &s).unwrap();
        prop_assert!(!pres.zero_ring);
        prop_assert_eq!(&localization::kernel_of_sigma(&pres), r.ideal());
    }

    // the saturation shortcut agrees with the iterated colon fixpoint
    #[test]
    fn saturation_is_colon_fixpoint(which in 0usize..5, i in 0usize..8) {
        let r = small_ring(which);
        let f = gen_pool(&r)[i].clone();
        if f.is_zero() {
            return Ok(()); // the constant collapsed mod p
        }
        let sat = r.ideal().saturate_poly(&f).unwrap();
        let mut fix = r.ideal().clone();
        loop {
            let next = fix.colon_poly(&f).unwrap();
            if next == fix {
                break;
            }
            fix = next;
        }
        prop_assert_eq!(sat, fix);
    }
}
