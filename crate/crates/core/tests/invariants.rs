use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use ringlab::constructors::{make_ex22, RingExprPlan};
use ringlab::expr::{build_ring, parse_ring_expr};
use ringlab::poly::{poly_add, poly_mul, Polynomial};
use ringlab::properties::{
    check_property, is_weakly_reversible, is_reversible_element, verify_witness, PropertyId, SearchLimits,
};
use ringlab::{FiniteRing, Side};

const SMALL: [&str; 10] = ["Z6", "Z8", "M2(Z2)", "T2(Z2)", "S2(Z2)", "S2(Z4)", "S3(Z2)", "Z2 x Z4", "ex22(2)", "T2(Z3)"];

fn small_rings() -> &'static [Arc<FiniteRing>] {
    static RINGS: OnceLock<Vec<Arc<FiniteRing>>> = OnceLock::new();
    RINGS.get_or_init(|| SMALL.iter().map(|e| build_ring(e, 4096).unwrap()).collect())
}

fn ring_index() -> impl Strategy<Value = usize> {
    0..SMALL.len()
}

fn plan() -> impl Strategy<Value = RingExprPlan> {
    let leaf = prop_oneof![
        (2usize..40).prop_map(RingExprPlan::Zn),
        prop::sample::select(vec![2u64, 3, 5]).prop_map(RingExprPlan::Ex22),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (1usize..4, inner.clone()).prop_map(|(k, p)| RingExprPlan::Matrix(k, Box::new(p))),
            (1usize..4, inner.clone()).prop_map(|(k, p)| RingExprPlan::UpperTriangular(k, Box::new(p))),
            (1usize..4, inner.clone()).prop_map(|(k, p)| RingExprPlan::SkewTriangular(k, Box::new(p))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExprPlan::Product(Box::new(a), Box::new(b))),
            (inner.clone(), 0usize..20).prop_map(|(p, e)| RingExprPlan::Corner(Box::new(p), e)),
            (inner, prop::collection::vec(0usize..20, 0..3)).prop_map(|(p, g)| RingExprPlan::Quotient(Box::new(p), g)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_plans_parse_back(p in plan()) {
        let text = p.to_string();
        let parsed = parse_ring_expr(&text).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn annihilators_are_one_sided_ideals(i in ring_index(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let r = &small_rings()[i];
        let x = r.set_of(picks.iter().map(|p| p.index(r.size())));
        let right = r.annihilator(Side::Right, &x);
        let left = r.annihilator(Side::Left, &x);
        prop_assert!(r.is_one_sided_ideal(Side::Right, &right));
        prop_assert!(r.is_one_sided_ideal(Side::Left, &left));
        for a in x.iter() {
            prop_assert!(right.iter().all(|c| r.mul(a, c) == 0));
            prop_assert!(left.iter().all(|c| r.mul(c, a) == 0));
        }
        if let Some(k) = r.kernel_annihilator(Side::Right, &x) {
            prop_assert_eq!(k, right);
        }
    }

    #[test]
    fn algebra_tables_match_structure_constants(a in 0usize..64, b in 0usize..64) {
        let r = make_ex22(2).unwrap();
        let alg = r.algebra().unwrap();
        prop_assert_eq!(alg.decode(r.mul(a, b)), alg.mul_coords(&alg.decode(a), &alg.decode(b)));
        prop_assert_eq!(alg.decode(r.add(a, b)), alg.add_coords(&alg.decode(a), &alg.decode(b)));
    }

    #[test]
    fn polynomial_arithmetic_is_a_ring(
        i in ring_index(),
        cs in prop::collection::vec(prop::collection::vec(any::<prop::sample::Index>(), 0..4), 3),
    ) {
        let r = &small_rings()[i];
        let p: Vec<Polynomial> = cs
            .iter()
            .map(|c| Polynomial::new(r, c.iter().map(|x| x.index(r.size())).collect()))
            .collect();
        let (f, g, h) = (&p[0], &p[1], &p[2]);
        prop_assert_eq!(poly_mul(r, &poly_mul(r, f, g), h), poly_mul(r, f, &poly_mul(r, g, h)));
        prop_assert_eq!(poly_mul(r, f, &poly_add(r, g, h)), poly_add(r, &poly_mul(r, f, g), &poly_mul(r, f, h)));
        let one = Polynomial::constant(r, r.one());
        prop_assert_eq!(&poly_mul(r, &one, f), f);
    }

    #[test]
    fn power_orbits_end_in_a_cycle(i in ring_index(), a in any::<prop::sample::Index>()) {
        let r = &small_rings()[i];
        let a = a.index(r.size());
        let orbit = r.power_orbit(a);
        prop_assert_eq!(orbit[0], a);
        let next = r.mul(*orbit.last().unwrap(), a);
        prop_assert!(orbit.contains(&next));
        prop_assert_eq!(r.is_nilpotent(a), orbit.contains(&0));
    }
}

#[test]
fn nil_set_contains_the_radical() {
    for r in small_rings() {
        let j = r.jacobson_radical();
        assert!(j.is_subset(r.nil_set()), "{}", r.name());
        assert!(r.is_two_sided_ideal(&j), "{}", r.name());
    }
}

#[test]
fn weak_reversibility_exponents_are_genuine() {
    for r in small_rings() {
        match is_weakly_reversible(r) {
            Ok(exps) => {
                assert_eq!(exps.len(), r.size() - 1);
                for (a, m) in exps {
                    let p = r.pow(a, m);
                    assert!(p != 0 && is_reversible_element(r, p), "{} {a}^{m}", r.name());
                }
            }
            Err(a) => assert!(r.power_orbit(a).iter().all(|&p| p == 0 || !is_reversible_element(r, p))),
        }
    }
}

#[test]
fn every_property_witness_replays() {
    let limits = SearchLimits::default();
    for r in small_rings() {
        for p in PropertyId::ALL {
            let rep = check_property(r, p, limits).unwrap();
            verify_witness(r, &rep).unwrap_or_else(|e| panic!("{} {p}: {e}", r.name()));
        }
    }
}

#[test]
fn known_implications_hold_on_small_rings() {
    let limits = SearchLimits::default();
    let implications = [
        (PropertyId::Reversible, PropertyId::WeaklyReversible),
        (PropertyId::Reversible, PropertyId::Semicommutative),
        (PropertyId::WeaklyReversible, PropertyId::Abelian),
        (PropertyId::WeaklyReversible, PropertyId::TwoPrimal),
        (PropertyId::Reduced, PropertyId::Reversible),
        (PropertyId::Cn, PropertyId::PiCn),
        (PropertyId::PiCn, PropertyId::TwoPrimal),
        (PropertyId::PiCn, PropertyId::MccoyRight),
        (PropertyId::Reduced, PropertyId::NonsingularRight),
        (PropertyId::Reduced, PropertyId::NonsingularLeft),
    ];
    for r in small_rings() {
        let holds = |p| check_property(r, p, limits).unwrap().verdict;
        for (a, b) in implications {
            assert!(!holds(a) || holds(b), "{}: {a} without {b}", r.name());
        }
        // The converse needs weak reversibility: M2(Z2) is nonsingular but not reduced.
        if holds(PropertyId::WeaklyReversible) {
            assert_eq!(holds(PropertyId::NonsingularRight), holds(PropertyId::Reduced), "{}", r.name());
        }
    }
}
