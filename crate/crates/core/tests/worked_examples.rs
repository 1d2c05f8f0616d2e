//! Worked examples for the kernel, constructors, polynomials and properties.

use std::sync::Arc;

use ringlab::constructors::{
    make_corner, make_ex22, make_matrix, make_product, make_quotient, make_skew_triangular, make_upper_triangular,
    make_zn, matrix_unit,
};
use ringlab::poly::{constant_annihilator, poly_mul, PolyRing, Polynomial};
use ringlab::properties::{
    check_property, is_reversible_element, is_weakly_reversible, mccoy_falsify, PropertyId, SearchLimits, Witness,
};
use ringlab::{Elem, FiniteRing, RingError, Side};

fn ex22() -> Arc<FiniteRing> {
    make_ex22(2).unwrap()
}

/// `(x, x², y, y², yx)` handles of the monomial algebra.
fn gens(r: &FiniteRing) -> (Elem, Elem, Elem, Elem, Elem) {
    let a = r.algebra().unwrap();
    (a.basis_element(1), a.basis_element(2), a.basis_element(3), a.basis_element(4), a.basis_element(5))
}

fn m2() -> Arc<FiniteRing> {
    make_matrix(&make_zn(2).unwrap(), 2).unwrap()
}

fn same_tables(a: &FiniteRing, b: &FiniteRing) -> bool {
    a.mul_table() == b.mul_table() && a.add_table() == b.add_table() && a.one() == b.one()
}

#[test]
fn validation_accepts_rings_and_rejects_a_corrupted_cell() {
    let z8 = make_zn(8).unwrap();
    assert!(z8.validate().is_ok());
    assert!(ex22().validate().is_ok());
    let mut mul = z8.mul_table();
    mul[2 * 8 + 2] = 5;
    match FiniteRing::from_tables("Z8-corrupt", z8.add_table(), mul, 1) {
        Err(RingError::Axiom(failure)) => assert!(!failure.elems.is_empty()),
        other => panic!("expected an axiom failure, got {other:?}"),
    }
}

#[test]
fn annihilators_of_the_example() {
    let r = ex22();
    let (x, x2, ..) = gens(&r);
    assert_eq!(r.annihilator(Side::Right, &r.zero_set()), r.full_set());
    assert_eq!(r.annihilator_of(Side::Right, x).len(), 16);
    assert_eq!(r.annihilator_of(Side::Left, x).len(), 8);
    assert_eq!(r.annihilator_of(Side::Right, x2), r.annihilator_of(Side::Left, x2));
    assert_eq!(r.annihilator_of(Side::Right, x2).len(), 32);
}

#[test]
fn power_orbits() {
    let z8 = make_zn(8).unwrap();
    assert_eq!(z8.power_orbit(2), vec![2, 4, 0]);
    assert_eq!(z8.power_orbit(1), vec![1]);
    let r = ex22();
    let (x, x2, ..) = gens(&r);
    assert_eq!(r.power_orbit(x), vec![x, x2, 0]);
}

#[test]
fn nil_sets_and_radicals() {
    let r = ex22();
    let (x, x2, y, y2, yx) = gens(&r);
    let span = r.additive_closure(&r.set_of([x, x2, y, y2, yx]));
    assert_eq!(r.nil_set(), &span);
    assert_eq!(span.len(), 32);
    assert_eq!(r.jacobson_radical(), span);

    let z8 = make_zn(8).unwrap();
    assert_eq!(z8.nil_set(), &z8.set_of([0, 2, 4, 6]));
    assert_eq!(z8.jacobson_radical(), z8.set_of([0, 2, 4, 6]));

    // Nilpotent 2×2 matrices over F₂ are [a b; c a] with a² = bc: three with a = 0, one with a = 1.
    let m2 = m2();
    let by_count = (0..16usize)
        .filter(|&h| {
            let (a, b, c, d) = (h >> 3 & 1, h >> 2 & 1, h >> 1 & 1, h & 1);
            a == d && a * a % 2 == b * c % 2
        })
        .count();
    assert_eq!(by_count, 4);
    assert_eq!(m2.nil_set().len(), by_count);
    assert!(m2.nil_set().iter().all(|a| m2.mul(a, a) == 0));
    assert!(m2.jacobson_radical().is_zero_only());
}

#[test]
fn ideal_closures() {
    let r = ex22();
    let (.., yx) = gens(&r);
    assert_eq!(r.ideal_closure(&r.zero_set()), r.zero_set());
    assert_eq!(r.ideal_closure(&r.set_of([r.one()])), r.full_set());
    assert_eq!(r.ideal_closure(&r.set_of([yx])), r.set_of([0, yx]));
}

#[test]
fn bounds_and_essentiality() {
    let r = ex22();
    let (x, ..) = gens(&r);
    assert_eq!(r.bound_of_right_ideal(&r.full_set()).unwrap(), r.full_set());
    assert_eq!(r.bound_of_right_ideal(&r.zero_set()).unwrap(), r.zero_set());
    let ann = r.annihilator_of(Side::Right, x).clone();
    let bound = r.bound_of_right_ideal(&ann).unwrap();
    assert!(bound.has_nonzero() && r.is_two_sided_ideal(&bound));

    assert!(r.is_essential(Side::Right, &r.full_set()));
    let z2 = make_zn(2).unwrap();
    assert!(z2.singular_set(Side::Right).is_zero_only());
    assert!(r.singular_set(Side::Right).has_nonzero());
}

#[test]
fn basic_constructors() {
    let z2 = make_zn(2).unwrap();
    assert_eq!(z2.size(), 2);
    assert!(z2.units().contains(1));
    assert_eq!(make_zn(4).unwrap().nil_set().len(), 2);
    let m2 = m2();
    assert_eq!(m2.size(), 16);
    let t2 = make_upper_triangular(&z2, 2).unwrap();
    assert_eq!(t2.size(), 8);
    assert!(same_tables(&make_matrix(&make_zn(6).unwrap(), 1).unwrap(), &make_zn(6).unwrap()));
    assert_eq!(make_skew_triangular(&z2, 2).unwrap().size(), 4);
    assert_eq!(make_skew_triangular(&make_zn(4).unwrap(), 2).unwrap().size(), 16);
    assert_eq!(make_product(&z2, &make_zn(3).unwrap()).unwrap().size(), 6);
}

#[test]
fn s3_matrix_units() {
    let s3 = make_skew_triangular(&make_zn(2).unwrap(), 3).unwrap();
    assert_eq!(s3.size(), 16);
    let (a, b) = (matrix_unit(&s3, 1, 2).unwrap(), matrix_unit(&s3, 2, 3).unwrap());
    assert_ne!(s3.mul(a, b), 0);
    assert_eq!(s3.mul(b, a), 0);
    assert_eq!(s3.mul(a, a), 0);
    assert_eq!(s3.mul(b, b), 0);
}

#[test]
fn example_basis_products_and_units() {
    let r = ex22();
    let (x, _, y, _, yx) = gens(&r);
    assert_eq!(r.mul(x, y), 0);
    assert_eq!(r.mul(y, x), yx);
    assert_eq!(r.size(), 64);
    let alg = r.algebra().unwrap();
    let units = r.units();
    assert_eq!(units.len(), 32);
    assert!(r.elements().all(|h| units.contains(h) == (alg.decode(h)[0] != 0)));
}

#[test]
fn corners_and_quotients() {
    let r = ex22();
    assert!(same_tables(&make_corner(&r, r.one()).unwrap(), &r));

    let q = make_quotient(&r, &r.nil_set().clone()).unwrap();
    assert_eq!(q.size(), 2);
    assert!(q.nonzero_elements().all(|a| q.mul(a, a) != 0));

    let t3 = make_upper_triangular(&make_zn(2).unwrap(), 3).unwrap();
    let q = make_quotient(&t3, &t3.nil_set().clone()).unwrap();
    // A ring of order 8 in which every element is idempotent is F₂³.
    assert_eq!(q.size(), 8);
    assert!(q.elements().all(|a| q.is_idempotent(a)));
    assert!(q.is_commutative());
}

#[test]
fn polynomial_products() {
    let m2 = m2();
    let e = |i, j| matrix_unit(&m2, i, j).unwrap();
    let f = Polynomial::new(&m2, vec![e(1, 1), e(1, 2)]);
    assert!(poly_mul(&m2, &f, &Polynomial::zero(&m2)).is_zero());
    let g = Polynomial::new(&m2, vec![e(2, 1), e(1, 1)]);
    assert!(poly_mul(&m2, &f, &g).is_zero());

    let r = ex22();
    let (x, _, y, ..) = gens(&r);
    assert!(poly_mul(&r, &Polynomial::constant(&r, x), &Polynomial::constant(&r, y)).is_zero());
}

#[test]
fn polynomial_annihilators() {
    let m2 = m2();
    let e = |i, j| matrix_unit(&m2, i, j).unwrap();
    let pr = PolyRing::new(&m2, 4);
    let ann = pr.right_annihilator(&Polynomial::zero(&m2), 2, 1 << 20).unwrap();
    assert!(ann.everything);

    let f = Polynomial::new(&m2, vec![e(1, 1), e(1, 2)]);
    let fast = pr.right_annihilator(&f, 1, 1 << 20).unwrap().witness.unwrap();
    assert!(poly_mul(&m2, &f, &fast).is_zero());
    let slow = pr.right_annihilator_enumerated(&f, 1, 1 << 20).unwrap().witness.unwrap();
    assert!(poly_mul(&m2, &f, &slow).is_zero());
    let expected = Polynomial::new(&m2, vec![e(2, 1), e(1, 1)]);
    let mut all = Vec::new();
    pr.for_each_right_annihilator(&f, 1, 1 << 20, |g| {
        all.push(Polynomial::new(&m2, g.to_vec()));
        true
    })
    .unwrap();
    assert!(all.contains(&expected));
    assert!(constant_annihilator(&m2, &[f], Side::Right).is_zero_only());

    let r = ex22();
    let (x, x2, y, ..) = gens(&r);
    assert_eq!(constant_annihilator(&r, &[Polynomial::zero(&r)], Side::Right), r.full_set());
    let g = Polynomial::new(&r, vec![x, r.mul(x2, x)]);
    let c = constant_annihilator(&r, &[g], Side::Right);
    assert!(c.contains(y));
}

#[test]
fn reversibility_of_elements() {
    let r = ex22();
    let (x, x2, ..) = gens(&r);
    assert!(is_reversible_element(&r, 0));
    assert!(!is_reversible_element(&r, x));
    assert!(is_reversible_element(&r, x2));
}

#[test]
fn weak_reversibility() {
    let exps = is_weakly_reversible(&ex22()).unwrap();
    assert_eq!(exps.len(), 63);
    assert!(exps.iter().all(|&(_, m)| m <= 2));
    assert!(is_weakly_reversible(&m2()).is_err());
    for n in [2, 3, 4, 6, 8, 12] {
        assert!(is_weakly_reversible(&make_zn(n).unwrap()).is_ok());
    }
}

#[test]
fn property_reports() {
    let lim = SearchLimits::default();
    let m2 = m2();
    let rep = check_property(&m2, PropertyId::Abelian, lim).unwrap();
    assert!(!rep.verdict);
    let Witness::NonCentral { a, .. } = rep.witness else { panic!("{:?}", rep.witness) };
    assert!(m2.is_idempotent(a) && !m2.is_central(a));
    assert_eq!(a, matrix_unit(&m2, 1, 1).unwrap());

    let r = ex22();
    assert!(check_property(&r, PropertyId::TwoPrimal, lim).unwrap().verdict);
    assert!(check_property(&r, PropertyId::StronglyAbRight, lim).unwrap().verdict);

    let rep = check_property(&make_zn(8).unwrap(), PropertyId::Reduced, lim).unwrap();
    assert!(!rep.verdict);
    assert_eq!(rep.witness, Witness::SquareZero { a: 4 });
}

#[test]
fn mccoy_examples() {
    let m2 = m2();
    let e = |i, j| matrix_unit(&m2, i, j).unwrap();
    let v = mccoy_falsify(&m2, Side::Right, 1, 1 << 20).unwrap().unwrap();
    let f = Polynomial::new(&m2, v.f.clone());
    let g = Polynomial::new(&m2, v.g.clone());
    assert!(!f.is_zero() && !g.is_zero());
    assert!(poly_mul(&m2, &f, &g).is_zero());
    assert!(constant_annihilator(&m2, std::slice::from_ref(&f), Side::Right).is_zero_only());
    assert_eq!(f.coeffs(), &[e(1, 1), e(1, 2)]);
    assert_eq!(g.coeffs(), &[e(2, 1), e(1, 1)]);

    let r = ex22();
    for side in [Side::Right, Side::Left] {
        assert!(mccoy_falsify(&r, side, 3, 1 << 26).unwrap().is_none());
    }
    assert!(mccoy_falsify(&make_zn(4).unwrap(), Side::Right, 3, 1 << 26).unwrap().is_none());
}
