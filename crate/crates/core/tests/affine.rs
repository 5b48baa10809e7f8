use std::collections::BTreeSet;

use proptest::prelude::*;
use voakit_core::affine::{is_admissible, pair, shifted_reflect, AffineWeight, RealCoroot};
use voakit_core::exact::{int, q, Scalar};
use voakit_core::rootsys::{Label, RootSystem, Weight};

fn f4() -> RootSystem {
    RootSystem::build(Label::F4)
}

fn fund(rs: &RootSystem, c: [Scalar; 4]) -> Weight {
    rs.from_fund(&c)
}

fn lambda(i: usize) -> AffineWeight {
    let f = f4();
    let finite = match i {
        1 => Weight::zero(),
        2 => fund(&f, [q(-3, 2), int(0), int(0), int(0)]),
        3 => fund(&f, [q(-1, 2), q(-1, 2), int(0), int(0)]),
        4 => fund(&f, [int(0), q(-3, 2), int(1), int(0)]),
        _ => unreachable!(),
    };
    AffineWeight::at_level(q(-5, 2), finite)
}

fn finite(r: Weight) -> RealCoroot {
    RealCoroot::finite(r)
}

fn simple_set(lam: &AffineWeight) -> BTreeSet<RealCoroot> {
    let a = is_admissible(lam, &f4()).unwrap();
    assert!(a.admissible, "{lam}");
    assert!(a.regular_dominant);
    assert_eq!(a.integral_rank, 5);
    a.simple_coroots.into_iter().collect()
}

#[test]
fn lambda_n_family_is_admissible() {
    let f = f4();
    for n in 1..=4 {
        let mut expected: BTreeSet<RealCoroot> = f.simple_roots().iter().cloned().map(finite).collect();
        expected.insert(RealCoroot::new(-&Weight::eps(1), 1));
        assert_eq!(simple_set(&AffineWeight::lambda_n(n)), expected, "n={n}");
    }
}

#[test]
fn category_o_weights_are_admissible() {
    let f = f4();
    let s = f.simple_roots();
    let (a0, a1, a2, a3, a4) = (RealCoroot::alpha0(&f), &s[0], &s[1], &s[2], &s[3]);
    let e = Weight::eps;
    let l2: BTreeSet<_> = [
        RealCoroot::new(-&(&e(1) + &e(3)), 1),
        finite(a2.clone()),
        finite(a3.clone()),
        finite(a4.clone()),
        finite(e(2)),
    ]
    .into();
    let l3: BTreeSet<_> =
        [a0.clone(), finite(&e(2) - &e(4)), finite(a3.clone()), finite(a4.clone()), finite(e(3))].into();
    let l4: BTreeSet<_> = [a0, finite(a1.clone()), finite(e(3)), finite(a4.clone()), finite(a3.clone())].into();
    assert_eq!(simple_set(&lambda(1)), simple_set(&AffineWeight::lambda_n(1)));
    assert_eq!(simple_set(&lambda(2)), l2);
    assert_eq!(simple_set(&lambda(3)), l3);
    assert_eq!(simple_set(&lambda(4)), l4);
}

#[test]
fn non_admissible_weights() {
    let f = f4();
    let bad = AffineWeight::at_level(q(-5, 2), fund(&f, [int(-1), int(0), int(0), int(0)]));
    assert!(!is_admissible(&bad, &f).unwrap().admissible);
    let generic = AffineWeight::at_level(q(-5, 2), Weight::halves([1, 0, 0, 0]).scale(&q(1, 3)));
    let a = is_admissible(&generic, &f).unwrap();
    assert!(!a.admissible);
    assert!(a.integral_rank < 5);
}

#[test]
fn b4_vacuum_at_minus_five_halves_is_admissible() {
    let b = RootSystem::build(Label::B4);
    let a = is_admissible(&AffineWeight::at_level(q(-5, 2), Weight::zero()), &b).unwrap();
    assert!(a.admissible);
}

#[test]
fn shifted_reflection_of_lambda2_by_alpha4() {
    let f = f4();
    let l2 = lambda(2);
    let a4 = f.simple_roots()[3].clone();
    let rho = AffineWeight::rho(&f);
    assert_eq!(pair(&l2.add(&rho), &finite(a4.clone())), int(1));
    let r = shifted_reflect(&f, &finite(a4.clone()), &l2);
    assert_eq!(r.finite, &l2.finite - &a4);
}

fn root_index() -> impl Strategy<Value = usize> {
    0usize..48
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shifted_reflection_is_an_involution(i in root_index(), layer in -3i64..4, a in -6i64..7, b in -6i64..7, k in 1i64..6) {
        let f = f4();
        let root = f.roots().nth(i).unwrap().clone();
        let c = RealCoroot::new(root, layer);
        let lam = AffineWeight::new(q(k, 2), Weight::halves([a, b, a + b, a - b]), int(0));
        let once = shifted_reflect(&f, &c, &lam);
        prop_assert_eq!(shifted_reflect(&f, &c, &once), lam.clone());
        let rho = AffineWeight::rho(&f);
        prop_assert_eq!(pair(&once.add(&rho), &c), -pair(&lam.add(&rho), &c));
    }
}
