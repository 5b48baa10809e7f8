use std::collections::BTreeSet;

use proptest::prelude::*;
use voakit_core::affine::{lowest_conformal_weight, AffineWeight};
use voakit_core::classify::{
    b4_conformal_table, category_o_weights, classify_category_o, classify_dominant, decomposition_bookkeeping,
    factor_linear, reference_basis, reference_polynomials, restrict_weight, solve_system, FactoredPolynomial, LinearForm,
};
use voakit_core::exact::{int, q, Scalar, SparsePoly};
use voakit_core::liealg::gf;
use voakit_core::rootsys::{Label, RootSystem, Weight};
use voakit_core::uea::Pbw;

fn fc(a: [(i64, i64); 4]) -> [Scalar; 4] {
    a.map(|(n, d)| q(n, d))
}

fn b4_expected() -> BTreeSet<Weight> {
    let b = RootSystem::build(Label::B4);
    [
        [(0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 1)],
        [(-5, 2), (0, 1), (0, 1), (0, 1)],
        [(-7, 2), (0, 1), (0, 1), (1, 1)],
        [(0, 1), (-3, 2), (0, 1), (0, 1)],
        [(0, 1), (-5, 2), (0, 1), (1, 1)],
        [(0, 1), (0, 1), (-1, 2), (0, 1)],
        [(0, 1), (0, 1), (-3, 2), (1, 1)],
        [(1, 2), (-3, 2), (0, 1), (0, 1)],
        [(3, 2), (-5, 2), (0, 1), (1, 1)],
        [(-3, 2), (0, 1), (-1, 2), (0, 1)],
        [(-1, 2), (0, 1), (-3, 2), (1, 1)],
        [(0, 1), (-1, 2), (-1, 2), (0, 1)],
        [(0, 1), (1, 2), (-3, 2), (1, 1)],
        [(-1, 2), (-1, 2), (-1, 2), (0, 1)],
        [(-3, 2), (1, 2), (-3, 2), (1, 1)],
    ]
    .into_iter()
    .map(|c| b.from_fund(&fc(c)))
    .collect()
}

fn f4_expected() -> BTreeSet<Weight> {
    let f = RootSystem::build(Label::F4);
    [[(0, 1), (0, 1), (0, 1), (0, 1)], [(-3, 2), (0, 1), (0, 1), (0, 1)], [(-1, 2), (-1, 2), (0, 1), (0, 1)], [
        (0, 1),
        (-3, 2),
        (1, 1),
        (0, 1),
    ]]
    .into_iter()
    .map(|c| f.from_fund(&fc(c)))
    .collect()
}

#[test]
fn b4_category_o_has_sixteen_weights() {
    let r = solve_system(&reference_basis(Label::B4).unwrap()).unwrap();
    assert!(r.components.is_empty());
    let got: BTreeSet<Weight> = r.weights().into_iter().collect();
    assert_eq!(r.points.len(), 16);
    assert_eq!(got, b4_expected());
}

#[test]
fn f4_category_o_has_four_weights() {
    let r = solve_system(&reference_basis(Label::F4).unwrap()).unwrap();
    assert!(r.components.is_empty());
    let got: BTreeSet<Weight> = r.weights().into_iter().collect();
    assert_eq!(got, f4_expected());
    assert_eq!(r.points.len(), 4);
    let sorted = r.weights();
    let mut resorted = sorted.clone();
    resorted.sort();
    assert_eq!(sorted, resorted);
}

#[test]
fn pipeline_from_extracted_polynomials() {
    let pbw = Pbw::new(gf());
    let f: BTreeSet<Weight> = classify_category_o(&pbw, Label::F4, 1).unwrap().weights().into_iter().collect();
    assert_eq!(f, f4_expected());
    let b: BTreeSet<Weight> = classify_category_o(&pbw, Label::B4, 1).unwrap().weights().into_iter().collect();
    assert_eq!(b, b4_expected());
}

#[test]
fn extracted_polynomials_factor_and_solve_directly() {
    let pbw = Pbw::new(gf());
    let extracted = voakit_core::uea::extract_p0(&pbw, Label::F4, 1).unwrap();
    let factored: Vec<FactoredPolynomial> = extracted.iter().filter_map(|p| factor_linear(p).ok()).collect();
    let weights: BTreeSet<Weight> = solve_system(&factored)
        .unwrap()
        .weights()
        .into_iter()
        .filter(|w| extracted.iter().all(|p| p.evaluate(w.coords()) == int(0)))
        .collect();
    assert!(f4_expected().is_subset(&weights));
}

#[test]
fn f4_solutions_restrict_into_b4_solutions() {
    let b = RootSystem::build(Label::B4);
    let bset = b4_expected();
    for w in f4_expected() {
        assert!(bset.contains(&b.from_fund(&restrict_weight(&w))));
    }
}

#[test]
fn factor_examples() {
    let p4 = &reference_polynomials()[3];
    let f = factor_linear(&p4.expanded).unwrap();
    assert_eq!(f.expanded, p4.expanded);
    assert_eq!(f.scale, int(4));
    let x4 = |c: Scalar| LinearForm::new([int(0), int(0), int(0), int(1)], c);
    let mut factors = f.factors.clone();
    factors.sort_by(|a, b| a.constant.cmp(&b.constant));
    assert_eq!(factors, vec![x4(q(-1, 2)), x4(int(0))]);
}

#[test]
fn restrict_weight_examples() {
    let f = RootSystem::build(Label::F4);
    let w1 = &f.fundamental_weights()[0];
    assert_eq!(restrict_weight(&w1.scale(&q(-3, 2))), fc([(0, 1), (-3, 2), (0, 1), (0, 1)]));
    let mu = &w1.scale(&q(-3, 2)) - &Weight::halves([1, 1, -1, -1]);
    assert_eq!(restrict_weight(&mu), fc([(0, 1), (-5, 2), (0, 1), (1, 1)]));
    assert_eq!(restrict_weight(&Weight::zero()), fc([(0, 1); 4]));
}

/// Exhaustive search over a box of fundamental coordinates, independent of
/// the bounded enumeration under test.
fn brute_dominant(rs: &RootSystem, n: u32) -> Vec<Weight> {
    let bound = int(n as i64) - q(1, 2);
    let mut out = Vec::new();
    let r = 0..=(2 * n as i64 + 1);
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let mu = rs.from_fund(&[int(a), int(b), int(c), int(d)]);
                    if mu.coords()[0] <= bound {
                        out.push(mu);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn dominant_classification() {
    let b = RootSystem::build(Label::B4);
    let f = RootSystem::build(Label::F4);
    let w4 = b.fundamental_weights()[3].clone();
    assert_eq!(classify_dominant(&b, 1).unwrap(), vec![Weight::zero(), w4]);
    assert_eq!(classify_dominant(&f, 1).unwrap(), vec![Weight::zero()]);
    for n in 1..=3 {
        for rs in [&b, &f] {
            let got = classify_dominant(rs, n).unwrap();
            assert_eq!(got, brute_dominant(rs, n), "{} n={n}", rs.label());
            let bound = int(n as i64) - q(1, 2);
            assert!(got.iter().all(|m| rs.is_dominant_integral(m) && m.coords()[0] <= bound));
        }
    }
    assert_eq!(classify_dominant(&b, 2).unwrap().len(), 10);
    assert!(classify_dominant(&b, 0).is_err());
}

#[test]
fn b4_dominant_bound_is_attained_by_half_integral_weights() {
    let b = RootSystem::build(Label::B4);
    for n in 1..=3 {
        let got = classify_dominant(&b, n).unwrap();
        let bound = int(n as i64) - q(1, 2);
        let max = got.iter().map(|m| m.coords()[0].clone()).max().unwrap();
        let has_odd = got.iter().any(|m| !m.coords()[0].is_integer());
        assert_eq!(max == bound, has_odd);
        assert!(has_odd);
    }
}

#[test]
fn conformal_weights_on_solver_output() {
    let b = RootSystem::build(Label::B4);
    let k = q(-5, 2);
    let r = solve_system(&reference_basis(Label::B4).unwrap()).unwrap();
    let table = b4_conformal_table();
    assert_eq!(table.len(), 16);
    for w in r.weights() {
        let coords = b.fund_coords(&w);
        let (_, h) = table.iter().find(|(c, _)| *c == coords).expect("weight in table");
        assert_eq!(lowest_conformal_weight(&b, &k, &w).unwrap(), *h);
    }
    let mut counts = std::collections::BTreeMap::new();
    for (_, h) in &table {
        *counts.entry(h.clone()).or_insert(0) += 1;
    }
    assert_eq!(counts[&q(-5, 4)], 4);
    assert_eq!(counts[&q(-3, 4)], 4);
    assert_eq!(counts[&q(-3, 2)], 6);
}

#[test]
fn bookkeeping_for_all_three_weights() {
    for (name, lam) in category_o_weights() {
        let r = decomposition_bookkeeping(&lam).unwrap();
        assert_eq!(r.name, name);
        assert!(r.passed(), "{name}: {}", r.to_json());
        assert_eq!(r.f_conformal_weight, q(-3, 2));
        assert_eq!(r.excluded.len(), 4);
        assert_eq!(r.summands.len(), 2);
    }
    assert!(decomposition_bookkeeping(&AffineWeight::lambda_n(1)).is_err());
}

fn small() -> impl Strategy<Value = Scalar> {
    (-4i64..5, 1i64..3).prop_map(|(n, d)| q(n, d))
}

fn form() -> impl Strategy<Value = LinearForm> {
    (prop::array::uniform4(small()), small())
        .prop_filter("non-constant", |(c, _)| c.iter().any(|x| *x != int(0)))
        .prop_map(|(c, k)| LinearForm::new(c, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factor_linear_recovers_products(a in form(), b in form()) {
        let p = &a.to_poly() * &b.to_poly();
        let f = factor_linear(&p).unwrap();
        prop_assert_eq!(&f.expanded, &p);
        let (wa, wb) = (a.to_poly().monic(), b.to_poly().monic());
        let got: Vec<SparsePoly> = f.factors.iter().map(|l| l.to_poly().monic()).collect();
        prop_assert!(got == vec![wa.clone(), wb.clone()] || got == vec![wb, wa]);
    }

    #[test]
    fn solve_system_is_order_independent(perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let basis = reference_basis(Label::B4).unwrap();
        let shuffled: Vec<FactoredPolynomial> = perm.iter().map(|&i| basis[i].clone()).collect();
        let a = solve_system(&basis).unwrap().weights();
        let b = solve_system(&shuffled).unwrap().weights();
        prop_assert_eq!(a, b);
    }
}
