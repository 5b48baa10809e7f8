use proptest::prelude::*;
use voakit_core::exact::{int, q, Scalar};
use voakit_core::liealg::{gf, LieElement};
use voakit_core::rootsys::{Label, Weight};
use voakit_core::verma::{build_singular, lowered_singular, Family, StateVector, Verma};

fn level(n: u32) -> Scalar {
    int(n as i64) - q(7, 2)
}

#[test]
fn singular_vectors_at_n1() {
    let g = gf();
    let v = Verma::new(g, level(1));
    for fam in [Family::B, Family::BPrime, Family::BDoublePrime, Family::F] {
        let s = build_singular(&v, fam, 1).unwrap();
        assert!(!s.is_zero());
        assert_eq!(s.degree(), Some(2));
        assert!(v.is_singular(&s, fam.label()), "{fam:?}");
    }
}

#[test]
fn v_f_is_singular_at_n2() {
    let g = gf();
    let v = Verma::new(g, level(2));
    let s = build_singular(&v, Family::F, 2).unwrap();
    assert_eq!(s.degree(), Some(4));
    assert_eq!(s.weight(g), Some([8, 0, 0, 0]));
    assert!(v.is_singular(&s, Label::F4));
}

#[test]
fn v_f_is_not_singular_at_wrong_level() {
    let g = gf();
    let v = Verma::new(g, level(2));
    let s = build_singular(&v, Family::F, 1).unwrap();
    assert!(!v.is_singular(&s, Label::F4));
}

#[test]
fn lowering_v_f_gives_primed_vectors() {
    let g = gf();
    for n in [1, 2] {
        let v = Verma::new(g, level(n));
        for fam in [Family::BPrime, Family::BDoublePrime] {
            assert_eq!(lowered_singular(&v, fam, n).unwrap(), build_singular(&v, fam, n).unwrap(), "{fam:?} n={n}");
        }
    }
    let v = Verma::new(g, level(1));
    assert!(lowered_singular(&v, Family::B, 1).is_err());
    assert!(build_singular(&v, Family::F, 0).is_err());
}

#[test]
fn conformal_vectors_agree_modulo_v_f() {
    let g = gf();
    let v = Verma::new(g, level(1));
    let vf = build_singular(&v, Family::F, 1).unwrap();
    let wf = v.conformal_vector(Label::F4).unwrap();
    let wb = v.conformal_vector(Label::B4).unwrap();
    assert_ne!(wf, wb);
    assert_eq!(v.zero_mode_orbit(&vf, Label::F4, 1000).unwrap().rank(), 324);
    assert!(v.equals_mod_ideal(&wf, &wb, &vf, Label::F4).unwrap());
    let wbp = v.conformal_vector(Label::B4Prime).unwrap();
    let wbpp = v.conformal_vector(Label::B4DoublePrime).unwrap();
    assert!(v.equals_mod_ideal(&wf, &wbp, &vf, Label::F4).unwrap());
    assert!(v.equals_mod_ideal(&wf, &wbpp, &vf, Label::F4).unwrap());
}

#[test]
fn conformal_vectors_differ_at_other_levels() {
    let g = gf();
    let v = Verma::new(g, level(2));
    let vf = build_singular(&v, Family::F, 1).unwrap();
    let wf = v.conformal_vector(Label::F4).unwrap();
    let wb = v.conformal_vector(Label::B4).unwrap();
    assert!(!v.equals_mod_ideal(&wf, &wb, &vf, Label::F4).unwrap());
}

#[test]
fn virasoro_relation_modulo_v_b() {
    let g = gf();
    let v = Verma::new(g, level(1));
    let vb = build_singular(&v, Family::B, 1).unwrap();
    let mut rel = v.root_pair_sum(Label::B4, 1).scale(&int(7));
    rel.add_scaled(&int(-4), &v.root_pair_sum(Label::B4, 2));
    rel.add_scaled(&int(-1), &v.short_cartan_square_sum(Label::B4));
    assert!(!rel.is_zero());
    assert!(v.equals_mod_ideal(&rel, &StateVector::zero(), &vb, Label::B4).unwrap());
    let mut off = v.root_pair_sum(Label::B4, 1).scale(&int(6));
    off.add_scaled(&int(-4), &v.root_pair_sum(Label::B4, 2));
    assert!(!v.equals_mod_ideal(&off, &StateVector::zero(), &vb, Label::B4).unwrap());
}

#[test]
fn equals_mod_ideal_rejects_degree_mismatch() {
    let g = gf();
    let v = Verma::new(g, level(1));
    let vb = build_singular(&v, Family::B, 1).unwrap();
    let one = StateVector::vacuum();
    assert!(v.equals_mod_ideal(&one, &StateVector::zero(), &vb, Label::B4).is_err());
}

#[test]
fn extension_search_in_low_degrees() {
    let g = gf();
    let v = Verma::new(g, level(1));
    assert_eq!(v.find_subalgebra_singular(0, Label::B4).unwrap(), vec![StateVector::vacuum()]);
    let deg1 = v.find_subalgebra_singular(1, Label::B4).unwrap();
    assert_eq!(deg1.len(), 1);
    let phi = g.e(&Weight::halves([1, 1, 1, 1])).unwrap();
    let only = &deg1[0];
    assert_eq!(only.len(), 1);
    let c = only.coeff(&vec![(-1, phi as u8)]);
    assert_eq!(*only, StateVector::single(phi, -1).scale(&c));
    let theta = g.e(&Weight::ints([1, 1, 0, 0])).unwrap();
    let et = StateVector::single(theta, -1);
    let ft = g.f(&Weight::ints([1, 1, 0, 0])).unwrap();
    assert!(!v.act(ft, 1, &et).is_zero());
    assert!(!v.is_singular(&et, Label::B4));
    assert!(v.find_subalgebra_singular(2, Label::B4).is_err());
}

fn basis_index() -> impl Strategy<Value = usize> {
    0usize..52
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn modes_satisfy_affine_commutator(
        x in basis_index(), y in basis_index(), m in -2i16..3, n in -2i16..3,
        z in basis_index(), p in -2i16..0,
    ) {
        let g = gf();
        let v = Verma::new(g, level(1));
        let w = StateVector::single(z, p);
        let lhs = v.act(x, m, &v.act(y, n, &w)).sub(&v.act(y, n, &v.act(x, m, &w)));
        let br = g.bracket(&LieElement::basis(x), &LieElement::basis(y));
        let mut rhs = v.act_element(&br, m + n, &w);
        if m + n == 0 {
            rhs.add_scaled(&(int(m as i64) * g.form_basis(x, y) * v.level()), &w);
        }
        prop_assert_eq!(lhs, rhs);
    }
}
