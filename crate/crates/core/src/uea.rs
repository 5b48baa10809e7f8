//! PBW arithmetic in the universal enveloping algebra of the F4 Lie algebra.
//!
//! Monomials are non-decreasing words over the basis indices of
//! [`LieAlgebra`], so the PBW order is `f < h < e`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{axpy, int, q, Scalar, SparseEchelon, SparsePoly};
use crate::liealg::{Kind, LieAlgebra, LieElement};
use crate::rootsys::{Label, RootSystem};
use crate::verma::StateVector;

pub type Word = Vec<u8>;

/// A normal-ordered element of `U(g)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UeaElement {
    terms: BTreeMap<Word, Scalar>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { terms: BTreeMap::from([(Vec::new(), Scalar::one())]) }
    }

    pub fn generator(i: usize) -> Self {
        Self { terms: BTreeMap::from([(vec![i as u8], Scalar::one())]) }
    }

    pub fn from_lie(x: &LieElement) -> Self {
        Self { terms: x.terms().iter().map(|(i, c)| (vec![*i as u8], c.clone())).collect() }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &UeaElement) {
        axpy(&mut self.terms, c, &other.terms);
    }

    pub fn scale(&self, c: &Scalar) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// Doubled ε-coordinates of the weight of every monomial, if all agree.
    pub fn weight(&self, g: &LieAlgebra) -> Option<[i64; 4]> {
        let mut ws = self.terms.keys().map(|w| word_weight(g, w));
        let first = ws.next().unwrap_or([0; 4]);
        ws.all(|w| w == first).then_some(first)
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.iter().map(|&i| g.name(i as usize)).collect();
                let m = if letters.is_empty() { "1".to_string() } else { letters.join("*") };
                format!("{}*{m}", crate::exact::format_scalar(c))
            })
            .collect();
        parts.join(" + ")
    }
}

pub fn word_weight(g: &LieAlgebra, w: &[u8]) -> [i64; 4] {
    let mut s = [0i64; 4];
    for &i in w {
        let d = g.doubled_weight(i as usize);
        for k in 0..4 {
            s[k] += d[k];
        }
    }
    s
}

type Expansion = Rc<Vec<(Word, Scalar)>>;

/// Normal-ordering engine with a memo table for `monomial · letter`.
pub struct Pbw<'g> {
    g: &'g LieAlgebra,
    memo: RefCell<HashMap<(Word, u8), Expansion>>,
}

impl<'g> Pbw<'g> {
    pub fn new(g: &'g LieAlgebra) -> Self {
        Self { g, memo: RefCell::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.g
    }

    /// `m · x` in normal order, for a normal-ordered word `m`.
    fn times_letter(&self, m: &[u8], x: u8) -> Expansion {
        if m.last().is_none_or(|&l| l <= x) {
            let mut w = m.to_vec();
            w.push(x);
            return Rc::new(vec![(w, Scalar::one())]);
        }
        let key = (m.to_vec(), x);
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let (prefix, y) = (&m[..m.len() - 1], m[m.len() - 1]);
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (n, c) in self.times_letter(prefix, x).iter() {
            for (n2, c2) in self.times_letter(n, y).iter() {
                add_into(&mut acc, n2, &(c * c2));
            }
        }
        for (k, c) in self.g.bracket_basis(y as usize, x as usize) {
            for (n, c2) in self.times_letter(prefix, *k as u8).iter() {
                add_into(&mut acc, n, &(c * c2));
            }
        }
        let v: Expansion = Rc::new(acc.into_iter().collect());
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    fn times_word(&self, start: BTreeMap<Word, Scalar>, w: &[u8]) -> BTreeMap<Word, Scalar> {
        let mut cur = start;
        for &x in w {
            let mut next = BTreeMap::new();
            for (m, c) in &cur {
                for (n, c2) in self.times_letter(m, x).iter() {
                    add_into(&mut next, n, &(c * c2));
                }
            }
            cur = next;
        }
        cur
    }

    /// The normal-ordered form of an arbitrary word.
    pub fn normal_order(&self, w: &[u8]) -> UeaElement {
        UeaElement { terms: self.times_word(BTreeMap::from([(Vec::new(), Scalar::one())]), w) }
    }

    pub fn mul(&self, a: &UeaElement, b: &UeaElement) -> UeaElement {
        let mut out = BTreeMap::new();
        for (mb, cb) in &b.terms {
            let start: BTreeMap<Word, Scalar> = a.terms.iter().map(|(m, c)| (m.clone(), c * cb)).collect();
            for (m, c) in self.times_word(start, mb) {
                add_into(&mut out, &m, &c);
            }
        }
        UeaElement { terms: out }
    }

    pub fn pow(&self, a: &UeaElement, n: u32) -> UeaElement {
        (0..n).fold(UeaElement::one(), |acc, _| self.mul(&acc, a))
    }

    /// `ad x (u) = x u − u x`, computed as a derivation on PBW monomials.
    pub fn adjoint(&self, x: &LieElement, u: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (xi, xc) in x.terms() {
            for (m, c) in &u.terms {
                for pos in 0..m.len() {
                    for (k, bc) in self.g.bracket_basis(*xi, m[pos] as usize) {
                        let mut w = m.clone();
                        w[pos] = *k as u8;
                        out.add_scaled(&(xc * c * bc), &self.normal_order(&w));
                    }
                }
            }
        }
        out
    }

    /// Image of `u` under the algebra map induced by a linear map on `g`.
    pub fn map_letters(&self, u: &UeaElement, f: impl Fn(usize) -> Result<LieElement>) -> Result<UeaElement> {
        let mut out = UeaElement::zero();
        for (m, c) in &u.terms {
            let mut prod = UeaElement::one();
            for &i in m {
                prod = self.mul(&prod, &UeaElement::from_lie(&f(i as usize)?));
            }
            out.add_scaled(c, &prod);
        }
        Ok(out)
    }
}

fn add_into(acc: &mut BTreeMap<Word, Scalar>, w: &[u8], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(w) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                acc.remove(w);
            }
        }
        None => {
            acc.insert(w.to_vec(), c.clone());
        }
    }
}

/// `(−¼ e_{ε1}² + Σ_{j=2..4} e_{ε1−εj} e_{ε1+εj})^n`, the generator of the
/// ideals attached to the singular vectors `v_B` and `v_F`.
pub fn quadratic_generator(pbw: &Pbw, n: u32) -> UeaElement {
    let g = pbw.algebra();
    let e = |w: crate::rootsys::Weight| UeaElement::generator(g.e(&w).expect("root"));
    let e1 = crate::rootsys::Weight::eps(1);
    let mut base = pbw.mul(&e(e1.clone()), &e(e1.clone())).scale(&q(-1, 4));
    for j in 2..=4 {
        let ej = crate::rootsys::Weight::eps(j);
        base.add_scaled(&int(1), &pbw.mul(&e(&e1 - &ej), &e(&e1 + &ej)));
    }
    pbw.pow(&base, n)
}

/// Chevalley generators `e_i, f_i` of the subalgebra attached to `label`.
pub fn chevalley_generators(g: &LieAlgebra, label: Label) -> Vec<usize> {
    let simple = label.simple_roots();
    let mut out: Vec<usize> = simple.iter().map(|r| g.e(r).expect("root")).collect();
    out.extend(simple.iter().map(|r| g.f(r).expect("root")));
    out
}

/// A finite-dimensional ad-submodule of `U(g)` with a basis of weight vectors.
#[derive(Clone, Debug)]
pub struct AdModule {
    basis: Vec<UeaElement>,
    weights: Vec<[i64; 4]>,
}

impl AdModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[UeaElement] {
        &self.basis
    }

    /// Doubled ε-coordinates of the weight of each basis vector.
    pub fn weights(&self) -> &[[i64; 4]] {
        &self.weights
    }

    pub fn weight_multiplicity(&self, doubled: [i64; 4]) -> usize {
        self.weights.iter().filter(|w| **w == doubled).count()
    }

    /// Basis of the zero-weight space.
    pub fn zero_weight_space(&self) -> Vec<UeaElement> {
        self.basis.iter().zip(&self.weights).filter(|(_, w)| **w == [0; 4]).map(|(b, _)| b.clone()).collect()
    }
}

/// The span of `u` under repeated `ad x` for `x` in `generators`.
///
/// The closure is computed with an exact echelon basis; `cap` bounds the
/// dimension and is reported as an error when exceeded.
pub fn generate_r(pbw: &Pbw, u: &UeaElement, generators: &[usize], cap: usize) -> Result<AdModule> {
    let g = pbw.algebra();
    let mut ech: SparseEchelon<Word> = SparseEchelon::new();
    let mut basis = Vec::new();
    let mut queue = Vec::new();
    if ech.insert(&u.terms) {
        basis.push(u.clone());
        queue.push(u.clone());
    }
    while let Some(v) = queue.pop() {
        for &x in generators {
            let w = pbw.adjoint(&LieElement::basis(x), &v);
            if w.is_zero() || !ech.insert(&w.terms) {
                continue;
            }
            if basis.len() >= cap {
                return Err(Error::IterationCap(cap));
            }
            basis.push(w.clone());
            queue.push(w);
        }
    }
    let weights = basis
        .iter()
        .map(|b| b.weight(g).ok_or_else(|| Error::Internal("inhomogeneous vector in ad-orbit".into())))
        .collect::<Result<_>>()?;
    Ok(AdModule { basis, weights })
}

/// The polynomial `p` with `r v_μ = p(μ) v_μ` for a highest-weight vector
/// `v_μ`, in the ε-coordinates `x1..x4` of `μ`.
pub fn hw_polynomial(g: &LieAlgebra, r: &UeaElement) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero();
    for (w, c) in &r.terms {
        if word_weight(g, w) != [0; 4] {
            return Err(Error::NotWeightZero(r.display(g)));
        }
        if w.iter().any(|&i| g.kind(i as usize) == Kind::E) {
            continue;
        }
        let mut term = SparsePoly::constant(c.clone());
        for &i in w {
            if g.kind(i as usize) != Kind::H {
                return Err(Error::Internal("weight-zero monomial without raising factor".into()));
            }
            let tag = &g.basis_element(i as usize).tag;
            term = &term * &SparsePoly::linear(tag.coords(), Scalar::zero());
        }
        out = out + term;
    }
    Ok(out)
}

/// The isomorphism `A(N(k,0)) → U(g)`:
/// `x_1(−n_1−1)⋯x_m(−n_m−1)1 ↦ (−1)^{n_1+⋯+n_m} x_m⋯x_1`.
pub fn zhu_image(pbw: &Pbw, v: &StateVector) -> Result<UeaElement> {
    let mut out = UeaElement::zero();
    for (m, c) in v.terms() {
        let mut sign_exp = 0i64;
        let mut word = Vec::with_capacity(m.len());
        for &(mode, x) in m.iter().rev() {
            if mode >= 0 {
                return Err(Error::NonNegativeMode(mode as i32));
            }
            sign_exp += -(mode as i64) - 1;
            word.push(x);
        }
        let sign = if sign_exp % 2 == 0 { int(1) } else { int(-1) };
        out.add_scaled(&(c * sign), &pbw.normal_order(&word));
    }
    Ok(out)
}

/// The polynomials `p_r` for a basis `r` of the zero-weight space of the
/// ad-module generated by the `n`-th power of the quadratic generator inside
/// `U(g_label)`, for `label` B4 or F4.
pub fn extract_p0(pbw: &Pbw, label: Label, n: u32) -> Result<Vec<SparsePoly>> {
    let g = pbw.algebra();
    let u = quadratic_generator(pbw, n);
    let module = generate_r(pbw, &u, &chevalley_generators(g, label), 200_000)?;
    let mut ech: SparseEchelon<crate::exact::Exponents> = SparseEchelon::new();
    let mut out = Vec::new();
    for r in module.zero_weight_space() {
        let p = hw_polynomial(g, &r)?;
        if ech.insert(p.terms()) {
            out.push(p.monic());
        }
    }
    Ok(out)
}

/// Whether `u` is annihilated by `ad e_i` for the simple roots of `rs`.
pub fn is_ad_highest(pbw: &Pbw, rs: &RootSystem, u: &UeaElement) -> bool {
    let g = pbw.algebra();
    rs.simple_roots().iter().all(|r| pbw.adjoint(&LieElement::basis(g.e(r).expect("root")), u).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::gf;
    use crate::rootsys::Weight;

    #[test]
    fn single_commutator() {
        let g = gf();
        let pbw = Pbw::new(g);
        let e = g.e(&Weight::eps(1)).unwrap();
        let f = g.f(&Weight::eps(1)).unwrap();
        let ef = pbw.normal_order(&[e as u8, f as u8]);
        let mut expected = pbw.normal_order(&[f as u8, e as u8]);
        expected.add_scaled(&int(1), &UeaElement::from_lie(&g.coroot_element(&Weight::eps(1)).unwrap()));
        assert_eq!(ef, expected);
        assert_eq!(expected.len(), 5);
    }

    #[test]
    fn hw_polynomial_of_cartan_monomial() {
        let g = gf();
        let pbw = Pbw::new(g);
        let a = Weight::ints([1, -1, 0, 0]);
        let b = Weight::ints([1, 1, 0, 0]);
        let r = pbw.mul(
            &UeaElement::from_lie(&g.coroot_element(&a).unwrap()),
            &UeaElement::from_lie(&g.coroot_element(&b).unwrap()),
        );
        let p = hw_polynomial(g, &r).unwrap();
        let la = SparsePoly::linear(a.coords(), Scalar::zero());
        let lb = SparsePoly::linear(b.coords(), Scalar::zero());
        assert_eq!(p, &la * &lb);
        assert!(hw_polynomial(g, &UeaElement::generator(g.e(&a).unwrap())).is_err());
    }

    #[test]
    fn quadratic_generator_is_ad_highest() {
        let g = gf();
        let pbw = Pbw::new(g);
        let u = quadratic_generator(&pbw, 1);
        assert_eq!(u.len(), 4);
        assert_eq!(u.weight(g), Some([4, 0, 0, 0]));
        assert!(is_ad_highest(&pbw, g.root_system(), &u));
        assert!(pbw.adjoint(&LieElement::basis(g.h(2)), &u).is_zero());
    }
}
