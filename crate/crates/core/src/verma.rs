//! Low-degree computations in the generalized Verma module `N(k, 0)` of the
//! affine Lie algebra of type F4.
//!
//! States are combinations of monomials `x_1(m_1)⋯x_r(m_r)·1` with negative
//! modes, ordered by `(mode, basis index)` ascending.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::affine::dual_coxeter;
use crate::error::{Error, Result};
use crate::exact::{axpy, format_scalar, int, nullspace, q, ExactMatrix, Scalar, SparseEchelon};
use crate::liealg::{LieAlgebra, LieElement};
use crate::rootsys::{Label, RootSystem, Weight};
use crate::uea::chevalley_generators;

pub type ModeMonomial = Vec<(i16, u8)>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StateVector {
    terms: BTreeMap<ModeMonomial, Scalar>,
}

impl StateVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self { terms: BTreeMap::from([(Vec::new(), Scalar::one())]) }
    }

    /// `x(mode)·1` for a negative mode.
    pub fn single(x: usize, mode: i16) -> Self {
        assert!(mode < 0, "x(n)·1 vanishes for n ≥ 0");
        Self { terms: BTreeMap::from([(vec![(mode, x as u8)], Scalar::one())]) }
    }

    pub fn terms(&self) -> &BTreeMap<ModeMonomial, Scalar> {
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

    pub fn coeff(&self, m: &ModeMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &StateVector) {
        axpy(&mut self.terms, c, &other.terms);
    }

    pub fn scale(&self, c: &Scalar) -> StateVector {
        let mut out = StateVector::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &StateVector) -> StateVector {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// Conformal degree, if homogeneous (the zero vector has degree 0).
    pub fn degree(&self) -> Option<i64> {
        let mut ds = self.terms.keys().map(|m| m.iter().map(|(n, _)| -(*n as i64)).sum::<i64>());
        let first = ds.next().unwrap_or(0);
        ds.all(|d| d == first).then_some(first)
    }

    /// Doubled ε-coordinates of the weight, if homogeneous.
    pub fn weight(&self, g: &LieAlgebra) -> Option<[i64; 4]> {
        let mut ws = self.terms.keys().map(|m| {
            let mut s = [0i64; 4];
            for (_, x) in m {
                let d = g.doubled_weight(*x as usize);
                for k in 0..4 {
                    s[k] += d[k];
                }
            }
            s
        });
        let first = ws.next().unwrap_or([0; 4]);
        ws.all(|w| w == first).then_some(first)
    }

    pub fn to_json(&self, g: &LieAlgebra) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mono: Vec<Value> = m.iter().map(|(n, x)| json!([g.name(*x as usize), n])).collect();
                    json!({ "monomial": mono, "coeff": format_scalar(c) })
                })
                .collect(),
        )
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let f: Vec<String> = m.iter().map(|(n, x)| format!("{}({n})", g.name(*x as usize))).collect();
                let body = if f.is_empty() { "1".into() } else { format!("{}1", f.join("")) };
                format!("{}*{body}", format_scalar(c))
            })
            .collect();
        parts.join(" + ")
    }
}

type Expansion = Rc<Vec<(ModeMonomial, Scalar)>>;

/// `N(k, 0)` for the F4 affine algebra at a fixed level, with memoized
/// mode actions.
pub struct Verma<'g> {
    g: &'g LieAlgebra,
    level: Scalar,
    memo: RefCell<HashMap<(u8, i16, ModeMonomial), Expansion>>,
}

impl<'g> Verma<'g> {
    pub fn new(g: &'g LieAlgebra, level: Scalar) -> Self {
        Self { g, level, memo: RefCell::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.g
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    fn act_monomial(&self, x: u8, n: i16, m: &[(i16, u8)]) -> Expansion {
        let Some(&(m0, y)) = m.first() else {
            return Rc::new(if n < 0 { vec![(vec![(n, x)], Scalar::one())] } else { Vec::new() });
        };
        if n < 0 && (n, x) <= (m0, y) {
            let mut w = Vec::with_capacity(m.len() + 1);
            w.push((n, x));
            w.extend_from_slice(m);
            return Rc::new(vec![(w, Scalar::one())]);
        }
        let key = (x, n, m.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let rest = &m[1..];
        let mut acc: BTreeMap<ModeMonomial, Scalar> = BTreeMap::new();
        for (w, c) in self.act_monomial(x, n, rest).iter() {
            for (w2, c2) in self.act_monomial(y, m0, w).iter() {
                add_into(&mut acc, w2, &(c * c2));
            }
        }
        for (z, c) in self.g.bracket_basis(x as usize, y as usize) {
            for (w, c2) in self.act_monomial(*z as u8, n + m0, rest).iter() {
                add_into(&mut acc, w, &(c * c2));
            }
        }
        if n + m0 == 0 {
            let form = self.g.form_basis(x as usize, y as usize);
            if !form.is_zero() {
                add_into(&mut acc, rest, &(int(n as i64) * form * &self.level));
            }
        }
        let v: Expansion = Rc::new(acc.into_iter().collect());
        self.memo.borrow_mut().insert(key, v.clone());
        v
    }

    /// `x(n)·v` for a basis element `x`.
    pub fn act(&self, x: usize, n: i16, v: &StateVector) -> StateVector {
        let mut out = BTreeMap::new();
        for (m, c) in &v.terms {
            for (w, c2) in self.act_monomial(x as u8, n, m).iter() {
                add_into(&mut out, w, &(c * c2));
            }
        }
        StateVector { terms: out }
    }

    pub fn act_element(&self, x: &LieElement, n: i16, v: &StateVector) -> StateVector {
        let mut out = StateVector::zero();
        for (i, c) in x.terms() {
            out.add_scaled(c, &self.act(*i, n, v));
        }
        out
    }

    /// `x_1(n_1)⋯x_r(n_r)·v`, applied right to left.
    pub fn apply(&self, ops: &[(usize, i16)], v: &StateVector) -> StateVector {
        ops.iter().rev().fold(v.clone(), |acc, &(x, n)| self.act(x, n, &acc))
    }

    /// Raising operators `e_i(0)` of the subalgebra `label` and `f_θ(1)` for
    /// its highest root `θ`.
    pub fn raising_operators(&self, label: Label) -> Vec<(usize, i16)> {
        let rs = RootSystem::build(label);
        let mut ops: Vec<(usize, i16)> = rs.simple_roots().iter().map(|r| (self.g.e(r).expect("root"), 0)).collect();
        ops.push((self.g.f(rs.highest_root()).expect("root"), 1));
        ops
    }

    pub fn is_singular(&self, v: &StateVector, label: Label) -> bool {
        self.raising_operators(label).iter().all(|&(x, n)| self.act(x, n, v).is_zero())
    }

    /// Span of the closure of `v` under the zero modes of the Chevalley
    /// generators of the subalgebra `label`.
    pub fn zero_mode_orbit(&self, v: &StateVector, label: Label, cap: usize) -> Result<SparseEchelon<ModeMonomial>> {
        let gens = chevalley_generators(self.g, label);
        let mut ech = SparseEchelon::new();
        let mut queue = Vec::new();
        if ech.insert(&v.terms) {
            queue.push(v.clone());
        }
        while let Some(w) = queue.pop() {
            for &x in &gens {
                let y = self.act(x, 0, &w);
                if y.is_zero() || !ech.insert(&y.terms) {
                    continue;
                }
                if ech.rank() > cap {
                    return Err(Error::IterationCap(cap));
                }
                queue.push(y);
            }
        }
        Ok(ech)
    }

    /// Whether `a − b` lies in the degree-`d` part of the submodule generated
    /// by the singular vector `ideal_gen` of degree `d`.
    pub fn equals_mod_ideal(&self, a: &StateVector, b: &StateVector, ideal_gen: &StateVector, label: Label) -> Result<bool> {
        let d = ideal_gen.degree().ok_or_else(|| Error::Internal("inhomogeneous ideal generator".into()))?;
        for v in [a, b] {
            let dv = v.degree().ok_or_else(|| Error::Internal("inhomogeneous vector".into()))?;
            if dv != d && !v.is_zero() {
                return Err(Error::DegreeMismatch(dv as i32, d as i32));
            }
        }
        let orbit = self.zero_mode_orbit(ideal_gen, label, 100_000)?;
        Ok(orbit.contains(&a.sub(b).terms))
    }

    /// The Sugawara vector `1/(2(k+h∨)) Σ a_i(−1) b_i(−1)·1` over dual bases
    /// of the subalgebra `label`.
    pub fn conformal_vector(&self, label: Label) -> Result<StateVector> {
        let rs = RootSystem::build(label);
        let shifted = &self.level + int(dual_coxeter(&rs));
        if shifted.is_zero() {
            return Err(Error::CriticalLevel);
        }
        let mut casimir = StateVector::zero();
        for i in 1..=4 {
            let h = self.g.cartan(&Weight::eps(i));
            let v = self.act_element(&h, -1, &self.act_element(&h, -1, &StateVector::vacuum()));
            casimir.add_scaled(&int(1), &v);
        }
        for a in rs.positive_roots() {
            let (e, f) = (self.g.e(a)?, self.g.f(a)?);
            let c = a.norm2() / int(2);
            casimir.add_scaled(&c, &self.apply(&[(e, -1), (f, -1)], &StateVector::vacuum()));
            casimir.add_scaled(&c, &self.apply(&[(f, -1), (e, -1)], &StateVector::vacuum()));
        }
        Ok(casimir.scale(&(int(1) / (int(2) * shifted))))
    }

    /// Sum of `e_α(−1)f_α(−1)·1 + f_α(−1)e_α(−1)·1` over positive roots of
    /// `label` of squared length `norm2`.
    pub fn root_pair_sum(&self, label: Label, norm2: i64) -> StateVector {
        let rs = RootSystem::build(label);
        let mut out = StateVector::zero();
        for a in rs.positive_roots().iter().filter(|a| a.norm2() == int(norm2)) {
            let (e, f) = (self.g.e(a).expect("root"), self.g.f(a).expect("root"));
            out.add_scaled(&int(1), &self.apply(&[(e, -1), (f, -1)], &StateVector::vacuum()));
            out.add_scaled(&int(1), &self.apply(&[(f, -1), (e, -1)], &StateVector::vacuum()));
        }
        out
    }

    /// `Σ h_α(−1)²·1` over short positive roots of `label`.
    pub fn short_cartan_square_sum(&self, label: Label) -> StateVector {
        let rs = RootSystem::build(label);
        let mut out = StateVector::zero();
        for a in rs.positive_roots().iter().filter(|a| !rs.is_long(a)) {
            let h = self.g.coroot_element(a).expect("root");
            out.add_scaled(&int(1), &self.act_element(&h, -1, &self.act_element(&h, -1, &StateVector::vacuum())));
        }
        out
    }

    /// `ĝ_B`-singular vectors of `L_F(k, 0)` in degree 0 or 1, for the
    /// subalgebra `label`. In degree 1 the quotient by the maximal submodule is
    /// trivial because the generating singular vector has degree 2.
    pub fn find_subalgebra_singular(&self, degree: i32, label: Label) -> Result<Vec<StateVector>> {
        self.degree_kernel(degree, &self.raising_operators(label))
    }

    /// Common kernel of the given mode operators on the full degree-`degree`
    /// piece (`0` or `1`) of `N(k, 0)`.
    pub fn degree_kernel(&self, degree: i32, ops: &[(usize, i16)]) -> Result<Vec<StateVector>> {
        let space: Vec<StateVector> = match degree {
            0 => vec![StateVector::vacuum()],
            1 => (0..self.g.dim()).map(|x| StateVector::single(x, -1)).collect(),
            d => return Err(Error::UnsupportedDegree(d)),
        };
        let mut rows: BTreeMap<(usize, ModeMonomial), Vec<Scalar>> = BTreeMap::new();
        for (col, v) in space.iter().enumerate() {
            for (oi, &(x, n)) in ops.iter().enumerate() {
                for (m, c) in self.act(x, n, v).terms {
                    rows.entry((oi, m)).or_insert_with(|| vec![Scalar::zero(); space.len()])[col] = c;
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..space.len())
                .map(|c| (0..space.len()).map(|r| if r == c { int(1) } else { int(0) }).collect())
                .collect()
        } else {
            nullspace(&ExactMatrix::from_rows(rows.into_values().collect())?)
        };
        Ok(kernel
            .into_iter()
            .map(|coeffs| {
                let mut v = StateVector::zero();
                for (c, s) in coeffs.iter().zip(&space) {
                    v.add_scaled(c, s);
                }
                v
            })
            .collect())
    }
}

fn add_into(acc: &mut BTreeMap<ModeMonomial, Scalar>, w: &[(i16, u8)], c: &Scalar) {
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

/// The four families of singular vectors in degree `2n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    B,
    BPrime,
    BDoublePrime,
    F,
}

impl Family {
    pub fn label(self) -> Label {
        match self {
            Family::B => Label::B4,
            Family::BPrime => Label::B4Prime,
            Family::BDoublePrime => Label::B4DoublePrime,
            Family::F => Label::F4,
        }
    }

    /// The printed quadratic: `−¼ e_γ(−1)² + Σ e_a(−1) e_b(−1)`, as `γ` and
    /// the three pairs `(a, b)`.
    fn quadratic(self) -> (Weight, [(Weight, Weight); 3]) {
        let w = Weight::ints;
        let h = Weight::halves;
        match self {
            Family::B | Family::F => (
                w([1, 0, 0, 0]),
                [
                    (w([1, -1, 0, 0]), w([1, 1, 0, 0])),
                    (w([1, 0, -1, 0]), w([1, 0, 1, 0])),
                    (w([1, 0, 0, -1]), w([1, 0, 0, 1])),
                ],
            ),
            Family::BPrime => (
                h([1, 1, 1, -1]),
                [
                    (w([0, 1, 1, 0]), w([1, 0, 0, -1])),
                    (w([0, 1, 0, -1]), w([1, 0, 1, 0])),
                    (w([0, 0, 1, -1]), w([1, 1, 0, 0])),
                ],
            ),
            Family::BDoublePrime => (
                h([1, 1, 1, 1]),
                [
                    (w([0, 1, 1, 0]), w([1, 0, 0, 1])),
                    (w([0, 1, 0, 1]), w([1, 0, 1, 0])),
                    (w([0, 0, 1, 1]), w([1, 1, 0, 0])),
                ],
            ),
        }
    }
}

/// The singular vector of `family` for `n ≥ 1`, expanded in canonical form.
pub fn build_singular(verma: &Verma, family: Family, n: u32) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    let g = verma.algebra();
    let (gamma, pairs) = family.quadratic();
    let eg = g.e(&gamma)?;
    let mut ops: Vec<(Scalar, Vec<(usize, i16)>)> = vec![(q(-1, 4), vec![(eg, -1), (eg, -1)])];
    for (a, b) in &pairs {
        ops.push((int(1), vec![(g.e(a)?, -1), (g.e(b)?, -1)]));
    }
    let mut v = StateVector::vacuum();
    for _ in 0..n {
        let mut next = StateVector::zero();
        for (c, word) in &ops {
            next.add_scaled(c, &verma.apply(word, &v));
        }
        v = next;
    }
    Ok(v)
}

/// `f_γ(0)^{2n} v_F / (2n)!`, with `γ = ½(ε1−ε2−ε3+ε4)` for the primed copy and
/// `γ = ½(ε1−ε2−ε3−ε4)` for the double-primed one.
pub fn lowered_singular(verma: &Verma, family: Family, n: u32) -> Result<StateVector> {
    let gamma = match family {
        Family::BPrime => Weight::halves([1, -1, -1, 1]),
        Family::BDoublePrime => Weight::halves([1, -1, -1, -1]),
        _ => return Err(Error::Unsupported("only the primed copies arise by lowering".into())),
    };
    let f = verma.algebra().f(&gamma)?;
    let mut v = build_singular(verma, Family::F, n)?;
    let mut fact = int(1);
    for i in 1..=(2 * n as i64) {
        v = verma.act(f, 0, &v);
        fact *= int(i);
    }
    Ok(v.scale(&(int(1) / fact)))
}
