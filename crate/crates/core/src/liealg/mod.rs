//! The simple Lie algebra of type F4 in the root-vector basis fixed by an
//! explicit table of iterated brackets of the Chevalley generators.
//!
//! Basis order: `f_α` for positive roots (height, then lex), then the Cartan
//! elements `h_i = β_i∨` (coroots of the B4 simple roots), then `e_α` in the
//! same root order.

mod chevalley;
mod embed;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, q, ExactMatrix, Scalar};
use crate::rootsys::{coroot_vector, Label, RootSystem, Weight};

pub use embed::{branch_gf_over_gb, Embedding, Summand, Variant};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Kind {
    F,
    H,
    E,
}

/// A basis vector: `e_α`, `f_α` (tagged by the positive root `α`), or the
/// Cartan element `h_i` (tagged by its ε-vector `β_i∨`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasisElement {
    pub kind: Kind,
    pub tag: Weight,
    /// `1..=4` for Cartan elements.
    pub cartan_index: Option<usize>,
}

impl BasisElement {
    pub fn name(&self) -> String {
        let p = match self.kind {
            Kind::E => "e",
            Kind::F => "f",
            Kind::H => "h",
        };
        format!("{p}{}", self.tag)
    }

    /// The root (`α` for `e_α`, `−α` for `f_α`, zero for Cartan elements).
    pub fn root(&self) -> Weight {
        match self.kind {
            Kind::E => self.tag.clone(),
            Kind::F => -&self.tag,
            Kind::H => Weight::zero(),
        }
    }
}

/// An element of the Lie algebra as a sparse combination of basis indices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LieElement {
    terms: BTreeMap<usize, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::from_terms([(i, Scalar::one())])
    }

    pub fn from_terms(it: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (i, c) in it {
            out.add_term(i, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(i).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &LieElement) {
        crate::exact::axpy(&mut self.terms, c, &other.terms);
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn display(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(i, c)| format!("{}*{}", format_scalar(c), g.name(*i))).collect();
        parts.join(" + ")
    }
}

/// One row of the root-vector table: `e_target = coeff · [e_left, e_right]`.
/// Roots are written with doubled ε-coordinates.
struct TableEntry {
    target: [i64; 4],
    coeff: (i64, i64),
    left: [i64; 4],
    right: [i64; 4],
}

const A1: [i64; 4] = [0, 2, -2, 0];
const A2: [i64; 4] = [0, 0, 2, -2];
const A3: [i64; 4] = [0, 0, 0, 2];
const A4: [i64; 4] = [1, -1, -1, -1];

const fn te(target: [i64; 4], coeff: (i64, i64), left: [i64; 4], right: [i64; 4]) -> TableEntry {
    TableEntry { target, coeff, left, right }
}

#[rustfmt::skip]
const ROOT_VECTOR_TABLE: [TableEntry; 20] = [
    te([1, -1, -1, 1], (1, 1), A3, A4),
    te([0, 2, 0, -2], (1, 1), A2, A1),
    te([0, 0, 2, 0], (1, 1), A2, A3),
    te([1, -1, 1, -1], (1, 1), [0, 0, 2, 0], A4),
    te([0, 2, 0, 0], (1, 1), [0, 2, 0, -2], A3),
    te([0, 0, 2, 2], (1, 2), [0, 0, 2, 0], A3),
    te([1, 1, -1, -1], (1, 1), [1, -1, 1, -1], A1),
    te([1, -1, 1, 1], (1, 1), [1, -1, 1, -1], A3),
    te([0, 2, 0, 2], (1, 2), [0, 2, 0, 0], A3),
    te([1, 1, -1, 1], (1, 1), [1, 1, -1, -1], A3),
    te([2, -2, 0, 0], (1, 2), [1, -1, 1, -1], [1, -1, -1, 1]),
    te([0, 2, 2, 0], (1, 2), [0, 0, 2, 0], [0, 2, 0, 0]),
    te([1, 1, 1, -1], (1, 1), [1, 1, -1, 1], A2),
    te([2, 0, -2, 0], (1, 1), [2, -2, 0, 0], A1),
    te([1, 1, 1, 1], (1, 1), A3, [1, 1, 1, -1]),
    te([2, 0, 0, -2], (1, 1), [2, 0, -2, 0], A2),
    te([2, 0, 0, 0], (1, 1), [2, 0, 0, -2], A3),
    te([2, 0, 0, 2], (1, 2), [2, 0, 0, 0], A3),
    te([2, 0, 2, 0], (1, 2), [2, 0, 0, 0], [0, 0, 2, 0]),
    te([2, 2, 0, 0], (1, 2), [0, 2, 0, 0], [2, 0, 0, 0]),
];

fn undouble(c: [i64; 4]) -> Weight {
    Weight::halves(c)
}

/// Structure constants and bookkeeping for the 52-dimensional algebra.
#[derive(Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    basis: Vec<BasisElement>,
    weights: Vec<Weight>,
    doubled: Vec<[i64; 4]>,
    index: HashMap<(Kind, Weight), usize>,
    table: Vec<Vec<(usize, Scalar)>>,
    /// Maps ε-coordinates of a Cartan vector to coefficients in `h_1..h_4`.
    to_cartan: ExactMatrix,
    /// Root-vector rescaling from the canonical Chevalley basis.
    rescaling: Vec<Scalar>,
}

static GF: OnceLock<LieAlgebra> = OnceLock::new();

/// The Lie algebra of type F4, built once per process.
pub fn gf() -> &'static LieAlgebra {
    GF.get_or_init(|| LieAlgebra::build().expect("root-vector table is consistent"))
}

impl LieAlgebra {
    pub fn build() -> Result<Self> {
        let rs = RootSystem::build(Label::F4);
        let pos: Vec<Weight> = rs.positive_roots().to_vec();
        let mut basis = Vec::with_capacity(52);
        for a in &pos {
            basis.push(BasisElement { kind: Kind::F, tag: a.clone(), cartan_index: None });
        }
        for (i, b) in Label::B4.simple_roots().iter().enumerate() {
            basis.push(BasisElement { kind: Kind::H, tag: coroot_vector(b), cartan_index: Some(i + 1) });
        }
        for a in &pos {
            basis.push(BasisElement { kind: Kind::E, tag: a.clone(), cartan_index: None });
        }
        let weights: Vec<Weight> = basis.iter().map(BasisElement::root).collect();
        let doubled = weights.iter().map(|w| w.doubled().expect("half-integral root")).collect();
        let index = basis.iter().enumerate().map(|(i, b)| ((b.kind, b.tag.clone()), i)).collect();

        let mut h_cols = ExactMatrix::zeros(4, 4);
        for j in 0..4 {
            for i in 0..4 {
                h_cols[(i, j)] = basis[pos.len() + j].tag.0[i].clone();
            }
        }
        let to_cartan = invert4(&h_cols)?;

        let mut g = Self {
            rs,
            basis,
            weights,
            doubled,
            index,
            table: Vec::new(),
            to_cartan,
            rescaling: Vec::new(),
        };
        let mut cv = chevalley::Chevalley::new(&g.rs);
        let dim = g.basis.len();
        let mut canonical = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                canonical[i * dim + j] = g.canonical_bracket(&mut cv, i, j);
            }
        }
        let rescaling = g.table_rescaling(&mut cv)?;
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = canonical[i * dim + j]
                    .iter()
                    .map(|(k, c)| (*k, c * &rescaling[i] * &rescaling[j] / &rescaling[*k]))
                    .collect();
            }
        }
        g.table = table;
        g.rescaling = rescaling;
        Ok(g)
    }

    fn canonical_bracket(&self, cv: &mut chevalley::Chevalley, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        let (bi, bj) = (&self.basis[i], &self.basis[j]);
        match (bi.kind, bj.kind) {
            (Kind::H, Kind::H) => Vec::new(),
            (Kind::H, _) => vec![(j, self.weights[j].dot(&bi.tag))],
            (_, Kind::H) => vec![(i, -self.weights[i].dot(&bj.tag))],
            _ => {
                let (r, s) = (&self.weights[i], &self.weights[j]);
                let sum = r + s;
                if sum.is_zero() {
                    self.cartan(&coroot_vector(r)).terms.into_iter().collect()
                } else if self.rs.is_root(&sum) {
                    vec![(self.root_vector(&sum).expect("root"), cv.n(r, s))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Scalars `d_i` with table basis vector `i` equal to `d_i` times the
    /// canonical one.
    fn table_rescaling(&self, cv: &mut chevalley::Chevalley) -> Result<Vec<Scalar>> {
        let mut s: HashMap<Weight, Scalar> = HashMap::new();
        let mut t: HashMap<Weight, Scalar> = HashMap::new();
        for a in self.rs.simple_roots() {
            s.insert(a.clone(), Scalar::one());
            t.insert(a.clone(), Scalar::one());
        }
        for entry in &ROOT_VECTOR_TABLE {
            let (target, l, r) = (undouble(entry.target), undouble(entry.left), undouble(entry.right));
            let c = q(entry.coeff.0, entry.coeff.1);
            if &l + &r != target || s.contains_key(&target) {
                return Err(Error::Internal(format!("malformed table entry for {target}")));
            }
            let (sl, sr) = match (s.get(&l), s.get(&r)) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => return Err(Error::Internal(format!("{target} defined before its factors"))),
            };
            let n = cv.n(&l, &r);
            let st = &c * sl * sr * &n;
            let tt = -&c * &t[&l] * &t[&r] * cv.n(&-&l, &-&r);
            if st.is_zero() || tt.is_zero() {
                return Err(Error::Internal(format!("table entry for {target} vanishes")));
            }
            if &st * &tt != Scalar::one() {
                return Err(Error::Internal(format!("[e, f] != h for {target}")));
            }
            s.insert(target.clone(), st);
            t.insert(target, tt);
        }
        if s.len() != self.rs.positive_roots().len() {
            return Err(Error::Internal("table does not cover every positive root".into()));
        }
        Ok(self
            .basis
            .iter()
            .map(|b| match b.kind {
                Kind::E => s[&b.tag].clone(),
                Kind::F => t[&b.tag].clone(),
                Kind::H => Scalar::one(),
            })
            .collect())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn kind(&self, i: usize) -> Kind {
        self.basis[i].kind
    }

    pub fn name(&self, i: usize) -> String {
        self.basis[i].name()
    }

    /// Index of the basis element named as by [`LieAlgebra::name`].
    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.name(i) == name)
    }

    /// The root of basis element `i` (zero for Cartan elements).
    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    /// The root of basis element `i` with doubled integer coordinates.
    pub fn doubled_weight(&self, i: usize) -> [i64; 4] {
        self.doubled[i]
    }

    pub fn e(&self, alpha: &Weight) -> Result<usize> {
        self.index.get(&(Kind::E, alpha.clone())).copied().ok_or_else(|| Error::NotARoot(alpha.to_string()))
    }

    pub fn f(&self, alpha: &Weight) -> Result<usize> {
        self.index.get(&(Kind::F, alpha.clone())).copied().ok_or_else(|| Error::NotARoot(alpha.to_string()))
    }

    /// `e_r` for positive `r`, `f_{−r}` for negative `r`.
    pub fn root_vector(&self, r: &Weight) -> Result<usize> {
        if self.rs.is_positive_root(r) {
            self.e(r)
        } else {
            self.f(&-r)
        }
    }

    /// The Cartan basis element `h_i = β_i∨`, `i` in `1..=4`.
    pub fn h(&self, i: usize) -> usize {
        self.rs.positive_roots().len() + i - 1
    }

    /// Chevalley generator `e_i` of the F4 simple root `α_i`.
    pub fn e_simple(&self, i: usize) -> usize {
        self.e(&self.rs.simple_roots()[i - 1]).expect("simple root")
    }

    pub fn f_simple(&self, i: usize) -> usize {
        self.f(&self.rs.simple_roots()[i - 1]).expect("simple root")
    }

    /// `[b_i, b_j]` as a list of `(index, coefficient)`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let ab = a * b;
                for (k, c) in self.bracket_basis(*i, *j) {
                    out.add_term(*k, &(&ab * c));
                }
            }
        }
        out
    }

    /// The Cartan element `h` with `[h, e_α] = (α, v) e_α`.
    pub fn cartan(&self, v: &Weight) -> LieElement {
        LieElement::from_terms((0..4).map(|i| {
            let c: Scalar = (0..4).map(|j| &self.to_cartan[(i, j)] * &v.0[j]).sum();
            (self.h(i + 1), c)
        }))
    }

    /// The ε-vector of a Cartan element, or `None` if `x` has root components.
    pub fn cartan_vector(&self, x: &LieElement) -> Option<Weight> {
        let mut v = Weight::zero();
        for (i, c) in x.terms() {
            if self.kind(*i) != Kind::H {
                return None;
            }
            v = &v + &self.basis[*i].tag.scale(c);
        }
        Some(v)
    }

    /// `h_α = [e_α, f_α] = α∨` for a root `α`.
    pub fn coroot_element(&self, alpha: &Weight) -> Result<LieElement> {
        Ok(self.cartan(&self.rs.coroot(alpha)?))
    }

    /// The normalized invariant form on basis vectors.
    pub fn form_basis(&self, i: usize, j: usize) -> Scalar {
        let (bi, bj) = (&self.basis[i], &self.basis[j]);
        match (bi.kind, bj.kind) {
            (Kind::H, Kind::H) => bi.tag.dot(&bj.tag),
            (Kind::E, Kind::F) | (Kind::F, Kind::E) if bi.tag == bj.tag => int(2) / bi.tag.norm2(),
            _ => Scalar::zero(),
        }
    }

    /// The invariant form with `(θ, θ) = 2`.
    pub fn invariant_form(&self, x: &LieElement, y: &LieElement) -> Scalar {
        let mut s = Scalar::zero();
        for (i, a) in &x.terms {
            for (j, b) in &y.terms {
                let f = self.form_basis(*i, *j);
                if !f.is_zero() {
                    s += a * b * f;
                }
            }
        }
        s
    }

    /// Basis indices spanning the subalgebra attached to a root subsystem
    /// (root vectors of its roots together with the full Cartan subalgebra).
    pub fn subalgebra_indices(&self, label: Label) -> Vec<usize> {
        let sub = RootSystem::build(label);
        (0..self.dim()).filter(|&i| self.kind(i) == Kind::H || sub.is_root(&self.weights[i])).collect()
    }

    /// Scalar relating table basis vector `i` to the canonical Chevalley one.
    pub fn rescaling(&self, i: usize) -> &Scalar {
        &self.rescaling[i]
    }

    /// `[[x, y], z] + [[y, z], x] + [[z, x], y]` on basis vectors.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> LieElement {
        let mut out = LieElement::zero();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, x) in self.bracket_basis(a, b) {
                for (n, y) in self.bracket_basis(*m, c) {
                    out.add_term(*n, &(x * y));
                }
            }
        }
        out
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F4 Lie algebra, dim {}", self.dim())
    }
}

fn invert4(m: &ExactMatrix) -> Result<ExactMatrix> {
    let mut out = ExactMatrix::zeros(4, 4);
    for j in 0..4 {
        let mut e = vec![Scalar::zero(); 4];
        e[j] = Scalar::one();
        let (x, ns) = crate::exact::solve(m, &e)?.ok_or_else(|| Error::Internal("singular matrix".into()))?;
        if !ns.is_empty() {
            return Err(Error::Internal("singular matrix".into()));
        }
        for i in 0..4 {
            out[(i, j)] = x[i].clone();
        }
    }
    Ok(out)
}
