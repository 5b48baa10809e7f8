//! Root systems of types F4 and B4 (three embeddings) in ε-coordinates.
//!
//! All four systems live in the same ambient space `Q^4` with the standard
//! dot product as invariant form, so restricting a weight from F4 to any of
//! the B4 subsystems is the identity on coordinates.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, q, solve, ExactMatrix, Scalar};

/// A vector in the ε-basis of the ambient space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub [Scalar; 4]);

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(c: [Scalar; 4]) -> Self {
        Self(c)
    }

    pub fn ints(c: [i64; 4]) -> Self {
        Self(c.map(int))
    }

    /// `½ (c1 ε1 + c2 ε2 + c3 ε3 + c4 ε4)`.
    pub fn halves(c: [i64; 4]) -> Self {
        Self(c.map(|x| q(x, 2)))
    }

    /// The unit vector `ε_i`, for `i` in `1..=4`.
    pub fn eps(i: usize) -> Self {
        let mut c = [0; 4];
        c[i - 1] = 1;
        Self::ints(c)
    }

    pub fn coords(&self) -> &[Scalar; 4] {
        &self.0
    }

    pub fn dot(&self, other: &Weight) -> Scalar {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, c: &Scalar) -> Weight {
        Weight(std::array::from_fn(|i| &self.0[i] * c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `⟨self, a∨⟩ = 2 (self, a) / (a, a)`.
    pub fn pair_coroot(&self, a: &Weight) -> Scalar {
        int(2) * self.dot(a) / a.norm2()
    }

    /// Coordinates doubled, when they are all half-integers.
    pub fn doubled(&self) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        for (o, c) in out.iter_mut().zip(self.0.iter()) {
            let d = c * int(2);
            if !d.is_integer() {
                return None;
            }
            *o = i64::try_from(d.to_integer()).ok()?;
        }
        Some(out)
    }

    pub fn to_json(&self) -> Value {
        json!({ "eps": self.0.iter().map(format_scalar).collect::<Vec<_>>() })
    }

    /// Weight JSON with an additional fundamental-weight view in `rs`.
    pub fn to_json_with_fund(&self, rs: &RootSystem) -> Value {
        json!({
            "eps": self.0.iter().map(format_scalar).collect::<Vec<_>>(),
            "fund": {
                "basis": rs.label().name(),
                "coeffs": rs.fund_coords(self).iter().map(format_scalar).collect::<Vec<_>>(),
            }
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "[{}]", c.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(std::array::from_fn(|i| -self.0[i].clone()))
    }
}

/// `2a / (a, a)`, without checking that `a` is a root.
pub fn coroot_vector(a: &Weight) -> Weight {
    a.scale(&(int(2) / a.norm2()))
}

/// The normalized invariant form on the ε-space. With `(θ, θ) = 2` for
/// `θ = ε1 + ε2` the Gram matrix is the identity.
#[derive(Clone, Debug)]
pub struct InvariantForm {
    gram: ExactMatrix,
}

impl Default for InvariantForm {
    fn default() -> Self {
        Self { gram: ExactMatrix::identity(4) }
    }
}

impl InvariantForm {
    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn pair(&self, a: &Weight, b: &Weight) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..4 {
            for j in 0..4 {
                s += &a.0[i] * &self.gram[(i, j)] * &b.0[j];
            }
        }
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    F4,
    B4,
    B4Prime,
    B4DoublePrime,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::F4, Label::B4, Label::B4Prime, Label::B4DoublePrime];

    pub fn name(self) -> &'static str {
        match self {
            Label::F4 => "F4",
            Label::B4 => "B4",
            Label::B4Prime => "B4prime",
            Label::B4DoublePrime => "B4doubleprime",
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        Label::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown root system {s:?}")))
    }

    /// Printed simple roots, in order.
    pub fn simple_roots(self) -> [Weight; 4] {
        match self {
            Label::F4 => [
                Weight::ints([0, 1, -1, 0]),
                Weight::ints([0, 0, 1, -1]),
                Weight::ints([0, 0, 0, 1]),
                Weight::halves([1, -1, -1, -1]),
            ],
            Label::B4 => [
                Weight::ints([1, -1, 0, 0]),
                Weight::ints([0, 1, -1, 0]),
                Weight::ints([0, 0, 1, -1]),
                Weight::ints([0, 0, 0, 1]),
            ],
            Label::B4Prime => [
                Weight::ints([0, 0, 1, -1]),
                Weight::ints([0, 1, -1, 0]),
                Weight::ints([0, 0, 1, 1]),
                Weight::halves([1, -1, -1, -1]),
            ],
            Label::B4DoublePrime => [
                Weight::ints([0, 0, 1, 1]),
                Weight::ints([0, 1, -1, 0]),
                Weight::ints([0, 0, 1, -1]),
                Weight::halves([1, -1, -1, 1]),
            ],
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn long_roots() -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = [0; 4];
                c[i] = si;
                c[j] = sj;
                out.push(Weight::ints(c));
            }
        }
    }
    out
}

/// All 48 roots of F4: `±ε_i`, `±ε_i ± ε_j`, `½(±ε1 ± ε2 ± ε3 ± ε4)`.
pub fn f4_roots() -> Vec<Weight> {
    let mut out = long_roots();
    for i in 1..=4 {
        out.push(Weight::eps(i));
        out.push(-&Weight::eps(i));
    }
    for m in 0..16u32 {
        let c = std::array::from_fn(|i| if m >> i & 1 == 1 { -1 } else { 1 });
        out.push(Weight::halves(c));
    }
    out
}

/// The root sets exactly as printed for the B4 subsystems, as data for
/// cross-checking the reflection closure. `None` for F4.
pub fn printed_roots(label: Label) -> Option<Vec<Weight>> {
    let short: Vec<Weight> = match label {
        Label::F4 => return None,
        Label::B4 => (1..=4).map(Weight::eps).collect(),
        Label::B4Prime => vec![
            Weight::halves([1, -1, -1, -1]),
            Weight::halves([1, 1, -1, 1]),
            Weight::halves([1, -1, 1, 1]),
            Weight::halves([1, 1, 1, -1]),
        ],
        // The first entry is printed twice in the source listing.
        Label::B4DoublePrime => vec![
            Weight::halves([1, -1, -1, 1]),
            Weight::halves([1, -1, 1, -1]),
            Weight::halves([1, -1, -1, 1]),
            Weight::halves([1, 1, 1, 1]),
        ],
    };
    let mut out = long_roots();
    for s in short {
        out.push(-&s);
        out.push(s);
    }
    Some(out)
}

/// `r_a(b) = b − ⟨b, a∨⟩ a`.
pub fn reflect(a: &Weight, b: &Weight) -> Weight {
    b - &a.scale(&b.pair_coroot(a))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    label: Label,
    roots: BTreeSet<Weight>,
    positive: Vec<Weight>,
    simple: [Weight; 4],
    /// Inverse of the matrix whose columns are the simple roots.
    to_simple: ExactMatrix,
}

impl RootSystem {
    pub fn build(label: Label) -> Self {
        let simple = label.simple_roots();
        let roots: BTreeSet<Weight> = match label {
            Label::F4 => f4_roots().into_iter().collect(),
            _ => reflection_closure(&simple),
        };
        let mut cols = ExactMatrix::zeros(4, 4);
        for (j, s) in simple.iter().enumerate() {
            for i in 0..4 {
                cols[(i, j)] = s.0[i].clone();
            }
        }
        let to_simple = invert(&cols).expect("simple roots are linearly independent");
        let mut rs = Self { label, roots, positive: Vec::new(), simple, to_simple };
        let mut positive: Vec<Weight> =
            rs.roots.iter().filter(|r| rs.height(r).is_positive()).cloned().collect();
        positive.sort_by(|a, b| rs.height(a).cmp(&rs.height(b)).then_with(|| a.cmp(b)));
        rs.positive = positive;
        rs
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn roots(&self) -> impl Iterator<Item = &Weight> {
        self.roots.iter()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Positive roots ordered by height, then lexicographically in ε-coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Weight; 4] {
        &self.simple
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.contains(w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.is_root(w) && self.height(w).is_positive()
    }

    /// Dimension of the corresponding simple Lie algebra.
    pub fn dim(&self) -> usize {
        self.roots.len() + 4
    }

    pub fn highest_root(&self) -> &Weight {
        self.positive.last().expect("non-empty root system")
    }

    /// Coordinates of `v` in the basis of simple roots.
    pub fn simple_coords(&self, v: &Weight) -> [Scalar; 4] {
        std::array::from_fn(|i| (0..4).map(|j| &self.to_simple[(i, j)] * &v.0[j]).sum())
    }

    pub fn height(&self, v: &Weight) -> Scalar {
        self.simple_coords(v).into_iter().sum()
    }

    pub fn coroot(&self, a: &Weight) -> Result<Weight> {
        if !self.is_root(a) {
            return Err(Error::NotARoot(a.to_string()));
        }
        Ok(coroot_vector(a))
    }

    pub fn simple_coroots(&self) -> [Weight; 4] {
        self.simple.clone().map(|s| coroot_vector(&s))
    }

    /// `⟨μ, α_j∨⟩` for the simple roots `α_j`.
    pub fn fund_coords(&self, mu: &Weight) -> [Scalar; 4] {
        std::array::from_fn(|j| mu.pair_coroot(&self.simple[j]))
    }

    /// The fundamental weights `ω_i`, defined by `⟨ω_i, α_j∨⟩ = δ_ij`.
    pub fn fundamental_weights(&self) -> [Weight; 4] {
        let mut a = ExactMatrix::zeros(4, 4);
        for (j, c) in self.simple_coroots().iter().enumerate() {
            for i in 0..4 {
                a[(j, i)] = c.0[i].clone();
            }
        }
        std::array::from_fn(|i| {
            let mut rhs = vec![Scalar::zero(); 4];
            rhs[i] = Scalar::one();
            let (x, _) = solve(&a, &rhs).unwrap().expect("simple coroots are independent");
            Weight(std::array::from_fn(|k| x[k].clone()))
        })
    }

    pub fn from_fund(&self, coeffs: &[Scalar; 4]) -> Weight {
        let fw = self.fundamental_weights();
        let mut w = Weight::zero();
        for (c, f) in coeffs.iter().zip(fw.iter()) {
            w = &w + &f.scale(c);
        }
        w
    }

    /// Sum of the fundamental weights.
    pub fn rho_bar(&self) -> Weight {
        self.fundamental_weights().iter().fold(Weight::zero(), |acc, w| &acc + w)
    }

    pub fn half_sum_positive(&self) -> Weight {
        let s = self.positive.iter().fold(Weight::zero(), |acc, w| &acc + w);
        s.scale(&q(1, 2))
    }

    pub fn is_dominant_integral(&self, mu: &Weight) -> bool {
        self.fund_coords(mu).iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Dimension of the irreducible module with highest weight `mu`.
    pub fn weyl_dim(&self, mu: &Weight) -> Result<BigInt> {
        if !self.is_dominant_integral(mu) {
            return Err(Error::NotDominantIntegral(mu.to_string()));
        }
        let rho = self.rho_bar();
        let shifted = mu + &rho;
        let mut d = Scalar::one();
        for a in &self.positive {
            d = d * shifted.dot(a) / rho.dot(a);
        }
        if !d.is_integer() {
            return Err(Error::Internal(format!("non-integral Weyl dimension {d}")));
        }
        Ok(d.to_integer())
    }

    /// Whether `v` is a non-empty sum of positive roots. Every element of the
    /// positive root cone with integer simple-root coordinates is a sum of
    /// simple roots, so this reduces to a coordinate test.
    pub fn is_positive_root_sum(&self, v: &Weight) -> bool {
        let c = self.simple_coords(v);
        !v.is_zero() && c.iter().all(|x| x.is_integer() && !x.is_negative())
    }

    /// A decomposition of `v` into simple roots (multiplicities), if `v` is a
    /// non-empty sum of positive roots.
    pub fn positive_root_decomposition(&self, v: &Weight) -> Option<[BigInt; 4]> {
        self.is_positive_root_sum(v).then(|| self.simple_coords(v).map(|c| c.to_integer()))
    }

    /// Long roots have `(α, α) = 2`, short ones `1`.
    pub fn is_long(&self, a: &Weight) -> bool {
        a.norm2() == int(2)
    }
}

fn reflection_closure(simple: &[Weight; 4]) -> BTreeSet<Weight> {
    let mut roots: BTreeSet<Weight> = simple.iter().cloned().collect();
    roots.extend(simple.iter().map(|s| -s));
    loop {
        let mut added = Vec::new();
        for s in simple {
            for r in &roots {
                let x = reflect(s, r);
                if !roots.contains(&x) {
                    added.push(x);
                }
            }
        }
        if added.is_empty() {
            return roots;
        }
        roots.extend(added);
    }
}

fn invert(m: &ExactMatrix) -> Option<ExactMatrix> {
    let n = m.rows();
    let mut out = ExactMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        let (x, ns) = solve(m, &e).ok()??;
        if !ns.is_empty() {
            return None;
        }
        for i in 0..n {
            out[(i, j)] = x[i].clone();
        }
    }
    Some(out)
}

/// Least common multiple of the denominators of `v`'s coordinates.
pub fn denominator_lcm(v: &[Scalar]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
