//! Highest-weight classification from the zero-weight polynomial systems,
//! the dominant-integral bound and the weight bookkeeping for branching
//! `L_F`-modules into `L_B`-modules.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::affine::{lowest_conformal_weight, AffineWeight};
use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, q, Exponents, Scalar, SparseEchelon, SparsePoly};
use crate::rootsys::{coroot_vector, Label, RootSystem, Weight};
use crate::uea::{extract_p0, Pbw};

/// `coeffs · x + constant` on the ε-coordinates `x` of a weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm {
    pub coeffs: [Scalar; 4],
    pub constant: Scalar,
}

impl LinearForm {
    pub fn new(coeffs: [Scalar; 4], constant: Scalar) -> Self {
        Self { coeffs, constant }
    }

    /// `h_α + c`, i.e. `μ ↦ ⟨μ, α∨⟩ + c`.
    pub fn coroot(alpha: &Weight, c: Scalar) -> Self {
        Self { coeffs: coroot_vector(alpha).0, constant: c }
    }

    pub fn evaluate(&self, x: &Weight) -> Scalar {
        self.coeffs.iter().zip(x.coords()).fold(self.constant.clone(), |acc, (a, b)| acc + a * b)
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::linear(&self.coeffs, self.constant.clone())
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Rescaled so that the first non-zero coefficient is 1; returns the
    /// factor removed.
    fn normalized(&self) -> (Scalar, LinearForm) {
        let lead = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .find(|c| !c.is_zero())
            .cloned()
            .unwrap_or_else(Scalar::one);
        let inv = Scalar::one() / &lead;
        (lead, LinearForm { coeffs: self.coeffs.clone().map(|c| c * &inv), constant: &self.constant * &inv })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_poly())
    }
}

/// A polynomial stored as `scale · Π factors` alongside its expansion.
#[derive(Clone, Debug)]
pub struct FactoredPolynomial {
    pub scale: Scalar,
    pub factors: Vec<LinearForm>,
    pub expanded: SparsePoly,
}

impl FactoredPolynomial {
    pub fn from_factors(scale: Scalar, factors: Vec<LinearForm>) -> Self {
        let expanded =
            factors.iter().fold(SparsePoly::constant(scale.clone()), |acc, l| &acc * &l.to_poly());
        Self { scale, factors, expanded }
    }

    pub fn evaluate(&self, x: &Weight) -> Scalar {
        self.expanded.evaluate(x.coords())
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scale.is_one() {
            write!(f, "{}·", format_scalar(&self.scale))?;
        }
        for l in &self.factors {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `p_1, …, p_12` as products `h_α (h_β + c)`. The first four lie in the
/// B4 family and all twelve in the F4 family.
pub fn reference_polynomials() -> Vec<FactoredPolynomial> {
    let w = Weight::ints;
    let h = Weight::halves;
    let table: [(Weight, Weight, Scalar); 12] = [
        (w([1, -1, 0, 0]), w([1, 1, 0, 0]), q(5, 2)),
        (w([0, 1, -1, 0]), w([0, 1, 1, 0]), q(3, 2)),
        (w([0, 0, 1, -1]), w([0, 0, 1, 1]), q(1, 2)),
        (w([0, 0, 0, 1]), w([0, 0, 0, 1]), int(-1)),
        (w([0, 0, 1, -1]), w([1, 1, 0, 0]), q(5, 2)),
        (w([0, 1, -1, 0]), w([1, 0, 0, 1]), q(3, 2)),
        (w([0, 0, 1, 1]), w([1, -1, 0, 0]), q(1, 2)),
        (h([1, -1, -1, -1]), h([1, -1, -1, -1]), int(-1)),
        (w([0, 0, 1, 1]), w([1, 1, 0, 0]), q(5, 2)),
        (w([0, 1, -1, 0]), w([1, 0, 0, -1]), q(3, 2)),
        (w([0, 0, 1, -1]), w([1, -1, 0, 0]), q(1, 2)),
        (h([1, -1, -1, 1]), h([1, -1, -1, 1]), int(-1)),
    ];
    table
        .into_iter()
        .map(|(a, b, c)| {
            FactoredPolynomial::from_factors(
                Scalar::one(),
                vec![LinearForm::coroot(&a, Scalar::zero()), LinearForm::coroot(&b, c)],
            )
        })
        .collect()
}

/// The basis of the zero-weight polynomial family used for `label` at `n = 1`.
pub fn reference_basis(label: Label) -> Result<Vec<FactoredPolynomial>> {
    let all = reference_polynomials();
    match label {
        Label::B4 => Ok(all[..4].to_vec()),
        Label::F4 => Ok(all),
        other => Err(Error::Unsupported(format!("no polynomial basis for {other}"))),
    }
}

type Quadric = [[Scalar; 5]; 5];

fn quadric(p: &SparsePoly) -> Quadric {
    let mut m: Quadric = std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
    let half = q(1, 2);
    for (e, c) in p.terms() {
        let mut idx: Vec<usize> = Vec::new();
        for (i, k) in e.0.iter().enumerate() {
            idx.extend(std::iter::repeat_n(i, *k as usize));
        }
        while idx.len() < 2 {
            idx.push(4);
        }
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m[i][i] += c;
        } else {
            m[i][j] += c * &half;
            m[j][i] += c * &half;
        }
    }
    m
}

fn sqrt_rational(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Scalar::new(n, d))
}

/// Factors of a quadratic form in five homogeneous variables, as two
/// coefficient vectors `l, m` with `Q = l·z · m·z`.
fn factor_quadric(m: &Quadric) -> Option<([Scalar; 5], [Scalar; 5])> {
    if let Some(i) = (0..5).find(|&i| !m[i][i].is_zero()) {
        let a = m[i][i].clone();
        let b: [Scalar; 5] = std::array::from_fn(|k| if k == i { Scalar::zero() } else { int(2) * &m[i][k] });
        let disc = |k: usize, l: usize| -> Scalar {
            if k == i || l == i {
                Scalar::zero()
            } else {
                &b[k] * &b[l] - int(4) * &a * &m[k][l]
            }
        };
        let root: [Scalar; 5] = match (0..5).find(|&k| !disc(k, k).is_zero()) {
            None => std::array::from_fn(|_| Scalar::zero()),
            Some(k) => {
                let s = sqrt_rational(&disc(k, k))?;
                std::array::from_fn(|l| disc(l, k) / &s)
            }
        };
        for k in 0..5 {
            for l in 0..5 {
                if disc(k, l) != &root[k] * &root[l] {
                    return None;
                }
            }
        }
        let two = int(2);
        let mut first: [Scalar; 5] = std::array::from_fn(|k| (&b[k] - &root[k]) / &two);
        let mut second: [Scalar; 5] = std::array::from_fn(|k| (&b[k] + &root[k]) / (&two * &a));
        first[i] = a;
        second[i] = Scalar::one();
        return Some((first, second));
    }
    let (i, j) = (0..5).flat_map(|i| (0..5).map(move |j| (i, j))).find(|&(i, j)| i != j && !m[i][j].is_zero())?;
    // Substitute z_i = z'_i + z_j, factor, and substitute back.
    let mut t = m.clone();
    for row in t.iter_mut() {
        let v = row[i].clone();
        row[j] += v;
    }
    let row_i = t[i].clone();
    for (x, v) in t[j].iter_mut().zip(row_i) {
        *x += v;
    }
    let (l, r) = factor_quadric(&t)?;
    let back = |v: [Scalar; 5]| -> [Scalar; 5] {
        let mut out = v.clone();
        out[j] = &v[j] - &v[i];
        out
    };
    Some((back(l), back(r)))
}

/// Writes a degree-2 polynomial as a product of two rational linear forms.
pub fn factor_linear(p: &SparsePoly) -> Result<FactoredPolynomial> {
    if p.total_degree() != Some(2) {
        return Err(Error::WrongDegree(p.total_degree().unwrap_or(0) as usize));
    }
    let (l, r) = factor_quadric(&quadric(p)).ok_or_else(|| Error::NotFactorable(p.to_string()))?;
    let to_form = |v: [Scalar; 5]| {
        let [a, b, c, d, e] = v;
        LinearForm::new([a, b, c, d], e)
    };
    let (s1, l) = to_form(l).normalized();
    let (s2, r) = to_form(r).normalized();
    let (l, r) = if (l.is_constant(), l.coeffs.clone()) <= (r.is_constant(), r.coeffs.clone()) { (l, r) } else { (r, l) };
    let f = FactoredPolynomial::from_factors(s1 * s2, vec![l, r]);
    if f.expanded != *p {
        return Err(Error::Internal(format!("factorization of {p} does not expand back")));
    }
    Ok(f)
}

/// A row-reduced affine system `A x + b = 0` in four unknowns.
#[derive(Clone, Debug, Default)]
struct AffineSystem {
    rows: Vec<(usize, [Scalar; 5])>,
}

enum Insert {
    New(AffineSystem),
    Implied,
    Inconsistent,
}

impl AffineSystem {
    fn reduce(&self, row: &[Scalar; 5]) -> [Scalar; 5] {
        let mut v = row.clone();
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for k in 0..5 {
                    v[k] -= &c * &r[k];
                }
            }
        }
        v
    }

    fn insert(&self, l: &LinearForm) -> Insert {
        let mut row: [Scalar; 5] = std::array::from_fn(|k| if k < 4 { l.coeffs[k].clone() } else { l.constant.clone() });
        row = self.reduce(&row);
        let Some(p) = (0..4).find(|&k| !row[k].is_zero()) else {
            return if row[4].is_zero() { Insert::Implied } else { Insert::Inconsistent };
        };
        let inv = Scalar::one() / &row[p];
        for x in row.iter_mut() {
            *x *= &inv;
        }
        let mut next = self.clone();
        for (_, r) in next.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for k in 0..5 {
                    r[k] -= &c * &row[k];
                }
            }
        }
        next.rows.push((p, row));
        next.rows.sort_by_key(|(p, _)| *p);
        Insert::New(next)
    }

    /// Particular solution (free variables zero) and a basis of directions.
    fn solution(&self) -> (Weight, Vec<Weight>) {
        let mut x: [Scalar; 4] = std::array::from_fn(|_| Scalar::zero());
        for (p, r) in &self.rows {
            x[*p] = -r[4].clone();
        }
        let pivots: BTreeSet<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let dirs = (0..4)
            .filter(|f| !pivots.contains(f))
            .map(|f| {
                let mut d: [Scalar; 4] = std::array::from_fn(|k| if k == f { Scalar::one() } else { Scalar::zero() });
                for (p, r) in &self.rows {
                    d[*p] = -r[f].clone();
                }
                Weight(d)
            })
            .collect();
        (Weight(x), dirs)
    }
}

/// An isolated solution with the factor chosen in each polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionPoint {
    pub weight: Weight,
    pub selection: Vec<usize>,
}

/// A positive-dimensional solution component `point + span(directions)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub point: Weight,
    pub directions: Vec<Weight>,
    pub selection: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct ClassificationResult {
    /// Isolated solutions, duplicate-free, lexicographic in ε-coordinates.
    pub points: Vec<SolutionPoint>,
    pub components: Vec<Component>,
}

impl ClassificationResult {
    pub fn weights(&self) -> Vec<Weight> {
        self.points.iter().map(|p| p.weight.clone()).collect()
    }

    pub fn to_json(&self, rs: &RootSystem, level: &Scalar) -> Value {
        let weights: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                json!({
                    "eps": p.weight.coords().iter().map(format_scalar).collect::<Vec<_>>(),
                    "fund": rs.fund_coords(&p.weight).iter().map(format_scalar).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut out = json!({
            "algebra": rs.label().name(),
            "level": format_scalar(level),
            "weights": weights,
            "count": self.points.len(),
        });
        if !self.components.is_empty() {
            out["components"] = self
                .components
                .iter()
                .map(|c| json!({ "point": c.point.to_json()["eps"], "directions": c.directions.iter().map(|d| d.to_json()["eps"].clone()).collect::<Vec<_>>() }))
                .collect();
        }
        out
    }
}

fn vanishes_on(p: &FactoredPolynomial, point: &Weight, dirs: &[Weight]) -> bool {
    let at = |w: &Weight| p.evaluate(w).is_zero();
    if !at(point) {
        return false;
    }
    for (i, d) in dirs.iter().enumerate() {
        let one = point + d;
        if !at(&one) || !at(&(&one + d)) {
            return false;
        }
        for e in &dirs[i + 1..] {
            if !at(&(&one + e)) {
                return false;
            }
        }
    }
    true
}

/// All common zeros of the factored polynomials, found by choosing one
/// linear factor per polynomial and solving the resulting linear systems.
pub fn solve_system(ps: &[FactoredPolynomial]) -> Result<ClassificationResult> {
    let mut points: Vec<SolutionPoint> = Vec::new();
    let mut components: Vec<Component> = Vec::new();
    let mut stack: Vec<(AffineSystem, Vec<usize>)> = vec![(AffineSystem::default(), Vec::new())];
    while let Some((sys, sel)) = stack.pop() {
        let i = sel.len();
        if i == ps.len() {
            let (point, directions) = sys.solution();
            if directions.is_empty() {
                points.push(SolutionPoint { weight: point, selection: sel });
            } else {
                components.push(Component { point, directions, selection: sel });
            }
            continue;
        }
        let p = &ps[i];
        if p.scale.is_zero() {
            let mut s = sel.clone();
            s.push(0);
            stack.push((sys, s));
            continue;
        }
        let mut branches = Vec::new();
        let mut implied = None;
        for (k, f) in p.factors.iter().enumerate() {
            match sys.insert(f) {
                Insert::Implied => {
                    implied = Some(k);
                    break;
                }
                Insert::New(next) => branches.push((next, k)),
                Insert::Inconsistent => {}
            }
        }
        if let Some(k) = implied {
            let mut s = sel.clone();
            s.push(k);
            stack.push((sys, s));
            continue;
        }
        for (next, k) in branches.into_iter().rev() {
            let mut s = sel.clone();
            s.push(k);
            stack.push((next, s));
        }
    }
    points.sort_by(|a, b| a.weight.cmp(&b.weight).then_with(|| a.selection.cmp(&b.selection)));
    points.dedup_by(|a, b| a.weight == b.weight);
    components.sort_by(|a, b| (&a.point, &a.directions).cmp(&(&b.point, &b.directions)));
    components.dedup_by(|a, b| a.point == b.point && a.directions == b.directions);
    for pt in &points {
        if let Some(p) = ps.iter().find(|p| !p.evaluate(&pt.weight).is_zero()) {
            return Err(Error::Internal(format!("{p} does not vanish at {}", pt.weight)));
        }
    }
    for c in &components {
        if let Some(p) = ps.iter().find(|p| !vanishes_on(p, &c.point, &c.directions)) {
            return Err(Error::Internal(format!("{p} does not vanish on the component through {}", c.point)));
        }
    }
    Ok(ClassificationResult { points, components })
}

/// Whether two polynomial families span the same space.
pub fn same_span(a: &[SparsePoly], b: &[SparsePoly]) -> bool {
    let span = |ps: &[SparsePoly]| {
        let mut e: SparseEchelon<Exponents> = SparseEchelon::new();
        for p in ps {
            e.insert(p.terms());
        }
        e
    };
    let (sa, sb) = (span(a), span(b));
    sa.rank() == sb.rank() && a.iter().all(|p| sb.contains(p.terms()))
}

/// Highest weights of irreducible category-O modules over `L(n − 7/2, 0)`
/// for `label` B4 or F4, from the zero-weight polynomials of the ideal.
///
/// The extracted family is compared with the factored basis; if it spans the
/// same space the factored basis is solved, otherwise each extracted
/// polynomial must factor into linear forms.
pub fn classify_category_o(pbw: &Pbw, label: Label, n: u32) -> Result<ClassificationResult> {
    let extracted = extract_p0(pbw, label, n)?;
    if n == 1 {
        let basis = reference_basis(label)?;
        let expanded: Vec<SparsePoly> = basis.iter().map(|p| p.expanded.clone()).collect();
        if same_span(&extracted, &expanded) {
            return solve_system(&basis);
        }
    }
    let factored = extracted.iter().map(factor_linear).collect::<Result<Vec<_>>>()?;
    solve_system(&factored)
}

/// `(μ, ε1)` for `μ`.
fn eps1_part(mu: &Weight) -> Scalar {
    mu.coords()[0].clone()
}

/// Dominant integral weights `μ` with `(μ, ε1) ≤ n − 1/2`, sorted
/// lexicographically in ε-coordinates.
pub fn classify_dominant(rs: &RootSystem, n: u32) -> Result<Vec<Weight>> {
    if n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    let bound = int(n as i64) - q(1, 2);
    let fw = rs.fundamental_weights();
    let steps: Vec<Scalar> = fw.iter().map(eps1_part).collect();
    if steps.iter().any(|s| !s.is_positive()) {
        return Err(Error::Internal("fundamental weight with non-positive ε1 part".into()));
    }
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Weight, Scalar)> = vec![(0, Weight::zero(), Scalar::zero())];
    while let Some((i, mu, used)) = stack.pop() {
        if i == 4 {
            out.push(mu);
            continue;
        }
        let (mut w, mut u) = (mu, used);
        while u <= bound {
            stack.push((i + 1, w.clone(), u.clone()));
            w = &w + &fw[i];
            u += &steps[i];
        }
    }
    out.sort();
    Ok(out)
}

/// Coordinates of `mu` in the fundamental weights of B4.
pub fn restrict_weight(mu: &Weight) -> [Scalar; 4] {
    RootSystem::build(Label::B4).fund_coords(mu)
}

/// The category-O weights of `L_B(−5/2, 0)` with their lowest conformal
/// weights, given in fundamental coordinates of B4.
pub fn b4_conformal_table() -> Vec<([Scalar; 4], Scalar)> {
    let c = |a: [(i64, i64); 4]| a.map(|(n, d)| q(n, d));
    vec![
        (c([(-5, 2), (0, 1), (0, 1), (0, 1)]), q(-5, 4)),
        (c([(0, 1), (0, 1), (-3, 2), (1, 1)]), q(-5, 4)),
        (c([(1, 2), (-3, 2), (0, 1), (0, 1)]), q(-5, 4)),
        (c([(0, 1), (-1, 2), (-1, 2), (0, 1)]), q(-5, 4)),
        (c([(-7, 2), (0, 1), (0, 1), (1, 1)]), q(-3, 4)),
        (c([(0, 1), (0, 1), (-1, 2), (0, 1)]), q(-3, 4)),
        (c([(3, 2), (-5, 2), (0, 1), (1, 1)]), q(-3, 4)),
        (c([(0, 1), (1, 2), (-3, 2), (1, 1)]), q(-3, 4)),
        (c([(0, 1), (-3, 2), (0, 1), (0, 1)]), q(-3, 2)),
        (c([(0, 1), (-5, 2), (0, 1), (1, 1)]), q(-3, 2)),
        (c([(-1, 2), (-1, 2), (-1, 2), (0, 1)]), q(-3, 2)),
        (c([(-3, 2), (1, 2), (-3, 2), (1, 1)]), q(-3, 2)),
        (c([(-3, 2), (0, 1), (-1, 2), (0, 1)]), q(-3, 2)),
        (c([(-1, 2), (0, 1), (-3, 2), (1, 1)]), q(-3, 2)),
        (c([(0, 1), (0, 1), (0, 1), (0, 1)]), int(0)),
        (c([(0, 1), (0, 1), (0, 1), (1, 1)]), int(1)),
    ]
}

/// One `ĝ_B` summand of a branching: its highest weight in B4 fundamental
/// coordinates and the F4 root lowered to reach it (none for the top).
#[derive(Clone, Debug)]
pub struct BranchSummand {
    pub weight: [Scalar; 4],
    pub root: Option<Weight>,
}

#[derive(Clone, Debug)]
pub struct Bookkeeping {
    pub name: &'static str,
    pub weight: AffineWeight,
    pub summands: Vec<BranchSummand>,
    /// Lowest conformal weight of the F4 module.
    pub f_conformal_weight: Scalar,
    /// Lowest conformal weights of the summands as B4 modules.
    pub summand_conformal_weights: Vec<Scalar>,
    /// The remaining weight-`−3/2` B4 weights with whether
    /// `λ − weight` is a sum of positive F4 roots.
    pub excluded: Vec<([Scalar; 4], bool)>,
    pub conformal_weight_ok: bool,
    pub summand_weights_ok: bool,
    pub roots_ok: bool,
    pub exclusion_ok: bool,
}

impl Bookkeeping {
    pub fn passed(&self) -> bool {
        self.conformal_weight_ok && self.summand_weights_ok && self.roots_ok && self.exclusion_ok
    }

    pub fn to_json(&self) -> Value {
        let fund = |c: &[Scalar; 4]| c.iter().map(format_scalar).collect::<Vec<_>>();
        json!({
            "name": self.name,
            "weight": self.weight.to_json(),
            "summands": self.summands.iter().map(|s| json!({
                "fund": fund(&s.weight),
                "root": s.root.as_ref().map(|r| r.to_json()["eps"].clone()),
            })).collect::<Vec<_>>(),
            "f_conformal_weight": format_scalar(&self.f_conformal_weight),
            "summand_conformal_weights": self.summand_conformal_weights.iter().map(format_scalar).collect::<Vec<_>>(),
            "excluded": self.excluded.iter().map(|(w, s)| json!({ "fund": fund(w), "positive_root_sum": s })).collect::<Vec<_>>(),
            "checks": {
                "conformal_weight": self.conformal_weight_ok,
                "summand_weights": self.summand_weights_ok,
                "roots": self.roots_ok,
                "exclusion": self.exclusion_ok,
            },
        })
    }
}

/// The three non-vacuum category-O weights `λ², λ³, λ⁴` of `L_F(−5/2, 0)`.
pub fn category_o_weights() -> [(&'static str, AffineWeight); 3] {
    let f = RootSystem::build(Label::F4);
    let at = |c: [Scalar; 4]| AffineWeight::at_level(q(-5, 2), f.from_fund(&c));
    [
        ("lambda2", at([q(-3, 2), int(0), int(0), int(0)])),
        ("lambda3", at([q(-1, 2), q(-1, 2), int(0), int(0)])),
        ("lambda4", at([int(0), q(-3, 2), int(1), int(0)])),
    ]
}

/// Weight-level bookkeeping for the decomposition of `L_F(λ)` into
/// `L_B`-modules, `λ ∈ {λ², λ³, λ⁴}`.
pub fn decomposition_bookkeeping(lam: &AffineWeight) -> Result<Bookkeeping> {
    let f = RootSystem::build(Label::F4);
    let b = RootSystem::build(Label::B4);
    let c = |a: [(i64, i64); 4]| a.map(|(n, d)| q(n, d));
    let (name, summands) = match category_o_weights().iter().position(|(_, w)| w == lam) {
        Some(0) => (
            "lambda2",
            vec![
                BranchSummand { weight: c([(0, 1), (-3, 2), (0, 1), (0, 1)]), root: None },
                BranchSummand { weight: c([(0, 1), (-5, 2), (0, 1), (1, 1)]), root: Some(Weight::halves([1, 1, -1, -1])) },
            ],
        ),
        Some(1) => (
            "lambda3",
            vec![
                BranchSummand { weight: c([(-1, 2), (-1, 2), (-1, 2), (0, 1)]), root: None },
                BranchSummand {
                    weight: c([(-3, 2), (1, 2), (-3, 2), (1, 1)]),
                    root: Some(Weight::halves([1, -1, 1, -1])),
                },
            ],
        ),
        Some(2) => (
            "lambda4",
            vec![
                BranchSummand { weight: c([(-1, 2), (0, 1), (-3, 2), (1, 1)]), root: None },
                BranchSummand { weight: c([(-3, 2), (0, 1), (-1, 2), (0, 1)]), root: Some(Weight::halves([1, -1, -1, 1])) },
            ],
        ),
        _ => return Err(Error::Unsupported(format!("no bookkeeping for {lam}"))),
    };
    let k = q(-5, 2);
    let target = q(-3, 2);
    let f_conformal_weight = lowest_conformal_weight(&f, &k, &lam.finite)?;
    let summand_conformal_weights = summands
        .iter()
        .map(|s| lowest_conformal_weight(&b, &k, &b.from_fund(&s.weight)))
        .collect::<Result<Vec<_>>>()?;
    let roots_ok = summands.iter().all(|s| {
        let mu = b.from_fund(&s.weight);
        match &s.root {
            None => mu == lam.finite,
            Some(r) => f.is_positive_root(r) && &lam.finite - r == mu,
        }
    });
    let claimed: BTreeSet<Vec<Scalar>> = summands.iter().map(|s| s.weight.to_vec()).collect();
    let excluded: Vec<([Scalar; 4], bool)> = b4_conformal_table()
        .into_iter()
        .filter(|(w, h)| *h == target && !claimed.contains(w.as_slice()))
        .map(|(w, _)| {
            let diff = &lam.finite - &b.from_fund(&w);
            let s = f.is_positive_root_sum(&diff);
            (w, s)
        })
        .collect();
    Ok(Bookkeeping {
        name,
        weight: lam.clone(),
        conformal_weight_ok: f_conformal_weight == target,
        summand_weights_ok: summand_conformal_weights.iter().all(|h| *h == target),
        roots_ok,
        exclusion_ok: excluded.len() == 4 && excluded.iter().all(|(_, s)| !s),
        summands,
        f_conformal_weight,
        summand_conformal_weights,
        excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(i)
    }

    #[test]
    fn factors_difference_of_squares() {
        let p = (&x(0) * &x(0)) - (&x(1) * &x(1));
        let f = factor_linear(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expanded, p);
    }

    #[test]
    fn rejects_irreducible_and_wrong_degree() {
        let p = (&x(0) * &x(0)) + SparsePoly::constant(int(1));
        assert!(matches!(factor_linear(&p), Err(Error::NotFactorable(_))));
        assert!(matches!(factor_linear(&x(2)), Err(Error::WrongDegree(1))));
    }

    #[test]
    fn factors_pure_cross_term() {
        let p = &(x(0) + SparsePoly::constant(int(3))) * &(x(1) - SparsePoly::constant(q(1, 2)));
        let f = factor_linear(&p).unwrap();
        assert_eq!(f.expanded, p);
        let roots: BTreeSet<String> = f.factors.iter().map(|l| l.to_string()).collect();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn single_factor_gives_hyperplanes() {
        let p = FactoredPolynomial::from_factors(
            int(1),
            vec![LinearForm::new([int(1), int(0), int(0), int(0)], int(0)), LinearForm::new([int(1), int(0), int(0), int(0)], int(-1))],
        );
        let r = solve_system(&[p]).unwrap();
        assert!(r.points.is_empty());
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0].directions.len(), 3);
        assert_eq!(r.components[0].point, Weight::zero());
        assert_eq!(r.components[1].point, Weight::ints([1, 0, 0, 0]));
    }

    #[test]
    fn dominant_f4_n1_is_trivial() {
        let f = RootSystem::build(Label::F4);
        assert_eq!(classify_dominant(&f, 1).unwrap(), vec![Weight::zero()]);
    }
}
