//! Affine weights, real coroots and the Kac–Wakimoto admissibility test.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, ExactMatrix, Scalar};
use crate::rootsys::{coroot_vector, RootSystem, Weight};

/// `h∨ = 1 + ⟨ρ̄, θ∨⟩`.
pub fn dual_coxeter(rs: &RootSystem) -> i64 {
    let v = int(1) + rs.rho_bar().pair_coroot(rs.highest_root());
    v.to_integer().to_i64().expect("small dual Coxeter number")
}

/// `c = k · dim g / (k + h∨)`.
pub fn central_charge(rs: &RootSystem, k: &Scalar) -> Result<Scalar> {
    let shifted = k + int(dual_coxeter(rs));
    if shifted.is_zero() {
        return Err(Error::CriticalLevel);
    }
    Ok(k * int(rs.dim() as i64) / shifted)
}

/// `(μ, μ + 2ρ̄) / (2(k + h∨))`.
pub fn lowest_conformal_weight(rs: &RootSystem, k: &Scalar, mu: &Weight) -> Result<Scalar> {
    let shifted = k + int(dual_coxeter(rs));
    if shifted.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let two_rho = rs.rho_bar().scale(&int(2));
    Ok(mu.dot(&(mu + &two_rho)) / (int(2) * shifted))
}

/// `level·Λ_0 + finite + delta·δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineWeight {
    pub level: Scalar,
    pub finite: Weight,
    pub delta: Scalar,
}

impl AffineWeight {
    pub fn new(level: Scalar, finite: Weight, delta: Scalar) -> Self {
        Self { level, finite, delta }
    }

    /// `level·Λ_0 + finite`.
    pub fn at_level(level: Scalar, finite: Weight) -> Self {
        Self { level, finite, delta: Scalar::zero() }
    }

    /// `λ_n = (n − 7/2) Λ_0`.
    pub fn lambda_n(n: i64) -> Self {
        Self::at_level(int(n) - Scalar::new(7.into(), 2.into()), Weight::zero())
    }

    /// `ρ = ρ̄ + h∨ Λ_0`.
    pub fn rho(rs: &RootSystem) -> Self {
        Self::at_level(int(dual_coxeter(rs)), rs.rho_bar())
    }

    pub fn add(&self, other: &AffineWeight) -> AffineWeight {
        AffineWeight {
            level: &self.level + &other.level,
            finite: &self.finite + &other.finite,
            delta: &self.delta + &other.delta,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": format_scalar(&self.level),
            "finite": self.finite.to_json(),
            "delta": format_scalar(&self.delta),
        })
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Λ0 + {} + {}δ", format_scalar(&self.level), self.finite, format_scalar(&self.delta))
    }
}

/// The coroot `(α + nδ)∨` of a real affine root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RealCoroot {
    pub root: Weight,
    pub layer: i64,
}

impl RealCoroot {
    pub fn new(root: Weight, layer: i64) -> Self {
        Self { root, layer }
    }

    pub fn finite(root: Weight) -> Self {
        Self { root, layer: 0 }
    }

    /// `α_0∨ = (δ − θ)∨`.
    pub fn alpha0(rs: &RootSystem) -> Self {
        Self { root: -rs.highest_root(), layer: 1 }
    }

    pub fn is_positive(&self, rs: &RootSystem) -> bool {
        self.layer > 0 || (self.layer == 0 && rs.is_positive_root(&self.root))
    }

    /// Coefficient of the canonical central element in `(α + nδ)∨`.
    pub fn central_coeff(&self) -> Scalar {
        int(self.layer) * int(2) / self.root.norm2()
    }

    /// Integer coordinates `(α∨, K-coefficient)`; all coroots of B4 and F4
    /// have integral ε-coordinates.
    fn key(&self) -> ([i64; 4], i64) {
        let c = coroot_vector(&self.root);
        let v = c.0.clone().map(|x| x.to_integer().to_i64().expect("integral coroot"));
        (v, self.central_coeff().to_integer().to_i64().expect("integral central part"))
    }

    pub fn to_json(&self) -> Value {
        json!({ "root": self.root.to_json()["eps"], "layer": self.layer })
    }
}

impl fmt::Display for RealCoroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            0 => write!(f, "({})∨", self.root),
            n => write!(f, "({} + {n}δ)∨", self.root),
        }
    }
}

/// `⟨λ, (α + nδ)∨⟩ = ⟨λ̄, α∨⟩ + n·(2/(α,α))·level`.
pub fn pair(lam: &AffineWeight, c: &RealCoroot) -> Scalar {
    lam.finite.pair_coroot(&c.root) + c.central_coeff() * &lam.level
}

/// `r_α.λ = λ − ⟨λ + ρ, α∨⟩ α` for the real root `α + nδ`.
pub fn shifted_reflect(rs: &RootSystem, c: &RealCoroot, lam: &AffineWeight) -> AffineWeight {
    let p = pair(&lam.add(&AffineWeight::rho(rs)), c);
    AffineWeight {
        level: lam.level.clone(),
        finite: &lam.finite - &c.root.scale(&p),
        delta: &lam.delta - &(&p * int(c.layer)),
    }
}

#[derive(Clone, Debug)]
pub struct Admissibility {
    pub admissible: bool,
    /// No positive real coroot pairs with `λ + ρ` to a non-positive integer.
    pub regular_dominant: bool,
    /// Rank of the integral coroots (5 is full).
    pub integral_rank: usize,
    /// Simple coroots of the integral coroot system, sorted.
    pub simple_coroots: Vec<RealCoroot>,
}

/// Kac–Wakimoto admissibility of `lam` for the affine algebra of `rs`.
pub fn is_admissible(lam: &AffineWeight, rs: &RootSystem) -> Result<Admissibility> {
    let shifted = lam.add(&AffineWeight::rho(rs));
    if !shifted.level.is_positive() {
        return Err(Error::NonPositiveShiftedLevel);
    }
    let h = dual_coxeter(rs);
    let mut regular = true;
    let mut integral: Vec<RealCoroot> = Vec::new();
    let mut period_max = 1i64;
    let mut per_root = Vec::new();
    for a in rs.roots() {
        let c0 = shifted.finite.pair_coroot(a);
        let s = int(2) * &shifted.level / a.norm2();
        let first = if rs.is_positive_root(a) { 0 } else { 1 };
        let mut n = first;
        loop {
            let v = &c0 + &s * int(n);
            if v.is_positive() {
                break;
            }
            if v.is_integer() {
                regular = false;
            }
            n += 1;
        }
        let period = s.denom().to_i64().expect("small denominator");
        period_max = period_max.max(period);
        per_root.push((a.clone(), c0, s, first));
    }
    let bound = 2 * period_max * h;
    for (a, c0, s, first) in per_root {
        for n in first..=bound {
            if (&c0 + &s * int(n)).is_integer() {
                integral.push(RealCoroot::new(a.clone(), n));
            }
        }
    }
    let all_keys: Vec<([i64; 4], i64)> = integral.iter().map(RealCoroot::key).collect();
    let keys: HashSet<([i64; 4], i64)> = all_keys.iter().copied().collect();
    let mut simple: BTreeSet<RealCoroot> = BTreeSet::new();
    for (c, &(v, k)) in integral.iter().zip(&all_keys) {
        let decomposable = all_keys.iter().any(|&(w, l)| {
            let rest: ([i64; 4], i64) = (std::array::from_fn(|i| v[i] - w[i]), k - l);
            rest != (v, k) && keys.contains(&rest)
        });
        if !decomposable {
            simple.insert(c.clone());
        }
    }
    let rows: Vec<Vec<Scalar>> = all_keys
        .iter()
        .map(|(v, k)| v.iter().map(|x| int(*x)).chain(std::iter::once(int(*k))).collect())
        .collect();
    let integral_rank = if rows.is_empty() { 0 } else { ExactMatrix::from_rows(rows)?.rank() };
    Ok(Admissibility {
        admissible: regular && integral_rank == 5,
        regular_dominant: regular,
        integral_rank,
        simple_coroots: simple.into_iter().collect(),
    })
}
