//! The isomorphisms `π′, π″` from `g_B` onto the other two B4 subalgebras and
//! the decomposition of `g_F` under the adjoint action of `g_B`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{Kind, LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::exact::{nullspace, ExactMatrix, Scalar, SparseEchelon};
use crate::rootsys::{coroot_vector, Label, RootSystem, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    Prime,
    DoublePrime,
}

impl Variant {
    pub fn label(self) -> Label {
        match self {
            Variant::Prime => Label::B4Prime,
            Variant::DoublePrime => Label::B4DoublePrime,
        }
    }
}

/// A Lie algebra isomorphism `g_B → g_B′` (or `g_B″`) determined by
/// `e_{β_i} ↦ e_{β_i′}`, `f_{β_i} ↦ f_{β_i′}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    variant: Variant,
    source: RootSystem,
    target_simple: [Weight; 4],
    images: HashMap<usize, LieElement>,
}

fn coefficient(g: &LieAlgebra, x: &LieElement, i: usize) -> Result<Scalar> {
    let c = x.coeff(i);
    if c.is_zero() || x.terms().len() != 1 {
        return Err(Error::Internal(format!("expected a multiple of {}", g.name(i))));
    }
    Ok(c)
}

impl Embedding {
    pub fn build(g: &LieAlgebra, variant: Variant) -> Result<Self> {
        let source = RootSystem::build(Label::B4);
        let target_simple = variant.label().simple_roots();
        let mut images = HashMap::new();
        for (i, (b, t)) in source.simple_roots().iter().zip(target_simple.iter()).enumerate() {
            images.insert(g.e(b)?, LieElement::basis(g.e(t)?));
            images.insert(g.f(b)?, LieElement::basis(g.f(t)?));
            images.insert(g.h(i + 1), g.cartan(&coroot_vector(t)));
        }
        for a in source.positive_roots() {
            if images.contains_key(&g.e(a)?) {
                continue;
            }
            let (b, rest) = source
                .simple_roots()
                .iter()
                .find_map(|b| {
                    let r = a - b;
                    source.is_positive_root(&r).then(|| (b.clone(), r))
                })
                .ok_or_else(|| Error::Internal(format!("no simple decomposition of {a}")))?;
            for kind in [Kind::E, Kind::F] {
                let idx = |r: &Weight| if kind == Kind::E { g.e(r) } else { g.f(r) };
                let (xb, xr, xa) = (idx(&b)?, idx(&rest)?, idx(a)?);
                let br = g.bracket(&LieElement::basis(xb), &LieElement::basis(xr));
                let n = coefficient(g, &br, xa)?;
                let img = g.bracket(&images[&xb], &images[&xr]).scale(&(Scalar::from_integer(1.into()) / n));
                images.insert(xa, img);
            }
        }
        Ok(Self { variant, source, target_simple, images })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The root map `π(Σ c_i β_i) = Σ c_i β_i′`.
    pub fn map_root(&self, a: &Weight) -> Weight {
        let c = self.source.simple_coords(a);
        c.iter().zip(self.target_simple.iter()).fold(Weight::zero(), |acc, (ci, t)| &acc + &t.scale(ci))
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (i, c) in x.terms() {
            let img = self
                .images
                .get(i)
                .ok_or_else(|| Error::Unsupported(format!("basis index {i} is outside g_B")))?;
            out.add_scaled(c, img);
        }
        Ok(out)
    }

    /// Source basis indices (the basis of `g_B`), sorted.
    pub fn domain(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.images.keys().copied().collect();
        d.sort_unstable();
        d
    }

    /// Basis pairs of `g_B` on which `π([x, y]) ≠ [π(x), π(y)]`.
    pub fn homomorphism_failures(&self, g: &LieAlgebra) -> Vec<(usize, usize)> {
        let dom = self.domain();
        let mut bad = Vec::new();
        for &i in &dom {
            for &j in &dom {
                let lhs = self
                    .apply(&LieElement::from_terms(g.bracket_basis(i, j).iter().cloned()))
                    .expect("g_B is closed under the bracket");
                let rhs = g.bracket(&self.images[&i], &self.images[&j]);
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Positive roots `α` of `Δ_B` where `π(e_α) ≠ e_{π(α)}` or `π(f_α) ≠ f_{π(α)}`.
    pub fn root_vector_mismatches(&self, g: &LieAlgebra) -> Vec<Weight> {
        self.source
            .positive_roots()
            .iter()
            .filter(|a| {
                let t = self.map_root(a);
                let ok = |src: Result<usize>, dst: Result<usize>| match (src, dst) {
                    (Ok(s), Ok(d)) => self.images[&s] == LieElement::basis(d),
                    _ => false,
                };
                !(ok(g.e(a), g.e(&t)) && ok(g.f(a), g.f(&t)))
            })
            .cloned()
            .collect()
    }

    /// Dimension of the image, computed by row reduction.
    pub fn image_rank(&self) -> usize {
        let mut ech = SparseEchelon::new();
        for i in self.domain() {
            ech.insert(self.images[&i].terms());
        }
        ech.rank()
    }
}

/// One irreducible `g_B`-summand of `g_F` under the adjoint action.
#[derive(Clone, Debug)]
pub struct Summand {
    pub highest_weight: Weight,
    pub dim: usize,
    pub vector: LieElement,
}

/// Span of the closure of `seeds` under `ad x` for every `x` in `generators`.
pub fn ad_closure(g: &LieAlgebra, seeds: &[LieElement], generators: &[usize]) -> SparseEchelon<usize> {
    let mut ech = SparseEchelon::new();
    let mut queue: Vec<LieElement> = Vec::new();
    for s in seeds {
        if ech.insert(s.terms()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for &x in generators {
            let w = g.bracket(&LieElement::basis(x), &v);
            if !w.is_zero() && ech.insert(w.terms()) {
                queue.push(w);
            }
        }
    }
    ech
}

/// Vectors of `g_F` killed by every `ad e_{β_i}` and the dimension of the
/// `g_B`-submodule each one generates, ordered by decreasing dimension.
pub fn branch_gf_over_gb(g: &LieAlgebra) -> Vec<Summand> {
    let b = RootSystem::build(Label::B4);
    let raising: Vec<usize> = b.simple_roots().iter().map(|r| g.e(r).unwrap()).collect();
    let lowering: Vec<usize> = b.simple_roots().iter().map(|r| g.f(r).unwrap()).collect();
    let generators: Vec<usize> = raising.iter().chain(lowering.iter()).copied().collect();

    let mut spaces: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..g.dim() {
        spaces.entry(g.weight(i).clone()).or_default().push(i);
    }
    let mut out = Vec::new();
    for (mu, idx) in spaces {
        let mut rows: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (col, &i) in idx.iter().enumerate() {
            for (r, &e) in raising.iter().enumerate() {
                for (k, c) in g.bracket_basis(e, i) {
                    rows.entry((r, *k)).or_insert_with(|| vec![Scalar::zero(); idx.len()])[col] = c.clone();
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..idx.len())
                .map(|c| (0..idx.len()).map(|r| Scalar::from_integer((r == c).into())).collect())
                .collect()
        } else {
            nullspace(&ExactMatrix::from_rows(rows.into_values().collect()).expect("rectangular"))
        };
        for v in kernel {
            let vector = LieElement::from_terms(idx.iter().copied().zip(v));
            let dim = ad_closure(g, std::slice::from_ref(&vector), &generators).rank();
            out.push(Summand { highest_weight: mu.clone(), dim, vector });
        }
    }
    out.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.highest_weight.cmp(&b.highest_weight)));
    out
}
