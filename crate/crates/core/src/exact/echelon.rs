use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Incrementally built, fully reduced echelon basis of sparse vectors whose
/// coordinates are indexed by an ordered key (monomials, basis labels, ...).
///
/// Every stored row has coefficient 1 at its pivot key and no other row
/// mentions that key.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<BTreeMap<K, Scalar>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        Self { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

pub(crate) fn axpy<K: Ord + Clone>(y: &mut BTreeMap<K, Scalar>, a: &Scalar, x: &BTreeMap<K, Scalar>) {
    if a.is_zero() {
        return;
    }
    for (k, c) in x {
        let d = a * c;
        match y.get_mut(k) {
            Some(v) => {
                *v += d;
                if v.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(k.clone(), d);
            }
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[BTreeMap<K, Scalar>] {
        &self.rows
    }

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        let mut out = v.clone();
        for (r, c) in hits {
            axpy(&mut out, &-c, &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &BTreeMap<K, Scalar>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `false` when `v` was already in it.
    pub fn insert(&mut self, v: &BTreeMap<K, Scalar>) -> bool {
        let mut r = self.reduce(v);
        let Some((pk, pc)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !pc.is_one() {
            let inv = pc.recip();
            for c in r.values_mut() {
                *c *= &inv;
            }
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&pk).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.pivots.insert(pk, self.rows.len());
        self.rows.push(r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn v(entries: &[(u32, i64)]) -> BTreeMap<u32, Scalar> {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn insert_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(&v(&[(0, 2), (1, 4)])));
        assert!(e.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 1), (2, -2)])));
        assert!(!e.contains(&v(&[(2, 1)])));
        assert!(e.contains(&BTreeMap::new()));
    }
}
