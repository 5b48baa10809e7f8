//! Structure constants of a Chevalley basis from the root system alone.
//!
//! Signs are fixed by declaring `N_{α,β} = +(p+1)` on every extraspecial
//! pair; all other constants follow from the standard identities between
//! the `N_{α,β}`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::{int, Scalar};
use crate::rootsys::{RootSystem, Weight};

pub(crate) struct Chevalley<'a> {
    rs: &'a RootSystem,
    rank: HashMap<Weight, usize>,
    memo: HashMap<(Weight, Weight), Scalar>,
}

impl<'a> Chevalley<'a> {
    pub(crate) fn new(rs: &'a RootSystem) -> Self {
        let rank = rs.positive_roots().iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Self { rs, rank, memo: HashMap::new() }
    }

    fn positive(&self, a: &Weight) -> bool {
        self.rank.contains_key(a)
    }

    /// Largest `p` with `b − p a` a root.
    fn p_string(&self, a: &Weight, b: &Weight) -> i64 {
        let mut p = 0;
        let mut x = b - a;
        while self.rs.is_root(&x) {
            p += 1;
            x = &x - a;
        }
        p
    }

    fn extraspecial(&self, xi: &Weight) -> (Weight, Weight) {
        let a = self
            .rs
            .positive_roots()
            .iter()
            .find(|a| self.positive(&(xi - *a)))
            .expect("non-simple positive root");
        (a.clone(), xi - a)
    }

    /// `N_{a,b}`, zero when `a + b` is not a root.
    pub(crate) fn n(&mut self, a: &Weight, b: &Weight) -> Scalar {
        let s = a + b;
        if !self.rs.is_root(&s) {
            return Scalar::zero();
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = match (self.positive(a), self.positive(b)) {
            (true, true) => {
                if self.rank[a] > self.rank[b] {
                    -self.n(b, a)
                } else {
                    self.special(a, b)
                }
            }
            (false, false) => -self.n(&-a, &-b),
            (true, false) => {
                if self.positive(&s) {
                    -(s.norm2() / a.norm2()) * self.n(&-b, &s)
                } else {
                    (s.norm2() / b.norm2()) * self.n(&-&s, a)
                }
            }
            (false, true) => -self.n(b, a),
        };
        self.memo.insert(key, v.clone());
        v
    }

    fn special(&mut self, a: &Weight, b: &Weight) -> Scalar {
        let xi = a + b;
        let (a1, b1) = self.extraspecial(&xi);
        let n1 = int(self.p_string(&a1, &b1) + 1);
        if *a == a1 {
            return n1;
        }
        let mut total = Scalar::zero();
        let d = b - &a1;
        if self.rs.is_root(&d) {
            total += self.n(b, &-&a1) * self.n(a, &-&b1) / d.norm2();
        }
        let d = a - &a1;
        if self.rs.is_root(&d) {
            total += self.n(&-&a1, a) * self.n(b, &-&b1) / d.norm2();
        }
        xi.norm2() / n1 * total
    }
}
