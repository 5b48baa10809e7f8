use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::echelon::axpy;
use super::scalar::{format_scalar, Scalar};

/// Exponent vector of a monomial in `x1..x4`, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Exponents(pub [u32; 4]);

impl Exponents {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self(e)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Self(e)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the four ε-coordinates `x1..x4` of a weight.
///
/// No zero coefficients are stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Exponents, Scalar>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Exponents::default(), c)
    }

    pub fn monomial(e: Exponents, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Exponents::var(i), Scalar::one())
    }

    /// `Σ coeffs[i] x_i + constant`.
    pub fn linear(coeffs: &[Scalar; 4], constant: Scalar) -> Self {
        let mut p = Self::constant(constant);
        for (i, c) in coeffs.iter().enumerate() {
            p = p + Self::monomial(Exponents::var(i), c.clone());
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    pub fn coeff(&self, e: &Exponents) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Exponents, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Rescaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn evaluate(&self, x: &[Scalar; 4]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e.0.iter()) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        axpy(&mut self.terms, &Scalar::one(), &rhs.terms);
        self
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        axpy(&mut self.terms, &-Scalar::one(), &rhs.terms);
        self
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let row: BTreeMap<Exponents, Scalar> =
                rhs.terms.iter().map(|(eb, cb)| (ea.mul(eb), cb.clone())).collect();
            axpy(&mut terms, ca, &row);
        }
        SparsePoly { terms }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_scalar(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_scalar(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, q};

    #[test]
    fn grlex_order() {
        let x1 = Exponents([1, 0, 0, 0]);
        let x2sq = Exponents([0, 2, 0, 0]);
        let x1x2 = Exponents([1, 1, 0, 0]);
        assert!(x1 < x2sq);
        assert!(x2sq < x1x2);
    }

    #[test]
    fn evaluate_difference_on_diagonal() {
        let p = SparsePoly::var(0) - SparsePoly::var(1);
        assert_eq!(p.evaluate(&[int(1), int(1), int(0), int(0)]), int(0));
        assert_eq!(p.to_string(), "x1 - x2");
    }

    #[test]
    fn product_and_monic() {
        let a = SparsePoly::var(0) + SparsePoly::constant(q(5, 2));
        let b = SparsePoly::var(0).scale(&int(2));
        let p = &a * &b;
        assert_eq!(p.to_string(), "2*x1^2 + 5*x1");
        assert_eq!(p.monic().to_string(), "x1^2 + 5/2*x1");
        assert_eq!(p.total_degree(), Some(2));
    }
}
