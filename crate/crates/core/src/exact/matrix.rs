use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use crate::error::{Error, Result};

/// Dense matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &m[(r, j)];
                    m[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form; pivots are 1 and the row space is preserved.
pub fn rref(m: &ExactMatrix) -> ExactMatrix {
    m.rref_with_pivots().0
}

/// Whether `v` is a rational linear combination of `basis`.
pub fn span_contains(basis: &[Vec<Scalar>], v: &[Scalar]) -> Result<bool> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: v.len(), got: b.len() });
        }
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if basis.is_empty() {
        return Ok(false);
    }
    let a = ExactMatrix::from_rows(basis.to_vec())?;
    let rank = a.rank();
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    Ok(ExactMatrix::from_rows(rows)?.rank() == rank)
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = m.rref_with_pivots();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![Scalar::zero(); m.cols()];
            x[fc] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -r[(row, fc)].clone();
            }
            x
        })
        .collect()
}

/// A particular solution together with a nullspace basis.
pub type Solution = (Vec<Scalar>, Vec<Vec<Scalar>>);

/// Solves `a x = b`. Returns a particular solution and a nullspace basis, or
/// `None` if the system is inconsistent.
pub fn solve(a: &ExactMatrix, b: &[Scalar]) -> Result<Option<Solution>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: b.len() });
    }
    let mut aug = ExactMatrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols())] = b[i].clone();
    }
    let (r, pivots) = aug.rref_with_pivots();
    if pivots.last() == Some(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, a.cols())].clone();
    }
    Ok(Some((x, nullspace(a))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, q};

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rref_identity_and_rank_one() {
        assert_eq!(rref(&ExactMatrix::identity(2)), ExactMatrix::identity(2));
        assert_eq!(rref(&mat(&[&[2, 4], &[1, 2]])), mat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn span_membership_basics() {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        assert!(span_contains(std::slice::from_ref(&e1), &[int(3), int(0)]).unwrap());
        assert!(!span_contains(std::slice::from_ref(&e1), &e2).unwrap());
        assert!(span_contains(&[], &[int(0), int(0)]).unwrap());
        assert_eq!(
            span_contains(&[e1], &[int(1)]),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn solve_and_nullspace() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let (x, ns) = solve(&a, &[int(1), int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![int(-1), int(2), int(0)]);
        assert_eq!(ns, vec![vec![int(1), int(-1), int(1)]]);
        let inconsistent = mat(&[&[1, 0], &[1, 0]]);
        assert!(solve(&inconsistent, &[int(0), q(1, 2)]).unwrap().is_none());
    }
}
