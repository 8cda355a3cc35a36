//! Square matrices and echelonized subspaces over an exact [`Field`].
//!
//! Operators act on column vectors from the left; `E_ij` has its single 1
//! in row `i`, column `j`.

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    n: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: E) {
        self.data[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[E]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.data.iter()
    }
}

pub fn zero_matrix<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, |_, _| f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, |i, j| if i == j { f.one() } else { f.zero() })
}

/// `E_ij` (zero-based indices).
pub fn elementary<F: Field>(f: &F, n: usize, i: usize, j: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, |a, b| if (a, b) == (i, j) { f.one() } else { f.zero() })
}

pub fn diagonal<F: Field>(f: &F, d: &[F::Elem]) -> Matrix<F::Elem> {
    Matrix::from_fn(d.len(), |i, j| if i == j { d[i].clone() } else { f.zero() })
}

pub fn matmul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = a.size();
    Matrix::from_fn(n, |i, j| {
        (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(a.get(i, k), b.get(k, j))))
    })
}

pub fn matsub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix::from_fn(a.size(), |i, j| f.sub(a.get(i, j), b.get(i, j)))
}

/// `[a, b] = ab - ba`.
pub fn commutator<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    matsub(f, &matmul(f, a, b), &matmul(f, b, a))
}

pub fn trace<F: Field>(f: &F, a: &Matrix<F::Elem>) -> F::Elem {
    (0..a.size()).fold(f.zero(), |acc, i| f.add(&acc, a.get(i, i)))
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.entries().all(|x| f.is_zero(x))
}

pub fn apply<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.size();
    (0..n)
        .map(|i| (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(a.get(i, k), &v[k]))))
        .collect()
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.size();
    let mut aug: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut row: Vec<_> = (0..n).map(|j| a.get(i, j).clone()).collect();
            row.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !f.is_zero(&aug[r][col]))?;
        aug.swap(col, pivot);
        let inv = f.inv(&aug[col][col])?;
        for x in aug[col].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for r in 0..n {
            if r != col && !f.is_zero(&aug[r][col]) {
                let factor = aug[r][col].clone();
                for c in 0..2 * n {
                    let t = f.mul(&factor, &aug[col][c]);
                    aug[r][c] = f.sub(&aug[r][c], &t);
                }
            }
        }
    }
    Some(Matrix::from_fn(n, |i, j| aug[i][n + j].clone()))
}

/// Subspace of `F^n` stored as a reduced row-echelon basis, so two equal
/// subspaces always have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> Subspace<E> {
    /// Span of `vectors`, echelonized.
    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: impl IntoIterator<Item = Vec<E>>) -> Self {
        let mut rows: Vec<Vec<E>> = vectors.into_iter().collect();
        assert!(rows.iter().all(|r| r.len() == ambient), "vector length differs from ambient dimension");
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ambient {
            let Some(p) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = f.inv(&rows[rank][col]).expect("nonzero pivot is invertible");
            for x in rows[rank].iter_mut() {
                *x = f.mul(x, &inv);
            }
            for r in 0..rows.len() {
                if r != rank && !f.is_zero(&rows[r][col]) {
                    let factor = rows[r][col].clone();
                    for c in col..ambient {
                        let t = f.mul(&factor, &rows[rank][c]);
                        rows[r][c] = f.sub(&rows[r][c], &t);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Self { ambient, basis: rows, pivots }
    }

    /// Builds from a basis already in reduced row-echelon form.
    pub(crate) fn from_rref(ambient: usize, basis: Vec<Vec<E>>, pivots: Vec<usize>) -> Self {
        Self { ambient, basis, pivots }
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let factor = w[p].clone();
                for c in 0..self.ambient {
                    let t = f.mul(&factor, &row[c]);
                    w[c] = f.sub(&w[c], &t);
                }
            }
        }
        w.iter().all(|x| f.is_zero(x))
    }

    pub fn is_invariant_under<F: Field<Elem = E>>(&self, f: &F, a: &Matrix<E>) -> bool {
        self.basis.iter().all(|b| self.contains(f, &apply(f, a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn span_and_membership() {
        let f = Rationals;
        let s = Subspace::span(&f, 3, vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        assert!(s.contains(&f, &[q(1), q(3), q(4)]));
        assert!(!s.contains(&f, &[q(0), q(0), q(1)]));
    }

    #[test]
    fn span_is_canonical() {
        let f = PrimeField::new(5).unwrap();
        let a = Subspace::span(&f, 3, vec![vec![1, 2, 0], vec![0, 1, 3]]);
        let b = Subspace::span(&f, 3, vec![vec![1, 3, 3], vec![2, 4, 0]]);
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_and_products() {
        let f = Rationals;
        let a = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]]).unwrap();
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(matmul(&f, &a, &inv), identity(&f, 2));
        let singular = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(inverse(&f, &singular).is_none());
    }

    #[test]
    fn elementary_convention() {
        let f = Rationals;
        let e12 = elementary(&f, 2, 0, 1);
        // E_12 e_2 = e_1
        assert_eq!(apply(&f, &e12, &[q(0), q(1)]), vec![q(1), q(0)]);
        let c = commutator(&f, &e12, &elementary(&f, 2, 1, 0));
        assert_eq!(c, diagonal(&f, &[q(1), q(-1)]));
    }
}
