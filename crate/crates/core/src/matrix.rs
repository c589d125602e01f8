//! Dense matrices over a generic exact field, with deterministic
//! elimination (first nonzero pivot in column order) so that every basis
//! produced downstream is reproducible.

use crate::error::Error;
use crate::intmat;
use crate::scalar::{Field, Fp};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc = acc + e.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Concatenate `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    /// Pivot choice is the first row with a nonzero entry in column order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut sel = None;
            for i in r..self.rows {
                if !self.get(i, c).is_zero() {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            self.data.swap_chunks(i, r, self.cols);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank by plain elimination. For large integer-entried rational
    /// matrices prefer [`rank_q_fraction_free`].
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : Mx = 0}, deterministic: one vector per
    /// free column, with unit coordinate at the free column.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![K::zero(); self.cols];
            vec[free] = K::one();
            for (j, slot) in pivot_set.iter().enumerate() {
                if let Some(r) = slot {
                    vec[j] = -m.get(*r, free).clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Row space basis (nonzero rows of the RREF).
    pub fn row_space_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, w: usize);
}

impl<T> SwapChunks for Vec<T> {
    fn swap_chunks(&mut self, a: usize, b: usize, w: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (left, right) = self.split_at_mut(hi * w);
        left[lo * w..(lo + 1) * w].swap_with_slice(&mut right[..w]);
    }
}

/// Rank of a rational matrix via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix, so intermediate growth is controlled.
pub fn rank_q_fraction_free(m: &Matrix<BigRational>) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols {
                let d = m.get(i, j).denom();
                lcm = num_integer::lcm(lcm, d.clone());
            }
            (0..m.cols)
                .map(|j| {
                    let e = m.get(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();
    intmat::IntMat::from_rows(rows, m.cols).rank()
}

/// Runtime-tagged exact matrix: the ring is part of the value, and the
/// field-only operations reject integer matrices.
#[derive(Clone, Debug)]
pub enum ExactMatrix {
    Q(Matrix<BigRational>),
    Fp(Matrix<Fp>),
    Z(intmat::IntMat),
}

impl ExactMatrix {
    pub fn rows(&self) -> usize {
        match self {
            ExactMatrix::Q(m) => m.rows,
            ExactMatrix::Fp(m) => m.rows,
            ExactMatrix::Z(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            ExactMatrix::Q(m) => m.cols,
            ExactMatrix::Fp(m) => m.cols,
            ExactMatrix::Z(m) => m.cols(),
        }
    }

    /// Rank over ℚ or 𝔽ₚ. Integer matrices are rejected: their rank is read
    /// off `smith_normal_form` instead.
    pub fn rank_of(&self) -> Result<usize, Error> {
        match self {
            ExactMatrix::Q(m) => Ok(rank_q_fraction_free(m)),
            ExactMatrix::Fp(m) => Ok(m.rank()),
            ExactMatrix::Z(_) => Err(Error::RingIsInt),
        }
    }

    pub fn kernel_basis_q(&self) -> Result<Vec<Vec<BigRational>>, Error> {
        match self {
            ExactMatrix::Q(m) => Ok(m.kernel_basis()),
            _ => Err(Error::WrongRing("expected a matrix over Q".into())),
        }
    }

    pub fn smith_normal_form(&self) -> Result<Vec<BigInt>, Error> {
        match self {
            ExactMatrix::Z(m) => Ok(m.smith_normal_form()),
            _ => Err(Error::WrongRing("Smith normal form needs integer entries".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_traits::Zero;

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix<BigRational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Matrix::<BigRational>::identity(3).rank(), 3);
        assert_eq!(rank_q_fraction_free(&Matrix::identity(3)), 3);
    }

    #[test]
    fn rank_zero_f2() {
        let m: Matrix<Fp> = Matrix::from_rows(
            (0..4)
                .map(|_| (0..7).map(|_| Fp::new(0, 2)).collect())
                .collect(),
        );
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(rank_q_fraction_free(&m), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Matrix::<BigRational>::identity(4);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_zero_2x3() {
        let m = qmat(vec![vec![0, 0, 0], vec![0, 0, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn kernel_sum_zero() {
        let m = qmat(vec![vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigRational = v.iter().cloned().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn exact_matrix_rejects_int_rank() {
        let z = ExactMatrix::Z(intmat::IntMat::from_i64_rows(vec![vec![1, 0], vec![0, 1]], 2));
        assert!(matches!(z.rank_of(), Err(Error::RingIsInt)));
    }

    #[test]
    fn rank_plus_nullity() {
        let m = qmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols);
    }
}
