use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Clone> DenseMatrix<T> {
    pub fn filled(order: usize, value: T) -> Self {
        DenseMatrix {
            order,
            data: vec![value; order * order],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    cols: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(DenseMatrix { order, data })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        DenseMatrix { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.order.max(1)).take(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            order: self.order,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    /// The principal submatrix on the given (ordered) index set.
    pub fn principal(&self, keep: &[usize]) -> Self {
        DenseMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// `M({removed}|{removed})`: delete the listed rows and the same columns.
    pub fn delete(&self, removed: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.order).filter(|i| !removed.contains(i)).collect();
        self.principal(&keep)
    }

    /// Reorder rows and columns: entry `(i, j)` of the result is `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.principal(perm)
    }
}

impl<T: Clone + PartialEq> DenseMatrix<T> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Clone + Zero + One> DenseMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        DenseMatrix::filled(order, T::zero())
    }

    pub fn identity(order: usize) -> Self {
        DenseMatrix::from_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if rhs.order != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                got: rhs.order,
            });
        }
        let n = self.order;
        let mut out: DenseMatrix<T> = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }
}

impl DenseMatrix<f64> {
    /// Largest `|m_ij - m_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.order {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.order + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        let err = DenseMatrix::from_rows(vec![vec![1, 2], vec![3]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { .. }));
    }

    #[test]
    fn delete_drops_row_and_column() {
        let m = DenseMatrix::from_fn(3, |i, j| (10 * i + j) as i64);
        let d = m.delete(&[1]);
        assert_eq!(d.to_rows(), vec![vec![0, 2], vec![20, 22]]);
    }

    #[test]
    fn empty_matrix_has_no_rows() {
        let m: DenseMatrix<i64> = DenseMatrix::zeros(0);
        assert_eq!(m.rows().count(), 0);
    }
}
