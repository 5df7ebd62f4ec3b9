// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LinalgError;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinalgError::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `self + c * I`.
    pub fn shifted(&self, c: i64) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i * self.cols + i] += c;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| {
            BigRational::from_integer(BigInt::from(self.get(i, j)))
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix::from_fn(rows, cols, |_, _| BigRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RationalMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..self.cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl From<&IntMatrix> for RationalMatrix {
    fn from(m: &IntMatrix) -> Self {
        m.to_rational()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]).unwrap();
        assert_eq!(m.to_rational().rank(), 2);
        assert_eq!(IntMatrix::zeros(3, 4).to_rational().rank(), 0);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn product_and_shift() {
        let a = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        let a2 = a.mul(&a).unwrap();
        assert_eq!(a2, IntMatrix::identity(2));
        assert_eq!(a2.shifted(-1), IntMatrix::zeros(2, 2));
        assert!(a.mul(&IntMatrix::zeros(3, 3)).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }
}
