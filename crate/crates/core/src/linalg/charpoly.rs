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

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntMatrix, IntPolynomial, LinalgError};

/// Ring operations used by the Berkowitz recurrence. Fixed-width
/// implementations report overflow by returning `None`.
trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        i128::from(v)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `det(tI - M)` as an exact monic integer polynomial.
///
/// Uses the Berkowitz recurrence, which needs no division. The computation
/// runs in `i128` first and is repeated with big integers only if an
/// intermediate value overflows.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let desc = match berkowitz::<i128>(m) {
        Some(c) => c.into_iter().map(BigInt::from).collect::<Vec<_>>(),
        None => berkowitz::<BigInt>(m).expect("big integer arithmetic cannot overflow"),
    };
    // desc holds coefficients from t^n down to t^0
    Ok(IntPolynomial::new(desc.into_iter().rev().collect()))
}

fn berkowitz<T: Ring>(m: &IntMatrix) -> Option<Vec<T>> {
    let n = m.rows();
    let a = |i: usize, j: usize| T::from_i64(m.get(i, j));
    let mut poly: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Leading block S = M[0..r, 0..r], row R = M[r, 0..r], column C = M[0..r, r].
        // Column of the Toeplitz matrix: 1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C.
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(a(r, r).neg()?);
        let mut v: Vec<T> = (0..r).map(|i| a(i, r)).collect();
        for _ in 0..r {
            let mut dot = T::zero();
            for (j, vj) in v.iter().enumerate() {
                let rj = a(r, j);
                if rj.is_zero() || vj.is_zero() {
                    continue;
                }
                dot = dot.add(&rj.mul(vj)?)?;
            }
            toeplitz.push(dot.neg()?);
            let mut next = vec![T::zero(); r];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = T::zero();
                for (j, vj) in v.iter().enumerate() {
                    let sij = a(i, j);
                    if sij.is_zero() || vj.is_zero() {
                        continue;
                    }
                    acc = acc.add(&sij.mul(vj)?)?;
                }
                *slot = acc;
            }
            v = next;
        }
        // new[i] = sum_{j <= i} toeplitz[i - j] * poly[j], i in 0..=r+1
        let mut next = vec![T::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, pj) in poly.iter().enumerate().take(i + 1) {
                let t = &toeplitz[i - j];
                if t.is_zero() || pj.is_zero() {
                    continue;
                }
                acc = acc.add(&t.mul(pj)?)?;
            }
            *slot = acc;
        }
        poly = next;
    }
    Some(poly)
}

#[cfg(test)]
pub(crate) fn force_bigint(m: &IntMatrix) -> IntPolynomial {
    let desc = berkowitz::<BigInt>(m).unwrap();
    IntPolynomial::new(desc.into_iter().rev().collect())
}

#[cfg(test)]
mod tests {
    use super::{char_poly, force_bigint};
    use crate::linalg::{IntMatrix, IntPolynomial};
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    /// det by cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            if m[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][c] * cofactor_det(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn det_t_minus(m: &IntMatrix, t: i64) -> BigInt {
        let n = m.rows();
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(i64::from(i == j) * t - m.get(i, j)))
                    .collect()
            })
            .collect();
        cofactor_det(&rows)
    }

    #[test]
    fn one_by_one_zero() {
        let m = IntMatrix::zeros(1, 1);
        assert_eq!(char_poly(&m).unwrap(), IntPolynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(
            char_poly(&IntMatrix::zeros(0, 0)).unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn k2() {
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(char_poly(&m).unwrap(), IntPolynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn signed_complete_two_two() {
        // [[J - I, J], [J, I - J]] with two vertices per part
        let m = IntMatrix::from_rows(&[[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, -1], [1, 1, -1, 0]])
            .unwrap();
        // quotient [[1, 2], [2, -1]] gives t^2 - 5, so (t - 1)(t + 1)(t^2 - 5)
        assert_eq!(
            char_poly(&m).unwrap(),
            IntPolynomial::from_i64(&[5, 0, -6, 0, 1])
        );
    }

    #[test]
    fn rejects_non_square() {
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // all-ones 40x40 matrix: char poly t^39 (t - 40000); the i128 pass overflows
        let m = IntMatrix::from_fn(40, 40, |_, _| 1000);
        let p = char_poly(&m).unwrap();
        let mut expected = vec![0i64; 41];
        expected[40] = 1;
        expected[39] = -40_000;
        assert_eq!(p, IntPolynomial::from_i64(&expected));
        assert_eq!(force_bigint(&m), p);
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(
            n in 1usize..=6,
            entries in proptest::collection::vec(-3i64..=3, 36),
            t in -4i64..=4,
        ) {
            let m = IntMatrix::from_fn(n, n, |i, j| entries[i * 6 + j]);
            let p = char_poly(&m).unwrap();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), n);
            prop_assert_eq!(p.eval_i64(t), det_t_minus(&m, t));
        }
    }
}
