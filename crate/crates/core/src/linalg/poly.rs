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
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// `t - root`.
    pub fn linear(root: i64) -> Self {
        IntPolynomial::from_i64(&[-root, 1])
    }

    /// Monic quadratic `t^2 - sum t + product`.
    pub fn quadratic(sum: i64, product: i64) -> Self {
        IntPolynomial::from_i64(&[product, -sum, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, k: usize) -> IntPolynomial {
        (0..k).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Scales to a monic polynomial if the leading coefficient is `±1`.
    pub fn to_monic_sign(&self) -> IntPolynomial {
        if self.leading().is_negative() {
            IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
        } else {
            self.clone()
        }
    }

    /// Division by `t - root`, returning quotient and remainder.
    pub fn div_linear(&self, root: i64) -> (IntPolynomial, BigInt) {
        if self.is_zero() {
            return (IntPolynomial::zero(), BigInt::zero());
        }
        let r = BigInt::from(root);
        let d = self.coeffs.len() - 1;
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let value = &self.coeffs[k] + &carry * &r;
            if k == 0 {
                return (IntPolynomial::new(q), value);
            }
            q[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Exact division by a monic polynomial; `None` when the remainder is
    /// nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if !divisor.is_monic() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dd = divisor.degree();
        if self.degree() < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPolynomial::new(q))
    }

    pub fn divides(&self, other: &IntPolynomial) -> bool {
        other.div_exact(self).is_some()
    }

    /// Coefficients as `i64`, if all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Result of splitting off the `(t - 1)` and `(t + 1)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusMinusOne {
    /// Multiplicity of the root `1`.
    pub plus: usize,
    /// Multiplicity of the root `-1`.
    pub minus: usize,
    pub rest: IntPolynomial,
}

/// Writes a monic `p` as `(t - 1)^plus (t + 1)^minus rest` with
/// `rest(1) != 0` and `rest(-1) != 0`.
pub fn extract_pm1(p: &IntPolynomial) -> Result<PlusMinusOne, LinalgError> {
    if !p.is_monic() {
        return Err(LinalgError::NotMonic);
    }
    let mut rest = p.clone();
    let mut counts = [0usize; 2];
    for (slot, root) in [(0, 1), (1, -1)] {
        loop {
            let (q, r) = rest.div_linear(root);
            if !r.is_zero() {
                break;
            }
            rest = q;
            counts[slot] += 1;
        }
    }
    Ok(PlusMinusOne {
        plus: counts[0],
        minus: counts[1],
        rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::from_i64(&[-13, 0, 1]).to_string(),
            "t^2 - 13"
        );
        assert_eq!(
            IntPolynomial::from_i64(&[2, -1, 1]).to_string(),
            "t^2 - t + 2"
        );
        assert_eq!(IntPolynomial::from_i64(&[0, -3]).to_string(), "-3t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::one().to_string(), "1");
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeffs().len(), 2);
    }

    #[test]
    fn extract_examples() {
        let p = IntPolynomial::from_i64(&[-1, 0, 1]);
        let r = extract_pm1(&p).unwrap();
        assert_eq!((r.plus, r.minus, r.rest), (1, 1, IntPolynomial::one()));

        // (t - 1)(t + 1)(t^2 - 13) = t^4 - 14 t^2 + 13
        let p = IntPolynomial::from_i64(&[13, 0, -14, 0, 1]);
        let r = extract_pm1(&p).unwrap();
        assert_eq!((r.plus, r.minus), (1, 1));
        assert_eq!(r.rest, IntPolynomial::from_i64(&[-13, 0, 1]));

        let p = IntPolynomial::from_i64(&[-4, 0, 1]);
        let r = extract_pm1(&p).unwrap();
        assert_eq!((r.plus, r.minus, r.rest), (0, 0, p));

        assert_eq!(
            extract_pm1(&IntPolynomial::from_i64(&[1, 2])),
            Err(LinalgError::NotMonic)
        );
    }

    #[test]
    fn exact_division() {
        let a = IntPolynomial::from_i64(&[-17, 0, 1]);
        let b = IntPolynomial::from_i64(&[1, 1]);
        let prod = a.mul(&b).mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.mul(&b)));
        assert!(a.divides(&prod));
        assert!(!IntPolynomial::from_i64(&[-2, 0, 1]).divides(&prod));
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-5i64..=5, 0..5).prop_map(|mut c| {
            c.push(1);
            IntPolynomial::from_i64(&c)
        })
    }

    proptest! {
        #[test]
        fn extract_round_trip(q in small_poly(), a in 0usize..4, b in 0usize..4) {
            let p = IntPolynomial::linear(1).pow(a)
                .mul(&IntPolynomial::linear(-1).pow(b))
                .mul(&q);
            let r = extract_pm1(&p).unwrap();
            let rebuilt = IntPolynomial::linear(1).pow(r.plus)
                .mul(&IntPolynomial::linear(-1).pow(r.minus))
                .mul(&r.rest);
            prop_assert_eq!(rebuilt, p);
            prop_assert!(!r.rest.eval_i64(1).is_zero());
            prop_assert!(!r.rest.eval_i64(-1).is_zero());
            prop_assert!(r.plus >= a && r.minus >= b);
        }
    }
}
