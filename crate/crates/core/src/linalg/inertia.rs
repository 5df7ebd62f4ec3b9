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

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{LinalgError, RationalMatrix};

/// Numbers of positive, zero and negative eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }

    pub fn rank(&self) -> usize {
        self.n_pos + self.n_neg
    }

    pub fn is_psd(&self) -> bool {
        self.n_neg == 0
    }
}

/// Inertia by Sylvester's law, using symmetric congruence elimination.
///
/// A `1x1` pivot is taken at the first nonzero diagonal entry of the active
/// block. When the whole active diagonal vanishes, the lexicographically
/// first nonzero off-diagonal entry `(i, j)` is used as a `2x2` pivot
/// `[[0, a], [a, 0]]`, which contributes one positive and one negative
/// eigenvalue.
pub fn inertia(s: &RationalMatrix) -> Result<Inertia, LinalgError> {
    if s.rows() != s.cols() {
        return Err(LinalgError::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    let n = s.rows();
    for i in 0..n {
        for j in 0..i {
            if s.get(i, j) != s.get(j, i) {
                return Err(LinalgError::NotSymmetric { i, j });
            }
        }
    }
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| s.get(i, j).clone()).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
            let p = active.remove(pos);
            let pivot = m[p][p].clone();
            if pivot.is_positive() {
                out.n_pos += 1;
            } else {
                out.n_neg += 1;
            }
            for &r in &active {
                if m[r][p].is_zero() {
                    continue;
                }
                let factor = &m[r][p] / &pivot;
                for &c in &active {
                    if m[p][c].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[p][c];
                    m[r][c] -= delta;
                }
            }
            continue;
        }

        let mut pair = None;
        'search: for (a, &i) in active.iter().enumerate() {
            for (b, &j) in active.iter().enumerate().skip(a + 1) {
                if !m[i][j].is_zero() {
                    pair = Some((a, b));
                    break 'search;
                }
            }
        }
        let Some((a, b)) = pair else {
            out.n_zero += active.len();
            break;
        };
        let (i, j) = (active[a], active[b]);
        active.remove(b);
        active.remove(a);
        out.n_pos += 1;
        out.n_neg += 1;

        // S' = S - B E^{-1} B^T with E = [[0, w], [w, 0]], E^{-1} = E / w^2.
        let w = m[i][j].clone();
        for &r in &active {
            let (ri, rj) = (m[r][i].clone(), m[r][j].clone());
            if ri.is_zero() && rj.is_zero() {
                continue;
            }
            for &c in &active {
                let (ci, cj) = (&m[c][i], &m[c][j]);
                if ci.is_zero() && cj.is_zero() {
                    continue;
                }
                let delta = (&ri * cj + &rj * ci) / &w;
                m[r][c] -= delta;
            }
        }
    }
    Ok(out)
}
