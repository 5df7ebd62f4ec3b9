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

//! Exact integer and rational matrix kernels.
//!
//! Nothing here uses floating point. Inertia is computed by symmetric
//! congruence elimination over the rationals, characteristic polynomials by
//! the division-free Berkowitz recurrence.

mod charpoly;
mod inertia;
mod matrix;
mod poly;

pub use charpoly::char_poly;
pub use inertia::{inertia, Inertia};
pub use matrix::{IntMatrix, RationalMatrix};
pub use poly::{extract_pm1, IntPolynomial, PlusMinusOne};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
