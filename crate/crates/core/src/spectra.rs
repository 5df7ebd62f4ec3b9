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

//! Exact spectra of signed graphs and the spectral tests built on them.
//!
//! The spectrum of a graph is stored as the multiplicities of `1` and `-1`
//! together with a monic integer polynomial whose roots are the remaining
//! eigenvalues. Membership in the class (at most two eigenvalues outside
//! `{1, -1}`) is then a degree test on that polynomial.

use std::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::graph::{GraphError, SignedGraph, VertexSet};
use crate::linalg::{
    char_poly, extract_pm1, inertia, Inertia, IntMatrix, IntPolynomial, RationalMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("row set is empty")]
    EmptyRows,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Spectrum split as `1^mult_plus1, (-1)^mult_minus1` and the roots of
/// `residual`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactSpectrum {
    pub mult_plus1: usize,
    pub mult_minus1: usize,
    pub residual: IntPolynomial,
}

impl ExactSpectrum {
    pub fn order(&self) -> usize {
        self.mult_plus1 + self.mult_minus1 + self.residual.degree()
    }

    /// Spectrum of the negative graph.
    pub fn negated(&self) -> ExactSpectrum {
        let mut residual = self.residual.reflect();
        if self.residual.degree() % 2 == 1 {
            residual = residual.to_monic_sign();
        }
        ExactSpectrum {
            mult_plus1: self.mult_minus1,
            mult_minus1: self.mult_plus1,
            residual,
        }
    }

    /// Eigenvalues outside `{1, -1}`, when there are at most two.
    pub fn exceptional(&self) -> Exceptional {
        let c = self.residual.to_i64_vec();
        match (self.residual.degree(), c) {
            (0, _) => Exceptional::None,
            (1, Some(c)) => Exceptional::Single(-c[0]),
            (2, Some(c)) => Exceptional::Pair(SurdPair::from_monic(c[1], c[0])),
            (d, _) => Exceptional::Many(d),
        }
    }

    /// Sum and product of the exceptional pair, if there are exactly two.
    pub fn sum_product(&self) -> Option<(i64, i64)> {
        if self.residual.degree() != 2 {
            return None;
        }
        let c = self.residual.to_i64_vec()?;
        Some((-c[1], c[0]))
    }
}

impl fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{-1^{}, 1^{}, {}}}",
            self.mult_minus1,
            self.mult_plus1,
            self.exceptional()
        )
    }
}

/// The pair `(p + sqrt(d)) / q` and `(p - sqrt(d)) / q` with `q` in `{1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurdPair {
    pub p: i64,
    pub d: i64,
    pub q: i64,
}

impl SurdPair {
    /// Roots of `t^2 + b t + c`.
    pub fn from_monic(b: i64, c: i64) -> SurdPair {
        if b % 2 == 0 {
            SurdPair {
                p: -b / 2,
                d: b * b / 4 - c,
                q: 1,
            }
        } else {
            SurdPair {
                p: -b,
                d: b * b - 4 * c,
                q: 2,
            }
        }
    }

    /// The monic quadratic with these roots.
    pub fn polynomial(&self) -> IntPolynomial {
        let sum = 2 * self.p / self.q;
        let product = (self.p * self.p - self.d) / (self.q * self.q);
        IntPolynomial::quadratic(sum, product)
    }

    pub fn sum(&self) -> i64 {
        2 * self.p / self.q
    }

    pub fn product(&self) -> i64 {
        (self.p * self.p - self.d) / (self.q * self.q)
    }

    /// Numerical approximation `(larger, smaller)`, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let root = (self.d as f64).sqrt();
        let (p, q) = (self.p as f64, self.q as f64);
        ((p + root) / q, (p - root) / q)
    }
}

impl fmt::Display for SurdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = if self.p == 0 {
            format!("±sqrt({})", self.d)
        } else {
            format!("{} ± sqrt({})", self.p, self.d)
        };
        let (hi, lo) = self.approx();
        if self.q == 1 {
            write!(f, "{inner} ≈ {hi:.6}, {lo:.6}")
        } else {
            write!(f, "({inner})/{} ≈ {hi:.6}, {lo:.6}", self.q)
        }
    }
}

/// Eigenvalues outside `{1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exceptional {
    None,
    Single(i64),
    Pair(SurdPair),
    /// More than two (or coefficients too large to display); holds the count.
    Many(usize),
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exceptional::None => write!(f, "no other eigenvalues"),
            Exceptional::Single(r) => write!(f, "{r}"),
            Exceptional::Pair(s) => write!(f, "{s}"),
            Exceptional::Many(d) => write!(f, "{d} other eigenvalues"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub exceptional: Exceptional,
}

pub fn exact_spectrum(g: &SignedGraph) -> ExactSpectrum {
    let a = g.to_int_matrix();
    let p = char_poly(&a).expect("adjacency matrix is square");
    let split = extract_pm1(&p).expect("characteristic polynomial is monic");
    ExactSpectrum {
        mult_plus1: split.plus,
        mult_minus1: split.minus,
        residual: split.rest,
    }
}

pub fn in_class_g(g: &SignedGraph) -> Membership {
    let s = exact_spectrum(g);
    Membership {
        member: s.residual.degree() <= 2,
        exceptional: s.exceptional(),
    }
}

/// `M = N N^T - I` for a set of rows `N` of the adjacency matrix, with its
/// inertia.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub matrix: RationalMatrix,
    pub inertia: Inertia,
    pub psd: bool,
    pub rank: usize,
}

impl GramReport {
    fn from_int(m: &IntMatrix) -> GramReport {
        let matrix = m.to_rational();
        let inertia = inertia(&matrix).expect("Gram matrix is symmetric");
        GramReport {
            psd: inertia.is_psd(),
            rank: inertia.rank(),
            matrix,
            inertia,
        }
    }
}

/// Report on `A^2 - I`.
pub fn square_psd_rank_check(g: &SignedGraph) -> GramReport {
    let a = g.to_int_matrix();
    let sq = a.mul(&a).expect("square").shifted(-1);
    GramReport::from_int(&sq)
}

/// Report on `N N^T - I` where `N` holds the rows of `A` listed in `rows`, in
/// that order.
pub fn gram_submatrix(g: &SignedGraph, rows: &VertexSet) -> Result<GramReport, SpectraError> {
    if rows.is_empty() {
        return Err(SpectraError::EmptyRows);
    }
    rows.validate(g.order())?;
    let r = rows.as_slice();
    let n = g.order();
    let m = IntMatrix::from_fn(r.len(), r.len(), |i, j| {
        let dot: i64 = (0..n)
            .map(|k| i64::from(g.entry(r[i], k)) * i64::from(g.entry(r[j], k)))
            .sum();
        dot - i64::from(i == j)
    });
    Ok(GramReport::from_int(&m))
}

/// Facts that contradict membership when reported for a graph in the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Deg1Violation {
    /// A vertex of degree one whose neighbour has further neighbours.
    DegreeOne { vertex: usize },
    /// Columns `x`, `y` with `x.x == x.y` that differ in at most two places.
    CloseColumns {
        x: usize,
        y: usize,
        differing: usize,
    },
}

/// Reports degree-one vertices outside isolated edges and pairs of columns
/// `(x, y)` with `x.x == x.y` differing in fewer than three coordinates.
pub fn deg1_checks(g: &SignedGraph) -> Vec<Deg1Violation> {
    let n = g.order();
    let mut out = Vec::new();
    for v in 0..n {
        if g.degree(v) != 1 {
            continue;
        }
        let u = g.neighbors(v).next().expect("degree one");
        if g.degree(u) > 1 {
            out.push(Deg1Violation::DegreeOne { vertex: v });
        }
    }
    for x in 0..n {
        let xx = g.degree(x) as i64;
        for y in 0..n {
            if x == y {
                continue;
            }
            let xy: i64 = (0..n)
                .map(|k| i64::from(g.entry(x, k)) * i64::from(g.entry(y, k)))
                .sum();
            if xx != xy {
                continue;
            }
            let differing = (0..n).filter(|&k| g.entry(x, k) != g.entry(y, k)).count();
            if differing <= 2 {
                out.push(Deg1Violation::CloseColumns { x, y, differing });
            }
        }
    }
    out
}

/// Number of eigenvalues greater than `1` and number less than `-1`.
pub fn interlacing_counts(g: &SignedGraph) -> (usize, usize) {
    let a = g.to_int_matrix();
    let above = inertia(&a.shifted(-1).to_rational())
        .expect("symmetric")
        .n_pos;
    let below = inertia(&a.shifted(1).to_rational())
        .expect("symmetric")
        .n_neg;
    (above, below)
}

/// Whether a graph passes the interlacing bound required of every induced
/// subgraph of a member.
pub fn obeys_interlacing(g: &SignedGraph) -> bool {
    let (above, below) = interlacing_counts(g);
    above <= 1 && below <= 1
}

/// The coefficient list `[c0, c1, ...]` of the residual as `i64`.
pub fn residual_coeffs(s: &ExactSpectrum) -> Vec<i64> {
    s.residual
        .coeffs()
        .iter()
        .map(|c| c.to_i64().expect("residual coefficient fits in i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn a3_11() -> SignedGraph {
        SignedGraph::from_rows(&[[0, 1, 1, 0], [1, 0, 1, -1], [1, 1, 0, 1], [0, -1, 1, 0]]).unwrap()
    }

    fn c4_one_negative() -> SignedGraph {
        SignedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, -1)]).unwrap()
    }

    #[test]
    fn spectrum_examples() {
        let s = exact_spectrum(&named::complete(2));
        assert_eq!((s.mult_plus1, s.mult_minus1), (1, 1));
        assert_eq!(s.residual, IntPolynomial::one());

        let s = exact_spectrum(&a3_11());
        assert_eq!((s.mult_plus1, s.mult_minus1), (1, 1));
        assert_eq!(s.residual, IntPolynomial::from_i64(&[-4, 0, 1]));

        let s = exact_spectrum(&named::cycle(4));
        assert_eq!((s.mult_plus1, s.mult_minus1), (0, 0));
        assert_eq!(s.residual, IntPolynomial::from_i64(&[0, 0, -4, 0, 1]));

        let s = exact_spectrum(&SignedGraph::empty(0));
        assert_eq!(s.order(), 0);
        assert_eq!(s.residual, IntPolynomial::one());
    }

    #[test]
    fn membership_examples() {
        let m = in_class_g(&named::complete(2));
        assert!(m.member);
        assert_eq!(m.exceptional, Exceptional::None);

        assert!(!in_class_g(&named::cycle(4)).member);

        let m = in_class_g(&a3_11());
        assert_eq!(
            m.exceptional,
            Exceptional::Pair(SurdPair { p: 0, d: 4, q: 1 })
        );
    }

    #[test]
    fn surd_pairs() {
        // t^2 - t - 60: (1 ± sqrt(241)) / 2
        let s = SurdPair::from_monic(-1, -60);
        assert_eq!(s, SurdPair { p: 1, d: 241, q: 2 });
        assert_eq!(s.polynomial(), IntPolynomial::quadratic(1, -60));
        assert_eq!((s.sum(), s.product()), (1, -60));
        // t^2 - 2t - 51: 1 ± sqrt(52)
        let s = SurdPair::from_monic(-2, -51);
        assert_eq!(s, SurdPair { p: 1, d: 52, q: 1 });
        assert!(s.to_string().starts_with("1 ± sqrt(52)"));
    }

    #[test]
    fn square_check_examples() {
        let r = square_psd_rank_check(&named::complete(2));
        assert!(r.psd);
        assert_eq!(r.rank, 0);

        let r = square_psd_rank_check(&a3_11());
        assert!(r.psd);
        assert_eq!(r.rank, 2);

        // A^2 = 2I for the 4-cycle with one negative edge, so A^2 - I = I.
        let r = square_psd_rank_check(&c4_one_negative());
        assert_eq!(r.matrix, RationalMatrix::identity(4));
        assert!(r.psd);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn gram_examples() {
        let g = a3_11();
        let full = gram_submatrix(&g, &VertexSet::all(4)).unwrap();
        assert_eq!(full, square_psd_rank_check(&g));

        let k2 = named::complete(2);
        let r = gram_submatrix(&k2, &VertexSet::new([0]).unwrap()).unwrap();
        assert_eq!(r.rank, 0);
        assert!(gram_submatrix(&k2, &VertexSet::empty()).is_err());
        assert!(gram_submatrix(&k2, &VertexSet::new([3]).unwrap()).is_err());
    }

    #[test]
    fn deg1_examples() {
        let v = deg1_checks(&named::path(3));
        assert!(v.contains(&Deg1Violation::DegreeOne { vertex: 0 }));
        assert!(v.contains(&Deg1Violation::DegreeOne { vertex: 2 }));

        let two_k2 = named::complete(2).disjoint_union(&named::complete(2));
        assert!(!deg1_checks(&two_k2)
            .iter()
            .any(|v| matches!(v, Deg1Violation::DegreeOne { .. })));

        assert!(deg1_checks(&a3_11()).is_empty());
    }

    #[test]
    fn interlacing_examples() {
        assert_eq!(interlacing_counts(&named::complete(2)), (0, 0));
        assert_eq!(interlacing_counts(&c4_one_negative()), (2, 2));
        let (above, _) = interlacing_counts(&named::path(6));
        assert!(above >= 2);
    }

    #[test]
    fn negation_duality() {
        let g = a3_11();
        assert_eq!(exact_spectrum(&g.negate()), exact_spectrum(&g).negated());
        let p3 = named::path(3);
        assert_eq!(exact_spectrum(&p3.negate()), exact_spectrum(&p3).negated());
    }

    #[test]
    fn residual_coefficients() {
        assert_eq!(residual_coeffs(&exact_spectrum(&a3_11())), vec![-4, 0, 1]);
    }
}
