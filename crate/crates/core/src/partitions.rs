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

//! Equitable partitions, quotient matrices, all-ones block perturbations
//! and the normal form of the rows of a maximal clique.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{GraphError, SignedGraph, VertexSet};
use crate::linalg::{char_poly, extract_pm1, IntMatrix, IntPolynomial};
use crate::spectra::{exact_spectrum, ExactSpectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has an empty block")]
    EmptyBlock,
    #[error("vertex {0} lies in two blocks")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("partition covers {got} vertices, graph has {expected}")]
    Order { got: usize, expected: usize },
    #[error("cannot parse partition `{0}`")]
    Syntax(String),
    #[error(
        "blocks ({block}, {other}) are not equitable: vertex {u} has sum {sum_u}, vertex {v} has sum {sum_v}"
    )]
    NotEquitable {
        block: usize,
        other: usize,
        u: usize,
        v: usize,
        sum_u: i64,
        sum_v: i64,
    },
    #[error("perturbation is {got}x{got}, partition has {expected} blocks")]
    Dimension { got: usize, expected: usize },
    #[error("perturbation is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// An ordered list of disjoint nonempty blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquitablePartition {
    blocks: Vec<VertexSet>,
    order: usize,
}

impl EquitablePartition {
    pub fn new(blocks: Vec<VertexSet>) -> Result<Self, PartitionError> {
        let order: usize = blocks.iter().map(VertexSet::len).sum();
        let mut seen = vec![false; order];
        for b in &blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for v in b.iter() {
                if v >= order {
                    return Err(PartitionError::Uncovered(
                        seen.iter().position(|s| !s).unwrap_or(v),
                    ));
                }
                if seen[v] {
                    return Err(PartitionError::Overlap(v));
                }
                seen[v] = true;
            }
        }
        Ok(EquitablePartition { blocks, order })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<Self, PartitionError> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            blocks.push(VertexSet::new(start..start + s).expect("ranges are duplicate free"));
            start += s;
        }
        EquitablePartition::new(blocks)
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b.iter() {
                out[v] = i;
            }
        }
        out
    }

    fn check_order(&self, n: usize) -> Result<(), PartitionError> {
        if self.order != n {
            return Err(PartitionError::Order {
                got: self.order,
                expected: n,
            });
        }
        Ok(())
    }
}

/// `[0-3|4-7]`: blocks separated by `|`, each a comma list of indices or
/// inclusive ranges.
impl FromStr for EquitablePartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PartitionError::Syntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(syntax)?;
        let mut blocks = Vec::new();
        for part in inner.split('|') {
            let mut members = Vec::new();
            for item in part.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                match item.split_once('-') {
                    Some((a, b)) => {
                        let a: usize = a.trim().parse().map_err(|_| syntax())?;
                        let b: usize = b.trim().parse().map_err(|_| syntax())?;
                        if b < a {
                            return Err(syntax());
                        }
                        members.extend(a..=b);
                    }
                    None => members.push(item.parse().map_err(|_| syntax())?),
                }
            }
            let block = VertexSet::new(members).map_err(|e| match e {
                GraphError::DuplicateVertex(v) => PartitionError::Overlap(v),
                _ => syntax(),
            })?;
            blocks.push(block);
        }
        EquitablePartition::new(blocks)
    }
}

impl fmt::Display for EquitablePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let v = b.as_slice();
            let consecutive = v.windows(2).all(|w| w[1] == w[0] + 1);
            if consecutive && v.len() > 1 {
                write!(f, "{}-{}", v[0], v[v.len() - 1])?;
            } else {
                let items: Vec<String> = v.iter().map(usize::to_string).collect();
                write!(f, "{}", items.join(","))?;
            }
        }
        write!(f, "]")
    }
}

/// Block row sums: entry `(i, j)` is the signed number of neighbours in
/// block `j` of any vertex of block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub q: IntMatrix,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.q.rows()
    }

    pub fn char_poly(&self) -> IntPolynomial {
        char_poly(&self.q).expect("quotient is square")
    }
}

fn block_sum(g: &SignedGraph, v: usize, block: &VertexSet) -> i64 {
    block.iter().map(|w| i64::from(g.entry(v, w))).sum()
}

/// Checks constant signed row sums and constant signed column sums for
/// every ordered pair of blocks.
pub fn verify_equitable(
    g: &SignedGraph,
    p: &EquitablePartition,
) -> Result<QuotientMatrix, PartitionError> {
    p.check_order(g.order())?;
    let k = p.len();
    let mut q = IntMatrix::zeros(k, k);
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let first = bi.as_slice()[0];
            let sum = block_sum(g, first, bj);
            for v in bi.iter() {
                let s = block_sum(g, v, bj);
                if s != sum {
                    return Err(PartitionError::NotEquitable {
                        block: i,
                        other: j,
                        u: first,
                        v,
                        sum_u: sum,
                        sum_v: s,
                    });
                }
            }
            // column sums of the (i, j) block: for each column in bj, sum over bi
            let cfirst = bj.as_slice()[0];
            let csum = block_sum(g, cfirst, bi);
            for w in bj.iter() {
                let s = block_sum(g, w, bi);
                if s != csum {
                    return Err(PartitionError::NotEquitable {
                        block: j,
                        other: i,
                        u: cfirst,
                        v: w,
                        sum_u: csum,
                        sum_v: s,
                    });
                }
            }
            q.set(i, j, sum);
        }
    }
    Ok(QuotientMatrix { q })
}

/// The `1`, `-1` multiplicities and residual of the quotient's
/// characteristic polynomial.
pub fn quotient_spectrum(q: &QuotientMatrix) -> ExactSpectrum {
    let split = extract_pm1(&q.char_poly()).expect("characteristic polynomial is monic");
    ExactSpectrum {
        mult_plus1: split.plus,
        mult_minus1: split.minus,
        residual: split.rest,
    }
}

/// Whether every root of the quotient is an eigenvalue of `g` with
/// multiplicity, and every eigenvalue of `g` outside `{1, -1}` is a root
/// of the quotient.
pub fn quotient_explains(g: &SignedGraph, q: &QuotientMatrix) -> bool {
    let full = char_poly(&g.to_int_matrix()).expect("square");
    let qp = q.char_poly();
    qp.divides(&full) && exact_spectrum(g).residual.divides(&qp)
}

/// `A + sum eps(i, j) J` restricted to block `i` by block `j`.
pub fn perturbed(
    g: &SignedGraph,
    p: &EquitablePartition,
    eps: &[Vec<i8>],
) -> Result<IntMatrix, PartitionError> {
    p.check_order(g.order())?;
    let k = p.len();
    if eps.len() != k || eps.iter().any(|r| r.len() != k) {
        return Err(PartitionError::Dimension {
            got: eps.len(),
            expected: k,
        });
    }
    for i in 0..k {
        for j in 0..i {
            if eps[i][j] != eps[j][i] {
                return Err(PartitionError::Asymmetric(i, j));
            }
        }
    }
    let block = p.block_of();
    let n = g.order();
    Ok(IntMatrix::from_fn(n, n, |u, v| {
        i64::from(g.entry(u, v)) + i64::from(eps[block[u]][block[v]])
    }))
}

/// True iff the perturbed matrix squares to the identity, that is, all its
/// eigenvalues are `1` or `-1`.
pub fn verify_j_perturbation(
    g: &SignedGraph,
    p: &EquitablePartition,
    eps: &[Vec<i8>],
) -> Result<bool, PartitionError> {
    let a = perturbed(g, p, eps)?;
    let sq = a.mul(&a).expect("square");
    Ok(sq == IntMatrix::identity(a.rows()))
}

/// Maximal cliques of the underlying graph, each sorted, listed in
/// lexicographic order.
pub fn maximal_cliques(g: &SignedGraph) -> Vec<VertexSet> {
    let n = g.order();
    assert!(n <= 64, "clique enumeration supports at most 64 vertices");
    if n == 0 {
        return Vec::new();
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect();
    let mut out = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    bron_kerbosch(&nbr, 0, all, 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out
        .into_iter()
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    sets.sort();
    sets.into_iter()
        .map(|v| VertexSet::new(v).expect("bit positions are distinct"))
        .collect()
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !nbr[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(nbr, r | 1 << v, p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    /// Clique `J - I`; every outside neighbour sees `C1` positively and
    /// `C2` negatively, with `C1, C2` not covering the clique.
    I,
    /// Clique `J - I` split as `C1 + C2`; outside neighbours see exactly
    /// one side, positively.
    II,
    /// Clique with a positive part `C1` and a negative part `C2`, each of
    /// size at least two; outside neighbours see exactly one side.
    III,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueFormatError {
    #[error("vertex set is not a clique")]
    NotClique,
    #[error("clique has {0} vertices, at least 3 needed")]
    TooSmall(usize),
    #[error("clique is not maximal: vertex {0} sees all of it")]
    NotMaximal(usize),
    #[error("clique has no outside neighbours")]
    NoOutsideNeighbours,
    #[error("no format matches: {0}")]
    NoFormat(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Normal form of the rows of a maximal clique `C`.
///
/// After switching by `switching` and negating if `negated`, the rows of
/// `C` have the block pattern of `format`: the clique splits as `C1, C2`
/// (with a remainder for format I) and the other vertices as `X` (seeing
/// `C1`), `Y` (seeing `C2`) and `Z` (seeing nothing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFormat {
    pub format: Format,
    pub c1: VertexSet,
    pub c2: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
    pub switching: VertexSet,
    pub negated: bool,
}

impl CliqueFormat {
    /// `(c, c1, c2, x, y, z)`.
    pub fn counts(&self) -> (usize, usize, usize, usize, usize, usize) {
        let c = match self.format {
            Format::I => 0,
            _ => self.c1.len() + self.c2.len(),
        };
        (
            c,
            self.c1.len(),
            self.c2.len(),
            self.x.len(),
            self.y.len(),
            self.z.len(),
        )
    }

    /// The normalized graph whose clique rows show the pattern.
    pub fn normalized(&self, g: &SignedGraph) -> Result<SignedGraph, GraphError> {
        let s = g.switch(&self.switching)?;
        Ok(if self.negated { s.negate() } else { s })
    }
}

impl fmt::Display for CliqueFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "format {:?}: c1={} c2={} x={} y={} z={}",
            self.format,
            self.c1.len(),
            self.c2.len(),
            self.x.len(),
            self.y.len(),
            self.z.len()
        )
    }
}

fn flip(switch: &mut [bool], vs: impl IntoIterator<Item = usize>) {
    for v in vs {
        switch[v] = !switch[v];
    }
}

fn apply(g: &SignedGraph, switch: &[bool], negated: bool) -> SignedGraph {
    let s = g
        .switch(&VertexSet::from_mask(switch))
        .expect("mask has graph order");
    if negated {
        s.negate()
    } else {
        s
    }
}

/// Classifies the rows of the maximal clique `c` of `g`.
pub fn clique_format(g: &SignedGraph, c: &VertexSet) -> Result<CliqueFormat, CliqueFormatError> {
    c.validate(g.order())?;
    let cv = c.sorted().into_vec();
    let cn = cv.len();
    for (i, &u) in cv.iter().enumerate() {
        if cv[i + 1..].iter().any(|&v| !g.adjacent(u, v)) {
            return Err(CliqueFormatError::NotClique);
        }
    }
    if cn < 3 {
        return Err(CliqueFormatError::TooSmall(cn));
    }
    let n = g.order();
    let in_c = c.mask(n)?;
    if let Some(w) = (0..n).find(|&w| !in_c[w] && cv.iter().all(|&u| g.adjacent(u, w))) {
        return Err(CliqueFormatError::NotMaximal(w));
    }

    let c0 = cv[0];
    let mut switch = vec![false; n];
    let mut negated = false;
    let mut h;
    loop {
        switch.iter_mut().for_each(|s| *s = false);
        // edges from c0 inside the clique positive
        let base = apply(g, &switch, negated);
        flip(
            &mut switch,
            cv.iter().copied().filter(|&v| base.entry(c0, v) < 0),
        );
        h = apply(g, &switch, negated);
        let neg_inside: Vec<usize> = cv
            .iter()
            .copied()
            .filter(|&u| cv.iter().any(|&v| h.entry(u, v) < 0))
            .collect();
        if neg_inside.len() == cn - 1 && !negated {
            // c0 positive to a negative clique: the negative of J - I
            negated = true;
            continue;
        }
        break;
    }

    let c2_inside: Vec<usize> = cv
        .iter()
        .copied()
        .filter(|&u| cv.iter().any(|&v| h.entry(u, v) < 0))
        .collect();
    let tilde = !c2_inside.is_empty();
    if tilde {
        let c1: Vec<usize> = cv
            .iter()
            .copied()
            .filter(|v| !c2_inside.contains(v))
            .collect();
        if c1.len() < 2 || c2_inside.len() < 2 {
            return Err(CliqueFormatError::NoFormat(
                "clique is neither J - I nor a positive and a negative part of size at least two"
                    .into(),
            ));
        }
        for &u in &cv {
            for &v in &cv {
                if u == v {
                    continue;
                }
                let want = if c2_inside.contains(&u) && c2_inside.contains(&v) {
                    -1
                } else {
                    1
                };
                if h.entry(u, v) != want {
                    return Err(CliqueFormatError::NoFormat(
                        "clique signs do not split into a positive and a negative part".into(),
                    ));
                }
            }
        }
    }

    // outside columns, first nonzero entry made positive
    let outside: Vec<usize> = (0..n).filter(|&w| !in_c[w]).collect();
    for &w in &outside {
        if let Some(&u) = cv.iter().find(|&&u| h.entry(u, w) != 0) {
            if h.entry(u, w) < 0 {
                switch[w] = !switch[w];
            }
        }
    }
    h = apply(g, &switch, negated);
    let column = |w: usize| -> Vec<i8> { cv.iter().map(|&u| h.entry(u, w)).collect() };
    let mut patterns: Vec<Vec<i8>> = Vec::new();
    for &w in &outside {
        let col = column(w);
        if col.iter().any(|&e| e != 0) && !patterns.contains(&col) {
            patterns.push(col);
        }
    }
    if patterns.is_empty() {
        return Err(CliqueFormatError::NoOutsideNeighbours);
    }
    let support = |p: &[i8], sign: i8| -> Vec<usize> {
        cv.iter()
            .zip(p)
            .filter(|&(_, &e)| e == sign)
            .map(|(&u, _)| u)
            .collect()
    };
    let indicator =
        |set: &[usize]| -> Vec<i8> { cv.iter().map(|u| i8::from(set.contains(u))).collect() };

    let (format, c1, c2) = if !tilde && patterns.iter().any(|p| p.contains(&-1)) {
        if patterns.len() != 1 {
            return Err(CliqueFormatError::NoFormat(
                "outside neighbours with mixed signs see the clique differently".into(),
            ));
        }
        let p = &patterns[0];
        let (c1, c2) = (support(p, 1), support(p, -1));
        if c1.len() + c2.len() >= cn {
            return Err(CliqueFormatError::NoFormat(
                "mixed column has no zero".into(),
            ));
        }
        (Format::I, c1, c2)
    } else {
        let (side_a, side_b) = if tilde {
            let c1: Vec<usize> = cv
                .iter()
                .copied()
                .filter(|v| !c2_inside.contains(v))
                .collect();
            (c1, c2_inside.clone())
        } else {
            let a = support(&patterns[0], 1);
            let b: Vec<usize> = cv.iter().copied().filter(|v| !a.contains(v)).collect();
            // the side holding the clique's first vertex comes first when
            // both sides have neighbours
            if patterns.len() == 2 && !a.contains(&c0) {
                (b, a)
            } else {
                (a, b)
            }
        };
        let allowed = [indicator(&side_a), indicator(&side_b)];
        if let Some(p) = patterns.iter().find(|p| !allowed.contains(p)) {
            return Err(CliqueFormatError::NoFormat(format!(
                "outside column {p:?} is not supported on one side"
            )));
        }
        if side_a.is_empty() || side_b.is_empty() {
            return Err(CliqueFormatError::NoFormat("clique side is empty".into()));
        }
        (if tilde { Format::III } else { Format::II }, side_a, side_b)
    };

    let bucket = |set: &[usize], h: &SignedGraph| -> Vec<usize> {
        let want = indicator(set);
        outside
            .iter()
            .copied()
            .filter(|&w| cv.iter().map(|&u| h.entry(u, w)).collect::<Vec<_>>() == want)
            .collect()
    };
    let (mut c1, mut c2) = (c1, c2);
    let (mut xs, mut ys) = match format {
        Format::I => {
            let p = &patterns[0];
            let xs: Vec<usize> = outside
                .iter()
                .copied()
                .filter(|&w| column(w) == *p)
                .collect();
            (xs, Vec::new())
        }
        _ => (bucket(&c1, &h), bucket(&c2, &h)),
    };
    if format == Format::III && xs.is_empty() {
        // exchange the parts: switch C2 and negate
        flip(&mut switch, c2.iter().copied());
        negated = !negated;
        std::mem::swap(&mut c1, &mut c2);
        std::mem::swap(&mut xs, &mut ys);
        // columns of the new Y turned negative under the negation
        flip(&mut switch, ys.iter().copied());
    }
    if format == Format::II && xs.is_empty() {
        std::mem::swap(&mut c1, &mut c2);
        std::mem::swap(&mut xs, &mut ys);
    }
    let zs: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|w| !xs.contains(w) && !ys.contains(w))
        .collect();

    let set = |v: Vec<usize>| VertexSet::new(v).expect("distinct vertices");
    let out = CliqueFormat {
        format,
        c1: set(c1),
        c2: set(c2),
        x: set(xs),
        y: set(ys),
        z: set(zs),
        switching: VertexSet::from_mask(&switch),
        negated,
    };
    if !reconstructs(g, c, &out) {
        return Err(CliqueFormatError::NoFormat(
            "normalized rows do not match the pattern".into(),
        ));
    }
    Ok(out)
}

/// Rebuilds the block pattern of `f` and compares it with the normalized
/// rows of `c`.
pub fn reconstructs(g: &SignedGraph, c: &VertexSet, f: &CliqueFormat) -> bool {
    let Ok(h) = f.normalized(g) else {
        return false;
    };
    let n = g.order();
    let cv = c.sorted().into_vec();
    let in_c1 = |v| f.c1.contains(v);
    let in_c2 = |v| f.c2.contains(v);
    for &u in &cv {
        for v in 0..n {
            if u == v {
                if h.entry(u, v) != 0 {
                    return false;
                }
                continue;
            }
            let want: i8 = if cv.contains(&v) {
                match f.format {
                    Format::III if in_c2(u) && in_c2(v) => -1,
                    _ => 1,
                }
            } else if f.x.contains(v) {
                match f.format {
                    Format::I if in_c1(u) => 1,
                    Format::I if in_c2(u) => -1,
                    Format::I => 0,
                    _ => i8::from(in_c1(u)),
                }
            } else if f.y.contains(v) {
                i8::from(in_c2(u))
            } else {
                0
            };
            if h.entry(u, v) != want {
                return false;
            }
        }
    }
    match f.format {
        Format::I => {
            f.c1.len() + f.c2.len() < cv.len()
                && !f.c1.is_empty()
                && !f.c2.is_empty()
                && !f.x.is_empty()
        }
        Format::II => {
            f.c1.len() + f.c2.len() == cv.len()
                && !f.c1.is_empty()
                && !f.c2.is_empty()
                && !f.x.is_empty()
        }
        Format::III => {
            f.c1.len() + f.c2.len() == cv.len()
                && f.c1.len() >= 2
                && f.c2.len() >= 2
                && !f.x.is_empty()
        }
    }
}

/// A recorded perturbation: the instance, its partition and the upper
/// triangle of `eps` row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbationWitness {
    pub instance: String,
    pub partition: EquitablePartition,
    pub eps: Vec<Vec<i8>>,
}

/// Parses lines `<instance> <partition> <eps upper triangle...>`, skipping
/// blank and `#` lines.
pub fn parse_witnesses(text: &str) -> Result<Vec<PerturbationWitness>, PartitionError> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = || PartitionError::Syntax(line.to_string());
        let mut tokens = line.split_whitespace();
        let instance = tokens.next().ok_or_else(syntax)?.to_string();
        let partition: EquitablePartition = tokens.next().ok_or_else(syntax)?.parse()?;
        let values: Vec<i8> = tokens
            .map(|t| t.parse::<i8>().map_err(|_| syntax()))
            .collect::<Result<_, _>>()?;
        let k = partition.len();
        if values.len() != k * (k + 1) / 2 || values.iter().any(|v| v.abs() > 1) {
            return Err(syntax());
        }
        let mut eps = vec![vec![0i8; k]; k];
        let mut it = values.into_iter();
        for i in 0..k {
            for j in i..k {
                let v = it.next().expect("length checked");
                eps[i][j] = v;
                eps[j][i] = v;
            }
        }
        out.push(PerturbationWitness {
            instance,
            partition,
            eps,
        });
    }
    Ok(out)
}

/// Witnesses shipped with the crate.
pub const WITNESSES: &str = include_str!("../data/j_perturbations.txt");
