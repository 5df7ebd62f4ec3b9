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

//! Signed graphs and their structural predicates.
//!
//! A [`SignedGraph`] is stored as a dense symmetric matrix with entries in
//! `{-1, 0, +1}` and a zero diagonal. Equality is entrywise, so two graphs
//! that differ only by a relabelling or a switching compare unequal; the
//! up-to-isomorphism notions live in [`crate::census`].

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::linalg::IntMatrix;

/// Sign of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = GraphError;

    fn try_from(value: i8) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(GraphError::InvalidSign(other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("edge ({i}, {j}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { i: usize, j: usize, n: usize },
    #[error("edge ({i}, {j}) is listed more than once")]
    DuplicateEdge { i: usize, j: usize },
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("vertex {0} appears twice in a vertex set")]
    DuplicateVertex(usize),
    #[error("{0} is not a valid edge sign")]
    InvalidSign(i8),
    #[error("invalid adjacency matrix: {0}")]
    InvalidMatrix(String),
}

/// An ordered set of distinct vertices.
///
/// The order matters for [`SignedGraph::induced`], which relabels the
/// members `0..len` in the order they appear here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let members: Vec<usize> = members.into_iter().collect();
        let mut sorted = members.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(members))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// All vertices `0..n` in increasing order.
    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Vertices `v < n` selected by `mask[v]`.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn validate(&self, n: usize) -> Result<(), GraphError> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(GraphError::InvalidVertex { vertex, n }),
            None => Ok(()),
        }
    }

    pub fn mask(&self, n: usize) -> Result<Vec<bool>, GraphError> {
        self.validate(n)?;
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        Ok(mask)
    }

    /// `{0..n} \ self`, increasing.
    pub fn complement(&self, n: usize) -> Result<Self, GraphError> {
        let mask = self.mask(n)?;
        Ok(VertexSet((0..n).filter(|&v| !mask[v]).collect()))
    }

    /// Members of `self` that also lie in `other`, in the order of `self`.
    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    /// Members sorted increasingly.
    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable();
        VertexSet(v)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Structural facts about the underlying graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub connected: bool,
    pub complete: bool,
    pub bipartite: bool,
    pub has_isolated_vertex: bool,
    pub has_isolated_edge: bool,
    pub min_degree: usize,
}

/// A signed graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl SignedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            adj: vec![0; n * n],
        }
    }

    /// Builds a graph from a list of signed edges `(i, j, sign)`.
    pub fn build(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self, GraphError> {
        let mut g = SignedGraph::empty(n);
        for &(i, j, sign) in edges {
            if i == j {
                return Err(GraphError::Loop(i));
            }
            if i >= n || j >= n {
                return Err(GraphError::EdgeOutOfRange { i, j, n });
            }
            if g.entry(i, j) != 0 {
                return Err(GraphError::DuplicateEdge { i, j });
            }
            g.set(i, j, sign.value());
        }
        Ok(g)
    }

    /// Convenience form of [`SignedGraph::build`] taking signs as `+1`/`-1`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self, GraphError> {
        let signed = edges
            .iter()
            .map(|&(i, j, s)| Sign::try_from(s).map(|s| (i, j, s)))
            .collect::<Result<Vec<_>, _>>()?;
        SignedGraph::build(n, &signed)
    }

    /// Builds a graph from a full adjacency matrix given row by row.
    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut adj = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(GraphError::InvalidMatrix(format!(
                    "row {i} has length {} but the matrix has {n} rows",
                    row.len()
                )));
            }
            adj.extend_from_slice(row);
        }
        SignedGraph::from_entries(n, adj)
    }

    /// Builds a graph from a row-major `n * n` entry vector, checking symmetry,
    /// the zero diagonal and the entry range.
    pub fn from_entries(n: usize, adj: Vec<i8>) -> Result<Self, GraphError> {
        if adj.len() != n * n {
            return Err(GraphError::InvalidMatrix(format!(
                "expected {} entries, got {}",
                n * n,
                adj.len()
            )));
        }
        for i in 0..n {
            if adj[i * n + i] != 0 {
                return Err(GraphError::InvalidMatrix(format!(
                    "nonzero diagonal entry at {i}"
                )));
            }
            for j in 0..n {
                let a = adj[i * n + j];
                if !(-1..=1).contains(&a) {
                    return Err(GraphError::InvalidMatrix(format!(
                        "entry ({i}, {j}) = {a} is not in {{-1, 0, 1}}"
                    )));
                }
                if a != adj[j * n + i] {
                    return Err(GraphError::InvalidMatrix(format!(
                        "entries ({i}, {j}) and ({j}, {i}) differ"
                    )));
                }
            }
        }
        Ok(SignedGraph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.adj[i * self.n + j]
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.entry(i, j) != 0
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: i8) {
        self.adj[i * self.n + j] = value;
        self.adj[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[i8] {
        &self.adj
    }

    /// Edges `(i, j, sign)` with `i < j`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                match self.entry(i, j) {
                    1 => out.push((i, j, Sign::Positive)),
                    -1 => out.push((i, j, Sign::Negative)),
                    _ => {}
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a != 0).count() / 2
    }

    pub fn negative_edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a < 0).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&a| a != 0).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter_map(|(u, &a)| (a != 0).then_some(u))
    }

    /// The underlying graph with every edge made positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|a| a.abs()).collect(),
        }
    }

    pub fn is_unsigned(&self) -> bool {
        self.adj.iter().all(|&a| a >= 0)
    }

    /// Flips the sign of every edge with exactly one endpoint in `x`.
    pub fn switch(&self, x: &VertexSet) -> Result<SignedGraph, GraphError> {
        let mask = x.mask(self.n)?;
        Ok(self.switch_mask(&mask))
    }

    pub(crate) fn switch_mask(&self, mask: &[bool]) -> SignedGraph {
        let n = self.n;
        let mut adj = self.adj.clone();
        for i in 0..n {
            for j in 0..n {
                if mask[i] != mask[j] {
                    adj[i * n + j] = -adj[i * n + j];
                }
            }
        }
        SignedGraph { n, adj }
    }

    /// The negative: every entry of the adjacency matrix multiplied by -1.
    pub fn negate(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|a| -a).collect(),
        }
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in the order of `s`.
    pub fn induced(&self, s: &VertexSet) -> Result<SignedGraph, GraphError> {
        s.validate(self.n)?;
        Ok(self.induced_unchecked(s.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, s: &[usize]) -> SignedGraph {
        let k = s.len();
        let mut adj = Vec::with_capacity(k * k);
        for &u in s {
            for &v in s {
                adj.push(self.entry(u, v));
            }
        }
        SignedGraph { n: k, adj }
    }

    /// Reorders vertices: vertex `i` of the result is vertex `order[i]` of
    /// `self`. `order` must be a permutation of `0..n`.
    pub fn reordered(&self, order: &[usize]) -> Result<SignedGraph, GraphError> {
        check_permutation(order, self.n)?;
        Ok(self.induced_unchecked(order))
    }

    /// Applies the vertex map `phi`: vertex `v` of `self` becomes `phi[v]`.
    pub fn relabel(&self, phi: &[usize]) -> Result<SignedGraph, GraphError> {
        check_permutation(phi, self.n)?;
        let n = self.n;
        let mut out = SignedGraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                out.adj[phi[u] * n + phi[v]] = self.entry(u, v);
            }
        }
        Ok(out)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let n = self.n + other.n;
        let mut out = SignedGraph::empty(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.adj[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.adj[(i + self.n) * n + j + self.n] = other.entry(i, j);
            }
        }
        out
    }

    /// Connected components of the underlying graph. Each component is
    /// listed in BFS order from its lowest vertex; components are ordered by
    /// their lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All off-diagonal pairs adjacent; graphs of order at most one count.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.adjacent(i, j)))
    }

    /// Two-colourability of the underlying graph.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap_or(false);
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn structure(&self) -> StructureFlags {
        let comps = self.components();
        let has_isolated_vertex = comps.iter().any(|c| c.len() == 1);
        let has_isolated_edge = comps.iter().any(|c| c.len() == 2);
        StructureFlags {
            connected: comps.len() <= 1,
            complete: self.is_complete(),
            bipartite: self.is_bipartite(),
            has_isolated_vertex,
            has_isolated_edge,
            min_degree: (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0),
        }
    }

    /// Switching signs making every BFS-tree edge positive.
    ///
    /// Trees are grown from the lowest vertex of each component; the root
    /// keeps sign `+1`. Returns the vertex signs as a mask of negated
    /// vertices.
    pub(crate) fn tree_switching(&self) -> Vec<bool> {
        let mut negated = vec![false; self.n];
        let mut seen = vec![false; self.n];
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        // sign(v) = sign(u) * A[u][v]
                        negated[v] = negated[u] ^ (self.entry(u, v) < 0);
                        queue.push_back(v);
                    }
                }
            }
        }
        negated
    }

    /// The switching-equivalent graph in which every BFS-tree edge is
    /// positive, together with the switching set that produces it.
    pub fn tree_normalized(&self) -> (SignedGraph, VertexSet) {
        let mask = self.tree_switching();
        (self.switch_mask(&mask), VertexSet::from_mask(&mask))
    }

    /// A switching set that makes every edge positive, if one exists.
    pub fn balancing_switch(&self) -> Option<VertexSet> {
        let (normal, set) = self.tree_normalized();
        normal.is_unsigned().then_some(set)
    }

    /// True iff some switching makes every edge positive.
    pub fn is_balanced(&self) -> bool {
        let (normal, _) = self.tree_normalized();
        normal.is_unsigned()
    }

    /// True iff the negative is balanced.
    pub fn is_antibalanced(&self) -> bool {
        self.negate().is_balanced()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| i64::from(self.entry(i, j)))
    }
}

pub(crate) fn check_permutation(p: &[usize], n: usize) -> Result<(), GraphError> {
    if p.len() != n {
        return Err(GraphError::InvalidMatrix(format!(
            "permutation has length {} but the graph has order {n}",
            p.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in p {
        if v >= n {
            return Err(GraphError::InvalidVertex { vertex: v, n });
        }
        if seen[v] {
            return Err(GraphError::DuplicateVertex(v));
        }
        seen[v] = true;
    }
    Ok(())
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph({})", self.to_sg1())
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sg1())
    }
}

/// Small named graphs used throughout the tests and the catalog.
pub mod named {
    use super::SignedGraph;

    /// The path on `n` vertices, all edges positive.
    pub fn path(n: usize) -> SignedGraph {
        let mut g = SignedGraph::empty(n);
        for i in 1..n {
            g.set(i - 1, i, 1);
        }
        g
    }

    /// The cycle on `n >= 3` vertices, all edges positive.
    pub fn cycle(n: usize) -> SignedGraph {
        let mut g = path(n);
        if n >= 3 {
            g.set(n - 1, 0, 1);
        }
        g
    }

    /// The complete graph on `n` vertices, all edges positive.
    pub fn complete(n: usize) -> SignedGraph {
        let mut g = SignedGraph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.set(i, j, 1);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn k3_one_negative() -> SignedGraph {
        SignedGraph::from_edges(3, &[(0, 1, -1), (0, 2, 1), (1, 2, 1)]).unwrap()
    }

    fn c4_one_negative() -> SignedGraph {
        SignedGraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1)]).unwrap()
    }

    #[test]
    fn build_small_graphs() {
        let k2 = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(k2.entries(), &[0, 1, 1, 0]);
        let k3 = k3_one_negative();
        assert_eq!(k3.entry(1, 0), -1);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.negative_edge_count(), 1);
        let c4 = c4_one_negative();
        assert_eq!(c4.entry(0, 3), -1);
        assert!(c4.row(1).iter().all(|&a| a >= 0));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            SignedGraph::from_edges(3, &[(1, 1, 1)]),
            Err(GraphError::Loop(1))
        );
        assert_eq!(
            SignedGraph::from_edges(3, &[(0, 3, 1)]),
            Err(GraphError::EdgeOutOfRange { i: 0, j: 3, n: 3 })
        );
        assert_eq!(
            SignedGraph::from_edges(3, &[(0, 1, 1), (1, 0, -1)]),
            Err(GraphError::DuplicateEdge { i: 1, j: 0 })
        );
        assert!(SignedGraph::from_edges(3, &[(0, 1, 2)]).is_err());
    }

    #[test]
    fn from_rows_validates() {
        assert!(SignedGraph::from_rows(&[vec![0, 1], vec![-1, 0]]).is_err());
        assert!(SignedGraph::from_rows(&[vec![1, 0], vec![0, 0]]).is_err());
        assert!(SignedGraph::from_rows(&[vec![0, 2], vec![2, 0]]).is_err());
        assert!(SignedGraph::from_rows(&[vec![0, -1], vec![-1, 0]]).is_ok());
    }

    #[test]
    fn switching_examples() {
        let k3 = k3_one_negative();
        assert_eq!(k3.switch(&VertexSet::empty()).unwrap(), k3);
        assert_eq!(k3.switch(&VertexSet::all(3)).unwrap(), k3);
        let switched = k3.switch(&VertexSet::new([0]).unwrap()).unwrap();
        let expected = SignedGraph::from_edges(3, &[(0, 1, 1), (0, 2, -1), (1, 2, 1)]).unwrap();
        assert_eq!(switched, expected);
        let product = |g: &SignedGraph| g.entry(0, 1) * g.entry(1, 2) * g.entry(2, 0);
        assert_eq!(product(&k3), -1);
        assert_eq!(product(&switched), -1);
        assert!(k3.switch(&VertexSet::new([5]).unwrap()).is_err());
    }

    #[test]
    fn negation_examples() {
        let k2 = SignedGraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(k2.negate().entry(0, 1), -1);
        assert_eq!(SignedGraph::empty(4).negate(), SignedGraph::empty(4));
        let neg = complete(3).negate();
        assert!(neg.edges().iter().all(|e| e.2 == Sign::Negative));
        assert_eq!(neg.negate(), complete(3));
    }

    #[test]
    fn induced_examples() {
        let k3 = k3_one_negative();
        assert_eq!(k3.induced(&VertexSet::all(3)).unwrap(), k3);
        let k2 = k3.induced(&VertexSet::new([0, 1]).unwrap()).unwrap();
        assert_eq!(k2, SignedGraph::from_edges(2, &[(0, 1, -1)]).unwrap());
        // vertices 3, 0, 1 of the one-negative C4: edges 3-0 (negative), 0-1
        let p3 = c4_one_negative()
            .induced(&VertexSet::new([3, 0, 1]).unwrap())
            .unwrap();
        assert_eq!(
            p3,
            SignedGraph::from_edges(3, &[(0, 1, -1), (1, 2, 1)]).unwrap()
        );
        assert!(k3.induced(&VertexSet::new([0, 3]).unwrap()).is_err());
    }

    #[test]
    fn structure_examples() {
        let k2 = complete(2).structure();
        assert!(k2.connected && k2.complete && k2.bipartite && k2.has_isolated_edge);
        let c4 = c4_one_negative().structure();
        assert!(c4.connected && !c4.complete && c4.bipartite);
        assert_eq!(c4.min_degree, 2);
        let union = complete(3).disjoint_union(&complete(2)).structure();
        assert!(!union.connected && union.has_isolated_edge && !union.bipartite);
        let empty = SignedGraph::empty(0).structure();
        assert!(empty.connected && empty.complete && empty.bipartite);
        assert!(SignedGraph::empty(1).is_complete());
        assert!(!SignedGraph::empty(2).is_complete());
        assert!(SignedGraph::empty(3).structure().has_isolated_vertex);
    }

    #[test]
    fn balance_examples() {
        assert!(cycle(5).is_balanced());
        assert!(!k3_one_negative().is_balanced());
        assert!(k3_one_negative().is_antibalanced());
        let c4 = c4_one_negative();
        for v in 0..4 {
            let s = c4.switch(&VertexSet::new([v]).unwrap()).unwrap();
            assert!(!s.is_balanced());
        }
        let g = path(4).switch(&VertexSet::new([1, 3]).unwrap()).unwrap();
        let x = g.balancing_switch().unwrap();
        assert!(g.switch(&x).unwrap().is_unsigned());
        assert!(SignedGraph::empty(0).is_balanced());
    }

    #[test]
    fn relabel_and_reorder_are_inverse() {
        let g = c4_one_negative();
        let phi = [2, 0, 3, 1];
        let h = g.relabel(&phi).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(h.entry(phi[u], phi[v]), g.entry(u, v));
            }
        }
        assert_eq!(h.reordered(&phi).unwrap(), g);
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
    }
}
