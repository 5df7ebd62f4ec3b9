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

//! Individualization-refinement search for switching isomorphisms and
//! canonical forms.
//!
//! Colour refinement runs on quantities that switching does not change:
//! degrees, the diagonal of `A^3`, and for each pair `(u, v)` the values
//! `|A_uv|`, `|A^2_uv|` and `A_uv A^2_uv`. Two vertices `u`, `v` are signed
//! twins when `A_uw = e A_vw` for a fixed sign `e` and every other `w`; the
//! transposition `(u v)`, followed by switching at `u` when `e = -1`, is then
//! a switching automorphism, so only one twin per cell needs exploring.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{SignedGraph, VertexSet};

type Colouring = Vec<u32>;

/// Switching-invariant data of a graph, computed once per search.
pub(crate) struct Prepared {
    n: usize,
    adj: Vec<i8>,
    vertex_key: Vec<(usize, i64)>,
    pair_key: Vec<(u8, u32, i32)>,
    twins: Vec<bool>,
}

impl Prepared {
    pub(crate) fn new(g: &SignedGraph) -> Prepared {
        let n = g.order();
        let adj = g.entries().to_vec();
        let mut sq = vec![0i32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = adj[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    sq[i * n + j] += i32::from(a) * i32::from(adj[k * n + j]);
                }
            }
        }
        let vertex_key = (0..n)
            .map(|v| {
                let cube: i64 = (0..n)
                    .map(|w| i64::from(adj[v * n + w]) * i64::from(sq[w * n + v]))
                    .sum();
                (g.degree(v), cube)
            })
            .collect();
        let pair_key = (0..n * n)
            .map(|idx| {
                let a = adj[idx];
                let s = sq[idx];
                (a.unsigned_abs(), s.unsigned_abs(), i32::from(a) * s)
            })
            .collect();
        let mut twins = vec![false; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let t = signed_twins(&adj, n, u, v);
                twins[u * n + v] = t;
                twins[v * n + u] = t;
            }
        }
        Prepared {
            n,
            adj,
            vertex_key,
            pair_key,
            twins,
        }
    }

    #[inline]
    fn a(&self, i: usize, j: usize) -> i8 {
        self.adj[i * self.n + j]
    }

    fn is_twin(&self, u: usize, v: usize) -> bool {
        self.twins[u * self.n + v]
    }
}

fn signed_twins(adj: &[i8], n: usize, u: usize, v: usize) -> bool {
    let mut sign = 0i8;
    for w in 0..n {
        if w == u || w == v {
            continue;
        }
        let (x, y) = (adj[u * n + w], adj[v * n + w]);
        if (x == 0) != (y == 0) {
            return false;
        }
        if x == 0 {
            continue;
        }
        let e = x * y;
        if sign == 0 {
            sign = e;
        } else if sign != e {
            return false;
        }
    }
    true
}

/// Initial colouring of several graphs on a shared colour scale.
fn initial(graphs: &[&Prepared]) -> Vec<Colouring> {
    let mut keys: Vec<(usize, i64)> = graphs
        .iter()
        .flat_map(|g| g.vertex_key.iter().copied())
        .collect();
    keys.sort_unstable();
    keys.dedup();
    graphs
        .iter()
        .map(|g| {
            g.vertex_key
                .iter()
                .map(|k| keys.binary_search(k).expect("key present") as u32)
                .collect()
        })
        .collect()
}

fn histogram(c: &Colouring) -> Vec<u32> {
    let k = c.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut h = vec![0u32; k];
    for &x in c {
        h[x as usize] += 1;
    }
    h
}

/// Own colour and the sorted (pair key, neighbour colour) list of a vertex.
type RefineKey = (u32, Vec<((u8, u32, i32), u32)>);

/// Refines the colourings of all graphs jointly until stable. Colours are
/// ranks of refinement keys, so they mean the same in every graph. Returns
/// false as soon as the colour histograms disagree.
fn refine(graphs: &[&Prepared], cols: &mut [Colouring]) -> bool {
    let mut classes = histogram(&cols[0]).len();
    loop {
        let keyed: Vec<Vec<RefineKey>> = graphs
            .iter()
            .zip(cols.iter())
            .map(|(g, c)| {
                (0..g.n)
                    .map(|v| {
                        let mut nb: Vec<((u8, u32, i32), u32)> = (0..g.n)
                            .filter(|&w| w != v)
                            .filter_map(|w| {
                                let k = g.pair_key[v * g.n + w];
                                (k != (0, 0, 0)).then_some((k, c[w]))
                            })
                            .collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut all: Vec<&RefineKey> = keyed.iter().flat_map(|k| k.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let rank: BTreeMap<&RefineKey, u32> = all
            .iter()
            .enumerate()
            .map(|(i, k)| (*k, i as u32))
            .collect();
        for (c, k) in cols.iter_mut().zip(keyed.iter()) {
            for (slot, key) in c.iter_mut().zip(k.iter()) {
                *slot = rank[key];
            }
        }
        let first = histogram(&cols[0]);
        if cols[1..].iter().any(|c| histogram(c) != first) {
            return false;
        }
        if first.len() == classes {
            return true;
        }
        classes = first.len();
    }
}

/// Gives `v` a colour of its own placed just before the rest of its cell.
fn individualize(c: &Colouring, v: usize) -> Colouring {
    c.iter()
        .enumerate()
        .map(|(u, &x)| 2 * x + u32::from(u != v))
        .collect()
}

fn compress(cols: &mut [Colouring]) {
    let mut used: Vec<u32> = cols.iter().flat_map(|c| c.iter().copied()).collect();
    used.sort_unstable();
    used.dedup();
    for c in cols.iter_mut() {
        for x in c.iter_mut() {
            *x = used.binary_search(x).expect("colour present") as u32;
        }
    }
}

/// First colour class with more than one vertex.
fn target_cell(c: &Colouring) -> Option<u32> {
    histogram(c).iter().position(|&k| k > 1).map(|p| p as u32)
}

fn cell(c: &Colouring, colour: u32) -> Vec<usize> {
    (0..c.len()).filter(|&v| c[v] == colour).collect()
}

/// A vertex bijection and a switching set with
/// `switch(relabel(g, perm), switching) == h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    /// Vertex `v` of the first graph corresponds to `perm[v]` of the second.
    pub perm: Vec<usize>,
    /// Switching set, in the labels of the second graph.
    pub switching: VertexSet,
}

impl IsoWitness {
    pub fn apply(&self, g: &SignedGraph) -> SignedGraph {
        g.relabel(&self.perm)
            .and_then(|r| r.switch(&self.switching))
            .expect("witness is a valid permutation and vertex set")
    }

    pub fn verify(&self, g: &SignedGraph, h: &SignedGraph) -> bool {
        g.order() == h.order()
            && g.relabel(&self.perm)
                .and_then(|r| r.switch(&self.switching))
                .is_ok_and(|r| &r == h)
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm {:?}, switch {}", self.perm, self.switching)
    }
}

/// Sign parities `d` on the mapped vertices with
/// `d_a d_b = G_ab H_{phi a, phi b}`, checked by propagation.
fn partial_consistent(g: &Prepared, h: &Prepared, pairs: &[(usize, usize)]) -> bool {
    let k = pairs.len();
    for i in 0..k {
        for j in i + 1..k {
            let (a, x) = pairs[i];
            let (b, y) = pairs[j];
            if (g.a(a, b) == 0) != (h.a(x, y) == 0) {
                return false;
            }
        }
    }
    let mut parity: Vec<Option<i8>> = vec![None; k];
    for start in 0..k {
        if parity[start].is_some() {
            continue;
        }
        parity[start] = Some(1);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let pi = parity[i].expect("assigned");
            for j in 0..k {
                let rel = g.a(pairs[i].0, pairs[j].0) * h.a(pairs[i].1, pairs[j].1);
                if rel == 0 {
                    continue;
                }
                match parity[j] {
                    None => {
                        parity[j] = Some(pi * rel);
                        stack.push(j);
                    }
                    Some(pj) if pj != pi * rel => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn singleton_pairs(cg: &Colouring, ch: &Colouring) -> Vec<(usize, usize)> {
    let hist = histogram(cg);
    let mut where_h = vec![usize::MAX; hist.len()];
    for (v, &c) in ch.iter().enumerate() {
        if hist[c as usize] == 1 {
            where_h[c as usize] = v;
        }
    }
    cg.iter()
        .enumerate()
        .filter(|&(_, &c)| hist[c as usize] == 1)
        .map(|(v, &c)| (v, where_h[c as usize]))
        .collect()
}

/// Decides switching isomorphism; the returned witness has been checked.
pub fn switching_isomorphic(g: &SignedGraph, h: &SignedGraph) -> Option<IsoWitness> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let pg = Prepared::new(g);
    let ph = Prepared::new(h);
    let mut cols = initial(&[&pg, &ph]);
    if !refine(&[&pg, &ph], &mut cols) {
        return None;
    }
    let [cg, ch]: [Colouring; 2] = cols.try_into().expect("two colourings");
    let found = iso_search(&pg, &ph, g, h, cg, ch)?;
    debug_assert!(found.verify(g, h));
    found.verify(g, h).then_some(found)
}

fn iso_search(
    pg: &Prepared,
    ph: &Prepared,
    g: &SignedGraph,
    h: &SignedGraph,
    cg: Colouring,
    ch: Colouring,
) -> Option<IsoWitness> {
    if !partial_consistent(pg, ph, &singleton_pairs(&cg, &ch)) {
        return None;
    }
    let Some(target) = target_cell(&cg) else {
        return leaf_witness(g, h, &cg, &ch);
    };
    let v = cell(&cg, target)[0];
    let mut tried: Vec<usize> = Vec::new();
    for w in cell(&ch, target) {
        if tried.iter().any(|&u| ph.is_twin(u, w)) {
            continue;
        }
        tried.push(w);
        let mut cols = vec![individualize(&cg, v), individualize(&ch, w)];
        compress(&mut cols);
        if !refine(&[pg, ph], &mut cols) {
            continue;
        }
        let [ng, nh]: [Colouring; 2] = cols.try_into().expect("two colourings");
        if let Some(found) = iso_search(pg, ph, g, h, ng, nh) {
            return Some(found);
        }
    }
    None
}

fn leaf_witness(
    g: &SignedGraph,
    h: &SignedGraph,
    cg: &Colouring,
    ch: &Colouring,
) -> Option<IsoWitness> {
    let n = g.order();
    let mut by_colour = vec![0usize; n];
    for (w, &c) in ch.iter().enumerate() {
        by_colour[c as usize] = w;
    }
    let perm: Vec<usize> = cg.iter().map(|&c| by_colour[c as usize]).collect();
    let pulled = h.reordered(&perm).expect("perm is a permutation");
    let mut product = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (g.entry(i, j), pulled.entry(i, j));
            if (a == 0) != (b == 0) {
                return None;
            }
            product[i * n + j] = a * b;
        }
    }
    let q = SignedGraph::from_entries(n, product).expect("product of signed graphs");
    let d = q.balancing_switch()?;
    let switching = VertexSet::new(d.iter().map(|v| perm[v])).expect("image of a vertex set");
    Some(IsoWitness { perm, switching })
}

/// Canonical representative of a switching-isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> SignedGraph {
        SignedGraph::from_sg1(&self.0).expect("canonical codes are valid SG1")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical code with the relabelling that produces it: switching `g` at
/// `switching` and then listing vertices in `order` gives `code.graph()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub order: Vec<usize>,
    pub switching: VertexSet,
}

/// Minimum SG1 string of the tree-normalized relabelled graph over the
/// leaves of the refinement search. Exhaustive over leaves apart from twin
/// pruning, so meant for graphs of small order.
pub fn canonical_form(g: &SignedGraph) -> CanonicalForm {
    let p = Prepared::new(g);
    let mut cols = initial(&[&p]);
    refine(&[&p], &mut cols);
    let start = cols.pop().expect("one colouring");
    let mut best: Option<CanonicalForm> = None;
    canon_search(&p, g, start, &mut best);
    best.expect("search reaches at least one leaf")
}

pub fn canonical_code(g: &SignedGraph) -> CanonicalCode {
    canonical_form(g).code
}

fn canon_search(p: &Prepared, g: &SignedGraph, c: Colouring, best: &mut Option<CanonicalForm>) {
    let Some(target) = target_cell(&c) else {
        let mut order = vec![0usize; c.len()];
        for (v, &x) in c.iter().enumerate() {
            order[x as usize] = v;
        }
        let relabelled = g
            .reordered(&order)
            .expect("leaf colouring is a permutation");
        let (normal, switched) = relabelled.tree_normalized();
        let code = CanonicalCode(normal.to_sg1());
        if best.as_ref().is_none_or(|b| code < b.code) {
            let switching =
                VertexSet::new(switched.iter().map(|i| order[i])).expect("image of a vertex set");
            *best = Some(CanonicalForm {
                code,
                order,
                switching,
            });
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in cell(&c, target) {
        if tried.iter().any(|&u| p.is_twin(u, v)) {
            continue;
        }
        tried.push(v);
        let mut cols = vec![individualize(&c, v)];
        compress(&mut cols);
        refine(&[p], &mut cols);
        canon_search(p, g, cols.pop().expect("one colouring"), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn k3_one_negative() -> SignedGraph {
        SignedGraph::from_edges(3, &[(0, 1, -1), (0, 2, 1), (1, 2, 1)]).unwrap()
    }

    #[test]
    fn iso_examples() {
        let g = k3_one_negative();
        let x = VertexSet::new([1]).unwrap();
        let w = switching_isomorphic(&g, &g.switch(&x).unwrap()).unwrap();
        assert!(w.verify(&g, &g.switch(&x).unwrap()));

        let all_negative = named::complete(3).negate();
        assert!(switching_isomorphic(&g, &all_negative).is_some());
        assert!(switching_isomorphic(&g, &named::complete(3)).is_none());
        assert!(switching_isomorphic(&named::path(3), &named::complete(3)).is_none());
    }

    #[test]
    fn canonical_examples() {
        let g = k3_one_negative();
        assert_ne!(canonical_code(&g), canonical_code(&named::complete(3)));
        let x = VertexSet::new([0, 2]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&g.switch(&x).unwrap()));
        let r = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&r));
    }

    #[test]
    fn canonical_form_reproduces_code() {
        let g = SignedGraph::from_edges(
            5,
            &[
                (0, 1, -1),
                (1, 2, 1),
                (2, 3, -1),
                (3, 4, 1),
                (4, 0, 1),
                (0, 2, 1),
            ],
        )
        .unwrap();
        let f = canonical_form(&g);
        let rebuilt = g.switch(&f.switching).unwrap().reordered(&f.order).unwrap();
        assert_eq!(rebuilt, f.code.graph());
        assert_eq!(canonical_code(&f.code.graph()), f.code);
    }

    #[test]
    fn twins_detected() {
        // K4 is all twins; P3 endpoints are twins, the centre is not a twin of them.
        let p = Prepared::new(&named::complete(4));
        assert!(p.is_twin(0, 3));
        let p = Prepared::new(&named::path(3));
        assert!(p.is_twin(0, 2));
        assert!(!p.is_twin(0, 1));
    }

    #[test]
    fn empty_and_single() {
        let e = SignedGraph::empty(0);
        assert_eq!(canonical_code(&e).as_str(), "SG1 0");
        assert!(switching_isomorphic(&e, &e).is_some());
        let one = SignedGraph::empty(1);
        assert!(switching_isomorphic(&one, &one).is_some());
    }
}
