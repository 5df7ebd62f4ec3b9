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

//! Switching isomorphism, canonical codes and the exhaustive census of
//! small signed graphs.

mod classify;
mod search;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

pub use classify::{
    classify, record_json, run_census, CensusContext, CensusOptions, CensusRecord, CensusReport,
    ClassificationOutcome, OrderSummary, Verdict, Witness,
};
pub use search::{
    canonical_code, canonical_form, switching_isomorphic, CanonicalCode, CanonicalForm, IsoWitness,
};

use crate::graph::{named, SignedGraph};

/// Largest order enumerated unless a long run is requested.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Largest order accepted with the long-run flag.
pub const LONG_RUN_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("order {n} exceeds the configured maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
}

/// Filters for [`enumerate_classes`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub connected_only: bool,
    pub min_degree: usize,
    /// Largest order accepted.
    pub max_order: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            connected_only: false,
            min_degree: 0,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Edges outside a BFS spanning forest rooted at the lowest vertex of
/// each component.
pub fn cotree_edges(g: &SignedGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut tree = vec![false; n * n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree[v * n + w] = true;
                    tree[w * n + v] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    g.edges()
        .into_iter()
        .filter(|&(i, j, _)| !tree[i * n + j])
        .map(|(i, j, _)| (i, j))
        .collect()
}

/// One signing per switching class of labelled signings of the underlying
/// graph of `g`: tree edges positive, co-tree edges free.
pub fn signing_classes(g: &SignedGraph) -> Vec<SignedGraph> {
    let base = g.underlying();
    let cotree = cotree_edges(&base);
    let k = cotree.len();
    assert!(k < 31, "too many independent cycles to enumerate");
    (0u32..1 << k)
        .map(|mask| {
            let mut s = base.clone();
            for (bit, &(i, j)) in cotree.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    s.set(i, j, -1);
                }
            }
            s
        })
        .collect()
}

/// Canonical representatives of the unsigned graphs on `n` vertices, sorted
/// by code. Built by adding a vertex to every graph on `n - 1` vertices.
pub fn unsigned_graphs(n: usize) -> Vec<SignedGraph> {
    let mut level: Vec<SignedGraph> = vec![SignedGraph::empty(0)];
    for k in 1..=n {
        let codes: BTreeSet<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << (k - 1)).map(move |mask| {
                    let mut h = g.disjoint_union(&SignedGraph::empty(1));
                    for v in 0..k - 1 {
                        if mask >> v & 1 == 1 {
                            h.set(v, k - 1, 1);
                        }
                    }
                    canonical_code(&h)
                })
            })
            .collect();
        level = codes.iter().map(CanonicalCode::graph).collect();
    }
    level
}

fn passes(g: &SignedGraph, opts: &EnumerateOptions) -> bool {
    (!opts.connected_only || g.is_connected())
        && (0..g.order()).all(|v| g.degree(v) >= opts.min_degree)
}

/// Switching classes of signings of one underlying graph, by code.
pub fn classes_of_underlying(base: &SignedGraph) -> BTreeSet<CanonicalCode> {
    signing_classes(base).iter().map(canonical_code).collect()
}

/// Canonical codes of every switching class on `n` vertices passing the
/// filter, sorted. Returns `None` for classes skipped past `deadline`
/// together with the number of underlying graphs skipped.
pub fn enumerate_classes_until(
    n: usize,
    opts: &EnumerateOptions,
    deadline: Option<Instant>,
) -> Result<(Vec<CanonicalCode>, usize), CensusError> {
    if n > opts.max_order {
        return Err(CensusError::OrderTooLarge {
            n,
            max: opts.max_order,
        });
    }
    let bases: Vec<SignedGraph> = unsigned_graphs(n)
        .into_iter()
        .filter(|g| passes(g, opts))
        .collect();
    let shards: Vec<Option<BTreeSet<CanonicalCode>>> = bases
        .par_iter()
        .map(|g| {
            if deadline.is_some_and(|d| Instant::now() > d) {
                None
            } else {
                Some(classes_of_underlying(g))
            }
        })
        .collect();
    let skipped = shards.iter().filter(|s| s.is_none()).count();
    let mut codes: Vec<CanonicalCode> = shards.into_iter().flatten().flatten().collect();
    codes.sort();
    Ok((codes, skipped))
}

pub fn enumerate_classes(
    n: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<CanonicalCode>, CensusError> {
    enumerate_classes_until(n, opts, None).map(|(c, _)| c)
}

/// Number of switching classes of signed graphs on `n` vertices, by
/// averaging fixed points over relabellings composed with switchings.
pub fn burnside_class_count(n: usize) -> u128 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |i: usize, j: usize| -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a * n + b
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count_perms: u128 = 0;
    loop {
        count_perms += 1;
        // cycles of the induced action on pairs
        let mut seen = vec![false; n * n];
        let mut cycles: Vec<Vec<(usize, usize)>> = Vec::new();
        for &(i, j) in &pairs {
            if seen[index(i, j)] {
                continue;
            }
            let mut cyc = Vec::new();
            let (mut a, mut b) = (i, j);
            while !seen[index(a, b)] {
                seen[index(a, b)] = true;
                cyc.push((a, b));
                (a, b) = (perm[a], perm[b]);
            }
            cycles.push(cyc);
        }
        for signs in 0u32..1 << n {
            let d = |v: usize| signs >> v & 1 == 1;
            let mut fix: u128 = 1;
            for cyc in &cycles {
                // product of d_a d_b along the cycle
                let odd = cyc.iter().filter(|&&(a, b)| d(a) != d(b)).count() % 2 == 1;
                fix *= if odd { 1 } else { 3 };
            }
            total += fix;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total / (count_perms << n)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether the integer matrix `m` (row-major, `n x n`) has rank at most
/// `k`, by fraction-free elimination.
pub(crate) fn rank_at_most(m: &[i64], n: usize, k: usize) -> bool {
    let mut a: Vec<i128> = m.iter().map(|&x| i128::from(x)).collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut col = 0;
    while rank < n && col < n {
        let Some(p) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            col += 1;
            continue;
        };
        if rank == k {
            return false;
        }
        for c in 0..n {
            a.swap(rank * n + c, p * n + c);
        }
        let piv = a[rank * n + col];
        for r in rank + 1..n {
            for c in col + 1..n {
                a[r * n + c] = (piv * a[r * n + c] - a[r * n + col] * a[rank * n + c]) / prev;
            }
            a[r * n + col] = 0;
        }
        prev = piv;
        rank += 1;
        col += 1;
    }
    rank <= k
}

/// Whether `A^2 - I` has rank at most two, the membership test in integer
/// arithmetic.
pub fn square_rank_at_most_two(g: &SignedGraph) -> bool {
    let n = g.order();
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = (0..n)
                .map(|k| i64::from(g.entry(i, k)) * i64::from(g.entry(k, j)))
                .sum();
            m[i * n + j] = dot - i64::from(i == j);
        }
    }
    rank_at_most(&m, n, 2)
}

/// Codes of all complete signed graphs on `n` vertices in the class, from
/// the signings with positive edges at vertex 0.
pub fn complete_members(n: usize) -> BTreeSet<CanonicalCode> {
    assert!(
        n <= LONG_RUN_MAX_ORDER,
        "complete member search supports n <= 8"
    );
    let k = named::complete(n);
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let bits = free.len();
    let chunk_bits = bits.min(8);
    let chunks = 1u64 << chunk_bits;
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|hi| {
            let k = k.clone();
            let free = free.clone();
            (0u64..1 << (bits - chunk_bits)).filter_map(move |lo| {
                let mask = hi << (bits - chunk_bits) | lo;
                let mut g = k.clone();
                for (bit, &(i, j)) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        g.set(i, j, -1);
                    }
                }
                square_rank_at_most_two(&g).then(|| canonical_code(&g))
            })
        })
        .collect::<BTreeSet<_>>()
}

/// Switching classes of the underlying graph of each code, grouped.
pub fn group_by_underlying(codes: &[CanonicalCode]) -> BTreeMap<CanonicalCode, Vec<CanonicalCode>> {
    let mut out: BTreeMap<CanonicalCode, Vec<CanonicalCode>> = BTreeMap::new();
    for c in codes {
        out.entry(canonical_code(&c.graph().underlying()))
            .or_default()
            .push(c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsigned_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| unsigned_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn small_connected_classes() {
        let opts = EnumerateOptions {
            connected_only: true,
            ..EnumerateOptions::default()
        };
        assert_eq!(enumerate_classes(2, &opts).unwrap().len(), 1);
        assert_eq!(enumerate_classes(3, &opts).unwrap().len(), 3);
    }

    #[test]
    fn burnside_agrees_with_enumeration() {
        let opts = EnumerateOptions::default();
        for n in 0..=5 {
            let listed = enumerate_classes(n, &opts).unwrap().len() as u128;
            assert_eq!(listed, burnside_class_count(n), "n = {n}");
        }
    }

    #[test]
    fn order_cap() {
        let opts = EnumerateOptions::default();
        assert_eq!(
            enumerate_classes(8, &opts),
            Err(CensusError::OrderTooLarge { n: 8, max: 7 })
        );
    }

    #[test]
    fn signing_class_counts() {
        assert_eq!(signing_classes(&named::path(6)).len(), 1);
        assert_eq!(signing_classes(&named::cycle(5)).len(), 2);
        assert_eq!(signing_classes(&named::complete(4)).len(), 8);
    }

    #[test]
    fn rank_test() {
        assert!(rank_at_most(&[1, 2, 2, 4], 2, 1));
        assert!(!rank_at_most(&[1, 0, 0, 1], 2, 1));
        assert!(rank_at_most(&[0; 9], 3, 0));
        let tj =
            SignedGraph::from_rows(&[[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, -1], [1, 1, -1, 0]])
                .unwrap();
        assert!(square_rank_at_most_two(&tj));
        assert!(!square_rank_at_most_two(&named::path(4)));
    }

    #[test]
    fn complete_members_on_four() {
        // K4, its negative and the two-by-two signed complete graph
        let found = complete_members(4);
        assert_eq!(found.len(), 3);
    }
}
