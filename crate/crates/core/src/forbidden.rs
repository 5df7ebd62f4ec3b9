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

//! Forbidden induced subgraphs.
//!
//! An induced subgraph of a member whose exceptional eigenvalues satisfy
//! `s < -1 < 1 < r` has, by interlacing, at most one eigenvalue above `1`
//! and at most one below `-1`. Every catalog item is checked against that
//! bound when the catalog is built, so a mistyped item fails loudly instead
//! of pruning real members.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::census::{signing_classes, switching_isomorphic};
use crate::graph::{named, SignedGraph, VertexSet};
use crate::sg1::Sg1Error;
use crate::spectra::obeys_interlacing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForbiddenError {
    #[error("catalog item `{0}` obeys the interlacing bound for some signing")]
    Unverified(String),
    #[error("line {line}: expected `SIGNED SG1 ...` or `ALLSIGN SG1 ...`")]
    BadTag { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: Sg1Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenKind {
    /// Forbidden up to switching isomorphism and negation.
    Signed,
    /// The underlying graph is forbidden with every signing.
    AllSignings,
    /// Induced paths on at least `min_order` vertices.
    PathRule,
    /// Induced cycles on at least `min_order` vertices.
    CycleRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenItem {
    pub label: String,
    pub kind: ForbiddenKind,
    /// The graph itself, or for rules the smallest instance.
    pub graph: SignedGraph,
}

impl ForbiddenItem {
    fn new(label: &str, kind: ForbiddenKind, graph: SignedGraph) -> ForbiddenItem {
        ForbiddenItem {
            label: label.to_string(),
            kind,
            graph,
        }
    }

    pub fn min_order(&self) -> usize {
        self.graph.order()
    }

    /// Rule instance on `n` vertices; the item graph itself for the other
    /// kinds when `n` matches its order.
    pub fn instantiate(&self, n: usize) -> Option<SignedGraph> {
        match self.kind {
            ForbiddenKind::PathRule if n >= self.min_order() => Some(named::path(n)),
            ForbiddenKind::CycleRule if n >= self.min_order() => Some(named::cycle(n)),
            ForbiddenKind::Signed | ForbiddenKind::AllSignings if n == self.min_order() => {
                Some(self.graph.clone())
            }
            _ => None,
        }
    }
}

impl fmt::Display for ForbiddenItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:?}, {})", self.label, self.kind, self.graph)
    }
}

fn edges(n: usize, list: &[(usize, usize, i8)]) -> SignedGraph {
    SignedGraph::from_edges(n, list).expect("catalog edge lists are valid")
}

/// The built-in items. Vertex names follow the drawings: `a` bottom left,
/// `b` bottom right, `c` left, `d` right, `f` top, `e` the centre of the
/// second signed drawing; the six-vertex unsigned drawings use
/// `p q r s t u` left to right, bottom to top.
pub fn builtin_items() -> Vec<ForbiddenItem> {
    use ForbiddenKind::*;
    vec![
        // 4-cycle, bottom edge dashed
        ForbiddenItem::new(
            "signed-1",
            Signed,
            edges(4, &[(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]),
        ),
        // a b c d f e = 0..5: centre e joined to all, a-b, c-d, c-f, d-f
        ForbiddenItem::new(
            "signed-2",
            Signed,
            edges(
                6,
                &[
                    (5, 0, 1),
                    (5, 1, 1),
                    (5, 2, 1),
                    (5, 3, 1),
                    (5, 4, 1),
                    (0, 1, 1),
                    (2, 3, 1),
                    (2, 4, 1),
                    (3, 4, 1),
                ],
            ),
        ),
        // a b c d f = 0..4: all pairs except b-f, a-b dashed
        ForbiddenItem::new(
            "signed-3",
            Signed,
            edges(
                5,
                &[
                    (0, 1, -1),
                    (0, 2, 1),
                    (0, 3, 1),
                    (0, 4, 1),
                    (1, 2, 1),
                    (1, 3, 1),
                    (2, 3, 1),
                    (2, 4, 1),
                    (3, 4, 1),
                ],
            ),
        ),
        // a b c d f = 0..4: pentagon a-b-d-f-c-a
        ForbiddenItem::new(
            "all-1",
            AllSignings,
            edges(5, &[(0, 1, 1), (1, 3, 1), (3, 4, 1), (4, 2, 1), (2, 0, 1)]),
        ),
        // pentagon with chord c-d
        ForbiddenItem::new(
            "all-2",
            AllSignings,
            edges(
                5,
                &[
                    (0, 1, 1),
                    (1, 3, 1),
                    (3, 4, 1),
                    (4, 2, 1),
                    (2, 0, 1),
                    (2, 3, 1),
                ],
            ),
        ),
        // a-d, a-c, c-d, b-d, d-f, c-f
        ForbiddenItem::new(
            "all-3",
            AllSignings,
            edges(
                5,
                &[
                    (0, 3, 1),
                    (0, 2, 1),
                    (2, 3, 1),
                    (1, 3, 1),
                    (3, 4, 1),
                    (2, 4, 1),
                ],
            ),
        ),
        // p q r s t u = 0..5: p-t, p-s, q-t, q-s, s-t, q-u, u-r
        ForbiddenItem::new(
            "all-4",
            AllSignings,
            edges(
                6,
                &[
                    (0, 4, 1),
                    (0, 3, 1),
                    (1, 4, 1),
                    (1, 3, 1),
                    (3, 4, 1),
                    (1, 5, 1),
                    (5, 2, 1),
                ],
            ),
        ),
        // p q r s t u = 0..5 with r, u the right column: square p-t-q-s and
        // triangle q-u-r
        ForbiddenItem::new(
            "all-5",
            AllSignings,
            edges(
                6,
                &[
                    (0, 4, 1),
                    (0, 3, 1),
                    (4, 1, 1),
                    (3, 1, 1),
                    (1, 5, 1),
                    (1, 2, 1),
                    (5, 2, 1),
                ],
            ),
        ),
        ForbiddenItem::new("path", PathRule, named::path(6)),
        ForbiddenItem::new("cycle", CycleRule, named::cycle(5)),
    ]
}

/// Whether a concrete graph exceeds the interlacing bound.
fn violates(g: &SignedGraph) -> bool {
    !obeys_interlacing(g)
}

/// Checks that an item is forbidden. Rules are checked at their smallest
/// instance; use [`verify_forbidden_at`] for larger ones.
pub fn verify_forbidden(item: &ForbiddenItem) -> bool {
    verify_forbidden_at(item, item.min_order())
}

/// Checks a rule instance (or a fixed item) on `n` vertices. Fixed signed
/// items are checked as given; the others under every signing up to
/// switching.
pub fn verify_forbidden_at(item: &ForbiddenItem, n: usize) -> bool {
    let Some(g) = item.instantiate(n) else {
        return false;
    };
    match item.kind {
        ForbiddenKind::Signed => violates(&g),
        _ => signing_classes(&g).iter().all(violates),
    }
}

/// Signings of a rule instance that obey the interlacing bound.
pub fn admissible_signings(item: &ForbiddenItem, n: usize) -> Vec<SignedGraph> {
    item.instantiate(n)
        .map(|g| {
            signing_classes(&g)
                .into_iter()
                .filter(|s| !violates(s))
                .collect()
        })
        .unwrap_or_default()
}

/// A verified list of forbidden items.
#[derive(Debug, Clone)]
pub struct Catalog {
    items: Vec<ForbiddenItem>,
}

impl Catalog {
    /// Accepts the items only if each one passes [`verify_forbidden`].
    /// Rule items are exempt: when scanning they only match signings that
    /// violate the bound.
    pub fn new(items: Vec<ForbiddenItem>) -> Result<Catalog, ForbiddenError> {
        for item in &items {
            let rule = matches!(
                item.kind,
                ForbiddenKind::PathRule | ForbiddenKind::CycleRule
            );
            if !rule && !verify_forbidden(item) {
                return Err(ForbiddenError::Unverified(item.label.clone()));
            }
        }
        Ok(Catalog { items })
    }

    pub fn items(&self) -> &[ForbiddenItem] {
        &self.items
    }

    /// Parses `SIGNED SG1 ...` and `ALLSIGN SG1 ...` lines, skipping blank
    /// and `#` lines, and appends the path and cycle rules.
    pub fn parse(text: &str) -> Result<Catalog, ForbiddenError> {
        let mut items = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (tag, rest) = line
                .split_once(char::is_whitespace)
                .ok_or(ForbiddenError::BadTag { line: i + 1 })?;
            let kind = match tag {
                "SIGNED" => ForbiddenKind::Signed,
                "ALLSIGN" => ForbiddenKind::AllSignings,
                _ => return Err(ForbiddenError::BadTag { line: i + 1 }),
            };
            let graph =
                SignedGraph::from_sg1(rest.trim()).map_err(|source| ForbiddenError::Graph {
                    line: i + 1,
                    source,
                })?;
            items.push(ForbiddenItem::new(&format!("line-{}", i + 1), kind, graph));
        }
        items.push(ForbiddenItem::new(
            "path",
            ForbiddenKind::PathRule,
            named::path(6),
        ));
        items.push(ForbiddenItem::new(
            "cycle",
            ForbiddenKind::CycleRule,
            named::cycle(5),
        ));
        Catalog::new(items)
    }
}

/// The built-in catalog, verified on first use.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| match Catalog::new(builtin_items()) {
        Ok(c) => c,
        Err(e) => panic!("built-in forbidden catalog failed verification: {e}"),
    })
}

/// An induced copy of a catalog item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub item: usize,
    pub label: String,
    pub vertices: VertexSet,
    /// Item vertex `i` corresponds to `vertices[mapping[i]]` position in the
    /// induced subgraph; empty for rules.
    pub mapping: Vec<usize>,
    pub negated: bool,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.label, self.vertices)
    }
}

/// Default largest subset size for [`scan`].
pub const DEFAULT_MAX_SIZE: usize = 6;

fn degree_profile(g: &SignedGraph) -> (usize, Vec<usize>) {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    (g.edge_count(), d)
}

fn is_path(g: &SignedGraph) -> bool {
    let n = g.order();
    let (e, d) = degree_profile(g);
    n >= 2 && e == n - 1 && g.is_connected() && d[n - 1] <= 2
}

fn is_cycle(g: &SignedGraph) -> bool {
    let n = g.order();
    n >= 3 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

/// Matches `h` against `item`, returning the negation flag and mapping.
fn matches_item(item: &ForbiddenItem, h: &SignedGraph) -> Option<(Vec<usize>, bool)> {
    match item.kind {
        ForbiddenKind::Signed => {
            if degree_profile(h) != degree_profile(&item.graph) {
                return None;
            }
            if let Some(w) = switching_isomorphic(&item.graph, h) {
                return Some((w.perm, false));
            }
            switching_isomorphic(&item.graph.negate(), h).map(|w| (w.perm, true))
        }
        ForbiddenKind::AllSignings => {
            if degree_profile(h) != degree_profile(&item.graph) {
                return None;
            }
            switching_isomorphic(&item.graph.underlying(), &h.underlying()).map(|w| (w.perm, false))
        }
        ForbiddenKind::PathRule => (h.order() >= item.min_order() && is_path(h) && violates(h))
            .then(|| (Vec::new(), false)),
        ForbiddenKind::CycleRule => (h.order() >= item.min_order() && is_cycle(h) && violates(h))
            .then(|| (Vec::new(), false)),
    }
}

/// Re-checks that a violation describes an induced copy of its item.
pub fn check_violation(cat: &Catalog, g: &SignedGraph, v: &Violation) -> bool {
    let Some(item) = cat.items().get(v.item) else {
        return false;
    };
    let Ok(h) = g.induced(&v.vertices) else {
        return false;
    };
    matches_item(item, &h).is_some()
}

/// First induced copy of a catalog item on at most `max_size` vertices.
/// Subsets are visited by size, then lexicographically; items are tried in
/// catalog order.
pub fn scan_with(cat: &Catalog, g: &SignedGraph, max_size: usize) -> Option<Violation> {
    let n = g.order();
    let min_item = cat
        .items()
        .iter()
        .map(ForbiddenItem::min_order)
        .min()
        .unwrap_or(usize::MAX);
    for k in min_item..=max_size.min(n) {
        let relevant: Vec<(usize, &ForbiddenItem)> = cat
            .items()
            .iter()
            .enumerate()
            .filter(|(_, it)| match it.kind {
                ForbiddenKind::PathRule | ForbiddenKind::CycleRule => k >= it.min_order(),
                _ => k == it.min_order(),
            })
            .collect();
        if relevant.is_empty() {
            continue;
        }
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let h = g.induced_unchecked(&subset);
            for &(idx, item) in &relevant {
                if let Some((mapping, negated)) = matches_item(item, &h) {
                    return Some(Violation {
                        item: idx,
                        label: item.label.clone(),
                        vertices: VertexSet::new(subset.iter().copied())
                            .expect("subset is duplicate free"),
                        mapping,
                        negated,
                    });
                }
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

pub fn scan(g: &SignedGraph, max_size: usize) -> Option<Violation> {
    scan_with(catalog(), g, max_size)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
