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

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::search::{canonical_code, switching_isomorphic, CanonicalCode, IsoWitness};
use super::{enumerate_classes_until, CensusError, EnumerateOptions, DEFAULT_MAX_ORDER};
use crate::families::{generate, instances_of_order, Family, FamilyInstance};
use crate::forbidden::{scan, Violation, DEFAULT_MAX_SIZE};
use crate::graph::{SignedGraph, VertexSet};
use crate::linalg::inertia;
use crate::spectra::{deg1_checks, exact_spectrum, residual_coeffs, Deg1Violation, ExactSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    NotInG,
    UnsignedType,
    CompleteType,
    Family,
    DisconnectedType,
    BipartiteType,
    Unexplained,
}

impl Verdict {
    pub const ALL: [Verdict; 7] = [
        Verdict::NotInG,
        Verdict::UnsignedType,
        Verdict::CompleteType,
        Verdict::Family,
        Verdict::DisconnectedType,
        Verdict::BipartiteType,
        Verdict::Unexplained,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotInG => "NOT_IN_G",
            Verdict::UnsignedType => "UNSIGNED_TYPE",
            Verdict::CompleteType => "COMPLETE_TYPE",
            Verdict::Family => "FAMILY",
            Verdict::DisconnectedType => "DISCONNECTED_TYPE",
            Verdict::BipartiteType => "BIPARTITE_TYPE",
            Verdict::Unexplained => "UNEXPLAINED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// More than two eigenvalues outside `{1, -1}`.
    Spectrum {
        residual_degree: usize,
    },
    Forbidden(Violation),
    Deg1(Deg1Violation),
    Components(Vec<VertexSet>),
    /// Switching at `switching` (then negating if `negated`) gives an
    /// unsigned graph.
    Balance {
        switching: VertexSet,
        negated: bool,
    },
    /// `iso` maps the instance graph, negated if `negated`, onto the
    /// representative.
    Instance {
        instance: FamilyInstance,
        negated: bool,
        iso: IsoWitness,
    },
    None,
}

impl Witness {
    /// Re-checks the witness against the representative.
    pub fn check(&self, g: &SignedGraph) -> bool {
        match self {
            Witness::Spectrum { residual_degree } => {
                exact_spectrum(g).residual.degree() == *residual_degree && *residual_degree > 2
            }
            Witness::Forbidden(v) => g.induced(&v.vertices).is_ok(),
            Witness::Deg1(d) => deg1_checks(g).contains(d),
            Witness::Components(c) => {
                let listed: Vec<Vec<usize>> = c.iter().map(|s| s.as_slice().to_vec()).collect();
                listed == g.components()
            }
            Witness::Balance { switching, negated } => g.switch(switching).is_ok_and(|s| {
                let s = if *negated { s.negate() } else { s };
                s.is_unsigned()
            }),
            Witness::Instance {
                instance,
                negated,
                iso,
            } => {
                let h = generate(instance);
                let h = if *negated { h.negate() } else { h };
                iso.verify(&h, g)
            }
            Witness::None => true,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Witness::Spectrum { residual_degree } => {
                json!({"kind": "spectrum", "residual_degree": residual_degree})
            }
            Witness::Forbidden(v) => json!({
                "kind": "forbidden",
                "item": v.label,
                "vertices": v.vertices.as_slice(),
                "negated": v.negated,
            }),
            Witness::Deg1(Deg1Violation::DegreeOne { vertex }) => {
                json!({"kind": "degree_one", "vertex": vertex})
            }
            Witness::Deg1(Deg1Violation::CloseColumns { x, y, differing }) => {
                json!({"kind": "close_columns", "x": x, "y": y, "differing": differing})
            }
            Witness::Components(c) => json!({
                "kind": "components",
                "components": c.iter().map(|s| s.as_slice().to_vec()).collect::<Vec<_>>(),
            }),
            Witness::Balance { switching, negated } => json!({
                "kind": "balance",
                "switching": switching.as_slice(),
                "negated": negated,
            }),
            Witness::Instance {
                instance,
                negated,
                iso,
            } => json!({
                "kind": "instance",
                "instance": instance.to_string(),
                "negated": negated,
                "perm": iso.perm,
                "switching": iso.switching.as_slice(),
            }),
            Witness::None => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationOutcome {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl ClassificationOutcome {
    fn new(verdict: Verdict, witness: Witness) -> Self {
        ClassificationOutcome { verdict, witness }
    }
}

/// Family instances of one order, keyed by the codes of the instance and
/// its negative.
#[derive(Debug, Clone)]
pub struct CensusContext {
    pub order: usize,
    pub prune: bool,
    instances: HashMap<CanonicalCode, (FamilyInstance, bool)>,
}

impl CensusContext {
    pub fn new(order: usize, prune: bool) -> CensusContext {
        let list = instances_of_order(order);
        let coded: Vec<(FamilyInstance, CanonicalCode, CanonicalCode)> = list
            .into_par_iter()
            .map(|inst| {
                let g = generate(&inst);
                let plus = canonical_code(&g);
                let minus = canonical_code(&g.negate());
                (inst, plus, minus)
            })
            .collect();
        let mut instances = HashMap::new();
        // sorted instance order keeps the first match deterministic
        for (inst, plus, minus) in coded {
            instances.entry(plus).or_insert((inst.clone(), false));
            instances.entry(minus).or_insert((inst, true));
        }
        CensusContext {
            order,
            prune,
            instances,
        }
    }

    pub fn lookup(&self, code: &CanonicalCode) -> Option<&(FamilyInstance, bool)> {
        self.instances.get(code)
    }

    /// Codes of the instances themselves, not their negatives.
    pub fn instance_codes(&self) -> BTreeMap<String, CanonicalCode> {
        self.instances
            .iter()
            .filter(|(_, (_, neg))| !neg)
            .map(|(c, (i, _))| (i.to_string(), c.clone()))
            .collect()
    }
}

fn instance_witness(g: &SignedGraph, inst: &FamilyInstance, negated: bool) -> Option<Witness> {
    let h = generate(inst);
    let h = if negated { h.negate() } else { h };
    switching_isomorphic(&h, g).map(|iso| Witness::Instance {
        instance: inst.clone(),
        negated,
        iso,
    })
}

/// Decision tree: membership, then disconnected, bipartite, balanced or
/// antibalanced, complete, and finally the family instances of the order.
/// Pruning evidence on a connected non-complete member, a non-balanced
/// bipartite member and an unmatched complete member all come out
/// `UNEXPLAINED`, since each contradicts a known theorem.
pub fn classify(
    code: &CanonicalCode,
    g: &SignedGraph,
    spectrum: &ExactSpectrum,
    ctx: &CensusContext,
) -> ClassificationOutcome {
    let member = spectrum.residual.degree() <= 2;
    let connected = g.is_connected();
    let complete = g.is_complete();
    if ctx.prune && connected && !complete {
        let verdict = if member {
            Verdict::Unexplained
        } else {
            Verdict::NotInG
        };
        if let Some(v) = scan(g, DEFAULT_MAX_SIZE) {
            return ClassificationOutcome::new(verdict, Witness::Forbidden(v));
        }
        if let Some(&d) = deg1_checks(g).first() {
            return ClassificationOutcome::new(verdict, Witness::Deg1(d));
        }
    }
    if !member {
        return ClassificationOutcome::new(
            Verdict::NotInG,
            Witness::Spectrum {
                residual_degree: spectrum.residual.degree(),
            },
        );
    }
    if !connected {
        let comps = g
            .components()
            .into_iter()
            .map(|c| VertexSet::new(c).expect("components are disjoint"))
            .collect();
        return ClassificationOutcome::new(Verdict::DisconnectedType, Witness::Components(comps));
    }
    if g.is_bipartite() {
        return match g.balancing_switch() {
            Some(switching) => ClassificationOutcome::new(
                Verdict::BipartiteType,
                Witness::Balance {
                    switching,
                    negated: false,
                },
            ),
            None => ClassificationOutcome::new(Verdict::Unexplained, Witness::None),
        };
    }
    if let Some(switching) = g.balancing_switch() {
        return ClassificationOutcome::new(
            Verdict::UnsignedType,
            Witness::Balance {
                switching,
                negated: false,
            },
        );
    }
    if let Some(switching) = g.negate().balancing_switch() {
        return ClassificationOutcome::new(
            Verdict::UnsignedType,
            Witness::Balance {
                switching,
                negated: true,
            },
        );
    }
    let found = ctx
        .lookup(code)
        .and_then(|(inst, neg)| instance_witness(g, inst, *neg));
    match found {
        Some(w) if !complete => ClassificationOutcome::new(Verdict::Family, w),
        Some(w) if is_tj(&w) => ClassificationOutcome::new(Verdict::CompleteType, w),
        _ => ClassificationOutcome::new(Verdict::Unexplained, Witness::None),
    }
}

fn is_tj(w: &Witness) -> bool {
    matches!(w, Witness::Instance { instance, .. } if instance.family() == Family::TJ)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub code: CanonicalCode,
    pub representative: SignedGraph,
    pub spectrum: ExactSpectrum,
    pub outcome: ClassificationOutcome,
}

impl CensusRecord {
    pub fn build(code: CanonicalCode, ctx: &CensusContext) -> CensusRecord {
        let representative = code.graph();
        let spectrum = exact_spectrum(&representative);
        let outcome = classify(&code, &representative, &spectrum, ctx);
        CensusRecord {
            code,
            representative,
            spectrum,
            outcome,
        }
    }

    pub fn is_member(&self) -> bool {
        self.spectrum.residual.degree() <= 2
    }
}

/// One JSON object per record.
pub fn record_json(rec: &CensusRecord) -> Value {
    json!({
        "code": rec.code.as_str(),
        "sg1": rec.representative.to_sg1(),
        "n": rec.representative.order(),
        "mult_plus1": rec.spectrum.mult_plus1,
        "mult_minus1": rec.spectrum.mult_minus1,
        "residual": residual_coeffs(&rec.spectrum),
        "verdict": rec.outcome.verdict.as_str(),
        "witness": rec.outcome.witness.to_json(),
    })
}

fn is_union_of_cliques(g: &SignedGraph) -> bool {
    g.components().iter().all(|c| {
        c.iter()
            .all(|&u| c.iter().all(|&v| u == v || g.adjacent(u, v)))
    })
}

fn balanced_or_anti(g: &SignedGraph) -> bool {
    g.is_balanced() || g.is_antibalanced()
}

/// Checks a record against the structural theorems; returns one message per
/// failure.
pub fn record_properties(rec: &CensusRecord) -> Vec<String> {
    let g = &rec.representative;
    let mut out = Vec::new();
    let tag = |msg: &str| format!("{}: {msg}", rec.code);
    if canonical_code(g) != rec.code {
        out.push(tag("representative does not reproduce its code"));
    }
    if !rec.outcome.witness.check(g) {
        out.push(tag("witness does not re-check"));
    }
    // smallest eigenvalue at least -1 forces a union of cliques
    if !is_union_of_cliques(g) {
        let shifted = g.to_int_matrix().shifted(1).to_rational();
        if inertia(&shifted).expect("symmetric").n_neg == 0 {
            out.push(tag("smallest eigenvalue >= -1 but not a union of cliques"));
        }
    }
    if !rec.is_member() {
        return out;
    }
    let s = g.structure();
    if !s.connected && !s.has_isolated_vertex && !s.has_isolated_edge {
        let comps = g.components();
        let ok = comps.len() == 2
            && comps.iter().all(|c| {
                let h = g.induced_unchecked(c);
                h.is_complete() && balanced_or_anti(&h)
            });
        if !ok {
            out.push(tag(
                "disconnected member does not split into two signed cliques",
            ));
        }
    }
    if s.bipartite && !g.is_balanced() {
        out.push(tag("bipartite member is not balanced"));
    }
    if s.connected && !s.complete {
        let r = &rec.spectrum.residual;
        let below = |t: i64| r.eval_i64(t) < BigInt::from(0);
        if r.degree() != 2 || !below(1) || !below(-1) {
            out.push(tag("connected non-complete member without s < -1 < 1 < r"));
        }
    }
    out
}

/// Options for [`run_census`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub nmax: usize,
    /// Largest order accepted.
    pub max_order: usize,
    pub prune: bool,
    pub deadline: Option<Instant>,
}

impl CensusOptions {
    pub fn new(nmax: usize) -> CensusOptions {
        CensusOptions {
            nmax,
            max_order: DEFAULT_MAX_ORDER,
            prune: true,
            deadline: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSummary {
    pub n: usize,
    pub classes: usize,
    pub members: usize,
    pub verdicts: BTreeMap<Verdict, usize>,
    /// Instances matched by complete members.
    pub complete_instances: BTreeSet<String>,
    /// Instances matched by non-complete members.
    pub family_instances: BTreeSet<String>,
    pub unexplained: Vec<String>,
    /// Underlying graphs left out after the deadline.
    pub skipped_underlying: usize,
}

impl OrderSummary {
    pub fn count(&self, v: Verdict) -> usize {
        self.verdicts.get(&v).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let verdicts: serde_json::Map<String, Value> = Verdict::ALL
            .iter()
            .map(|v| (v.as_str().to_string(), json!(self.count(*v))))
            .collect();
        json!({
            "n": self.n,
            "classes": self.classes,
            "members": self.members,
            "verdicts": verdicts,
            "complete_instances": self.complete_instances,
            "family_instances": self.family_instances,
            "unexplained": self.unexplained,
            "skipped_underlying": self.skipped_underlying,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub nmax: usize,
    pub orders: Vec<OrderSummary>,
    pub records: Vec<CensusRecord>,
    pub property_failures: Vec<String>,
    pub partial: bool,
}

impl CensusReport {
    pub fn unexplained(&self) -> usize {
        self.orders.iter().map(|o| o.unexplained.len()).sum()
    }

    pub fn zero_unexplained(&self) -> bool {
        self.unexplained() == 0
    }

    /// Complete run, zero unexplained records and no property failures.
    pub fn success(&self) -> bool {
        !self.partial && self.zero_unexplained() && self.property_failures.is_empty()
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "nmax": self.nmax,
            "partial": self.partial,
            "zero_unexplained": self.zero_unexplained(),
            "unexplained": self.unexplained(),
            "property_failures": self.property_failures,
            "orders": self.orders.iter().map(OrderSummary::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Enumerates and classifies every switching class on `1..=nmax` vertices.
pub fn run_census(opts: &CensusOptions) -> Result<CensusReport, CensusError> {
    if opts.nmax > opts.max_order {
        return Err(CensusError::OrderTooLarge {
            n: opts.nmax,
            max: opts.max_order,
        });
    }
    let enum_opts = EnumerateOptions {
        max_order: opts.max_order,
        ..EnumerateOptions::default()
    };
    let mut report = CensusReport {
        nmax: opts.nmax,
        orders: Vec::new(),
        records: Vec::new(),
        property_failures: Vec::new(),
        partial: false,
    };
    for n in 1..=opts.nmax {
        let (codes, skipped) = enumerate_classes_until(n, &enum_opts, opts.deadline)?;
        let ctx = CensusContext::new(n, opts.prune);
        let checked: Vec<(CensusRecord, Vec<String>)> = codes
            .into_par_iter()
            .map(|code| {
                let rec = CensusRecord::build(code, &ctx);
                let failures = record_properties(&rec);
                (rec, failures)
            })
            .collect();
        let mut summary = OrderSummary {
            n,
            classes: checked.len(),
            members: 0,
            verdicts: BTreeMap::new(),
            complete_instances: BTreeSet::new(),
            family_instances: BTreeSet::new(),
            unexplained: Vec::new(),
            skipped_underlying: skipped,
        };
        let mut present = BTreeSet::new();
        for (rec, failures) in checked {
            report.property_failures.extend(failures);
            if rec.is_member() {
                summary.members += 1;
            }
            *summary.verdicts.entry(rec.outcome.verdict).or_insert(0) += 1;
            if let Witness::Instance { instance, .. } = &rec.outcome.witness {
                match rec.outcome.verdict {
                    Verdict::CompleteType => {
                        summary.complete_instances.insert(instance.to_string())
                    }
                    _ => summary.family_instances.insert(instance.to_string()),
                };
            }
            if rec.outcome.verdict == Verdict::Unexplained {
                summary.unexplained.push(rec.representative.to_sg1());
            }
            present.insert(rec.code.clone());
            report.records.push(rec);
        }
        if skipped > 0 {
            report.partial = true;
        } else {
            // every family instance of this order must show up in the census
            for (name, code) in ctx.instance_codes() {
                if !present.contains(&code) {
                    report.property_failures.push(format!(
                        "instance {name} missing from the census at order {n}"
                    ));
                }
            }
        }
        report.orders.push(summary);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn outcome(g: &SignedGraph) -> ClassificationOutcome {
        let ctx = CensusContext::new(g.order(), true);
        let code = canonical_code(g);
        let rep = code.graph();
        classify(&code, &rep, &exact_spectrum(&rep), &ctx)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(outcome(&named::complete(2)).verdict, Verdict::BipartiteType);
        let tj =
            SignedGraph::from_rows(&[[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, -1], [1, 1, -1, 0]])
                .unwrap();
        let o = outcome(&tj);
        assert_eq!(o.verdict, Verdict::CompleteType);
        match o.witness {
            Witness::Instance { instance, .. } => assert_eq!(instance.to_string(), "TJ(2,2)"),
            w => panic!("unexpected witness {w:?}"),
        }
        let a3 =
            SignedGraph::from_rows(&[[0, 1, 1, 0], [1, 0, 1, -1], [1, 1, 0, 1], [0, -1, 1, 0]])
                .unwrap();
        let o = outcome(&a3);
        assert_eq!(o.verdict, Verdict::Family);
        assert!(o.witness.check(&canonical_code(&a3).graph()));
        assert_eq!(outcome(&named::path(4)).verdict, Verdict::NotInG);
        assert_eq!(outcome(&named::complete(5)).verdict, Verdict::UnsignedType);
    }

    #[test]
    fn small_census() {
        let report = run_census(&CensusOptions::new(4)).unwrap();
        assert!(report.success(), "{:?}", report.property_failures);
        assert_eq!(report.orders.len(), 4);
        let json = report.summary_json();
        assert_eq!(json["zero_unexplained"], json!(true));
        let rec = &report.records[0];
        let line = record_json(rec);
        assert_eq!(line["code"], line["sg1"]);
    }

    #[test]
    fn order_cap() {
        let mut o = CensusOptions::new(8);
        assert!(run_census(&o).is_err());
        o.nmax = 2;
        o.deadline = Some(Instant::now());
        let r = run_census(&o).unwrap();
        assert!(r.partial);
    }
}
