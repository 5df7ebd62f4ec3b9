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

//! One pass/fail line per acceptance criterion. Runs without the test
//! harness so the lines always print.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use signed_spectra::census::{
    canonical_code, complete_members, run_census, switching_isomorphic, CanonicalCode,
    CensusOptions, Verdict,
};
use signed_spectra::families::{
    errata, generate, identity_checks, instances_up_to, verify_instance, Family, FamilyInstance,
    Validation,
};
use signed_spectra::forbidden::{
    catalog, scan, verify_forbidden, verify_forbidden_at, ForbiddenKind,
};
use signed_spectra::partitions::{
    quotient_explains, quotient_spectrum, verify_equitable, EquitablePartition,
};
use signed_spectra::spectra::{exact_spectrum, in_class_g};
use signed_spectra::{named, SignedGraph, VertexSet};

mod common;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn family_spectra() -> Outcome {
    let start = Instant::now();
    let all = instances_up_to(24);
    let failures: Vec<String> = all
        .iter()
        .map(verify_instance)
        .filter(|c| !c.holds())
        .map(|c| c.to_string())
        .collect();
    let corrected: BTreeSet<String> = errata(&all)
        .into_iter()
        .map(|(i, ..)| i.family().to_string())
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "{} instances exact in {:.1}s, {} failures; printed lines reconciled for {:?}",
            all.len(),
            start.elapsed().as_secs_f64(),
            failures.len(),
            corrected
        ),
    )
}

fn overlap_identities() -> Outcome {
    let mut checked = 0;
    let mut failed = Vec::new();
    for family in [Family::A2, Family::A3, Family::A4] {
        for m in 1..=12 {
            for l in 1..=12 {
                let Ok(a) = FamilyInstance::new(family, &[m, l]) else {
                    continue;
                };
                if a.order() > 14 || FamilyInstance::new(family, &[l, m]).is_err() {
                    continue;
                }
                let g = generate(&a).negate();
                let h = generate(&FamilyInstance::new(family, &[l, m]).unwrap());
                let ok = switching_isomorphic(&g, &h).is_some_and(|w| w.verify(&g, &h))
                    && identity_checks(family, m, l) == Ok(true);
                checked += 1;
                if !ok {
                    failed.push(a.to_string());
                }
            }
        }
    }
    outcome(
        failed.is_empty() && checked > 0,
        format!("{checked} pairs with witnesses, failures {failed:?}"),
    )
}

fn degenerate_a5() -> Outcome {
    let opts = Validation { allow_a5_k1: true };
    let ok = [(3, 8), (4, 6), (6, 5)].iter().all(|&(m, l)| {
        let i = FamilyInstance::with_validation(Family::A5, &[m, l, 1], opts).unwrap();
        generate(&i).entries().iter().all(|&e| e >= 0)
    });
    outcome(ok, "A5(3,8,1), A5(4,6,1), A5(6,5,1) are unsigned")
}

fn census_and_theorems() -> (Outcome, Outcome) {
    let start = Instant::now();
    let report = run_census(&CensusOptions::new(7)).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let mut mismatched = 0;
    for rec in &report.records {
        let g = &rec.representative;
        let s = g.structure();
        if rec.is_member()
            && s.connected
            && !s.bipartite
            && !s.complete
            && rec.spectrum.residual.degree() == 2
        {
            let ok = matches!(rec.outcome.verdict, Verdict::Family | Verdict::UnsignedType);
            mismatched += usize::from(!ok);
        }
    }
    let members: usize = report.orders.iter().map(|o| o.members).sum();
    let census = outcome(
        report.success() && mismatched == 0,
        format!(
            "{} classes, {} members, {} unexplained, {} unmatched, {:.1}s",
            report.records.len(),
            members,
            report.unexplained(),
            mismatched,
            elapsed
        ),
    );

    let mut wrong_complete = Vec::new();
    for n in 4..=8 {
        let k = named::complete(n);
        let cliques = [canonical_code(&k), canonical_code(&k.negate())];
        let found: BTreeSet<CanonicalCode> = complete_members(n)
            .into_iter()
            .filter(|c| !cliques.contains(c))
            .collect();
        let expected: BTreeSet<CanonicalCode> = (2..=n - 2)
            .map(|m| {
                canonical_code(&generate(
                    &FamilyInstance::new(Family::TJ, &[m, n - m]).unwrap(),
                ))
            })
            .collect();
        if found != expected {
            wrong_complete.push(n);
        }
    }
    let theorems = outcome(
        report.property_failures.is_empty() && wrong_complete.is_empty(),
        format!(
            "{} property failures on n <= 7, complete members off at n = {:?}",
            report.property_failures.len(),
            wrong_complete
        ),
    );
    (census, theorems)
}

/// Returns the outcome and whether every failing sub-item is the balanced
/// six-cycle.
fn forbidden_catalog() -> (Outcome, bool) {
    let start = Instant::now();
    let mut failures = Vec::new();
    for item in catalog().items() {
        match item.kind {
            ForbiddenKind::PathRule | ForbiddenKind::CycleRule => {
                for n in item.min_order()..=7 {
                    if !verify_forbidden_at(item, n) {
                        failures.push(format!("{}({n})", item.label));
                    }
                }
            }
            _ => {
                if !verify_forbidden(item) {
                    failures.push(item.label.clone());
                }
            }
        }
    }
    let dirty: Vec<String> = instances_up_to(14)
        .iter()
        .filter(|i| scan(&generate(i), 6).is_some())
        .map(|i| i.to_string())
        .collect();
    let only_c6 = dirty.is_empty() && failures.iter().all(|f| f == "cycle(6)");
    let detail = format!(
        "catalog failures {:?}, dirty instances {:?}, {:.1}s{}",
        failures,
        dirty,
        start.elapsed().as_secs_f64(),
        if failures.is_empty() {
            ""
        } else {
            "; the balanced six-cycle has eigenvalues 2, 1, 1, -1, -1, -2 and is not excluded by interlacing"
        }
    );
    (
        outcome(failures.is_empty() && dirty.is_empty(), detail),
        only_c6,
    )
}

fn oracle_equivalence() -> Outcome {
    let mut disagreements = 0usize;
    let mut graphs = 0usize;
    for n in 0..=5 {
        let orbit = common::orbits(n);
        let mut code_of_orbit: BTreeMap<usize, CanonicalCode> = BTreeMap::new();
        let mut orbit_of_code: BTreeMap<CanonicalCode, usize> = BTreeMap::new();
        let mut rep: BTreeMap<usize, SignedGraph> = BTreeMap::new();
        for idx in 0..common::count(n) {
            graphs += 1;
            let adj = common::labelled(n, idx);
            let g = common::graph(n, &adj);
            let s = exact_spectrum(&g);
            let mut p = common::faddeev(n, &adj);
            let plus = common::root_multiplicity(&mut p, 1);
            let minus = common::root_multiplicity(&mut p, -1);
            if (s.mult_plus1, s.mult_minus1) != (plus, minus)
                || in_class_g(&g).member != (p.len() <= 3)
            {
                disagreements += 1;
            }
            let code = canonical_code(&g);
            if *code_of_orbit
                .entry(orbit[idx])
                .or_insert_with(|| code.clone())
                != code
                || *orbit_of_code.entry(code).or_insert(orbit[idx]) != orbit[idx]
            {
                disagreements += 1;
            }
            let r = rep.entry(orbit[idx]).or_insert_with(|| g.clone());
            if !switching_isomorphic(&g, r).is_some_and(|w| w.verify(&g, r)) {
                disagreements += 1;
            }
        }
        let reps: Vec<&SignedGraph> = rep.values().collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                disagreements += usize::from(switching_isomorphic(a, b).is_some());
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("{graphs} labelled graphs, {disagreements} disagreements"),
    )
}

fn equitable_partitions() -> Outcome {
    let all = instances_up_to(24);
    let failed: Vec<String> = all
        .iter()
        .filter(|i| {
            let g = generate(i);
            let p = EquitablePartition::from_block_sizes(&i.block_sizes()).unwrap();
            !verify_equitable(&g, &p).is_ok_and(|q| {
                quotient_explains(&g, &q) && quotient_spectrum(&q).residual.degree() <= 2
            })
        })
        .map(|i| i.to_string())
        .collect();
    outcome(
        failed.is_empty(),
        format!("{} block partitions, failures {:?}", all.len(), failed),
    )
}

fn random_graph(rng: &mut StdRng, max_n: usize) -> SignedGraph {
    let n = rng.gen_range(0..=max_n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: i8 = rng.gen_range(-1..=1);
            if v != 0 {
                edges.push((i, j, v));
            }
        }
    }
    SignedGraph::from_edges(n, &edges).unwrap()
}

fn randomized_properties() -> Outcome {
    const CASES: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(0x5167);
    let mut failed: BTreeMap<&str, usize> = BTreeMap::new();
    for _ in 0..CASES {
        let g = random_graph(&mut rng, 10);
        let n = g.order();
        let x = VertexSet::from_mask(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let switched = g.switch(&x).unwrap();
        let moved = switched.relabel(&perm).unwrap();
        let s = exact_spectrum(&g);
        let mut check = |name, ok: bool| {
            if !ok {
                *failed.entry(name).or_insert(0) += 1;
            }
        };
        check("switching involution", switched.switch(&x).unwrap() == g);
        check("spectrum invariance", exact_spectrum(&moved) == s);
        check(
            "negation duality",
            exact_spectrum(&g.negate()) == s.negated(),
        );
        if n <= 8 {
            check(
                "canonical invariance",
                canonical_code(&moved) == canonical_code(&g),
            );
        }
        check(
            "sg1 round trip",
            SignedGraph::from_sg1(&g.to_sg1()).is_ok_and(|h| h == g),
        );
    }
    outcome(
        failed.is_empty(),
        format!("{CASES} random cases per property, failures {failed:?}"),
    )
}

fn main() {
    let (census, theorems) = census_and_theorems();
    let (forbidden, only_c6) = forbidden_catalog();
    let results = [
        (1, family_spectra()),
        (2, overlap_identities()),
        (3, degenerate_a5()),
        (4, census),
        (5, theorems),
        (6, forbidden),
        (7, oracle_equivalence()),
        (8, equitable_partitions()),
        (9, randomized_properties()),
    ];
    for (n, o) in &results {
        println!(
            "criterion {n}: {} {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    // the six-cycle sub-item cannot hold; anything else is a regression
    let regressions: Vec<usize> = results
        .iter()
        .filter(|(n, o)| !(o.pass || *n == 6 && only_c6))
        .map(|(n, _)| *n)
        .collect();
    if !regressions.is_empty() {
        eprintln!("unexpected failures: criteria {regressions:?}");
        std::process::exit(1);
    }
}
