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

//! `signed-spectra`: JSON on stdout, a short summary on stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use signed_spectra::census::{
    canonical_code, record_json, run_census, switching_isomorphic, CensusContext, CensusOptions,
    CensusRecord, Verdict, DEFAULT_MAX_ORDER, LONG_RUN_MAX_ORDER,
};
use signed_spectra::families::{
    errata, generate, instances_up_to, verify_instance, FamilyInstance,
};
use signed_spectra::forbidden::{
    self, admissible_signings, verify_forbidden, verify_forbidden_at, Catalog, ForbiddenKind,
};
use signed_spectra::partitions::{
    quotient_explains, quotient_spectrum, verify_equitable, EquitablePartition,
};
use signed_spectra::sg1::parse_lines;
use signed_spectra::spectra::{
    deg1_checks, exact_spectrum, residual_coeffs, square_psd_rank_check, ExactSpectrum,
};
use signed_spectra::SignedGraph;

const MAXN_ENV: &str = "SIGNED_SPECTRA_MAXN";

#[derive(Parser)]
#[command(
    name = "signed-spectra",
    version,
    about = "Signed graphs with at most two eigenvalues other than 1 and -1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the SG1 line of a family instance such as `A2(2,2)`.
    Gen { instance: String },
    /// Exact spectrum of SG1 graphs: a file, an inline `SG1 ...` string or `-`.
    Spectrum { input: String },
    /// Membership, column checks, `A^2 - I`, forbidden scan and verdict.
    Check { input: String },
    /// Switching isomorphism between the first graphs of two inputs.
    Iso { first: String, second: String },
    /// Family spectrum checks.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Enumerate and classify all switching classes up to `--n` vertices.
    Census {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        n: usize,
        /// JSON-lines file receiving one record per class.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Allow orders up to the long-run maximum.
        #[arg(long)]
        long_run: bool,
        /// Stop enumerating after this many seconds and mark the report partial.
        #[arg(long)]
        time_limit: Option<u64>,
        /// Skip the forbidden-subgraph and column checks.
        #[arg(long)]
        no_prune: bool,
    },
    /// Forbidden catalog checks.
    Forbid {
        #[command(subcommand)]
        action: ForbidAction,
    },
    /// Quotient matrix of an equitable partition such as `[0-3|4-7]`.
    Quotient {
        input: String,
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// Compare exact spectra with the stated ones for every instance.
    Verify {
        #[arg(long, default_value_t = 24)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum ForbidAction {
    /// Check that every catalog item breaks the interlacing bound.
    Verify {
        /// Catalog file with `SIGNED SG1 ...` and `ALLSIGN SG1 ...` lines.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Largest rule instance checked.
        #[arg(long, default_value_t = 7)]
        rule_max: usize,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let jobs = match &cli.command {
        Command::Census { jobs, .. } => (*jobs).max(1),
        _ => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .context("cannot start worker threads")?;
    let mut out = BufWriter::new(io::stdout().lock());
    let status = match cli.command {
        Command::Gen { instance } => cmd_gen(&mut out, &instance)?,
        Command::Spectrum { input } => cmd_spectrum(&mut out, &input)?,
        Command::Check { input } => cmd_check(&mut out, &input)?,
        Command::Iso { first, second } => cmd_iso(&mut out, &first, &second)?,
        Command::Families {
            action: FamiliesAction::Verify { nmax },
        } => cmd_families_verify(&mut out, nmax)?,
        Command::Census {
            n,
            out: path,
            long_run,
            time_limit,
            no_prune,
            ..
        } => cmd_census(&mut out, n, path, long_run, time_limit, !no_prune)?,
        Command::Forbid {
            action: ForbidAction::Verify { catalog, rule_max },
        } => cmd_forbid_verify(&mut out, catalog, rule_max)?,
        Command::Quotient { input, partition } => cmd_quotient(&mut out, &input, &partition)?,
    };
    out.flush()?;
    Ok(status)
}

fn emit(out: &mut impl Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}")?;
    Ok(())
}

/// Graphs from an inline `SG1 ...` string, `-` for stdin, or a file path.
fn read_graphs(input: &str) -> Result<Vec<SignedGraph>> {
    let text = if input.trim_start().starts_with("SG1") {
        input.to_string()
    } else if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input).with_context(|| format!("cannot read {input}"))?
    };
    let graphs = parse_lines(&text).with_context(|| format!("cannot parse {input}"))?;
    if graphs.is_empty() {
        bail!("no graphs in {input}");
    }
    Ok(graphs)
}

fn spectrum_json(s: &ExactSpectrum) -> Value {
    json!({
        "mult_plus1": s.mult_plus1,
        "mult_minus1": s.mult_minus1,
        "residual": residual_coeffs(s),
        "exceptional": s.exceptional().to_string(),
        "member": s.residual.degree() <= 2,
    })
}

fn cmd_gen(out: &mut impl Write, instance: &str) -> Result<Status> {
    let inst: FamilyInstance = instance.parse()?;
    let g = generate(&inst);
    writeln!(out, "{}", g.to_sg1())?;
    eprintln!("{inst}: {} vertices", g.order());
    Ok(Status::Ok)
}

fn cmd_spectrum(out: &mut impl Write, input: &str) -> Result<Status> {
    for g in read_graphs(input)? {
        let s = exact_spectrum(&g);
        let mut v = spectrum_json(&s);
        v["sg1"] = json!(g.to_sg1());
        v["n"] = json!(g.order());
        emit(out, &v)?;
        eprintln!("{g}: {s}");
    }
    Ok(Status::Ok)
}

fn cmd_check(out: &mut impl Write, input: &str) -> Result<Status> {
    let mut all_members = true;
    for g in read_graphs(input)? {
        let n = g.order();
        let s = exact_spectrum(&g);
        let gram = square_psd_rank_check(&g);
        let deg1: Vec<String> = deg1_checks(&g).iter().map(|d| format!("{d:?}")).collect();
        let violation = forbidden::scan(&g, forbidden::DEFAULT_MAX_SIZE);
        let ctx = CensusContext::new(n, true);
        let rec = CensusRecord::build(canonical_code(&g), &ctx);
        let verdict = rec.outcome.verdict;
        if matches!(verdict, Verdict::NotInG | Verdict::Unexplained) {
            all_members = false;
        }
        let mut v = spectrum_json(&s);
        v["sg1"] = json!(g.to_sg1());
        v["n"] = json!(n);
        v["deg1"] = json!(deg1);
        v["square_minus_identity"] = json!({
            "psd": gram.psd,
            "rank": gram.rank,
            "inertia": [gram.inertia.n_pos, gram.inertia.n_zero, gram.inertia.n_neg],
        });
        v["forbidden"] = match &violation {
            Some(x) => json!({"item": x.label, "vertices": x.vertices.as_slice()}),
            None => Value::Null,
        };
        v["verdict"] = json!(verdict.as_str());
        v["witness"] = rec.outcome.witness.to_json();
        emit(out, &v)?;
        eprintln!("{g}: {verdict}");
    }
    Ok(if all_members {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn cmd_iso(out: &mut impl Write, first: &str, second: &str) -> Result<Status> {
    let g = read_graphs(first)?.remove(0);
    let h = read_graphs(second)?.remove(0);
    match switching_isomorphic(&g, &h) {
        Some(w) => {
            emit(
                out,
                &json!({"isomorphic": true, "perm": w.perm, "switching": w.switching.as_slice()}),
            )?;
            eprintln!("switching isomorphic: {w}");
            Ok(Status::Ok)
        }
        None => {
            emit(out, &json!({"isomorphic": false}))?;
            eprintln!("not switching isomorphic");
            Ok(Status::Failed)
        }
    }
}

fn cmd_families_verify(out: &mut impl Write, nmax: usize) -> Result<Status> {
    let instances = instances_up_to(nmax);
    let failures: Vec<String> = instances
        .iter()
        .map(verify_instance)
        .filter(|c| !c.holds())
        .map(|c| c.to_string())
        .collect();
    let corrected: Vec<Value> = errata(&instances)
        .iter()
        .map(|(inst, printed, exact)| {
            json!({
                "instance": inst.to_string(),
                "printed": [printed.mult_plus1, printed.mult_minus1, printed.sum, printed.product],
                "exact": [exact.mult_plus1, exact.mult_minus1, exact.sum, exact.product],
            })
        })
        .collect();
    emit(
        out,
        &json!({
            "nmax": nmax,
            "instances": instances.len(),
            "failures": failures,
            "corrected": corrected,
        }),
    )?;
    eprintln!(
        "{} instances up to order {nmax}, {} failures, {} corrected statements",
        instances.len(),
        failures.len(),
        corrected.len()
    );
    Ok(if failures.is_empty() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn order_cap(long_run: bool) -> Result<usize> {
    match std::env::var(MAXN_ENV) {
        Ok(v) => v
            .parse()
            .with_context(|| format!("{MAXN_ENV} must be a number, got `{v}`")),
        Err(_) => Ok(if long_run {
            LONG_RUN_MAX_ORDER
        } else {
            DEFAULT_MAX_ORDER
        }),
    }
}

fn cmd_census(
    out: &mut impl Write,
    n: usize,
    path: Option<PathBuf>,
    long_run: bool,
    time_limit: Option<u64>,
    prune: bool,
) -> Result<Status> {
    let start = Instant::now();
    let opts = CensusOptions {
        nmax: n,
        max_order: order_cap(long_run)?,
        prune,
        deadline: time_limit.map(|s| start + Duration::from_secs(s)),
    };
    let report = run_census(&opts)?;
    if let Some(path) = path {
        let file =
            fs::File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        for rec in &report.records {
            writeln!(w, "{}", record_json(rec))?;
        }
        w.flush()?;
    }
    emit(out, &report.summary_json())?;
    for o in &report.orders {
        eprintln!(
            "n={}: {} classes, {} members, {} unexplained",
            o.n,
            o.classes,
            o.members,
            o.unexplained.len()
        );
    }
    if report.partial {
        eprintln!("time limit reached: report is partial");
    }
    for f in &report.property_failures {
        eprintln!("property failure: {f}");
    }
    eprintln!("finished in {:.1}s", start.elapsed().as_secs_f64());
    Ok(if report.success() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn cmd_forbid_verify(
    out: &mut impl Write,
    catalog: Option<PathBuf>,
    rule_max: usize,
) -> Result<Status> {
    let owned;
    let cat: &Catalog = match catalog {
        Some(p) => {
            let text =
                fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))?;
            owned = Catalog::parse(&text)?;
            &owned
        }
        None => forbidden::catalog(),
    };
    let mut ok = true;
    let mut items = Vec::new();
    for item in cat.items() {
        match item.kind {
            ForbiddenKind::PathRule | ForbiddenKind::CycleRule => {
                for n in item.min_order()..=rule_max.max(item.min_order()) {
                    let holds = verify_forbidden_at(item, n);
                    let admissible: Vec<String> = admissible_signings(item, n)
                        .iter()
                        .map(|g| g.to_sg1())
                        .collect();
                    ok &= holds;
                    items.push(json!({
                        "item": item.label,
                        "n": n,
                        "forbidden": holds,
                        "admissible_signings": admissible,
                    }));
                }
            }
            _ => {
                let holds = verify_forbidden(item);
                ok &= holds;
                items.push(
                    json!({"item": item.label, "sg1": item.graph.to_sg1(), "forbidden": holds}),
                );
            }
        }
    }
    emit(out, &json!({"items": items, "ok": ok}))?;
    eprintln!("{} catalog items checked", cat.items().len());
    Ok(if ok { Status::Ok } else { Status::Failed })
}

fn cmd_quotient(out: &mut impl Write, input: &str, partition: &str) -> Result<Status> {
    let g = read_graphs(input)?.remove(0);
    let p: EquitablePartition = partition.parse()?;
    match verify_equitable(&g, &p) {
        Ok(q) => {
            let s = quotient_spectrum(&q);
            let rows: Vec<Vec<i64>> = (0..q.dim()).map(|i| q.q.row(i).to_vec()).collect();
            let mut v = spectrum_json(&s);
            v["q"] = json!(rows);
            v["char_poly"] = json!(q.char_poly().to_string());
            v["explains_exceptional"] = json!(quotient_explains(&g, &q));
            emit(out, &v)?;
            eprintln!("quotient {rows:?}");
            Ok(Status::Ok)
        }
        Err(e) => {
            emit(out, &json!({"equitable": false, "error": e.to_string()}))?;
            eprintln!("{e}");
            Ok(Status::Failed)
        }
    }
}
