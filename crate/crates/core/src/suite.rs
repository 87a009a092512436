//! Exhaustive checks of the module-theoretic statements, one job per
//! `(λ, m)`, run in parallel.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{partitions_of, Partition};
use crate::equivalence::{
    classes, extremal_flags, is_sink_by_definition, is_sink_local, is_source_local, sink_of,
    source_of, EquivClass,
};
use crate::error::Result;
use crate::hecke::{g_module, iglt_submodule, HeckeModule};
use crate::projective::{verify_projective_cover, verify_wbim_iso, CoverReport};
use crate::qsym::{genomic_schur, two_row_expansion, QSymExpr};
use crate::reading::class_poset_iso;
use crate::tableau::{enumerate_iglt, Iglt};

/// Environment variable capping the number of worker threads.
pub const JOBS_VAR: &str = "GAPLESS_HECKE_JOBS";

/// A pool sized by `GAPLESS_HECKE_JOBS`, or rayon's default when unset.
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var(JOBS_VAR)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Maps `f` over `items` in parallel, keeping input order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    thread_pool().install(|| items.par_iter().map(f).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Characteristic,
    Structure,
    TwoRow,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Relations,
        Suite::Characteristic,
        Suite::Structure,
        Suite::TwoRow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Characteristic => "characteristic",
            Suite::Structure => "structure",
            Suite::TwoRow => "two-row",
        }
    }
}

/// Result of one suite at one size `n`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `(λ, m)` with `λ ⊢ n` and `IGLT(λ; m)` nonempty.
pub fn shape_jobs(n: usize) -> Vec<(Partition, usize)> {
    partitions_of(n)
        .into_iter()
        .flat_map(|p| {
            // The filling (r, c) ↦ r + c − 1 has the least possible maximum.
            let lo = (1..=p.len())
                .map(|r| r + p.row_len(r) - 1)
                .max()
                .unwrap_or(0);
            (lo..=n).map(move |m| (p.clone(), m))
        })
        .collect()
}

fn label(shape: &Partition, m: usize) -> String {
    format!("λ={shape} m={m}")
}

/// The 0-Hecke relations on `G_{λ;m}`.
pub fn check_relations(shape: &Partition, m: usize) -> Result<Option<String>> {
    let report = g_module(shape, m)?.verify_relations();
    Ok(report
        .witness
        .map(|w| format!("{}: {} fails at {}", label(shape, m), w.relation, w.basis)))
}

/// `Σ_m ch(G_{λ;m}) = U_λ`, the left side from the module, the right side
/// from descent compositions.
pub fn check_characteristic(shape: &Partition) -> Result<Option<String>> {
    let mut total = QSymExpr::zero();
    for m in 1..=shape.size() {
        let tableaux = enumerate_iglt(shape, m);
        if tableaux.is_empty() {
            continue;
        }
        let module = HeckeModule::from_rule(m, tableaux, |i, t: &Iglt| t.pi(i))?;
        total = total + module.characteristic()?;
    }
    let expected = genomic_schur(shape);
    Ok((total != expected).then(|| format!("λ={shape}: ch = {total}, U = {expected}")))
}

/// `U_λ` against its Schur expansion, for `ℓ(λ) ≤ 2`.
pub fn check_two_row(shape: &Partition) -> Result<Option<String>> {
    let lhs = two_row_expansion(shape)?;
    let rhs = genomic_schur(shape);
    Ok((lhs != rhs).then(|| format!("λ={shape}: Schur side {lhs}, U = {rhs}")))
}

/// Per-class findings of the structure suite.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub source: Iglt,
    pub sink: Iglt,
    pub size: usize,
    pub closed: bool,
    pub extremes: bool,
    pub poset_iso: bool,
    pub wbim_iso: bool,
    pub cover: CoverReport,
}

impl ClassReport {
    pub fn ok(&self) -> bool {
        self.closed && self.extremes && self.poset_iso && self.wbim_iso && self.cover.cover_ok()
    }
}

fn check_class(
    class: &EquivClass,
    flags: &[(bool, bool)],
    index: &dyn Fn(&Iglt) -> usize,
) -> Result<ClassReport> {
    let closed = iglt_submodule(class.m, class.members.clone()).is_ok();
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    let mut agree = true;
    for t in &class.members {
        let (src_def, sink_def) = flags[index(t)];
        if src_def {
            sources.push(t);
        }
        if sink_def {
            sinks.push(t);
        }
        agree &= src_def == is_source_local(t)
            && sink_def == is_sink_local(t)
            && sink_def == is_sink_by_definition(t)
            && source_of(t)? == class.source
            && sink_of(t)? == class.sink;
    }
    let extremes = agree && sources == [&class.source] && sinks == [&class.sink];
    Ok(ClassReport {
        source: class.source.clone(),
        sink: class.sink.clone(),
        size: class.len(),
        closed,
        extremes,
        poset_iso: class_poset_iso(class)?.ok(),
        wbim_iso: verify_wbim_iso(class)?,
        cover: verify_projective_cover(class)?,
    })
}

/// Closure, source and sink, both poset isomorphisms and the projective
/// cover, for every class of `IGLT(λ; m)`.
pub fn check_structure(shape: &Partition, m: usize) -> Result<Vec<ClassReport>> {
    let module = g_module(shape, m)?;
    let flags = extremal_flags(&module);
    let index = |t: &Iglt| module.index_of(t).expect("class member lies in IGLT(λ; m)");
    classes(shape, m)?
        .iter()
        .map(|c| check_class(c, &flags, &index))
        .collect()
}

fn summarize(
    suite: Suite,
    n: usize,
    start: Instant,
    outcomes: Vec<Result<Vec<String>>>,
) -> SuiteResult {
    let cases = outcomes.len();
    let failures = outcomes
        .into_iter()
        .flat_map(|o| match o {
            Ok(v) => v,
            Err(e) => vec![e.to_string()],
        })
        .collect();
    SuiteResult {
        suite,
        n,
        cases,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Runs one suite over every shape of size `n`.
pub fn run_suite(suite: Suite, n: usize) -> SuiteResult {
    let start = Instant::now();
    let outcomes: Vec<Result<Vec<String>>> = match suite {
        Suite::Relations => par_map(&shape_jobs(n), |(p, m)| {
            Ok(check_relations(p, *m)?.into_iter().collect())
        }),
        Suite::Characteristic => par_map(&partitions_of(n), |p| {
            Ok(check_characteristic(p)?.into_iter().collect())
        }),
        Suite::TwoRow => {
            let shapes: Vec<Partition> = partitions_of(n)
                .into_iter()
                .filter(|p| p.len() <= 2)
                .collect();
            par_map(&shapes, |p| Ok(check_two_row(p)?.into_iter().collect()))
        }
        Suite::Structure => par_map(&shape_jobs(n), |(p, m)| {
            Ok(check_structure(p, *m)?
                .into_iter()
                .filter(|r| !r.ok())
                .map(|r| {
                    format!(
                        "{}: class of source {:?} fails: {r:?}",
                        label(p, *m),
                        r.source.rows()
                    )
                })
                .collect())
        }),
    };
    summarize(suite, n, start, outcomes)
}
