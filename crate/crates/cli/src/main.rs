//! Command-line front end: enumeration, expansions, class decompositions
//! and exhaustive verification reports.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gapless_hecke::equivalence::{class_containing, classes, sink_of, source_of, EquivClass};
use gapless_hecke::hecke::g_module;
use gapless_hecke::projective::{bal_e, verify_projective_cover, verify_wbim_iso};
use gapless_hecke::qsym::{genomic_schur, genomic_schur_component, two_row_expansion};
use gapless_hecke::reading::{sfread, sfread_with, strips};
use gapless_hecke::suite::{check_two_row, run_suite, Suite, SuiteResult};
use gapless_hecke::tableau::{enumerate_all_iglt, enumerate_iglt};
use gapless_hecke::{Iglt, Partition};

#[derive(Parser)]
#[command(
    name = "gapless-hecke",
    version,
    about = "0-Hecke modules on increasing gapless tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List IGLT(λ) or IGLT(λ; m).
    Iglt {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Expand U_λ or its degree-m part in fundamental quasisymmetric functions.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Decompose IGLT(λ; m) into equivalence classes.
    Classes {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
    },
    /// Source tableau of the class of a tableau read from stdin.
    Source,
    /// Sink tableau of the class of a tableau read from stdin.
    Sink,
    /// Standardized reading word of a tableau read from stdin.
    Read,
    /// The generalized composition bal_E of the class of a tableau read from stdin.
    Bal,
    /// Run the exhaustive verification suites for every n up to --n-max.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Restrict to these suites (comma separated).
        #[arg(long, value_delimiter = ',', value_parser = parse_suite)]
        suite: Vec<Suite>,
    },
    /// Check the Schur expansion of U_λ for partitions with at most two rows.
    Schur2 {
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

enum Failure {
    Parse(String),
    Verify(String),
    Run(String),
}

impl From<gapless_hecke::Error> for Failure {
    fn from(e: gapless_hecke::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|p| usize::from_str(p.trim()).map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::ALL
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| format!("unknown suite {s:?}"))
}

/// Reads `{"shape": [...], "rows": [[...], ...]}` or a bare array of rows.
fn read_tableau() -> Result<Iglt, Failure> {
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
    let value: Value =
        serde_json::from_str(&input).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
    let parsed = if value.is_array() {
        serde_json::from_value::<Vec<Vec<usize>>>(value)
            .map_err(|e| e.to_string())
            .and_then(|rows| Iglt::from_rows(rows).map_err(|e| e.to_string()))
    } else {
        serde_json::from_value::<Iglt>(value).map_err(|e| e.to_string())
    };
    parsed.map_err(|e| Failure::Parse(format!("stdin: {e}")))
}

fn check_m(lambda: &Partition, m: usize) -> Result<(), Failure> {
    if m == 0 || m > lambda.size() {
        return Err(Failure::Parse(format!(
            "--m must lie in [1, {}]",
            lambda.size()
        )));
    }
    Ok(())
}

fn tableau_json(t: &Iglt) -> Value {
    serde_json::to_value(t).expect("tableaux serialize")
}

fn iglt(lambda: &Partition, m: Option<usize>, format: Format) -> Outcome {
    if let Some(m) = m {
        check_m(lambda, m)?;
    }
    if format == Format::Dot {
        let m = m.ok_or_else(|| Failure::Parse("--format dot needs --m".into()))?;
        let module = g_module(lambda, m)?;
        return Ok(module.to_dot(&format!("G{lambda}_{m}"), |t| t.to_string()));
    }
    let list = match m {
        Some(m) => enumerate_iglt(lambda, m),
        None => enumerate_all_iglt(lambda),
    };
    Ok(match format {
        Format::Json => json!(list.iter().map(tableau_json).collect::<Vec<_>>()).to_string(),
        _ => list
            .iter()
            .map(|t| format!("{t}\n"))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn expand(lambda: &Partition, m: Option<usize>, format: Format) -> Outcome {
    let (name, expr) = match m {
        Some(m) => {
            check_m(lambda, m)?;
            (format!("U[m={m}]"), genomic_schur_component(lambda, m))
        }
        None => ("U".to_string(), genomic_schur(lambda)),
    };
    Ok(match format {
        Format::Json => json!({"lambda": lambda, "m": m, "expansion": expr.to_json()}).to_string(),
        _ => format!("{name} = {expr}\n"),
    })
}

fn class_json(c: &EquivClass) -> Result<Value, Failure> {
    let s = strips(&c.source);
    let cover = verify_projective_cover(c)?;
    Ok(json!({
        "size": c.len(),
        "source": tableau_json(&c.source),
        "sink": tableau_json(&c.sink),
        "sfread_source": sfread_with(&s, &c.source)?.word(),
        "sfread_sink": sfread_with(&s, &c.sink)?.word(),
        "bal_E": bal_e(&c.source)?.to_string(),
        "dims": {"srt": cover.srt_count, "class": cover.class_size},
        "kernel_size": cover.kernel_size,
        "cover_ok": cover.cover_ok(),
        "iso_ok": verify_wbim_iso(c)?,
    }))
}

fn classes_cmd(lambda: &Partition, m: usize, format: Format) -> Outcome {
    check_m(lambda, m)?;
    if format == Format::Dot {
        return iglt(lambda, Some(m), format);
    }
    let list = classes(lambda, m)?;
    if format == Format::Json {
        let items = list.iter().map(class_json).collect::<Result<Vec<_>, _>>()?;
        return Ok(json!({"lambda": lambda, "m": m, "classes": items}).to_string());
    }
    let mut out = String::new();
    for (k, c) in list.iter().enumerate() {
        let s = strips(&c.source);
        let lo = sfread_with(&s, &c.source)?;
        let hi = sfread_with(&s, &c.sink)?;
        let _ = writeln!(
            out,
            "class {} ({} tableaux), bal_E = {}",
            k + 1,
            c.len(),
            bal_e(&c.source)?
        );
        let _ = writeln!(out, "source, sfread {lo}:\n{}", c.source);
        let _ = writeln!(out, "sink, sfread {hi}:\n{}", c.sink);
        out.push('\n');
    }
    Ok(out)
}

fn tableau_out(t: &Iglt, format: Format) -> String {
    match format {
        Format::Json => tableau_json(t).to_string(),
        _ => format!("{t}\n"),
    }
}

fn verify(n_max: usize, suites: &[Suite], format: Format) -> Outcome {
    let suites: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let mut results: Vec<SuiteResult> = Vec::new();
    for n in 1..=n_max {
        for &s in &suites {
            results.push(run_suite(s, n));
        }
    }
    let all_ok = results.iter().all(SuiteResult::passed);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&results).expect("results serialize"),
        _ => {
            let mut out = format!(
                "{:>3}  {:<15} {:>6}  {:<6} {:>10}\n",
                "n", "suite", "cases", "result", "time"
            );
            for r in &results {
                let _ = writeln!(
                    out,
                    "{:>3}  {:<15} {:>6}  {:<6} {:>10}",
                    r.n,
                    r.suite.name(),
                    r.cases,
                    if r.passed() { "PASS" } else { "FAIL" },
                    fmt_duration(r.elapsed)
                );
                for f in &r.failures {
                    let _ = writeln!(out, "     {f}");
                }
            }
            for n in 1..=n_max {
                let total: Duration = results.iter().filter(|r| r.n == n).map(|r| r.elapsed).sum();
                let _ = writeln!(out, "n={n}: {}", fmt_duration(total));
            }
            out
        }
    };
    if all_ok {
        Ok(text)
    } else {
        Err(Failure::Verify(text))
    }
}

fn fmt_duration(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn schur2(lambda: Option<&Partition>, n_max: usize, format: Format) -> Outcome {
    let shapes: Vec<Partition> = match lambda {
        Some(l) => vec![l.clone()],
        None => (1..=n_max)
            .flat_map(gapless_hecke::combinatorics::partitions_of)
            .filter(|p| p.len() <= 2)
            .collect(),
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for p in &shapes {
        if p.len() > 2 {
            return Err(Failure::Parse(format!("{p} has more than two rows")));
        }
        let pass = check_two_row(p)?.is_none();
        ok &= pass;
        rows.push((p, pass, two_row_expansion(p)?));
    }
    let text = match format {
        Format::Json => json!(rows
            .iter()
            .map(|(p, pass, e)| json!({"lambda": p, "pass": pass, "expansion": e.to_json()}))
            .collect::<Vec<_>>())
        .to_string(),
        _ => rows
            .iter()
            .map(|(p, pass, e)| format!("{} {p}: U = {e}\n", if *pass { "PASS" } else { "FAIL" }))
            .collect(),
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure::Verify(text))
    }
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    if f == Format::Dot && !matches!(cli.command, Command::Iglt { .. } | Command::Classes { .. }) {
        return Err(Failure::Parse(
            "--format dot applies to iglt and classes only".into(),
        ));
    }
    match &cli.command {
        Command::Iglt { lambda, m } => iglt(lambda, *m, f),
        Command::Expand { lambda, m } => expand(lambda, *m, f),
        Command::Classes { lambda, m } => classes_cmd(lambda, *m, f),
        Command::Source => Ok(tableau_out(&source_of(&read_tableau()?)?, f)),
        Command::Sink => Ok(tableau_out(&sink_of(&read_tableau()?)?, f)),
        Command::Read => {
            let t = read_tableau()?;
            let w = sfread(&class_containing(&t)?, &t)?;
            Ok(match f {
                Format::Json => json!(w.word()).to_string(),
                _ => format!("{w}\n"),
            })
        }
        Command::Bal => {
            let t = read_tableau()?;
            let bal = bal_e(&class_containing(&t)?.source)?;
            Ok(match f {
                Format::Json => serde_json::to_string(&bal).expect("compositions serialize"),
                _ => format!("{bal}\n"),
            })
        }
        Command::Verify { n_max, suite } => verify(*n_max, suite, f),
        Command::Schur2 { lambda, n_max } => schur2(lambda.as_ref(), *n_max, f),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    let mut text = text.to_string();
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Verify(text)) => (text, 1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
