//! `lens-spectra`: one JSON document per invocation on stdout, diagnostics
//! on stderr. Exit 2 for bad flags or inputs, 1 for failing fixtures.

mod fixtures;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lens_spectra::classes::coarse_lower_bound;
use lens_spectra::{
    canonicalize, enumerate_classes, find_families, is_isometric, is_isospectral, lower_bound,
    multiplicities, pair_lower_bound, pattern_bound, realized_pattern_count, singular_signature,
    spectral_invariant, sufficiency_check, Integer, Invariant, LensTuple, Method, Multiplicities,
    ResidueSystem, Verdict,
};
use serde_json::{json, Value};

use output::{CommandResult, Status};

#[derive(Parser)]
#[command(name = "lens-spectra", version, about = "Spectra, isometry and isospectrality of lens orbifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum MethodArg {
    #[default]
    Invariant,
    Series,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues and multiplicities for k <= max-k.
    Spectrum {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        tuple: Vec<i64>,
        #[arg(long)]
        max_k: usize,
        /// Number of trivial rotation blocks appended to the tuple.
        #[arg(long, default_value_t = 0)]
        w: usize,
    },
    /// The spectral invariant: character polynomials, or a multiplicity prefix.
    Invariant {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        tuple: Vec<i64>,
    },
    Isometric {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
    },
    Isospectral {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        /// Depth for the series method; defaults to the depth that decides.
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Canonical representatives of all isometry classes of n-tuples.
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t)]
        output: Format,
    },
    /// Isospectral non-isometric families of n-tuples.
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        output: Format,
    },
    Singular {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        tuple: Vec<i64>,
    },
    /// Class-count lower bounds and pattern counting data.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
    },
    /// Runs the built-in regression fixtures.
    VerifyPaper {
        #[arg(long)]
        case: Option<String>,
    },
}

/// What a handler produced: a JSON payload, or a CSV table that replaces it.
enum Rendered {
    Json(Value),
    Csv(Vec<u8>),
}

struct Outcome {
    rendered: Rendered,
    status: Status,
    message: Option<String>,
    code: u8,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome { rendered: Rendered::Json(payload), status: Status::Ok, message: None, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, parameters) = describe(&cli.command);
    let outcome = run(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        Outcome {
            rendered: Rendered::Json(Value::Null),
            status: Status::Error,
            message: Some(format!("{e:#}")),
            code: 2,
        }
    });
    let mut stdout = std::io::stdout().lock();
    let written = match outcome.rendered {
        Rendered::Csv(bytes) => stdout.write_all(&bytes),
        Rendered::Json(payload) => {
            let result = CommandResult {
                command: name.to_string(),
                parameters,
                status: outcome.status,
                message: outcome.message,
                payload,
            };
            serde_json::to_writer_pretty(&mut stdout, &result)
                .map_err(std::io::Error::from)
                .and_then(|_| writeln!(stdout))
        }
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code)
}

fn describe(c: &Command) -> (&'static str, Value) {
    match c {
        Command::Spectrum { q, tuple, max_k, w } => ("spectrum", json!({ "q": q, "tuple": tuple, "max_k": max_k, "w": w })),
        Command::Invariant { q, tuple } => ("invariant", json!({ "q": q, "tuple": tuple })),
        Command::Isometric { q, a, b } => ("isometric", json!({ "q": q, "a": a, "b": b })),
        Command::Isospectral { q, a, b, method, max_k } => (
            "isospectral",
            json!({ "q": q, "a": a, "b": b, "method": method_name(*method), "max_k": max_k }),
        ),
        Command::Enumerate { q, n, count_only, .. } => ("enumerate", json!({ "q": q, "n": n, "count_only": count_only })),
        Command::Search { q, n, .. } => ("search", json!({ "q": q, "n": n })),
        Command::Singular { q, tuple } => ("singular", json!({ "q": q, "tuple": tuple })),
        Command::Bounds { q, n } => ("bounds", json!({ "q": q, "n": n })),
        Command::VerifyPaper { case } => ("verify-paper", json!({ "case": case })),
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Invariant => "invariant",
        MethodArg::Series => "series",
    }
}

fn system(q: u64) -> anyhow::Result<Arc<ResidueSystem>> {
    Ok(Arc::new(ResidueSystem::new(q)?))
}

fn tuple(system: &Arc<ResidueSystem>, raw: &[i64]) -> anyhow::Result<LensTuple> {
    LensTuple::new(system, raw).with_context(|| format!("invalid tuple {raw:?} for q = {}", system.q()))
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Spectrum { q, tuple: raw, max_k, w } => {
            let t = tuple(&system(q)?, &raw)?;
            let m: Multiplicities = multiplicities(&t, max_k, w);
            Ok(Outcome::ok(json!({
                "canonical": output::class(&canonicalize(&t)),
                "n": t.n(),
                "w": w,
                "spectrum": output::spectrum(&m),
            })))
        }
        Command::Invariant { q, tuple: raw } => {
            let t = tuple(&system(q)?, &raw)?;
            let inv: Invariant = spectral_invariant(&t);
            Ok(Outcome::ok(json!({
                "canonical": output::class(&canonicalize(&t)),
                "invariant": output::invariant(&inv),
            })))
        }
        Command::Isometric { q, a, b } => {
            let s = system(q)?;
            let (a, b) = (tuple(&s, &a)?, tuple(&s, &b)?);
            Ok(Outcome::ok(json!({
                "isometric": is_isometric(&a, &b)?,
                "canonical_a": output::class(&canonicalize(&a)),
                "canonical_b": output::class(&canonicalize(&b)),
            })))
        }
        Command::Isospectral { q, a, b, method, max_k } => {
            let s = system(q)?;
            let (a, b) = (tuple(&s, &a)?, tuple(&s, &b)?);
            let method = match method {
                MethodArg::Invariant => Method::Invariant,
                MethodArg::Series => Method::Series,
            };
            let v: Verdict = is_isospectral(&a, &b, method, max_k)?;
            Ok(Outcome::ok(json!({
                "isospectral": v.isospectral,
                "isometric": is_isometric(&a, &b)?,
                "canonical_a": output::class(&canonicalize(&a)),
                "canonical_b": output::class(&canonicalize(&b)),
                "certificate": output::certificate(&v.certificate),
            })))
        }
        Command::Enumerate { q, n, count_only, output: format } => {
            let classes = enumerate_classes(&system(q)?, n)?;
            match (format, count_only) {
                (Format::Csv, true) => csv_table(&["count"], [[classes.len().to_string()]]),
                (Format::Csv, false) => csv_table(
                    &["index", "entries"],
                    classes.iter().enumerate().map(|(i, c)| [i.to_string(), output::entries_field(c.entries())]),
                ),
                (Format::Json, true) => Ok(Outcome::ok(json!({ "count": classes.len() }))),
                (Format::Json, false) => Ok(Outcome::ok(json!({
                    "count": classes.len(),
                    "classes": classes.iter().map(output::class).collect::<Vec<_>>(),
                }))),
            }
        }
        Command::Search { q, n, output: format } => {
            let families = find_families(&system(q)?, n)?;
            match format {
                Format::Csv => csv_table(
                    &["family", "size", "verified_to", "entries"],
                    families.iter().enumerate().flat_map(|(i, f)| {
                        f.members.iter().map(move |m| {
                            [i.to_string(), f.members.len().to_string(), f.verified_to.to_string(), output::entries_field(m.entries())]
                        })
                    }),
                ),
                Format::Json => Ok(Outcome::ok(json!({
                    "count": families.len(),
                    "families": families.iter().map(output::family).collect::<Vec<_>>(),
                }))),
            }
        }
        Command::Singular { q, tuple: raw } => {
            let t = tuple(&system(q)?, &raw)?;
            let sig = singular_signature(&t);
            Ok(Outcome::ok(json!({
                "canonical": output::class(&canonicalize(&t)),
                "manifold": sig.is_manifold(),
                "strata": serde_json::to_value(&sig.strata)?,
                "display": sig.to_string(),
            })))
        }
        Command::Bounds { q, n } => bounds(q, n),
        Command::VerifyPaper { case } => verify(case.as_deref()),
    }
}

fn bounds(q: u64, n: usize) -> anyhow::Result<Outcome> {
    let s = system(q)?;
    if n == 0 || n as u64 > s.q0() {
        bail!("n = {n} is outside 1..={}", s.q0());
    }
    let exact = lower_bound::<Integer>(&s, n);
    let coarse = coarse_lower_bound::<Integer>(&s, n);
    let pair = (n as u64 + 2 == s.q0()).then(|| pair_lower_bound::<Integer>(&s)).flatten();
    // Pattern data exists only for the shapes the counting argument covers.
    let patterns = match (pattern_bound(&s), realized_pattern_count(&s), sufficiency_check(&s)) {
        (Ok(bound), Ok(realized), Ok(record)) => json!({
            "pattern_bound": bound,
            "realized_patterns": realized,
            "sufficiency": serde_json::to_value(&record)?,
        }),
        _ => json!({ "pattern_bound": null, "realized_patterns": null, "sufficiency": null }),
    };
    Ok(Outcome::ok(json!({
        "lower_bound": output::rational(&exact),
        "coarse_lower_bound": output::rational(&coarse),
        "closed_form": pair.as_ref().map(output::rational),
        "r": s.r(),
        "q0": s.q0(),
        "patterns": patterns,
    })))
}

fn verify(case: Option<&str>) -> anyhow::Result<Outcome> {
    let all = fixtures::all();
    let selected: Vec<_> = all.iter().filter(|f| case.map_or(true, |c| f.name == c)).collect();
    if selected.is_empty() {
        bail!("no fixture named {:?}", case.unwrap_or_default());
    }
    let mut failed = 0;
    let results: Vec<Value> = selected
        .iter()
        .map(|f| match (f.run)() {
            Ok(()) => json!({ "name": f.name, "status": "pass" }),
            Err(message) => {
                failed += 1;
                eprintln!("FAIL {}: {message}", f.name);
                json!({ "name": f.name, "status": "fail", "message": message })
            }
        })
        .collect();
    let passed = selected.len() - failed;
    Ok(Outcome {
        rendered: Rendered::Json(json!({ "passed": passed, "failed": failed, "fixtures": results })),
        status: if failed == 0 { Status::Ok } else { Status::Error },
        message: (failed > 0).then(|| format!("{failed} of {} fixtures failed", selected.len())),
        code: if failed == 0 { 0 } else { 1 },
    })
}

fn csv_table<R, I>(header: &[&str], rows: I) -> anyhow::Result<Outcome>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(Outcome {
        rendered: Rendered::Csv(w.into_inner()?),
        status: Status::Ok,
        message: None,
        code: 0,
    })
}
