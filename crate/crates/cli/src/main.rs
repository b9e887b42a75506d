//! `decomp`: batch checks on finite decomposition spaces, reported as JSON.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::thread;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use decomp_core::axioms::{self, Condition};
use decomp_core::crapo::CrapoContext;
use decomp_core::document::{self, Document, SubSSetDocument};
use decomp_core::incidence::Incidence;
use decomp_core::sset::{Provenance, TruncatedSSet};

use report::Verbosity;

#[derive(Parser, Debug)]
#[command(name = "decomp", version, about = "Checks finite truncated decomposition spaces")]
struct Cli {
    /// Truncation cap. Required to accept raw simplicial sets for Möbius,
    /// inversion and Crapo checks.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConditionArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decomposition-space conditions and completeness.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        condition: ConditionArg,
    },
    /// Classifies a simplicial map Y → X.
    CheckMap {
        y: PathBuf,
        x: PathBuf,
        map: PathBuf,
        /// Comma-separated flags that must hold, e.g. `culf,convex`.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
    },
    /// Full or convex hull of a vertex set.
    Hull {
        x: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
        #[arg(long, conflicts_with = "convex")]
        full: bool,
        #[arg(long)]
        convex: bool,
    },
    /// Möbius function with its finiteness certificate.
    Mobius { x: PathBuf },
    /// Möbius inversion identities.
    Inversion { x: PathBuf },
    /// Crapo complementation for the convex hull of the given vertices.
    Crapo {
        x: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        k_vertices: Vec<String>,
    },
}

/// An input problem: exit code 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

struct Input {
    path: PathBuf,
    digest: String,
    doc: Document,
}

fn read_input(path: &Path) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(InputError)?;
    let doc = document::load(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(InputError)?;
    Ok(Input {
        path: path.to_path_buf(),
        digest: hex::encode(Sha256::digest(text.as_bytes())),
        doc,
    })
}

fn space(input: &Input, cap: Option<usize>) -> Result<Arc<TruncatedSSet>, InputError> {
    input
        .doc
        .to_space(cap)
        .map(Arc::new)
        .with_context(|| format!("building a simplicial set from {}", input.path.display()))
        .map_err(InputError)
}

/// Raw inputs only get truncation-relative certificates, so they must name a cap.
fn require_opt_in(x: &TruncatedSSet, cap: Option<usize>) -> Result<(), InputError> {
    if x.provenance() == Provenance::Raw && cap.is_none() {
        return Err(InputError(anyhow!(
            "raw simplicial set input: pass --cap to accept certificates relative to the truncation"
        )));
    }
    Ok(())
}

fn inputs_json(inputs: &[&Input]) -> Value {
    Value::Array(
        inputs
            .iter()
            .map(|i| json!({ "path": i.path.display().to_string(), "sha256": i.digest }))
            .collect(),
    )
}

fn envelope(command: &str, inputs: &[&Input], passed: bool, body: Value) -> Value {
    let mut out = json!({
        "tool": "decomp",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "inputs": inputs_json(inputs),
        "passed": passed,
    });
    if let (Value::Object(out), Value::Object(body)) = (&mut out, body) {
        out.extend(body);
    }
    out
}

fn run(cli: &Cli, verbosity: Verbosity) -> Result<(bool, Value), InputError> {
    let input_err = |e: anyhow::Error| InputError(e);
    match &cli.command {
        Command::Validate { file, condition } => {
            let input = read_input(file)?;
            let x = space(&input, cli.cap)?;
            if x.cap() < 2 {
                return Err(InputError(anyhow!("decomposition checks need cap ≥ 2, found {}", x.cap())));
            }
            let conditions: Vec<Condition> = match condition {
                ConditionArg::All => Condition::ALL.to_vec(),
                ConditionArg::One => vec![Condition::ActiveInert],
                ConditionArg::Two => vec![Condition::InertActiveInjection],
                ConditionArg::Three => vec![Condition::SpecialCover],
                ConditionArg::Four => vec![Condition::GeneralCover],
            };
            let (reports, complete) = thread::scope(|s| {
                let handles: Vec<_> = conditions
                    .iter()
                    .map(|&c| {
                        let x = &x;
                        s.spawn(move || axioms::check_decomposition(x, c))
                    })
                    .collect();
                let complete = axioms::is_complete(&x);
                let reports: Vec<_> = handles.into_iter().map(|h| h.join().expect("check thread")).collect();
                (reports, complete)
            });
            let reports = reports.into_iter().collect::<Result<Vec<_>, _>>().map_err(|e| input_err(e.into()))?;
            let complete = complete.map_err(|e| input_err(e.into()))?;
            let passed = reports.iter().all(|r| r.passed) && complete.passed;
            let body = json!({
                "cap": x.cap(),
                "conditions": reports.iter().map(report::axiom_report).collect::<Vec<_>>(),
                "complete": report::axiom_report(&complete),
                "segal": report::axiom_report(&axioms::is_segal(&x).map_err(|e| input_err(e.into()))?),
            });
            Ok((passed, envelope("validate", &[&input], passed, body)))
        }
        Command::CheckMap { y, x, map, require } => {
            let (yi, xi, mi) = (read_input(y)?, read_input(x)?, read_input(map)?);
            let (ys, xs) = (space(&yi, cli.cap)?, space(&xi, cli.cap)?);
            let Document::Map(m) = &mi.doc else {
                return Err(InputError(anyhow!("{} is a {} document, not a map", map.display(), mi.doc.kind())));
            };
            let f = m.to_map(ys, xs).context("reading the map").map_err(input_err)?;
            let class = axioms::classify_map(&f).map_err(|e| input_err(e.into()))?;
            let names: Vec<&str> = class.flags().iter().map(|(n, _)| *n).collect();
            if let Some(bad) = require.iter().find(|r| !names.contains(&r.as_str())) {
                return Err(InputError(anyhow!("unknown flag `{bad}`; expected one of {}", names.join(", "))));
            }
            let passed = class
                .flags()
                .iter()
                .filter(|(n, _)| require.iter().any(|r| r == n))
                .all(|(_, flag)| flag.holds);
            let body = json!({ "required": require, "classification": report::classification(&class) });
            Ok((passed, envelope("check-map", &[&yi, &xi, &mi], passed, body)))
        }
        Command::Hull { x, vertices, full: _, convex } => {
            let input = read_input(x)?;
            let xs = space(&input, cli.cap)?;
            let vs = axioms::vertex_indices(&xs, vertices).map_err(|e| input_err(e.into()))?;
            let hull = if *convex {
                axioms::convex_hull(&xs, &vs)
            } else {
                axioms::full_hull(&xs, &vs)
            };
            let (passed, body) = match hull {
                Ok(k) => (
                    true,
                    json!({
                        "kind": if *convex { "convex" } else { "full" },
                        "vertices": k.selected(0).iter().map(|&v| xs.name(0, v)).collect::<Vec<_>>(),
                        "hull": serde_json::to_value(Document::SubSset(SubSSetDocument::from_sub(&k))).expect("serializable"),
                    }),
                ),
                Err(e @ (axioms::AxiomError::NotDecomposition(_)
                | axioms::AxiomError::NotComplete(..)
                | axioms::AxiomError::Stabilization(_)
                | axioms::AxiomError::NotConvex(_))) => (false, json!({ "failure": e.to_string() })),
                Err(e) => return Err(input_err(e.into())),
            };
            Ok((passed, envelope("hull", &[&input], passed, body)))
        }
        Command::Mobius { x } => {
            let input = read_input(x)?;
            let xs = space(&input, cli.cap)?;
            require_opt_in(&xs, cli.cap)?;
            let alg = Incidence::new(xs);
            let cert = alg.certify_finiteness().map_err(|e| input_err(e.into()))?;
            let mut body = json!({ "certificate": report::certificate(&alg, &cert, verbosity) });
            if cert.moebius_ok {
                let mu = alg.moebius(&cert).map_err(|e| input_err(e.into()))?;
                body["mu"] = document::functional_json(&alg, &mu);
                if verbosity >= Verbosity::Tables {
                    body["phi"] = report::phi_tables(&alg).map_err(|e| input_err(e.into()))?;
                }
            }
            Ok((cert.moebius_ok, envelope("mobius", &[&input], cert.moebius_ok, body)))
        }
        Command::Inversion { x } => {
            let input = read_input(x)?;
            let xs = space(&input, cli.cap)?;
            require_opt_in(&xs, cli.cap)?;
            let alg = Incidence::new(xs);
            let cert = alg.certify_finiteness().map_err(|e| input_err(e.into()))?;
            let mut body = json!({ "certificate": report::certificate(&alg, &cert, verbosity) });
            let passed = if cert.moebius_ok {
                let inv = alg.check_inversion(&cert).map_err(|e| input_err(e.into()))?;
                body["inversion"] = report::inversion(&inv);
                inv.passed
            } else {
                false
            };
            Ok((passed, envelope("inversion", &[&input], passed, body)))
        }
        Command::Crapo { x, k_vertices } => {
            let input = read_input(x)?;
            let xs = space(&input, cli.cap)?;
            require_opt_in(&xs, cli.cap)?;
            let vs = axioms::vertex_indices(&xs, k_vertices).map_err(|e| input_err(e.into()))?;
            let k = match axioms::convex_hull(&xs, &vs) {
                Ok(k) => k,
                Err(e) => {
                    let body = json!({ "failure": format!("convex hull: {e}") });
                    return Ok((false, envelope("crapo", &[&input], false, body)));
                }
            };
            let ctx = match CrapoContext::new(xs.clone(), k) {
                Ok(ctx) => ctx,
                Err(e) => {
                    let body = json!({ "failure": e.to_string() });
                    return Ok((false, envelope("crapo", &[&input], false, body)));
                }
            };
            let outcome = ctx.check_crapo().map_err(|e| input_err(e.into()))?;
            let passed = outcome.passed();
            let body = report::crapo(&ctx, &outcome, verbosity);
            Ok((passed, envelope("crapo", &[&input], passed, body)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verbosity = Verbosity::from_env();
    match run(&cli, verbosity) {
        Ok((passed, report)) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(e)) => {
            let report = json!({
                "tool": "decomp",
                "version": env!("CARGO_PKG_VERSION"),
                "passed": false,
                "error": { "kind": "input", "message": format!("{e:#}") },
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            ExitCode::from(2)
        }
    }
}
