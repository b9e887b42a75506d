//! JSON rendering of check results.

use num_traits::Zero;
use serde_json::{json, Value};

use decomp_core::axioms::{AxiomReport, MapClassification, Route};
use decomp_core::crapo::{CrapoContext, CrapoOutcome, RowCheck};
use decomp_core::document::{functional_json, rational_json};
use decomp_core::incidence::{FinitenessCertificate, Incidence, IncidenceError, InversionReport, MoebiusReason};

/// Report detail, from `DECOMP_VERBOSE` (0, 1 or 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verbosity {
    Summary,
    Tables,
    Full,
}

impl Verbosity {
    pub fn from_env() -> Self {
        match std::env::var("DECOMP_VERBOSE").ok().as_deref().map(str::trim) {
            Some("1") => Verbosity::Tables,
            Some("2") => Verbosity::Full,
            _ => Verbosity::Summary,
        }
    }
}

pub fn axiom_report(r: &AxiomReport) -> Value {
    let mut out = json!({
        "check": r.check,
        "passed": r.passed,
        "horizon": r.horizon(),
        "squares_checked": r.squares_checked,
    });
    if let Some(f) = &r.failure {
        out["failure"] = json!({ "square": f.square.to_string(), "witness": f.witness });
    }
    if let Some(note) = &r.note {
        out["note"] = json!(note);
    }
    out
}

pub fn classification(c: &MapClassification) -> Value {
    let mut flags = serde_json::Map::new();
    for (name, flag) in c.flags() {
        let mut entry = json!({ "holds": flag.holds });
        if let Some(w) = &flag.witness {
            entry["witness"] = json!(w);
        }
        flags.insert(name.to_string(), entry);
    }
    json!({
        "route": match c.route {
            Route::Shortcut => "shortcut",
            Route::Full => "full",
        },
        "flags": flags,
    })
}

pub fn certificate(alg: &Incidence, cert: &FinitenessCertificate, verbosity: Verbosity) -> Value {
    let reason = match &cert.reason {
        MoebiusReason::ChainBound { bound } => json!({ "kind": "chain_bound", "bound": bound }),
        MoebiusReason::TruncationRelative { cap } => json!({ "kind": "truncation_relative", "cap": cap }),
        MoebiusReason::Denied { edge, count } => {
            json!({ "kind": "denied", "edge": edge, "top_count": count.to_string() })
        }
    };
    let mut out = json!({
        "locally_finite": cert.locally_finite,
        "moebius_ok": cert.moebius_ok,
        "reason": reason,
    });
    if verbosity >= Verbosity::Tables {
        out["lengths"] = Value::Array(
            cert.lengths
                .iter()
                .enumerate()
                .map(|(e, n)| json!([alg.edge_name(e), n]))
                .collect(),
        );
    }
    out
}

pub fn phi_tables(alg: &Incidence) -> Result<Value, IncidenceError> {
    Ok(Value::Array(
        alg.phi_table()?
            .iter()
            .enumerate()
            .map(|(n, f)| json!({ "n": n, "values": functional_json(alg, f) }))
            .collect(),
    ))
}

pub fn inversion(r: &InversionReport) -> Value {
    let mut out = json!({ "passed": r.passed, "identities": r.identities_checked });
    if let Some((identity, edge, lhs, rhs)) = &r.failure {
        out["failure"] = json!({
            "identity": identity,
            "edge": edge,
            "lhs": rational_json(lhs),
            "rhs": rational_json(rhs),
        });
    }
    out
}

fn row(r: &RowCheck) -> Value {
    let mut out = json!({ "label": r.label, "passed": r.passed });
    if let Some((edge, lhs, rhs)) = &r.failure {
        out["failure"] = json!({ "edge": edge, "lhs": rational_json(lhs), "rhs": rational_json(rhs) });
    }
    out
}

pub fn crapo(ctx: &CrapoContext, outcome: &CrapoOutcome, verbosity: Verbosity) -> Value {
    let x = ctx.space();
    let names = |sub: &decomp_core::sset::SubSSet| -> Vec<String> {
        sub.selected(0).iter().map(|&v| x.name(0, v).to_string()).collect()
    };
    let table: Vec<Value> = outcome
        .edges
        .iter()
        .filter(|r| verbosity >= Verbosity::Tables || !r.mu_x.is_zero() || !r.correction.is_zero())
        .map(|r| {
            json!({
                "edge": r.edge,
                "mu": rational_json(&r.mu_x),
                "mu_complement": rational_json(&r.mu_complement),
                "correction": rational_json(&r.correction),
                "holds": r.holds(),
            })
        })
        .collect();
    let lemmas: Vec<Value> = outcome
        .lemmas
        .iter()
        .filter(|r| verbosity >= Verbosity::Full || !r.passed)
        .map(row)
        .collect();
    json!({
        "k_vertices": names(ctx.k()),
        "complement_vertices": names(ctx.complement()),
        "truncation_relative": outcome.truncation_relative,
        "signed": row(&outcome.signed),
        "table": table,
        "sign_free": outcome.sign_free.iter().map(row).collect::<Vec<_>>(),
        "propositions": outcome.propositions.iter().map(row).collect::<Vec<_>>(),
        "lemmas_checked": outcome.lemmas.len(),
        "lemmas_failed": outcome.lemmas.iter().filter(|r| !r.passed).count(),
        "lemmas": lemmas,
    })
}
