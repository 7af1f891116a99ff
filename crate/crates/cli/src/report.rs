use std::fmt::Write as _;

use l2alex_core::detector::{detect, family_audit, is_iterated_torus, Detection};
use l2alex_core::invariant::{expr_of, summary_of, InvariantSummary};
use l2alex_core::knot::catalog::{all_entries, CatalogEntry};
use l2alex_core::knot::LeafKind;
use l2alex_core::{catalog, KnotSpec};
use serde_json::json;

use crate::args::{AuditArgs, CatalogArgs, DetectArgs, Format};
use crate::error::{CliError, CliResult};
use crate::io::{read_arg, SCHEMA};

fn text_or_json(format: Format, command: &str) -> CliResult<bool> {
    match format {
        Format::Text => Ok(false),
        Format::Json => Ok(true),
        Format::Csv => Err(CliError::Usage(format!("{command} writes text or json"))),
    }
}

pub fn detect_cmd(args: &DetectArgs) -> CliResult<String> {
    let as_json = text_or_json(args.format, "detect")?;
    let summary = match (&args.summary, &args.knot) {
        (Some(s), _) => InvariantSummary::from_json(&read_arg(s)?)?,
        (None, Some(k)) => summary_of(&expr_of(&KnotSpec::parse(&read_arg(k)?)?)?)?,
        (None, None) => return Err(CliError::Usage("pass --summary or --knot".into())),
    };
    let result = detect(&summary)?;
    let certificate = is_iterated_torus(&summary).ok();
    if as_json {
        let doc = json!({
            "schema": SCHEMA,
            "command": "detect",
            "summary": summary,
            "result": result,
            "label": result.label(),
            "iterated_torus": certificate,
        });
        return Ok(serde_json::to_string_pretty(&doc)? + "\n");
    }
    let mut out = format!("{}\n", result.label());
    match &result.verdict {
        Detection::Detected { names } => writeln!(out, "class: {}", names.join(", ")).unwrap(),
        Detection::IteratedTorusClass { genus } => writeln!(out, "class: iterated torus knots of genus {genus}").unwrap(),
        Detection::Unknown { reason } => writeln!(out, "reason: {reason}").unwrap(),
    }
    writeln!(out, "rung: {}", result.clause).unwrap();
    for p in &result.premises {
        writeln!(out, "premise: {p}").unwrap();
    }
    writeln!(out, "summary: {}", summary.to_json()).unwrap();
    Ok(out)
}

pub fn audit_cmd(args: &AuditArgs) -> CliResult<(String, bool)> {
    let as_json = text_or_json(args.format, "audit")?;
    let report = family_audit(args.n)?;
    let text = if as_json {
        let doc = json!({ "schema": SCHEMA, "command": "audit", "report": report });
        serde_json::to_string_pretty(&doc)? + "\n"
    } else {
        let verdict = if report.passed { "all rows pass" } else { "some rows fail" };
        format!("{}{verdict}\n", report.to_table())
    };
    Ok((text, report.passed))
}

fn entry_text(e: &CatalogEntry) -> String {
    let mut out = String::new();
    let kind = match e.kind {
        LeafKind::Torus { p, q } => format!("torus T({p},{q})"),
        LeafKind::Hyperbolic => "hyperbolic".into(),
    };
    writeln!(out, "{}", e.name).unwrap();
    writeln!(out, "  kind: {kind}").unwrap();
    writeln!(out, "  genus: {}", e.genus).unwrap();
    writeln!(out, "  volume: {:.6}", e.volume).unwrap();
    writeln!(out, "  exp(vol/6pi): {:.6}", e.exp_vol_over_6pi).unwrap();
    writeln!(out, "  fibered: {}", if e.fibered { "yes" } else { "no" }).unwrap();
    match e.alexander_polynomial() {
        Some(a) => writeln!(out, "  alexander: {}", a).unwrap(),
        None => writeln!(out, "  alexander: not stored").unwrap(),
    }
    if let Some(c) = e.leading_coefficient {
        writeln!(out, "  leading C: {c}").unwrap();
    }
    if let Some(b) = &e.braid {
        writeln!(out, "  braid: {b}").unwrap();
    }
    if let Some(m) = &e.monodromy {
        writeln!(out, "  monodromy: {}", m.images.join(", ")).unwrap();
    }
    for n in &e.notes {
        writeln!(out, "  note: {n}").unwrap();
    }
    out
}

pub fn catalog_cmd(args: &CatalogArgs) -> CliResult<String> {
    let as_json = text_or_json(args.format, "catalog")?;
    let entries = match &args.name {
        Some(n) => vec![catalog(n)?],
        None => all_entries(),
    };
    if as_json {
        let doc = json!({ "schema": SCHEMA, "command": "catalog", "entries": entries });
        return Ok(serde_json::to_string_pretty(&doc)? + "\n");
    }
    Ok(entries.iter().map(entry_text).collect::<Vec<_>>().join("\n"))
}
