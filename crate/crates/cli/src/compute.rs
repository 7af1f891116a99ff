use l2alex_core::invariant::{expr_of, InvariantExpr};
use l2alex_core::vna::{delta_at, DeltaResult, DetParams};
use l2alex_core::{Error, KnotPresentation, KnotSpec};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{ComputeArgs, Format};
use crate::error::{CliError, CliResult};
use crate::io::{csv_table, read_arg, SCHEMA};

pub const NUMERIC_COLUMNS: &str =
    "t,route,epsilon,estimate,regularized,terms,requested_terms,pruned_mass_bound,pruning_log_slack,converged,budget_limited";
pub const SYMBOLIC_COLUMNS: &str = "t,form,value,genus,volume,value_at_1,lambda";

#[derive(Debug, Serialize)]
struct NumericRow {
    t: f64,
    route: String,
    epsilon: f64,
    estimate: f64,
    regularized: f64,
    terms: usize,
    requested_terms: usize,
    pruned_mass_bound: f64,
    pruning_log_slack: f64,
    converged: bool,
    budget_limited: bool,
}

#[derive(Debug, Serialize)]
struct SymbolicRow {
    t: f64,
    form: String,
    value: Option<f64>,
    genus: u64,
    volume: f64,
    value_at_1: f64,
    lambda: String,
}

enum Plan {
    Numeric(Box<KnotPresentation>),
    Symbolic(InvariantExpr),
}

fn plan(spec: &KnotSpec) -> CliResult<Plan> {
    let pres = spec.presentation()?;
    if let Some(kp) = &pres {
        if kp.oracle.is_some() {
            return Ok(Plan::Numeric(Box::new(pres.expect("checked"))));
        }
    }
    let expr = expr_of(spec)?;
    if pres.is_none() || expr.canonical()?.is_piecewise_monomial() {
        return Ok(Plan::Symbolic(expr));
    }
    Err(Error::Unsupported(format!(
        "no word-problem oracle for {}; only its value at t = 1 is known",
        spec.leaves().join(", ")
    ))
    .into())
}

fn params(args: &ComputeArgs, epsilon: f64) -> CliResult<DetParams> {
    let p = DetParams { epsilon, terms: args.terms, prune: args.prune, max_support: args.max_support, ..DetParams::default() };
    p.validate()?;
    Ok(p)
}

pub fn run(args: &ComputeArgs) -> CliResult<String> {
    if args.format == Format::Text {
        return Err(CliError::Usage("compute writes csv or json".into()));
    }
    if let Some(t) = args.t.iter().find(|t| !t.is_finite() || **t <= 0.0) {
        return Err(Error::InvalidParameter(format!("t = {t} must be positive")).into());
    }
    if args.eps.is_empty() {
        return Err(CliError::Usage("at least one epsilon is required".into()));
    }
    for &e in &args.eps {
        params(args, e)?;
    }
    let spec = KnotSpec::parse(&read_arg(&args.knot)?)?;
    match plan(&spec)? {
        Plan::Numeric(kp) => numeric(args, &spec, &kp),
        Plan::Symbolic(e) => symbolic(args, &spec, &e),
    }
}

fn numeric(args: &ComputeArgs, spec: &KnotSpec, kp: &KnotPresentation) -> CliResult<String> {
    let p = params(args, args.eps[0])?;
    let results: Vec<DeltaResult> = args
        .t
        .par_iter()
        .map(|&t| delta_at(kp, t, &p, args.route))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for r in &results {
        for &eps in &args.eps {
            rows.push(NumericRow {
                t: r.t,
                route: r.route.to_string(),
                epsilon: eps,
                estimate: r.value,
                regularized: r.det.regularized_at(eps) * r.prefactor,
                terms: r.det.terms,
                requested_terms: r.det.requested_terms,
                pruned_mass_bound: r.det.pruned_mass_bound,
                pruning_log_slack: r.det.pruning_log_slack,
                converged: r.det.converged,
                budget_limited: r.det.budget_limited,
            });
        }
    }
    match args.format {
        Format::Json => {
            let samples: Vec<_> = results
                .iter()
                .map(|r| {
                    json!({
                        "t": r.t,
                        "route": r.route,
                        "value": r.value,
                        "prefactor": r.prefactor,
                        "partial_values": r.partial_values(),
                        "epsilon_ladder": r.det.epsilon_ladder,
                        "norm_bound_used": r.det.norm_bound_used,
                        "support": r.det.support,
                    })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "command": "compute",
                "mode": "numeric",
                "knot": spec,
                "rows": rows,
                "samples": samples,
            });
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        _ => csv_table("compute numeric", NUMERIC_COLUMNS, &rows),
    }
}

fn symbolic(args: &ComputeArgs, spec: &KnotSpec, e: &InvariantExpr) -> CliResult<String> {
    let form = e.canonical()?;
    let lambda = match e.lambda() {
        Ok(l) => l.to_string(),
        Err(Error::UndefinedLambda(_)) => "undefined".into(),
        Err(other) => return Err(other.into()),
    };
    let (genus, volume, value_at_1) = (e.genus()?, e.volume()?, e.value_at_1()?);
    let rows: Vec<SymbolicRow> = args
        .t
        .iter()
        .map(|&t| SymbolicRow {
            t,
            form: form.to_string(),
            value: form.eval(t).or((t == 1.0).then_some(value_at_1)),
            genus,
            volume,
            value_at_1,
            lambda: lambda.clone(),
        })
        .collect();
    match args.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": "compute",
                "mode": "symbolic",
                "knot": spec,
                "expression": e,
                "rows": rows,
            });
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        _ => csv_table("compute symbolic", SYMBOLIC_COLUMNS, &rows),
    }
}
