//! Identifying a knot from its invariant summary.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariant::{InvariantSummary, FIGURE_EIGHT_SYMBOL};
use crate::knot::catalog::{exp_vol_over_6pi, VOLUME_4_1, VOLUME_5_2};
use crate::knot::family::is_prime;

/// Matching tolerance for `value_at_1` against catalog constants.
pub const VALUE_TOLERANCE: f64 = 1e-3;
/// Matching tolerance for volumes against catalog constants, and for zero.
pub const VOLUME_TOLERANCE: f64 = 1e-3;
/// Exact-clause tolerance of the iterated-torus test.
pub const ITERATED_TORUS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detection {
    /// The knot is one of `names`; the list is closed under mirror and reversal.
    Detected { names: Vec<String> },
    IteratedTorusClass { genus: u64 },
    Unknown { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionResult {
    pub verdict: Detection,
    /// Ladder rung that decided, `a` through `f`.
    pub clause: char,
    /// Facts the rung relies on without re-deriving them.
    pub premises: Vec<&'static str>,
}

impl DetectionResult {
    pub fn label(&self) -> String {
        match &self.verdict {
            Detection::Detected { names } => names[0].clone(),
            Detection::IteratedTorusClass { genus } => format!("iterated-torus(genus {genus})"),
            Detection::Unknown { .. } => "unknown".into(),
        }
    }
}

fn detected(clause: char, names: &[String], premises: Vec<&'static str>) -> DetectionResult {
    DetectionResult { verdict: Detection::Detected { names: names.to_vec() }, clause, premises }
}

fn chiral(name: &str) -> Vec<String> {
    vec![name.to_string(), format!("mirror({name})")]
}

/// Name of the `p`-cable of the figure-eight knot detected by rung (e),
/// with its mirror image.
pub fn figure_eight_cable_names(p: u64) -> Vec<String> {
    vec![format!("cable({p},1,4_1)"), format!("cable({p},-1,4_1)")]
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

const GENUS_AND_VOLUME: &str = "the invariant determines genus and simplicial volume";
const ZERO_VOLUME: &str = "zero simplicial volume characterizes iterated torus knots";
const TORUS_GENUS_ONE: &str = "the only iterated torus knot of genus one is the trefoil";
const FIG8_FIBERED: &str = "the only hyperbolic fibered knot of genus one with volume 2.0299 is 4_1";
const CENSUS_5_2: &str =
    "volume 2.8281 leaves the census manifolds m015, m016, m017; only 5_2 (genus 1) and K12n242 (genus 5) are knot exteriors";
const SMALL_PIECES: &str = "a JSJ piece of volume below three regular ideal tetrahedra is one of the small census manifolds";
const CABLE_LAMBDA: &str = "cabling with winding p takes the p-th root of the monomiality limit, and lambda_F > 1";

/// Decision ladder over a validated summary.
pub fn detect(s: &InvariantSummary) -> Result<DetectionResult> {
    s.validate(VALUE_TOLERANCE)?;
    let v41 = exp_vol_over_6pi(VOLUME_4_1);
    let v52 = exp_vol_over_6pi(VOLUME_5_2);

    if s.genus == 0 {
        return Ok(detected('a', &["unknot".to_string()], vec![GENUS_AND_VOLUME]));
    }
    if s.volume <= VOLUME_TOLERANCE {
        if s.genus == 1 {
            return Ok(detected('b', &chiral("3_1"), vec![ZERO_VOLUME, TORUS_GENUS_ONE]));
        }
        return Ok(DetectionResult {
            verdict: Detection::IteratedTorusClass { genus: s.genus },
            clause: 'b',
            premises: vec![ZERO_VOLUME],
        });
    }

    let mut failures = Vec::new();

    let c = if s.monomial_tails != Some(true) {
        Err("(c) tails not known to be monomial")
    } else if s.genus != 1 {
        Err("(c) genus is not 1")
    } else if !close(s.value_at_1, v41, VALUE_TOLERANCE) {
        Err("(c) value at 1 is not exp(vol(4_1)/6π)")
    } else {
        Ok(())
    };
    match c {
        Ok(()) => return Ok(detected('c', &["4_1".to_string()], vec![GENUS_AND_VOLUME, FIG8_FIBERED])),
        Err(e) => failures.push(e.to_string()),
    }

    let d = match s.leading_c {
        None => Err("(d) leading coefficient C not supplied".to_string()),
        Some(c) if !(1.0..v52).contains(&c) => Err(format!("(d) C = {c} outside [1, {v52:.4})")),
        Some(_) if s.genus != 1 => Err("(d) genus is not 1".to_string()),
        Some(_) if !close(s.value_at_1, v52, VALUE_TOLERANCE) => {
            Err("(d) value at 1 is not exp(vol(5_2)/6π)".to_string())
        }
        Some(_) => Ok(()),
    };
    match d {
        Ok(()) => return Ok(detected('d', &chiral("5_2"), vec![GENUS_AND_VOLUME, CENSUS_5_2])),
        Err(e) => failures.push(e),
    }

    let e = if !close(s.volume, VOLUME_4_1, VOLUME_TOLERANCE) {
        Err("(e) volume is not vol(4_1)".to_string())
    } else {
        match s.lambda.as_ref().and_then(|l| l.single()) {
            Some((sym, r)) if sym == FIGURE_EIGHT_SYMBOL && *r.numer() == 1 && *r.denom() > 1 => {
                let p = *r.denom() as u64;
                if !is_prime(p) {
                    Err(format!("(e) root {p} is not prime"))
                } else if s.genus != p {
                    Err(format!("(e) genus {} differs from the root {p}", s.genus))
                } else {
                    Ok(p)
                }
            }
            _ => Err("(e) lambda is not lambda_F^(1/p)".to_string()),
        }
    };
    match e {
        Ok(p) => {
            return Ok(detected('e', &figure_eight_cable_names(p), vec![GENUS_AND_VOLUME, SMALL_PIECES, CABLE_LAMBDA]))
        }
        Err(e) => failures.push(e),
    }

    let mut reason = format!("no rung applies: {}", failures.join("; "));
    if s.monomial_tails.is_none() {
        reason.push_str("; whether a non-fibered knot can have monomial tails is open, so fiberedness cannot separate candidates");
    }
    Ok(DetectionResult { verdict: Detection::Unknown { reason }, clause: 'f', premises: vec![GENUS_AND_VOLUME] })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IteratedTorusCertificate {
    pub iterated_torus: bool,
    /// Each tested clause with its outcome.
    pub clauses: Vec<(String, bool)>,
}

/// Tests the equivalent characterizations available in a summary; they
/// must agree.
pub fn is_iterated_torus(s: &InvariantSummary) -> Result<IteratedTorusCertificate> {
    let mut clauses = vec![
        ("simplicial volume is 0".to_string(), s.volume.abs() <= ITERATED_TORUS_TOLERANCE),
        ("invariant at t = 1 equals 1".to_string(), (s.value_at_1 - 1.0).abs() <= ITERATED_TORUS_TOLERANCE),
    ];
    if let (Some(l), Some(true)) = (&s.lambda, s.monomial_tails) {
        clauses.push(("monomiality limit is 1".to_string(), l.is_one()));
    }
    let first = clauses[0].1;
    if let Some((name, _)) = clauses.iter().find(|(_, b)| *b != first) {
        return Err(Error::InconsistentSummary(format!(
            "iterated-torus clauses disagree: `{}` is {first} but `{name}` is {}",
            clauses[0].0, !first
        )));
    }
    Ok(IteratedTorusCertificate { iterated_torus: first, clauses })
}
