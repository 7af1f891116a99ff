//! Audit of the cable family against connected sums with trefoils.

use rayon::prelude::*;
use serde::Serialize;

use super::ladder::{detect, figure_eight_cable_names, Detection};
use crate::error::Result;
use crate::invariant::{equivalent, expr_of, summary_of, Verdict};
use crate::knot::{build_family, nth_prime};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub n: usize,
    pub p: u64,
    pub genus_j: u64,
    pub genus_k: u64,
    pub volume_j: f64,
    pub volume_k: f64,
    pub lambda_j: String,
    pub lambda_k: String,
    pub equal_genus: bool,
    pub equal_volume: bool,
    pub not_equivalent: bool,
    pub k_detected: bool,
    pub detail: String,
}

impl AuditRow {
    pub fn passed(&self) -> bool {
        self.equal_genus && self.equal_volume && self.not_equivalent && self.k_detected
    }

    pub fn failing_clauses(&self) -> Vec<&'static str> {
        [
            (self.equal_genus, "equal genus"),
            (self.equal_volume, "equal volume"),
            (self.not_equivalent, "distinct invariants"),
            (self.k_detected, "cable detected"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub n_max: usize,
    pub rows: Vec<AuditRow>,
    pub passed: bool,
}

fn audit_row(n: usize) -> Result<AuditRow> {
    let p = nth_prime(n);
    let (j, k) = build_family(n);
    let (ej, ek) = (expr_of(&j)?, expr_of(&k)?);
    let (sj, sk) = (summary_of(&ej)?, summary_of(&ek)?);
    let eq = equivalent(&ej, &ek)?;
    let found = detect(&sk)?;
    let lambda = |s: &crate::invariant::InvariantSummary| s.lambda.as_ref().map_or("undefined".into(), |l| l.to_string());
    Ok(AuditRow {
        n,
        p,
        genus_j: sj.genus,
        genus_k: sk.genus,
        volume_j: sj.volume,
        volume_k: sk.volume,
        lambda_j: lambda(&sj),
        lambda_k: lambda(&sk),
        equal_genus: sj.genus == sk.genus && sk.genus == p,
        equal_volume: (sj.volume - sk.volume).abs() <= 1e-9,
        not_equivalent: eq.verdict == Verdict::NotEquivalent,
        k_detected: found.verdict == (Detection::Detected { names: figure_eight_cable_names(p) }),
        detail: eq.reason,
    })
}

/// Rows `n = 0..=n_max`, evaluated in parallel and reported in order.
pub fn family_audit(n_max: usize) -> Result<AuditReport> {
    let rows = (0..=n_max).into_par_iter().map(audit_row).collect::<Result<Vec<_>>>()?;
    let passed = rows.iter().all(AuditRow::passed);
    Ok(AuditReport { n_max, rows, passed })
}

impl AuditReport {
    /// Aligned text table, one line per row.
    pub fn to_table(&self) -> String {
        let header = ["n", "p", "g(J)", "g(K)", "vol(J)", "vol(K)", "lambda(J)", "lambda(K)", "genus", "volume", "distinct", "detect", "status"];
        let mut cells: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        let mark = |b: bool| if b { "pass" } else { "FAIL" }.to_string();
        for r in &self.rows {
            cells.push(vec![
                r.n.to_string(),
                r.p.to_string(),
                r.genus_j.to_string(),
                r.genus_k.to_string(),
                format!("{:.6}", r.volume_j),
                format!("{:.6}", r.volume_k),
                r.lambda_j.clone(),
                r.lambda_k.clone(),
                mark(r.equal_genus),
                mark(r.equal_volume),
                mark(r.not_equivalent),
                mark(r.k_detected),
                if r.passed() { "ok".into() } else { format!("failed: {}", r.failing_clauses().join(", ")) },
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
