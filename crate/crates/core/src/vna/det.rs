//! Fuglede–Kadison determinant estimates from a logarithm series.
//!
//! For `H = M*M` and `c ≥ ‖H‖`, `ln det(H + ε) = m ln(c+ε) − Σ_n τ((1 − (H+ε)/(c+ε))ⁿ)/n`.
//! With `c = c₀ + ε` the operator inside is exactly `r·X`, `X = 1 − H/c₀`,
//! `r = c₀/(c₀+ε)`, so one set of moments `τ(Xⁿ)` gives the truncated series
//! for every `ε` at once, including the limit `ε → 0`. Since `0 ≤ X ≤ 1`
//! every moment is nonnegative and each truncation is an upper bound.

use serde::Serialize;

use super::arena::{moments, MomentParams, SeriesOperator};
use super::norm::norm_bound;
use super::twist::TwistedMatrix;
use crate::error::{Error, Result};
use crate::group::{GroupRingElement, RingMatrix};

pub const DEFAULT_EPSILON_LADDER: [f64; 3] = [1e-1, 1e-2, 1e-3];
pub const NORM_SAFETY: f64 = 1.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetParams {
    pub epsilon: f64,
    pub terms: usize,
    pub prune: f64,
    pub max_support: usize,
    /// Relative change of the last two partial estimates that counts as converged.
    pub tolerance: f64,
}

impl Default for DetParams {
    fn default() -> Self {
        DetParams { epsilon: 1e-3, terms: 16, prune: 1e-12, max_support: 4_000_000, tolerance: 1e-3 }
    }
}

impl DetParams {
    pub fn validate(&self) -> Result<()> {
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::InvalidParameter(format!("epsilon = {} must be positive", self.epsilon)));
        }
        if self.terms < 1 {
            return Err(Error::InvalidParameter("at least one series term is required".into()));
        }
        if self.prune.is_nan() || self.prune < 0.0 {
            return Err(Error::InvalidParameter(format!("prune threshold {} must be nonnegative", self.prune)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderPoint {
    pub epsilon: f64,
    pub estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetApproxResult {
    /// Truncated series in the limit `ε → 0`; an upper bound for the
    /// determinant up to `exp(pruning_log_slack)`.
    pub estimate: f64,
    /// Estimate after each series order `1..=terms`; non-increasing up to
    /// pruning slack.
    pub partial_estimates: Vec<f64>,
    pub epsilon: f64,
    /// Truncated series of the `ε`-regularized determinant at `epsilon`.
    pub regularized_estimate: f64,
    pub epsilon_ladder: Vec<LadderPoint>,
    /// Series order actually used.
    pub terms: usize,
    pub requested_terms: usize,
    pub pruned_mass_bound: f64,
    /// Bound on `|ln computed − ln exact|` of the final partial from pruning.
    pub pruning_log_slack: f64,
    /// The constant `c₀` (safety factor included).
    pub norm_bound_used: f64,
    pub converged: bool,
    /// True when the support budget cut the series short.
    pub budget_limited: bool,
    pub moments: Vec<f64>,
    pub support: Vec<usize>,
    /// Matrix size `m`.
    pub size: usize,
}

impl DetApproxResult {
    /// Truncated series of the `ε`-regularized determinant.
    pub fn regularized_at(&self, epsilon: f64) -> f64 {
        let c0 = self.norm_bound_used;
        *partials(self.size, c0 + epsilon, c0 / (c0 + epsilon), &self.moments).last().expect("terms ≥ 1")
    }
}

/// Partial estimates for the series with factor `r` per order and constant `c`.
fn partials(m: usize, c: f64, r: f64, mu: &[f64]) -> Vec<f64> {
    let mut sum = 0.0;
    let mut rn = 1.0;
    mu.iter()
        .enumerate()
        .map(|(i, &x)| {
            rn *= r;
            sum += rn * x / (i + 1) as f64;
            (0.5 * (m as f64 * c.ln() - sum)).exp()
        })
        .collect()
}

/// `H = M* ∘ M` in the quotient group ring.
pub fn gram(m: &TwistedMatrix) -> Result<TwistedMatrix> {
    m.adjoint()?.compose(m)
}

pub fn fk_det(m: &TwistedMatrix, params: &DetParams) -> Result<DetApproxResult> {
    params.validate()?;
    let size = m.size();
    if size == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    let h = gram(m)?;
    let c0 = NORM_SAFETY * norm_bound(&h);
    if c0 == 0.0 {
        return Err(Error::Numeric("operator is zero, its determinant vanishes".into()));
    }
    let x = RingMatrix::identity(size).add(&h.entries().map(|e: &GroupRingElement| e.scale(-1.0 / c0)));
    let op = SeriesOperator::new(&x, m.oracle())?;
    let depth = params.terms.div_ceil(2);
    let mom = moments(&op, &MomentParams { depth, prune: params.prune, max_support: params.max_support });
    let terms = params.terms.min(mom.moments.len());
    if terms == 0 {
        return Err(Error::Numeric("support budget exhausted before the first series term".into()));
    }
    let mu = &mom.moments[..terms];
    let partial_estimates = partials(size, c0, 1.0, mu);
    let estimate = *partial_estimates.last().expect("terms ≥ 1");
    let regularized = |eps: f64| *partials(size, c0 + eps, c0 / (c0 + eps), mu).last().expect("terms ≥ 1");
    let mut ladder: Vec<f64> = DEFAULT_EPSILON_LADDER.to_vec();
    if !ladder.contains(&params.epsilon) {
        ladder.push(params.epsilon);
    }
    let epsilon_ladder = ladder.into_iter().map(|e| LadderPoint { epsilon: e, estimate: regularized(e) }).collect();
    let pruning_log_slack = 0.5 * mom.slack[..terms].iter().enumerate().map(|(i, s)| s / (i + 1) as f64).sum::<f64>();
    let converged = terms >= 2 && {
        let a = partial_estimates[terms - 2];
        ((a - estimate) / estimate).abs() < params.tolerance
    };
    Ok(DetApproxResult {
        estimate,
        regularized_estimate: regularized(params.epsilon),
        partial_estimates,
        epsilon: params.epsilon,
        epsilon_ladder,
        terms,
        requested_terms: params.terms,
        pruned_mass_bound: mom.pruned_mass,
        pruning_log_slack,
        norm_bound_used: c0,
        converged,
        budget_limited: mom.depth_limited && terms < params.terms,
        moments: mu.to_vec(),
        support: mom.support,
        size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{NormalFormOracle, Word};

    fn params(terms: usize) -> DetParams {
        DetParams { terms, ..DetParams::default() }
    }

    #[test]
    fn scalar_matrix() {
        for &lambda in &[0.5, 2.0, -3.0] {
            for m in 1..=3 {
                let a = TwistedMatrix::scalar(m, lambda, NormalFormOracle::trivial(1));
                let r = fk_det(&a, &params(16)).unwrap();
                let want = f64::abs(lambda).powi(m as i32);
                assert!((r.estimate - want).abs() < 1e-9 * want, "{} vs {want}", r.estimate);
            }
        }
    }

    #[test]
    fn regularized_value_is_shifted() {
        let a = TwistedMatrix::scalar(1, 2.0, NormalFormOracle::trivial(1));
        let r = fk_det(&a, &DetParams { epsilon: 0.1, terms: 30, ..DetParams::default() }).unwrap();
        assert!((r.regularized_estimate - (4.1f64).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn partials_non_increasing() {
        let o = NormalFormOracle::trivial(2);
        let e = GroupRingElement::from_terms([
            (Word::identity(), 2.0),
            (Word::generator(0), 0.5),
            (Word::generator(1), -0.7),
        ]);
        let m = TwistedMatrix::new(RingMatrix::from_rows(vec![vec![e]]), 1.0, o).unwrap();
        let r = fk_det(&m, &params(12)).unwrap();
        for w in r.partial_estimates.windows(2) {
            assert!(w[1] <= w[0] * (1.0 + 1e-15));
        }
    }

    #[test]
    fn parameter_errors() {
        let a = TwistedMatrix::scalar(1, 2.0, NormalFormOracle::trivial(1));
        assert!(fk_det(&a, &DetParams { epsilon: 0.0, ..DetParams::default() }).is_err());
        assert!(fk_det(&a, &DetParams { terms: 0, ..DetParams::default() }).is_err());
    }
}
