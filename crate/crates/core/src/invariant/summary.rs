//! The data the detection procedures read: genus, volume, value at 1,
//! monomiality limit, leading coefficient and whether the tails are monomial.

use serde::{Deserialize, Serialize};

use super::expr::InvariantExpr;
use super::lambda::Lambda;
use crate::error::{Error, Result};
use crate::knot::catalog::exp_vol_over_6pi;

/// Tolerance on `value_at_1` for summaries built from catalog constants.
pub const COMPUTED_TOLERANCE: f64 = 1e-9;
/// Tolerance on `value_at_1` for user-supplied summaries, whose constants
/// are usually quoted to four significant figures.
pub const PARSED_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSummary")]
pub struct InvariantSummary {
    pub genus: u64,
    pub volume: f64,
    pub value_at_1: f64,
    /// `None` when undefined or unknown.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Lambda>,
    #[serde(rename = "leading_C", skip_serializing_if = "Option::is_none")]
    pub leading_c: Option<f64>,
    /// `None` when it is not known whether the tails are monomial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial_tails: Option<bool>,
}

#[derive(Deserialize)]
struct RawSummary {
    genus: u64,
    volume: f64,
    #[serde(default)]
    value_at_1: Option<f64>,
    #[serde(default)]
    lambda: Option<Lambda>,
    #[serde(default, rename = "leading_C")]
    leading_c: Option<f64>,
    #[serde(default)]
    monomial_tails: Option<bool>,
}

impl TryFrom<RawSummary> for InvariantSummary {
    type Error = String;
    fn try_from(r: RawSummary) -> std::result::Result<Self, String> {
        let s = InvariantSummary {
            genus: r.genus,
            volume: r.volume,
            value_at_1: r.value_at_1.unwrap_or_else(|| exp_vol_over_6pi(r.volume)),
            lambda: r.lambda,
            leading_c: r.leading_c,
            monomial_tails: r.monomial_tails,
        };
        s.validate(PARSED_TOLERANCE).map_err(|e| match e {
            Error::InconsistentSummary(m) => m,
            other => other.to_string(),
        })?;
        Ok(s)
    }
}

impl InvariantSummary {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| match e.classify() {
            serde_json::error::Category::Data => Error::InconsistentSummary(e.to_string()),
            _ => Error::Parse { position: e.column(), message: e.to_string() },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn validate(&self, tolerance: f64) -> Result<()> {
        let bad = |m: String| Err(Error::InconsistentSummary(m));
        if !self.volume.is_finite() || self.volume < 0.0 {
            return bad(format!("volume {} must be finite and nonnegative", self.volume));
        }
        let expected = exp_vol_over_6pi(self.volume);
        let gap = (self.value_at_1 - expected).abs();
        if gap.is_nan() || gap > tolerance {
            return bad(format!(
                "value_at_1 = {} but exp(volume/6π) = {expected:.9} (tolerance {tolerance:e})",
                self.value_at_1
            ));
        }
        if self.genus == 0 && self.volume > tolerance {
            return bad("genus 0 forces the unknot, whose volume is 0".into());
        }
        if let Some(c) = self.leading_c {
            if !c.is_finite() || c <= 0.0 {
                return bad(format!("leading coefficient {c} must be positive"));
            }
        }
        if let (Some(l), Some(true)) = (&self.lambda, self.monomial_tails) {
            let zero_volume = self.volume <= tolerance;
            if l.is_one() != zero_volume {
                return bad(format!("lambda = {l} is inconsistent with volume {}", self.volume));
            }
        }
        Ok(())
    }
}

/// Summary of an expression, validated at the tight tolerance.
pub fn summary_of(e: &InvariantExpr) -> Result<InvariantSummary> {
    e.validate()?;
    let lambda = match e.lambda() {
        Ok(l) => Some(l),
        Err(Error::UndefinedLambda(_)) => None,
        Err(other) => return Err(other),
    };
    let s = InvariantSummary {
        genus: e.genus()?,
        volume: e.volume()?,
        value_at_1: e.value_at_1()?,
        lambda,
        leading_c: e.leading_coefficient()?,
        monomial_tails: e.monomial_tails()?,
    };
    s.validate(COMPUTED_TOLERANCE)?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::expr_of;
    use crate::knot::KnotSpec;

    #[test]
    fn cable_summary_json() {
        let e = expr_of(&KnotSpec::cable(2, 1, KnotSpec::catalog("4_1"))).unwrap();
        let s = summary_of(&e).unwrap();
        assert_eq!(s.genus, 2);
        assert_eq!(s.lambda.as_ref().unwrap().to_string(), "lambda_F^(1/2)");
        let text = s.to_json();
        assert!(text.contains(r#""lambda":"lambda_F^(1/2)""#));
        assert!(text.contains(r#""monomial_tails":true"#));
        assert_eq!(InvariantSummary::from_json(&text).unwrap(), s);
    }

    #[test]
    fn value_at_one_is_filled() {
        let s = InvariantSummary::from_json(r#"{"genus":1,"volume":2.0299,"monomial_tails":true}"#).unwrap();
        assert!((s.value_at_1 - 1.1137).abs() < 1e-4);
    }

    #[test]
    fn inconsistent_value_rejected() {
        let r = InvariantSummary::from_json(r#"{"genus":1,"volume":2.0299,"value_at_1":1.2}"#);
        assert!(matches!(r, Err(Error::InconsistentSummary(_))));
    }

    #[test]
    fn lambda_volume_consistency() {
        let r = InvariantSummary::from_json(r#"{"genus":1,"volume":0,"lambda":"lambda_F","monomial_tails":true}"#);
        assert!(matches!(r, Err(Error::InconsistentSummary(_))));
        let r = InvariantSummary::from_json(r#"{"genus":1,"volume":2.0299,"lambda":"1","monomial_tails":true}"#);
        assert!(r.is_err());
    }

    #[test]
    fn malformed_is_parse_error() {
        assert!(matches!(InvariantSummary::from_json("{\"genus\":"), Err(Error::Parse { .. })));
    }

    #[test]
    fn five_two_summary() {
        let s = summary_of(&expr_of(&KnotSpec::catalog("5_2")).unwrap()).unwrap();
        assert_eq!(s.lambda, None);
        assert_eq!(s.monomial_tails, None);
        assert_eq!(s.leading_c, Some(1.0));
        assert!((s.value_at_1 - 1.162).abs() < 1e-3);
    }
}
