//! Samples of the L²-Alexander invariant.

use serde::{Deserialize, Serialize};

use super::det::{fk_det, DetApproxResult, DetParams};
use super::twist::{twist, TwistedMatrix};
use crate::error::{Error, Result};
use crate::fox::{abelianization, fox_matrix, jacobian};
use crate::group::{GroupRingElement, RingMatrix, Word};
use crate::knot::catalog::KnotPresentation;
use crate::knot::fibered::FiberedPresentation;

/// How the determinant is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// The twisted Fox matrix with the first generator row deleted.
    Direct,
    /// Fibered only: `Z̃ − W = (−W)(1 − t·z·W⁻¹)`; uses `det W = 1`.
    Below,
    /// Fibered only: `Z̃ − W = Z̃(1 − t⁻¹·W·z⁻¹)`, `det Z̃ = t^{2g}`.
    Above,
    /// `Below` for `t < 1`, `Above` for `t > 1` on fibered input, else `Direct`.
    Auto,
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Route::Direct),
            "below" | "factored-below" => Ok(Route::Below),
            "above" | "factored-above" => Ok(Route::Above),
            "auto" => Ok(Route::Auto),
            other => Err(Error::InvalidParameter(format!("unknown route `{other}`"))),
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::Direct => "direct",
            Route::Below => "below",
            Route::Above => "above",
            Route::Auto => "auto",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaResult {
    pub t: f64,
    pub value: f64,
    pub route: Route,
    /// Known factor multiplied onto the determinant estimate (`t^{2g}` on
    /// the `above` route, the inverse normalization on `direct`).
    pub prefactor: f64,
    pub det: DetApproxResult,
}

impl DeltaResult {
    /// Partial estimates scaled like `value`.
    pub fn partial_values(&self) -> Vec<f64> {
        self.det.partial_estimates.iter().map(|p| p * self.prefactor).collect()
    }
}

pub fn resolve_route(route: Route, t: f64, fibered: bool) -> Route {
    match route {
        Route::Auto if fibered && t < 1.0 => Route::Below,
        Route::Auto if fibered && t > 1.0 => Route::Above,
        Route::Auto => Route::Direct,
        r => r,
    }
}

pub fn delta_at(kp: &KnotPresentation, t: f64, params: &DetParams, route: Route) -> Result<DeltaResult> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::InvalidParameter(format!("t = {t} must be positive")));
    }
    let route = resolve_route(route, t, kp.fibered.is_some());
    match route {
        Route::Direct => direct(kp, t, params),
        Route::Below | Route::Above => {
            let fp = kp
                .fibered
                .as_ref()
                .ok_or_else(|| Error::Unsupported(format!("route `{route}` needs a fibered presentation")))?;
            let (m, prefactor) = factored(fp, t, route == Route::Above)?;
            let det = fk_det(&m, params)?;
            Ok(DeltaResult { t, value: det.estimate * prefactor, route, prefactor, det })
        }
        Route::Auto => unreachable!("resolved above"),
    }
}

fn direct(kp: &KnotPresentation, t: f64, params: &DetParams) -> Result<DeltaResult> {
    let oracle = kp
        .oracle
        .as_ref()
        .ok_or_else(|| Error::Unsupported("no word-problem oracle for this presentation".into()))?;
    let alpha = abelianization(&kp.presentation)?;
    let a1 = alpha.image(0).abs();
    if a1 == 0 {
        return Err(Error::InvalidParameter("first generator has zero abelian image".into()));
    }
    let f = fox_matrix(&kp.presentation)?.delete_row(0);
    let m = twist(&f, t, &alpha, oracle)?;
    let det = fk_det(&m, params)?;
    let prefactor = 1.0 / t.max(1.0).powi((a1 - 1) as i32);
    Ok(DeltaResult { t, value: det.estimate * prefactor, route: Route::Direct, prefactor, det })
}

/// The factor `1 − t·z·W⁻¹` (below) or `1 − t⁻¹·W·z⁻¹` (above) together
/// with the scalar prefactor of the determinant.
pub fn factored(fp: &FiberedPresentation, t: f64, above: bool) -> Result<(TwistedMatrix, f64)> {
    let j = jacobian(&fp.monodromy)?;
    let n = j.w.rows();
    let z = Word::generator(0);
    let shift = |u: &Word| u.map_generators(|g| g + 1);
    let b = if above {
        RingMatrix::from_fn(n, n, |r, c| {
            GroupRingElement::from_terms(j.w.get(r, c).terms().map(|(u, x)| (shift(u).mul(&z.inverse()), x / t)))
        })
    } else {
        RingMatrix::from_fn(n, n, |r, c| {
            GroupRingElement::from_terms(j.winv.get(r, c).terms().map(|(u, x)| (z.mul(&shift(u)), x * t)))
        })
    };
    let m = TwistedMatrix::new(RingMatrix::identity(n).sub(&b), t, fp.oracle.clone())?;
    let prefactor = if above { t.powi(2 * fp.genus as i32) } else { 1.0 };
    Ok((m, prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::catalog;

    fn params(terms: usize) -> DetParams {
        DetParams { terms, ..DetParams::default() }
    }

    #[test]
    fn unknot_is_one() {
        let kp = catalog("unknot").unwrap().presentation().unwrap().unwrap();
        for &t in &[0.25, 0.5, 1.0, 2.0, 4.0] {
            let r = delta_at(&kp, t, &params(32), Route::Auto).unwrap();
            assert_eq!(r.route, Route::Direct);
            assert!((r.value - 1.0).abs() < 1e-6, "t={t}: {}", r.value);
        }
    }

    #[test]
    fn routes_need_fibered_input() {
        let kp = catalog("unknot").unwrap().presentation().unwrap().unwrap();
        assert!(matches!(delta_at(&kp, 0.5, &params(4), Route::Below), Err(Error::Unsupported(_))));
    }

    #[test]
    fn no_oracle_is_unsupported() {
        let kp = catalog("5_2").unwrap().presentation().unwrap().unwrap();
        assert!(matches!(delta_at(&kp, 0.5, &params(4), Route::Direct), Err(Error::Unsupported(_))));
    }

    #[test]
    fn figure_eight_monomial_regions() {
        let kp = catalog("4_1").unwrap().presentation().unwrap().unwrap();
        let low = delta_at(&kp, 0.25, &params(10), Route::Auto).unwrap();
        assert_eq!(low.route, Route::Below);
        assert!(low.value >= 1.0 - 1e-3 && low.value < 1.05, "{}", low.value);
        let high = delta_at(&kp, 4.0, &params(10), Route::Auto).unwrap();
        assert_eq!(high.route, Route::Above);
        assert!(high.value >= 16.0 * (1.0 - 1e-3) && high.value < 16.0 * 1.05, "{}", high.value);
    }

    #[test]
    fn route_parsing() {
        assert_eq!("auto".parse::<Route>().unwrap(), Route::Auto);
        assert!("sideways".parse::<Route>().is_err());
    }
}
