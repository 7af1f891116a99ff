//! Invariant expressions built from catalog leaves by products, cabling and
//! `t ↦ 1/t`, and what can be read off them exactly.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::lambda::{base_symbol, Lambda};
use crate::error::{Error, Result};
use crate::knot::catalog::{catalog, exp_vol_over_6pi, LeafKind};
use crate::knot::KnotSpec;

/// Tolerance for comparing volumes assembled from catalog constants.
pub const VOLUME_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum InvariantExpr {
    /// `max(1,t)^{2·genus}`: the invariant of an iterated torus knot of that genus.
    TorusBase { genus: u32 },
    /// The invariant of a hyperbolic catalog knot, known only through its data.
    HyperbolicBase { name: String },
    Product { factors: Vec<InvariantExpr> },
    /// `f(t^p)·max(1,t)^{(|p|−1)(|q|−1)}`.
    CableMap { p: i64, q: i64, inner: Box<InvariantExpr> },
    /// `f(1/t)`.
    Recip { inner: Box<InvariantExpr> },
}

/// Catalog data of a hyperbolic leaf.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafData {
    pub genus: u32,
    pub volume: f64,
    pub fibered: bool,
    pub leading_coefficient: Option<f64>,
}

pub fn hyperbolic_leaf(name: &str) -> Result<LeafData> {
    let e = catalog(name)?;
    if e.kind != LeafKind::Hyperbolic {
        return Err(Error::InvalidSpec(format!("`{name}` is not a hyperbolic catalog knot")));
    }
    Ok(LeafData { genus: e.genus, volume: e.volume, fibered: e.fibered, leading_coefficient: e.leading_coefficient })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Structural translation of a construction tree.
pub fn expr_of(k: &KnotSpec) -> Result<InvariantExpr> {
    let e = match k {
        KnotSpec::Catalog { name } => {
            let entry = catalog(name)?;
            match entry.kind {
                LeafKind::Torus { .. } => InvariantExpr::TorusBase { genus: entry.genus },
                LeafKind::Hyperbolic => InvariantExpr::HyperbolicBase { name: entry.name },
            }
        }
        KnotSpec::Braid { .. } | KnotSpec::Fibered(_) => {
            return Err(Error::Unsupported(
                "symbolic invariants need catalog leaves; braid and monodromy leaves carry no volume".into(),
            ))
        }
        KnotSpec::Sum { left, right } => {
            let mut factors = Vec::new();
            for side in [left, right] {
                match expr_of(side)? {
                    InvariantExpr::Product { factors: inner } => factors.extend(inner),
                    other => factors.push(other),
                }
            }
            InvariantExpr::Product { factors }
        }
        KnotSpec::Cable { p, q, companion } => InvariantExpr::cable(*p, *q, expr_of(companion)?)?,
        KnotSpec::Mirror { knot } | KnotSpec::Reverse { knot } => InvariantExpr::recip(expr_of(knot)?),
    };
    Ok(e)
}

impl InvariantExpr {
    pub fn torus(genus: u32) -> Self {
        InvariantExpr::TorusBase { genus }
    }

    pub fn hyperbolic(name: &str) -> Self {
        InvariantExpr::HyperbolicBase { name: name.to_string() }
    }

    pub fn product(factors: Vec<InvariantExpr>) -> Self {
        InvariantExpr::Product { factors }
    }

    pub fn cable(p: i64, q: i64, inner: InvariantExpr) -> Result<Self> {
        if p == 0 || gcd(p, q) != 1 {
            return Err(Error::InvalidSpec(format!("cable ({p},{q}) needs p ≠ 0 and gcd(p,q) = 1")));
        }
        Ok(InvariantExpr::CableMap { p, q, inner: Box::new(inner) })
    }

    pub fn recip(inner: InvariantExpr) -> Self {
        InvariantExpr::Recip { inner: Box::new(inner) }
    }

    /// Checks cable parameters and hyperbolic leaf names.
    pub fn validate(&self) -> Result<()> {
        match self {
            InvariantExpr::TorusBase { .. } => Ok(()),
            InvariantExpr::HyperbolicBase { name } => hyperbolic_leaf(name).map(|_| ()),
            InvariantExpr::Product { factors } => factors.iter().try_for_each(|f| f.validate()),
            InvariantExpr::CableMap { p, q, inner } => {
                InvariantExpr::cable(*p, *q, InvariantExpr::torus(0))?;
                inner.validate()
            }
            InvariantExpr::Recip { inner } => inner.validate(),
        }
    }

    /// Genus from the sum and cable formulas.
    pub fn genus(&self) -> Result<u64> {
        Ok(match self {
            InvariantExpr::TorusBase { genus } => *genus as u64,
            InvariantExpr::HyperbolicBase { name } => hyperbolic_leaf(name)?.genus as u64,
            InvariantExpr::Product { factors } => factors.iter().map(|f| f.genus()).sum::<Result<u64>>()?,
            InvariantExpr::CableMap { p, q, inner } => {
                let (p, q) = (p.unsigned_abs(), q.unsigned_abs());
                p * inner.genus()? + (p - 1) * q.saturating_sub(1) / 2
            }
            InvariantExpr::Recip { inner } => inner.genus()?,
        })
    }

    pub fn volume(&self) -> Result<f64> {
        Ok(match self {
            InvariantExpr::TorusBase { .. } => 0.0,
            InvariantExpr::HyperbolicBase { name } => hyperbolic_leaf(name)?.volume,
            InvariantExpr::Product { factors } => factors.iter().map(|f| f.volume()).sum::<Result<f64>>()?,
            InvariantExpr::CableMap { inner, .. } | InvariantExpr::Recip { inner } => inner.volume()?,
        })
    }

    /// The invariant at `t = 1`, `exp(vol/6π)`.
    pub fn value_at_1(&self) -> Result<f64> {
        Ok(exp_vol_over_6pi(self.volume()?))
    }

    /// Symbolic monomiality limit; undefined when a leaf is not fibered.
    pub fn lambda(&self) -> Result<Lambda> {
        Ok(match self {
            InvariantExpr::TorusBase { .. } => Lambda::one(),
            InvariantExpr::HyperbolicBase { name } => {
                if !hyperbolic_leaf(name)?.fibered {
                    return Err(Error::UndefinedLambda(format!("`{name}` is not fibered")));
                }
                Lambda::base(&base_symbol(name))
            }
            InvariantExpr::Product { factors } => {
                let mut out = Lambda::one();
                for f in factors {
                    out = out.max(&f.lambda()?);
                }
                out
            }
            InvariantExpr::CableMap { p, inner, .. } => inner.lambda()?.root(p.unsigned_abs()),
            InvariantExpr::Recip { inner } => inner.lambda()?,
        })
    }

    /// Whether every representative has monomial tails: known true for
    /// fibered leaves, unknown (`None`) otherwise.
    pub fn monomial_tails(&self) -> Result<Option<bool>> {
        Ok(match self {
            InvariantExpr::TorusBase { .. } => Some(true),
            InvariantExpr::HyperbolicBase { name } => hyperbolic_leaf(name)?.fibered.then_some(true),
            InvariantExpr::Product { factors } => {
                let mut all = Some(true);
                for f in factors {
                    if f.monomial_tails()?.is_none() {
                        all = None;
                    }
                }
                all
            }
            InvariantExpr::CableMap { inner, .. } | InvariantExpr::Recip { inner } => inner.monomial_tails()?,
        })
    }

    /// Product of the leaves' leading coefficients, when all are known.
    pub fn leading_coefficient(&self) -> Result<Option<f64>> {
        Ok(match self {
            InvariantExpr::TorusBase { .. } => Some(1.0),
            InvariantExpr::HyperbolicBase { name } => hyperbolic_leaf(name)?.leading_coefficient,
            InvariantExpr::Product { factors } => {
                let mut c = Some(1.0);
                for f in factors {
                    c = match (c, f.leading_coefficient()?) {
                        (Some(a), Some(b)) => Some(a * b),
                        _ => None,
                    };
                }
                c
            }
            InvariantExpr::CableMap { inner, .. } | InvariantExpr::Recip { inner } => inner.leading_coefficient()?,
        })
    }

    /// Exponents `(low, high)` of the small- and large-`t` asymptotics of
    /// the representative with both leaf tails starting at degree 0.
    pub fn tail_degrees(&self) -> Result<(i64, i64)> {
        Ok(match self {
            InvariantExpr::TorusBase { genus } => (0, 2 * *genus as i64),
            InvariantExpr::HyperbolicBase { name } => (0, 2 * hyperbolic_leaf(name)?.genus as i64),
            InvariantExpr::Product { factors } => {
                let mut acc = (0, 0);
                for f in factors {
                    let (lo, hi) = f.tail_degrees()?;
                    acc = (acc.0 + lo, acc.1 + hi);
                }
                acc
            }
            InvariantExpr::CableMap { p, q, inner } => {
                let (lo, hi) = inner.tail_degrees()?;
                let extra = (p.abs() - 1) * (q.abs() - 1);
                if *p > 0 {
                    (p * lo, p * hi + extra)
                } else {
                    (p * hi, p * lo + extra)
                }
            }
            InvariantExpr::Recip { inner } => {
                let (lo, hi) = inner.tail_degrees()?;
                (-hi, -lo)
            }
        })
    }

    pub fn canonical(&self) -> Result<CanonicalForm> {
        Ok(match self {
            InvariantExpr::TorusBase { genus } => CanonicalForm::piecewise(0, 2 * *genus as i64),
            InvariantExpr::HyperbolicBase { name } => CanonicalForm {
                shift: 0,
                max_power: 0,
                hyperbolic: vec![HyperbolicFactor {
                    name: name.clone(),
                    genus: hyperbolic_leaf(name)?.genus,
                    scale: 1,
                }],
            },
            InvariantExpr::Product { factors } => {
                let mut acc = CanonicalForm::piecewise(0, 0);
                for f in factors {
                    acc = acc.mul(&f.canonical()?);
                }
                acc
            }
            InvariantExpr::CableMap { p, q, inner } => {
                let mut c = inner.canonical()?.substitute(*p);
                c.max_power += (p.abs() - 1) * (q.abs() - 1);
                c
            }
            InvariantExpr::Recip { inner } => inner.canonical()?.substitute(-1),
        })
    }
}

impl fmt::Display for InvariantExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantExpr::TorusBase { genus } => write!(f, "max(1,t)^{}", 2 * genus),
            InvariantExpr::HyperbolicBase { name } => write!(f, "D[{name}](t)"),
            InvariantExpr::Product { factors } => {
                if factors.is_empty() {
                    return f.write_str("1");
                }
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            InvariantExpr::CableMap { p, q, inner } => write!(f, "cable[{p},{q}]({inner})"),
            InvariantExpr::Recip { inner } => write!(f, "recip({inner})"),
        }
    }
}

/// A hyperbolic leaf invariant evaluated at `t^scale`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HyperbolicFactor {
    pub name: String,
    pub genus: u32,
    pub scale: u64,
}

/// `t^shift · max(1,t)^max_power · Π D_leaf(t^scale)`, each `D_leaf` the
/// leaf representative that tends to its leading coefficient as `t → 0`.
/// Negative scales are folded away using `D(1/t) = t^{−2g} D(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    pub shift: i64,
    pub max_power: i64,
    /// Sorted multiset.
    pub hyperbolic: Vec<HyperbolicFactor>,
}

impl CanonicalForm {
    pub fn piecewise(shift: i64, max_power: i64) -> Self {
        CanonicalForm { shift, max_power, hyperbolic: Vec::new() }
    }

    pub fn is_piecewise_monomial(&self) -> bool {
        self.hyperbolic.is_empty()
    }

    pub fn mul(&self, other: &CanonicalForm) -> CanonicalForm {
        let mut hyperbolic: Vec<_> = self.hyperbolic.iter().chain(&other.hyperbolic).cloned().collect();
        hyperbolic.sort();
        CanonicalForm { shift: self.shift + other.shift, max_power: self.max_power + other.max_power, hyperbolic }
    }

    /// The form of `t ↦ f(t^p)`.
    pub fn substitute(&self, p: i64) -> CanonicalForm {
        let a = p.abs();
        let mut shift = p * self.shift;
        let max_power = a * self.max_power;
        if p < 0 {
            shift -= a * self.max_power;
        }
        let mut hyperbolic = Vec::with_capacity(self.hyperbolic.len());
        for h in &self.hyperbolic {
            let scale = h.scale * a as u64;
            if p < 0 {
                shift -= 2 * h.genus as i64 * scale as i64;
            }
            hyperbolic.push(HyperbolicFactor { scale, ..h.clone() });
        }
        hyperbolic.sort();
        CanonicalForm { shift, max_power, hyperbolic }
    }

    /// `m` with `other = t^m · self`, when the forms agree up to a monomial.
    pub fn shift_to(&self, other: &CanonicalForm) -> Option<i64> {
        (self.max_power == other.max_power && self.hyperbolic == other.hyperbolic).then(|| other.shift - self.shift)
    }

    /// Exact value, available without hyperbolic factors.
    pub fn eval(&self, t: f64) -> Option<f64> {
        self.is_piecewise_monomial().then(|| t.powi(self.shift as i32) * t.max(1.0).powi(self.max_power as i32))
    }

    pub fn tail_degrees(&self) -> (i64, i64) {
        let top: i64 = self.hyperbolic.iter().map(|h| 2 * h.genus as i64 * h.scale as i64).sum();
        (self.shift, self.shift + self.max_power + top)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.shift != 0 {
            parts.push(format!("t^{}", self.shift));
        }
        if self.max_power != 0 {
            parts.push(format!("max(1,t)^{}", self.max_power));
        }
        for h in &self.hyperbolic {
            if h.scale == 1 {
                parts.push(format!("D[{}](t)", h.name));
            } else {
                parts.push(format!("D[{}](t^{})", h.name, h.scale));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" * "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    /// Every invariant we can compare agrees, but the forms differ.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Equivalence {
    pub verdict: Verdict,
    /// For `Equivalent`: `m` with `second = t^m · first`.
    pub shift: Option<i64>,
    pub reason: String,
    pub diagnostics: Vec<String>,
}

/// Equivalence up to multiplication by `t^m`. Exact on piecewise-monomial
/// expressions; with hyperbolic leaves a negative answer is exact when an
/// invariant separates the two, and otherwise the result is `Undetermined`.
pub fn equivalent(a: &InvariantExpr, b: &InvariantExpr) -> Result<Equivalence> {
    let (ca, cb) = (a.canonical()?, b.canonical()?);
    let (ga, gb) = (a.genus()?, b.genus()?);
    let (va, vb) = (a.volume()?, b.volume()?);
    let la = a.lambda();
    let lb = b.lambda();
    let show = |l: &Result<Lambda>| l.as_ref().map_or_else(|_| "undefined".to_string(), |l| l.to_string());
    let diagnostics = vec![
        format!("forms: {ca} | {cb}"),
        format!("genus: {ga} | {gb}"),
        format!("volume: {va:.6} | {vb:.6}"),
        format!("lambda: {} | {}", show(&la), show(&lb)),
    ];
    let done = |verdict, shift, reason: String| Ok(Equivalence { verdict, shift, reason, diagnostics: diagnostics.clone() });
    if let Some(m) = ca.shift_to(&cb) {
        return done(Verdict::Equivalent, Some(m), format!("canonical forms agree up to t^{m}"));
    }
    if ga != gb {
        return done(Verdict::NotEquivalent, None, format!("genus differs: {ga} vs {gb}"));
    }
    if (va - vb).abs() > VOLUME_EPS {
        return done(Verdict::NotEquivalent, None, format!("volume differs: {va:.6} vs {vb:.6}"));
    }
    if let (Ok(x), Ok(y)) = (&la, &lb) {
        if let Some(ord) = x.compare(y) {
            if ord != std::cmp::Ordering::Equal {
                return done(
                    Verdict::NotEquivalent,
                    None,
                    format!("monomiality limits differ: {x} vs {y} (every base exceeds 1)"),
                );
            }
        }
    }
    if ca.is_piecewise_monomial() && cb.is_piecewise_monomial() {
        return done(Verdict::NotEquivalent, None, format!("piecewise-monomial forms differ: {ca} vs {cb}"));
    }
    done(Verdict::Undetermined, None, "genus, volume and monomiality limit agree but the forms differ".into())
}
