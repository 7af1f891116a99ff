//! Formal monomiality limits: maxima of rational powers of named constants,
//! each known to exceed 1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Symbol used for the figure-eight knot.
pub const FIGURE_EIGHT_SYMBOL: &str = "lambda_F";

/// Base symbol for a hyperbolic fibered catalog knot.
pub fn base_symbol(name: &str) -> String {
    if name == "4_1" {
        FIGURE_EIGHT_SYMBOL.to_string()
    } else {
        format!("lambda_{name}")
    }
}

/// `1`, or `max_i base_i^{r_i}` with every base strictly greater than 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lambda {
    terms: BTreeMap<String, Ratio<i64>>,
}

impl Lambda {
    pub fn one() -> Self {
        Lambda::default()
    }

    pub fn base(symbol: &str) -> Self {
        Lambda::power(symbol, Ratio::from_integer(1))
    }

    pub fn power(symbol: &str, r: Ratio<i64>) -> Self {
        let mut terms = BTreeMap::new();
        if r > Ratio::from_integer(0) {
            terms.insert(symbol.to_string(), r);
        }
        Lambda { terms }
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, Ratio<i64>)> {
        self.terms.iter().map(|(s, r)| (s.as_str(), *r))
    }

    /// The single `(base, exponent)` term, if there is exactly one.
    pub fn single(&self) -> Option<(&str, Ratio<i64>)> {
        (self.terms.len() == 1).then(|| self.terms().next().expect("one term"))
    }

    pub fn max(&self, other: &Lambda) -> Lambda {
        let mut terms = self.terms.clone();
        for (s, r) in &other.terms {
            let e = terms.entry(s.clone()).or_insert(*r);
            if *r > *e {
                *e = *r;
            }
        }
        Lambda { terms }
    }

    /// `λ^{1/k}`.
    pub fn root(&self, k: u64) -> Lambda {
        let k = Ratio::from_integer(k as i64);
        Lambda { terms: self.terms.iter().map(|(s, r)| (s.clone(), r / k)).collect() }
    }

    /// Order when it follows from every base exceeding 1; `None` when it
    /// would depend on the unknown relative size of distinct bases.
    pub fn compare(&self, other: &Lambda) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match (self.is_one(), other.is_one()) {
            (true, _) => return Some(Ordering::Less),
            (_, true) => return Some(Ordering::Greater),
            _ => {}
        }
        match (self.single(), other.single()) {
            (Some((a, r)), Some((b, s))) if a == b => Some(r.cmp(&s)),
            _ => None,
        }
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, symbol: &str, r: Ratio<i64>) -> fmt::Result {
    if r == Ratio::from_integer(1) {
        write!(f, "{symbol}")
    } else {
        write!(f, "{symbol}^({r})")
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.terms.len() {
            0 => f.write_str("1"),
            1 => {
                let (s, r) = self.single().expect("one term");
                write_term(f, s, r)
            }
            _ => {
                f.write_str("max(")?;
                for (i, (s, r)) in self.terms().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write_term(f, s, r)?;
                }
                f.write_str(")")
            }
        }
    }
}

fn parse_term(text: &str, offset: usize) -> Result<(String, Ratio<i64>)> {
    let err = |message: String| Error::Parse { position: offset, message };
    let (symbol, r) = match text.split_once('^') {
        None => (text, Ratio::from_integer(1)),
        Some((s, exp)) => {
            let inner = exp
                .strip_prefix('(')
                .and_then(|e| e.strip_suffix(')'))
                .unwrap_or(exp);
            let r: Ratio<i64> = inner.trim().parse().map_err(|_| err(format!("bad exponent `{exp}`")))?;
            (s, r)
        }
    };
    let symbol = symbol.trim();
    let valid = symbol.strip_prefix("lambda_").is_some_and(|rest| !rest.is_empty());
    if !valid {
        return Err(err(format!("expected a `lambda_` symbol, found `{symbol}`")));
    }
    if r <= Ratio::from_integer(0) {
        return Err(err(format!("exponent {r} must be positive")));
    }
    Ok((symbol.to_string(), r))
}

impl FromStr for Lambda {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" {
            return Ok(Lambda::one());
        }
        let (body, offset) = match t.strip_prefix("max(").and_then(|b| b.strip_suffix(')')) {
            Some(b) => (b, 4),
            None => (t, 0),
        };
        let mut out = Lambda::one();
        let mut pos = offset;
        for part in body.split(',') {
            let (sym, r) = parse_term(part, pos)?;
            out = out.max(&Lambda::power(&sym, r));
            pos += part.len() + 1;
        }
        Ok(out)
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Lambda {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
