//! Knot construction trees and their JSON form.

use serde::{Deserialize, Serialize};

use super::braid::parse_braid;
use super::catalog::{catalog, KnotPresentation};
use super::fibered::{fibered_presentation, MonodromySpec};
use crate::error::{Error, Result};
use crate::fox::classical_alexander;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum KnotSpec {
    Catalog {
        name: String,
    },
    Braid {
        word: String,
        /// Optional monodromy of the closure; numerics use it only after it
        /// matches the braid's Alexander polynomial.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        monodromy: Option<MonodromySpec>,
    },
    Fibered(MonodromySpec),
    Sum {
        left: Box<KnotSpec>,
        right: Box<KnotSpec>,
    },
    Cable {
        p: i64,
        q: i64,
        companion: Box<KnotSpec>,
    },
    Mirror {
        knot: Box<KnotSpec>,
    },
    Reverse {
        knot: Box<KnotSpec>,
    },
}

impl KnotSpec {
    pub fn catalog(name: &str) -> Self {
        KnotSpec::Catalog { name: name.to_string() }
    }

    pub fn braid(word: &str) -> Self {
        KnotSpec::Braid { word: word.to_string(), monodromy: None }
    }

    pub fn sum(left: KnotSpec, right: KnotSpec) -> Self {
        KnotSpec::Sum { left: Box::new(left), right: Box::new(right) }
    }

    pub fn cable(p: i64, q: i64, companion: KnotSpec) -> Self {
        KnotSpec::Cable { p, q, companion: Box::new(companion) }
    }

    pub fn mirror(knot: KnotSpec) -> Self {
        KnotSpec::Mirror { knot: Box::new(knot) }
    }

    pub fn reverse(knot: KnotSpec) -> Self {
        KnotSpec::Reverse { knot: Box::new(knot) }
    }

    /// Accepts `catalog:NAME`, `braid:WORD`, inline JSON, or a bare catalog name.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let spec = if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::Parse {
                position: json_offset(t, e.line(), e.column()),
                message: e.to_string(),
            })?
        } else if let Some(name) = t.strip_prefix("catalog:") {
            KnotSpec::catalog(name)
        } else if let Some(word) = t.strip_prefix("braid:") {
            parse_braid(word)?;
            KnotSpec::braid(word)
        } else {
            KnotSpec::catalog(t)
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    /// Checks cable parameters, catalog names and braid syntax recursively.
    pub fn validate(&self) -> Result<()> {
        match self {
            KnotSpec::Catalog { name } => catalog(name).map(|_| ()),
            KnotSpec::Braid { word, monodromy } => {
                let b = parse_braid(word)?;
                if b.components() != 1 {
                    return Err(Error::NotAKnotGroup(format!("braid closure has {} components", b.components())));
                }
                if let Some(m) = monodromy {
                    m.genus()?;
                    m.automorphism()?;
                }
                Ok(())
            }
            KnotSpec::Fibered(m) => {
                fibered_presentation(m.genus()?, &m.automorphism()?)?;
                Ok(())
            }
            KnotSpec::Sum { left, right } => {
                left.validate()?;
                right.validate()
            }
            KnotSpec::Cable { p, q, companion } => {
                if *p == 0 || gcd(*p, *q) != 1 {
                    return Err(Error::InvalidSpec(format!("cable ({p},{q}) needs p ≠ 0 and gcd(p,q) = 1")));
                }
                companion.validate()
            }
            KnotSpec::Mirror { knot } | KnotSpec::Reverse { knot } => knot.validate(),
        }
    }

    /// Catalog names of the leaves, left to right; other leaves are tagged.
    pub fn leaves(&self) -> Vec<String> {
        match self {
            KnotSpec::Catalog { name } => vec![name.clone()],
            KnotSpec::Braid { word, .. } => vec![format!("braid:{word}")],
            KnotSpec::Fibered(_) => vec!["fibered".into()],
            KnotSpec::Sum { left, right } => {
                let mut v = left.leaves();
                v.extend(right.leaves());
                v
            }
            KnotSpec::Cable { companion, .. } => companion.leaves(),
            KnotSpec::Mirror { knot } | KnotSpec::Reverse { knot } => knot.leaves(),
        }
    }

    /// A presentation for numerics, if the knot is a single prime piece we
    /// can present. Mirror and reversal are peeled off: they change the
    /// invariant only up to the symmetry `t ↦ 1/t` and a monomial.
    pub fn presentation(&self) -> Result<Option<KnotPresentation>> {
        match self {
            KnotSpec::Catalog { name } => catalog(name)?.presentation(),
            KnotSpec::Braid { word, monodromy } => {
                let pres = parse_braid(word)?.wirtinger()?;
                let Some(m) = monodromy else {
                    return Ok(Some(KnotPresentation { presentation: pres, oracle: None, fibered: None }));
                };
                let fp = fibered_presentation(m.genus()?, &m.automorphism()?)?;
                if classical_alexander(&pres)? != classical_alexander(&fp.presentation)? {
                    return Err(Error::Unsupported(
                        "supplied monodromy does not match the braid's Alexander polynomial".into(),
                    ));
                }
                Ok(Some(KnotPresentation {
                    presentation: fp.presentation.clone(),
                    oracle: Some(fp.oracle.clone()),
                    fibered: Some(fp),
                }))
            }
            KnotSpec::Fibered(m) => {
                let fp = fibered_presentation(m.genus()?, &m.automorphism()?)?;
                Ok(Some(KnotPresentation {
                    presentation: fp.presentation.clone(),
                    oracle: Some(fp.oracle.clone()),
                    fibered: Some(fp),
                }))
            }
            KnotSpec::Mirror { knot } | KnotSpec::Reverse { knot } => knot.presentation(),
            KnotSpec::Sum { .. } | KnotSpec::Cable { .. } => Ok(None),
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn json_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.lines().take(line.saturating_sub(1)).map(|l| l.len() + 1).sum();
    before + column.saturating_sub(1)
}
