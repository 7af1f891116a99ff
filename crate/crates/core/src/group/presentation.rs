//! Finite group presentations and a small word syntax.

use super::word::Word;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let size = names.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g as usize >= size {
                    return Err(Error::Alphabet { index: g, size });
                }
            }
        }
        Ok(GroupPresentation { names, relators })
    }

    /// Generators named `x0, x1, …`.
    pub fn with_rank(rank: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((0..rank).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn deficiency(&self) -> i64 {
        self.names.len() as i64 - self.relators.len() as i64
    }

    pub fn require_deficiency_one(&self) -> Result<()> {
        if self.deficiency() == 1 {
            Ok(())
        } else {
            Err(Error::Deficiency { generators: self.names.len(), relators: self.relators.len() })
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.names)
    }
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "< {} | ", self.names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display_with(&self.names))?;
        }
        write!(f, " >")
    }
}

/// Parses words such as `a b^-1 a^2` or `a*b`. Names are matched greedily
/// against `names`; `1` alone is the identity.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let bytes = text.as_bytes();
    let trimmed = text.trim();
    if trimmed == "1" || (trimmed == "e" && !names.iter().any(|n| n == "e")) {
        return Ok(Word::identity());
    }
    let mut raw = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() || c == b'*' || c == b'.' {
            pos += 1;
            continue;
        }
        let rest = &text[pos..];
        let best = names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_empty() && rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        let (g, name) = best.ok_or_else(|| Error::Parse {
            position: pos,
            message: format!("expected a generator name, found `{}`", rest.chars().next().unwrap_or(' ')),
        })?;
        pos += name.len();
        let mut exp = 1i32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = text[start..pos].parse().map_err(|_| Error::Parse {
                position: start,
                message: "expected an integer exponent".into(),
            })?;
        }
        raw.push((g as u32, exp));
    }
    Ok(Word::reduce(raw))
}

/// Default fiber names: `a, b, c, …` up to 26, then `a1, a2, …`.
pub fn default_names(rank: usize) -> Vec<String> {
    if rank <= 26 {
        (0..rank).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("a{i}")).collect()
    }
}
