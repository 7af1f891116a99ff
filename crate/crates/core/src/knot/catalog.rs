//! Named knots with their classical data.

use serde::{Deserialize, Serialize};

use super::braid::parse_braid;
use super::fibered::{fibered_presentation, MonodromySpec};
use crate::error::{Error, Result};
use crate::fox::{classical_alexander, LaurentPoly};
use crate::group::{GroupPresentation, NormalFormOracle, Word};

pub const VOLUME_4_1: f64 = 2.029_883_212_819_307;
pub const VOLUME_5_2: f64 = 2.828_122_088_330_783;

/// Largest eigenvalue of the abelianized figure-eight monodromy, `(3+√5)/2`.
pub fn dilatation_4_1() -> f64 {
    (3.0 + 5f64.sqrt()) / 2.0
}

pub fn exp_vol_over_6pi(volume: f64) -> f64 {
    (volume / (6.0 * std::f64::consts::PI)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LeafKind {
    /// Torus knot `T(p, q)`; the unknot is `T(1, 1)`.
    Torus { p: i64, q: i64 },
    Hyperbolic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: LeafKind,
    pub genus: u32,
    pub volume: f64,
    pub fibered: bool,
    pub exp_vol_over_6pi: f64,
    /// Normalized Alexander polynomial, coefficients from degree 0 upward.
    pub alexander: Vec<i64>,
    /// Common constant of the small- and large-`t` asymptotics, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading_coefficient: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<MonodromySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    pub notes: Vec<String>,
}

/// A presentation together with what is known about its word problem.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotPresentation {
    pub presentation: GroupPresentation,
    pub oracle: Option<NormalFormOracle>,
    pub fibered: Option<super::fibered::FiberedPresentation>,
}

pub const NAMES: [&str; 5] = ["unknot", "3_1", "4_1", "5_2", "K12n242"];

#[allow(clippy::too_many_arguments)]
fn entry(
    name: &str,
    kind: LeafKind,
    genus: u32,
    volume: f64,
    fibered: bool,
    alexander: &[i64],
    monodromy: Option<MonodromySpec>,
    braid: Option<&str>,
    notes: &[&str],
) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        kind,
        genus,
        volume,
        fibered,
        exp_vol_over_6pi: exp_vol_over_6pi(volume),
        alexander: alexander.to_vec(),
        leading_coefficient: Some(1.0),
        monodromy,
        braid: braid.map(str::to_string),
        notes: notes.iter().map(|s| s.to_string()).collect(),
    }
}

/// Looks up `unknot`, `3_1`, `4_1`, `5_2`, `K12n242` or `T(p,q)`.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let e = match name.trim() {
        "unknot" | "0_1" => entry(
            "unknot",
            LeafKind::Torus { p: 1, q: 1 },
            0,
            0.0,
            true,
            &[1],
            None,
            Some("s1"),
            &["group presentation <g, h | g h^-1>, infinite cyclic"],
        ),
        "3_1" | "trefoil" => entry(
            "3_1",
            LeafKind::Torus { p: 2, q: 3 },
            1,
            0.0,
            true,
            &[1, -1, 1],
            Some(MonodromySpec::new(&["b", "a^-1 b"], &["a b^-1", "a"])),
            Some("s1 s1 s1"),
            &["torus knot T(2,3)", "periodic monodromy of order 6"],
        ),
        "4_1" | "figure-eight" => entry(
            "4_1",
            LeafKind::Hyperbolic,
            1,
            VOLUME_4_1,
            true,
            &[1, -3, 1],
            Some(MonodromySpec::new(&["a b", "b a b"], &["a a b^-1", "b a^-1"])),
            Some("s1 s2^-1 s1 s2^-1"),
            &[
                "the only hyperbolic fibered knot of genus one",
                "pseudo-Anosov monodromy with dilatation (3+sqrt5)/2",
                "volume is twice the regular ideal tetrahedron volume",
            ],
        ),
        "5_2" => entry(
            "5_2",
            LeafKind::Hyperbolic,
            1,
            VOLUME_5_2,
            false,
            &[2, -3, 2],
            None,
            Some("s1 s1 s1 s2 s1^-1 s2"),
            &["not fibered", "no word-problem oracle: numeric evaluation unsupported"],
        ),
        "K12n242" => entry(
            "K12n242",
            LeafKind::Hyperbolic,
            5,
            VOLUME_5_2,
            true,
            &[],
            None,
            None,
            &[
                "the (-2,3,7) pretzel knot; same volume as 5_2",
                "fibered, monodromy not supplied",
            ],
        ),
        other => return torus_entry(other),
    };
    if let Some(m) = &e.monodromy {
        let gate = monodromy_gate(m)?;
        if gate.alexander.coeffs() != e.alexander.as_slice() {
            return Err(Error::InvalidAutomorphism(format!(
                "stored monodromy for {} fails the Alexander polynomial gate",
                e.name
            )));
        }
    }
    Ok(e)
}

fn parse_torus(name: &str) -> Option<(i64, i64)> {
    let inner = name.strip_prefix("T(")?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn torus_entry(name: &str) -> Result<CatalogEntry> {
    let (p, q) = parse_torus(name).ok_or_else(|| Error::UnknownKnot(name.to_string()))?;
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::InvalidSpec(format!("T({p},{q}) needs coprime nonzero parameters")));
    }
    let genus = ((p.abs() - 1) * (q.abs() - 1) / 2) as u32;
    let alexander = torus_alexander(p.abs(), q.abs()).coeffs().to_vec();
    Ok(entry(
        &format!("T({p},{q})"),
        LeafKind::Torus { p, q },
        genus,
        0.0,
        true,
        &alexander,
        None,
        None,
        &["torus knot, presentation <x, y | x^p y^-q>"],
    ))
}

/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`.
pub fn torus_alexander(p: i64, q: i64) -> LaurentPoly {
    let one = LaurentPoly::constant(1);
    let tm = |n: i64| LaurentPoly::monomial(1, n).sub(&one);
    tm(p * q)
        .mul(&tm(1))
        .div_exact(&tm(p).mul(&tm(q)))
        .expect("cyclotomic quotient is exact")
        .normalized()
}

/// Result of checking a monodromy against classical data.
#[derive(Debug, Clone, PartialEq)]
pub struct MonodromyGate {
    pub alexander: LaurentPoly,
    pub trace: i64,
    /// Largest absolute eigenvalue of the abelianized map (rank two only).
    pub spectral_radius: Option<f64>,
}

pub fn monodromy_gate(m: &MonodromySpec) -> Result<MonodromyGate> {
    let phi = m.automorphism()?;
    let fp = fibered_presentation(m.genus()?, &phi)?;
    let alexander = classical_alexander(&fp.presentation)?;
    let ab = phi.abelianized();
    let trace = (0..ab.len()).map(|i| ab[i][i]).sum();
    let spectral_radius = (ab.len() == 2).then(|| {
        let tr = trace as f64;
        let det = (ab[0][0] * ab[1][1] - ab[0][1] * ab[1][0]) as f64;
        let disc = tr * tr - 4.0 * det;
        if disc >= 0.0 {
            (tr.abs() + disc.sqrt()) / 2.0
        } else {
            det.abs().sqrt()
        }
    });
    Ok(MonodromyGate { alexander, trace, spectral_radius })
}

impl CatalogEntry {
    /// A presentation usable for numerics, when one is known.
    pub fn presentation(&self) -> Result<Option<KnotPresentation>> {
        if self.name == "unknot" {
            let p = GroupPresentation::new(vec!["g".into(), "h".into()], vec![Word::from_letters([1, -2])])?;
            return Ok(Some(KnotPresentation {
                presentation: p,
                oracle: Some(NormalFormOracle::cyclic(vec![1, 1])?),
                fibered: None,
            }));
        }
        if let Some(m) = &self.monodromy {
            let fp = fibered_presentation(m.genus()?, &m.automorphism()?)?;
            return Ok(Some(KnotPresentation {
                presentation: fp.presentation.clone(),
                oracle: Some(fp.oracle.clone()),
                fibered: Some(fp),
            }));
        }
        if let LeafKind::Torus { p, q } = self.kind {
            let rel = Word::reduce([(0, p as i32), (1, -q as i32)]);
            let pres = GroupPresentation::new(vec!["x".into(), "y".into()], vec![rel])?;
            return Ok(Some(KnotPresentation { presentation: pres, oracle: None, fibered: None }));
        }
        if let Some(b) = &self.braid {
            let pres = parse_braid(b)?.wirtinger()?;
            return Ok(Some(KnotPresentation { presentation: pres, oracle: None, fibered: None }));
        }
        Ok(None)
    }

    pub fn alexander_polynomial(&self) -> Option<LaurentPoly> {
        (!self.alexander.is_empty()).then(|| LaurentPoly::from_coeffs(&self.alexander))
    }
}

pub fn all_entries() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| catalog(n).expect("built-in entry")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_constants() {
        let e = catalog("4_1").unwrap();
        assert!((e.exp_vol_over_6pi - 1.113).abs() < 1e-3);
        assert_eq!(e.genus, 1);
        assert!(e.fibered);
    }

    #[test]
    fn five_two_constants() {
        let e = catalog("5_2").unwrap();
        assert!((e.exp_vol_over_6pi - 1.162).abs() < 1e-3);
        assert!((e.volume - 2.828).abs() < 1e-3);
        assert!(!e.fibered);
    }

    #[test]
    fn unknot_constants() {
        let e = catalog("unknot").unwrap();
        assert_eq!((e.genus, e.volume), (0, 0.0));
        assert_eq!(e.exp_vol_over_6pi, 1.0);
    }

    #[test]
    fn figure_eight_gate() {
        let g = monodromy_gate(catalog("4_1").unwrap().monodromy.as_ref().unwrap()).unwrap();
        assert_eq!(g.trace, 3);
        assert!((g.spectral_radius.unwrap() - dilatation_4_1()).abs() < 1e-12);
    }

    #[test]
    fn trefoil_gate() {
        let g = monodromy_gate(catalog("3_1").unwrap().monodromy.as_ref().unwrap()).unwrap();
        assert_eq!(g.alexander, LaurentPoly::from_coeffs(&[1, -1, 1]));
        assert_eq!(g.spectral_radius, Some(1.0));
    }

    #[test]
    fn torus_family() {
        let e = catalog("T(2,9)").unwrap();
        assert_eq!(e.genus, 4);
        assert_eq!(e.alexander, vec![1, -1, 1, -1, 1, -1, 1, -1, 1]);
        assert!(matches!(catalog("T(2,4)"), Err(Error::InvalidSpec(_))));
        assert!(matches!(catalog("6_1"), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn exp_volume_consistency() {
        for e in all_entries() {
            assert!((e.exp_vol_over_6pi - exp_vol_over_6pi(e.volume)).abs() < 1e-9);
        }
    }
}
