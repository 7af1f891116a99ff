//! Presentations of fibered knot groups from a monodromy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{default_names, parse_word, Automorphism, GroupPresentation, NormalFormOracle, Word};

/// Textual monodromy: fiber generator images and inverse images, using the
/// default fiber names `a, b, c, …` unless `names` is given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    pub images: Vec<String>,
    pub inverse_images: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl MonodromySpec {
    pub fn new(images: &[&str], inverse_images: &[&str]) -> Self {
        MonodromySpec {
            genus: None,
            images: images.iter().map(|s| s.to_string()).collect(),
            inverse_images: inverse_images.iter().map(|s| s.to_string()).collect(),
            names: None,
        }
    }

    pub fn fiber_names(&self) -> Vec<String> {
        self.names.clone().unwrap_or_else(|| default_names(self.images.len()))
    }

    pub fn genus(&self) -> Result<u32> {
        let rank = self.images.len();
        if !rank.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("fiber rank {rank} is odd")));
        }
        let g = (rank / 2) as u32;
        match self.genus {
            Some(declared) if declared != g => Err(Error::InvalidSpec(format!(
                "declared genus {declared} but {rank} fiber generators"
            ))),
            _ => Ok(g),
        }
    }

    pub fn automorphism(&self) -> Result<Automorphism> {
        let names = self.fiber_names();
        if names.len() != self.images.len() {
            return Err(Error::InvalidSpec("names and images differ in length".into()));
        }
        let parse = |v: &[String]| v.iter().map(|s| parse_word(s, &names)).collect::<Result<Vec<Word>>>();
        Automorphism::new(parse(&self.images)?, parse(&self.inverse_images)?)
    }
}

/// `⟨z, a_1 … a_{2g} | z a_i z⁻¹ φ(a_i)⁻¹⟩` together with its normal-form oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberedPresentation {
    pub genus: u32,
    pub monodromy: Automorphism,
    pub presentation: GroupPresentation,
    pub oracle: NormalFormOracle,
}

pub fn fibered_presentation(genus: u32, phi: &Automorphism) -> Result<FiberedPresentation> {
    if genus == 0 {
        return Err(Error::InvalidSpec("a fiber of a nontrivial fibered knot has genus at least 1".into()));
    }
    let rank = 2 * genus as usize;
    if phi.rank() != rank {
        return Err(Error::InvalidAutomorphism(format!(
            "genus {genus} needs rank {rank}, monodromy has rank {}",
            phi.rank()
        )));
    }
    let relators = (0..rank as u32)
        .map(|i| {
            let a = i + 1;
            let img = phi.image(i).map_generators(|g| g + 1);
            Word::reduce([(0, 1), (a, 1), (0, -1)]).mul(&img.inverse())
        })
        .collect();
    let mut names = vec!["z".to_string()];
    names.extend(default_names(rank));
    Ok(FiberedPresentation {
        genus,
        monodromy: phi.clone(),
        presentation: GroupPresentation::new(names, relators)?,
        oracle: NormalFormOracle::free_by_cyclic(phi.clone()),
    })
}
