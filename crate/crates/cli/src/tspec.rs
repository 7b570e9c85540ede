//! JSON file format for T-graded ideals:
//!
//! ```json
//! {
//!   "base": "poly:1",
//!   "components": [[[2]], [[1]]],
//!   "K": 2,
//!   "generators": [
//!     {"exp": [2], "level": 0},
//!     {"exp": [1], "level": 1},
//!     {"exp": [0], "level": 2}
//!   ]
//! }
//! ```
//!
//! `components[k]` lists the generator exponent vectors of I_k; T^K is
//! implicit. The optional `generators` list names the homogeneous generators
//! used by bracket-power experiments and must include the T^K entry.

use crate::expr::parse_ring;
use crate::fail::Failure;
use lech_core::tgraded::{ChosenGenerator, TGradedIdeal};
use lech_core::{ExponentVector, MonomialIdeal};
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Deserialize)]
pub struct TGradedFile {
    pub base: String,
    pub components: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(default)]
    pub generators: Option<Vec<GeneratorEntry>>,
}

#[derive(Debug, Deserialize)]
pub struct GeneratorEntry {
    pub exp: Vec<i64>,
    pub level: usize,
}

pub fn load(path: &Path) -> Result<(TGradedIdeal, Option<Vec<ChosenGenerator>>), Failure> {
    let text = std::fs::read_to_string(path)?;
    let file: TGradedFile = serde_json::from_str(&text)
        .map_err(|e| Failure::input("syntax", format!("bad T-graded spec: {e}")))?;
    if file.k != file.components.len() {
        return Err(Failure::input(
            "invalid_argument",
            format!(
                "K = {} disagrees with the {} listed components",
                file.k,
                file.components.len()
            ),
        ));
    }
    let base = parse_ring(&file.base)?;
    let mut components = Vec::with_capacity(file.components.len());
    for lists in &file.components {
        let gens: Result<Vec<ExponentVector>, _> = lists
            .iter()
            .map(|l| ExponentVector::new(l.clone()))
            .collect();
        components.push(MonomialIdeal::new(base.clone(), gens.map_err(Failure::from)?)?);
    }
    let ideal = TGradedIdeal::new(base, components)?;
    let choice = match file.generators {
        None => None,
        Some(entries) => Some(
            entries
                .into_iter()
                .map(|g| {
                    Ok(ChosenGenerator {
                        exponent: ExponentVector::new(g.exp).map_err(Failure::from)?,
                        level: g.level,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?,
        ),
    };
    Ok((ideal, choice))
}
