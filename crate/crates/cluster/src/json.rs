//! JSON forms of quivers, seeds and words.
//!
//! ```text
//! quiver: {"vertices": ["O2", ...], "eps": [[0, 1, ...], ...]}
//! seed:   {"flavor": "x" | "a", "quiver": {...},
//!          "variables": ["Z_O2", ...], "coords": ["Z_O2", ...]}
//! word:   [{"mu": "O2"}, {"sigma": {"B2": "G2", "G2": "B2"}}, ...]
//! ```
//!
//! Word arrays list steps in application order. A seed without `coords`
//! uses the variable `Z_<vertex>` (or `C_<vertex>`) at each vertex.

use std::collections::BTreeMap;

use okamoto_algebra::{parse, print, Ring};
use serde::{Deserialize, Serialize};

use crate::quiver::Quiver;
use crate::seed::{Flavor, Seed};
use crate::word::{Step, Word};
use crate::ClusterError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub eps: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeedJson {
    pub flavor: String,
    pub quiver: QuiverJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum StepJson {
    Mu(String),
    Sigma(BTreeMap<String, String>),
}

impl From<&Quiver> for QuiverJson {
    fn from(q: &Quiver) -> QuiverJson {
        QuiverJson { vertices: q.labels().to_vec(), eps: q.matrix().to_vec() }
    }
}

impl QuiverJson {
    pub fn to_quiver(&self) -> Result<Quiver, ClusterError> {
        Quiver::new(self.vertices.clone(), self.eps.clone())
    }
}

fn prefix(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::X => "Z",
        Flavor::A => "C",
    }
}

impl SeedJson {
    pub fn from_seed(seed: &Seed, ring: &Ring) -> SeedJson {
        SeedJson {
            flavor: match seed.flavor {
                Flavor::X => "x".into(),
                Flavor::A => "a".into(),
            },
            quiver: (&seed.quiver).into(),
            variables: Some(ring.names().to_vec()),
            coords: Some(seed.coords.iter().map(|c| print(c, ring)).collect()),
        }
    }

    pub fn to_seed(&self) -> Result<(Seed, Ring), ClusterError> {
        let flavor = match self.flavor.as_str() {
            "x" | "X" => Flavor::X,
            "a" | "A" => Flavor::A,
            other => return Err(ClusterError::Format(format!("unknown flavor `{other}`"))),
        };
        let quiver = self.quiver.to_quiver()?;
        let p = prefix(flavor);
        let names: Vec<String> = match &self.variables {
            Some(v) => v.clone(),
            None => quiver.labels().iter().map(|l| format!("{p}_{l}")).collect(),
        };
        let ring = Ring::new(names)?;
        let coords = match &self.coords {
            Some(cs) => cs.iter().map(|c| parse(c, &ring)).collect::<Result<Vec<_>, _>>()?,
            None => quiver
                .labels()
                .iter()
                .map(|l| parse(&format!("{p}_{l}"), &ring))
                .collect::<Result<Vec<_>, _>>()?,
        };
        Ok((Seed::new(flavor, quiver, coords)?, ring))
    }
}

pub fn word_to_json(w: &Word, q: &Quiver) -> Vec<StepJson> {
    w.application_order()
        .map(|s| match s {
            Step::Mu(k) => StepJson::Mu(q.labels()[*k].clone()),
            Step::Sigma(p) => StepJson::Sigma(
                p.iter()
                    .enumerate()
                    .filter(|(i, j)| i != *j)
                    .map(|(i, &j)| (q.labels()[i].clone(), q.labels()[j].clone()))
                    .collect(),
            ),
        })
        .collect()
}

pub fn word_from_json(steps: &[StepJson], q: &Quiver) -> Result<Word, ClusterError> {
    let mut out = Vec::new();
    for s in steps {
        match s {
            StepJson::Mu(l) => out.push(Step::Mu(q.vertex(l)?)),
            StepJson::Sigma(map) => {
                let mut p: Vec<usize> = (0..q.len()).collect();
                for (a, b) in map {
                    p[q.vertex(a)?] = q.vertex(b)?;
                }
                let mut seen = vec![false; p.len()];
                for &j in &p {
                    if std::mem::replace(&mut seen[j], true) {
                        return Err(ClusterError::Format("sigma is not a permutation".into()));
                    }
                }
                out.push(Step::Sigma(p));
            }
        }
    }
    Ok(Word::from_application_order(out))
}
