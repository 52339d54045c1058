//! Quivers, cluster X- and A-seeds, mutation words and the ensemble map.
//!
//! Words compose like functions: in `Word::compose(vec![a, b])` the step
//! `b` acts first. Files and the command line use application order
//! instead; [`Word::from_application_order`] and [`Word::parse_list`]
//! convert.

pub mod json;
pub mod quiver;
pub mod props;
pub mod reference;
pub mod seed;
pub mod suite;
pub mod word;

use okamoto_algebra::AlgebraError;
use thiserror::Error;

pub use quiver::Quiver;
pub use seed::{ensemble_map, is_positive_laurent, ASeed, Flavor, Seed, XSeed};
pub use word::{Step, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("exchange matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("bad input: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
