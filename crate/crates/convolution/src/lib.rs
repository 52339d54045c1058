//! Multiplicative and additive middle convolution of matrix tuples, with the
//! scalar addition functors used as preconditioners.
//!
//! A middle convolution runs in three stages: build the block matrices,
//! find the invariant subspaces K and L, then conjugate by a basis
//! completion whose leading columns span K (+ L) and keep the trailing
//! diagonal block.

pub mod invariants;
pub mod json;
pub mod mc;
pub mod props;
pub mod tuple;

use okamoto_algebra::AlgebraError;
use thiserror::Error;

pub use mc::{
    auto_completion, convolution_add, convolution_mult, invariant_subspaces_add,
    invariant_subspaces_mult, middle_convolution_add, middle_convolution_mult, McOptions, McResult,
    SubspacePair,
};
pub use tuple::{addition_add, addition_mult, Flavor, MatrixTuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvolutionError {
    #[error("expected a {expected:?} tuple, found {found:?}")]
    Flavor { expected: Flavor, found: Flavor },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("scalar {0} is zero")]
    ZeroScalar(usize),
    #[error("leading columns of the completion do not span the quotiented subspace")]
    CompletionSpan,
    #[error("basis completion is not invertible")]
    CompletionSingular,
    #[error("matrix {0} does not preserve the quotiented subspace")]
    NotInvariant(usize),
    #[error("bad input: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
