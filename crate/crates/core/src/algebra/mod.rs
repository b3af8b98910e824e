//! Graded-commutative algebras with even and odd generators, and their
//! quotients.

mod context;
mod element;
mod engine;
pub mod expr;
mod groebner;
mod monomial;
pub mod order;
mod presentation;

use alloc::string::String;

pub use context::{Context, GeneratorSpec, Parity, Slot};
pub use element::{Degree, Element};
pub use engine::{EvenQuotient, PieceSummary, ReductionEngine, Structure};
pub use expr::{format, parse, ParseError};
pub use groebner::GroebnerBasis;
pub use monomial::Monomial;
pub use presentation::{PieceSpec, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements belong to different generator contexts")]
    ContextMismatch,
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("invalid generator name '{0}'")]
    BadGeneratorName(String),
    #[error("generator '{0}' declared twice")]
    DuplicateGenerator(String),
    #[error("substitution needs {expected} images, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("even generator '{0}' cannot map to an odd element")]
    ParityMismatch(String),
    #[error("inconsistent presentation: 1 lies in the relation ideal")]
    Inconsistent,
    #[error("quotient is infinite-dimensional")]
    InfiniteQuotient,
    #[error("declared basis{where_} is not a basis of the quotient: {size} elements, rank {rank}, quotient dimension {dimension}")]
    NotABasis { where_: String, size: usize, rank: usize, dimension: usize },
    #[error("relation '{0}' involves odd generators")]
    OddRelation(String),
    #[error("invalid piece structure: {0}")]
    Pieces(String),
    #[error("odd layer {layer} cannot be decomposed: {reason}")]
    Layer { layer: usize, reason: String },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
