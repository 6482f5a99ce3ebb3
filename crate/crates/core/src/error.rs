use thiserror::Error;

use crate::group::Elem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element index {0} out of range for group of order {1}")]
    IndexOutOfRange(Elem, usize),
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("subgroup is not normal in the given overgroup")]
    NotNormal,
    #[error("no element of the overgroup conjugates the p-subgroup into the target")]
    NotConjugatable,
    #[error("prime {p} does not divide the group order {order}")]
    PNotDividing { p: u64, order: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("object set is empty")]
    DeltaEmpty,
    #[error("empty word")]
    EmptyWord,
    #[error("word is not in the domain of the partial product")]
    NotInDomain,
    #[error("subgroup is not an object of the locality")]
    PNotInDelta,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("Sylow subgroup of order {order} exceeds the bound {bound}")]
    SBoundExceeded { order: usize, bound: usize },
    #[error("element is not in the span of the generators")]
    NotInSpan,
    #[error("element is not in the locality")]
    NotInLocality,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a morphism of the transporter category")]
    NotAMorphism,
    #[error("invalid module action: {0}")]
    ActionInvalid(String),
    #[error("computation bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("functor is inconsistent: {0}")]
    FunctorInconsistent(String),
    #[error("integer overflow in exact linear algebra")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
