use thiserror::Error;

use crate::kernel::AxiomFailure;

pub type Result<T, E = RingError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ring `{name}` would have {size} elements, over the cap of {cap}")]
    Capacity { name: String, size: u128, cap: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("tables do not define a ring: {0}")]
    Axiom(AxiomFailure),

    #[error("polynomial degree {degree} exceeds the cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("search budget of {budget} nodes exhausted while {what}")]
    SearchBudget { what: String, budget: u64 },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),
}
