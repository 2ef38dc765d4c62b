use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gcd of two zero forms is undefined")]
    ZeroGcd,
    #[error("singular matrix: {0}")]
    Singular(&'static str),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("inclusion violated: {0}")]
    NotInSpan(String),
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("projection undefined on curve")]
    ProjectionUndefined,
    #[error("non-generic targets")]
    NonGenericTargets,
    #[error("not a group within tolerance: {0}")]
    NotClosed(String),
    #[error("group of order {0} is not in the catalog")]
    OrderNotInCatalog(usize),
    #[error("intermediate factorization requires complete system")]
    RequiresCompleteSystem,
}

impl Error {
    /// Errors caused by the caller's data rather than by a numerical failure.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NonGenericTargets | Error::NotClosed(_) | Error::OrderNotInCatalog(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
