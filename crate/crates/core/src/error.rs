use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate map: leading coefficient is zero")]
    DegenerateMap,

    #[error("critical orbit undecided after {steps} steps")]
    IterationCapExceeded { steps: usize },

    #[error("quadrature budget is not finite (T^N overflows); choose a smaller depth")]
    BudgetOverflow,

    #[error("tolerance {tol:e} cannot be met within the floating range or node cap")]
    InfeasibleTolerance { tol: f64 },

    #[error("unsupported map: {0}")]
    UnsupportedMap(String),

    #[error("root finding failed: {0}")]
    RootFindingFailure(String),

    #[error("group closure exceeds {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures of the floating-point machinery, as opposed to bad input.
    pub fn is_numeric_failure(&self) -> bool {
        matches!(
            self,
            Error::BudgetOverflow
                | Error::RootFindingFailure(_)
                | Error::IterationCapExceeded { .. }
                | Error::InfeasibleTolerance { .. }
        )
    }
}
