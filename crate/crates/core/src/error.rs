use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HupError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("ill-conditioned system: minimum node gap {min_gap:e} below {tolerance:e}")]
    IllConditioned { min_gap: f64, tolerance: f64 },

    #[error("value {value} lies below the minimum {minimum} of h_c")]
    BelowMinimum { value: f64, minimum: f64 },

    #[error("oscillation budget exceeded: phase span {span:e} > budget {budget:e}")]
    BudgetExceeded { span: f64, budget: f64 },

    #[error("quadrature did not reach tolerance {target:e} (estimate {estimate:e})")]
    QuadratureFailed { estimate: f64, target: f64 },

    #[error("root search failed: {0}")]
    RootNotFound(String),

    #[error("degenerate witness: {0}")]
    DegenerateWitness(String),

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("subset search cap exceeded: {required} choices > cap {cap}")]
    CapExceeded { required: u128, cap: usize },

    #[error("candidate set must be folded first")]
    NotFolded,
}

pub type Result<T> = std::result::Result<T, HupError>;
