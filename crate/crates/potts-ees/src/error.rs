//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("lattice for N={n}, q={q} has {size} classes, beyond the supported index range")]
    LatticeTooLarge { n: usize, q: usize, size: u128 },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("energy {energy} outside the band range [{min}, {max}]")]
    EnergyOutOfRange { energy: f64, min: f64, max: f64 },

    #[error("ball of radius {radius} around {center:?} contains no lattice class (N too small)")]
    EmptyBall { center: Vec<f64>, radius: f64 },

    #[error("kernel is not reversible with respect to the given distribution: {0}")]
    NotReversible(String),

    #[error("eigensolver did not converge: {0}")]
    EigenFailed(String),

    #[error("invariant violated: {name}: {detail}")]
    InvariantViolation { name: String, detail: String },

    #[error("exponential fit requires positive values, got {0}")]
    NonPositiveValue(f64),

    #[error("exponential fit requires at least 4 points, got {0}")]
    TooFewPoints(usize),

    #[error(
        "jump-move-jump reachability from the inner ball leaves the outer ball \
         (N too small for epsilon={epsilon}, delta={delta}; first offending class index {class})"
    )]
    ReachabilityPremise { epsilon: f64, delta: f64, class: usize },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invariant(name: &str, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            name: name.to_string(),
            detail: detail.into(),
        }
    }
}
