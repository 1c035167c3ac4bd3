use exact_series::SeriesError;
use thiserror::Error;

/// Failure modes of curve-side Segre computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("bundle rank must be at least 1")]
    ZeroRank,
}
