use exact_series::SeriesError;
use surface_segre::SurfaceError;
use thiserror::Error;

/// Failure modes of the positivity laboratory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("polarization degree H^2 must be a positive even integer, got {h_sq}")]
    InvalidPolarizationDegree { h_sq: i64 },
    #[error("multiple must be at least 1, got {n}")]
    NonPositiveMultiple { n: i64 },
    #[error("slope parameters must be at least 1, got ({a}, {b})")]
    NonPositiveSlope { a: i64, b: i64 },
    #[error("family invariants for (a, b) = ({a}, {b}) overflow the 64-bit range")]
    FamilyOverflow { a: i64, b: i64 },
}
