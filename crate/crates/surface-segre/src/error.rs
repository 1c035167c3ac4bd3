use exact_series::SeriesError;
use thiserror::Error;

use crate::geometry::GeometryKind;

/// Failure modes of surface-side Segre computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("bundle rank must be at least 1")]
    ZeroRank,
    #[error("{kind} fixes (chi(O), K^2) = {expected:?}, got ({chi_o}, {k_sq})")]
    KindMismatch {
        kind: GeometryKind,
        expected: (i64, i64),
        chi_o: i64,
        k_sq: i64,
    },
    #[error("K-trivial geometries force c1.K = 0, got {c1_dot_k}")]
    NonzeroCanonicalPairing { c1_dot_k: i64 },
    #[error("{kind} does not determine (chi(O), K^2); construct the bundle with explicit surface data")]
    UnderdeterminedKind { kind: GeometryKind },
    #[error("c1^2 - c1.K = {difference} is odd, which no bundle on a surface realizes")]
    ChiParity { difference: i64 },
    #[error("{operation} is not defined for {kind}")]
    UnsupportedKind {
        kind: GeometryKind,
        operation: &'static str,
    },
    #[error("exponent sum m + n + p = {sum} must be even")]
    OddExponentSum { sum: i64 },
    #[error("polarization degree must be positive, got h = {h}")]
    NonPositivePolarization { h: i64 },
}
