use crate::error::CurveError;

/// Discrete invariants of a vector bundle on a smooth projective curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveBundle {
    pub genus: u32,
    pub rank: u32,
    pub degree: i64,
}

impl CurveBundle {
    pub fn new(genus: u32, rank: u32, degree: i64) -> Result<Self, CurveError> {
        if rank == 0 {
            return Err(CurveError::ZeroRank);
        }
        Ok(Self {
            genus,
            rank,
            degree,
        })
    }

    /// Euler characteristic chi = d + r(1 - g), computed, never stored.
    pub fn chi(&self) -> i64 {
        self.degree + self.rank as i64 * (1 - self.genus as i64)
    }
}
