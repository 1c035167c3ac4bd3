use exact_series::{binomial, integer, BigRational, SegreValue, TruncatedSeries};

use crate::error::SurfaceError;
use crate::geometry::GeometryKind;

/// Closed coefficient-extraction form of the top Segre integral on the
/// K-trivial geometries, with chi allowed to be any rational.
///
/// The value is the t^k coefficient of
/// (1 + (2+r)t)^delta (1 + (1+r)t)^{chi - delta - (r+1)k + s} (1 + (1+r)(2+r)t)^e
/// where (s, e) is (0, 0) on K3, (-1, 1) on abelian and bielliptic surfaces,
/// and (-1/2, 1/2) on Enriques surfaces.
pub fn segre_closed_rational(
    kind: GeometryKind,
    rank: u32,
    chi: &BigRational,
    delta: &BigRational,
    k: usize,
) -> Result<SegreValue, SurfaceError> {
    let (shift, tail): (BigRational, BigRational) = match kind {
        GeometryKind::K3 => (integer(0), integer(0)),
        GeometryKind::Abelian | GeometryKind::Bielliptic => (integer(-1), integer(1)),
        GeometryKind::Enriques => (exact_series::rational(-1, 2), exact_series::rational(1, 2)),
        other => {
            return Err(SurfaceError::UnsupportedKind {
                kind: other,
                operation: "segre_closed",
            })
        }
    };
    let r = rank as i64;
    let middle_exponent = chi - delta - integer((r + 1) * k as i64) + shift;
    let value = TruncatedSeries::one_plus(integer(2 + r), k)
        .rational_pow(delta)?
        .mul(&TruncatedSeries::one_plus(integer(1 + r), k).rational_pow(&middle_exponent)?)?
        .mul(&TruncatedSeries::one_plus(integer((1 + r) * (2 + r)), k).rational_pow(&tail)?)?
        .coefficient(k)?
        .clone();
    Ok(SegreValue::new(value))
}

/// `segre_closed_rational` at an integer Euler characteristic, the geometric case.
pub fn segre_closed(
    kind: GeometryKind,
    rank: u32,
    chi: i64,
    delta: &BigRational,
    k: usize,
) -> Result<SegreValue, SurfaceError> {
    segre_closed_rational(kind, rank, &integer(chi), delta, k)
}

/// The delta = 0 specialization on K3: (r+1)^k binom(chi - (r+1)k, k), with
/// the generalized falling-factorial binomial.
pub fn segre_delta0(rank: u32, chi: i64, k: usize) -> SegreValue {
    let r = rank as i64;
    let top = integer(chi - (r + 1) * k as i64);
    SegreValue::new(num_traits::pow(integer(r + 1), k) * binomial(&top, k))
}
