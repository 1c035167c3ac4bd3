use exact_series::{integer, rational, BigRational, TruncatedSeries};

use crate::error::SurfaceError;
use crate::geometry::{GeometryKind, SurfaceBundle};

/// The three universal factors of the surface generating series at rank r,
/// as series in the auxiliary variable t:
/// A0 = (1+(1+r)t)^{-r-1} (1+(2+r)t)^r,
/// A1 = (1+(1+r)t)^{r/2} (1+(2+r)t)^{-(r-1)/2},
/// A2 = (1+(1+r)t)^{r^2+2r} (1+(2+r)t)^{-r^2+1} (1+(1+r)(2+r)t)^{-1}.
fn universal_factors(
    r: i64,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries, TruncatedSeries), SurfaceError> {
    let u = TruncatedSeries::one_plus(integer(1 + r), order);
    let v = TruncatedSeries::one_plus(integer(2 + r), order);
    let w = TruncatedSeries::one_plus(integer((1 + r) * (2 + r)), order);
    let a0 = u.int_pow(-r - 1)?.mul(&v.int_pow(r)?)?;
    let a1 = u
        .rational_pow(&rational(r, 2))?
        .mul(&v.rational_pow(&rational(1 - r, 2))?)?;
    let a2 = u
        .int_pow(r * r + 2 * r)?
        .mul(&v.int_pow(-r * r + 1)?)?
        .mul(&w.int_pow(-1)?)?;
    Ok((a0, a1, a2))
}

/// Generating series of the top Segre integrals, Sum_k z^k Integral s(F^[k]),
/// to order k_max in z.
///
/// Built as A0^{c2} A1^{c1^2} A2^{w} with w = 1 on K3 and w = 1/2 on Enriques
/// surfaces, then pushed through the compositional reversal of
/// z = t (1+(1+r)t)^{1+r}. Internal truncation order is k_max + 2; the
/// closed-form cross tests certify that this suffices.
pub fn segre_series(
    kind: GeometryKind,
    b: &SurfaceBundle,
    k_max: usize,
) -> Result<TruncatedSeries, SurfaceError> {
    let weight: BigRational = match kind {
        GeometryKind::K3 => integer(1),
        GeometryKind::Enriques => rational(1, 2),
        other => {
            return Err(SurfaceError::UnsupportedKind {
                kind: other,
                operation: "segre_series",
            })
        }
    };
    let r = b.rank as i64;
    let order = k_max + 2;
    let (a0, a1, a2) = universal_factors(r, order)?;
    let assembled = a0
        .int_pow(b.c2)?
        .mul(&a1.int_pow(b.c1_sq)?)?
        .mul(&a2.rational_pow(&weight)?)?;
    let z = TruncatedSeries::identity(order)
        .mul(&TruncatedSeries::one_plus(integer(1 + r), order).int_pow(1 + r)?)?;
    let t_of_z = z.reverse()?;
    Ok(assembled.compose(&t_of_z)?.truncated(k_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_bundle(rank: u32, c1_sq: i64, c2: i64) -> SurfaceBundle {
        SurfaceBundle::for_kind(GeometryKind::K3, rank, c1_sq, 0, c2).unwrap()
    }

    #[test]
    fn constant_term_is_always_one() {
        let s = segre_series(GeometryKind::K3, &k3_bundle(2, 3, -1), 4).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), &integer(1));
    }

    #[test]
    fn first_coefficient_on_k3_line_bundles_is_the_self_intersection() {
        for c1_sq in -2..=6 {
            let s = segre_series(GeometryKind::K3, &k3_bundle(1, c1_sq, 0), 2).unwrap();
            assert_eq!(s.coefficient(1).unwrap(), &integer(c1_sq));
        }
    }

    #[test]
    fn abelian_surfaces_have_no_series_route() {
        let b = SurfaceBundle::for_kind(GeometryKind::Abelian, 1, 2, 0, 0).unwrap();
        assert_eq!(
            segre_series(GeometryKind::Abelian, &b, 3).unwrap_err(),
            SurfaceError::UnsupportedKind {
                kind: GeometryKind::Abelian,
                operation: "segre_series"
            }
        );
    }
}
