use exact_series::SegreValue;

use crate::bundle::CurveBundle;
use crate::error::CurveError;
use crate::integrals::segre_curve_closed;

/// The symmetric-product side of the Quot symmetry: for Quot_C(C^N, k) of a
/// degree-d_L line bundle, (-1)^{Nk} times the Quot integral equals the signed
/// symmetric-product integral of the rank-N, degree-N d_L bundle.
pub fn segre_quot_signed(
    genus: u32,
    n: u32,
    d_l: i64,
    k: usize,
) -> Result<SegreValue, CurveError> {
    let b = CurveBundle::new(genus, n, n as i64 * d_l)?;
    segre_curve_closed(&b, k)
}

/// The (unsigned) top Segre integral over Quot_C(C^N, k), recovered from the
/// symmetry by stripping the (-1)^{Nk} prefactor.
pub fn segre_quot(genus: u32, n: u32, d_l: i64, k: usize) -> Result<SegreValue, CurveError> {
    let signed = segre_quot_signed(genus, n, d_l, k)?;
    let value = if (n as usize * k) % 2 == 0 {
        signed.value
    } else {
        -signed.value
    };
    Ok(SegreValue::new(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_series::{integer, Sign};

    #[test]
    fn zero_length_quotients_integrate_to_one() {
        assert_eq!(segre_quot(3, 2, -1, 0).unwrap().value, integer(1));
    }

    #[test]
    fn one_point_signed_value_is_the_total_degree() {
        for (g, n, d_l) in [(0u32, 1u32, 3i64), (2, 2, 4), (1, 3, -2)] {
            let signed = segre_quot_signed(g, n, d_l, 1).unwrap();
            assert_eq!(signed.value, integer(n as i64 * d_l));
        }
    }

    #[test]
    fn quot_width_zero_is_rejected() {
        assert_eq!(segre_quot(1, 0, 3, 2).unwrap_err(), CurveError::ZeroRank);
    }

    #[test]
    fn sign_prefactor_follows_the_parity_of_n_times_k() {
        for n in 1..=3u32 {
            for k in 0..=4usize {
                let signed = segre_quot_signed(2, n, 3, k).unwrap();
                let unsigned = segre_quot(2, n, 3, k).unwrap();
                if signed.sign == Sign::Zero {
                    continue;
                }
                let flipped = (n as usize * k) % 2 == 1;
                assert_eq!(unsigned.value == signed.value, !flipped, "n={n} k={k}");
            }
        }
    }
}
