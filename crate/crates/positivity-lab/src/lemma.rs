//! Coefficient-positivity window of the exponent form
//! s^m (1+2t)^{(n-1)/2} (1+6t)^{(p-1)/2}.
//!
//! For m >= 0, p >= 0 and even m + n + p every coefficient with index at most
//! min((m+n+p)/2 - 1, m - 1) is positive. The verifier asserts this window on
//! every hypothesis-satisfying call and merely reports findings otherwise, so
//! exploration outside the hypotheses stays possible.

use exact_series::{integer, rational, Sign, TruncatedSeries};
use surface_segre::SurfaceError;

use crate::error::LabError;

/// Outcome of scanning the exponent-form coefficients for positivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub m: i64,
    pub n: i64,
    pub p: i64,
    /// m >= 0 and p >= 0, the hypotheses under which the window is guaranteed.
    pub hypotheses_hold: bool,
    /// min((m+n+p)/2 - 1, m - 1), the last index the guarantee covers.
    pub bound: i64,
    pub scanned_up_to: usize,
    pub first_nonpositive: Option<usize>,
    /// Hypotheses hold yet a nonpositive coefficient landed inside the window.
    pub window_violated: bool,
}

/// The exponent-form series to the requested order; m + n + p must be even.
fn exponent_form_series(m: i64, n: i64, p: i64, order: usize) -> Result<TruncatedSeries, LabError> {
    let sum = m + n + p;
    if sum % 2 != 0 {
        return Err(SurfaceError::OddExponentSum { sum }.into());
    }
    let half = rational(1, 2);
    let u = TruncatedSeries::one_plus(integer(2), order);
    let v = TruncatedSeries::one_plus(integer(6), order);
    let s = u
        .rational_pow(&half)?
        .add(&v.rational_pow(&half)?)?
        .scale(&half);
    Ok(s.int_pow(m)?
        .mul(&u.rational_pow(&rational(n - 1, 2))?)?
        .mul(&v.rational_pow(&rational(p - 1, 2))?)?)
}

/// Scans coefficients 0..=order of the exponent form for positivity and
/// locates the first nonpositive index, if any.
pub fn verify_positivity_lemma(
    m: i64,
    n: i64,
    p: i64,
    order: usize,
) -> Result<LemmaReport, LabError> {
    let series = exponent_form_series(m, n, p, order)?;
    let hypotheses_hold = m >= 0 && p >= 0;
    let bound = ((m + n + p) / 2 - 1).min(m - 1);
    let mut first_nonpositive = None;
    for k in 0..=order {
        if Sign::of(series.coefficient(k)?) != Sign::Positive {
            first_nonpositive = Some(k);
            break;
        }
    }
    let window_violated =
        hypotheses_hold && first_nonpositive.is_some_and(|k| k as i64 <= bound);
    if hypotheses_hold {
        assert!(
            !window_violated,
            "positivity window violated at (m, n, p) = ({m}, {n}, {p}): first nonpositive \
             index {first_nonpositive:?} lies within the guaranteed bound {bound}"
        );
    }
    Ok(LemmaReport {
        m,
        n,
        p,
        hypotheses_hold,
        bound,
        scanned_up_to: order,
        first_nonpositive,
        window_violated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use surface_segre::segre_general_type;

    #[test]
    fn series_coefficients_match_the_single_value_route() {
        for m in -3..=5_i64 {
            for n in -4..=4_i64 {
                for p in -2..=4_i64 {
                    if (m + n + p) % 2 != 0 {
                        continue;
                    }
                    let series = exponent_form_series(m, n, p, 6).unwrap();
                    for k in 0..=6 {
                        assert_eq!(
                            series.coefficient(k).unwrap(),
                            &segre_general_type(m, n, p, k).unwrap().value,
                            "exponents ({m}, {n}, {p}) at k = {k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn odd_exponent_sum_is_rejected() {
        let e = verify_positivity_lemma(1, 0, 0, 4).unwrap_err();
        assert!(matches!(
            e,
            LabError::Surface(SurfaceError::OddExponentSum { sum: 1 })
        ));
    }
}
