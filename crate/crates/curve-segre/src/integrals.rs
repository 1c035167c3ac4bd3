use exact_series::{integer, SegreValue, TruncatedSeries};

use crate::bundle::CurveBundle;
use crate::error::CurveError;

/// The signed top Segre integral (-1)^k Integral_{C^[k]} s_k(V^[k]), as the
/// u^k coefficient of (1 + r u)^g (1 - u)^{-chi + k(r+1) - 1}.
pub fn segre_curve_closed(b: &CurveBundle, k: usize) -> Result<SegreValue, CurveError> {
    let r = b.rank as i64;
    let exponent = -b.chi() + k as i64 * (r + 1) - 1;
    let value = TruncatedSeries::one_plus(integer(r), k)
        .int_pow(b.genus as i64)?
        .mul(&TruncatedSeries::one_plus(integer(-1), k).int_pow(exponent)?)?
        .coefficient(k)?
        .clone();
    Ok(SegreValue::new(value))
}

/// Generating series Sum_k z^k Integral s_k(V^[k]) to order k_max, through the
/// compositional reversal of z = -t(1+t)^r applied to
/// (1+t)^d ((1+t)^{r+1} / (1 + (1+r)t))^{1-g}.
///
/// The k-th coefficient times (-1)^k equals `segre_curve_closed`.
pub fn segre_curve_series(b: &CurveBundle, k_max: usize) -> Result<TruncatedSeries, CurveError> {
    let r = b.rank as i64;
    let order = k_max + 2;
    let a1 = TruncatedSeries::one_plus(integer(1), order);
    let a2 = a1
        .int_pow(r + 1)?
        .mul(&TruncatedSeries::one_plus(integer(1 + r), order).int_pow(-1)?)?;
    let assembled = a1
        .int_pow(b.degree)?
        .mul(&a2.int_pow(1 - b.genus as i64)?)?;
    let z = TruncatedSeries::identity(order).mul(&a1.int_pow(r)?)?.neg();
    let t_of_z = z.reverse()?;
    Ok(assembled.compose(&t_of_z)?.truncated(k_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_points_integrate_to_one() {
        let b = CurveBundle::new(2, 3, -1).unwrap();
        assert_eq!(segre_curve_closed(&b, 0).unwrap().value, integer(1));
        let s = segre_curve_series(&b, 0).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), &integer(1));
    }

    #[test]
    fn one_point_value_is_the_degree() {
        for (g, r, d) in [(0u32, 1u32, 3i64), (2, 2, -1), (4, 3, 7)] {
            let b = CurveBundle::new(g, r, d).unwrap();
            assert_eq!(segre_curve_closed(&b, 1).unwrap().value, integer(d));
        }
    }

    #[test]
    fn genus_one_drops_the_second_factor() {
        // 1 - g = 0 reduces the assembled series to (1+t)^d before reversal.
        for (r, d) in [(1i64, 4i64), (2, 4), (3, -2)] {
            let b = CurveBundle::new(1, r as u32, d).unwrap();
            let order = 7;
            let one_plus_t = TruncatedSeries::one_plus(integer(1), order);
            let z = TruncatedSeries::identity(order)
                .mul(&one_plus_t.int_pow(r).unwrap())
                .unwrap()
                .neg();
            let expected = one_plus_t
                .int_pow(d)
                .unwrap()
                .compose(&z.reverse().unwrap())
                .unwrap()
                .truncated(5)
                .unwrap();
            assert_eq!(segre_curve_series(&b, 5).unwrap(), expected);
        }
    }
}
