use exact_series::{integer, rational, SegreValue, TruncatedSeries};

use crate::error::SurfaceError;

/// Half the sum of the two square roots, (sqrt(1+2t) + sqrt(1+6t))/2, a unit
/// series that normalizes the non-unit factor of the rank-one formulas.
fn half_root_sum(order: usize) -> Result<TruncatedSeries, SurfaceError> {
    let half = rational(1, 2);
    let a = TruncatedSeries::one_plus(integer(2), order).rational_pow(&half)?;
    let b = TruncatedSeries::one_plus(integer(6), order).rational_pow(&half)?;
    Ok(a.add(&b)?.scale(&half))
}

/// The rank-one universal product A1^{L^2} A2^{chi(O)} A3^{L.K} A4^{K^2} in t,
/// with A1 = (1+2t)^{1/2}, A2 = (1+2t)^{3/2}(1+6t)^{-1/2},
/// A3 = (1+2t)^{-1} s, A4 = (1+2t)^{1/2}(1+6t)^{1/2} s^{-2},
/// where s is the half root sum above.
fn rank1_product(
    l_sq: i64,
    chi_o: i64,
    l_dot_k: i64,
    k_sq: i64,
    order: usize,
) -> Result<TruncatedSeries, SurfaceError> {
    let half = rational(1, 2);
    let u = TruncatedSeries::one_plus(integer(2), order);
    let v = TruncatedSeries::one_plus(integer(6), order);
    let s = half_root_sum(order)?;
    let a1 = u.rational_pow(&half)?;
    let a2 = u.rational_pow(&rational(3, 2))?.mul(&v.rational_pow(&-half.clone())?)?;
    let a3 = u.int_pow(-1)?.mul(&s)?;
    let a4 = u
        .rational_pow(&half)?
        .mul(&v.rational_pow(&half)?)?
        .mul(&s.int_pow(-2)?)?;
    Ok(a1
        .int_pow(l_sq)?
        .mul(&a2.int_pow(chi_o)?)?
        .mul(&a3.int_pow(l_dot_k)?)?
        .mul(&a4.int_pow(k_sq)?)?)
}

/// Top Segre integral of a line bundle with the given numerics on an arbitrary
/// surface, by residue extraction: the z^k coefficient of the universal
/// product under z = t(1+2t)^2 equals the t^k coefficient of
/// product(t) (1+6t) (1+2t)^{-2k-1}.
pub fn segre_rank1_general(
    l_sq: i64,
    chi_o: i64,
    l_dot_k: i64,
    k_sq: i64,
    k: usize,
) -> Result<SegreValue, SurfaceError> {
    let product = rank1_product(l_sq, chi_o, l_dot_k, k_sq, k)?;
    let residue = TruncatedSeries::one_plus(integer(6), k)
        .mul(&TruncatedSeries::one_plus(integer(2), k).int_pow(-2 * k as i64 - 1)?)?;
    let value = product.mul(&residue)?.coefficient(k)?.clone();
    Ok(SegreValue::new(value))
}

/// The same integrals as a series in z, via compositional reversal of
/// z = t(1+2t)^2; must agree with `segre_rank1_general` coefficient by
/// coefficient.
pub fn segre_rank1_series(
    l_sq: i64,
    chi_o: i64,
    l_dot_k: i64,
    k_sq: i64,
    k_max: usize,
) -> Result<TruncatedSeries, SurfaceError> {
    let order = k_max + 2;
    let product = rank1_product(l_sq, chi_o, l_dot_k, k_sq, order)?;
    let z = TruncatedSeries::identity(order)
        .mul(&TruncatedSeries::one_plus(integer(2), order).int_pow(2)?)?;
    let t_of_z = z.reverse()?;
    Ok(product.compose(&t_of_z)?.truncated(k_max)?)
}

/// Top Segre integral of L = H - ell E on the blowup of a K3 with H^2 = 2h:
/// the t^k coefficient of
/// (1+2t)^{h - ell^2/2 - 2k - ell + 3/2} (1+6t)^{-1/2} s^{ell+2}.
pub fn segre_blowup_k3(h: i64, ell: u32, k: usize) -> Result<SegreValue, SurfaceError> {
    if h < 1 {
        return Err(SurfaceError::NonPositivePolarization { h });
    }
    let l = ell as i64;
    let exponent = rational(2 * h - l * l - 4 * k as i64 - 2 * l + 3, 2);
    let value = TruncatedSeries::one_plus(integer(2), k)
        .rational_pow(&exponent)?
        .mul(&TruncatedSeries::one_plus(integer(6), k).rational_pow(&rational(-1, 2))?)?
        .mul(&half_root_sum(k)?.int_pow(l + 2)?)?
        .coefficient(k)?
        .clone();
    Ok(SegreValue::new(value))
}

/// The t^k coefficient of f(t) = s^m (1+2t)^{(n-1)/2} (1+6t)^{(p-1)/2}, the
/// exponent form of the rank-one integral; m + n + p must be even.
pub fn segre_general_type(m: i64, n: i64, p: i64, k: usize) -> Result<SegreValue, SurfaceError> {
    let sum = m + n + p;
    if sum % 2 != 0 {
        return Err(SurfaceError::OddExponentSum { sum });
    }
    let value = half_root_sum(k)?
        .int_pow(m)?
        .mul(&TruncatedSeries::one_plus(integer(2), k).rational_pow(&rational(n - 1, 2))?)?
        .mul(&TruncatedSeries::one_plus(integer(6), k).rational_pow(&rational(p - 1, 2))?)?
        .coefficient(k)?
        .clone();
    Ok(SegreValue::new(value))
}

/// Exponents (m, n, p) of the f(t) form for a line bundle with the given
/// numerics: m = L.K - 2K^2, n = (L-K)^2 + 3 chi(O) - 4k - 1,
/// p = K^2 - chi(O) + 3. Their sum is 2 chi(L) - 4k + 2, which the function
/// checks.
pub fn mnp_from_bundle(
    l_sq: i64,
    l_dot_k: i64,
    k_sq: i64,
    chi_o: i64,
    k: usize,
) -> (i64, i64, i64) {
    let m = l_dot_k - 2 * k_sq;
    let n = (l_sq - 2 * l_dot_k + k_sq) + 3 * chi_o - 4 * k as i64 - 1;
    let p = k_sq - chi_o + 3;
    let twice_chi_l = 2 * chi_o + l_sq - l_dot_k;
    assert_eq!(m + n + p, twice_chi_l - 4 * k as i64 + 2);
    (m, n, p)
}
