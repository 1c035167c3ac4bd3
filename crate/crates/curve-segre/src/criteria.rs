use exact_series::SegreValue;

use crate::bundle::CurveBundle;
use crate::error::CurveError;
use crate::integrals::segre_curve_closed;
use crate::quot::{segre_quot, segre_quot_signed};

/// Hypothesis flags and computed value for the symmetric-product positivity
/// statement: the signed integral is positive whenever chi >= (r+1)k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCriterion {
    pub chi: i64,
    /// chi >= (r+1)k, the positivity hypothesis.
    pub chi_bound: bool,
    /// d > r(2g - 2 + k), sufficient for the required very-ampleness.
    pub va_sufficient: bool,
    /// The signed integral (-1)^k Integral s_k.
    pub segre: SegreValue,
}

pub fn check_curve_criterion(b: &CurveBundle, k: usize) -> Result<CurveCriterion, CurveError> {
    let chi = b.chi();
    let r = b.rank as i64;
    let g = b.genus as i64;
    let segre = segre_curve_closed(b, k)?;
    Ok(CurveCriterion {
        chi,
        chi_bound: chi >= (r + 1) * k as i64,
        va_sufficient: b.degree > r * (2 * g - 2 + k as i64),
        segre,
    })
}

/// Hypothesis flags and computed values for the Quot-scheme statement; the
/// positivity carried by the symmetry attaches to the signed value under
/// N chi(L) >= (N+1)k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotCriterion {
    pub chi_l: i64,
    /// chi(L) >= k + g.
    pub chi_ge_k_plus_g: bool,
    /// chi(L) >= k(1 + 1/N), i.e. N chi(L) >= (N+1)k.
    pub chi_ge_scaled_k: bool,
    /// The unsigned Quot integral.
    pub quot: SegreValue,
    /// (-1)^{Nk} times the Quot integral; this is the provably positive one.
    pub signed: SegreValue,
}

pub fn check_quot_criterion(
    genus: u32,
    n: u32,
    d_l: i64,
    k: usize,
) -> Result<QuotCriterion, CurveError> {
    let chi_l = d_l + 1 - genus as i64;
    let signed = segre_quot_signed(genus, n, d_l, k)?;
    let quot = segre_quot(genus, n, d_l, k)?;
    Ok(QuotCriterion {
        chi_l,
        chi_ge_k_plus_g: chi_l >= k as i64 + genus as i64,
        chi_ge_scaled_k: n as i64 * chi_l >= (n as i64 + 1) * k as i64,
        quot,
        signed,
    })
}
