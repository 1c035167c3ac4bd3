//! Bundle families with known invariants, wired straight into the criterion
//! checkers.
//!
//! Each constructor rebuilds the family's Chern data from its defining
//! parameters, re-derives chi and delta through the general formulas, and
//! asserts the closed-form identities the family is supposed to satisfy, so a
//! slip in either route fails loudly. The returned flags are the family-side
//! hypotheses; the embedded verdict carries the criterion-side ones.

use exact_series::{integer, BigRational};
use num_integer::Integer;
use surface_segre::{chi_riemann_roch, delta, GeometryKind, SurfaceBundle, SurfaceError};

use crate::error::LabError;
use crate::surfaces::{check_abelian, check_k3};
use crate::verdict::{CriterionVerdict, Flag};

/// Rank-r bundle on a K3 surface attached to a genus-g curve carrying a
/// degree-d linear series, together with its polarization twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazarsfeldMukaiFamily {
    pub untwisted: SurfaceBundle,
    pub twisted: SurfaceBundle,
    pub chi_untwisted: i64,
    pub chi_twisted: i64,
    /// The Brill-Noether number g - r(g - d + r - 1), equal to delta for both
    /// the untwisted and the twisted bundle.
    pub brill_noether: i64,
    pub flags: Vec<Flag>,
    pub verdict: CriterionVerdict,
}

impl LazarsfeldMukaiFamily {
    pub fn hypotheses_hold(&self) -> bool {
        self.flags.iter().all(|f| f.holds)
    }
}

/// The genus-g, degree-d, rank-r family evaluated at k points.
///
/// The untwisted bundle has c1^2 = 2g - 2 and c2 = d; twisting by the
/// polarization multiplies c1 by r + 1 and shifts c2. Both share
/// delta = g - r(g - d + r - 1), which is asserted.
pub fn family_lazarsfeld_mukai(
    g: i64,
    d: i64,
    r: u32,
    k: usize,
) -> Result<LazarsfeldMukaiFamily, LabError> {
    let rr = r as i64;
    let untwisted = SurfaceBundle::for_kind(GeometryKind::K3, r, 2 * g - 2, 0, d)?;
    let twisted = SurfaceBundle::for_kind(
        GeometryKind::K3,
        r,
        (1 + rr) * (1 + rr) * (2 * g - 2),
        0,
        d + (rr - 1) * (rr + 2) * (g - 1),
    )?;
    let chi_untwisted = chi_riemann_roch(&untwisted)?;
    let chi_twisted = chi_riemann_roch(&twisted)?;
    let brill_noether = g - rr * (g - d + rr - 1);
    assert_eq!(
        delta(GeometryKind::K3, &untwisted)?,
        integer(brill_noether),
        "untwisted delta disagrees with the Brill-Noether number at (g, d, r) = ({g}, {d}, {r})"
    );
    assert_eq!(
        delta(GeometryKind::K3, &twisted)?,
        integer(brill_noether),
        "twisted delta disagrees with the Brill-Noether number at (g, d, r) = ({g}, {d}, {r})"
    );
    let kk = k as i64;
    let flags = vec![
        Flag::new("rank_ge_2", r >= 2),
        Flag::new("rho_nonnegative", brill_noether >= 0),
        Flag::new("genus_gt_2k_minus_2", g > 2 * kk - 2),
        Flag::new("k_ge_2", kk >= 2),
        Flag::new("five_g_gt_2d_plus_2", 5 * g > 2 * (d + 1)),
    ];
    let verdict = check_k3(&twisted, k)?;
    Ok(LazarsfeldMukaiFamily {
        untwisted,
        twisted,
        chi_untwisted,
        chi_twisted,
        brill_noether,
        flags,
        verdict,
    })
}

/// Rank-2a Ulrich bundle for the degree-2h polarization scaled by m, with its
/// polarization twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlrichFamily {
    pub untwisted: SurfaceBundle,
    pub twisted: SurfaceBundle,
    pub chi_untwisted: i64,
    pub chi_twisted: i64,
    pub delta_twisted: BigRational,
    pub flags: Vec<Flag>,
    pub verdict: CriterionVerdict,
}

impl UlrichFamily {
    pub fn hypotheses_hold(&self) -> bool {
        self.flags.iter().all(|f| f.holds)
    }
}

/// The Ulrich family at k points: rank 2a, c1 = 3am H, H^2 = 2h.
///
/// chi of the untwisted bundle is 4am^2h and delta of the twist is
/// 1 + a^2m^2h + 4a^2; both identities are asserted.
pub fn family_ulrich(a: u32, h: i64, m: i64, k: usize) -> Result<UlrichFamily, LabError> {
    if a == 0 {
        return Err(LabError::NonPositiveMultiple { n: 0 });
    }
    if h < 1 {
        return Err(SurfaceError::NonPositivePolarization { h }.into());
    }
    if m < 1 {
        return Err(LabError::NonPositiveMultiple { n: m });
    }
    let aa = a as i64;
    let rank = 2 * a;
    let c1_sq = 18 * aa * aa * m * m * h;
    let c2 = 9 * aa * aa * m * m * h - 4 * aa * (m * m * h - 1);
    let untwisted = SurfaceBundle::for_kind(GeometryKind::K3, rank, c1_sq, 0, c2)?;
    let twisted_multiple = 3 * aa * m + 2 * aa;
    let twisted = SurfaceBundle::for_kind(
        GeometryKind::K3,
        rank,
        twisted_multiple * twisted_multiple * 2 * h,
        0,
        c2 + (2 * aa - 1) * 6 * aa * m * h + aa * (2 * aa - 1) * 2 * h,
    )?;
    let chi_untwisted = chi_riemann_roch(&untwisted)?;
    assert_eq!(
        chi_untwisted,
        4 * aa * m * m * h,
        "Ulrich chi identity fails at (a, h, m) = ({a}, {h}, {m})"
    );
    let chi_twisted = chi_riemann_roch(&twisted)?;
    let delta_twisted = delta(GeometryKind::K3, &twisted)?;
    assert_eq!(
        delta_twisted,
        integer(1 + aa * aa * m * m * h + 4 * aa * aa),
        "Ulrich delta identity fails at (a, h, m) = ({a}, {h}, {m})"
    );
    let kk = k as i64;
    let flags = vec![
        Flag::new("h_gt_2k_minus_3", h > 2 * kk - 3),
        Flag::new("k_ge_2", kk >= 2),
    ];
    let verdict = check_k3(&twisted, k)?;
    Ok(UlrichFamily {
        untwisted,
        twisted,
        chi_untwisted,
        chi_twisted,
        delta_twisted,
        flags,
        verdict,
    })
}

/// Semihomogeneous bundle of slope (b/a) H on a (1,1)-polarized abelian
/// surface: rank a^2, chi = b^2, delta = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemihomogeneousFamily {
    pub bundle: SurfaceBundle,
    pub chi: i64,
    pub flags: Vec<Flag>,
    pub verdict: CriterionVerdict,
}

impl SemihomogeneousFamily {
    pub fn hypotheses_hold(&self) -> bool {
        self.flags.iter().all(|f| f.holds)
    }
}

/// The slope-(b/a) family at k points, on the abelian surface with H^2 = 2.
///
/// Simplicity of the bundle needs gcd(a, b) = 1 and the stability-side
/// hypothesis is b > a^2 k; both are flags, not errors, so the scanner can
/// watch what happens outside them.
pub fn family_semihomogeneous(
    a: i64,
    b: i64,
    k: usize,
) -> Result<SemihomogeneousFamily, LabError> {
    if a < 1 || b < 1 {
        return Err(LabError::NonPositiveSlope { a, b });
    }
    if a > 46_000 || b > 46_000 {
        return Err(LabError::FamilyOverflow { a, b });
    }
    let rank = u32::try_from(a * a).expect("rank fits after the overflow guard");
    let bundle = SurfaceBundle::for_kind(
        GeometryKind::Abelian,
        rank,
        2 * a * a * b * b,
        0,
        a * a * b * b - b * b,
    )?;
    let chi = chi_riemann_roch(&bundle)?;
    assert_eq!(
        chi,
        b * b,
        "semihomogeneous chi identity fails at (a, b) = ({a}, {b})"
    );
    assert_eq!(
        delta(GeometryKind::Abelian, &bundle)?,
        integer(0),
        "semihomogeneous delta must vanish at (a, b) = ({a}, {b})"
    );
    let flags = vec![
        Flag::new("coprime", a.gcd(&b) == 1),
        Flag::new("b_gt_a_sq_k", b > a * a * k as i64),
    ];
    let verdict = check_abelian(&bundle, k)?;
    Ok(SemihomogeneousFamily {
        bundle,
        chi,
        flags,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_euler_characteristic_has_the_closed_form() {
        for g in 2..=10_i64 {
            for d in 2..=10_i64 {
                for r in 2..=4_u32 {
                    let fam = family_lazarsfeld_mukai(g, d, r, 2).unwrap();
                    let rr = r as i64;
                    assert_eq!(fam.chi_twisted, g * (rr + 3) - d + rr - 3);
                    assert_eq!(fam.chi_untwisted, 2 * rr + g - 1 - d);
                }
            }
        }
    }

    #[test]
    fn nonpositive_parameters_are_rejected() {
        assert!(matches!(
            family_ulrich(0, 5, 1, 2),
            Err(LabError::NonPositiveMultiple { n: 0 })
        ));
        assert!(matches!(
            family_ulrich(1, 0, 1, 2),
            Err(LabError::Surface(SurfaceError::NonPositivePolarization { h: 0 }))
        ));
        assert!(matches!(
            family_ulrich(1, 5, 0, 2),
            Err(LabError::NonPositiveMultiple { n: 0 })
        ));
        assert!(matches!(
            family_semihomogeneous(0, 3, 1),
            Err(LabError::NonPositiveSlope { a: 0, b: 3 })
        ));
        assert!(matches!(
            family_semihomogeneous(2, 50_000, 1),
            Err(LabError::FamilyOverflow { .. })
        ));
    }
}
