//! The crate's master property: the generating-series route (universal
//! factors plus compositional reversal) and the closed coefficient-extraction
//! route compute identical integrals, exactly, over a full parameter grid that
//! includes non-geometric (odd c1^2) formal inputs.

use exact_series::{integer, rational, BigRational};
use surface_segre::{
    chi_rational, chi_riemann_roch, delta, segre_closed, segre_closed_rational, segre_delta0,
    segre_series, GeometryKind, SurfaceBundle,
};

const K_MAX: usize = 8;

fn grid_bundles(kind: GeometryKind) -> Vec<SurfaceBundle> {
    let mut bundles = Vec::new();
    for rank in 1..=3u32 {
        for c1_sq in -2..=8i64 {
            for c2 in -2..=4i64 {
                bundles.push(SurfaceBundle::for_kind(kind, rank, c1_sq, 0, c2).unwrap());
            }
        }
    }
    bundles
}

fn assert_two_paths_agree(kind: GeometryKind) {
    for b in grid_bundles(kind) {
        let series = segre_series(kind, &b, K_MAX).unwrap();
        let chi = chi_rational(&b);
        let d = delta(kind, &b).unwrap();
        for k in 0..=K_MAX {
            let closed = segre_closed_rational(kind, b.rank, &chi, &d, k).unwrap();
            assert_eq!(
                series.coefficient(k).unwrap(),
                &closed.value,
                "kind {kind}, bundle {b:?}, k = {k}"
            );
        }
    }
}

#[test]
fn series_and_closed_form_agree_on_k3_grid() {
    assert_two_paths_agree(GeometryKind::K3);
}

#[test]
fn series_and_closed_form_agree_on_enriques_grid() {
    assert_two_paths_agree(GeometryKind::Enriques);
}

#[test]
fn delta_zero_closed_form_specializes_to_the_binomial_formula() {
    let zero = integer(0);
    for rank in 1..=3u32 {
        for chi in -4..=12i64 {
            for k in 0..=6usize {
                let closed = segre_closed(GeometryKind::K3, rank, chi, &zero, k).unwrap();
                let binomial_form = segre_delta0(rank, chi, k);
                assert_eq!(closed.value, binomial_form.value, "r={rank} chi={chi} k={k}");
            }
        }
    }
}

#[test]
fn one_point_integral_of_a_line_bundle_is_its_self_intersection() {
    // Rank 1, delta = 0 forces c2 = 0 on all three geometries; chi then comes
    // from Riemann-Roch and the k = 1 integral must be c1^2.
    for l_sq in (-4..=12i64).step_by(2) {
        for (kind, chi) in [
            (GeometryKind::K3, 2 + l_sq / 2),
            (GeometryKind::Abelian, l_sq / 2),
            (GeometryKind::Bielliptic, l_sq / 2),
            (GeometryKind::Enriques, 1 + l_sq / 2),
        ] {
            let b = SurfaceBundle::for_kind(kind, 1, l_sq, 0, 0).unwrap();
            assert_eq!(delta(kind, &b).unwrap(), integer(0));
            assert_eq!(chi_riemann_roch(&b).unwrap(), chi);
            let v = segre_closed(kind, 1, chi, &integer(0), 1).unwrap();
            assert_eq!(v.value, integer(l_sq), "kind {kind}, L^2 = {l_sq}");
        }
    }
}

#[test]
fn geometric_inputs_yield_integers_despite_fractional_exponents() {
    for kind in [
        GeometryKind::K3,
        GeometryKind::Abelian,
        GeometryKind::Bielliptic,
        GeometryKind::Enriques,
    ] {
        for rank in 1..=3u32 {
            for c1_sq in (-2..=8i64).filter(|c| c % 2 == 0) {
                for c2 in -2..=4i64 {
                    let b = SurfaceBundle::for_kind(kind, rank, c1_sq, 0, c2).unwrap();
                    let chi = chi_riemann_roch(&b).unwrap();
                    let d = delta(kind, &b).unwrap();
                    for k in 0..=5usize {
                        let v = segre_closed(kind, rank, chi, &d, k).unwrap();
                        assert!(
                            v.is_integer(),
                            "kind {kind}, bundle {b:?}, k = {k}: {}",
                            v.value
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn half_integer_chi_reproduces_the_rational_variant() {
    // Odd c1^2 makes chi half-integral; the integer entry point must refuse
    // nothing while the rational one covers the formal case.
    let b = SurfaceBundle::for_kind(GeometryKind::K3, 2, 3, 0, 1).unwrap();
    let chi = chi_rational(&b);
    assert_eq!(chi, rational(2 * 2 * 2 + 3 - 2, 2));
    let d = delta(GeometryKind::K3, &b);
    assert_eq!(d.unwrap(), integer(1 + 2 - 4) + rational(-3, 2));
}

#[test]
fn closed_form_handles_rational_delta_inputs() {
    // Directly exercise half-integral delta, the even-rank Enriques shape.
    let v = segre_closed_rational(
        GeometryKind::Enriques,
        2,
        &integer(12),
        &rational(1, 2),
        2,
    )
    .unwrap();
    assert!(v.is_integer());
    let _: &BigRational = &v.value;
}
