//! Cross-route agreement for the rank-one family: residue extraction, series
//! reversal, the blowup specialization, and the (m, n, p) exponent form all
//! compute the same integrals.

use exact_series::integer;
use surface_segre::{
    mnp_from_bundle, segre_blowup_k3, segre_closed, segre_general_type, segre_rank1_general,
    segre_rank1_series, GeometryKind,
};

#[test]
fn residue_and_reversion_routes_agree() {
    const K_MAX: usize = 6;
    for l_sq in -2..=6i64 {
        for chi_o in -1..=3i64 {
            for l_dot_k in -2..=3i64 {
                for k_sq in -3..=1i64 {
                    let series =
                        segre_rank1_series(l_sq, chi_o, l_dot_k, k_sq, K_MAX).unwrap();
                    for k in 0..=K_MAX {
                        let residue =
                            segre_rank1_general(l_sq, chi_o, l_dot_k, k_sq, k).unwrap();
                        assert_eq!(
                            series.coefficient(k).unwrap(),
                            &residue.value,
                            "({l_sq}, {chi_o}, {l_dot_k}, {k_sq}), k = {k}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn k3_numerics_reproduce_the_k3_closed_form() {
    for l_sq in (-4..=12i64).step_by(2) {
        let chi = 2 + l_sq / 2;
        for k in 0..=8usize {
            let rank1 = segre_rank1_general(l_sq, 2, 0, 0, k).unwrap();
            let closed = segre_closed(GeometryKind::K3, 1, chi, &integer(0), k).unwrap();
            assert_eq!(rank1.value, closed.value, "L^2 = {l_sq}, k = {k}");
        }
    }
}

#[test]
fn blowup_numerics_reproduce_the_blowup_form() {
    for h in 1..=12i64 {
        for ell in 0..=4u32 {
            for k in 0..=5usize {
                let l = ell as i64;
                let direct = segre_blowup_k3(h, ell, k).unwrap();
                let general = segre_rank1_general(2 * h - l * l, 2, l, -1, k).unwrap();
                assert_eq!(direct.value, general.value, "h = {h}, ell = {ell}, k = {k}");
            }
        }
    }
}

#[test]
fn blowup_spot_values() {
    assert_eq!(segre_blowup_k3(20, 2, 2).unwrap().value, integer(476));
    assert_eq!(segre_blowup_k3(30, 3, 3).unwrap().value, integer(11208));
}

#[test]
fn exponent_form_route_agrees_with_the_residue_route() {
    for l_sq in -3..=5i64 {
        for l_dot_k in -2..=3i64 {
            if (l_sq - l_dot_k) % 2 != 0 {
                continue;
            }
            for k_sq in -2..=2i64 {
                for chi_o in -1..=3i64 {
                    for k in 0..=5usize {
                        let (m, n, p) = mnp_from_bundle(l_sq, l_dot_k, k_sq, chi_o, k);
                        let via_exponents = segre_general_type(m, n, p, k).unwrap();
                        let via_residue =
                            segre_rank1_general(l_sq, chi_o, l_dot_k, k_sq, k).unwrap();
                        assert_eq!(
                            via_exponents.value, via_residue.value,
                            "({l_sq}, {l_dot_k}, {k_sq}, {chi_o}), k = {k}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn minimal_general_type_family_spot_values() {
    // K^2 = 1, chi(O) = 1, L.K = k + 3, chi(L) = 3k, hence L^2 = 7k + 1.
    let expected = [8i64, 30, 84, 228, 624, 1704];
    for (k, want) in (1usize..=6).zip(expected) {
        let l_dot_k = k as i64 + 3;
        let l_sq = 7 * k as i64 + 1;
        let (m, n, p) = mnp_from_bundle(l_sq, l_dot_k, 1, 1, k);
        let v = segre_general_type(m, n, p, k).unwrap();
        assert_eq!(v.value, integer(want), "k = {k}");
        assert!(v.is_positive());
    }
}
