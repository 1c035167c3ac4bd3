//! Family constructors against the criterion checkers.

use exact_series::{integer, Sign};
use positivity_lab::{
    family_lazarsfeld_mukai, family_semihomogeneous, family_ulrich, check_k3, Conclusion,
};

#[test]
fn lazarsfeld_mukai_hypotheses_imply_the_criterion() {
    for g in 2..=12i64 {
        for d in 2..=12i64 {
            for r in 2..=4u32 {
                for k in 2..=4usize {
                    let fam = family_lazarsfeld_mukai(g, d, r, k).unwrap();
                    if fam.hypotheses_hold() {
                        assert!(
                            fam.verdict.all_flags_hold(),
                            "(g, d, r, k) = ({g}, {d}, {r}, {k})"
                        );
                        assert_eq!(fam.verdict.segre.sign, Sign::Positive);
                    }
                }
            }
        }
    }
}

#[test]
fn lazarsfeld_mukai_spot_case_passes() {
    let fam = family_lazarsfeld_mukai(9, 10, 2, 2).unwrap();
    assert!(fam.hypotheses_hold());
    assert_eq!(fam.brill_noether, 9 - 2 * (9 - 10 + 1));
    assert_eq!(fam.chi_twisted, 9 * 5 - 10 + 2 - 3);
    assert_eq!(fam.verdict.conclusion, Conclusion::BigNefPredicted);
    assert_eq!(fam.verdict.segre.sign, Sign::Positive);
}

#[test]
fn untwisted_rank_two_families_cover_their_stated_range() {
    // For r = 2 the bounds 2d - 2 >= g and 2g > 4k - 6 + 3d are exactly
    // rho >= 0 and chi(E) >= 4k + rho; inside them the untwisted bundle
    // passes the criterion on its own.
    let k = 2usize;
    for g in 2..=16i64 {
        for d in 2..=16i64 {
            let fam = family_lazarsfeld_mukai(g, d, 2, k).unwrap();
            let rho = fam.brill_noether;
            assert_eq!(rho >= 0, 2 * d - 2 >= g, "(g, d) = ({g}, {d})");
            assert_eq!(
                fam.chi_untwisted >= 4 * k as i64 + rho,
                2 * g > 4 * k as i64 - 6 + 3 * d,
                "(g, d) = ({g}, {d})"
            );
            if 2 * d - 2 >= g && 2 * g > 4 * k as i64 - 6 + 3 * d {
                let v = check_k3(&fam.untwisted, k).unwrap();
                assert!(v.all_flags_hold(), "(g, d) = ({g}, {d})");
                assert_eq!(v.segre.sign, Sign::Positive);
            }
        }
    }
}

#[test]
fn ulrich_hypotheses_imply_the_criterion() {
    for a in 1..=2u32 {
        for h in 1..=6i64 {
            for m in 1..=2i64 {
                for k in 2..=4usize {
                    let fam = family_ulrich(a, h, m, k).unwrap();
                    assert_eq!(fam.chi_untwisted, 4 * a as i64 * m * m * h);
                    assert_eq!(
                        fam.delta_twisted,
                        integer(1 + (a as i64) * (a as i64) * m * m * h + 4 * (a as i64) * (a as i64))
                    );
                    if fam.hypotheses_hold() {
                        assert!(
                            fam.verdict.all_flags_hold(),
                            "(a, h, m, k) = ({a}, {h}, {m}, {k})"
                        );
                        assert_eq!(fam.verdict.segre.sign, Sign::Positive);
                    }
                }
            }
        }
    }
}

#[test]
fn ulrich_spot_case_passes() {
    let fam = family_ulrich(1, 5, 1, 2).unwrap();
    assert!(fam.hypotheses_hold());
    assert_eq!(fam.chi_twisted, 12 * 5);
    assert_eq!(fam.verdict.conclusion, Conclusion::BigNefPredicted);
}

#[test]
fn semihomogeneous_coprime_slopes_pass_above_the_bound() {
    let fam = family_semihomogeneous(2, 5, 1).unwrap();
    assert_eq!(fam.bundle.rank, 4);
    assert_eq!(fam.chi, 25);
    assert!(fam.hypotheses_hold());
    assert_eq!(fam.verdict.conclusion, Conclusion::BigNefPredicted);
    assert_eq!(fam.verdict.segre.sign, Sign::Positive);
}

#[test]
fn semihomogeneous_flags_catch_shared_factors_and_low_slopes() {
    let fam = family_semihomogeneous(2, 4, 1).unwrap();
    assert!(!fam.hypotheses_hold());
    assert_eq!(
        fam.flags.iter().find(|f| f.name == "coprime").map(|f| f.holds),
        Some(false)
    );

    // b = a^2 k exactly misses the strict bound.
    let fam = family_semihomogeneous(1, 3, 3).unwrap();
    assert_eq!(
        fam.flags
            .iter()
            .find(|f| f.name == "b_gt_a_sq_k")
            .map(|f| f.holds),
        Some(false)
    );
}

#[test]
fn semihomogeneous_family_bound_implies_the_criterion() {
    for a in 1..=3i64 {
        for b in 1..=40i64 {
            for k in 1..=3usize {
                let fam = family_semihomogeneous(a, b, k).unwrap();
                if fam.hypotheses_hold() {
                    assert!(
                        fam.verdict.all_flags_hold(),
                        "(a, b, k) = ({a}, {b}, {k})"
                    );
                    assert_eq!(fam.verdict.segre.sign, Sign::Positive);
                }
            }
        }
    }
}
