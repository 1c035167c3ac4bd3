//! Frozen small-case values of the Enriques closed form, checkable by hand,
//! plus the sign pattern that motivates the stronger Enriques growth bound.

use exact_series::integer;
use surface_segre::{segre_closed, GeometryKind};

#[test]
fn enriques_rank1_small_cases_by_hand() {
    let cases: &[(usize, i64, i64)] = &[
        (2, 6, 6),
        (2, 7, 18),
        (3, 9, 16),
        (3, 10, 52),
        (3, 11, 120),
        (4, 14, 366),
        (4, 15, 822),
        (5, 19, 5880),
    ];
    for &(k, chi, want) in cases {
        let v = segre_closed(GeometryKind::Enriques, 1, chi, &integer(0), k).unwrap();
        assert_eq!(v.value, integer(want), "k = {k}, chi = {chi}");
        assert!(v.is_positive());
    }
}

#[test]
fn enriques_value_can_vanish_or_turn_negative_above_the_naive_bound() {
    // chi = (r+2)k suffices on the other K-trivial geometries but not here:
    // rank 1, k = 8, chi = 24 = 3k, delta = 0 gives a negative integral.
    let v = segre_closed(GeometryKind::Enriques, 1, 24, &integer(0), 8).unwrap();
    assert_eq!(v.value, integer(-90));
    assert!(!v.is_positive());
}
