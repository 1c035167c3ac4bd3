//! Registry of named verification properties.
//!
//! Every property is a pure function from a seed to pass or fail; only the
//! randomized engine laws read the seed. Failures carry the offending inputs
//! in the message. The verify subcommand and the acceptance suite both run
//! this registry, so a property name is a stable public identifier.

use std::fmt::Display;

use curve_segre::{
    check_curve_criterion, check_quot_criterion, segre_curve_closed, segre_curve_series,
    segre_quot, segre_quot_signed, CurveBundle,
};
use exact_series::{integer, rational, BigRational, Sign, TruncatedSeries};
use positivity_lab::{
    bs_obstruction_blowup, bs_obstruction_rank1, check_abelian, check_blowup, check_enriques,
    check_general_type, check_k3, family_lazarsfeld_mukai, family_semihomogeneous, family_ulrich,
    scan_enriques, scan_lemma, seshadri_lower_bound, verify_positivity_lemma, BlowupCandidate,
    RankOneWitness,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surface_segre::{
    chi_rational, chi_riemann_roch, delta, mnp_from_bundle, segre_blowup_k3, segre_closed,
    segre_closed_rational, segre_delta0, segre_general_type, segre_rank1_general,
    segre_rank1_series, segre_series, GeometryKind, SurfaceBundle,
};

pub const DEFAULT_SEED: u64 = 1729;

/// Total randomized cases the engine-laws property must execute.
pub const ENGINE_LAW_CASES: usize = 10_000;

/// One named check; `run` takes the seed and reports the first failure.
pub struct Property {
    pub name: &'static str,
    pub run: fn(u64) -> Result<(), String>,
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn ok<T, E: Display>(result: Result<T, E>) -> Result<T, String> {
    result.map_err(|e| e.to_string())
}

const PROPERTIES: &[Property] = &[
    Property {
        name: "sqrt-expansion",
        run: sqrt_expansion,
    },
    Property {
        name: "engine-laws",
        run: engine_laws,
    },
    Property {
        name: "two-path-k3",
        run: two_path_k3,
    },
    Property {
        name: "two-path-enriques",
        run: two_path_enriques,
    },
    Property {
        name: "delta0-specialization",
        run: delta0_specialization,
    },
    Property {
        name: "k1-identities",
        run: k1_identities,
    },
    Property {
        name: "curve-two-path",
        run: curve_two_path,
    },
    Property {
        name: "quot-symmetry",
        run: quot_symmetry,
    },
    Property {
        name: "lemma-grid",
        run: lemma_grid,
    },
    Property {
        name: "lemma-counterexamples",
        run: lemma_counterexamples,
    },
    Property {
        name: "grid-k3",
        run: grid_k3,
    },
    Property {
        name: "grid-abelian",
        run: grid_abelian,
    },
    Property {
        name: "grid-enriques",
        run: grid_enriques,
    },
    Property {
        name: "grid-blowup",
        run: grid_blowup,
    },
    Property {
        name: "grid-general-type",
        run: grid_general_type,
    },
    Property {
        name: "grid-curve",
        run: grid_curve,
    },
    Property {
        name: "grid-quot",
        run: grid_quot,
    },
    Property {
        name: "enriques-experiments",
        run: enriques_experiments,
    },
    Property {
        name: "cross-formula",
        run: cross_formula,
    },
    Property {
        name: "blowup-lattice",
        run: blowup_lattice,
    },
    Property {
        name: "bs-rank1",
        run: bs_rank1,
    },
    Property {
        name: "seshadri",
        run: seshadri,
    },
    Property {
        name: "integrality",
        run: integrality,
    },
    Property {
        name: "enriques-hand-check",
        run: enriques_hand_check,
    },
    Property {
        name: "families",
        run: families,
    },
    Property {
        name: "mnp-consistency",
        run: mnp_consistency,
    },
];

pub fn all_properties() -> &'static [Property] {
    PROPERTIES
}

pub fn find_property(name: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.name == name)
}

/// Runs one property by name with the given seed.
pub fn run_named(name: &str, seed: u64) -> Result<(), String> {
    match find_property(name) {
        Some(p) => (p.run)(seed),
        None => Err(format!("unknown property {name:?}")),
    }
}

fn sqrt_expansion(_seed: u64) -> Result<(), String> {
    let half = rational(1, 2);
    let two = ok(TruncatedSeries::one_plus(integer(2), 4).rational_pow(&half))?;
    let expected_two = [
        integer(1),
        integer(1),
        rational(-1, 2),
        rational(1, 2),
        rational(-5, 8),
    ];
    ensure!(
        two.coefficients() == &expected_two[..],
        "sqrt(1+2t) expanded to {:?}",
        two.coefficients()
    );
    let six = ok(TruncatedSeries::one_plus(integer(6), 4).rational_pow(&half))?;
    let expected_six = [
        integer(1),
        integer(3),
        rational(-9, 2),
        rational(27, 2),
        rational(-405, 8),
    ];
    ensure!(
        six.coefficients() == &expected_six[..],
        "sqrt(1+6t) expanded to {:?}",
        six.coefficients()
    );
    Ok(())
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> BigRational {
    rational(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> Result<TruncatedSeries, String> {
    let coeffs = (0..=order).map(|_| random_coefficient(rng)).collect();
    ok(TruncatedSeries::from_coeffs(coeffs, order))
}

fn random_series_with_constant(
    rng: &mut ChaCha8Rng,
    constant: BigRational,
    order: usize,
) -> Result<TruncatedSeries, String> {
    let mut coeffs = vec![constant];
    coeffs.extend((0..order).map(|_| random_coefficient(rng)));
    ok(TruncatedSeries::from_coeffs(coeffs, order))
}

fn engine_laws(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rounds = ENGINE_LAW_CASES / 8;
    let mut cases = 0usize;
    for round in 0..rounds {
        let order = rng.gen_range(3..=6);
        let a = random_series(&mut rng, order)?;
        let b = random_series(&mut rng, order)?;
        let c = random_series(&mut rng, order)?;

        let left = ok(ok(a.add(&b))?.add(&c))?;
        let right = ok(a.add(&ok(b.add(&c))?))?;
        ensure!(left == right, "addition is not associative at round {round}");
        cases += 1;

        ensure!(
            ok(a.mul(&b))? == ok(b.mul(&a))?,
            "multiplication is not commutative at round {round}"
        );
        cases += 1;

        let distributed = ok(a.mul(&ok(b.add(&c))?))?;
        let expanded = ok(ok(a.mul(&b))?.add(&ok(a.mul(&c))?))?;
        ensure!(
            distributed == expanded,
            "multiplication does not distribute at round {round}"
        );
        cases += 1;

        let unit_constant = rational(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let invertible = random_series_with_constant(&mut rng, unit_constant, order)?;
        let product = ok(invertible.mul(&ok(invertible.inverse())?))?;
        ensure!(
            product == TruncatedSeries::one(order),
            "inverse fails at round {round}"
        );
        cases += 1;

        let unit = random_series_with_constant(&mut rng, integer(1), order)?;
        let p = rational(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let q = rational(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let split = ok(ok(unit.rational_pow(&p))?.mul(&ok(unit.rational_pow(&q))?))?;
        let joined = ok(unit.rational_pow(&(p + q)))?;
        ensure!(
            split == joined,
            "exponents do not add at round {round}"
        );
        cases += 1;

        let root = ok(unit.rational_pow(&rational(1, 2)))?;
        ensure!(
            ok(root.mul(&root))? == unit,
            "square root does not square back at round {round}"
        );
        cases += 1;

        let product_rule = ok(ok(a.mul(&b))?.derivative())?;
        let a_cut = ok(a.truncated(order - 1))?;
        let b_cut = ok(b.truncated(order - 1))?;
        let leibniz = ok(ok(ok(a.derivative())?.mul(&b_cut))?.add(&ok(a_cut.mul(&ok(b.derivative())?))?))?;
        ensure!(
            product_rule == leibniz,
            "derivative violates the product rule at round {round}"
        );
        cases += 1;

        let slope = rational(rng.gen_range(1..=9), rng.gen_range(1..=9));
        let mut f_coeffs = vec![integer(0), slope];
        f_coeffs.extend((0..order - 1).map(|_| random_coefficient(&mut rng)));
        let f = ok(TruncatedSeries::from_coeffs(f_coeffs, order))?;
        let round_trip = ok(f.compose(&ok(f.reverse())?))?;
        ensure!(
            round_trip == TruncatedSeries::identity(order),
            "reversal does not invert composition at round {round}"
        );
        cases += 1;
    }
    ensure!(
        cases == ENGINE_LAW_CASES,
        "expected {ENGINE_LAW_CASES} cases, ran {cases}"
    );
    Ok(())
}

fn two_path(kind: GeometryKind) -> Result<(), String> {
    for rank in 1..=3u32 {
        for c1_sq in -2..=8i64 {
            for c2 in -2..=4i64 {
                let b = ok(SurfaceBundle::for_kind(kind, rank, c1_sq, 0, c2))?;
                let chi = chi_rational(&b);
                let d = ok(delta(kind, &b))?;
                let series = ok(segre_series(kind, &b, 8))?;
                for k in 0..=8usize {
                    let closed = ok(segre_closed_rational(kind, rank, &chi, &d, k))?;
                    let coefficient = ok(series.coefficient(k))?;
                    ensure!(
                        *coefficient == closed.value,
                        "{kind} series and closed form disagree at rank {rank}, \
                         c1^2 {c1_sq}, c2 {c2}, k {k}: {coefficient} vs {}",
                        closed.value
                    );
                }
            }
        }
    }
    Ok(())
}

fn two_path_k3(_seed: u64) -> Result<(), String> {
    two_path(GeometryKind::K3)
}

fn two_path_enriques(_seed: u64) -> Result<(), String> {
    two_path(GeometryKind::Enriques)
}

fn delta0_specialization(_seed: u64) -> Result<(), String> {
    for rank in 1..=4u32 {
        for chi in -4..=16i64 {
            for k in 0..=6usize {
                let closed = ok(segre_closed(GeometryKind::K3, rank, chi, &integer(0), k))?;
                let special = segre_delta0(rank, chi, k);
                let r = rank as i64;
                let direct = integer((r + 1).pow(k as u32))
                    * exact_series::binomial(&integer(chi - (r + 1) * k as i64), k);
                ensure!(
                    closed.value == special.value && special.value == direct,
                    "delta = 0 specialization fails at rank {rank}, chi {chi}, k {k}: \
                     closed {}, special {}, direct {direct}",
                    closed.value,
                    special.value
                );
            }
        }
    }
    Ok(())
}

fn k1_identities(_seed: u64) -> Result<(), String> {
    for chi in -3..=12i64 {
        let cases = [
            (GeometryKind::K3, 2 * chi - 4),
            (GeometryKind::Abelian, 2 * chi),
            (GeometryKind::Enriques, 2 * chi - 2),
        ];
        for (kind, expected) in cases {
            let value = ok(segre_closed(kind, 1, chi, &integer(0), 1))?;
            ensure!(
                value.value == integer(expected),
                "{kind} k = 1 value at chi {chi} is {}, expected {expected}",
                value.value
            );
        }
    }
    for genus in 0..=6u32 {
        for rank in 1..=4u32 {
            for degree in -6..=12i64 {
                let b = ok(CurveBundle::new(genus, rank, degree))?;
                let value = ok(segre_curve_closed(&b, 1))?;
                ensure!(
                    value.value == integer(degree),
                    "curve k = 1 value at genus {genus}, rank {rank}, degree {degree} is {}",
                    value.value
                );
            }
        }
    }
    Ok(())
}

fn curve_two_path(_seed: u64) -> Result<(), String> {
    for genus in 0..=5u32 {
        for rank in 1..=3u32 {
            for degree in -4..=8i64 {
                let b = ok(CurveBundle::new(genus, rank, degree))?;
                let series = ok(segre_curve_series(&b, 6))?;
                for k in 0..=6usize {
                    let closed = ok(segre_curve_closed(&b, k))?;
                    let sign = if k % 2 == 0 { integer(1) } else { integer(-1) };
                    let coefficient = ok(series.coefficient(k))?.clone();
                    ensure!(
                        coefficient * sign == closed.value,
                        "curve series and closed form disagree at genus {genus}, \
                         rank {rank}, degree {degree}, k {k}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn quot_symmetry(_seed: u64) -> Result<(), String> {
    for genus in 0..=4u32 {
        for n in 1..=3u32 {
            for d_l in 0..=6i64 {
                for k in 0..=4usize {
                    let signed = ok(segre_quot_signed(genus, n, d_l, k))?;
                    let unsigned = ok(segre_quot(genus, n, d_l, k))?;
                    let b = ok(CurveBundle::new(genus, n, n as i64 * d_l))?;
                    let curve = ok(segre_curve_closed(&b, k))?;
                    ensure!(
                        signed.value == curve.value,
                        "signed Quot integral disagrees with the curve route at \
                         genus {genus}, n {n}, d {d_l}, k {k}"
                    );
                    let sign = if (n as usize * k) % 2 == 0 {
                        integer(1)
                    } else {
                        integer(-1)
                    };
                    ensure!(
                        unsigned.value.clone() * sign == signed.value,
                        "Quot sign convention broken at genus {genus}, n {n}, d {d_l}, k {k}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn lemma_grid(_seed: u64) -> Result<(), String> {
    let scan = ok(scan_lemma(0..=12, -12..=12, 0..=12))?;
    ensure!(
        scan.rows.len() == 2113,
        "default lemma grid has {} rows",
        scan.rows.len()
    );
    ensure!(
        scan.window_violations == 0,
        "default lemma grid reports {} window violations",
        scan.window_violations
    );
    for row in &scan.rows {
        if let Some(first) = row.first_nonpositive {
            ensure!(
                first as i64 > row.bound,
                "nonpositive coefficient inside the window at ({}, {}, {})",
                row.m,
                row.n,
                row.p
            );
        }
    }
    Ok(())
}

fn lemma_counterexamples(_seed: u64) -> Result<(), String> {
    let sharp = ok(verify_positivity_lemma(2, 19, 1, 12))?;
    ensure!(
        sharp.hypotheses_hold && sharp.bound == 1 && !sharp.window_violated,
        "(2, 19, 1) report changed: {sharp:?}"
    );
    ensure!(
        sharp.first_nonpositive == Some(10),
        "(2, 19, 1) first nonpositive index is {:?}, expected 10",
        sharp.first_nonpositive
    );
    let negative = ok(segre_general_type(2, 19, 1, 10))?;
    ensure!(
        negative.value == integer(-1158) && negative.sign == Sign::Negative,
        "(2, 19, 1) coefficient 10 is {}, expected -1158",
        negative.value
    );
    let vanishing = ok(segre_general_type(4, 0, 0, 3))?;
    ensure!(
        vanishing.sign == Sign::Zero,
        "(4, 0, 0) coefficient 3 is {}, expected 0",
        vanishing.value
    );
    Ok(())
}

fn k3_bundle(rank: u32, chi: i64, delta_value: i64) -> Result<SurfaceBundle, String> {
    let r = rank as i64;
    let c1_sq = 2 * (delta_value - 1 - r * r + r * chi);
    let c2 = 2 * r + c1_sq / 2 - chi;
    ok(SurfaceBundle::for_kind(GeometryKind::K3, rank, c1_sq, 0, c2))
}

fn abelian_bundle(rank: u32, chi: i64, delta_value: i64) -> Result<SurfaceBundle, String> {
    let r = rank as i64;
    let c1_sq = 2 * (delta_value + r * chi);
    let c2 = c1_sq / 2 - chi;
    ok(SurfaceBundle::for_kind(
        GeometryKind::Abelian,
        rank,
        c1_sq,
        0,
        c2,
    ))
}

fn enriques_bundle(rank: u32, chi: i64, twice_delta: i64) -> Result<SurfaceBundle, String> {
    let r = rank as i64;
    let c1_sq = twice_delta + 2 * r * chi - r * r - 1;
    let c2 = r + c1_sq / 2 - chi;
    ok(SurfaceBundle::for_kind(
        GeometryKind::Enriques,
        rank,
        c1_sq,
        0,
        c2,
    ))
}

fn grid_k3(_seed: u64) -> Result<(), String> {
    for rank in 1..=4u32 {
        for k in 1..=6usize {
            for margin in 0..=4i64 {
                for delta_value in 0..=4i64 {
                    let chi = (rank as i64 + 2) * k as i64 + margin;
                    let b = k3_bundle(rank, chi, delta_value)?;
                    let verdict = ok(check_k3(&b, k))?;
                    ensure!(
                        verdict.all_flags_hold() && verdict.segre.is_positive(),
                        "K3 criterion misses at rank {rank}, k {k}, chi {chi}, \
                         delta {delta_value}: value {}",
                        verdict.segre
                    );
                }
            }
        }
    }
    Ok(())
}

fn grid_abelian(_seed: u64) -> Result<(), String> {
    for rank in 1..=4u32 {
        for k in 1..=6usize {
            for margin in 0..=4i64 {
                for delta_value in 0..=4i64 {
                    let chi = (rank as i64 + 2) * k as i64 + margin;
                    let b = abelian_bundle(rank, chi, delta_value)?;
                    let verdict = ok(check_abelian(&b, k))?;
                    ensure!(
                        verdict.all_flags_hold() && verdict.segre.is_positive(),
                        "abelian criterion misses at rank {rank}, k {k}, chi {chi}, \
                         delta {delta_value}: value {}",
                        verdict.segre
                    );
                }
            }
        }
    }
    Ok(())
}

fn grid_enriques(_seed: u64) -> Result<(), String> {
    for rank in [1u32, 3, 5] {
        for k in 1..=5usize {
            for margin in 0..=4i64 {
                for delta_value in 0..=3i64 {
                    let chi = 2 * (rank as i64 + 1) * k as i64 + margin;
                    let b = enriques_bundle(rank, chi, 2 * delta_value)?;
                    let verdict = ok(check_enriques(&b, k))?;
                    ensure!(
                        verdict.all_flags_hold() && verdict.segre.is_positive(),
                        "Enriques criterion misses at rank {rank}, k {k}, chi {chi}, \
                         delta {delta_value}: value {}",
                        verdict.segre
                    );
                }
            }
        }
    }
    Ok(())
}

fn blowup_need(ell: i64, k: i64) -> i64 {
    ((ell + 2) * (ell + 2) - 6)
        .max((ell + 1) * (ell + 1) + 4 * k)
        .max(ell * (ell + 1) + 6 * k - 6)
}

fn grid_blowup(_seed: u64) -> Result<(), String> {
    for k in 1..=5usize {
        let kk = k as i64;
        for ell in (kk - 1)..=(kk + 2) {
            let need = blowup_need(ell, kk);
            for h in [need / 2 + 1, need / 2 + 3] {
                let verdict = ok(check_blowup(h, ell as u32, k))?;
                ensure!(
                    verdict.all_flags_hold() && verdict.segre.is_positive(),
                    "blowup criterion misses at h {h}, ell {ell}, k {k}: value {}",
                    verdict.segre
                );
            }
        }
    }
    Ok(())
}

fn grid_general_type(_seed: u64) -> Result<(), String> {
    for (k_sq, chi_o) in [(1i64, 1i64), (2, 1), (3, 2)] {
        for k in 1..=4usize {
            let kk = k as i64;
            for s in 0..=2i64 {
                for t in 0..=2i64 {
                    let l_dot_k = 2 * k_sq + kk + 1 + s;
                    let chi_l = 3 * kk + t;
                    let l_sq = 2 * (chi_l - chi_o) + l_dot_k;
                    let verdict = ok(check_general_type(l_sq, l_dot_k, k_sq, chi_o, k))?;
                    ensure!(
                        verdict.all_flags_hold() && verdict.segre.is_positive(),
                        "general-type criterion misses at L^2 {l_sq}, L.K {l_dot_k}, \
                         K^2 {k_sq}, chi(O) {chi_o}, k {k}: value {}",
                        verdict.segre
                    );
                }
            }
        }
    }
    Ok(())
}

fn grid_curve(_seed: u64) -> Result<(), String> {
    for genus in 0..=5u32 {
        for rank in 1..=3u32 {
            for k in 0..=4usize {
                for degree in -2..=14i64 {
                    let b = ok(CurveBundle::new(genus, rank, degree))?;
                    let criterion = ok(check_curve_criterion(&b, k))?;
                    if criterion.chi_bound {
                        ensure!(
                            criterion.segre.is_positive(),
                            "curve criterion misses at genus {genus}, rank {rank}, \
                             degree {degree}, k {k}: value {}",
                            criterion.segre
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn grid_quot(_seed: u64) -> Result<(), String> {
    for genus in 0..=4u32 {
        for n in 1..=3u32 {
            for k in 0..=3usize {
                for d_l in -2..=12i64 {
                    let criterion = ok(check_quot_criterion(genus, n, d_l, k))?;
                    if criterion.chi_ge_scaled_k {
                        ensure!(
                            criterion.signed.is_positive(),
                            "Quot criterion misses at genus {genus}, n {n}, d {d_l}, \
                             k {k}: value {}",
                            criterion.signed
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn enriques_experiments(_seed: u64) -> Result<(), String> {
    let scan = ok(scan_enriques(1..=8, 1..=10, 0..=8, 0..=6))?;
    ensure!(scan.rows.len() == 4680, "scan has {} rows", scan.rows.len());
    ensure!(
        scan.counterexamples == 847,
        "scan found {} naive-bound counterexamples, expected 847",
        scan.counterexamples
    );
    ensure!(
        scan.theorem_violations == 0 && scan.conjecture_violations == 0,
        "scan reports {} theorem and {} conjecture violations",
        scan.theorem_violations,
        scan.conjecture_violations
    );
    ensure!(
        scan.rows.iter().all(|row| row.integral),
        "a scanned Enriques value is not an integer"
    );
    let first = scan
        .rows
        .iter()
        .find(|row| row.is_counterexample())
        .ok_or("scan lost its counterexamples")?;
    ensure!(
        first.rank == 1
            && first.k == 8
            && first.chi == 24
            && first.delta == integer(0)
            && first.value == integer(-90)
            && !first.theorem_applies,
        "first counterexample moved: {first:?}"
    );
    Ok(())
}

fn cross_formula(_seed: u64) -> Result<(), String> {
    for c1_sq in (-4..=8i64).step_by(2) {
        let b = ok(SurfaceBundle::for_kind(GeometryKind::K3, 1, c1_sq, 0, 0))?;
        let chi = ok(chi_riemann_roch(&b))?;
        let d = ok(delta(GeometryKind::K3, &b))?;
        for k in 0..=6usize {
            let residue = ok(segre_rank1_general(c1_sq, 2, 0, 0, k))?;
            let closed = ok(segre_closed(GeometryKind::K3, 1, chi, &d, k))?;
            ensure!(
                residue.value == closed.value,
                "rank-1 residue disagrees with the K3 closed form at c1^2 {c1_sq}, k {k}"
            );
        }
    }
    for h in 1..=6i64 {
        for ell in 0..=4u32 {
            let l = ell as i64;
            for k in 0..=5usize {
                let residue = ok(segre_rank1_general(2 * h - l * l, 2, l, -1, k))?;
                let direct = ok(segre_blowup_k3(h, ell, k))?;
                ensure!(
                    residue.value == direct.value,
                    "rank-1 residue disagrees with the blowup route at \
                     h {h}, ell {ell}, k {k}"
                );
            }
        }
    }
    for (l_sq, chi_o, l_dot_k, k_sq) in [(4i64, 2i64, 0i64, 0i64), (2, 1, 3, 1), (-2, 0, 1, -1), (6, 2, 3, -1)] {
        let series = ok(segre_rank1_series(l_sq, chi_o, l_dot_k, k_sq, 6))?;
        for k in 0..=6usize {
            let general = ok(segre_rank1_general(l_sq, chi_o, l_dot_k, k_sq, k))?;
            ensure!(
                *ok(series.coefficient(k))? == general.value,
                "rank-1 series disagrees with the residue at L^2 {l_sq}, chi(O) {chi_o}, \
                 L.K {l_dot_k}, K^2 {k_sq}, k {k}"
            );
        }
    }
    Ok(())
}

fn mnp_consistency(_seed: u64) -> Result<(), String> {
    for l_sq in -3..=6i64 {
        for l_dot_k in -3..=6i64 {
            if (l_sq - l_dot_k) % 2 != 0 {
                continue;
            }
            for k_sq in -1..=2i64 {
                for chi_o in 0..=2i64 {
                    for k in 0..=4usize {
                        let (m, n, p) = mnp_from_bundle(l_sq, l_dot_k, k_sq, chi_o, k);
                        ensure!(
                            m == l_dot_k - 2 * k_sq && p == k_sq - chi_o + 3,
                            "exponent extraction drifted at L^2 {l_sq}, L.K {l_dot_k}, \
                             K^2 {k_sq}, chi(O) {chi_o}, k {k}"
                        );
                        let b = ok(SurfaceBundle::general(1, l_sq, l_dot_k, 0, chi_o, k_sq))?;
                        let sum = integer(2) * chi_rational(&b) - integer(4 * k as i64 - 2);
                        ensure!(
                            integer(m + n + p) == sum,
                            "exponent sum is not 2 chi - 4k + 2 at L^2 {l_sq}, \
                             L.K {l_dot_k}, K^2 {k_sq}, chi(O) {chi_o}, k {k}"
                        );
                        let exponent_form = ok(segre_general_type(m, n, p, k))?;
                        let residue = ok(segre_rank1_general(l_sq, chi_o, l_dot_k, k_sq, k))?;
                        ensure!(
                            exponent_form.value == residue.value,
                            "exponent form disagrees with the residue at L^2 {l_sq}, \
                             L.K {l_dot_k}, K^2 {k_sq}, chi(O) {chi_o}, k {k}"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn blowup_lattice(_seed: u64) -> Result<(), String> {
    for k in 2..=6usize {
        let kk = k as i64;
        for ell in (kk - 1)..=(2 * kk - 2) {
            let h = blowup_need(ell, kk) / 2 + 1;
            let search = ok(bs_obstruction_blowup(h, ell as u32, k, 40))?;
            ensure!(
                search.gate_holds && search.exhaustive,
                "blowup search lost its gate at h {h}, ell {ell}, k {k}"
            );
            let expected = vec![BlowupCandidate {
                a: 0,
                b: 1,
                d_sq: -1,
                d_dot_m: ell + 1,
                full_chain: false,
                requires_cohomology: true,
            }];
            ensure!(
                search.candidates == expected,
                "blowup candidates at h {h}, ell {ell}, k {k} are {:?}",
                search.candidates
            );
        }
    }
    Ok(())
}

fn bs_rank1(_seed: u64) -> Result<(), String> {
    for k in 0..=6usize {
        let kk = k as i64;
        for h in (2 * kk + 1)..=(2 * kk + 6) {
            for n in 1..=5u32 {
                let search = ok(bs_obstruction_rank1(n, h, k, 50))?;
                ensure!(
                    search.gate_holds && search.exhaustive && search.witnesses.is_empty(),
                    "unexpected witness at n {n}, h {h}, k {k}: {:?}",
                    search.witnesses
                );
                ensure!(
                    search.very_ample_predicted,
                    "very-ampleness not predicted at n {n}, h {h}, k {k}"
                );
            }
        }
    }
    let spot = ok(bs_obstruction_rank1(3, 1, 4, 30))?;
    ensure!(
        spot.l_sq == 18 && spot.gate_holds && spot.exhaustive,
        "spot search changed shape: {spot:?}"
    );
    let expected = vec![RankOneWitness {
        a: 1,
        d_sq: 2,
        d_dot_l: 6,
    }];
    ensure!(
        spot.witnesses == expected && !spot.very_ample_predicted,
        "spot witnesses are {:?}",
        spot.witnesses
    );
    for h in 1..=10i64 {
        for k in 0..=10usize {
            let search = ok(bs_obstruction_rank1(1, h, k, 50))?;
            ensure!(
                search.witnesses.is_empty(),
                "rank-1 polarization admits a witness at h {h}, k {k}"
            );
        }
    }
    Ok(())
}

fn seshadri(_seed: u64) -> Result<(), String> {
    let frozen = [
        (2i64, integer(1)),
        (4, rational(4, 3)),
        (8, integer(2)),
        (10, rational(5, 2)),
        (16, integer(4)),
        (18, rational(18, 5)),
        (30, integer(5)),
        (52, rational(104, 15)),
    ];
    for (h_sq, expected) in frozen {
        let bound = ok(seshadri_lower_bound(h_sq))?;
        ensure!(
            bound == expected,
            "Seshadri bound at H^2 = {h_sq} is {bound}, expected {expected}"
        );
    }
    for h_sq in (2..=402i64).step_by(2) {
        let bound = ok(seshadri_lower_bound(h_sq))?;
        let mut floor = 0i64;
        while (floor + 1) * (floor + 1) <= h_sq {
            floor += 1;
        }
        ensure!(
            integer(floor - 1) < bound && bound <= integer(floor),
            "Seshadri bound at H^2 = {h_sq} is {bound}, outside ({}, {floor}]",
            floor - 1
        );
    }
    ensure!(
        seshadri_lower_bound(3).is_err() && seshadri_lower_bound(0).is_err(),
        "degenerate polarization degrees were accepted"
    );
    Ok(())
}

fn integrality(_seed: u64) -> Result<(), String> {
    for kind in [GeometryKind::K3, GeometryKind::Abelian] {
        for rank in 1..=3u32 {
            for chi in -4..=8i64 {
                for delta_value in -2..=4i64 {
                    for k in 0..=4usize {
                        let value =
                            ok(segre_closed(kind, rank, chi, &integer(delta_value), k))?;
                        ensure!(
                            value.is_integer(),
                            "{kind} value at rank {rank}, chi {chi}, delta {delta_value}, \
                             k {k} is {}",
                            value
                        );
                    }
                }
            }
        }
    }
    for rank in 1..=4u32 {
        for twice_delta in -3..=5i64 {
            if (twice_delta + rank as i64 + 1) % 2 != 0 {
                continue;
            }
            for chi in -2..=10i64 {
                for k in 0..=4usize {
                    let d = rational(twice_delta, 2);
                    let value = ok(segre_closed(GeometryKind::Enriques, rank, chi, &d, k))?;
                    ensure!(
                        value.is_integer(),
                        "Enriques value at rank {rank}, 2 delta {twice_delta}, chi {chi}, \
                         k {k} is {}",
                        value
                    );
                }
            }
        }
    }
    Ok(())
}

fn enriques_hand_check(_seed: u64) -> Result<(), String> {
    let closed = ok(segre_closed(GeometryKind::Enriques, 1, 24, &integer(0), 8))?;
    ensure!(
        closed.value == integer(-90),
        "hand-checked Enriques value is {}, expected -90",
        closed.value
    );
    let b = ok(SurfaceBundle::for_kind(GeometryKind::Enriques, 1, 46, 0, 0))?;
    ensure!(
        ok(chi_riemann_roch(&b))? == 24 && ok(delta(GeometryKind::Enriques, &b))? == integer(0),
        "hand-checked bundle has the wrong invariants"
    );
    let series = ok(segre_series(GeometryKind::Enriques, &b, 8))?;
    ensure!(
        *ok(series.coefficient(8))? == integer(-90),
        "hand-checked series coefficient is {}",
        series.coefficient(8).unwrap()
    );
    Ok(())
}

fn families(_seed: u64) -> Result<(), String> {
    for g in 2..=10i64 {
        for d in 2..=10i64 {
            for r in 2..=3u32 {
                for k in 2..=3usize {
                    let fam = ok(family_lazarsfeld_mukai(g, d, r, k))?;
                    if fam.hypotheses_hold() {
                        ensure!(
                            fam.verdict.all_flags_hold() && fam.verdict.segre.is_positive(),
                            "Lazarsfeld-Mukai family escapes the criterion at \
                             g {g}, d {d}, r {r}, k {k}: value {}",
                            fam.verdict.segre
                        );
                    }
                }
            }
        }
    }
    for a in 1..=2u32 {
        for h in 1..=5i64 {
            for m in 1..=2i64 {
                for k in 2..=3usize {
                    let fam = ok(family_ulrich(a, h, m, k))?;
                    if fam.hypotheses_hold() {
                        ensure!(
                            fam.verdict.all_flags_hold() && fam.verdict.segre.is_positive(),
                            "Ulrich family escapes the criterion at a {a}, h {h}, \
                             m {m}, k {k}: value {}",
                            fam.verdict.segre
                        );
                    }
                }
            }
        }
    }
    for a in 1..=3i64 {
        for b in 1..=30i64 {
            for k in 1..=3usize {
                let fam = ok(family_semihomogeneous(a, b, k))?;
                if fam.hypotheses_hold() {
                    ensure!(
                        fam.verdict.all_flags_hold() && fam.verdict.segre.is_positive(),
                        "semihomogeneous family escapes the criterion at a {a}, b {b}, \
                         k {k}: value {}",
                        fam.verdict.segre
                    );
                }
            }
        }
    }
    let spot = ok(family_semihomogeneous(2, 5, 1))?;
    ensure!(
        spot.bundle.rank == 4 && spot.chi == 25 && spot.hypotheses_hold(),
        "slope-5/2 spot check changed: rank {}, chi {}",
        spot.bundle.rank,
        spot.chi
    );
    ensure!(
        spot.verdict.all_flags_hold() && spot.verdict.segre.is_positive(),
        "slope-5/2 spot check is not covered"
    );
    let blocked = ok(family_semihomogeneous(2, 4, 1))?;
    ensure!(
        blocked.flags.iter().any(|f| f.name == "coprime" && !f.holds),
        "non-coprime slope was not flagged"
    );
    Ok(())
}
