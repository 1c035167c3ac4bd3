//! Grid scanners: frozen experiment outcomes, coverage, determinism, and
//! report formats.

use exact_series::{integer, rational};
use positivity_lab::{scan_enriques, scan_lemma};

#[test]
fn default_enriques_grid_refutes_the_naive_bound_only() {
    let scan = scan_enriques(1..=8, 1..=10, 0..=8, 0..=6).unwrap();
    assert_eq!(scan.rows.len(), 4680);
    assert_eq!(scan.counterexamples, 847);
    assert_eq!(scan.theorem_violations, 0);
    assert_eq!(scan.conjecture_violations, 0);
    assert!(scan.rows.iter().all(|r| r.integral));

    let first = scan.rows.iter().find(|r| r.is_counterexample()).unwrap();
    assert_eq!(
        (first.rank, first.k, first.chi, first.delta.clone()),
        (1, 8, 24, integer(0))
    );
    assert_eq!(first.value, integer(-90));
    assert!(!first.theorem_applies);
}

#[test]
fn enriques_grid_covers_exactly_the_declared_lattice() {
    let scan = scan_enriques(1..=2, 1..=2, 0..=1, 0..=1).unwrap();
    let mut expected = Vec::new();
    for rank in 1..=2u32 {
        for k in 1..=2usize {
            for margin in 0..=1i64 {
                let twice_deltas: &[i64] = if rank % 2 == 1 { &[0, 2] } else { &[1] };
                for &twice_delta in twice_deltas {
                    expected.push((rank, k, (rank as i64 + 2) * k as i64 + margin, twice_delta));
                }
            }
        }
    }
    let actual: Vec<(u32, usize, i64, i64)> = scan
        .rows
        .iter()
        .map(|r| {
            let twice = (r.delta.clone() * integer(2)).to_integer();
            (
                r.rank,
                r.k,
                r.chi,
                i64::try_from(twice).expect("small grid"),
            )
        })
        .collect();
    assert_eq!(actual, expected);
    assert_eq!(scan.metadata.grid[0], ("rank".to_string(), "1..2".to_string()));
}

#[test]
fn enriques_scan_is_deterministic_across_worker_counts() {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| scan_enriques(1..=3, 1..=4, 0..=2, 0..=2).unwrap());
    let several = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| scan_enriques(1..=3, 1..=4, 0..=2, 0..=2).unwrap());
    assert_eq!(single.rows, several.rows);
    assert_eq!(single.counterexamples, several.counterexamples);
}

#[test]
fn enriques_csv_report_carries_metadata_and_flag_columns() {
    let scan = scan_enriques(1..=1, 1..=1, 0..=0, 0..=0).unwrap();
    let csv = scan.to_csv();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# generated_at "));
    assert_eq!(lines.next().unwrap(), "# seed none");
    assert_eq!(
        lines.next().unwrap(),
        "# grid rank=1..1 k=1..1 chi_margin=0..0 delta=0..0"
    );
    assert_eq!(
        lines.next().unwrap(),
        "rank,k,chi,delta,value,naive_bound_holds,theorem_applies,conjecture_applies,positive,integral"
    );
    assert_eq!(lines.next().unwrap(), "1,1,3,0,4,true,false,false,true,true");
    assert!(lines.next().is_none());
}

#[test]
fn enriques_json_report_mirrors_the_rows() {
    let scan = scan_enriques(1..=2, 1..=2, 0..=1, 0..=1).unwrap();
    let json = scan.to_json();
    assert_eq!(json["summary"]["rows"], scan.rows.len());
    assert_eq!(
        json["rows"].as_array().unwrap().len(),
        scan.rows.len()
    );
    assert_eq!(json["rows"][0]["rank"], 1);
    assert_eq!(json["metadata"]["grid"][2]["axis"], "chi_margin");
    assert!(json["metadata"]["seed"].is_null());
}

#[test]
fn default_lemma_grid_has_no_window_violations() {
    let scan = scan_lemma(0..=12, -12..=12, 0..=12).unwrap();
    assert_eq!(scan.rows.len(), 2113);
    assert_eq!(scan.window_violations, 0);
    assert!(scan
        .rows
        .iter()
        .all(|r| r.first_nonpositive.is_none_or(|k| k as i64 > r.bound)));
}

#[test]
fn lemma_csv_report_lists_the_window_columns() {
    let scan = scan_lemma(2..=2, 19..=19, 1..=1).unwrap();
    let csv = scan.to_csv();
    let mut lines = csv.lines().skip(3);
    assert_eq!(
        lines.next().unwrap(),
        "m,n,p,hypotheses_hold,bound,scanned_up_to,first_nonpositive,window_violated"
    );
    assert_eq!(lines.next().unwrap(), "2,19,1,true,1,1,,false");
}

#[test]
fn lemma_json_reports_null_for_clean_rows() {
    let scan = scan_lemma(4..=4, 0..=0, 0..=0).unwrap();
    let json = scan.to_json();
    assert_eq!(json["rows"][0]["m"], 4);
    assert_eq!(json["rows"][0]["bound"], 1);
    assert!(json["rows"][0]["first_nonpositive"].is_null());
    assert_eq!(json["summary"]["window_violations"], 0);
}

#[test]
fn empty_grids_produce_empty_reports() {
    #[allow(clippy::reversed_empty_ranges)]
    let scan = scan_enriques(1..=0, 1..=2, 0..=1, 0..=1).unwrap();
    assert!(scan.rows.is_empty());
    #[allow(clippy::reversed_empty_ranges)]
    let lemma = scan_lemma(1..=0, 0..=0, 0..=0).unwrap();
    assert!(lemma.rows.is_empty());
}

#[test]
fn scanned_delta_is_half_integral_exactly_for_even_ranks() {
    let scan = scan_enriques(1..=4, 1..=2, 0..=0, 0..=2).unwrap();
    for row in &scan.rows {
        let is_integer = row.delta.is_integer();
        assert_eq!(is_integer, row.rank % 2 == 1, "rank {}", row.rank);
        assert!(row.delta >= rational(1, 2) || row.delta == integer(0));
    }
}
