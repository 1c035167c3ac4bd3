//! Parameter-grid scanners and their machine-readable reports.
//!
//! Grids are enumerated in lexicographic input order and evaluated in
//! parallel; the collected rows keep the enumeration order, so reports are
//! byte-identical across worker counts. Timestamps honor SOURCE_DATE_EPOCH
//! for reproducible output.

use std::env;
use std::fmt::Display;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use chrono::{DateTime, SecondsFormat, Utc};
use exact_series::{rational, BigRational, Sign};
use rayon::prelude::*;
use serde_json::{json, Value};
use surface_segre::{segre_closed, GeometryKind};

use crate::error::LabError;
use crate::lemma::{verify_positivity_lemma, LemmaReport};

/// RFC 3339 timestamp for report metadata, from SOURCE_DATE_EPOCH when set.
pub fn report_timestamp() -> String {
    env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|raw| raw.parse::<i64>().ok())
        .and_then(|secs| DateTime::from_timestamp(secs, 0))
        .unwrap_or_else(Utc::now)
        .to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Inclusive range rendered the way the command line accepts it.
pub fn range_label<T: Display>(range: &RangeInclusive<T>) -> String {
    format!("{}..{}", range.start(), range.end())
}

/// Provenance block shared by scan reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanMetadata {
    pub generated_at: String,
    pub seed: Option<u64>,
    /// Grid axes as (name, "lo..hi") pairs, in enumeration order.
    pub grid: Vec<(String, String)>,
}

impl ScanMetadata {
    fn csv_comments(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# generated_at {}", self.generated_at);
        match self.seed {
            Some(seed) => {
                let _ = writeln!(out, "# seed {seed}");
            }
            None => {
                let _ = writeln!(out, "# seed none");
            }
        }
        let axes: Vec<String> = self
            .grid
            .iter()
            .map(|(name, label)| format!("{name}={label}"))
            .collect();
        let _ = writeln!(out, "# grid {}", axes.join(" "));
        out
    }

    fn json_value(&self) -> Value {
        let grid: Vec<Value> = self
            .grid
            .iter()
            .map(|(name, label)| json!({ "axis": name, "range": label }))
            .collect();
        json!({
            "generated_at": self.generated_at,
            "seed": self.seed,
            "grid": grid,
        })
    }
}

/// One grid point of the Enriques experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnriquesScanRow {
    pub rank: u32,
    pub k: usize,
    pub chi: i64,
    /// Half-integral for even rank, which the lattice forces.
    pub delta: BigRational,
    pub value: BigRational,
    /// chi >= (r+2)k and delta >= 0, the bound proved on the other K-trivial
    /// geometries; a nonpositive value here is a counterexample to carrying
    /// it over.
    pub naive_bound_holds: bool,
    /// Odd rank, chi >= 2(r+1)k and delta >= 0, the proved range.
    pub theorem_applies: bool,
    /// 4 chi >= (5r+8)k and delta >= 0, the conjectured range.
    pub conjecture_applies: bool,
    pub positive: bool,
    pub integral: bool,
}

impl EnriquesScanRow {
    pub fn is_counterexample(&self) -> bool {
        self.naive_bound_holds && !self.positive
    }

    pub fn violates_theorem(&self) -> bool {
        self.theorem_applies && !self.positive
    }

    pub fn violates_conjecture(&self) -> bool {
        self.conjecture_applies && !self.positive
    }
}

/// Full report of one Enriques grid scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnriquesScan {
    pub metadata: ScanMetadata,
    pub rows: Vec<EnriquesScanRow>,
    pub counterexamples: usize,
    pub theorem_violations: usize,
    pub conjecture_violations: usize,
}

const ENRIQUES_HEADER: &str =
    "rank,k,chi,delta,value,naive_bound_holds,theorem_applies,conjecture_applies,positive,integral";

impl EnriquesScan {
    pub fn summary_line(&self) -> String {
        format!(
            "rows {}, naive-bound counterexamples {}, theorem violations {}, conjecture violations {}",
            self.rows.len(),
            self.counterexamples,
            self.theorem_violations,
            self.conjecture_violations
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.metadata.csv_comments();
        let _ = writeln!(out, "{ENRIQUES_HEADER}");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                row.rank,
                row.k,
                row.chi,
                row.delta,
                row.value,
                row.naive_bound_holds,
                row.theorem_applies,
                row.conjecture_applies,
                row.positive,
                row.integral
            );
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "rank": row.rank,
                    "k": row.k,
                    "chi": row.chi,
                    "delta": row.delta.to_string(),
                    "value": row.value.to_string(),
                    "naive_bound_holds": row.naive_bound_holds,
                    "theorem_applies": row.theorem_applies,
                    "conjecture_applies": row.conjecture_applies,
                    "positive": row.positive,
                    "integral": row.integral,
                })
            })
            .collect();
        json!({
            "metadata": self.metadata.json_value(),
            "rows": rows,
            "summary": {
                "rows": self.rows.len(),
                "counterexamples": self.counterexamples,
                "theorem_violations": self.theorem_violations,
                "conjecture_violations": self.conjecture_violations,
            },
        })
    }
}

/// Scans the Enriques grid chi = (r+2)k + margin over the requested ranges.
///
/// delta runs through the half-integer lattice the geometry allows: integral
/// for odd rank, strictly half-integral for even rank, between the given
/// integer bounds inclusive.
pub fn scan_enriques(
    ranks: RangeInclusive<u32>,
    points: RangeInclusive<usize>,
    chi_margins: RangeInclusive<i64>,
    deltas: RangeInclusive<i64>,
) -> Result<EnriquesScan, LabError> {
    let metadata = ScanMetadata {
        generated_at: report_timestamp(),
        seed: None,
        grid: vec![
            ("rank".into(), range_label(&ranks)),
            ("k".into(), range_label(&points)),
            ("chi_margin".into(), range_label(&chi_margins)),
            ("delta".into(), range_label(&deltas)),
        ],
    };
    let mut inputs = Vec::new();
    for rank in ranks {
        for k in points.clone() {
            for margin in chi_margins.clone() {
                for twice_delta in 2 * deltas.start()..=2 * deltas.end() {
                    let wanted = if rank % 2 == 1 { 0 } else { 1 };
                    if twice_delta.rem_euclid(2) == wanted {
                        inputs.push((rank, k, margin, twice_delta));
                    }
                }
            }
        }
    }
    let rows = inputs
        .into_par_iter()
        .map(|(rank, k, margin, twice_delta)| -> Result<EnriquesScanRow, LabError> {
            let rr = rank as i64;
            let kk = k as i64;
            let chi = (rr + 2) * kk + margin;
            let delta = rational(twice_delta, 2);
            let segre = segre_closed(GeometryKind::Enriques, rank, chi, &delta, k)?;
            let delta_nonneg = twice_delta >= 0;
            Ok(EnriquesScanRow {
                rank,
                k,
                chi,
                delta,
                naive_bound_holds: chi >= (rr + 2) * kk && delta_nonneg,
                theorem_applies: rank % 2 == 1 && chi >= 2 * (rr + 1) * kk && delta_nonneg,
                conjecture_applies: 4 * chi >= (5 * rr + 8) * kk && delta_nonneg,
                positive: segre.sign == Sign::Positive,
                integral: segre.value.is_integer(),
                value: segre.value,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let counterexamples = rows.iter().filter(|r| r.is_counterexample()).count();
    let theorem_violations = rows.iter().filter(|r| r.violates_theorem()).count();
    let conjecture_violations = rows.iter().filter(|r| r.violates_conjecture()).count();
    Ok(EnriquesScan {
        metadata,
        rows,
        counterexamples,
        theorem_violations,
        conjecture_violations,
    })
}

/// Full report of one positivity-window scan over exponent triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaScan {
    pub metadata: ScanMetadata,
    pub rows: Vec<LemmaReport>,
    pub window_violations: usize,
}

const LEMMA_HEADER: &str =
    "m,n,p,hypotheses_hold,bound,scanned_up_to,first_nonpositive,window_violated";

impl LemmaScan {
    pub fn summary_line(&self) -> String {
        format!(
            "rows {}, window violations {}",
            self.rows.len(),
            self.window_violations
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.metadata.csv_comments();
        let _ = writeln!(out, "{LEMMA_HEADER}");
        for row in &self.rows {
            let first = row
                .first_nonpositive
                .map(|k| k.to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.m,
                row.n,
                row.p,
                row.hypotheses_hold,
                row.bound,
                row.scanned_up_to,
                first,
                row.window_violated
            );
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "m": row.m,
                    "n": row.n,
                    "p": row.p,
                    "hypotheses_hold": row.hypotheses_hold,
                    "bound": row.bound,
                    "scanned_up_to": row.scanned_up_to,
                    "first_nonpositive": row.first_nonpositive,
                    "window_violated": row.window_violated,
                })
            })
            .collect();
        json!({
            "metadata": self.metadata.json_value(),
            "rows": rows,
            "summary": {
                "rows": self.rows.len(),
                "window_violations": self.window_violations,
            },
        })
    }
}

/// Scans exponent triples with even sum, checking each one's positivity
/// window up to its own guaranteed bound.
pub fn scan_lemma(
    ms: RangeInclusive<i64>,
    ns: RangeInclusive<i64>,
    ps: RangeInclusive<i64>,
) -> Result<LemmaScan, LabError> {
    let metadata = ScanMetadata {
        generated_at: report_timestamp(),
        seed: None,
        grid: vec![
            ("m".into(), range_label(&ms)),
            ("n".into(), range_label(&ns)),
            ("p".into(), range_label(&ps)),
        ],
    };
    let mut inputs = Vec::new();
    for m in ms {
        for n in ns.clone() {
            for p in ps.clone() {
                if (m + n + p) % 2 == 0 {
                    inputs.push((m, n, p));
                }
            }
        }
    }
    let rows = inputs
        .into_par_iter()
        .map(|(m, n, p)| {
            let bound = ((m + n + p) / 2 - 1).min(m - 1);
            verify_positivity_lemma(m, n, p, bound.max(0) as usize)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let window_violations = rows.iter().filter(|r| r.window_violated).count();
    Ok(LemmaScan {
        metadata,
        rows,
        window_violations,
    })
}
