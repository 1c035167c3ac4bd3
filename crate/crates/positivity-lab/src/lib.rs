//! Positivity laboratory for tautological Segre integrals: criterion checkers
//! shaped after each theorem, a coefficient-positivity window verifier,
//! lattice searches for very-ampleness obstructions, Seshadri lower bounds,
//! bundle families with known invariants, and grid scanners that emit
//! machine-readable reports.
//!
//! The proved criteria assert their implication (all hypothesis flags hold
//! implies the exact integral is positive) on every call; the conjectural
//! all-rank Enriques bound is only ever reported. Scan reports keep
//! lexicographic input order regardless of worker count.

mod error;
mod families;
mod lemma;
mod obstruction;
mod scan;
mod surfaces;
mod verdict;

pub use error::LabError;
pub use families::{
    family_lazarsfeld_mukai, family_semihomogeneous, family_ulrich, LazarsfeldMukaiFamily,
    SemihomogeneousFamily, UlrichFamily,
};
pub use lemma::{verify_positivity_lemma, LemmaReport};
pub use obstruction::{
    bs_obstruction_blowup, bs_obstruction_rank1, seshadri_lower_bound, BlowupCandidate,
    BlowupObstruction, RankOneObstruction, RankOneWitness,
};
pub use scan::{
    range_label, report_timestamp, scan_enriques, scan_lemma, EnriquesScan, EnriquesScanRow,
    LemmaScan, ScanMetadata,
};
pub use surfaces::{
    check_abelian, check_blowup, check_enriques, check_enriques_conjecture, check_general_type,
    check_k3,
};
pub use verdict::{Conclusion, CriterionVerdict, Flag};
