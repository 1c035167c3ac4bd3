//! Segre integrals over symmetric products of smooth projective curves and
//! over punctual Quot schemes of trivial bundles.
//!
//! The symmetric-product integral has a closed coefficient form and a
//! generating-series form related by the sign (-1)^k; the tests require exact
//! agreement on a grid. The Quot-scheme integral is defined through the
//! symmetry that trades the rank-N trivial quotient problem for a rank-N
//! bundle on the symmetric product, so its sign bookkeeping is part of the
//! contract, not a convention chosen here.

mod bundle;
mod criteria;
mod error;
mod integrals;
mod quot;

pub use bundle::CurveBundle;
pub use criteria::{check_curve_criterion, check_quot_criterion, CurveCriterion, QuotCriterion};
pub use error::CurveError;
pub use exact_series::{SegreValue, Sign};
pub use integrals::{segre_curve_closed, segre_curve_series};
pub use quot::{segre_quot, segre_quot_signed};
