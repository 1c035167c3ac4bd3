//! Segre integrals of tautological bundles over Hilbert schemes of points on
//! surfaces, in exact arithmetic.
//!
//! Each K-trivial geometry admits two independent routes to the same integral:
//! a closed coefficient-extraction formula in an auxiliary variable, and a
//! generating series assembled from universal factors and evaluated through
//! compositional reversion. Both are implemented; the integration tests demand
//! exact agreement on full parameter grids, which is what certifies the
//! internal truncation orders.
//!
//! Rank-one bundles on arbitrary surfaces get a third family of routes (a
//! residue formula, its reversion twin, and an (m, n, p)-exponent form); these
//! must agree with each other and specialize to the K-trivial answers.

mod closed;
mod error;
mod geometry;
mod rank1;
mod series;

pub use closed::{segre_closed, segre_closed_rational, segre_delta0};
pub use error::SurfaceError;
pub use exact_series::{SegreValue, Sign};
pub use geometry::{chi_rational, chi_riemann_roch, delta, GeometryKind, SurfaceBundle};
pub use rank1::{
    mnp_from_bundle, segre_blowup_k3, segre_general_type, segre_rank1_general,
    segre_rank1_series,
};
pub use series::segre_series;
