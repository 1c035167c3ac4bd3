//! Truncated formal power series over arbitrary-precision rationals.
//!
//! A [`TruncatedSeries`] stores coefficients of `t^0 .. t^order` exactly, as
//! [`BigRational`] values. Every operation tracks the truncation order
//! explicitly: binary operations require equal orders (re-truncate with
//! [`TruncatedSeries::truncated`] first), and nothing ever silently pads or
//! extends a series.
//!
//! The engine provides the operations needed for Segre-integral generating
//! functions: rational powers of unit series via the binomial series,
//! composition, and compositional reversion by Newton iteration.

mod error;
mod rational;
mod series;
mod value;

pub use error::SeriesError;
pub use num_rational::BigRational;
pub use rational::{binomial, integer, rational};
pub use series::TruncatedSeries;
pub use value::{SegreValue, Sign};
