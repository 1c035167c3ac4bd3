use num_rational::BigRational;
use thiserror::Error;

/// Contract violations for series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// More coefficients were supplied than the truncation order admits.
    #[error("{given} coefficients exceed truncation order {order}")]
    TooManyCoefficients { given: usize, order: usize },

    /// Binary operation on series of different truncation orders.
    #[error("series orders differ ({left} vs {right}); truncate explicitly first")]
    OrderMismatch { left: usize, right: usize },

    /// Rational powers are defined for unit series only.
    #[error("rational power requires constant term 1, found {found}")]
    NonUnitConstant { found: BigRational },

    /// Series inversion requires an invertible constant term.
    #[error("inverse requires a nonzero constant term")]
    ZeroConstantTerm,

    /// Composition substitutes a series with zero constant term.
    #[error("composition requires inner constant term 0, found {found}")]
    NonzeroInnerConstant { found: BigRational },

    /// Reversion needs constant term 0 and a nonzero linear term.
    #[error("reversion requires constant term 0 and nonzero linear term")]
    NotReversible,

    /// Requested coefficient lies beyond the truncation order.
    #[error("coefficient {index} lies beyond truncation order {order}")]
    CoefficientBeyondOrder { index: usize, order: usize },

    /// An order-0 series has no derivative at any tracked order.
    #[error("cannot differentiate an order-0 series")]
    DerivativeOfConstant,

    /// Truncation can only shrink an order, never invent coefficients.
    #[error("cannot grow truncation order from {from} to {to}")]
    TruncationGrowth { from: usize, to: usize },
}
