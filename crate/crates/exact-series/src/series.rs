use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::rational::binomial;

/// A formal power series truncated at an explicit order.
///
/// Coefficients of `t^0 .. t^order` are stored exactly; everything beyond the
/// order is unknown, not zero. The coefficient vector always has length
/// `order + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Series with the given low-order coefficients, zero-padded up to `order`.
    ///
    /// Fails if more than `order + 1` coefficients are supplied.
    pub fn from_coeffs(
        mut coeffs: Vec<BigRational>,
        order: usize,
    ) -> Result<Self, SeriesError> {
        if coeffs.len() > order + 1 {
            return Err(SeriesError::TooManyCoefficients {
                given: coeffs.len(),
                order,
            });
        }
        coeffs.resize(order + 1, BigRational::zero());
        Ok(Self { coeffs })
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// A constant series.
    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The identity series `t` (truncation of `t` at order 0 is the zero series).
    pub fn identity(order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = BigRational::one();
        }
        Self { coeffs }
    }

    /// The unit linear series `1 + c t`.
    pub fn one_plus(c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        if order >= 1 {
            coeffs[1] = c;
        }
        Self { coeffs }
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All tracked coefficients, lowest degree first.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The coefficient of `t^index`; fails beyond the truncation order.
    pub fn coefficient(&self, index: usize) -> Result<&BigRational, SeriesError> {
        self.coeffs
            .get(index)
            .ok_or(SeriesError::CoefficientBeyondOrder {
                index,
                order: self.order(),
            })
    }

    /// True if every tracked coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }

    /// Re-truncation to a lower order; growing is an error.
    pub fn truncated(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::TruncationGrowth {
                from: self.order(),
                to: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn require_same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum; orders must match.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Coefficient-wise difference; orders must match.
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order; orders must match.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::DerivativeOfConstant);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * BigRational::from_integer(i.into()))
            .collect();
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c = &self.coeffs[0];
        if c.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let unit = self.scale(&c.recip());
        Ok(unit.rational_pow(&-BigRational::one())?.scale(&c.recip()))
    }

    /// Rational power `self^e` of a unit series, via the binomial series in
    /// `self - 1` evaluated by Horner's scheme.
    pub fn rational_pow(&self, e: &BigRational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant {
                found: self.coeffs[0].clone(),
            });
        }
        let n = self.order();
        let mut x = self.clone();
        x.coeffs[0] = BigRational::zero();
        let binomials: Vec<BigRational> = (0..=n).map(|j| binomial(e, j)).collect();
        let mut acc = Self::constant(binomials[n].clone(), n);
        for j in (0..n).rev() {
            acc = acc.mul(&x)?;
            acc.coeffs[0] += &binomials[j];
        }
        Ok(acc)
    }

    /// Integer power of a unit series.
    pub fn int_pow(&self, e: i64) -> Result<Self, SeriesError> {
        self.rational_pow(&BigRational::from_integer(e.into()))
    }

    /// Substitution `self(inner)`; the inner series must have constant term 0
    /// and the same truncation order.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant {
                found: inner.coeffs[0].clone(),
            });
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for j in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[j];
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `g` with `self(g) = t` up to the
    /// truncation order. Requires constant term 0 and nonzero linear term.
    ///
    /// Newton iteration doubles the number of correct coefficients per step;
    /// the round-trip `self(g) = t` is verified before returning.
    pub fn reverse(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if n == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotReversible);
        }

        let ident = Self::identity(n);
        // Derivative padded back to order n; the padding never reaches the
        // coefficients used by the correction term below.
        let mut fp = self.derivative()?;
        fp.coeffs.push(BigRational::zero());

        let mut g = Self::zero(n);
        g.coeffs[1] = self.coeffs[1].recip();
        for _ in 0..=(usize::BITS - n.leading_zeros()) + 2 {
            let err = self.compose(&g)?.sub(&ident)?;
            if err.is_zero() {
                return Ok(g);
            }
            let correction = err.mul(&fp.compose(&g)?.inverse()?)?;
            g = g.sub(&correction)?;
        }
        unreachable!("Newton reversion failed to converge at order {n}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if a.is_negative() { "-" } else { "+" })?;
            } else if a.is_negative() {
                write!(f, "-")?;
            }
            let abs = a.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs} ")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
