use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Sign of an exact rational value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Sign of the given rational.
    pub fn of(value: &BigRational) -> Self {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// An exact integral value together with its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreValue {
    pub value: BigRational,
    pub sign: Sign,
}

impl SegreValue {
    pub fn new(value: BigRational) -> Self {
        let sign = Sign::of(&value);
        Self { value, sign }
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn is_integer(&self) -> bool {
        self.value.is_integer()
    }
}

impl fmt::Display for SegreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
