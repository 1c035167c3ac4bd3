//! Flag-value parsers: inclusive integer ranges and exact rationals.

use std::fmt::Display;
use std::ops::RangeInclusive;
use std::str::FromStr;

use exact_series::{rational, BigRational};

/// Parses "lo..hi", both ends inclusive; lo > hi is allowed and empty.
pub fn parse_range<T>(text: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr,
    T::Err: Display,
{
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected an inclusive range lo..hi, got {text:?}"))?;
    let lo = lo
        .trim()
        .parse::<T>()
        .map_err(|e| format!("bad range start in {text:?}: {e}"))?;
    let hi = hi
        .trim()
        .parse::<T>()
        .map_err(|e| format!("bad range end in {text:?}: {e}"))?;
    Ok(lo..=hi)
}

/// Parses an integer or "num/den" into an exact rational.
pub fn parse_exact(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    match text.split_once('/') {
        None => {
            let n = text
                .parse::<i64>()
                .map_err(|e| format!("bad integer {text:?}: {e}"))?;
            Ok(rational(n, 1))
        }
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<i64>()
                .map_err(|e| format!("bad numerator in {text:?}: {e}"))?;
            let d = den
                .trim()
                .parse::<i64>()
                .map_err(|e| format!("bad denominator in {text:?}: {e}"))?;
            if d == 0 {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(rational(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_series::integer;

    #[test]
    fn ranges_and_rationals_parse() {
        assert_eq!(parse_range::<i64>("-12..12").unwrap(), -12..=12);
        assert_eq!(parse_range::<usize>("1..10").unwrap(), 1..=10);
        assert!(parse_range::<u32>("3").is_err());
        assert!(parse_range::<u32>("a..4").is_err());
        assert_eq!(parse_exact("-3").unwrap(), integer(-3));
        assert_eq!(parse_exact("7/2").unwrap(), rational(7, 2));
        assert_eq!(parse_exact("-7/-2").unwrap(), rational(7, 2));
        assert!(parse_exact("1/0").is_err());
        assert!(parse_exact("x").is_err());
    }
}
