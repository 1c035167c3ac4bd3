use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Exact rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact integer as a rational.
pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn binomial(x: &BigRational, k: usize) -> BigRational {
    let mut out = BigRational::one();
    for j in 0..k {
        out *= x - integer(j as i64);
        out /= integer(j as i64 + 1);
    }
    out
}
