//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// `base^exp` for a non-negative integer exponent.
pub fn pow(base: &Scalar, exp: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `(-1)^n`.
pub fn sign(n: i64) -> Scalar {
    if n.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// Formats a scalar as `p` or `p/q`; never as a decimal.
pub fn display(x: &Scalar) -> alloc::string::String {
    use alloc::format;
    if x.is_zero() {
        return "0".into();
    }
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        let sign = if x.is_negative() { "-" } else { "" };
        format!("{}{}/{}", sign, x.numer().abs(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let x = ratio(6, -4);
        assert_eq!(display(&x), "-3/2");
        assert_eq!(x, ratio(-3, 2));
    }

    #[test]
    fn factorials_and_signs() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
        assert_eq!(sign(3), int(-1));
        assert_eq!(sign(-2), int(1));
        assert_eq!(pow(&ratio(-8, 1), 2), int(64));
    }
}
