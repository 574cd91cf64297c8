//! Small helpers around arbitrary-precision rationals.
//!
//! Every quantity in this crate that is not explicitly a certified decimal
//! interval is an exact `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Rat = BigRational;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact rational p/q.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// k! as a big integer.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(p, q) in the polynomial sense:
/// p(p-1)...(p-q+1)/q!, defined for every integer p (negative included).
///
/// For 0 <= p < q this vanishes; for p < 0 it carries sign (-1)^q C(q-p-1, q),
/// which is what the Euler-characteristic polynomials of line bundles need.
pub fn binomial_poly(p: i64, q: u32) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..q as i64 {
        num *= BigInt::from(p - j);
    }
    num / factorial(q)
}

/// Render a rational as "p/q" (plain integer when q = 1).
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Truncated decimal expansion of `r` with `digits` fractional digits.
///
/// Truncation is toward zero; the result is exact as a string prefix of the
/// decimal expansion, not a rounded value.
pub fn decimal_string(r: &Rat, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r * Rat::from_integer(scale.clone())).trunc();
    let int = scaled.to_integer();
    let sign = if int.is_negative() { "-" } else { "" };
    let abs = int.abs();
    let whole = &abs / &scale;
    let frac = &abs % &scale;
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = digits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn binomials_match_pascal_for_nonnegative_p() {
        assert_eq!(binomial_poly(7, 6), BigInt::from(7));
        assert_eq!(binomial_poly(8, 6), BigInt::from(28));
        assert_eq!(binomial_poly(5, 6), BigInt::zero());
        assert_eq!(binomial_poly(0, 0), BigInt::one());
    }

    #[test]
    fn binomials_extend_to_negative_p() {
        // C(-1, 6) = 1, C(-2, 6) = 7: the values behind chi(O(-5)), chi(O(-6)) on Q^5.
        assert_eq!(binomial_poly(-1, 6), BigInt::from(1));
        assert_eq!(binomial_poly(-2, 6), BigInt::from(7));
        assert_eq!(binomial_poly(-3, 4), BigInt::from(15));
    }

    #[test]
    fn decimal_strings_truncate() {
        assert_eq!(decimal_string(&ratio(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&ratio(-11, 12), 4), "-0.9166");
        assert_eq!(decimal_string(&rat(25), 0), "25");
        assert_eq!(decimal_string(&ratio(1, 8), 3), "0.125");
    }
}
