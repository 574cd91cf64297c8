//! Truncated formal power series over exact rationals.
//!
//! A series is a coefficient slice `[a_0, a_1, ..., a_k]`; every operation
//! truncates at the length of its output buffer. This is the engine behind
//! Segre-class inversion and Todd-class division, so everything here is
//! exact.

use crate::rational::Rat;
use num_traits::{One, Zero};

/// Product of two series, truncated to `len` coefficients.
pub fn mul_trunc(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Multiplicative inverse of a series with unit constant term, truncated to
/// `len` coefficients: b_0 = 1/a_0, b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}.
///
/// Panics if the constant term is zero; callers only invert unit series.
pub fn inverse_trunc(a: &[Rat], len: usize) -> Vec<Rat> {
    let a0 = a.first().cloned().unwrap_or_else(Rat::zero);
    assert!(!a0.is_zero(), "series inverse needs a unit constant term");
    let a0_inv = Rat::one() / a0;
    let mut out = vec![Rat::zero(); len];
    if len == 0 {
        return out;
    }
    out[0] = a0_inv.clone();
    for k in 1..len {
        let mut acc = Rat::zero();
        for j in 1..=k {
            let aj = match a.get(j) {
                Some(c) if !c.is_zero() => c,
                _ => continue,
            };
            acc += aj * &out[k - j];
        }
        out[k] = -acc * &a0_inv;
    }
    out
}

/// Quotient a/b truncated to `len` coefficients; b must have a unit constant
/// term.
pub fn div_trunc(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    mul_trunc(a, &inverse_trunc(b, len), len)
}

/// a(x)^k truncated to `len` coefficients, by binary powering.
pub fn pow_trunc(a: &[Rat], k: u32, len: usize) -> Vec<Rat> {
    let mut result = vec![Rat::zero(); len];
    if len > 0 {
        result[0] = Rat::one();
    }
    let mut base = a.to_vec();
    base.resize(len, Rat::zero());
    let mut exp = k;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_trunc(&result, &base, len);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul_trunc(&base, &base, len);
        }
    }
    result
}

/// Substitute x -> c*x: coefficient a_k picks up a factor c^k.
pub fn scale_var(a: &[Rat], c: &Rat) -> Vec<Rat> {
    let mut factor = Rat::one();
    a.iter()
        .map(|ak| {
            let out = ak * &factor;
            factor *= c;
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - x) = 1 + x + x^2 + ...
        let a = vec![rat(1), rat(-1)];
        assert_eq!(inverse_trunc(&a, 5), vec![rat(1); 5]);
    }

    #[test]
    fn inverse_roundtrips() {
        let a = vec![rat(1), ratio(3, 2), rat(-2), ratio(1, 7)];
        let inv = inverse_trunc(&a, 8);
        let prod = mul_trunc(&a, &inv, 8);
        assert_eq!(prod[0], rat(1));
        assert!(prod[1..].iter().all(|c| c == &rat(0)));
    }

    #[test]
    fn powering_matches_repeated_multiplication() {
        let a = vec![rat(1), rat(2), ratio(-1, 3)];
        let mut by_mul = vec![rat(1), rat(0), rat(0), rat(0), rat(0)];
        for _ in 0..4 {
            by_mul = mul_trunc(&by_mul, &a, 5);
        }
        assert_eq!(pow_trunc(&a, 4, 5), by_mul);
    }

    #[test]
    fn variable_scaling() {
        let a = vec![rat(1), rat(1), rat(1)];
        assert_eq!(scale_var(&a, &rat(2)), vec![rat(1), rat(2), rat(4)]);
    }
}
