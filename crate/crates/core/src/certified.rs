//! Certified evaluation of the one transcendental quantity in the pipeline.
//!
//! Everything is a rational interval [lo, hi] guaranteed to contain the true
//! value. Internally the series run in fixed-point integer arithmetic at
//! scale 10^d: every truncating division is counted and the final bracket is
//! widened by the accumulated unit error, so the enclosure stays rigorous
//! while numerators and denominators stay small. pi comes from Machin's
//! formula with alternating arctan series; sin uses its alternating Taylor
//! series on (0, 1) plus monotonicity there; square roots come from scaled
//! integer square roots.

use crate::rational::{decimal_string, rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::RwLock;

/// A closed rational interval certified to contain a real value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_negative() {
            Self::new(&self.hi * c, &self.lo * c)
        } else {
            Self::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> Self {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "interval straddles zero"
        );
        Self::new(Rat::one() / &self.hi, Rat::one() / &self.lo)
    }

    /// Square of an interval known to be positive.
    pub fn square_positive(&self) -> Self {
        assert!(self.lo.is_positive(), "expected a positive interval");
        Self::new(&self.lo * &self.lo, &self.hi * &self.hi)
    }

    /// Widen outward onto the grid of denominator 10^digits; keeps all
    /// later arithmetic on small rationals without losing certification.
    pub fn outward_round(&self, digits: u32) -> Self {
        let scale = Rat::from_integer(pow10_int(digits));
        Self::new(
            (&self.lo * &scale).floor() / &scale,
            (&self.hi * &scale).ceil() / &scale,
        )
    }

    /// Render as "midpoint ± radius" with the radius rounded up to one digit.
    pub fn plus_minus_string(&self, digits: u32) -> String {
        let mid = self.midpoint();
        let half_width = self.width() / rat(2);
        format!(
            "{} ± {}",
            decimal_string(&mid, digits),
            radius_string(&half_width)
        )
    }
}

/// Smallest power of ten at least `r`, as "1e-k" (or "0" for a point value).
fn radius_string(r: &Rat) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    if r >= &Rat::one() {
        return "1e-0".to_string();
    }
    // Seed k from bit lengths (log10 x = log2 x * 0.30103), then fix up with
    // exact comparisons: want the largest k with r <= 10^-k.
    let bits = r.denom().bits() as i64 - r.numer().bits() as i64;
    let mut k = (bits as f64 * 0.301).floor().max(0.0) as u32;
    let fits = |k: u32| r * Rat::from_integer(pow10_int(k)) <= Rat::one();
    while !fits(k) {
        k = k.saturating_sub(1);
        if k == 0 {
            break;
        }
    }
    while fits(k + 1) {
        k += 1;
    }
    format!("1e-{k}")
}

fn pow10_int(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

/// arctan(1/x) in units of 1/s: alternating sum of floor(s/(x^{2k+1}(2k+1))).
/// Consecutive partial sums bracket the limit; each truncating division costs
/// at most one unit, so widening by the term count keeps the bracket honest.
fn arctan_recip_units(x: i64, s: &BigInt) -> (BigInt, BigInt) {
    let x2 = BigInt::from(x * x);
    let mut power = BigInt::from(x); // x^{2k+1}
    let mut sum = BigInt::zero();
    let mut prev = BigInt::zero();
    let mut k: i64 = 0;
    let mut steps: i64 = 0;
    loop {
        let term = s / (&power * BigInt::from(2 * k + 1));
        prev.clone_from(&sum);
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        steps += 1;
        if k > 0 && term.is_zero() {
            break;
        }
        k += 1;
        power *= &x2;
    }
    let err = BigInt::from(steps + 1);
    let (lo, hi) = if sum <= prev {
        (sum, prev)
    } else {
        (prev, sum)
    };
    (lo - &err, hi + &err)
}

fn pi_cache() -> &'static RwLock<HashMap<u32, RatInterval>> {
    static CACHE: std::sync::OnceLock<RwLock<HashMap<u32, RatInterval>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// pi bracketed by Machin's formula 16 arctan(1/5) - 4 arctan(1/239).
pub fn pi_interval(digits: u32) -> RatInterval {
    if let Some(hit) = pi_cache().read().unwrap().get(&digits) {
        return hit.clone();
    }
    let guard = digits + 6;
    let s = pow10_int(guard);
    let (a_lo, a_hi) = arctan_recip_units(5, &s);
    let (b_lo, b_hi) = arctan_recip_units(239, &s);
    let lo = BigInt::from(16) * a_lo - BigInt::from(4) * b_hi;
    let hi = BigInt::from(16) * a_hi - BigInt::from(4) * b_lo;
    let interval = RatInterval::new(Rat::new(lo, s.clone()), Rat::new(hi, s));
    pi_cache()
        .write()
        .unwrap()
        .entry(digits)
        .or_insert_with(|| interval.clone());
    interval
}

/// sin over an interval inside (0, 1), where sin is increasing, using the
/// alternating Taylor series at each endpoint.
pub fn sin_interval(x: &RatInterval, digits: u32) -> RatInterval {
    assert!(x.lo.is_positive() && x.hi < Rat::one(), "domain is (0, 1)");
    let guard = digits + 6;
    let s = pow10_int(guard);
    // Directed rounding of the endpoints into fixed point keeps sin's
    // monotonicity bounds valid.
    let x_lo_units = (&x.lo * Rat::from_integer(s.clone())).floor().to_integer();
    let x_hi_units = (&x.hi * Rat::from_integer(s.clone())).ceil().to_integer();
    let (lo, _) = sin_units(&x_lo_units, &s);
    let (_, hi) = sin_units(&x_hi_units, &s);
    RatInterval::new(Rat::new(lo, s.clone()), Rat::new(hi, s))
}

/// sin(x_units/s) in units of 1/s for 0 < x < s: alternating Taylor series
/// in fixed point, bracket widened by the truncation-error budget
/// (each floored term propagates at most one unit per step).
fn sin_units(x_units: &BigInt, s: &BigInt) -> (BigInt, BigInt) {
    let x2 = x_units * x_units;
    let s2 = s * s;
    let mut term = x_units.clone();
    let mut sum = BigInt::zero();
    let mut prev = BigInt::zero();
    let mut k: i64 = 0;
    let mut steps: i64 = 0;
    loop {
        if k > 0 {
            term = &term * &x2 / (&s2 * BigInt::from((2 * k) * (2 * k + 1)));
        }
        prev.clone_from(&sum);
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        steps += 1;
        if k > 0 && term.is_zero() {
            break;
        }
        k += 1;
    }
    let err = BigInt::from((steps + 2) * (steps + 2));
    let (lo, hi) = if sum <= prev {
        (sum, prev)
    } else {
        (prev, sum)
    };
    (lo - &err, hi + &err)
}

/// sqrt of a nonnegative rational via scaled integer square roots:
/// the interval endpoints differ by at most 10^-digits.
pub fn sqrt_interval(r: &Rat, digits: u32) -> RatInterval {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    if r.is_zero() {
        return RatInterval::point(Rat::zero());
    }
    let scale = pow10_int(digits);
    let scale2 = &scale * &scale;
    // sqrt(p/q) = sqrt(p q)/q; floor-sqrt of p*q*10^(2k) gives the bracket.
    let p = r.numer().clone();
    let q = r.denom().clone();
    let s = (&p * &q * scale2).sqrt();
    let denom = &q * &scale;
    RatInterval::new(
        Rat::new(s.clone(), denom.clone()),
        Rat::new(s + BigInt::one(), denom),
    )
}
