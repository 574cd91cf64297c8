//! Exact arithmetic in real quadratic extensions Q(sqrt(d)).
//!
//! Numbers are stored as u + v*sqrt(d) with rational u, v and a squarefree
//! positive integer d. Comparisons against rationals are decided by moving
//! the radical to one side and squaring, tracking signs; no floating point
//! enters any decision.

use crate::rational::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// u + v*sqrt(d) with d a fixed positive non-square integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    u: Rat,
    v: Rat,
    d: u32,
}

impl QuadExt {
    pub fn new(u: Rat, v: Rat, d: u32) -> Self {
        assert!(d > 0, "radicand must be positive");
        Self { u, v, d }
    }

    pub fn from_rational(u: Rat, d: u32) -> Self {
        Self::new(u, Rat::zero(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.u
    }

    pub fn radical_part(&self) -> &Rat {
        &self.v
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add_rational(&self, r: &Rat) -> Self {
        Self::new(&self.u + r, self.v.clone(), self.d)
    }

    pub fn mul_rational(&self, r: &Rat) -> Self {
        Self::new(&self.u * r, &self.v * r, self.d)
    }

    /// Multiplicative inverse: 1/(u + v sqrt d) = (u - v sqrt d)/(u^2 - v^2 d).
    pub fn inverse(&self) -> Self {
        let norm = &self.u * &self.u - &self.v * &self.v * rat(self.d as i64);
        assert!(!norm.is_zero(), "zero norm");
        Self::new(&self.u / &norm, -&self.v / &norm, self.d)
    }

    /// Sign of u + v*sqrt(d), decided exactly.
    pub fn sign(&self) -> Ordering {
        let (u, v) = (&self.u, &self.v);
        if v.is_zero() {
            return u.cmp(&Rat::zero());
        }
        if u.is_zero() {
            return v.cmp(&Rat::zero());
        }
        match (u.is_positive(), v.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // Mixed signs: compare u^2 against v^2 d; the dominant side wins.
            (true, false) | (false, true) => {
                let lhs = u * u;
                let rhs = v * v * rat(self.d as i64);
                let squares = lhs.cmp(&rhs);
                if u.is_positive() {
                    // u > 0, v < 0: positive iff u^2 > v^2 d.
                    squares
                } else {
                    // u < 0, v > 0: positive iff v^2 d > u^2.
                    squares.reverse()
                }
            }
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rat) -> Ordering {
        Self::new(&self.u - r, self.v.clone(), self.d).sign()
    }

    /// Largest integer m with m <= u + v*sqrt(d), computed with exact
    /// comparisons only. Integer bounds on sqrt(d) bracket the value; the
    /// exact comparison then pins the floor inside the bracket.
    pub fn floor(&self) -> BigInt {
        let s_lo = rat(num_integer::Roots::sqrt(&(self.d as i64)));
        let s_hi = &s_lo + rat(1);
        let (b_lo, b_hi) = if self.v >= Rat::zero() {
            (&self.u + &self.v * &s_lo, &self.u + &self.v * &s_hi)
        } else {
            (&self.u + &self.v * &s_hi, &self.u + &self.v * &s_lo)
        };
        let mut m = b_lo.floor().to_integer();
        let top = b_hi.floor().to_integer();
        while m < top {
            let next: BigInt = &m + 1;
            if self.cmp_rational(&Rat::from_integer(next.clone())) == Ordering::Less {
                break;
            }
            m = next;
        }
        m
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "({})*sqrt({})", self.v, self.d)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.u, self.v, self.d)
        }
    }
}
