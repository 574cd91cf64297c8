//! Rank-2 Chern-data arithmetic: twists, Segre classes, Chern characters.
//!
//! Chern data is a pair (c1, c2) of exact rationals recording c1(E) = c1*H
//! and c2(E) = c2*H^2. Honest bundles have integer entries; rational entries
//! arise as formal half-integer twists E(t) with 2t odd and are first-class
//! values here. Operations that need an honest bundle check integrality at
//! their own contract boundary.

use crate::chow::{ChowClass, QuadricContext};
use crate::error::{Error, Result};
use crate::rational::{factorial, rat, Rat};
use crate::series::{inverse_trunc, mul_trunc};
use num_traits::One;
use std::fmt;

/// Chern data (c1, c2) of a rank-2 bundle, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernData {
    c1: Rat,
    c2: Rat,
}

impl ChernData {
    pub const RANK: u32 = 2;

    pub fn new(c1: Rat, c2: Rat) -> Self {
        Self { c1, c2 }
    }

    pub fn from_integers(c1: i64, c2: i64) -> Self {
        Self::new(rat(c1), rat(c2))
    }

    pub fn c1(&self) -> &Rat {
        &self.c1
    }

    pub fn c2(&self) -> &Rat {
        &self.c2
    }

    pub fn is_integral(&self) -> bool {
        self.c1.is_integer() && self.c2.is_integer()
    }

    /// Errors unless both Chern numbers are integers.
    pub fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegralChern {
                c1: self.c1.to_string(),
                c2: self.c2.to_string(),
            })
        }
    }

    /// c1^2 - 4 c2, invariant under every twist.
    pub fn discriminant(&self) -> Rat {
        &self.c1 * &self.c1 - rat(4) * &self.c2
    }

    /// Chern data of E(t) = E tensor O(tH): (c1 + 2t, c2 + t c1 + t^2).
    pub fn twist(&self, t: &Rat) -> Self {
        Self {
            c1: &self.c1 + rat(2) * t,
            c2: &self.c2 + t * &self.c1 + t * t,
        }
    }

    /// Segre numbers s_0..s_{i_max} by the rank-2 recurrence
    /// s_i = c1 s_{i-1} - c2 s_{i-2}, s_0 = 1, s_1 = c1.
    pub fn segre_recurrence(&self, i_max: u32) -> Vec<Rat> {
        let mut s = Vec::with_capacity(i_max as usize + 1);
        s.push(Rat::one());
        if i_max >= 1 {
            s.push(self.c1.clone());
        }
        for i in 2..=i_max as usize {
            let next = &self.c1 * &s[i - 1] - &self.c2 * &s[i - 2];
            s.push(next);
        }
        s
    }

    /// Segre numbers by truncated inversion of the total Chern polynomial:
    /// the coefficients of 1/(1 - c1 t + c2 t^2).
    ///
    /// Independent route from `segre_recurrence`; the two must agree term by
    /// term.
    pub fn segre_inversion(&self, i_max: u32) -> Vec<Rat> {
        let c_minus_t = vec![Rat::one(), -self.c1.clone(), self.c2.clone()];
        inverse_trunc(&c_minus_t, i_max as usize + 1)
    }

    /// Coefficients of the Chern character series 2 + sum_{i>=1} p_i/i! x^i
    /// truncated after degree `order`, with Newton power sums p_1 = c1,
    /// p_2 = c1^2 - 2c2, p_i = c1 p_{i-1} - c2 p_{i-2}.
    pub fn chern_character_coeffs(&self, order: u32) -> Vec<Rat> {
        let mut out = vec![rat(2)];
        let mut p_prev = self.c1.clone(); // p_1
        let mut p_curr = &self.c1 * &self.c1 - rat(2) * &self.c2; // p_2
        if order >= 1 {
            out.push(p_prev.clone());
        }
        for i in 2..=order {
            out.push(&p_curr / Rat::from_integer(factorial(i)));
            let p_next = &self.c1 * &p_curr - &self.c2 * &p_prev;
            p_prev = p_curr;
            p_curr = p_next;
        }
        out
    }

    /// Chern character as a cycle class, truncated at the dimension of the
    /// quadric.
    pub fn chern_character(&self, context: QuadricContext) -> ChowClass {
        let coeffs = self.chern_character_coeffs(context.dimension());
        ChowClass::from_coeffs(
            context,
            coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
        )
    }
}

impl fmt::Display for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(c1 = {}, c2 = {})", self.c1, self.c2)
    }
}

/// The degree-normalized top Segre number on Q^6 in closed form:
/// 2c1^6 - 10c1^4 c2 + 12c1^2 c2^2 - 2c2^3.
///
/// The leading factor 2 is deg(H^6) folded into the polynomial; the
/// factor-free Segre number is `segre_recurrence(d, 6)[6]`, and this closed
/// form equals exactly twice it.
pub fn s6_closed_form_q6(d: &ChernData) -> Rat {
    let c1 = d.c1();
    let c2 = d.c2();
    let c1_2 = c1 * c1;
    let c1_4 = &c1_2 * &c1_2;
    let c1_6 = &c1_4 * &c1_2;
    let c2_2 = c2 * c2;
    let c2_3 = &c2_2 * c2;
    rat(2) * c1_6 - rat(10) * &c1_4 * c2 + rat(12) * &c1_2 * &c2_2 - rat(2) * c2_3
}

/// Total Chern polynomial coefficients [1, c1, c2] (test and oracle helper).
pub fn total_chern(d: &ChernData) -> Vec<Rat> {
    vec![Rat::one(), d.c1().clone(), d.c2().clone()]
}

/// Convolution helper re-exported for oracle code that expands products of
/// line-bundle series.
pub fn series_product(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    mul_trunc(a, b, len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: u32) -> QuadricContext {
        QuadricContext::new(n).unwrap()
    }

    #[test]
    fn twist_examples() {
        // t = 3 lands on the Q^6 evaluation point (6, 12).
        let d = ChernData::from_integers(0, 3);
        assert_eq!(d.twist(&rat(3)), ChernData::from_integers(6, 12));

        // Identity twist.
        let d = ChernData::new(ratio(-5, 3), ratio(7, 2));
        assert_eq!(d.twist(&rat(0)), d);

        // Half-integer twist: (-1, 3) by 7/2 gives (6, 47/4).
        let d = ChernData::from_integers(-1, 3);
        assert_eq!(d.twist(&ratio(7, 2)), ChernData::new(rat(6), ratio(47, 4)));
    }

    #[test]
    fn segre_low_terms() {
        let d = ChernData::from_integers(5, 7);
        let s = d.segre_recurrence(5);
        assert_eq!(s[0], rat(1));
        assert_eq!(s[1], rat(5));
        // s_2 = c1^2 - c2
        assert_eq!(s[2], rat(18));
        // s_5 = c1(c1^2 - 3c2)(c1^2 - c2) = 5 * 4 * 18
        assert_eq!(s[5], rat(360));

        let trivial = ChernData::from_integers(0, 0);
        assert!(trivial.segre_recurrence(8)[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn segre_inversion_examples() {
        let d = ChernData::from_integers(1, 0);
        assert_eq!(d.segre_inversion(3), vec![rat(1); 4]);

        let d = ChernData::from_integers(6, 12);
        assert_eq!(d.segre_inversion(6)[6], rat(-1728));

        let d = ChernData::from_integers(0, 1);
        assert_eq!(
            d.segre_inversion(4),
            vec![rat(1), rat(0), rat(-1), rat(0), rat(1)]
        );
    }

    #[test]
    fn s6_closed_form_examples() {
        assert_eq!(
            s6_closed_form_q6(&ChernData::from_integers(6, 12)),
            rat(-3456)
        );
        assert_eq!(
            s6_closed_form_q6(&ChernData::new(rat(6), ratio(47, 4))),
            ratio(-82223, 32)
        );
        assert_eq!(s6_closed_form_q6(&ChernData::from_integers(0, 0)), rat(0));
    }

    #[test]
    fn chern_character_examples() {
        let ctx = q(5);
        let trivial = ChernData::from_integers(0, 0).chern_character(ctx);
        assert_eq!(trivial, ChowClass::from_coeffs(ctx, [(0, rat(2))]));

        // O(1) + O truncated after degree 2: 2 + H + H^2/2.
        let coeffs = ChernData::from_integers(1, 0).chern_character_coeffs(2);
        assert_eq!(coeffs, vec![rat(2), rat(1), ratio(1, 2)]);

        // (-1, 1): power sums -1, -1, 2 give 2 - H - H^2/2 + H^3/3.
        let coeffs = ChernData::from_integers(-1, 1).chern_character_coeffs(3);
        assert_eq!(coeffs, vec![rat(2), rat(-1), ratio(-1, 2), ratio(1, 3)]);
        let class = ChernData::from_integers(-1, 1).chern_character(q(3));
        assert_eq!(class.coeff(3), ratio(1, 3));
    }

    /// Line-bundle character sum: ch(O(a)) + ch(O(b)) truncated at n.
    fn split_character_oracle(a: i64, b: i64, ctx: QuadricContext) -> ChowClass {
        let n = ctx.dimension();
        let mut entries = Vec::new();
        for root in [a, b] {
            for i in 0..=n {
                let term = Rat::from_integer(num_bigint::BigInt::from(root).pow(i))
                    / Rat::from_integer(factorial(i));
                entries.push((i, term));
            }
        }
        ChowClass::from_coeffs(ctx, entries)
    }

    #[test]
    fn chern_character_additive_on_split_data() {
        let ctx = q(5);
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                let d = ChernData::from_integers(a + b, a * b);
                assert_eq!(
                    d.chern_character(ctx),
                    split_character_oracle(a, b, ctx),
                    "a = {a}, b = {b}"
                );
            }
        }
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-30i64..=30, 1i64..=8).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn recurrence_matches_inversion(c1 in -20i64..=20, c2 in -20i64..=20) {
            let d = ChernData::from_integers(c1, c2);
            prop_assert_eq!(d.segre_recurrence(10), d.segre_inversion(10));
        }

        #[test]
        fn twists_compose(c1 in arb_rat(), c2 in arb_rat(), s in arb_rat(), t in arb_rat()) {
            let d = ChernData::new(c1, c2);
            prop_assert_eq!(d.twist(&s).twist(&t), d.twist(&(s + t)));
        }

        #[test]
        fn discriminant_is_twist_invariant(c1 in arb_rat(), c2 in arb_rat(), t in arb_rat()) {
            let d = ChernData::new(c1, c2);
            prop_assert_eq!(d.twist(&t).discriminant(), d.discriminant());
        }

        #[test]
        fn closed_s6_is_twice_recurrence(c1 in -15i64..=15, c2 in -15i64..=15) {
            let d = ChernData::from_integers(c1, c2);
            let s6 = d.segre_recurrence(6)[6].clone();
            prop_assert_eq!(s6_closed_form_q6(&d), rat(2) * s6);
        }
    }

    #[test]
    fn printed_segre_identities_hold() {
        // s_1..s_5 in the closed forms used on Q^6, checked on a grid wide
        // enough to pin the polynomials.
        for c1 in -7i64..=7 {
            for c2 in -7i64..=7 {
                let d = ChernData::from_integers(c1, c2);
                let s = d.segre_recurrence(5);
                let (c1, c2) = (rat(c1), rat(c2));
                assert_eq!(s[1], c1.clone());
                assert_eq!(s[2], &c1 * &c1 - &c2);
                assert_eq!(s[3], &c1 * (&c1 * &c1 - rat(2) * &c2));
                assert_eq!(
                    s[4],
                    (&c1 * &c1) * (&c1 * &c1) - rat(3) * &c1 * &c1 * &c2 + &c2 * &c2
                );
                assert_eq!(s[5], &c1 * (&c1 * &c1 - rat(3) * &c2) * (&c1 * &c1 - &c2));
            }
        }
    }
}
