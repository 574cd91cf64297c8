//! The rational Chow ring of a smooth quadric Q^n, restricted to the subring
//! generated by the hyperplane class H.
//!
//! Classes are polynomials in H truncated above codimension n. The degree map
//! sends H^n to 2 (the degree of the quadric). For odd n = 2k+1 the middle
//! generator P is not stored independently: it is realized as (1/2)H^{k+1},
//! and `middle_relations_check` certifies that this realization satisfies
//! H^{k+1} = 2P and deg(H^k . P) = 1. For even n the subring generated by H
//! misses one middle generator; every computation in this crate stays inside
//! the H-subring, where deg(H^n) = 2 still holds.

use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rat};
use crate::series::mul_trunc;
use num_traits::Zero;
use std::fmt;

/// The ambient quadric Q^n together with its middle-index convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadricContext {
    n: u32,
}

impl QuadricContext {
    /// A quadric of dimension `n`; requires n >= 3 so that the Picard group
    /// is generated by H.
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDimension { n });
        }
        Ok(Self { n })
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// Middle index k with n = 2k+1; only meaningful for odd n.
    pub fn middle_index(&self) -> Option<u32> {
        self.is_odd().then(|| (self.n - 1) / 2)
    }
}

impl fmt::Display for QuadricContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{}", self.n)
    }
}

/// A graded rational cycle class, written in powers of H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    context: QuadricContext,
    /// coeffs[i] is the coefficient of H^i, 0 <= i <= n.
    coeffs: Vec<Rat>,
}

impl ChowClass {
    pub fn zero(context: QuadricContext) -> Self {
        let len = context.n as usize + 1;
        Self {
            context,
            coeffs: vec![Rat::zero(); len],
        }
    }

    pub fn one(context: QuadricContext) -> Self {
        Self::h_power(context, 0)
    }

    /// H^i as a class; powers above codimension n truncate to zero.
    pub fn h_power(context: QuadricContext, i: u32) -> Self {
        let mut class = Self::zero(context);
        if i <= context.n {
            class.coeffs[i as usize] = rat(1);
        }
        class
    }

    /// Build a class from (codimension, coefficient) pairs; entries beyond
    /// codimension n are dropped.
    pub fn from_coeffs<I>(context: QuadricContext, entries: I) -> Self
    where
        I: IntoIterator<Item = (u32, Rat)>,
    {
        let mut class = Self::zero(context);
        for (codim, c) in entries {
            if codim <= context.n {
                class.coeffs[codim as usize] += c;
            }
        }
        class
    }

    pub fn context(&self) -> QuadricContext {
        self.context
    }

    /// Coefficient of H^i (zero above codimension n).
    pub fn coeff(&self, i: u32) -> Rat {
        self.coeffs
            .get(i as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.context != other.context {
            return Err(Error::ContextMismatch {
                left: self.context.n,
                right: other.context.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            context: self.context,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            context: self.context,
            coeffs,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            context: self.context,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Ring product: convolution of H-polynomials truncated at codimension n.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let len = self.context.n as usize + 1;
        Ok(Self {
            context: self.context,
            coeffs: mul_trunc(&self.coeffs, &other.coeffs, len),
        })
    }

    /// Degree map: 2 x (coefficient of H^n). Lower-codimension parts are
    /// discarded.
    pub fn degree(&self) -> Rat {
        self.coeff(self.context.n) * rat(2)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*H")?,
                _ => write!(f, "({c})*H^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Check the middle-codimension relations on an odd quadric, with the middle
/// generator realized as P = (1/2)H^{k+1}: H^{k+1} = 2P as classes, and
/// deg(H^k . P) = 1.
///
/// Even n is signalled as not applicable: there the middle Chow group has
/// rank two and the relations are not stated in this form.
pub fn middle_relations_check(context: QuadricContext) -> Result<bool> {
    let k = context.middle_index().ok_or_else(|| {
        Error::NotApplicable(format!(
            "middle relations are stated for odd dimension only, got {context}"
        ))
    })?;
    let p = ChowClass::h_power(context, k + 1).scale(&ratio(1, 2));
    let two_p = p.scale(&rat(2));
    let relation_i = ChowClass::h_power(context, k + 1) == two_p;
    let relation_ii = ChowClass::h_power(context, k).mul(&p)?.degree() == rat(1);
    Ok(relation_i && relation_ii)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: u32) -> QuadricContext {
        QuadricContext::new(n).unwrap()
    }

    #[test]
    fn rejects_low_dimension() {
        assert_eq!(
            QuadricContext::new(2),
            Err(Error::InvalidDimension { n: 2 })
        );
        assert!(QuadricContext::new(3).is_ok());
    }

    #[test]
    fn monomial_products() {
        let ctx = q(5);
        let h = ChowClass::h_power(ctx, 1);
        let h2 = h.mul(&h).unwrap();
        assert_eq!(h2, ChowClass::h_power(ctx, 2));

        // Truncation boundary: H^2 * H^3 = H^5, degree 2.
        let h3 = ChowClass::h_power(ctx, 3);
        let prod = h2.mul(&h3).unwrap();
        assert_eq!(prod, ChowClass::h_power(ctx, 5));
        assert_eq!(prod.degree(), rat(2));
    }

    #[test]
    fn polynomial_identity() {
        // (1 + H)(1 - H) = 1 - H^2 on Q^5.
        let ctx = q(5);
        let one = ChowClass::one(ctx);
        let h = ChowClass::h_power(ctx, 1);
        let lhs = one.add(&h).unwrap().mul(&one.sub(&h).unwrap()).unwrap();
        let rhs = one.sub(&ChowClass::h_power(ctx, 2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_map() {
        assert_eq!(ChowClass::h_power(q(5), 5).degree(), rat(2));
        assert_eq!(ChowClass::zero(q(5)).degree(), rat(0));
        assert_eq!(
            ChowClass::h_power(q(6), 6).scale(&ratio(3, 2)).degree(),
            rat(3)
        );
    }

    #[test]
    fn degree_of_top_power_is_two_for_all_dimensions() {
        for n in 3..=12 {
            assert_eq!(ChowClass::h_power(q(n), n).degree(), rat(2), "n = {n}");
        }
    }

    #[test]
    fn middle_relations() {
        assert_eq!(middle_relations_check(q(5)), Ok(true));
        assert_eq!(middle_relations_check(q(7)), Ok(true));
        for n in [3, 9, 11] {
            assert_eq!(middle_relations_check(q(n)), Ok(true), "n = {n}");
        }
        assert!(matches!(
            middle_relations_check(q(6)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = ChowClass::h_power(q(5), 1);
        let b = ChowClass::h_power(q(6), 1);
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch { left: 5, right: 6 }));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn truncation_consistency() {
        let ctx = q(5);
        for i in 0..=5u32 {
            for j in 0..=5u32 {
                let prod = ChowClass::h_power(ctx, i)
                    .mul(&ChowClass::h_power(ctx, j))
                    .unwrap();
                if i + j > 5 {
                    assert!(prod.is_zero(), "H^{i} * H^{j} should truncate");
                } else {
                    assert_eq!(prod, ChowClass::h_power(ctx, i + j));
                }
            }
        }
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..=40, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
    }

    fn arb_class(n: u32) -> impl Strategy<Value = ChowClass> {
        proptest::collection::vec(arb_rat(), (n + 1) as usize).prop_map(move |coeffs| {
            ChowClass::from_coeffs(
                QuadricContext::new(n).unwrap(),
                coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_commutative(a in arb_class(6), b in arb_class(6)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn mul_associative(a in arb_class(5), b in arb_class(5), c in arb_class(5)) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn degree_is_linear(a in arb_class(7), b in arb_class(7)) {
            let sum = a.add(&b).unwrap();
            prop_assert_eq!(sum.degree(), a.degree() + b.degree());
        }
    }
}
