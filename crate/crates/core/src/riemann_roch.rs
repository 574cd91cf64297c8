//! Euler characteristics on Q^n via Hirzebruch-Riemann-Roch.
//!
//! The Todd class of the tangent bundle comes from the Euler sequence of the
//! ambient projective space: td(T_Q) = Q(H)^{n+2} / Q(2H) with
//! Q(x) = x/(1 - e^{-x}), computed by exact truncated series division. Two
//! closed forms for chi on Q^5 are carried side by side: the `Printed` one
//! with quadratic term (55/24)(c1^2 - c2), and the `Hrr` one with
//! (55/24)(c1^2 - 2c2), which is the polynomial the Todd-class pairing
//! actually produces. Both are exposed so the replay can report the
//! discrepancy instead of silently adopting either.

use crate::bundle::ChernData;
use crate::chow::{ChowClass, QuadricContext};
use crate::error::{Error, Result};
use crate::rational::{binomial_poly, rat, ratio, Rat};
use crate::series::{div_trunc, inverse_trunc, pow_trunc, scale_var};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use std::sync::RwLock;

/// Todd class of the tangent bundle of Q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToddClass {
    context: QuadricContext,
    value: ChowClass,
}

impl ToddClass {
    pub fn context(&self) -> QuadricContext {
        self.context
    }

    pub fn value(&self) -> &ChowClass {
        &self.value
    }
}

fn todd_series_cache() -> &'static RwLock<HashMap<u32, Vec<Rat>>> {
    static CACHE: std::sync::OnceLock<RwLock<HashMap<u32, Vec<Rat>>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of Q(x) = x/(1 - e^{-x}) up to degree `order`, as the inverse
/// of (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k/(k+1)!.
fn todd_generator(order: usize) -> Vec<Rat> {
    let mut denom = Vec::with_capacity(order + 1);
    let mut fact = BigInt::one(); // (k+1)! built incrementally
    for k in 0..=order as u32 {
        fact *= BigInt::from(k + 1);
        let mut term = Rat::new(BigInt::one(), fact.clone());
        if k % 2 == 1 {
            term = -term;
        }
        denom.push(term);
    }
    inverse_trunc(&denom, order + 1)
}

fn todd_tangent_coeffs(n: u32) -> Vec<Rat> {
    if let Some(hit) = todd_series_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let len = n as usize + 1;
    let q = todd_generator(len - 1);
    let numerator = pow_trunc(&q, n + 2, len);
    let q_2h = scale_var(&q, &rat(2));
    let coeffs = div_trunc(&numerator, &q_2h, len);
    todd_series_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| coeffs.clone());
    coeffs
}

/// Todd class td(T_{Q^n}) = Q(H)^{n+2} / Q(2H) truncated at codimension n.
pub fn todd_tangent(context: QuadricContext) -> ToddClass {
    let coeffs = todd_tangent_coeffs(context.dimension());
    let value = ChowClass::from_coeffs(
        context,
        coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
    );
    ToddClass { context, value }
}

/// Euler characteristic by Hirzebruch-Riemann-Roch:
/// deg(ch(d) . td(T_Q)), an exact rational. Rational Chern data is allowed;
/// the result is then a formal value.
pub fn chi_hrr(context: QuadricContext, d: &ChernData) -> Rat {
    let ch = d.chern_character(context);
    let td = todd_tangent(context);
    ch.mul(td.value()).expect("same context").degree()
}

/// Which closed form of chi on Q^5 to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiFormula {
    /// The closed form as printed: quadratic term (55/24)(c1^2 - c2).
    Printed,
    /// The Todd-class pairing: quadratic term (55/24)(c1^2 - 2c2).
    Hrr,
}

/// chi of a rank-2 datum on Q^5 in closed form.
pub fn chi_q5(d: &ChernData, formula: ChiFormula) -> Rat {
    let c1 = d.c1().clone();
    let c2 = d.c2().clone();
    let c1_2 = &c1 * &c1;
    let c1_3 = &c1_2 * &c1;
    let c1_4 = &c1_2 * &c1_2;
    let c1_5 = &c1_4 * &c1;
    let c2_2 = &c2 * &c2;

    let quadratic = match formula {
        ChiFormula::Printed => &c1_2 - &c2,
        ChiFormula::Hrr => &c1_2 - rat(2) * &c2,
    };

    rat(2)
        + ratio(894, 360) * &c1
        + ratio(55, 24) * quadratic
        + (&c1_3 - rat(3) * &c1 * &c2)
        + ratio(5, 24) * (&c1_4 - rat(4) * &c1_2 * &c2 + rat(2) * &c2_2)
        + ratio(1, 60) * (&c1_5 - rat(5) * &c1_3 * &c2 + rat(5) * &c1 * &c2_2)
}

/// chi(O_{Q^n}(a)) from the structure sequence of the quadric in projective
/// space: C(n+1+a, n+1) - C(n-1+a, n+1), with the binomials taken in the
/// polynomial sense so the formula is the Hilbert polynomial, valid for every
/// integer a.
pub fn chi_line_oracle(context: QuadricContext, a: i64) -> BigInt {
    let n = context.dimension();
    binomial_poly(n as i64 + 1 + a, n + 1) - binomial_poly(n as i64 - 1 + a, n + 1)
}

/// h^0(O_{Q^n}(a)) for a >= 0, where it equals chi. Negative twists are not
/// certified by this oracle and are rejected.
pub fn h0_line_oracle(context: QuadricContext, a: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NotApplicable(format!(
            "h0 oracle only certifies chi for a >= 0, got a = {a}"
        )));
    }
    Ok(chi_line_oracle(context, a))
}
