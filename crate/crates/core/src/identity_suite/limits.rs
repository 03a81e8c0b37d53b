//! The four vanishing sums with an indeterminate exponent parameter,
//! evaluated at integer values of `X = 2x`.
//!
//! At integer `X` single terms can take the form 0/0. Every term is a
//! monomial in `q^{1/2}` (depending on `X`) times a product of generalized
//! q-integers `[αX + β]^{±1}` with `α = ±1` over a constant factorial
//! denominator. The value of such a term is its limit as `X` approaches the
//! integer: each vanishing factor `[α(X0 + ε) + β] = [αε]` contributes the
//! sign `α` and one order of `ε`. A term with positive total order tends to
//! 0; a negative order is a genuine pole.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qseries::{q_factorial, q_int, QPoly, QRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("term j = {j} has a pole at X = {x2} (i = {i})")]
    Pole { i: i64, x2: i64, j: i64 },
    #[error("summation index i = {0} must be nonnegative")]
    NegativeIndex(i64),
}

/// Which of the four sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingSum {
    /// Ratio weight `[X]/[X-j]`, binomials in `X`.
    EvenRatio,
    /// Ratio weight `[X+1]/[X+1-j]`, binomials in `X+1`.
    OddRatio,
    /// Inverse weight `1/[i+j-X]`, binomials in `X`.
    EvenInverse,
    /// Inverse weight `1/[i+j-X-1]`, binomials in `X+1`.
    OddInverse,
}

impl VanishingSum {
    pub const ALL: [VanishingSum; 4] = [
        VanishingSum::EvenRatio,
        VanishingSum::OddRatio,
        VanishingSum::EvenInverse,
        VanishingSum::OddInverse,
    ];

    /// Linear coefficient `c` of the exponent `(x-j)(x+c-3j)/2`.
    pub fn exponent_shift(self) -> i64 {
        match self {
            VanishingSum::EvenRatio => 5,
            VanishingSum::OddRatio => 7,
            VanishingSum::EvenInverse => 3,
            VanishingSum::OddInverse => 5,
        }
    }

    fn odd(self) -> bool {
        matches!(self, VanishingSum::OddRatio | VanishingSum::OddInverse)
    }
}

/// `sign · q^{exp2/2} · Π [α X + β]^{power} / den`.
#[derive(Debug, Clone)]
struct Term {
    exp2_const: i64,
    /// Coefficient of `X` in the doubled exponent.
    exp2_slope: i64,
    factors: Vec<(i64, i64, i64)>,
    den: QPoly,
}

fn term(sum: VanishingSum, i: i64, j: i64) -> Term {
    let y = sum.odd() as i64;
    let r = i - j + 1;
    let mut factors = Vec::new();
    // [i+j-X-y, r] = Π_{l<r} [-X + (i+j-y-l)] / [r]!
    for l in 0..r {
        factors.push((-1, i + j - y - l, 1));
    }
    // [X+y-j, j] = Π_{l<j} [X + (y-j-l)] / [j]!
    for l in 0..j {
        factors.push((1, y - j - l, 1));
    }
    match sum {
        VanishingSum::EvenRatio | VanishingSum::OddRatio => {
            factors.push((1, y, 1));
            factors.push((1, y - j, -1));
        }
        VanishingSum::EvenInverse | VanishingSum::OddInverse => factors.push((-1, i + j - y, -1)),
    }
    let c = sum.exponent_shift();
    Term {
        exp2_const: (i - j) * (i - j - 1) + 3 * j * j - c * j,
        exp2_slope: -2 * j,
        factors,
        den: q_factorial(r as u32) * q_factorial(j as u32),
    }
}

fn limit(t: &Term, x2: i64) -> Option<QRat> {
    let mut order = 0;
    let mut sign = 1;
    let mut num = QPoly::monomial2(1, t.exp2_const + t.exp2_slope * x2);
    let mut den = t.den.clone();
    for &(alpha, beta, power) in &t.factors {
        let v = alpha * x2 + beta;
        if v == 0 {
            order += power;
            sign *= alpha;
        } else if power > 0 {
            num *= q_int(v);
        } else {
            den *= q_int(v);
        }
    }
    match order {
        o if o > 0 => Some(QRat::zero()),
        0 => Some(QRat::new(num.scale(sign), den).expect("nonzero q-integers")),
        _ => None,
    }
}

/// Term-by-term value of the sum `Σ_{j=0}^{i+1}` at `X = x2`, with the
/// common prefactor `q^{(x^2 + c x)/2}` removed.
pub fn vanishing_sum_terms(sum: VanishingSum, i: i64, x2: i64) -> Result<Vec<QRat>, LimitError> {
    if i < 0 {
        return Err(LimitError::NegativeIndex(i));
    }
    (0..=i + 1)
        .map(|j| limit(&term(sum, i, j), x2).ok_or(LimitError::Pole { i, x2, j }))
        .collect()
}

pub fn vanishing_sum(sum: VanishingSum, i: i64, x2: i64) -> Result<QRat, LimitError> {
    Ok(vanishing_sum_terms(sum, i, x2)?
        .iter()
        .fold(QRat::zero(), |acc, t| &acc + t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_point_vanishes() {
        assert!(vanishing_sum(VanishingSum::EvenRatio, 3, 9).unwrap().is_zero());
    }

    #[test]
    fn all_four_sums_vanish_on_a_grid() {
        for sum in VanishingSum::ALL {
            for i in 0..=5 {
                for x2 in 2..=11 {
                    let v = vanishing_sum(sum, i, x2).unwrap();
                    assert!(v.is_zero(), "{sum:?} i={i} X={x2}: {v}");
                }
            }
        }
    }

    #[test]
    fn vanishing_is_a_genuine_cancellation() {
        let terms = vanishing_sum_terms(VanishingSum::EvenRatio, 3, 9).unwrap();
        assert_eq!(terms.len(), 5);
        assert!(terms.iter().any(|t| !t.is_zero()));
    }
}
