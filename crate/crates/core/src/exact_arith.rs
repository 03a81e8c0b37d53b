//! Arbitrary-precision integers and rationals, plus the ring abstractions
//! shared by the determinant engines.
//!
//! `ExactInt` and `ExactRat` are thin aliases over `num-bigint` and
//! `num-rational`; both are always in canonical form (rationals are reduced
//! with a positive denominator), so structural equality is mathematical
//! equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Reduced fraction of two [`ExactInt`] with positive denominator.
pub type ExactRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Shorthand for building an [`ExactInt`].
pub fn int(n: i64) -> ExactInt {
    ExactInt::from(n)
}

/// Shorthand for building the rational `a/b`; panics when `b == 0`.
pub fn rat(a: i64, b: i64) -> ExactRat {
    ExactRat::new(int(a), int(b))
}

/// Embeds an integer as a rational.
pub fn rat_from_int(n: &ExactInt) -> ExactRat {
    ExactRat::from_integer(n.clone())
}

/// Generalized binomial coefficient `a(a-1)...(a-k+1)/k!`.
///
/// Returns 0 for `k < 0`; a negative upper index is allowed and follows the
/// falling-factorial product, so `int_binomial(-3, 1) == -3`.
pub fn int_binomial(a: i64, k: i64) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    if a >= 0 && k > a {
        return ExactInt::zero();
    }
    // Use the smaller of k and a-k when both apply.
    let k = if a >= 0 && a - k < k { a - k } else { k };
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= int(a - i);
        acc /= int(i + 1);
    }
    acc
}

/// `n!` for `n >= 0`.
pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * ExactInt::from(i))
}

/// Exact rational operation dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies a binary rational operation; division by zero is reported as an
/// error instead of panicking.
pub fn rat_arith(op: RatOp, x: &ExactRat, y: &ExactRat) -> Result<ExactRat, ArithError> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => {
            if y.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            x / y
        }
    })
}

/// `(-1)^k` as a machine integer.
pub fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub mod ring;

/// Serde adapters: integers as decimal strings, rationals as
/// `{"num": str, "den": str}`.
pub mod json {
    use super::{ExactInt, ExactRat};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct RatRepr {
        num: String,
        den: String,
    }

    pub fn int_to_string(n: &ExactInt) -> String {
        n.to_str_radix(10)
    }

    pub fn int_from_str(s: &str) -> Option<ExactInt> {
        ExactInt::parse_bytes(s.as_bytes(), 10)
    }

    pub fn serialize_int<S: Serializer>(n: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&int_to_string(n))
    }

    pub fn deserialize_int<'de, D: Deserializer<'de>>(d: D) -> Result<ExactInt, D::Error> {
        let s = String::deserialize(d)?;
        int_from_str(&s).ok_or_else(|| D::Error::custom(format!("invalid integer {s:?}")))
    }

    pub fn serialize_rat<S: Serializer>(r: &ExactRat, s: S) -> Result<S::Ok, S::Error> {
        RatRepr {
            num: int_to_string(r.numer()),
            den: int_to_string(r.denom()),
        }
        .serialize(s)
    }

    pub fn deserialize_rat<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRat, D::Error> {
        let repr = RatRepr::deserialize(d)?;
        let num = int_from_str(&repr.num).ok_or_else(|| D::Error::custom("invalid numerator"))?;
        let den = int_from_str(&repr.den).ok_or_else(|| D::Error::custom("invalid denominator"))?;
        if den == ExactInt::from(0) {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(ExactRat::new(num, den))
    }

    /// `#[serde(with = "json::int")]` adapter.
    pub mod int {
        pub use super::deserialize_int as deserialize;
        pub use super::serialize_int as serialize;
    }

    /// `#[serde(with = "json::rat")]` adapter.
    pub mod rat {
        pub use super::deserialize_rat as deserialize;
        pub use super::serialize_rat as serialize;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(int_binomial(4, 2), int(6));
        assert_eq!(int_binomial(5, -1), int(0));
        assert_eq!(int_binomial(-3, 1), int(-3));
        assert_eq!(int_binomial(3, 5), int(0));
        assert_eq!(int_binomial(-1, 4), int(1));
        assert_eq!(int_binomial(-2, 3), int(-4));
        assert_eq!(int_binomial(0, 0), int(1));
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rat_arith(RatOp::Add, &rat(1, 2), &rat(1, 3)).unwrap(), rat(5, 6));
        assert_eq!(rat_arith(RatOp::Div, &rat(1, 3), &rat(1, 3)).unwrap(), rat(1, 1));
        let hilbert2 = rat(1, 1) * rat(1, 3) - rat(1, 2) * rat(1, 2);
        assert_eq!(hilbert2, rat(1, 12));
        assert_eq!(
            rat_arith(RatOp::Div, &rat(1, 2), &rat(0, 1)),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn rational_canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
    }

    #[test]
    fn json_round_trip() {
        #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
        struct W {
            #[serde(with = "json::int")]
            i: ExactInt,
            #[serde(with = "json::rat")]
            r: ExactRat,
        }
        let w = W {
            i: factorial(30),
            r: rat(-5, 12),
        };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(
            s,
            "{\"i\":\"265252859812191058636308480000000\",\"r\":{\"num\":\"-5\",\"den\":\"12\"}}"
        );
        let back: W = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn integer_exact_div() {
        assert_eq!(ring::Ring::exact_div(&int(12), &int(4)), Some(int(3)));
        assert_eq!(ring::Ring::exact_div(&int(12), &int(5)), None);
        assert_eq!(ring::Ring::exact_div(&int(12), &int(0)), None);
    }
}
