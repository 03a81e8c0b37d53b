//! Ring abstractions the determinant engines are generic over, with the
//! implementations for the integer and rational scalars.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactInt, ExactRat};

/// Identifies which scalar ring a matrix or value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum RingTag {
    ExactInt,
    ExactRat,
    QPoly,
    QRat,
}

/// Commutative ring with exact (partial) division, the interface the
/// determinant engines are written against.
///
/// `exact_div(a, b)` returns `Some(c)` exactly when `b != 0` and `a = b c`.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    const TAG: RingTag;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        Self::one().exact_div(self)
    }
}

/// A field presented as fractions over an integral domain, so that
/// denominators can be cleared before fraction-free elimination.
pub trait Fraction: Field {
    type Base: Ring;
    fn numer(&self) -> Self::Base;
    fn denom(&self) -> Self::Base;
    fn from_base(b: &Self::Base) -> Self;
    /// Builds `n/d` in canonical form; `d` must be nonzero.
    fn from_parts(n: &Self::Base, d: &Self::Base) -> Self;
    /// A common multiple of `a` and `b`, ideally the least one.
    fn base_lcm(a: &Self::Base, b: &Self::Base) -> Self::Base;
}

/// Rings with a designated fraction field.
pub trait HasFractionField: Ring {
    type Frac: Fraction<Base = Self>;
    fn to_frac(&self) -> Self::Frac {
        Self::Frac::from_base(self)
    }
}

impl Ring for ExactInt {
    const TAG: RingTag = RingTag::ExactInt;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        ExactInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for ExactRat {
    const TAG: RingTag = RingTag::ExactRat;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        ExactRat::from_integer(n.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Field for ExactRat {}

impl Fraction for ExactRat {
    type Base = ExactInt;
    fn numer(&self) -> ExactInt {
        self.numer().clone()
    }
    fn denom(&self) -> ExactInt {
        self.denom().clone()
    }
    fn from_base(b: &ExactInt) -> Self {
        ExactRat::from_integer(b.clone())
    }
    fn from_parts(n: &ExactInt, d: &ExactInt) -> Self {
        ExactRat::new(n.clone(), d.clone())
    }
    fn base_lcm(a: &ExactInt, b: &ExactInt) -> ExactInt {
        a.lcm(b).abs()
    }
}

impl HasFractionField for ExactInt {
    type Frac = ExactRat;
}

