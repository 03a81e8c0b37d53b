//! Exact Laurent polynomials and rational functions in `q^{1/2}`.
//!
//! Exponents are stored doubled: the key `e2` stands for `q^{e2/2}`. Values
//! whose keys are all even are called *integral* and are ordinary Laurent
//! polynomials in `q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact_arith::ring::{self as ea, Field, Fraction, HasFractionField, RingTag};
use crate::exact_arith::{json, ExactInt, ExactRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("half-integer powers of q cannot be specialized at q = -1")]
    NonIntegral,
    #[error("only q = 1 and q = -1 are supported specializations, got {0}")]
    UnsupportedValue(i64),
    #[error("rational function has a pole at q = {0}")]
    Pole(i64),
    #[error("rational function does not reduce to a polynomial")]
    NotPolynomial,
}

/// Laurent polynomial in `q^{1/2}` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        QPoly::monomial2(c, 0)
    }

    /// `c · q^{e2/2}`.
    pub fn monomial2<C: Into<BigInt>>(c: C, e2: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e2, c);
        }
        QPoly { terms }
    }

    /// `c · q^e`.
    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        QPoly::monomial2(c, 2 * e)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QPoly::monomial2(1, 2 * e)
    }

    /// Builds `Σ coeffs[i] q^i`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64, BigInt::from(c))))
    }

    /// Builds a polynomial from `(e2, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            let slot = terms.entry(e).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&e);
            }
        }
        QPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^{e2/2}`.
    pub fn coeff2(&self, e2: i64) -> BigInt {
        self.terms.get(&e2).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeff2(2 * e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(2) == 0)
    }

    /// True when every exponent is a nonnegative integer.
    pub fn is_ordinary_polynomial(&self) -> bool {
        self.is_integral() && self.low2().is_none_or(|l| l >= 0)
    }

    /// Highest doubled exponent.
    pub fn degree2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest doubled exponent.
    pub fn low2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn lead_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Whether the polynomial is a single term `c q^{e2/2}`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Multiplies by `q^{e2/2}`.
    pub fn shift2(&self, e2: i64) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e + e2, c.clone())).collect(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * &c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// The substitution `q -> q^k` for `k >= 1`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Content: gcd of the coefficients (positive), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self` with integer
    /// coefficients (up to the monomial units of the Laurent ring).
    pub fn exact_div(&self, d: &QPoly) -> Result<QPoly, QError> {
        if d.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        if let Some((de, dc)) = d.as_monomial() {
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(QError::NotDivisible);
                }
                terms.insert(e - de, qc);
            }
            return Ok(QPoly { terms });
        }
        let (alo, adense) = self.to_dense();
        let (blo, bdense) = d.to_dense();
        if adense.len() < bdense.len() {
            return Err(QError::NotDivisible);
        }
        let q = dense_exact_div(adense, &bdense).ok_or(QError::NotDivisible)?;
        Ok(QPoly::from_dense(alo - blo, q))
    }

    /// Dense coefficient vector in steps of one doubled exponent, starting at
    /// the lowest exponent.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.low2(), self.degree2()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    fn from_dense(lo: i64, v: Vec<BigInt>) -> Self {
        QPoly {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }

    /// Evaluates at `q = 1` or `q = -1`.
    pub fn specialize(&self, value: i64) -> Result<ExactInt, QError> {
        match value {
            1 => Ok(self.terms.values().sum()),
            -1 => {
                if !self.is_integral() {
                    return Err(QError::NonIntegral);
                }
                Ok(self
                    .terms
                    .iter()
                    .map(|(e, c)| if (e / 2).rem_euclid(2) == 0 { c.clone() } else { -c })
                    .sum())
            }
            other => Err(QError::UnsupportedValue(other)),
        }
    }

    /// Maps the polynomial coefficient-wise into any ring, given the image of
    /// `q^{1/2}` powers.
    pub fn map_terms<F: FnMut(i64, &BigInt) -> QPoly>(&self, mut f: F) -> QPoly {
        let mut acc = QPoly::zero();
        for (e, c) in &self.terms {
            acc += f(*e, c);
        }
        acc
    }
}

/// Long division of dense polynomials (index = degree) with the requirement
/// that every quotient coefficient is an exact integer and the remainder
/// vanishes.
fn dense_exact_div(mut a: Vec<BigInt>, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let bl = b.len();
    let lead = &b[bl - 1];
    let ql = a.len() + 1 - bl;
    let mut q = vec![BigInt::zero(); ql];
    for k in (0..ql).rev() {
        let top = &a[k + bl - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                a[k + i] -= &c * bi;
            }
        }
        q[k] = c;
    }
    if a.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// Pseudo-remainder of `a` by `b` (dense, both nonzero, `deg a >= deg b`).
fn dense_pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let bl = b.len();
    let lead = b[bl - 1].clone();
    while a.len() >= bl {
        let top = a.last().cloned().unwrap();
        let shift = a.len() - bl;
        for c in a.iter_mut() {
            *c *= &lead;
        }
        for (i, bi) in b.iter().enumerate() {
            a[shift + i] -= &top * bi;
        }
        a.pop();
        dense_trim(&mut a);
    }
    a
}

/// Primitive gcd of two dense polynomials with nonzero constant terms.
fn dense_primitive_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    dense_primitive(&mut a);
    dense_primitive(&mut b);
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let mut r = dense_pseudo_rem(a, &b);
        dense_primitive(&mut r);
        a = b;
        b = r;
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in a.iter_mut() {
            *c = -&*c;
        }
    }
    a
}

/// Greatest common divisor in `Z[q^{1/2}, q^{-1/2}]`, normalized to have
/// lowest exponent 0 and positive leading coefficient. `gcd(0, 0) = 0`.
pub fn qpoly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    let content = a.content().gcd(&b.content());
    let (alo, blo) = (a.low2().unwrap(), b.low2().unwrap());
    // Step between exponents shared by both operands: work in u = t^stride.
    let stride = a
        .terms
        .keys()
        .map(|e| e - alo)
        .chain(b.terms.keys().map(|e| e - blo))
        .fold(0i64, |g, d| g.gcd(&d));
    if stride == 0 {
        return QPoly::constant(content);
    }
    let dense = |p: &QPoly, lo: i64| {
        let hi = p.degree2().unwrap();
        let mut v = vec![BigInt::zero(); ((hi - lo) / stride + 1) as usize];
        for (e, c) in &p.terms {
            v[((e - lo) / stride) as usize] = c.clone();
        }
        v
    };
    let g = dense_primitive_gcd(dense(a, alo), dense(b, blo));
    QPoly::from_terms(
        g.into_iter()
            .enumerate()
            .map(|(i, c)| (i as i64 * stride, c * &content)),
    )
}

/// Normalizes by a unit: shift to lowest exponent 0 and make the leading
/// coefficient positive.
fn normalize_unit(p: &QPoly) -> QPoly {
    match p.low2() {
        None => QPoly::zero(),
        Some(lo) => {
            let s = p.shift2(-lo);
            if s.lead_coeff().is_some_and(|c| c.is_negative()) {
                -s
            } else {
                s
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}

impl<'b> Add<&'b QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &'b QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &'b QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &'b QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return self.shift2(e).scale(c.clone());
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.shift2(e).scale(c.clone());
        }
        let lo = self.low2().unwrap() + rhs.low2().unwrap();
        let hi = self.degree2().unwrap() + rhs.degree2().unwrap();
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        QPoly::from_dense(lo, acc)
    }
}

forward_binop!(Add, add, QPoly);
forward_binop!(Sub, sub, QPoly);
forward_binop!(Mul, mul, QPoly);

impl<'a> AddAssign<&'a QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &'a QPoly) {
        for (e, c) in &rhs.terms {
            let slot = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl AddAssign<QPoly> for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl<'a> SubAssign<&'a QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &'a QPoly) {
        for (e, c) in &rhs.terms {
            let slot = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *slot -= c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl SubAssign<QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: QPoly) {
        *self -= &rhs;
    }
}

impl<'a> MulAssign<&'a QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &'a QPoly) {
        *self = &*self * rhs;
    }
}

impl MulAssign<QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: QPoly) {
        *self = &*self * &rhs;
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match (*e, e.rem_euclid(2) == 0) {
                (0, _) => String::new(),
                (2, _) => "q".to_string(),
                (e, true) => format!("q^{}", e / 2),
                (e, false) => format!("q^({}/2)", e),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp2: i64,
    coeff: String,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(e, c)| TermRepr {
                exp2: *e,
                coeff: json::int_to_string(c),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Vec::<TermRepr>::deserialize(d)?;
        let mut terms = Vec::with_capacity(v.len());
        for t in v {
            let c = json::int_from_str(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("invalid coefficient {:?}", t.coeff)))?;
            terms.push((t.exp2, c));
        }
        Ok(QPoly::from_terms(terms))
    }
}

impl ea::Ring for QPoly {
    const TAG: RingTag = RingTag::QPoly;
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn from_i64(n: i64) -> Self {
        QPoly::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        QPoly::exact_div(self, other).ok()
    }
}

impl HasFractionField for QPoly {
    type Frac = QRat;
}

/// Rational function in `q^{1/2}`: `num/den` in lowest terms, with the
/// denominator's lowest exponent 0 and leading coefficient positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(QRat::reduce(num, den))
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat { num: p, den: QPoly::one() }
    }

    pub fn zero() -> Self {
        QRat::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        QRat::from_poly(QPoly::one())
    }

    pub fn constant(c: i64) -> Self {
        QRat::from_poly(QPoly::constant(c))
    }

    pub fn from_rat(r: &ExactRat) -> Self {
        QRat::reduce(QPoly::constant(r.numer().clone()), QPoly::constant(r.denom().clone()))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial value if the denominator is 1.
    pub fn to_poly(&self) -> Result<QPoly, QError> {
        if self.is_poly() {
            Ok(self.num.clone())
        } else {
            Err(QError::NotPolynomial)
        }
    }

    fn reduce(num: QPoly, den: QPoly) -> QRat {
        if num.is_zero() {
            return QRat::zero();
        }
        let (num, den) = if den.num_terms() == 1 {
            (num, den)
        } else if let Ok(quot) = num.exact_div(&den) {
            (quot, QPoly::one())
        } else {
            let g = qpoly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Remove the integer content shared between numerator and denominator.
        let c = num.content().gcd(&den.content());
        let (mut num, mut den) = if c.is_one() {
            (num, den)
        } else {
            let cq = QPoly::constant(c);
            (num.exact_div(&cq).unwrap(), den.exact_div(&cq).unwrap())
        };
        let lo = den.low2().unwrap();
        if lo != 0 {
            den = den.shift2(-lo);
            num = num.shift2(-lo);
        }
        if den.lead_coeff().unwrap().is_negative() {
            den = -den;
            num = -num;
        }
        QRat { num, den }
    }

    pub fn inv(&self) -> Result<QRat, QError> {
        if self.num.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(QRat::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &QRat) -> Result<QRat, QError> {
        if other.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(QRat::reduce(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn pow(&self, k: i64) -> Result<QRat, QError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(QRat {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
        .renormalized())
    }

    fn renormalized(self) -> QRat {
        QRat::reduce(self.num, self.den)
    }

    /// Evaluates at `q = ±1`; a vanishing denominator is reported as a pole.
    pub fn specialize(&self, value: i64) -> Result<ExactRat, QError> {
        let n = self.num.specialize(value)?;
        let d = self.den.specialize(value)?;
        if d.is_zero() {
            return Err(QError::Pole(value));
        }
        Ok(ExactRat::new(n, d))
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> QRat {
        QRat::reduce(self.num.invert_q(), self.den.invert_q())
    }

    pub fn shift2(&self, e2: i64) -> QRat {
        QRat {
            num: self.num.shift2(e2),
            den: self.den.clone(),
        }
    }
}

impl<'b> Add<&'b QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &'b QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QRat::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'b> Sub<&'b QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &'b QRat) -> QRat {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &'b QRat) -> QRat {
        if self.is_poly() && rhs.is_poly() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        QRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_binop!(Add, add, QRat);
forward_binop!(Sub, sub, QRat);
forward_binop!(Mul, mul, QRat);

impl<'a> AddAssign<&'a QRat> for QRat {
    fn add_assign(&mut self, rhs: &'a QRat) {
        *self = &*self + rhs;
    }
}

impl<'a> MulAssign<&'a QRat> for QRat {
    fn mul_assign(&mut self, rhs: &'a QRat) {
        *self = &*self * rhs;
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -self.clone()
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        QRat::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        QRat::constant(c)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct QRatRepr {
    num: QPoly,
    den: QPoly,
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QRatRepr {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = QRatRepr::deserialize(d)?;
        QRat::new(r.num, r.den).map_err(D::Error::custom)
    }
}

impl ea::Ring for QRat {
    const TAG: RingTag = RingTag::QRat;
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn from_i64(n: i64) -> Self {
        QRat::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
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
        QRat::div(self, other).ok()
    }
}

impl Field for QRat {}

impl Fraction for QRat {
    type Base = QPoly;
    fn numer(&self) -> QPoly {
        self.num.clone()
    }
    fn denom(&self) -> QPoly {
        self.den.clone()
    }
    fn from_base(b: &QPoly) -> Self {
        QRat::from_poly(b.clone())
    }
    fn from_parts(n: &QPoly, d: &QPoly) -> Self {
        QRat::reduce(n.clone(), d.clone())
    }
    fn base_lcm(a: &QPoly, b: &QPoly) -> QPoly {
        if a == b || b.is_one() {
            return a.clone();
        }
        if a.is_one() {
            return b.clone();
        }
        let g = qpoly_gcd(a, b);
        (a * b).exact_div(&g).expect("gcd divides product")
    }
}

/// Signed q-integer `[n] = (1 - q^n)/(1 - q)`; for negative `n`,
/// `[-a] = -q^{-a}[a]`.
pub fn q_int(n: i64) -> QPoly {
    if n >= 0 {
        QPoly::from_terms((0..n).map(|i| (2 * i, BigInt::one())))
    } else {
        -q_int(-n).shift2(2 * n)
    }
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: u32) -> QPoly {
    (1..=n as i64).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

fn qbinom_cache() -> &'static RwLock<HashMap<(i64, i64), QPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(i64, i64), QPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Gaussian binomial `[n, k]`.
///
/// Zero for `k < 0` and, when `n >= 0`, for `k > n`. Negative `n` follows the
/// reflection `[-a, k] = [a+k-1, k] (-1)^k q^{-ak - C(k,2)}`, which coincides
/// with the falling product `Π_{l<k} [n-l] / [k]!` of signed q-integers.
pub fn q_binomial(n: i64, k: i64) -> QPoly {
    if k < 0 || (n >= 0 && k > n) {
        return QPoly::zero();
    }
    if n < 0 {
        let a = -n;
        let base = q_binomial(a + k - 1, k);
        let e = -a * k - k * (k - 1) / 2;
        let signed = if k % 2 == 0 { base } else { -base };
        return signed.shift2(2 * e);
    }
    let k = k.min(n - k);
    if let Some(v) = qbinom_cache().read().unwrap().get(&(n, k)) {
        return v.clone();
    }
    // [n, i+1] = [n, i] (1 - q^{n-i}) / (1 - q^{i+1}), each step exact.
    let mut acc = QPoly::one();
    for i in 0..k {
        let up = QPoly::one() - QPoly::q_pow(n - i);
        let down = QPoly::one() - QPoly::q_pow(i + 1);
        acc = (&acc * &up).exact_div(&down).expect("q-binomial steps are exact");
    }
    qbinom_cache().write().unwrap().insert((n, k), acc.clone());
    acc
}

/// Sign of the base `±q^a` of a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseSign {
    Plus,
    Minus,
}

/// `(x; q)_n = (1-x)(1-qx)...(1-q^{n-1}x)` with `x = ±q^{a}` where the base
/// exponent is given doubled (`a = a2/2`).
pub fn q_pochhammer(sign: BaseSign, a2: i64, n: u32) -> QPoly {
    let s: i64 = match sign {
        BaseSign::Plus => -1,
        BaseSign::Minus => 1,
    };
    (0..n as i64).fold(QPoly::one(), |acc, i| {
        &acc * &(QPoly::one() + QPoly::monomial2(s, a2 + 2 * i))
    })
}

/// q-Pochhammer symbol with a possibly negative count, using
/// `(x; q)_{-k} = 1 / (x q^{-k}; q)_k`.
pub fn q_pochhammer_any(sign: BaseSign, a2: i64, n: i64) -> Result<QRat, QError> {
    if n >= 0 {
        Ok(QRat::from_poly(q_pochhammer(sign, a2, n as u32)))
    } else {
        let k = -n;
        QRat::from_poly(q_pochhammer(sign, a2 - 2 * k, k as u32)).inv()
    }
}

/// Rational function `[a]/[y] · [y, r]` evaluated in cancelled form, which
/// stays finite where `[y]` vanishes: 0 for `r < 0`, `[a]/[y]` for `r = 0`,
/// and `[a] [y-1, r-1] / [r]` for `r >= 1`.
pub fn q_ratio_binomial(a: i64, y: i64, r: i64) -> Result<QRat, QError> {
    if r < 0 {
        return Ok(QRat::zero());
    }
    if r == 0 {
        if a == y {
            return Ok(QRat::one());
        }
        return QRat::new(q_int(a), q_int(y));
    }
    QRat::new(&q_int(a) * &q_binomial(y - 1, r - 1), q_int(r))
}

/// `q^{C(k,2)}` written as a doubled exponent helper: returns `k(k-1)`.
pub fn binom2_exp2(k: i64) -> i64 {
    k * (k - 1)
}

/// `q^{C(k,2)}`.
pub fn q_pow_binom2(k: i64) -> QPoly {
    QPoly::monomial2(1, binom2_exp2(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 0, 0, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), q_int(4));
        let c3 = &p(&[1, -1, 1]) * &q_int(5);
        assert_eq!(c3, p(&[1, 0, 1, 1, 1, 0, 1]));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), Err(QError::NotDivisible));
    }

    #[test]
    fn laurent_division() {
        let a = &p(&[1, 2, 1]).shift2(-6) * &p(&[3, 0, 1]);
        assert_eq!(a.exact_div(&p(&[1, 2, 1])).unwrap(), p(&[3, 0, 1]).shift2(-6));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        for n in 0..8 {
            assert!(q_binomial(n, 0).is_one());
        }
        assert_eq!(q_binomial(3, 1), p(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2).specialize(1).unwrap(), BigInt::from(6));
        assert_eq!(q_binomial(4, 2).specialize(-1).unwrap(), BigInt::from(2));
        assert_eq!(q_binomial(5, 3).specialize(-1).unwrap(), BigInt::from(2));
    }

    #[test]
    fn negative_upper_index_matches_falling_product() {
        for a in 1..5 {
            for k in 0..5 {
                let mut prod = QRat::one();
                for l in 0..k {
                    prod = &prod * &QRat::from_poly(q_int(-a - l));
                }
                let expected = prod.div(&QRat::from_poly(q_factorial(k as u32))).unwrap();
                assert_eq!(QRat::from_poly(q_binomial(-a, k)), expected, "a={a} k={k}");
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(BaseSign::Plus, 2, 2), &p(&[1, -1]) * &p(&[1, 0, -1]));
        assert!(q_pochhammer(BaseSign::Minus, 2, 0).is_one());
        assert_eq!(
            q_pochhammer(BaseSign::Minus, 4, 2),
            &p(&[1, 0, 1]) * &p(&[1, 0, 0, 1])
        );
        let neg = q_pochhammer_any(BaseSign::Plus, 4, -1).unwrap();
        assert_eq!(neg, QRat::new(QPoly::one(), p(&[1, -1])).unwrap());
        assert_eq!(
            q_pochhammer_any(BaseSign::Plus, 2, -1),
            Err(QError::DivisionByZero)
        );
    }

    #[test]
    fn specialization_rejects_half_powers() {
        let h = QPoly::monomial2(1, 3);
        assert_eq!(h.specialize(-1), Err(QError::NonIntegral));
        assert_eq!(h.specialize(1).unwrap(), BigInt::from(1));
        assert!(!h.is_integral());
    }

    #[test]
    fn gcd_and_reduction() {
        let a = &p(&[1, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[2, -1]);
        assert_eq!(qpoly_gcd(&a, &b), p(&[1, 1]));
        let r = QRat::new(a.shift2(4), b.scale(-3)).unwrap();
        assert_eq!(r.denom(), &p(&[-6, 3]));
        assert_eq!(r.numer(), &p(&[1, 0, 1]).shift2(4));
        let half = QRat::new(QPoly::monomial2(1, 1), QPoly::monomial2(2, 3)).unwrap();
        assert_eq!(half.numer(), &QPoly::monomial2(1, -2));
        assert_eq!(half.denom(), &QPoly::constant(2));
    }

    #[test]
    fn ratio_binomial_cancels_singularity() {
        // [0]/[0] [0, 0] = 1 and [2]/[0] [0, 1] = [2] [-1, 0] / [1] = [2].
        assert_eq!(q_ratio_binomial(0, 0, 0).unwrap(), QRat::one());
        assert_eq!(q_ratio_binomial(2, 0, 1).unwrap(), QRat::from_poly(q_int(2)));
        let generic = QRat::new(&q_int(3) * &q_binomial(5, 2), q_int(5)).unwrap();
        assert_eq!(q_ratio_binomial(3, 5, 2).unwrap(), generic);
    }

    #[test]
    fn json_layout() {
        let v = QPoly::from_terms([(-1, BigInt::from(2)), (4, BigInt::from(-1))]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[{"exp2":-1,"coeff":"2"},{"exp2":4,"coeff":"-1"}]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
