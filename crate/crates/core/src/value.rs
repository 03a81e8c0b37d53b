//! Tagged union of the exact values that checks produce and reports carry.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_arith::{json, ExactInt, ExactRat};
use crate::qseries::{QError, QPoly, QRat};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Value {
    Bool(bool),
    #[serde(with = "json::int")]
    Int(ExactInt),
    #[serde(with = "json::rat")]
    Rat(ExactRat),
    Poly(QPoly),
    RatFn(QRat),
    Vector(Vec<Value>),
}

impl Value {
    /// Canonical representative: fractions with denominator 1 collapse to
    /// their integral kind, recursively inside vectors.
    pub fn normalize(self) -> Value {
        match self {
            Value::Rat(r) if r.is_integer() => Value::Int(r.to_integer()),
            Value::RatFn(r) if r.is_poly() => Value::Poly(r.numer().clone()),
            Value::Vector(v) => Value::Vector(v.into_iter().map(Value::normalize).collect()),
            other => other,
        }
    }

    pub fn int(n: i64) -> Value {
        Value::Int(ExactInt::from(n))
    }

    /// Evaluates every q-expression at `q = value` (`1` or `-1`), recursing
    /// into vectors; scalars pass through unchanged.
    pub fn specialize(&self, value: i64) -> Result<Value, QError> {
        Ok(match self {
            Value::Poly(p) => Value::Int(p.specialize(value)?),
            Value::RatFn(r) => Value::Rat(r.specialize(value)?),
            Value::Vector(v) => Value::Vector(v.iter().map(|x| x.specialize(value)).collect::<Result<_, _>>()?),
            other => other.clone(),
        }
        .normalize())
    }
}

impl From<ExactInt> for Value {
    fn from(v: ExactInt) -> Self {
        Value::Int(v)
    }
}

impl From<ExactRat> for Value {
    fn from(v: ExactRat) -> Self {
        Value::Rat(v)
    }
}

impl From<QPoly> for Value {
    fn from(v: QPoly) -> Self {
        Value::Poly(v)
    }
}

impl From<QRat> for Value {
    fn from(v: QRat) -> Self {
        Value::RatFn(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Self {
        Value::Vector(v.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(r) => write!(f, "{r}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::RatFn(r) => write!(f, "{r}"),
            Value::Vector(v) => {
                write!(f, "[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn normalization_collapses_unit_denominators() {
        assert_eq!(Value::Rat(rat(4, 2)).normalize(), Value::int(2));
        let v = Value::Vector(vec![Value::RatFn(QRat::constant(3))]).normalize();
        assert_eq!(v, Value::Vector(vec![Value::Poly(QPoly::constant(3))]));
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&Value::int(14)).unwrap();
        assert_eq!(s, r#"{"kind":"int","value":"14"}"#);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Value::int(14));
    }

    #[test]
    fn specialization_reaches_scalars() {
        let v = Value::Vector(vec![
            Value::Poly(QPoly::from_coeffs(&[1, 1, 2])),
            Value::RatFn(QRat::new(QPoly::constant(1), QPoly::from_coeffs(&[1, 1])).unwrap()),
        ]);
        assert_eq!(
            v.specialize(1).unwrap(),
            Value::Vector(vec![Value::int(4), Value::Rat(rat(1, 2))])
        );
    }
}
