//! Small helpers shared by the check definitions.

use crate::exact_arith::{int, ExactInt, ExactRat};
use crate::linalg::RingMatrix;
use crate::qseries::QPoly;
use crate::value::Value;
use crate::Ring;

use super::EvalError;

pub(super) type Sides = Result<(Value, Value), EvalError>;

pub(super) fn sides(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Sides {
    Ok((lhs.into(), rhs.into()))
}

/// Kronecker delta `[n = 0]`.
pub(super) fn delta(n: i64) -> ExactInt {
    int((n == 0) as i64)
}

pub(super) fn qdelta(n: i64) -> QPoly {
    QPoly::constant((n == 0) as i64)
}

pub(super) fn ratv(n: ExactInt) -> ExactRat {
    ExactRat::from_integer(n)
}

pub(super) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Rising factorial `(x)_n = x(x+1)...(x+n-1)`.
pub(super) fn rising(x: i64, n: i64) -> ExactInt {
    (0..n).map(|l| int(x + l)).product()
}

pub(super) fn rat_of(num: ExactInt, den: ExactInt) -> Result<ExactRat, EvalError> {
    if den.is_zero() {
        return Err(EvalError("division by zero".into()));
    }
    Ok(ExactRat::new(num, den))
}

/// Rows of a matrix as nested vectors.
pub(super) fn matrix_value<R: Ring + Into<Value>>(m: &RingMatrix<R>) -> Value {
    Value::Vector(
        (0..m.rows())
            .map(|i| Value::Vector(m.row(i).iter().cloned().map(Into::into).collect()))
            .collect(),
    )
}

pub(super) fn zeros(n: usize) -> Value {
    Value::Vector(vec![Value::Int(ExactInt::zero()); n])
}
