//! Builders for the named determinant families.
//!
//! Each family maps named integer parameters to a square matrix whose
//! entries depend only on `(i, j)` and the parameters. Indices run from 0
//! unless the description says otherwise, and the size-0 slice is always
//! the empty matrix.

use num_traits::{One, Zero};

use crate::combinatorics::{catalan, catalan_power, h_poly, q_catalan_power};
use crate::exact_arith::{int, int_binomial, sign_pow, ExactInt, ExactRat};
use crate::linalg::{det_bareiss, det_cleared, LinalgError, RingMatrix};
use crate::modular_lab::{LiftFamily, ResidueLift};
use crate::qseries::{q_binomial, q_pochhammer, q_pow_binom2, q_ratio_binomial, BaseSign, QError, QPoly, QRat};
use crate::value::Value;

use super::closed_forms::lemma3_sample;
use super::{EvalError, Params, SuiteError};

/// A square matrix over one of the exact rings the suite uses.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Int(RingMatrix<ExactInt>),
    Rat(RingMatrix<ExactRat>),
    Poly(RingMatrix<QPoly>),
    RatFn(RingMatrix<QRat>),
}

macro_rules! each {
    ($m:expr, $x:ident => $body:expr) => {
        match $m {
            AnyMatrix::Int($x) => AnyMatrix::Int($body),
            AnyMatrix::Rat($x) => AnyMatrix::Rat($body),
            AnyMatrix::Poly($x) => AnyMatrix::Poly($body),
            AnyMatrix::RatFn($x) => AnyMatrix::RatFn($body),
        }
    };
}

impl AnyMatrix {
    pub fn size(&self) -> usize {
        match self {
            AnyMatrix::Int(m) => m.rows(),
            AnyMatrix::Rat(m) => m.rows(),
            AnyMatrix::Poly(m) => m.rows(),
            AnyMatrix::RatFn(m) => m.rows(),
        }
    }

    /// Bareiss over the integral rings; denominators are cleared first for
    /// the fraction rings.
    pub fn det(&self) -> Result<Value, LinalgError> {
        Ok(match self {
            AnyMatrix::Int(m) => Value::Int(det_bareiss(m)?),
            AnyMatrix::Rat(m) => Value::Rat(det_cleared(m)?),
            AnyMatrix::Poly(m) => Value::Poly(det_bareiss(m)?),
            AnyMatrix::RatFn(m) => Value::RatFn(det_cleared(m)?),
        }
        .normalize())
    }

    pub fn entry(&self, i: usize, j: usize) -> Value {
        match self {
            AnyMatrix::Int(m) => Value::Int(m.get(i, j).clone()),
            AnyMatrix::Rat(m) => Value::Rat(m.get(i, j).clone()),
            AnyMatrix::Poly(m) => Value::Poly(m.get(i, j).clone()),
            AnyMatrix::RatFn(m) => Value::RatFn(m.get(i, j).clone()),
        }
        .normalize()
    }

    /// Rows as a nested [`Value::Vector`].
    pub fn to_value(&self) -> Value {
        let n = self.size();
        Value::Vector(
            (0..n)
                .map(|i| Value::Vector((0..n).map(|j| self.entry(i, j)).collect()))
                .collect(),
        )
    }

    pub fn transpose(&self) -> AnyMatrix {
        each!(self, m => m.transpose())
    }

    /// Reverses the order of both the rows and the columns.
    pub fn reverse(&self) -> AnyMatrix {
        each!(self, m => m.reverse())
    }

    /// Evaluates every entry at `q = value`; integer and rational matrices
    /// are returned unchanged.
    pub fn specialize(&self, value: i64) -> Result<AnyMatrix, QError> {
        Ok(match self {
            AnyMatrix::Poly(m) => AnyMatrix::Int(m.try_map(|p| p.specialize(value))?),
            AnyMatrix::RatFn(m) => AnyMatrix::Rat(m.try_map(|r| r.specialize(value))?),
            other => other.clone(),
        })
    }
}

pub type BuildFn = fn(&Params) -> Result<AnyMatrix, EvalError>;

pub struct MatrixFamily {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
    build: BuildFn,
}

impl MatrixFamily {
    pub fn build(&self, params: &Params) -> Result<AnyMatrix, SuiteError> {
        if let Some(name) = self.params.iter().find(|n| !params.contains(n)) {
            return Err(SuiteError::MissingParam {
                id: self.id.to_string(),
                name: name.to_string(),
            });
        }
        (self.build)(params).map_err(|e| SuiteError::OutOfDomain {
            id: self.id.to_string(),
            params: params.to_string(),
            reason: e.0,
        })
    }
}

impl std::fmt::Debug for MatrixFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MatrixFamily").field("id", &self.id).field("params", &self.params).finish()
    }
}

/// Looks up a family by id.
pub fn family(id: &str) -> Result<&'static MatrixFamily, SuiteError> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| SuiteError::UnknownFamily(id.to_string()))
}

pub fn families() -> &'static [MatrixFamily] {
    FAMILIES
}

/// Builds the matrix of family `id` at `params`.
pub fn build_matrix(id: &str, params: &Params) -> Result<AnyMatrix, SuiteError> {
    family(id)?.build(params)
}

/// Shorthand used by the checks, with errors already converted.
pub(crate) fn det_of(id: &str, params: &Params) -> Result<Value, EvalError> {
    Ok(build_matrix(id, params)?.det()?)
}

/// `(a/y)·binom(y, r)` in cancelled form: 0 for `r < 0`, `a/y` for `r = 0`
/// (1 when `a = y`), and `a·binom(y-1, r-1)/r` otherwise.
pub fn ratio_binomial(a: i64, y: i64, r: i64) -> Result<ExactRat, EvalError> {
    if r < 0 {
        return Ok(ExactRat::zero());
    }
    if r == 0 {
        if a == y {
            return Ok(ExactRat::one());
        }
        if y == 0 {
            return Err(EvalError(format!("pole: {a}/0 in a ratio binomial")));
        }
        return Ok(ExactRat::new(int(a), int(y)));
    }
    Ok(ExactRat::new(int(a) * int_binomial(y - 1, r - 1), int(r)))
}

fn n_of(p: &Params) -> Result<usize, EvalError> {
    p.size("n")
}

fn int_sq(n: usize, f: impl Fn(i64, i64) -> ExactInt) -> AnyMatrix {
    AnyMatrix::Int(RingMatrix::square(n, |i, j| f(i as i64, j as i64)))
}

fn rat_sq(n: usize, f: impl Fn(i64, i64) -> Result<ExactRat, EvalError>) -> Result<AnyMatrix, EvalError> {
    Ok(AnyMatrix::Rat(RingMatrix::try_square(n, |i, j| f(i as i64, j as i64))?))
}

fn poly_sq(n: usize, f: impl Fn(i64, i64) -> QPoly) -> AnyMatrix {
    AnyMatrix::Poly(RingMatrix::square(n, |i, j| f(i as i64, j as i64)))
}

/// Like [`poly_sq`] for entries that are a priori quotients; they are
/// reduced and kept as polynomials whenever every entry is one.
fn ratfn_sq(n: usize, f: impl Fn(i64, i64) -> Result<QRat, EvalError>) -> Result<AnyMatrix, EvalError> {
    let m = RingMatrix::try_square(n, |i, j| f(i as i64, j as i64))?;
    if m.entries().iter().all(QRat::is_poly) {
        return Ok(AnyMatrix::Poly(m.map(|r| r.numer().clone())));
    }
    Ok(AnyMatrix::RatFn(m))
}

fn b(a: i64, k: i64) -> ExactInt {
    int_binomial(a, k)
}

fn qb(a: i64, k: i64) -> QPoly {
    q_binomial(a, k)
}

/// `q^{C(k,2)}`.
fn qc2(k: i64) -> QPoly {
    q_pow_binom2(k)
}

/// `(-q^a; q)_r` for `r >= 0`.
fn neg_poch(a: i64, r: i64) -> QPoly {
    q_pochhammer(BaseSign::Minus, 2 * a, r as u32)
}

fn lifted(p: &Params, fam: LiftFamily, lift: ResidueLift) -> Result<AnyMatrix, EvalError> {
    Ok(AnyMatrix::Int(fam.lifted_matrix(n_of(p)?, lift)))
}

fn lift_param(p: &Params) -> Result<ResidueLift, EvalError> {
    match p.get("mod")? {
        2 => Ok(ResidueLift::Mod2),
        3 => Ok(ResidueLift::Mod3Standard),
        other => Err(EvalError(format!("unsupported modulus {other}"))),
    }
}

macro_rules! fam {
    ($id:literal, [$($p:literal),*], $desc:literal, $build:expr) => {
        MatrixFamily { id: $id, params: &[$($p),*], description: $desc, build: $build }
    };
}

static FAMILIES: &[MatrixFamily] = &[
    fam!("eq1", ["n"], "binom(i+j+1, i-j+1), n×n", |p| Ok(int_sq(n_of(p)?, |i, j| b(i + j + 1, i - j + 1)))),
    fam!("eq1b", ["n"], "binom(i+j+1, 2j), n×n", |p| Ok(int_sq(n_of(p)?, |i, j| b(i + j + 1, 2 * j)))),
    fam!("eq54", ["n", "k"], "binom(i+j+k, i-j+1), n×n", |p| {
        let k = p.get("k")?;
        Ok(int_sq(n_of(p)?, |i, j| b(i + j + k, i - j + 1)))
    }),
    fam!("eq55", ["n", "k"], "binom(j+k, i-j+1), n×n", |p| {
        let k = p.get("k")?;
        Ok(int_sq(n_of(p)?, |i, j| b(j + k, i - j + 1)))
    }),
    fam!("eq65", ["n", "m"], "binom(i+j+m, i-j+m), n×n", |p| {
        let m = p.get("m")?;
        Ok(int_sq(n_of(p)?, |i, j| b(i + j + m, i - j + m)))
    }),
    fam!("cat_hankel", ["n", "m"], "C_{n+i+j}, m×m", |p| {
        let n = p.get("n")?;
        Ok(int_sq(p.size("m")?, |i, j| catalan(n + i + j)))
    }),
    fam!("eq74", ["n", "m", "k"], "binom(i+j+k+m, i-j+m), n×n", |p| {
        let (m, k) = (p.get("m")?, p.get("k")?);
        Ok(int_sq(n_of(p)?, |i, j| b(i + j + k + m, i - j + m)))
    }),
    fam!("eq9b", ["n", "m", "k"], "binom(j+k+m, i-j+m), n×n", |p| {
        let (m, k) = (p.get("m")?, p.get("k")?);
        Ok(int_sq(n_of(p)?, |i, j| b(j + k + m, i - j + m)))
    }),
    fam!("eq74b", ["n", "m", "k"], "binom(2n+m+k-i-j, j-i+m), i, j = 1..n", |p| {
        let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
        Ok(int_sq(n_of(p)?, |i, j| b(2 * n + m + k - i - j - 2, j - i + m)))
    }),
    fam!("eq74c", ["n", "m", "k"], "C^{(2i+k+1)}_{n-i+j}, m×m", |p| {
        let (n, k) = (p.get("n")?, p.get("k")?);
        Ok(int_sq(p.size("m")?, |i, j| catalan_power(n - i + j, 2 * i + k + 1)))
    }),
    fam!("eq10", ["n", "m", "x"], "(x+2i-1+2m)/(x+i+j+m-1)·binom(x+i+j+m-1, i-j+m), n×n", |p| {
        let (m, x) = (p.get("m")?, p.get("x")?);
        rat_sq(n_of(p)?, |i, j| ratio_binomial(x + 2 * i - 1 + 2 * m, x + i + j + m - 1, i - j + m))
    }),
    fam!("eq10h", ["n", "m", "x"], "binom(2n+2j+x-1, n-i+j), m×m", |p| {
        let (n, x) = (p.get("n")?, p.get("x")?);
        Ok(int_sq(p.size("m")?, |i, j| b(2 * n + 2 * j + x - 1, n - i + j)))
    }),
    fam!("eq27c", ["n", "k"], "binom(i+1+k, j+k), n×n", |p| {
        let k = p.get("k")?;
        Ok(int_sq(n_of(p)?, |i, j| b(i + 1 + k, j + k)))
    }),
    fam!("eq34", ["n"], "(-1)^{i-j} binom(i+j, i-j), n×n", |p| {
        Ok(int_sq(n_of(p)?, |i, j| b(i + j, i - j) * sign_pow(i - j)))
    }),
    fam!("eq35", ["n", "x"], "binom(x+i+j, i-j+1), n×n", |p| {
        let x = p.get("x")?;
        Ok(int_sq(n_of(p)?, |i, j| b(x + i + j, i - j + 1)))
    }),
    fam!("eq39", ["n", "m"], "binom(j-m, i-j+1), n×n", |p| {
        let m = p.get("m")?;
        Ok(int_sq(n_of(p)?, |i, j| b(j - m, i - j + 1)))
    }),
    fam!("eq43", ["n"], "(2i+2)/(i+j+1)·binom(i+j+1, i-j+1), n×n", |p| {
        rat_sq(n_of(p)?, |i, j| ratio_binomial(2 * i + 2, i + j + 1, i - j + 1))
    }),
    fam!("eq45", ["n", "k"], "(2i+k+1)/(i+j+k)·binom(i+j+k, i-j+1), n×n", |p| {
        let k = p.get("k")?;
        rat_sq(n_of(p)?, |i, j| ratio_binomial(2 * i + k + 1, i + j + k, i - j + 1))
    }),
    fam!("eq45x", ["n", "x"], "(2i+1+x)/(i+j+x)·binom(i+j+x, i-j+1), n×n", |p| {
        let x = p.get("x")?;
        rat_sq(n_of(p)?, |i, j| ratio_binomial(2 * i + 1 + x, i + j + x, i - j + 1))
    }),
    fam!("eq46", ["n", "k"], "(i+k+1)/(j+k)·binom(j+k, i-j+1), n×n", |p| {
        let k = p.get("k")?;
        rat_sq(n_of(p)?, |i, j| ratio_binomial(i + k + 1, j + k, i - j + 1))
    }),
    fam!("eq49", ["n", "m"], "(i+1-m)/(j-m)·binom(i+j-m, i-j+1), n×n", |p| {
        let m = p.get("m")?;
        rat_sq(n_of(p)?, |i, j| {
            let r = i - j + 1;
            if r < 0 {
                return Ok(ExactRat::zero());
            }
            if j != m {
                return Ok(ExactRat::new(int(i + 1 - m) * b(i + j - m, r), int(j - m)));
            }
            // At j = m the numerator binom(i, i+1-m) does not vanish, so
            // this is a genuine pole.
            Err(EvalError(format!("pole at j = m = {m}")))
        })
    }),
    fam!("eq58", ["n", "r", "k"], "binom(i+(r-1)j+k, i-j+1), n×n", |p| {
        let (r, k) = (p.get("r")?, p.get("k")?);
        Ok(int_sq(n_of(p)?, |i, j| b(i + (r - 1) * j + k, i - j + 1)))
    }),
    fam!("eq61", ["n", "r", "k"], "binom((r-1)j+k, i-j+1), n×n", |p| {
        let (r, k) = (p.get("r")?, p.get("k")?);
        Ok(int_sq(n_of(p)?, |i, j| b((r - 1) * j + k, i - j + 1)))
    }),
    fam!("eq64", ["n", "seed"], "binom(L_i+A-j, L_i+j), i, j = 1..n, random decreasing L", |p| {
        let (l, a) = lemma3_sample(p.get("seed")? as u64, n_of(p)?);
        Ok(int_sq(l.len(), |i, j| b(l[i as usize] + a - j - 1, l[i as usize] + j + 1)))
    }),
    fam!("eq72", ["n", "m"], "1/(n+i+j+1), m×m", |p| {
        let n = p.get("n")?;
        rat_sq(p.size("m")?, |i, j| Ok(ExactRat::new(int(1), int(n + i + j + 1))))
    }),
    fam!("eq72l", ["n", "m"], "binom(i+m, j)·binom(i+m+j, j)/binom(2i+2m, i+m), n×n", |p| {
        let m = p.get("m")?;
        rat_sq(n_of(p)?, |i, j| {
            Ok(ExactRat::new(b(i + m, j) * b(i + m + j, j), b(2 * i + 2 * m, i + m)))
        })
    }),
    fam!("eq7", ["n", "k"], "q^{C(i-j,2)}[i+j+k, i-j+1], n×n", |p| {
        let k = p.get("k")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + j + k, i - j + 1)))
    }),
    fam!("eq86b", ["n", "k"], "q^{C(i-j+1,2)}[i+j+k, i-j+1], n×n", |p| {
        let k = p.get("k")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j + 1) * qb(i + j + k, i - j + 1)))
    }),
    fam!("eq8", ["n", "k"], "q^{2C(i-j+1,2)}(-q^{j+k};q)_r/(-q;q)_r·[j+k, r] with r = i-j+1, n×n", |p| {
        let k = p.get("k")?;
        ratfn_sq(n_of(p)?, |i, j| {
            let r = i - j + 1;
            if r < 0 {
                return Ok(QRat::zero());
            }
            let num = qc2(r).pow(2) * neg_poch(j + k, r) * qb(j + k, r);
            Ok(QRat::new(num, neg_poch(1, r))?)
        })
    }),
    fam!("eq27", ["n", "k"], "q^{C(i-j,2)}[i+1+k, j+k], n×n", |p| {
        let k = p.get("k")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + 1 + k, j + k)))
    }),
    fam!("eq71", ["n", "m"], "q^{C(i-j,2)}[i+m, j], n×n", |p| {
        let m = p.get("m")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + m, j)))
    }),
    fam!("eq77", ["n"], "q^{2C(i-j,2)}[i+1+j, i+1-j], n×n", |p| {
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j).pow(2) * qb(i + 1 + j, i + 1 - j)))
    }),
    fam!("eq78", ["n"], "[i+1+j, i+1-j], n×n", |p| Ok(poly_sq(n_of(p)?, |i, j| qb(i + 1 + j, i + 1 - j)))),
    fam!("eq81", ["n", "r"], "q^{C(i-j+1,2)}[(r-1)j+1, i-j+1], n×n", |p| {
        let r = p.get("r")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j + 1) * qb((r - 1) * j + 1, i - j + 1)))
    }),
    fam!("eq83", ["n"], "q^{C(i-j+1,2)}[i+j+1, i-j+1], n×n", |p| {
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j + 1) * qb(i + j + 1, i - j + 1)))
    }),
    fam!("eq84", ["n"], "q^{C(i-j,2)}[i+j+1, i-j+1], n×n", |p| {
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + j + 1, i - j + 1)))
    }),
    fam!("eq88", ["n"], "(-1)^{i-j} q^{C(i-j,2)}[i+j, i-j], n×n", |p| {
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + j, i - j).scale(sign_pow(i - j))))
    }),
    fam!("eq91", ["n", "m", "k"], "q^{C(i-j+m,2)}[k+i+j+m, i-j+m], n×n", |p| {
        let (m, k) = (p.get("m")?, p.get("k")?);
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j + m) * qb(k + i + j + m, i - j + m)))
    }),
    fam!("eq91c", ["n", "m", "k"], "C^{(2i+k+1)}_{n-i+j}(q), m×m", |p| {
        let (n, k) = (p.get("n")?, p.get("k")?);
        Ok(poly_sq(p.size("m")?, |i, j| q_catalan_power(n - i + j, 2 * i + k + 1)))
    }),
    fam!("eq92", ["n", "k"], "q^{C(i-j,2)}[2i+k+1]/[i+j+k]·[i+j+k, i-j+1], n×n", |p| {
        let k = p.get("k")?;
        ratfn_sq(n_of(p)?, |i, j| Ok(q_ratio_binomial(2 * i + k + 1, i + j + k, i - j + 1)? * QRat::from_poly(qc2(i - j))))
    }),
    fam!("eq96b", ["n", "m", "x"], "q^{C(i-j+m,2)}[2i+x+2m-1]/[i+j+x+m-1]·[i+j+x+m-1, i-j+m], n×n", |p| {
        let (m, x) = (p.get("m")?, p.get("x")?);
        ratfn_sq(n_of(p)?, |i, j| {
            Ok(q_ratio_binomial(2 * i + x + 2 * m - 1, i + j + x + m - 1, i - j + m)? * QRat::from_poly(qc2(i - j + m)))
        })
    }),
    fam!("eq96h", ["n", "m", "x"], "h_{n-i+j}(x+2i, q) = [2(n-i+j)+x+2i-1, n-i+j], m×m", |p| {
        let (n, x) = (p.get("n")?, p.get("x")?);
        Ok(poly_sq(p.size("m")?, |i, j| {
            if n - i + j < 0 {
                QPoly::zero()
            } else {
                h_poly(n - i + j, x + 2 * i)
            }
        }))
    }),
    fam!("eq102d", ["n", "k"], "q^{r^2}/((-q;q)_r (-q^{i+j+k+1};q)_r)·[i+j+k, r] with r = i+1-j, n×n", |p| {
        let k = p.get("k")?;
        ratfn_sq(n_of(p)?, |i, j| {
            let r = i + 1 - j;
            if r < 0 {
                return Ok(QRat::zero());
            }
            let num = QPoly::q_pow(r * r) * qb(i + j + k, r);
            Ok(QRat::new(num, neg_poch(1, r) * neg_poch(i + j + k + 1, r))?)
        })
    }),
    fam!("eqfinal", ["n", "m", "x"], "q^{C(i-j+m,2)}[i+x+m, i-j+m], n×n", |p| {
        let (m, x) = (p.get("m")?, p.get("x")?);
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j + m) * qb(i + x + m, i - j + m)))
    }),
    fam!("eqfinalh", ["n", "m", "x"], "[n-i+j+x+m-1, n-i+j], m×m", |p| {
        let (n, x, m) = (p.get("n")?, p.get("x")?, p.get("m")?);
        Ok(poly_sq(p.size("m")?, |i, j| qb(n - i + j + x + m - 1, n - i + j)))
    }),
    fam!("thm15a", ["n", "m"], "q^{C(i-j,2)}[i+j-m, i-j+1], n×n", |p| {
        let m = p.get("m")?;
        Ok(poly_sq(n_of(p)?, |i, j| qc2(i - j) * qb(i + j - m, i - j + 1)))
    }),
    fam!("thm15b", ["n", "m"], "q^{C(i-j,2)}[2i+1-m]/[i+j-m]·[i+j-m, i-j+1], n×n", |p| {
        let m = p.get("m")?;
        ratfn_sq(n_of(p)?, |i, j| Ok(q_ratio_binomial(2 * i + 1 - m, i + j - m, i - j + 1)? * QRat::from_poly(qc2(i - j))))
    }),
    fam!("eq63", ["n", "seed"], "q^{jL_i}[L_i+A-j, L_i+j], i, j = 1..n, random decreasing L", |p| {
        let (l, a) = lemma3_sample(p.get("seed")? as u64, n_of(p)?);
        Ok(poly_sq(l.len(), |i, j| {
            let (li, j) = (l[i as usize], j + 1);
            QPoly::q_pow(j * li) * qb(li + a - j, li + j)
        }))
    }),
    fam!("lift_catalan", ["n", "mod"], "binom(i+j+1, i-j+1) reduced and lifted, n×n", |p| {
        lifted(p, LiftFamily::CatalanBinomial, lift_param(p)?)
    }),
    fam!("lift_power", ["n", "k"], "binom(i+j+k, i-j+1) mod 2 lifted to {0,1}, n×n", |p| {
        lifted(p, LiftFamily::PowerBinomial(p.get("k")?), ResidueLift::Mod2)
    }),
    fam!("lift_shifted", ["n", "m"], "binom(i+j+m, i-j+m) mod 2 lifted to {0,1}, n×n", |p| {
        lifted(p, LiftFamily::ShiftedBinomial(p.get("m")?), ResidueLift::Mod2)
    }),
    fam!("lift_signed", ["n"], "(-1)^{i-j}·(binom(i+j, i-j) mod 2), n×n", |p| {
        lifted(p, LiftFamily::SignedCentral, ResidueLift::Mod2)
    }),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> AnyMatrix {
        let n = rows.len();
        AnyMatrix::Int(RingMatrix::square(n, |i, j| int(rows[i][j])))
    }

    #[test]
    fn catalan_binomial_rows() {
        let m = build_matrix("eq1", &Params::from([("n", 4)])).unwrap();
        assert_eq!(m, ints(&[&[1, 1, 0, 0], &[1, 3, 1, 0], &[1, 6, 5, 1], &[1, 10, 15, 7]]));
        assert_eq!(m.det().unwrap(), Value::int(14));
    }

    #[test]
    fn q_catalan_two_by_two() {
        let m = build_matrix("eq83", &Params::from([("n", 2)])).unwrap();
        let expected = AnyMatrix::Poly(RingMatrix::square(2, |i, j| match (i, j) {
            (1, 0) => QPoly::q_pow(1),
            (1, 1) => QPoly::from_coeffs(&[1, 1, 1]),
            _ => QPoly::one(),
        }));
        assert_eq!(m, expected);
        assert_eq!(m.det().unwrap(), Value::Poly(QPoly::from_coeffs(&[1, 0, 1])));
    }

    #[test]
    fn every_family_is_empty_at_size_zero() {
        for f in families() {
            let mut p = Params::new();
            for name in f.params {
                let v = match *name {
                    "n" | "m" => 0,
                    "mod" => 2,
                    "r" | "k" => 1,
                    _ => 3,
                };
                p.set(name, v);
            }
            let m = f.build(&p).unwrap();
            assert_eq!(m.size(), 0, "family {}", f.id);
            assert_eq!(m.det().unwrap().specialize(1).unwrap(), Value::int(1), "family {}", f.id);
        }
    }

    #[test]
    fn hilbert_family_with_no_rows() {
        let m = build_matrix("eq72", &Params::from([("n", 5), ("m", 0)])).unwrap();
        assert_eq!(m.size(), 0);
    }

    #[test]
    fn plain_ratio_binomial_cancels() {
        assert_eq!(ratio_binomial(4, 3, 2).unwrap(), ExactRat::from_integer(int(4)));
        assert_eq!(ratio_binomial(-2, 0, 1).unwrap(), ExactRat::from_integer(int(-2)));
        assert_eq!(ratio_binomial(3, 3, 0).unwrap(), ExactRat::one());
        assert!(ratio_binomial(3, 0, 0).is_err());
        assert_eq!(ratio_binomial(3, 5, -1).unwrap(), ExactRat::zero());
    }

    #[test]
    fn unknown_family_and_missing_parameter() {
        assert!(matches!(build_matrix("nope", &Params::new()), Err(SuiteError::UnknownFamily(_))));
        assert!(matches!(
            build_matrix("eq54", &Params::from([("n", 2)])),
            Err(SuiteError::MissingParam { .. })
        ));
    }
}
