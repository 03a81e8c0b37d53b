//! q-analogues: q-binomial determinants, their summation lemmas, and the
//! Chebyshev, Andrews and Carlitz families.

use crate::combinatorics::{andrews_c, andrews_moment, carlitz, gfun, q_catalan, q_catalan_power, q_lucas_coeff};
use crate::exact_arith::int_binomial;
use crate::linalg::{det_cleared, inverse_over_fractions, nullspace_basis, proportional, RingMatrix};
use crate::orthopoly::{favard_coeffs, moments, FavardSystem};
use crate::qseries::{q_binomial as qb, q_pochhammer, q_pow_binom2 as qc2, q_ratio_binomial as qratio, BaseSign, QPoly, QRat};
use crate::value::Value;
use crate::Ring;

use super::closed_forms::{
    final_remark_rhs, pochhammer_prefactor, q_krattenthaler_rhs, q_lemma3_rhs, andrews_analogue_rhs, lemma3_sample,
    theorem11_w,
};
use super::families::{build_matrix, det_of, AnyMatrix};
use super::limits::{vanishing_sum, VanishingSum};
use super::support::{matrix_value, qdelta, sides, sign, Sides};
use super::{check, params, CheckKind::*, EvalError, IdentityCheck, Params};

/// A vector of `n` zero polynomials.
fn zeros(n: usize) -> Value {
    Value::Vector(vec![Value::Poly(QPoly::zero()); n])
}

fn signed(p: QPoly, k: i64) -> QPoly {
    p.scale(sign(k))
}

/// `(-q^a; q)_r`.
fn neg_poch(a: i64, r: i64) -> QPoly {
    q_pochhammer(BaseSign::Minus, 2 * a, r as u32)
}

fn rat(p: QPoly) -> QRat {
    QRat::from_poly(p)
}

fn det_with(id: &str, pairs: &[(&str, i64)]) -> Result<Value, EvalError> {
    let mut p = Params::new();
    for (k, v) in pairs {
        p.set(k, *v);
    }
    det_of(id, &p)
}

/// Products of determinant values as rational functions.
fn as_qrat(v: Value) -> Result<QRat, EvalError> {
    match v {
        Value::Int(n) => Ok(QRat::from_rat(&n.into())),
        Value::Rat(r) => Ok(QRat::from_rat(&r)),
        Value::Poly(p) => Ok(rat(p)),
        Value::RatFn(r) => Ok(r),
        other => Err(EvalError(format!("not a scalar: {other}"))),
    }
}

fn power_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq7", p)?, q_catalan_power(n, k))
}

fn power_difference(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(qb(2 * n + k - 2, n) - qb(2 * n + k - 2, n - 2).shift2(2 * k), q_catalan_power(n, k))
}

fn both_power_dets(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let c = Value::Poly(q_catalan_power(n, k));
    sides(vec![det_of("eq7", p)?, det_of("eq86b", p)?], vec![c.clone(), c])
}

fn pochhammer_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let closed = pochhammer_prefactor(n, k)?.mul(&rat(q_catalan_power(n, k)));
    sides(vec![det_of("eq8", p)?, Value::RatFn(andrews_c(n, k))], vec![Value::RatFn(closed.clone()), Value::RatFn(closed)])
}

/// `c(n, j) = q^{2C(n-j,2)} (-q^j; q)_{n-j} / (-q; q)_{n-j} [j, n-j]`.
fn andrews_table(n: i64, j: i64) -> Result<QRat, EvalError> {
    let r = n - j;
    if r < 0 {
        return Ok(QRat::zero());
    }
    Ok(QRat::new(qc2(r).pow(2) * neg_poch(j, r) * qb(j, r), neg_poch(1, r))?)
}

fn andrews_det(p: &Params) -> Sides {
    let (n, k) = (p.size("n")?, p.get("k")?);
    let m = RingMatrix::try_square(n, |i, j| andrews_table(i as i64 + k + 1, j as i64 + k))?;
    sides(det_cleared(&m)?, andrews_c(n as i64, k))
}

fn andrews_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = QRat::zero();
    for j in 0..=n {
        let weight = QRat::new(neg_poch(j + 1, k - 1), neg_poch(1, k - 1))?;
        let term = andrews_table(n + k, j + k)?.mul(&rat(q_catalan_power(j, k))).mul(&weight);
        acc = if (n - j) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    sides(acc, qdelta(n))
}

fn unit_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq27", p)?, qb(n + k, k))
}

fn shifted_unit_det(p: &Params) -> Sides {
    sides(det_of("eq71", p)?, QPoly::one())
}

fn carlitz_det(p: &Params) -> Sides {
    sides(det_of("eq77", p)?, carlitz(p.size("n")?))
}

fn carlitz_reciprocal(p: &Params) -> Sides {
    let n = p.get("n")?;
    sides(det_of("eq78", p)?, carlitz(n as usize).invert_q().shift2(2 * n * (n - 1)))
}

fn carlitz_at_minus_one(p: &Params) -> Sides {
    let (n, odd) = (p.get("n")?, p.get("odd")?);
    let size = 2 * n + odd;
    let m = build_matrix("eq77", &Params::from([("n", size)]))?.specialize(-1)?;
    let expected = if odd == 1 {
        crate::combinatorics::catalan(n) * sign(n)
    } else {
        super::support::delta(n)
    };
    sides(
        vec![m.det()?, Value::Int(carlitz(size as usize).specialize(-1)?)],
        vec![Value::Int(expected.clone()), Value::Int(expected)],
    )
}

/// `q^{(r-1)C(n,2)} g_n(r, 1/q)`, the normalization under which the
/// alternating sum and the determinant below hold.
fn gfun_reciprocal(n: i64, r: i64) -> QPoly {
    gfun(n as usize, r).invert_q().shift2((r - 1) * n * (n - 1))
}

fn gfun_sum(p: &Params) -> Sides {
    let (n, r) = (p.get("n")?, p.get("r")?);
    let mut acc = QPoly::zero();
    for j in 0..=n {
        acc += signed(qc2(n - j) * qb((r - 1) * j + 1, n - j) * gfun_reciprocal(j, r), n - j);
    }
    sides(acc, qdelta(n))
}

fn gfun_det(p: &Params) -> Sides {
    let (n, r) = (p.get("n")?, p.get("r")?);
    sides(det_of("eq81", p)?, gfun_reciprocal(n, r))
}

fn q_catalan_det(id: &'static str) -> impl Fn(&Params) -> Sides {
    move |p| sides(det_of(id, p)?, q_catalan(p.get("n")?))
}

fn q_catalan_sum(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut acc = QPoly::zero();
    for j in 0..=n {
        acc += signed(qc2(n - j) * qb(n + j, n - j) * q_catalan(j), n - j);
    }
    sides(acc, qdelta(n))
}

fn q_catalan_at_minus_one(p: &Params) -> Sides {
    let n = p.get("n")?;
    let m = build_matrix("eq84", p)?.specialize(-1)?;
    let expected = Value::Int(int_binomial(n, n / 2));
    sides(vec![m.det()?, Value::Int(q_catalan(n).specialize(-1)?)], vec![expected.clone(), expected])
}

fn power_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = QPoly::zero();
    for j in 0..=n {
        acc += signed(qc2(n - j) * qb(n + j + k - 1, n - j) * q_catalan_power(j, k), n - j);
    }
    sides(acc, qdelta(n))
}

fn triangle_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = QPoly::zero();
    for j in 0..=n {
        acc += signed(qc2(n - j) * qb(n + j, n - j) * q_catalan_power(j - k, 2 * k + 1), n - j);
    }
    sides(acc, QPoly::constant((n == k) as i64))
}

fn triangle_inverse(p: &Params) -> Sides {
    let n = p.size("N")?;
    let AnyMatrix::Poly(m) = build_matrix("eq88", &Params::from([("n", n as i64)]))? else {
        unreachable!("polynomial family")
    };
    let inv = inverse_over_fractions(&m)?;
    let triangle = RingMatrix::square(n, |i, j| q_catalan_power(i as i64 - j as i64, 2 * j as i64 + 1));
    sides(matrix_value(&inv), matrix_value(&triangle))
}

fn shifted_product(p: &Params) -> Sides {
    let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
    let target = det_of("eq91c", p)?;
    sides(
        vec![det_of("eq91", p)?, Value::RatFn(q_krattenthaler_rhs(n, m, k)?)],
        vec![target.clone(), target],
    )
}

fn lucas_ratio_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq92", p)?, qb(2 * n + k - 1, n))
}

fn lucas_ratio_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = QRat::zero();
    for j in 0..=n {
        let term = qratio(2 * n + k - 1, 2 * n - j + k - 1, j)?
            .mul(&rat(qc2(j) * qb(2 * n - 2 * j + k - 1, n - j)));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    sides(acc, qdelta(n))
}

fn lucas_functional(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut acc = QRat::zero();
    for j in 0..=n {
        let term = qratio(2 * n, n + j, n - j)?.mul(&rat(qc2(n - j) * qb(2 * j, j)));
        acc = if (n - j) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    sides(acc, qdelta(n))
}

/// The q-Lucas expansion `Σ_k [n, k] L_{n-2k}(x, q) = x^n`.
fn q_lucas_expansion(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut acc = vec![QPoly::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let r = n - 2 * k;
        for j in 0..=r / 2 {
            acc[(r - 2 * j) as usize] += qb(n, k) * q_lucas_coeff(r, j, 1);
        }
    }
    let mut expected = vec![QPoly::zero(); n as usize + 1];
    expected[n as usize] = QPoly::one();
    sides(acc, expected)
}

/// Moments of the linear functional with `L(ℓ_n) = [n=0]`, solved degree by
/// degree since every `ℓ_n` is monic.
fn lambda_functional_moments(n_max: i64) -> Vec<QPoly> {
    let mut mom: Vec<QPoly> = Vec::new();
    for n in 0..=n_max {
        let mut c = qdelta(n);
        for j in 1..=n / 2 {
            c -= q_lucas_coeff(n, j, 2) * mom[(n - 2 * j) as usize].clone();
        }
        mom.push(c);
    }
    mom
}

fn lambda_moments(p: &Params) -> Sides {
    let n = p.get("n")?;
    let f = QPoly::from_coeffs;
    let listed = [
        QPoly::one(),
        QPoly::zero(),
        f(&[1, 1]),
        QPoly::zero(),
        f(&[1, 0, 1]) * f(&[1, 2]),
        QPoly::zero(),
        f(&[1, 0, 0, 1]) * f(&[1, 3, 3, 3]),
        QPoly::zero(),
        f(&[1, 0, 0, 0, 1]) * f(&[1, 2, 0, 2]) * f(&[1, 2, 2, 2]),
    ];
    let computed = lambda_functional_moments(n);
    sides(computed[n as usize].clone(), listed[n as usize].clone())
}

fn theorem11(p: &Params) -> Sides {
    let (n, m, x) = (p.get("n")?, p.get("m")?, p.get("x")?);
    let target = det_of("eq96h", p)?;
    sides(vec![det_of("eq96b", p)?, Value::RatFn(theorem11_w(n, x, m)?)], vec![target.clone(), target])
}

fn theorem11_single_column(p: &Params) -> Sides {
    let (n, x) = (p.get("n")?, p.get("x")?);
    sides(theorem11_w(n, x, 1)?, qb(2 * n + x - 1, n))
}

fn theorem11_single_row(p: &Params) -> Sides {
    let (m, x) = (p.get("m")?, p.get("x")?);
    sides(theorem11_w(1, x, m)?, qratio(x + 2 * m - 1, x + m - 1, m)?.mul(&rat(qc2(m))))
}

fn theorem11_row_lemma(p: &Params) -> Sides {
    let (m, x, n) = (p.get("m")?, p.get("x")?, p.get("n")?);
    let a = RingMatrix::square(m as usize, |i, j| qb(2 * i as i64 + x + 1, i as i64 - j as i64 + 1));
    let closed = qratio(x + 2 * m - 1, x + m - 1, m)?.mul(&rat(qc2(m)));
    let mut acc = QRat::zero();
    for j in 0..=n {
        let term = qratio(x + 2 * j - 1, x + j - 1, j)?.mul(&rat(qb(2 * n + x - 1, n - j) * qc2(j)));
        acc = if (n - j) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    sides(
        vec![Value::RatFn(rat(crate::linalg::det_bareiss(&a)?)), Value::RatFn(acc)],
        vec![Value::RatFn(closed), Value::Poly(qdelta(n))],
    )
}

fn one_minus_q(e: i64) -> QPoly {
    QPoly::one() - QPoly::q_pow(e)
}

fn b_condensation(p: &Params) -> Sides {
    let (n, m, x) = (p.get("n")?, p.get("m")?, p.get("x")?);
    let d = |n: i64, x: i64, m: i64| det_with("eq96b", &[("n", n), ("m", m), ("x", x)]).and_then(as_qrat);
    let cond = d(n, x, m)?.mul(&d(n - 2, x + 2, m)?).sub(&d(n - 1, x + 2, m)?.mul(&d(n - 1, x, m)?))
        .add(&d(n - 1, x, m + 1)?.mul(&d(n - 1, x + 2, m - 1)?));
    let qi = crate::qseries::q_int;
    let balance = qi(n - 1) * one_minus_q(n + 2 * m - 2 + x) - qi(n + m - 1) * one_minus_q(n + m - 2 + x)
        + (qi(m) * one_minus_q(x + m - 1)).shift2(2 * (n - 1));
    sides(vec![Value::RatFn(cond), Value::Poly(balance)], zeros(2))
}

fn h_condensation(p: &Params) -> Sides {
    let (n, m, x) = (p.get("n")?, p.get("m")?, p.get("x")?);
    let d = |m: i64, x: i64, n: i64| det_with("eq96h", &[("n", n), ("m", m), ("x", x)]).and_then(as_qrat);
    let cond = d(m, x, n)?.mul(&d(m - 2, x + 2, n)?).sub(&d(m - 1, x + 2, n)?.mul(&d(m - 1, x, n)?))
        .add(&d(m - 1, x, n + 1)?.mul(&d(m - 1, x + 2, n - 1)?));
    let qi = crate::qseries::q_int;
    let balance = (qi(m - 1) * one_minus_q(x + m - 2)).shift2(2 * n) - qi(m + n - 1) * one_minus_q(x + m + n - 2)
        + qi(n) * one_minus_q(x + 2 * m + n - 3);
    sides(vec![Value::RatFn(cond), Value::Poly(balance)], zeros(2))
}

fn chebyshev_coefficients(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut explicit = vec![QRat::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let den = neg_poch(1, k) * neg_poch(n + 1 - k, k);
        let num = signed(QPoly::q_pow(k * k) * qb(n - k, k), k);
        explicit[(n - 2 * k) as usize] = QRat::new(num, den)?;
    }
    let favard = favard_coeffs(&FavardSystem::andrews_chebyshev(), n as usize);
    sides(explicit, favard.row(n as usize).to_vec())
}

fn andrews_moments(p: &Params) -> Sides {
    let n = p.get("n")?;
    let c = moments(&FavardSystem::andrews_chebyshev(), 2 * n as usize);
    let expected: Vec<QRat> = (0..=2 * n)
        .map(|j| if j % 2 == 0 { andrews_moment(j / 2) } else { QRat::zero() })
        .collect();
    sides(c.moments(), expected)
}

fn andrews_analogue(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq102d", p)?, andrews_analogue_rhs(n, k)?)
}

fn null_range(p: &Params) -> bool {
    match (p.get("n"), p.get("m")) {
        (Ok(n), Ok(m)) => n < m && m < 2 * n,
        _ => false,
    }
}

fn null_range_closed(p: &Params) -> bool {
    match (p.get("n"), p.get("m")) {
        (Ok(n), Ok(m)) => n <= m && m < 2 * n,
        _ => false,
    }
}

/// `q^{(h-j)(h+c-3j)/2}` with `h = ⌊m/2⌋`.
fn null_weight(m: i64, j: i64, even_c: i64) -> QPoly {
    let h = m / 2;
    let c = if m % 2 == 0 { even_c } else { even_c + 2 };
    QPoly::monomial2(1, (h - j) * (h + c - 3 * j))
}

/// `A v = 0`, the null space is one-dimensional, and it is spanned by `v`.
fn null_vector_sides(a: RingMatrix<QRat>, v: Vec<QRat>) -> Sides {
    let n = v.len();
    let product = a.mul_vec(&v)?;
    let basis = nullspace_basis(&a);
    let spanned = basis.len() == 1 && proportional(&basis[0], &v);
    sides(
        vec![Value::from(product), Value::int(basis.len() as i64), Value::Bool(spanned)],
        vec![zeros(n), Value::int(1), Value::Bool(true)],
    )
}

fn to_qrat_matrix(m: AnyMatrix) -> RingMatrix<QRat> {
    match m {
        AnyMatrix::Poly(m) => m.to_fraction_field(),
        AnyMatrix::RatFn(m) => m,
        AnyMatrix::Int(m) => m.map(|x| QRat::from_rat(&x.clone().into())),
        AnyMatrix::Rat(m) => m.map(QRat::from_rat),
    }
}

fn q_lucas_null_vector(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = to_qrat_matrix(build_matrix("thm15a", p)?);
    let v = (0..n)
        .map(|j| Ok(qratio(m, m - j, j)?.mul(&rat(null_weight(m, j, 5)))))
        .collect::<Result<Vec<_>, EvalError>>()?;
    null_vector_sides(a, v)
}

fn q_fibonacci_null_vector(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = to_qrat_matrix(build_matrix("thm15b", p)?);
    let v = (0..n).map(|j| rat(qb(m - j, j) * null_weight(m, j, 3))).collect();
    null_vector_sides(a, v)
}

fn vanishing(which: VanishingSum) -> impl Fn(&Params) -> Sides {
    move |p| sides(vanishing_sum(which, p.get("i")?, p.get("x2")?)?, QPoly::zero())
}

fn final_remark(p: &Params) -> Sides {
    let (n, m, x) = (p.get("n")?, p.get("m")?, p.get("x")?);
    let target = det_of("eqfinalh", p)?;
    sides(vec![det_of("eqfinal", p)?, Value::RatFn(final_remark_rhs(n, m, x)?)], vec![target.clone(), target])
}

fn q_lemma3_random(p: &Params) -> Sides {
    let (n, seed) = (p.size("n")?, p.get("seed")?);
    let (l, a) = lemma3_sample(seed as u64, n);
    sides(det_of("eq63", p)?, q_lemma3_rhs(&l, a)?)
}

macro_rules! closure_check {
    ($f:expr) => {{
        fn eval(p: &Params) -> Sides {
            ($f)(p)
        }
        eval
    }};
}

pub(super) fn register(out: &mut Vec<IdentityCheck>) {
    out.extend([
        check("eq7", Determinant, "det(q^{C(i-j,2)} [i+j+k, i-j+1]) = C_n^{(k)}(q)", params![("n", 0, 10, 7), ("k", 1, 6, 4)], power_det),
        check("eq7f", Structural, "C_n^{(k)}(q) = [k]/[2n+k] [2n+k, n] = [2n+k-2, n] - q^k [2n+k-2, n-2]", params![("n", 0, 16, 10), ("k", 1, 8, 5)], power_difference),
        check("eq8", Determinant, "det(q^{2C(i-j+1,2)} (-q^{j+k}; q)_{i-j+1}/(-q; q)_{i-j+1} [j+k, i-j+1]) = (-q^{n+1}; q)_{k-1}/(-q; q)_{k-1} C_n^{(k)}(q)", params![("n", 0, 6, 5), ("k", 1, 4, 3)], pochhammer_det),
        check("eq27", Determinant, "det(q^{C(i-j,2)} [i+1+k, j+k]) = [n+k, k]", params![("n", 0, 10, 7), ("k", 0, 5, 4)], unit_det),
        check("eq71", Determinant, "det(q^{C(i-j,2)} [i+m, j]) = 1", params![("n", 0, 8, 6), ("m", 0, 5, 4)], shifted_unit_det),
        check("eq77", Determinant, "det(q^{2C(i-j,2)} [i+1+j, i+1-j]) = c_n(q), the Carlitz q-Catalan number", params![("n", 0, 9, 7)], carlitz_det),
        check("eq78", Determinant, "det([i+1+j, i+1-j]) = q^{2C(n,2)} c_n(1/q)", params![("n", 0, 9, 7)], carlitz_reciprocal),
        check("eq79", Determinant, "at q = -1 the Carlitz determinant of size 2n+1 is (-1)^n C_n and of size 2n is [n=0]", params![("n", 0, 5, 4), ("odd", 0, 1, 1)], carlitz_at_minus_one),
        check("eq80", Sum, "Σ_j (-1)^{n-j} q^{C(n-j,2)} [(r-1)j+1, n-j] g*_j(r, q) = [n=0] with g*_n(r, q) = q^{(r-1)C(n,2)} g_n(r, 1/q)", params![("n", 0, 8, 6), ("r", 1, 4, 3)], gfun_sum),
        check("eq81", Determinant, "det(q^{C(i-j+1,2)} [(r-1)j+1, i-j+1]) = g*_n(r, q) = q^{(r-1)C(n,2)} g_n(r, 1/q)", params![("n", 0, 7, 5), ("r", 1, 4, 3)], gfun_det),
        check("eq83", Determinant, "det(q^{C(i-j+1,2)} [i+j+1, i-j+1]) = C_n(q)", params![("n", 0, 10, 7)], closure_check!(q_catalan_det("eq83"))),
        check("eq83s", Sum, "Σ_j (-1)^{n-j} q^{C(n-j,2)} [n+j, n-j] C_j(q) = [n=0]", params![("n", 0, 14, 10)], q_catalan_sum),
        check("eq84", Determinant, "det(q^{C(i-j,2)} [i+j+1, i-j+1]) = C_n(q)", params![("n", 0, 10, 7)], closure_check!(q_catalan_det("eq84"))),
        check("eq85", Determinant, "at q = -1 both the determinant and C_n(q) equal binom(n, ⌊n/2⌋)", params![("n", 0, 12, 9)], q_catalan_at_minus_one),
        check("eq86", Determinant, "det(q^{C(i-j,2)} [i+j+k, i-j+1]) = det(q^{C(i-j+1,2)} [i+j+k, i-j+1]) = C_n^{(k)}(q)", params![("n", 0, 10, 7), ("k", 1, 6, 4)], both_power_dets),
        check("eq87", Sum, "Σ_j (-1)^{n-j} q^{C(n-j,2)} [n+j+k-1, n-j] C_j^{(k)}(q) = [n=0]", params![("n", 0, 12, 8), ("k", 1, 6, 4)], power_sum),
        check("eq87b", Sum, "Σ_j (-1)^{n-j} q^{C(n-j,2)} [n+j, n-j] C_{j-k}^{(2k+1)}(q) = [n=k]", params![("n", 0, 10, 7), ("k", 0, 5, 4)], triangle_sum),
        check("eq88", Structural, "((-1)^{i-j} q^{C(i-j,2)} [i+j, i-j])^{-1} = (C_{i-j}^{(2j+1)}(q))", params![("N", 0, 7, 6)], triangle_inverse),
        check("eq89", Determinant, "det(c(i+k+1, j+k)) = C(n, k, q) with c(n, j) = q^{2C(n-j,2)} (-q^j; q)_{n-j}/(-q; q)_{n-j} [j, n-j]", params![("n", 0, 6, 5), ("k", 1, 4, 3)], andrews_det),
        check("eq90", Sum, "Σ_j (-1)^{n-j} c(n+k, j+k) C_j^{(k)}(q) (-q^{j+1}; q)_{k-1}/(-q; q)_{k-1} = [n=0]", params![("n", 0, 8, 6), ("k", 1, 4, 3)], andrews_sum),
        check("eq91", Determinant, "det(q^{C(i-j+m,2)} [k+i+j+m, i-j+m])_n = q^{n C(m,2)} Π_j Π_l [2j-1+k+l] / Π_l [j+l][j+k+m+l] = det(C^{(2i+k+1)}_{n-i+j}(q))_m", params![("n", 0, 6, 5), ("m", 0, 3, 3), ("k", 0, 3, 2)], shifted_product),
        check("eq92", Determinant, "det(q^{C(i-j,2)} [2i+k+1]/[i+j+k] [i+j+k, i-j+1]) = [2n+k-1, n]", params![("n", 0, 7, 5), ("k", 0, 4, 3)], lucas_ratio_det),
        check("eq92s", Sum, "Σ_j (-1)^j q^{C(j,2)} [2n+k-1]/[2n-j+k-1] [2n-j+k-1, j] [2n-2j+k-1, n-j] = [n=0]", params![("n", 0, 12, 8), ("k", 0, 6, 4)], lucas_ratio_sum),
        check("eq92l", Sum, "Σ_j (-1)^{n-j} q^{C(n-j,2)} [2n]/[n+j] [n+j, n-j] [2j, j] = [n=0]", params![("n", 0, 12, 8)], lucas_functional),
        check("eq92x", Structural, "Σ_k [n, k] L_{n-2k}(x, q) = x^n", params![("n", 0, 12, 8)], q_lucas_expansion),
        check("lam", Structural, "the functional with L(ℓ_n) = [n=0] for ℓ_n(x, q) = Σ_j (-1)^j q^{2C(j,2)} [n]/[n-j] [n-j, j] x^{n-2j} has the listed moments λ_n", params![("n", 0, 8, 8)], lambda_moments),
        check("eq96", Determinant, "det B_n(x, m, q) = w(n, x, m) = det H_m(x, n, q)", params![("n", 0, 6, 4), ("m", 0, 3, 2), ("x", 1, 4, 3)], theorem11),
        check("eq97", Structural, "w(n, x, 1) = [2n+x-1, n]", params![("n", 0, 10, 6), ("x", -2, 6, 4)], theorem11_single_column),
        check("eq98", Structural, "w(1, x, m) = q^{C(m,2)} [x+m-1, m] [x+2m-1]/[x+m-1]", params![("m", 0, 6, 4), ("x", 1, 6, 4)], theorem11_single_row),
        check("eq98s", Structural, "det([2i+x+1, i-j+1])_m = q^{C(m,2)} [x+m-1, m] [x+2m-1]/[x+m-1], and the almost-triangular lemma sum Σ_j (-1)^{n-j} [2n+x-1, n-j] q^{C(j,2)} [x+2j-1]/[x+j-1] [x+j-1, j] = [n=0]", params![("m", 0, 6, 4), ("x", 1, 6, 4), ("n", 0, 6, 4)], theorem11_row_lemma),
        check("eq99", Structural, "condensation for det B_n(x, m, q), and its balance [n-1](1-q^{n+2m-2+x}) - [n+m-1](1-q^{n+m-2+x}) + q^{n-1}[m](1-q^{x+m-1}) = 0", params![("n", 2, 6, 4), ("m", 1, 3, 2), ("x", 1, 4, 3)], b_condensation),
        check("eq100", Structural, "condensation for det H_m(x, n, q), and its balance q^n[m-1](1-q^{x+m-2}) - [m+n-1](1-q^{x+m+n-2}) + [n](1-q^{x+2m+n-3}) = 0", params![("n", 1, 6, 4), ("m", 2, 4, 3), ("x", 1, 4, 3)], h_condensation),
        check("eq101", Structural, "the q-Chebyshev recurrence gives u_n(x, q) = Σ_k (-1)^k q^{k^2} / ((-q; q)_k (-q^{n+1-k}; q)_k) [n-k, k] x^{n-2k}", params![("n", 0, 10, 7)], chebyshev_coefficients),
        check("eq102", Structural, "moments of the q-Chebyshev system are Andrews' q-Catalan numbers at even order and 0 at odd order", params![("n", 0, 6, 5)], andrews_moments),
        check("eq102d", Determinant, "det(q^{(i+1-j)^2} / ((-q; q)_{i+1-j} (-q^{i+j+k+1}; q)_{i+1-j}) [i+j+k, i+1-j]) = q^n (1+q^k)/(1+q^{n+k}) C_n^{(k)}(q) / ((-q; q)_n (-q^k; q)_n)", params![("n", 0, 5, 4), ("k", 1, 4, 3)], andrews_analogue),
        check("thm15a", Structural, "A_n(-m, q) v = 0 for n+1 ≤ m ≤ 2n-1, and v spans the null space", params![("n", 2, 5, 4), ("m", 3, 9, 7)], q_lucas_null_vector).within(null_range),
        check("thm15b", Structural, "B_n(-m, q) u = 0 for n ≤ m ≤ 2n-1, and u spans the null space", params![("n", 1, 5, 4), ("m", 1, 9, 7)], q_fibonacci_null_vector).within(null_range_closed),
        check("eq112", Sum, "Σ_j q^{C(i-j,2)} [i+j-X, i-j+1] q^{(x-j)(x+5-3j)/2} [X]/[X-j] [X-j, j] = 0 for X = 2x", params![("i", 0, 6, 4), ("x2", 2, 13, 9)], closure_check!(vanishing(VanishingSum::EvenRatio))),
        check("eq113", Sum, "the odd ratio sum with X+1 = 2x+1 vanishes", params![("i", 0, 6, 4), ("x2", 2, 13, 9)], closure_check!(vanishing(VanishingSum::OddRatio))),
        check("eq114", Sum, "the even inverse sum vanishes", params![("i", 0, 6, 4), ("x2", 2, 13, 9)], closure_check!(vanishing(VanishingSum::EvenInverse))),
        check("eq115", Sum, "the odd inverse sum vanishes", params![("i", 0, 6, 4), ("x2", 2, 13, 9)], closure_check!(vanishing(VanishingSum::OddInverse))),
        check("eqfinal", Determinant, "det(q^{C(i-j+m,2)} [i+x+m, i-j+m])_n = det([n-i+j+x+m-1, n-i+j])_m = q^{n C(m,2)} Π_j (q^{x+j+1}; q)_{m+n-1-2j} / (q^{j+1}; q)_{m+n-1-2j}", params![("n", 0, 5, 4), ("m", 0, 3, 3), ("x", 0, 4, 3)], final_remark),
        check("eq63", Determinant, "det(q^{j L_i} [L_i+A-j, L_i+j])_{i,j=1..n} equals its q-product formula for random decreasing L", params![("n", 1, 4, 3), ("seed", 0, 59, 19)], q_lemma3_random),
    ]);
}
