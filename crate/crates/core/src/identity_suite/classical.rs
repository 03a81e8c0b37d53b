//! Integer and rational identities: Catalan-type determinants, the sums
//! behind them, null vectors and product formulas.

use num_traits::Zero;

use crate::combinatorics::{ballot, catalan, catalan_power, central_binomial, gould};
use crate::exact_arith::{int, int_binomial as b, ExactInt, ExactRat};
use crate::linalg::{inverse_over_fractions, RingMatrix};
use crate::value::Value;

use super::closed_forms::{
    catalan_hankel_factorials, catalan_hankel_product, hilbert_det, hilbert_u, hilbert_v, krattenthaler_rhs,
    krattenthaler_v, krattenthaler_v_factorial, lemma3_rhs, lemma3_sample,
};
use super::families::{build_matrix, det_of, ratio_binomial, AnyMatrix};
use super::support::{delta, matrix_value, rat_of, ratv, rising, sides, sign, zeros, Sides};
use super::{check, params, CheckKind::*, EvalError, IdentityCheck, Params};

fn p2(n: i64, a: &str, av: i64) -> Params {
    Params::from([("n", n), (a, av)])
}

fn int_det(id: &str, p: &Params) -> Result<ExactRat, EvalError> {
    match det_of(id, p)? {
        Value::Int(v) => Ok(ratv(v)),
        Value::Rat(v) => Ok(v),
        other => Err(EvalError(format!("{id} determinant is not a rational number: {other}"))),
    }
}

fn int_matrix(id: &str, p: &Params) -> Result<RingMatrix<ExactRat>, EvalError> {
    match build_matrix(id, p)? {
        AnyMatrix::Int(m) => Ok(m.map(|x| ratv(x.clone()))),
        AnyMatrix::Rat(m) => Ok(m),
        _ => Err(EvalError(format!("{id} is not a rational matrix"))),
    }
}

/// `M·v` for a rational matrix and vector.
fn apply(m: &RingMatrix<ExactRat>, v: &[ExactRat]) -> Result<Value, EvalError> {
    Ok(Value::from(m.mul_vec(v)?))
}

fn catalan_pairs(p: &Params) -> Sides {
    let n = p.get("n")?;
    let c = catalan(n);
    sides(
        vec![det_of("eq1", p)?, det_of("eq1b", p)?],
        vec![Value::Int(c.clone()), Value::Int(c)],
    )
}

fn alternating_catalan_sum(p: &Params) -> Sides {
    let n = p.get("n")?;
    let s: ExactInt = (0..=n).map(|j| b(n + j, n - j) * catalan(j) * sign(n - j)).sum();
    sides(s, delta(n))
}

fn inverse_first_column(p: &Params) -> Sides {
    let n = p.size("n")?;
    let m = RingMatrix::square(n + 1, |i, j| b((i + j) as i64, i as i64 - j as i64));
    let inv = inverse_over_fractions(&m)?;
    let ni = n as i64;
    let cramer = int_det("eq1", &Params::from([("n", ni)]))? * ExactRat::from_integer(int(sign(ni)));
    let expected = ratv(catalan(ni) * sign(ni));
    sides(
        vec![inv.get(n, 0).clone(), cramer],
        vec![expected.clone(), expected],
    )
}

fn power_forms(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let c = catalan_power(n, k);
    let f1 = rat_of(int(k) * b(2 * n + k - 1, n), int(n + k))?;
    let f2 = rat_of(int(k) * b(2 * n + k, n), int(2 * n + k))?;
    let f3 = ratv(b(2 * n + k - 2, n) - b(2 * n + k - 2, n - 2));
    // Coefficient of z^n in c(z)^k by repeated convolution of C_j.
    let mut series: Vec<ExactInt> = (0..=n).map(delta).collect();
    for _ in 0..k {
        series = (0..=n)
            .map(|t| (0..=t).map(|i| &series[i as usize] * catalan(t - i)).sum())
            .collect();
    }
    let conv = ratv(series[n as usize].clone());
    let c = ratv(c);
    sides(vec![f1, f2, f3, conv], vec![c.clone(), c.clone(), c.clone(), c])
}

fn shifted_binomial_hankel(p: &Params) -> Sides {
    sides(det_of("eq65", p)?, det_of("cat_hankel", p)?)
}

fn shifted_binomial_products(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let l: Vec<i64> = (1..=n).map(|i| m - i).collect();
    let product = catalan_hankel_factorials(n, m)?;
    sides(
        vec![int_det("eq65", p)?, lemma3_rhs(&l, 2 * n)?],
        vec![product.clone(), product],
    )
}

fn catalan_hankel_closed_form(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let double = catalan_hankel_product(n, m);
    sides(
        vec![int_det("cat_hankel", p)?, catalan_hankel_factorials(n, m)?],
        vec![double.clone(), double],
    )
}

fn three_way_power_dets(p: &Params) -> Sides {
    let right = det_of("eq74c", p)?;
    sides(vec![det_of("eq74", p)?, det_of("eq9b", p)?], vec![right.clone(), right])
}

fn ratio_binomial_hankel(p: &Params) -> Sides {
    sides(det_of("eq10", p)?, det_of("eq10h", p)?)
}

fn unit_binomial_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq27c", p)?, b(n + k, k))
}

fn power_binomial_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq54", p)?, catalan_power(n, k))
}

fn power_column_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(det_of("eq55", p)?, catalan_power(n, k))
}

fn both_power_dets(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let c = Value::Int(catalan_power(n, k));
    sides(vec![det_of("eq54", p)?, det_of("eq55", p)?], vec![c.clone(), c])
}

fn power_pascal_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let s: ExactInt = (0..=n)
        .map(|j| b(n + k + j, n - j) * catalan_power(j, k + 1) * sign(n - j))
        .sum();
    // The same sum rewritten through (-1)^j binom(n+k+j, j) = binom(-n-k-1, j).
    let v: ExactInt = (0..=n).map(|j| b(-n - k - 1, j) * b(n + k + 1, n - j)).sum();
    let alt = rat_of(v * int(k + 1) * sign(n), int(n + k + 1))?;
    sides(vec![ratv(s), alt], vec![ratv(delta(n)), ratv(delta(n))])
}

fn power_pascal_sum_plain(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let s: ExactInt = (0..=n)
        .map(|j| b(n + k + j, n - j) * catalan_power(j, k + 1) * sign(n - j))
        .sum();
    sides(s, delta(n))
}

fn power_column_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let s: ExactInt = (0..=n)
        .map(|j| b(k + 1 + j, n - j) * catalan_power(j, k + 1) * sign(n - j))
        .sum();
    sides(s, delta(n))
}

fn catalan_triangle_inverse(p: &Params) -> Sides {
    let n = p.size("N")?;
    let inv = inverse_over_fractions(&match build_matrix("eq34", &Params::from([("n", n as i64)]))? {
        AnyMatrix::Int(m) => m,
        _ => unreachable!("integer family"),
    })?;
    let lhs = inv.map(|x| x.clone());
    let triangle = RingMatrix::square(n, |i, j| ratv(ballot(i as i64, j as i64)));
    let closed = RingMatrix::try_square(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if j > i {
            return Ok(ExactRat::zero());
        }
        rat_of(int(2 * j + 1) * b(2 * i, i - j), int(i + j + 1))
    })?;
    sides(
        vec![matrix_value(&lhs), matrix_value(&closed)],
        vec![matrix_value(&triangle), matrix_value(&triangle)],
    )
}

fn gould_det(p: &Params) -> Sides {
    let (n, x) = (p.get("n")?, p.get("x")?);
    sides(int_det("eq35", p)?, gould(n, x, 2))
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

fn lucas_vector(n: i64, m: i64) -> Result<Vec<ExactRat>, EvalError> {
    (0..n).map(|j| ratio_binomial(m, m - j, j)).collect()
}

fn fibonacci_vector(n: i64, m: i64) -> Vec<ExactRat> {
    (0..n).map(|j| ratv(b(m - j, j))).collect()
}

fn gould_null_vector(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = int_matrix("eq35", &Params::from([("n", n), ("x", -m)]))?;
    sides(apply(&a, &lucas_vector(n, m)?)?, zeros(n as usize))
}

fn gould_null_sum(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let sums: Vec<ExactRat> = (0..n)
        .map(|i| {
            (0..n).try_fold(ExactRat::zero(), |acc, j| {
                Ok::<_, EvalError>(acc + ratv(b(i + j - m, i + 1 - j)) * ratio_binomial(m, m - j, j)?)
            })
        })
        .collect::<Result<_, _>>()?;
    sides(sums, zeros(n as usize))
}

fn rothe(p: &Params) -> Sides {
    let (n, r, s, t) = (p.get("n")?, p.get("r")?, p.get("s")?, p.get("t")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratio_binomial(r, r + t * j, j)? * ratv(b(s + t * n - t * j, n - j));
    }
    sides(acc, b(r + s + t * n, n))
}

fn rothe_lucas_instance(p: &Params) -> Sides {
    let (i, x) = (p.get("i")?, p.get("x")?);
    let mut acc = ExactRat::zero();
    for j in 0..=i + 1 {
        acc += ratio_binomial(x, x - j, j)? * ratv(b(i + j - x, i - j + 1));
    }
    sides(acc, ExactInt::zero())
}

fn column_null_vector(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = int_matrix("eq39", p)?;
    sides(apply(&a, &lucas_vector(n, m)?)?, zeros(n as usize))
}

fn central_det(p: &Params) -> Sides {
    sides(int_det("eq43", p)?, central_binomial(p.get("n")?))
}

fn central_sum(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratio_binomial(2 * n, n + j, n - j)? * ratv(central_binomial(j) * sign(n - j));
    }
    sides(acc, delta(n))
}

fn lucas_power_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratio_binomial(2 * n + k, n + k + j, n - j)? * ratv(b(2 * j + k, j) * sign(n - j));
    }
    sides(acc, delta(n))
}

fn lucas_ratio_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(int_det("eq45", p)?, b(2 * n + k - 1, n))
}

fn lucas_ratio_det_x(p: &Params) -> Sides {
    let (n, x) = (p.get("n")?, p.get("x")?);
    sides(int_det("eq45x", p)?, b(2 * n - 1 + x, n))
}

fn lucas_column_det(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(int_det("eq46", p)?, b(2 * n + k - 1, n))
}

fn lucas_column_sum(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratio_binomial(n + k + 1, k + 1 + j, n - j)? * ratv(b(2 * j + k, j) * sign(n - j));
    }
    sides(acc, delta(n))
}

fn fibonacci_null_vector(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = int_matrix("eq45x", &Params::from([("n", n), ("x", -m)]))?;
    sides(apply(&a, &fibonacci_vector(n, m))?, zeros(n as usize))
}

fn rothe_fibonacci_instance(p: &Params) -> Sides {
    let (i, x) = (p.get("i")?, p.get("x")?);
    let mut acc = ExactRat::zero();
    for j in 0..=i + 1 {
        acc += ratio_binomial(2 * i + 1 - x, i + j - x, i - j + 1)? * ratv(b(x - j, j));
    }
    sides(acc, ExactInt::zero())
}

fn fibonacci_null_vector_shifted(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let a = int_matrix("eq49", p)?;
    sides(apply(&a, &fibonacci_vector(n, m))?, zeros(n as usize))
}

fn gould_difference(p: &Params) -> Sides {
    let (n, x) = (p.get("n")?, p.get("x")?);
    sides(gould(n, x - 1, 2) - gould(n, x - 2, 2), gould(n - 1, x, 2))
}

fn gould_expansion(p: &Params) -> Sides {
    let (n, x) = (p.get("n")?, p.get("x")?);
    let s: ExactRat = (0..=n).map(|j| ratv(b(n + j, n - j) * sign(n - j)) * gould(j, x, 2)).sum();
    sides(s, b(x - 1, n))
}

fn gould_expansion_k(p: &Params) -> Sides {
    let (n, k, x) = (p.get("n")?, p.get("k")?, p.get("x")?);
    let s: ExactRat = (0..=n)
        .map(|j| ratv(b(n + j + k - 1, n - j) * sign(n - j)) * gould(j, x, 2))
        .sum();
    sides(s, b(x - k, n))
}

fn vandermonde_row_operations(p: &Params) -> Sides {
    let n = p.size("n")?;
    let (m54, m55) = match (build_matrix("eq54", p)?, build_matrix("eq55", p)?) {
        (AnyMatrix::Int(a), AnyMatrix::Int(c)) => (a, c),
        _ => unreachable!("integer families"),
    };
    let pascal = RingMatrix::square(n, |i, l| b(i as i64, l as i64));
    let product = pascal.mul(&m55)?;
    sides(
        vec![matrix_value(&product), det_of("eq55", p)?],
        vec![matrix_value(&m54), det_of("eq54", p)?],
    )
}

fn power_column_sum_plain(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    let s: ExactInt = (0..=n).map(|j| b(j + k, n - j) * catalan_power(j, k) * sign(n - j)).sum();
    sides(s, delta(n))
}

fn general_gould_expansion(p: &Params) -> Sides {
    let (n, r, k, x) = (p.get("n")?, p.get("r")?, p.get("k")?, p.get("x")?);
    let s: ExactRat = (0..=n)
        .map(|j| ratv(b(n + (r - 1) * j + k - 1, n - j) * sign(n - j)) * gould(j, x, r))
        .sum();
    sides(s, b(x - k, n))
}

fn general_gould_at_k(p: &Params) -> Sides {
    let (n, r, k) = (p.get("n")?, p.get("r")?, p.get("k")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratv(b(n + (r - 1) * j + k - 1, n - j) * sign(n - j)) * ratio_binomial(k, k + r * j, j)?;
    }
    sides(acc, delta(n))
}

fn fuss_det(p: &Params) -> Sides {
    let (n, r, k) = (p.get("n")?, p.get("r")?, p.get("k")?);
    sides(int_det("eq58", p)?, ratio_binomial(k, r * n + k, n)?)
}

fn chen_sum(p: &Params) -> Sides {
    let (n, r, alpha, gamma) = (p.get("n")?, p.get("r")?, p.get("alpha")?, p.get("gamma")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratv(b((r - 1) * j + alpha, n - j) * sign(n - j)) * ratio_binomial(gamma, r * j + gamma, j)?;
    }
    sides(acc, b(alpha - gamma, n) * sign(n))
}

fn chen_diagonal(p: &Params) -> Sides {
    let (n, r, k) = (p.get("n")?, p.get("r")?, p.get("k")?);
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += ratv(b((r - 1) * j + k, n - j) * sign(n - j)) * ratio_binomial(k, k + r * j, j)?;
    }
    sides(acc, delta(n))
}

fn fuss_column_det(p: &Params) -> Sides {
    let (n, r, k) = (p.get("n")?, p.get("r")?, p.get("k")?);
    sides(int_det("eq61", p)?, ratio_binomial(k, r * n + k, n)?)
}

fn chu_vandermonde_domain(p: &Params) -> bool {
    match (p.get("n"), p.get("c")) {
        (Ok(n), Ok(c)) => c > 0 || c <= -n,
        _ => false,
    }
}

/// `Σ_j (a)_j (-n)_j / (j! (c)_j)`; needs `(c)_n != 0`.
fn hypergeometric_2f1(a: i64, n: i64, c: i64) -> Result<ExactRat, EvalError> {
    let mut acc = ExactRat::zero();
    for j in 0..=n {
        acc += rat_of(rising(a, j) * rising(-n, j), crate::exact_arith::factorial(j as u64) * rising(c, j))?;
    }
    Ok(acc)
}

fn chu_vandermonde(p: &Params) -> Sides {
    let (n, a, c) = (p.get("n")?, p.get("a")?, p.get("c")?);
    sides(hypergeometric_2f1(a, n, c)?, rat_of(rising(c - a, n), rising(c, n))?)
}

fn chu_vandermonde_chain(p: &Params) -> Sides {
    let n = p.get("n")?;
    let original: ExactInt = (0..=n).map(|j| b(n + j, n - j) * catalan(j) * sign(n - j)).sum();
    let reversed: ExactInt = (0..=n).map(|j| b(2 * n - j, j) * catalan(n - j) * sign(j)).sum();
    let c = ratv(catalan(n));
    let series = c.clone() * hypergeometric_2f1(-n - 1, n, -2 * n)?;
    let closed = c * rat_of(rising(1 - n, n), rising(-2 * n, n))?;
    let d = ratv(delta(n));
    sides(
        vec![ratv(original), ratv(reversed), series, closed],
        vec![d.clone(), d.clone(), d.clone(), d],
    )
}

fn alexeyev(p: &Params) -> Sides {
    let n = p.get("n")?;
    let terms: Vec<ExactInt> = (0..=n).map(|k| catalan(k) * b(n + k, n - k)).collect();
    let rewritten: Vec<ExactRat> = (0..=n)
        .map(|k| rat_of(b(n + k, k) * b(n + 1, n - k), int(n + 1)))
        .collect::<Result<_, _>>()?;
    let vander: ExactInt = (0..=n).map(|k| b(-n - 1, k) * b(n + 1, n - k)).sum();
    let total = rat_of(vander * sign(n), int(n + 1))?;
    sides(
        vec![Value::from(terms), Value::Rat(total)],
        vec![Value::from(rewritten), Value::Int(delta(n))],
    )
}

fn lemma3_random(p: &Params) -> Sides {
    let (n, seed) = (p.size("n")?, p.get("seed")?);
    let (l, a) = lemma3_sample(seed as u64, n);
    sides(int_det("eq64", p)?, lemma3_rhs(&l, a)?)
}

fn hilbert_ratio(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let top = int_det("eq72", p)?;
    let bottom = int_det("eq72", &p2(0, "m", m))?;
    sides(int_det("eq72l", &Params::from([("n", n), ("m", m)]))?, top / bottom)
}

fn hilbert_ratio_products(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    let v = hilbert_v(n, m)?;
    sides(vec![int_det("eq72l", p)?, hilbert_u(n, m)?], vec![v.clone(), v])
}

fn hilbert_cauchy(p: &Params) -> Sides {
    let (n, m) = (p.get("n")?, p.get("m")?);
    sides(int_det("eq72", p)?, hilbert_det(n, m)?)
}

fn power_shift_dets(p: &Params) -> Sides {
    let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
    let target = int_det("eq74c", p)?;
    sides(
        vec![int_det("eq74", p)?, int_det("eq74b", p)?, krattenthaler_rhs(n, m, k)?],
        vec![target.clone(), target.clone(), target],
    )
}

fn product_ratio_forms(p: &Params) -> Sides {
    let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
    let w = |n: i64| int_det("eq74b", &Params::from([("n", n), ("m", m), ("k", k)]));
    let v = krattenthaler_v(n, m, k)?;
    sides(
        vec![krattenthaler_v_factorial(n, m, k)?, w(n)? / w(n - 1)?],
        vec![v.clone(), v],
    )
}

fn power_condensation(p: &Params) -> Sides {
    let (n, m, k) = (p.get("n")?, p.get("m")?, p.get("k")?);
    let mm = |m: i64, n: i64, k: i64| int_det("eq74c", &Params::from([("n", n), ("m", m), ("k", k)]));
    let lhs = mm(m, n, k)? * mm(m - 2, n, k + 2)?;
    let rhs = mm(m - 1, n, k + 2)? * mm(m - 1, n, k)? - mm(m - 1, n + 1, k)? * mm(m - 1, n - 1, k + 2)?;
    sides(lhs, rhs)
}

fn power_recurrence(p: &Params) -> Sides {
    let (n, k) = (p.get("n")?, p.get("k")?);
    sides(catalan_power(n, k), catalan_power(n, k - 1) + catalan_power(n - 1, k + 1))
}

pub(super) fn register(out: &mut Vec<IdentityCheck>) {
    out.extend([
        check("eq1", Determinant, "det(binom(i+j+1, 2j)) = det(binom(i+j+1, i-j+1)) = C_n", params![("n", 0, 40, 20)], catalan_pairs),
        check("eq2", Sum, "Σ_j (-1)^{n-j} binom(n+j, n-j) C_j = [n=0]", params![("n", 0, 60, 30)], alternating_catalan_sum),
        check("eq2b", Structural, "first column of the inverse of (binom(i+j, i-j)) is (-1)^n C_n, also via Cramer's rule", params![("n", 0, 20, 10)], inverse_first_column),
        check("eq3", Determinant, "det(binom(i+j+k, i-j+1)) = det(binom(j+k, i-j+1)) = C_n^{(k)}", params![("n", 0, 20, 12), ("k", 1, 8, 5)], both_power_dets),
        check("eq4", Structural, "four expressions for C_n^{(k)}: two quotients, a binomial difference, and the k-fold Catalan convolution", params![("n", 0, 30, 15), ("k", 1, 10, 5)], power_forms),
        check("eq5", Determinant, "det(binom(i+j+m, i-j+m))_n = det(C_{n+i+j})_m", params![("n", 0, 12, 8), ("m", 0, 6, 4)], shifted_binomial_hankel),
        check("eq65", Determinant, "det(binom(i+j+m, i-j+m))_n = det(C_{n+i+j})_m", params![("n", 0, 12, 8), ("m", 0, 6, 4)], shifted_binomial_hankel),
        check("eq65p", Determinant, "det(binom(i+j+m, i-j+m))_n equals the factorial product, also via the general binomial lemma with L_i = m-i, A = 2n", params![("n", 0, 12, 8), ("m", 0, 6, 4)], shifted_binomial_products),
        check("eq67", Determinant, "det(C_{n+i+j})_m = Π_{j<n} Π_{i≤j} (2m+i+j)/(i+j), also in factorial form", params![("n", 0, 12, 8), ("m", 0, 6, 4)], catalan_hankel_closed_form),
        check("eq9", Determinant, "det(binom(i+j+k+m, i-j+m)) = det(binom(j+k+m, i-j+m)) = det(C^{(2i+k+1)}_{n-i+j})_m", params![("n", 0, 6, 5), ("m", 0, 3, 3), ("k", 0, 3, 2)], three_way_power_dets),
        check("eq10", Determinant, "det((x+2i-1+2m)/(x+i+j+m-1) binom(x+i+j+m-1, i-j+m))_n = det(binom(2n+2j+x-1, n-i+j))_m", params![("n", 0, 6, 4), ("m", 0, 3, 2), ("x", 1, 4, 3)], ratio_binomial_hankel),
        check("eq27c", Determinant, "det(binom(i+1+k, j+k)) = binom(n+k, k)", params![("n", 0, 12, 8), ("k", 0, 6, 4)], unit_binomial_det),
        check("eq29", Structural, "Fibonacci moment table: c(2n+k, k) = C_n^{(k+1)}, other entries 0", params![("n", 0, 14, 10)], super::orthogonal::fibonacci_moment_table),
        check("eq30", Structural, "C_n^{(k)} = C_n^{(k-1)} + C_{n-1}^{(k+1)}", params![("n", 0, 12, 12), ("k", 1, 12, 12)], power_recurrence),
        check("eq31", Sum, "Σ_j (-1)^{n-j} binom(n+k+j, n-j) C_j^{(k+1)} = [n=0]", params![("n", 0, 20, 12), ("k", 0, 8, 5)], power_pascal_sum_plain),
        check("eq31b", Sum, "the same sum through binom(-n-k-1, j) and Vandermonde's identity", params![("n", 0, 20, 12), ("k", 0, 8, 5)], power_pascal_sum),
        check("eq32", Determinant, "det(binom(i+j+k, i-j+1)) = C_n^{(k)}", params![("n", 0, 20, 12), ("k", 1, 8, 5)], power_binomial_det),
        check("eq33", Determinant, "det(binom(j+k, i-j+1)) = C_n^{(k)}", params![("n", 0, 20, 12), ("k", 1, 8, 5)], power_column_det),
        check("eq33s", Sum, "Σ_j (-1)^{n-j} binom(k+1+j, n-j) C_j^{(k+1)} = [n=0]", params![("n", 0, 20, 12), ("k", 0, 8, 5)], power_column_sum),
        check("eq34", Structural, "inverse of ((-1)^{i-j} binom(i+j, i-j)) is the Catalan triangle (C^{(2j+1)}_{i-j}) = ((2j+1)/(i+j+1) binom(2i, i-j))", params![("N", 0, 12, 8)], catalan_triangle_inverse),
        check("eq35", Determinant, "det(binom(x+i+j, i-j+1)) = G_n(x)", params![("n", 0, 8, 6), ("x", -16, 8, 8)], gould_det),
        check("eq36", Structural, "A_n(-m) v = 0 with v_j = m/(m-j) binom(m-j, j) for n+1 ≤ m ≤ 2n-1", params![("n", 1, 8, 6), ("m", 2, 15, 11)], gould_null_vector).within(null_range),
        check("eq37", Sum, "Σ_j binom(i+j-m, i+1-j) m/(m-j) binom(m-j, j) = 0 for i < n, n+1 ≤ m ≤ 2n-1", params![("n", 1, 8, 6), ("m", 2, 15, 11)], gould_null_sum).within(null_range),
        check("eq37r", Sum, "Σ_{j≤i+1} x/(x-j) binom(x-j, j) binom(i+j-x, i-j+1) = 0 for every i and integer x", params![("i", 0, 8, 6), ("x", -10, 10, 6)], rothe_lucas_instance),
        check("eq38", Sum, "Σ_j r/(r+tj) binom(r+tj, j) binom(s+tn-tj, n-j) = binom(r+s+tn, n)", params![("n", 0, 6, 4), ("r", -4, 6, 4), ("s", -4, 6, 4), ("t", -3, 3, 3)], rothe),
        check("eq39", Structural, "(binom(j-m, i-j+1)) v = 0 for n+1 ≤ m ≤ 2n-1", params![("n", 1, 8, 6), ("m", 2, 15, 11)], column_null_vector).within(null_range),
        check("eq41", Structural, "Lucas moment table: c(2n+k, k) = binom(2n+k, n), other entries 0", params![("n", 0, 14, 10)], super::orthogonal::lucas_moment_table),
        check("eq42", Structural, "Σ_k binom(n, k) L_{n-2k}(x) = x^n", params![("n", 0, 16, 10)], super::orthogonal::lucas_expansion),
        check("eq43", Determinant, "det((2i+2)/(i+j+1) binom(i+j+1, i-j+1)) = binom(2n, n)", params![("n", 0, 12, 8)], central_det),
        check("eq43s", Sum, "Σ_j (-1)^{n-j} 2n/(n+j) binom(n+j, n-j) binom(2j, j) = [n=0]", params![("n", 0, 30, 15)], central_sum),
        check("eq44", Sum, "Σ_j (-1)^{n-j} (2n+k)/(n+k+j) binom(n+k+j, n-j) binom(2j+k, j) = [n=0]", params![("n", 0, 20, 10), ("k", 0, 8, 5)], lucas_power_sum),
        check("eq45", Determinant, "det((2i+k+1)/(i+j+k) binom(i+j+k, i-j+1)) = binom(2n+k-1, n)", params![("n", 0, 8, 6), ("k", 0, 6, 4)], lucas_ratio_det),
        check("eq45x", Determinant, "det B_n(x) = binom(2n-1+x, n) for integer x", params![("n", 0, 8, 6), ("x", -16, 8, 8)], lucas_ratio_det_x),
        check("eq46", Determinant, "det((i+k+1)/(j+k) binom(j+k, i-j+1)) = binom(2n+k-1, n)", params![("n", 0, 8, 6), ("k", 1, 6, 4)], lucas_column_det),
        check("eq46s", Sum, "Σ_j (-1)^{n-j} (n+k+1)/(k+1+j) binom(k+1+j, n-j) binom(2j+k, j) = [n=0]", params![("n", 0, 20, 10), ("k", 0, 8, 5)], lucas_column_sum),
        check("eq47", Structural, "B_n(-m) u = 0 with u_j = binom(m-j, j) for n ≤ m ≤ 2n-1", params![("n", 1, 8, 6), ("m", 1, 15, 11)], fibonacci_null_vector).within(null_range_closed),
        check("eq48", Sum, "Σ_{j≤i+1} (2i+1-x)/(i+j-x) binom(i+j-x, i-j+1) binom(x-j, j) = 0 for every i and integer x", params![("i", 0, 8, 6), ("x", -10, 10, 6)], rothe_fibonacci_instance),
        check("eq49", Structural, "((i+1-m)/(j-m) binom(i+j-m, i-j+1)) u = 0 for n ≤ m ≤ 2n-1", params![("n", 1, 8, 6), ("m", 1, 15, 11)], fibonacci_null_vector_shifted).within(null_range_closed),
        check("eq51", Structural, "G_n(x-1) - G_n(x-2) = G_{n-1}(x)", params![("n", 1, 12, 8), ("x", -10, 10, 6)], gould_difference),
        check("eq52", Sum, "binom(x-1, n) = Σ_j (-1)^{n-j} binom(n+j, n-j) G_j(x)", params![("n", 0, 10, 6), ("x", -10, 10, 6)], gould_expansion),
        check("eq53", Sum, "binom(x-k, n) = Σ_j (-1)^{n-j} binom(n+j+k-1, n-j) G_j(x)", params![("n", 0, 8, 5), ("k", 0, 5, 3), ("x", -8, 8, 4)], gould_expansion_k),
        check("eq54", Determinant, "det(binom(i+j+k, i-j+1)) = C_n^{(k)}", params![("n", 0, 20, 12), ("k", 1, 8, 5)], power_binomial_det),
        check("eq54v", Structural, "(binom(i, l)) · (binom(j+k, i-j+1)) = (binom(i+j+k, i-j+1)) by Vandermonde's identity, so both determinants agree", params![("n", 0, 10, 8), ("k", 1, 6, 6)], vandermonde_row_operations),
        check("eq55", Determinant, "det(binom(j+k, i-j+1)) = C_n^{(k)}", params![("n", 0, 20, 12), ("k", 1, 8, 5)], power_column_det),
        check("eq55s", Sum, "Σ_j (-1)^{n-j} binom(j+k, n-j) C_j^{(k)} = [n=0]", params![("n", 0, 20, 12), ("k", 1, 8, 5)], power_column_sum_plain),
        check("eq56", Sum, "binom(x-k, n) = Σ_j (-1)^{n-j} binom(n+(r-1)j+k-1, n-j) G_j(x, r)", params![("n", 0, 7, 4), ("r", 1, 4, 3), ("k", 0, 5, 3), ("x", -6, 6, 3)], general_gould_expansion),
        check("eq57", Sum, "Σ_j (-1)^{n-j} binom(n+(r-1)j+k-1, n-j) k/(k+rj) binom(k+rj, j) = [n=0]", params![("n", 0, 10, 6), ("r", 1, 4, 3), ("k", 1, 5, 3)], general_gould_at_k),
        check("eq58", Determinant, "det(binom(i+(r-1)j+k, i-j+1)) = k/(rn+k) binom(rn+k, n)", params![("n", 0, 8, 6), ("r", 1, 4, 3), ("k", 1, 5, 3)], fuss_det),
        check("eq59", Sum, "Σ_j (-1)^{n-j} binom((r-1)j+α, n-j) γ/(rj+γ) binom(rj+γ, j) = (-1)^n binom(α-γ, n)", params![("n", 0, 6, 4), ("r", 1, 4, 3), ("alpha", -3, 5, 3), ("gamma", -3, 5, 3)], chen_sum),
        check("eq60", Sum, "Σ_j (-1)^{n-j} binom((r-1)j+k, n-j) k/(k+rj) binom(k+rj, j) = [n=0]", params![("n", 0, 10, 6), ("r", 1, 4, 3), ("k", 1, 5, 3)], chen_diagonal),
        check("eq61", Determinant, "det(binom((r-1)j+k, i-j+1)) = k/(rn+k) binom(rn+k, n)", params![("n", 0, 8, 6), ("r", 1, 4, 3), ("k", 1, 5, 3)], fuss_column_det),
        check("eq62", Sum, "Chu-Vandermonde: Σ_j (a)_j (-n)_j / (j! (c)_j) = (c-a)_n / (c)_n", params![("n", 0, 8, 5), ("a", -6, 6, 4), ("c", -8, 8, 4)], chu_vandermonde).within(chu_vandermonde_domain),
        check("eq62c", Sum, "the alternating Catalan sum, reversed, as C_n times a terminating 2F1, and its evaluation C_n (1-n)_n/(-2n)_n, all equal [n=0]", params![("n", 0, 12, 8)], chu_vandermonde_chain),
        check("eq62b", Sum, "C_k binom(n+k, n-k) = binom(n+k, k) binom(n+1, n-k)/(n+1) and the resulting Vandermonde sum is [n=0]", params![("n", 0, 16, 10)], alexeyev),
        check("eq64", Determinant, "det(binom(L_i+A-j, L_i+j))_{i,j=1..n} equals the product formula, for random decreasing L", params![("n", 1, 5, 4), ("seed", 0, 199, 49)], lemma3_random),
        check("eq72", Determinant, "det(binom(i+m, j) binom(i+m+j, j)/binom(2i+2m, i+m))_n = det(1/(n+i+j+1))_m / det(1/(i+j+1))_m", params![("n", 0, 8, 6), ("m", 0, 5, 4)], hilbert_ratio),
        check("eq72p", Determinant, "the same determinant equals u(n, m) = v(n, m)", params![("n", 0, 8, 6), ("m", 0, 5, 4)], hilbert_ratio_products),
        check("eq73", Determinant, "det(1/(n+i+j+1))_m = Π_{j<m} j! j! (n+j)! / (n+m+j)!", params![("n", 0, 8, 6), ("m", 0, 5, 4)], hilbert_cauchy),
        check("eq74", Determinant, "det(binom(i+j+k+m, i-j+m)) = det(binom(2n+m+k-i-j, j-i+m))_{1..n} = Π_{j≤n} v(j, m, k) = det(C^{(2i+k+1)}_{n-i+j})_m", params![("n", 0, 10, 6), ("m", 0, 4, 3), ("k", 0, 4, 3)], power_shift_dets),
        check("eq75", Structural, "v(n, m, k) in factorial form, in product form, and as a ratio of consecutive determinants", params![("n", 1, 8, 6), ("m", 0, 4, 3), ("k", 0, 4, 3)], product_ratio_forms),
        check("eq76", Structural, "condensation recurrence M(m,n,k) M(m-2,n,k+2) = M(m-1,n,k+2) M(m-1,n,k) - M(m-1,n+1,k) M(m-1,n-1,k+2)", params![("n", 1, 6, 4), ("m", 2, 4, 3), ("k", 0, 4, 2)], power_condensation),
    ]);
}
