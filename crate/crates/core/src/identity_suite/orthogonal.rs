//! Checks of the orthogonal-polynomial machinery: moments, the coefficient
//! tables `c(n, k)`, almost-triangular determinants and Hankel quotients.

use crate::combinatorics::{catalan, catalan_power, central_binomial, lucas_poly, q_catalan};
use crate::exact_arith::{int_binomial as b, ExactInt, ExactRat};
use crate::linalg::{det_bareiss, det_by_column_elimination, det_gauss, RingMatrix};
use crate::orthopoly::{
    favard_coeffs, hankel, hankel_shift_sides, moments, orthogonal_from_moments, pair, recover_recurrence,
    tyson_sides, FavardSystem, MomentTable, OrthoError, PolyCoeffTable,
};
use crate::qseries::{q_binomial, q_pow_binom2, QPoly};
use crate::value::Value;
use crate::{Field, HasFractionField, Ring};
use std::sync::OnceLock;

use super::families::{build_matrix, AnyMatrix};
use super::support::{sides, Sides};
use super::{check, params, CheckKind::*, EvalError, IdentityCheck, Params};

/// Runs `$body` with `$sys` bound to the system selected by `$idx`:
/// 0 Fibonacci, 1 Lucas variant, 2 Catalan, 3 Carlitz, 4 the shifted-power
/// q-system with moments `q^{C(n,2)}`.
macro_rules! with_system {
    ($idx:expr, $sys:ident => $body:expr) => {
        match $idx {
            0 => {
                let $sys = FavardSystem::fibonacci();
                $body
            }
            1 => {
                let $sys = FavardSystem::lucas_variant();
                $body
            }
            2 => {
                let $sys = FavardSystem::catalan();
                $body
            }
            3 => {
                let $sys = FavardSystem::carlitz();
                $body
            }
            4 => {
                let $sys = q_shifted_power_system()?.clone();
                $body
            }
            other => Err(EvalError(format!("no system with index {other}"))),
        }
    };
}

/// The recovered shifted-power q-system, long enough for every grid here.
fn q_shifted_power_system() -> Result<&'static FavardSystem<QPoly>, EvalError> {
    static SYSTEM: OnceLock<Result<FavardSystem<QPoly>, OrthoError>> = OnceLock::new();
    SYSTEM
        .get_or_init(|| FavardSystem::q_shifted_power(40))
        .as_ref()
        .map_err(|e| EvalError(e.to_string()))
}

fn vector<R: Into<Value>>(items: Vec<R>) -> Value {
    Value::from(items)
}

/// `x^n` as a dense coefficient vector.
fn power<R: Ring>(n: usize) -> Vec<R> {
    (0..=n).map(|j| if j == n { R::one() } else { R::zero() }).collect()
}

fn indicator<R: Ring>(n: usize) -> R {
    if n == 0 {
        R::one()
    } else {
        R::zero()
    }
}

fn poly_mul<R: Ring>(a: &[R], c: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + c.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in c.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// The bordered Hankel determinant for `p_n`, expanded along its last
/// column and divided by `det(a(i+j))_n`.
fn bordered_hankel<F: Field>(mom: &[F], n: usize) -> Result<Vec<F>, EvalError> {
    let base = det_gauss(&hankel(mom, 0, n))?;
    let inv = base.inv().ok_or_else(|| EvalError(format!("Hankel determinant of order {n} vanishes")))?;
    (0..=n)
        .map(|j| {
            let minor = RingMatrix::from_fn(n, n, |r, c| {
                let row = if r < j { r } else { r + 1 };
                mom[row + c].clone()
            });
            let cof = det_gauss(&minor)?;
            let cof = if (j + n).is_multiple_of(2) { cof } else { cof.neg() };
            Ok(cof.mul(&inv))
        })
        .collect()
}

fn hankel_formula<R>(sys: &FavardSystem<R>, n: usize) -> Sides
where
    R: HasFractionField + Into<Value>,
    R::Frac: Into<Value>,
{
    let mom: Vec<R::Frac> = moments(sys, 2 * n).moments().iter().map(|m| m.to_frac()).collect();
    let favard: Vec<R::Frac> = favard_coeffs(sys, n).row(n).iter().map(|a| a.to_frac()).collect();
    let bordered = bordered_hankel(&mom, n)?;
    let solved = orthogonal_from_moments(&mom, n)?.row(n).to_vec();
    sides(
        vec![vector(bordered), vector(solved)],
        vec![vector(favard.clone()), vector(favard)],
    )
}

fn functional_vanishes<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize) -> Sides {
    let table = favard_coeffs(sys, n);
    let mom = moments(sys, n).moments();
    let lhs: Vec<R> = (0..=n).map(|k| pair(table.row(k), &mom)).collect();
    sides(vector(lhs), vector((0..=n).map(indicator::<R>).collect()))
}

fn expansion_of_powers<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize) -> Sides {
    let table = favard_coeffs(sys, n);
    let c = moments(sys, n);
    let mut lhs = vec![R::zero(); n + 1];
    for k in 0..=n {
        let ck = c.c(n, k);
        for (j, a) in table.row(k).iter().enumerate() {
            lhs[j] = lhs[j].add(&ck.mul(a));
        }
    }
    sides(vector(lhs), vector(power::<R>(n)))
}

/// Λ(x^n p_k) = c(n, k) Λ(p_k^2), written without division.
fn table_as_quotient<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize) -> Sides {
    let table = favard_coeffs(sys, n);
    let c = moments(sys, 2 * n);
    let mom = c.moments();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 0..=n {
        let pk = table.row(k);
        let norm = pair(&poly_mul(pk, pk), &mom);
        let mut shifted = vec![R::zero(); n];
        shifted.extend(pk.iter().cloned());
        lhs.push(pair(&shifted, &mom));
        rhs.push(c.c(n, k).mul(&norm));
    }
    sides(vector(lhs), vector(rhs))
}

fn orthogonality_sum<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize, k: usize) -> Sides {
    let table = favard_coeffs(sys, n + k);
    let c = moments(sys, n + k);
    let mut acc = R::zero();
    for j in 0..=n {
        let term = table.p(n + k, j + k).mul(&c.c(j + k, k));
        acc = if (n - j).is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
    }
    sides(acc, indicator::<R>(n))
}

fn shifted_coefficient_det<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize, k: usize) -> Sides {
    let table = favard_coeffs(sys, n + k + 1);
    let c = moments(sys, n + k);
    let m = RingMatrix::square(n, |i, j| table.p(i + k + 1, j + k));
    sides(det_bareiss(&m)?, c.c(n + k, k))
}

fn tyson<R: Ring + Into<Value>>(sys: &FavardSystem<R>, n: usize, m: usize) -> Sides {
    let o = tyson_sides(sys, n, m)?;
    sides(o.lhs, o.rhs)
}

fn shift_formulas<R: Ring + Into<Value>>(sys: &FavardSystem<R>, m: usize, second: bool) -> Sides {
    let o = hankel_shift_sides(sys, m)?;
    let t = if second { o.second } else { o.first };
    sides(t.lhs, t.rhs)
}

fn system_and_n(p: &Params) -> Result<(i64, usize), EvalError> {
    Ok((p.get("sys")?, p.size("n")?))
}

fn hankel_formula_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    with_system!(s, sys => hankel_formula(&sys, n))
}

fn functional_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    with_system!(s, sys => functional_vanishes(&sys, n))
}

fn expansion_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    with_system!(s, sys => expansion_of_powers(&sys, n))
}

fn quotient_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    with_system!(s, sys => table_as_quotient(&sys, n))
}

fn orthogonality_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    let k = p.size("k")?;
    with_system!(s, sys => orthogonality_sum(&sys, n, k))
}

fn coefficient_det_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    let k = p.size("k")?;
    with_system!(s, sys => shifted_coefficient_det(&sys, n, k))
}

fn tyson_check(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    let m = p.size("m")?;
    with_system!(s, sys => tyson(&sys, n, m))
}

fn tyson_random_check(p: &Params) -> Sides {
    let (n, m, seed) = (p.size("n")?, p.size("m")?, p.get("seed")?);
    tyson(&FavardSystem::random(seed as u64, n + 2 * m + 2), n, m)
}

fn first_shift_check(p: &Params) -> Sides {
    let (s, m) = (p.get("sys")?, p.size("m")?);
    with_system!(s, sys => shift_formulas(&sys, m, false))
}

fn second_shift_check(p: &Params) -> Sides {
    let (s, m) = (p.get("sys")?, p.size("m")?);
    with_system!(s, sys => shift_formulas(&sys, m, true))
}

fn q_power_rows(n: i64) -> Vec<Vec<QPoly>> {
    (0..=n)
        .map(|r| {
            (0..=r)
                .map(|j| {
                    let c = q_binomial(r, j).shift2(2 * (r - 1) * (r - j));
                    if (r - j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect()
        })
        .collect()
}

/// The q-analogue of `(x-1)^n`: the recurrence fitted to the explicit
/// coefficients reproduces them, its moments are `q^{C(n,2)}` and its
/// table is `c(n, k) = q^{C(n,2)-C(k,2)} [n, k]`.
fn q_shifted_power_check(p: &Params) -> Sides {
    let n = p.get("n")?;
    let rows = q_power_rows(n.max(1));
    let table = PolyCoeffTable::from_signed_rows(rows.clone());
    let (s, t) = recover_recurrence(&table)?;
    let sys = FavardSystem::from_sequences("q-shifted-power", s, t);
    let rebuilt: Vec<Value> = (0..=n as usize).map(|r| vector(favard_coeffs(&sys, r).row(r).to_vec())).collect();
    let expected_rows: Vec<Value> = rows.into_iter().take(n as usize + 1).map(vector).collect();
    let c: MomentTable<QPoly> = moments(&sys, n as usize);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..=n {
        for k in 0..=r {
            lhs.push(c.c(r as usize, k as usize));
            rhs.push(q_binomial(r, k).shift2(r * (r - 1) - k * (k - 1)));
        }
    }
    let mom: Vec<QPoly> = (0..=n).map(q_pow_binom2).collect();
    sides(
        vec![Value::Vector(rebuilt), vector(c.moments()), vector(lhs)],
        vec![Value::Vector(expected_rows), vector(mom), vector(rhs)],
    )
}

/// The almost-triangular lemma: a matrix `T_{n,1}` whose rows satisfy the
/// alternating moment sum has determinant `M_n`. Both the generic engine
/// and the column elimination argument are compared with the
/// telescoping product `Π M_{i+1}/M_i`, and the hypothesis itself is
/// checked row by row.
fn almost_triangular<F: Field + Into<Value>>(t: &RingMatrix<F>, mom: &[F]) -> Sides {
    let n = t.rows() - 1;
    let tn = t.leading(n);
    let product = (0..n).try_fold(F::one(), |acc, i| {
        let inv = mom[i].inv().ok_or_else(|| EvalError(format!("moment {i} vanishes")))?;
        Ok::<_, EvalError>(acc.mul(&mom[i + 1]).mul(&inv))
    })?;
    // Row N of T is row N-1 of T_{n+1,1}; row 0 is the unit vector.
    let row = |r: usize, j: usize| -> F {
        if r == 0 {
            indicator::<F>(j)
        } else {
            t.get(r - 1, j).clone()
        }
    };
    let hypothesis: Vec<F> = (0..=n)
        .map(|r| {
            (0..=r).fold(F::zero(), |acc, j| {
                let term = row(r, j).mul(&mom[j]);
                if (r - j) % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                }
            })
        })
        .collect();
    let deltas: Vec<F> = (0..=n).map(indicator::<F>).collect();
    sides(
        vec![det_gauss(&tn)?.into(), det_by_column_elimination(&tn, mom)?.into(), vector(hypothesis)],
        vec![product.clone().into(), product.into(), vector(deltas)],
    )
}

fn lemma_one(p: &Params) -> Sides {
    let (fam, n, k) = (p.get("fam")?, p.get("n")?, p.get("k")?);
    let size = Params::from([("n", n + 1), ("k", k)]);
    match fam {
        0 => {
            let AnyMatrix::Int(t) = build_matrix("eq1", &size)? else { unreachable!("integer family") };
            let mom: Vec<ExactRat> = (0..=n).map(|j| catalan(j).to_frac()).collect();
            almost_triangular(&t.to_fraction_field(), &mom)
        }
        1 => {
            let AnyMatrix::Int(t) = build_matrix("eq54", &size)? else { unreachable!("integer family") };
            let mom: Vec<ExactRat> = (0..=n).map(|j| catalan_power(j, k).to_frac()).collect();
            almost_triangular(&t.to_fraction_field(), &mom)
        }
        2 => {
            let t = match build_matrix("eq43", &size)? {
                AnyMatrix::Rat(t) => t,
                AnyMatrix::Int(t) => t.to_fraction_field(),
                _ => unreachable!("rational family"),
            };
            let mom: Vec<ExactRat> = (0..=n).map(|j| central_binomial(j).to_frac()).collect();
            almost_triangular(&t, &mom)
        }
        3 => {
            let AnyMatrix::Poly(t) = build_matrix("eq83", &size)? else { unreachable!("polynomial family") };
            let mom: Vec<_> = (0..=n).map(|j| q_catalan(j).to_frac()).collect();
            almost_triangular(&t.to_fraction_field(), &mom)
        }
        other => Err(EvalError(format!("no almost-triangular family with index {other}"))),
    }
}

fn moment_table(sys: &FavardSystem<ExactInt>, n: usize, entry: impl Fn(i64, i64) -> ExactInt) -> Sides {
    let c = moments(sys, n);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..=n as i64 {
        for k in 0..=r {
            lhs.push(c.c(r as usize, k as usize));
            rhs.push(if (r - k) % 2 == 0 { entry((r - k) / 2, k) } else { ExactInt::from(0) });
        }
    }
    sides(vector(lhs), vector(rhs))
}

pub(super) fn fibonacci_moment_table(p: &Params) -> Sides {
    moment_table(&FavardSystem::fibonacci(), p.size("n")?, |j, k| catalan_power(j, k + 1))
}

pub(super) fn lucas_moment_table(p: &Params) -> Sides {
    moment_table(&FavardSystem::lucas_variant(), p.size("n")?, |j, k| b(2 * j + k, j))
}

pub(super) fn lucas_expansion(p: &Params) -> Sides {
    let n = p.get("n")?;
    let mut acc = vec![ExactInt::from(0); n as usize + 1];
    for k in 0..=n / 2 {
        for (e, a) in lucas_poly(n - 2 * k).iter().enumerate() {
            acc[e] += b(n, k) * a;
        }
    }
    let favard = favard_coeffs(&FavardSystem::lucas_variant(), n as usize);
    sides(
        vec![vector(acc), vector(lucas_poly(n))],
        vec![vector(power::<ExactInt>(n as usize)), vector(favard.row(n as usize).to_vec())],
    )
}

fn known_moments(p: &Params) -> Sides {
    let (s, n) = system_and_n(p)?;
    let n64 = n as i64;
    let aerated = |f: &dyn Fn(i64) -> ExactInt| -> Vec<ExactInt> {
        (0..=n64).map(|j| if j % 2 == 0 { f(j / 2) } else { ExactInt::from(0) }).collect()
    };
    match s {
        0 => sides(vector(moments(&FavardSystem::fibonacci(), n).moments()), vector(aerated(&catalan))),
        1 => sides(
            vector(moments(&FavardSystem::lucas_variant(), n).moments()),
            vector(aerated(&central_binomial)),
        ),
        2 => sides(
            vector(moments(&FavardSystem::catalan(), n).moments()),
            vector((0..=n64).map(catalan).collect::<Vec<_>>()),
        ),
        3 => {
            let expected: Vec<QPoly> = (0..=n64)
                .map(|j| if j % 2 == 0 { crate::combinatorics::carlitz((j / 2) as usize) } else { QPoly::zero() })
                .collect();
            sides(vector(moments(&FavardSystem::carlitz(), n).moments()), vector(expected))
        }
        other => Err(EvalError(format!("no system with index {other}"))),
    }
}

pub(super) fn register(out: &mut Vec<IdentityCheck>) {
    out.extend([
        check("lem1", Structural, "almost-triangular lemma: an almost-triangular matrix with t(i,i) = 1 satisfying Σ_j (-1)^{n-j} t(n,j) M_j = [n=0] has det T_{n,1} = Π M_{i+1}/M_i = M_n", params![("fam", 0, 3, 3), ("n", 0, 10, 7), ("k", 1, 4, 2)], lemma_one),
        check("eq17", Structural, "p_n(x) equals the bordered Hankel determinant divided by det(a(i+j))_n and solves the Hankel system", params![("sys", 0, 3, 3), ("n", 0, 6, 5)], hankel_formula_check),
        check("eq18", Structural, "moments of the four reference systems: aerated Catalan, aerated central binomial, Catalan, aerated Carlitz", params![("sys", 0, 3, 3), ("n", 0, 16, 12)], known_moments),
        check("eq19", Structural, "Λ(p_n) = [n=0]", params![("sys", 0, 3, 3), ("n", 0, 12, 8)], functional_check),
        check("eq22", Structural, "Σ_k c(n,k) p_k(x) = x^n", params![("sys", 0, 3, 3), ("n", 0, 12, 8)], expansion_check),
        check("eq23", Structural, "Λ(x^n p_k) = c(n,k) Λ(p_k^2)", params![("sys", 0, 3, 3), ("n", 0, 8, 6)], quotient_check),
        check("eq24", Sum, "Σ_j (-1)^{n-j} p(n+k, j+k) c(j+k, k) = [n=0]", params![("sys", 0, 3, 3), ("n", 0, 8, 6), ("k", 0, 4, 3)], orthogonality_check),
        check("eq25", Determinant, "det(p(i+k+1, j+k))_n = c(n+k, k)", params![("sys", 0, 3, 3), ("n", 0, 7, 5), ("k", 0, 4, 3)], coefficient_det_check),
        check("eq26", Structural, "p_n = Σ_j (-1)^{n-j} [n,j] q^{(n-1)(n-j)} x^j has a three-term recurrence, moments q^{C(n,2)} and c(n,k) = q^{C(n,2)-C(k,2)} [n,k]", params![("n", 0, 8, 6)], q_shifted_power_check),
        check("eq68", Determinant, "det(p(i+m, j))_n det(M_{i+j})_m = det(M_{n+i+j})_m", params![("sys", 0, 4, 4), ("n", 0, 5, 4), ("m", 0, 5, 3)], tyson_check),
        check("eq68r", Determinant, "the same Hankel quotient identity for seeded random recurrences", params![("seed", 0, 199, 49), ("n", 0, 5, 3), ("m", 0, 5, 2)], tyson_random_check),
        check("eq69", Determinant, "det(M_{i+j+1})_m = (-1)^m p_m(0) det(M_{i+j})_m", params![("sys", 0, 4, 4), ("m", 0, 8, 6)], first_shift_check),
        check("eq70", Determinant, "det(M_{i+j+2})_m = v(m) det(M_{i+j})_m with v(m) = Σ_k p_k(0)^2 t(k)...t(m-1)", params![("sys", 0, 4, 4), ("m", 0, 8, 6)], second_shift_check),
    ]);
}
