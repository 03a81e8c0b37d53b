//! Three-term-recurrence (Favard) engine.
//!
//! A [`FavardSystem`] supplies `s(n)` and `t(n)`; from them we build the monic
//! polynomials `p_n(x) = (x - s(n-1)) p_{n-1}(x) - t(n-2) p_{n-2}(x)`, the
//! table `c(n, j)` expressing `x^n` in the basis `p_j`, and the moments
//! `M_n = c(n, 0)` of the functional for which the `p_n` are orthogonal.

use std::fmt;
use std::sync::Arc;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact_arith::ring::{Field, Ring};
use crate::exact_arith::{int, ExactInt};
use crate::linalg::{det_bareiss, inverse, LinalgError, RingMatrix};
use crate::qseries::{q_binomial, QPoly, QRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error("Hankel determinant of order {0} vanishes; the moment prefix is not orthogonalizable")]
    SingularHankel(usize),
    #[error("no three-term recurrence fits row {0}")]
    NoRecurrence(usize),
    #[error("coefficient table needs at least {needed} rows, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Coeff<R> = Arc<dyn Fn(usize) -> R + Send + Sync>;

/// Recurrence data `(s(n), t(n))`, evaluated on demand.
#[derive(Clone)]
pub struct FavardSystem<R> {
    name: String,
    s: Coeff<R>,
    t: Coeff<R>,
}

impl<R: Ring> fmt::Debug for FavardSystem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FavardSystem").field("name", &self.name).finish()
    }
}

impl<R: Ring> FavardSystem<R> {
    pub fn new<S, T>(name: impl Into<String>, s: S, t: T) -> Self
    where
        S: Fn(usize) -> R + Send + Sync + 'static,
        T: Fn(usize) -> R + Send + Sync + 'static,
    {
        FavardSystem {
            name: name.into(),
            s: Arc::new(s),
            t: Arc::new(t),
        }
    }

    /// System given by finite coefficient lists; indices past the end read
    /// as zero.
    pub fn from_sequences(name: impl Into<String>, s: Vec<R>, t: Vec<R>) -> Self {
        FavardSystem::new(
            name,
            move |n| s.get(n).cloned().unwrap_or_else(R::zero),
            move |n| t.get(n).cloned().unwrap_or_else(R::zero),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn s(&self, n: usize) -> R {
        (self.s)(n)
    }

    pub fn t(&self, n: usize) -> R {
        (self.t)(n)
    }
}

impl FavardSystem<ExactInt> {
    /// `s = 0, t = 1`: the Fibonacci polynomials, with aerated Catalan moments.
    pub fn fibonacci() -> Self {
        FavardSystem::new("fibonacci", |_| int(0), |_| int(1))
    }

    /// `s = 0, t(0) = 2, t(n) = 1`: the Lucas variant, with moments
    /// `M_{2n} = binom(2n, n)`.
    pub fn lucas_variant() -> Self {
        FavardSystem::new("lucas", |_| int(0), |n| int(if n == 0 { 2 } else { 1 }))
    }

    /// `s(0) = 1, s(n) = 2, t = 1`: moments are the Catalan numbers.
    pub fn catalan() -> Self {
        FavardSystem::new("catalan", |n| int(if n == 0 { 1 } else { 2 }), |_| int(1))
    }

    /// Seeded random integer system with `s(n) ∈ [-3, 3]` and
    /// `t(n) ∈ [-3, 3] \ {0}` for `n < len` (zero beyond).
    pub fn random(seed: u64, len: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s: Vec<ExactInt> = (0..len).map(|_| int(rng.gen_range(-3..=3))).collect();
        let t: Vec<ExactInt> = (0..len)
            .map(|_| {
                let v = rng.gen_range(1..=3);
                int(if rng.gen_bool(0.5) { v } else { -v })
            })
            .collect();
        FavardSystem::from_sequences(format!("random-{seed}"), s, t)
    }
}

impl FavardSystem<QPoly> {
    /// `s = 0, t(n) = q^n`: even moments are the Carlitz q-Catalan numbers.
    pub fn carlitz() -> Self {
        FavardSystem::new("carlitz", |_| QPoly::zero(), |n| QPoly::q_pow(n as i64))
    }

    /// The recurrence of `p_n(x) = Σ_j (-1)^{n-j} [n, j] q^{(n-1)(n-j)} x^j`,
    /// recovered from these explicit coefficients. Its moments are
    /// `q^{C(n,2)}`.
    pub fn q_shifted_power(rows: usize) -> Result<Self, OrthoError> {
        let table = PolyCoeffTable::from_signed_rows(
            (0..=rows as i64)
                .map(|n| {
                    (0..=n)
                        .map(|j| {
                            let b = q_binomial(n, j).shift2(2 * (n - 1) * (n - j));
                            if (n - j) % 2 == 0 {
                                b
                            } else {
                                -b
                            }
                        })
                        .collect()
                })
                .collect(),
        );
        let (s, t) = recover_recurrence(&table)?;
        Ok(FavardSystem::from_sequences("q-shifted-power", s, t))
    }
}

impl FavardSystem<QRat> {
    /// `s = 0`, `t(k) = q^{k+1} / ((1 + q^{k+1})(1 + q^{k+2}))`: the
    /// q-Chebyshev system whose even moments are Andrews' q-Catalan numbers.
    pub fn andrews_chebyshev() -> Self {
        FavardSystem::new(
            "andrews-chebyshev",
            |_| QRat::zero(),
            |k| {
                let k = k as i64;
                let den = &(QPoly::one() + QPoly::q_pow(k + 1)) * &(QPoly::one() + QPoly::q_pow(k + 2));
                QRat::new(QPoly::q_pow(k + 1), den).expect("nonzero denominator")
            },
        )
    }
}

/// Coefficients of monic polynomials, stored both as signed coefficients
/// `a(n, j)` (so `p_n = Σ a(n, j) x^j`) and through the sign convention
/// `p(n, j) = (-1)^{n-j} a(n, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffTable<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> PolyCoeffTable<R> {
    /// Builds from signed coefficient rows; row `n` must have length `n+1`.
    pub fn from_signed_rows(rows: Vec<Vec<R>>) -> Self {
        PolyCoeffTable { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Signed coefficient of `x^j` in `p_n`.
    pub fn signed(&self, n: usize, j: usize) -> R {
        self.rows[n].get(j).cloned().unwrap_or_else(R::zero)
    }

    /// `p(n, j)`, zero outside `0 ≤ j ≤ n`.
    pub fn p(&self, n: usize, j: usize) -> R {
        let a = self.signed(n, j);
        if (n + j).is_multiple_of(2) {
            a
        } else {
            a.neg()
        }
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    /// `p_n(0)`.
    pub fn at_zero(&self, n: usize) -> R {
        self.signed(n, 0)
    }
}

/// Triangular table `c(n, j)`, `0 ≤ j ≤ n`, with `x^n = Σ_j c(n, j) p_j(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> MomentTable<R> {
    pub fn c(&self, n: usize, j: usize) -> R {
        self.rows
            .get(n)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    /// `M_n = c(n, 0)`.
    pub fn moment(&self, n: usize) -> R {
        self.c(n, 0)
    }

    pub fn moments(&self) -> Vec<R> {
        (0..self.rows.len()).map(|n| self.moment(n)).collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Monic polynomials `p_0..=p_{n_max}` of the system.
pub fn favard_coeffs<R: Ring>(sys: &FavardSystem<R>, n_max: usize) -> PolyCoeffTable<R> {
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for n in 1..=n_max {
        let s = sys.s(n - 1);
        let mut row = vec![R::zero(); n + 1];
        for (j, a) in rows[n - 1].iter().enumerate() {
            row[j + 1] = row[j + 1].add(a);
            if !s.is_zero() {
                row[j] = row[j].sub(&s.mul(a));
            }
        }
        if n >= 2 {
            let t = sys.t(n - 2);
            if !t.is_zero() {
                for (j, a) in rows[n - 2].iter().enumerate() {
                    row[j] = row[j].sub(&t.mul(a));
                }
            }
        }
        rows.push(row);
    }
    PolyCoeffTable { rows }
}

/// The table `c(n, j)` for `n ≤ n_max`.
pub fn moments<R: Ring>(sys: &FavardSystem<R>, n_max: usize) -> MomentTable<R> {
    let s: Vec<R> = (0..=n_max).map(|j| sys.s(j)).collect();
    let t: Vec<R> = (0..=n_max).map(|j| sys.t(j)).collect();
    let mut rows: Vec<Vec<R>> = vec![vec![R::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |j: usize| prev.get(j).cloned().unwrap_or_else(R::zero);
        let row: Vec<R> = (0..=n)
            .map(|j| {
                let mut v = if j >= 1 { at(j - 1) } else { R::zero() };
                let mid = at(j);
                if !mid.is_zero() {
                    v = v.add(&s[j].mul(&mid));
                }
                let up = at(j + 1);
                if !up.is_zero() {
                    v = v.add(&t[j].mul(&up));
                }
                v
            })
            .collect();
        rows.push(row);
    }
    MomentTable { rows }
}

/// Applies the moment functional to a coefficient vector: `Σ a_j M_j`.
pub fn pair<R: Ring>(coeffs: &[R], moments: &[R]) -> R {
    coeffs
        .iter()
        .zip(moments)
        .fold(R::zero(), |acc, (a, m)| acc.add(&a.mul(m)))
}

/// Hankel matrix `(M_{shift+i+j})_{i,j<m}`.
pub fn hankel<R: Ring>(moments: &[R], shift: usize, m: usize) -> RingMatrix<R> {
    RingMatrix::square(m, |i, j| moments[shift + i + j].clone())
}

/// Both sides of Tyson's identity
/// `det(p(i+m, j))_{n} · det(M_{i+j})_m = det(M_{n+i+j})_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct TysonOutcome<R> {
    pub lhs: R,
    pub rhs: R,
}

impl<R: Ring> TysonOutcome<R> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn tyson_sides<R: Ring>(sys: &FavardSystem<R>, n: usize, m: usize) -> Result<TysonOutcome<R>, OrthoError> {
    let span = n + 2 * m;
    let table = favard_coeffs(sys, n + m);
    let mom = moments(sys, span).moments();
    let base = det_bareiss(&hankel(&mom, 0, m))?;
    if base.is_zero() {
        return Err(OrthoError::SingularHankel(m));
    }
    let pm = RingMatrix::square(n, |i, j| table.p(i + m, j));
    let lhs = det_bareiss(&pm)?.mul(&base);
    let rhs = det_bareiss(&hankel(&mom, n, m))?;
    Ok(TysonOutcome { lhs, rhs })
}

/// Whether Tyson's identity holds for `(n, m)`.
pub fn tyson_check<R: Ring>(sys: &FavardSystem<R>, n: usize, m: usize) -> Result<bool, OrthoError> {
    Ok(tyson_sides(sys, n, m)?.holds())
}

/// Values of the two Hankel shift formulas at order `m`:
/// `det(M_{i+j+1}) = (-1)^m p_m(0) det(M_{i+j})` and
/// `det(M_{i+j+2}) = v(m) det(M_{i+j})` with
/// `v(m) = Σ_{k≤m} p_k(0)^2 t(k)···t(m-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftOutcome<R> {
    pub first: TysonOutcome<R>,
    pub second: TysonOutcome<R>,
}

pub fn hankel_shift_sides<R: Ring>(sys: &FavardSystem<R>, m: usize) -> Result<ShiftOutcome<R>, OrthoError> {
    let mom = moments(sys, 2 * m + 1).moments();
    let table = favard_coeffs(sys, m);
    let base = det_bareiss(&hankel(&mom, 0, m))?;
    if base.is_zero() {
        return Err(OrthoError::SingularHankel(m));
    }
    let pm0 = table.at_zero(m);
    let sign_pm0 = if m.is_multiple_of(2) { pm0 } else { pm0.neg() };
    let first = TysonOutcome {
        lhs: det_bareiss(&hankel(&mom, 1, m))?,
        rhs: sign_pm0.mul(&base),
    };
    let mut v = R::zero();
    for k in 0..=m {
        let pk = table.at_zero(k);
        let mut term = pk.mul(&pk);
        for l in k..m {
            term = term.mul(&sys.t(l));
        }
        v = v.add(&term);
    }
    let second = TysonOutcome {
        lhs: det_bareiss(&hankel(&mom, 2, m))?,
        rhs: v.mul(&base),
    };
    Ok(ShiftOutcome { first, second })
}

/// Whether both shift formulas hold at order `m`.
pub fn hankel_shift_checks<R: Ring>(sys: &FavardSystem<R>, m: usize) -> Result<bool, OrthoError> {
    let o = hankel_shift_sides(sys, m)?;
    Ok(o.first.holds() && o.second.holds())
}

/// Fits `s(n)` and `t(n)` to a table of monic polynomials from the two
/// leading subdiagonal coefficients, then verifies that the full three-term
/// recurrence reproduces every row. Returns `s(0..len-1)` and `t(0..len-2)`.
pub fn recover_recurrence<R: Ring>(table: &PolyCoeffTable<R>) -> Result<(Vec<R>, Vec<R>), OrthoError> {
    let len = table.len();
    if len < 2 {
        return Err(OrthoError::TooShort { needed: 2, got: len });
    }
    for n in 0..len {
        if table.row(n).len() != n + 1 || !table.signed(n, n).is_one() {
            return Err(OrthoError::NoRecurrence(n));
        }
    }
    let a = |n: usize, j: i64| -> R {
        if j < 0 {
            R::zero()
        } else {
            table.signed(n, j as usize)
        }
    };
    let mut s = Vec::new();
    let mut t = Vec::new();
    for n in 0..len - 1 {
        let ni = n as i64;
        // Coefficient of x^n in p_{n+1}.
        let sn = a(n, ni - 1).sub(&a(n + 1, ni));
        s.push(sn.clone());
        if n >= 1 {
            // Coefficient of x^{n-1} in p_{n+1}.
            let tn = a(n, ni - 2).sub(&sn.mul(&a(n, ni - 1))).sub(&a(n + 1, ni - 1));
            t.push(tn);
        }
    }
    let sys = FavardSystem::from_sequences("recovered", s.clone(), t.clone());
    let rebuilt = favard_coeffs(&sys, len - 1);
    for n in 0..len {
        if rebuilt.row(n) != table.row(n) {
            return Err(OrthoError::NoRecurrence(n));
        }
    }
    Ok((s, t))
}

/// Monic orthogonal polynomials `p_0..=p_{n_max}` of a moment sequence,
/// obtained by solving the Hankel systems `Σ_j a_j M_{i+j} = -M_{i+n}`.
/// Needs `M_0..=M_{2 n_max - 1}`.
pub fn orthogonal_from_moments<F: Field>(moments: &[F], n_max: usize) -> Result<PolyCoeffTable<F>, OrthoError> {
    let needed = (2 * n_max).max(1);
    if moments.len() < needed {
        return Err(OrthoError::TooShort {
            needed,
            got: moments.len(),
        });
    }
    let mut rows = vec![vec![F::one()]];
    for n in 1..=n_max {
        let h = hankel(moments, 0, n);
        let hinv = inverse(&h).map_err(|_| OrthoError::SingularHankel(n))?;
        let rhs: Vec<F> = (0..n).map(|i| moments[i + n].neg()).collect();
        let mut row = hinv.mul_vec(&rhs)?;
        row.push(F::one());
        rows.push(row);
    }
    Ok(PolyCoeffTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{andrews_moment, carlitz, catalan, catalan_power, central_binomial};
    use crate::exact_arith::{int_binomial, rat, ExactRat};

    #[test]
    fn fibonacci_rows_and_moments() {
        let sys = FavardSystem::fibonacci();
        let table = favard_coeffs(&sys, 12);
        for n in 0..=6usize {
            for j in 0..=n {
                let b = int_binomial((n + j) as i64, (n - j) as i64);
                let expected = if (n - j) % 2 == 0 { b } else { -b };
                assert_eq!(table.p(2 * n, 2 * j), expected);
            }
        }
        let mom = moments(&sys, 16);
        for n in 0..=8 {
            assert_eq!(mom.moment(2 * n), catalan(n as i64));
            assert_eq!(mom.moment(2 * n + 1), int(0));
        }
        for n in 0..=5usize {
            for k in 0..=5usize {
                assert_eq!(mom.c(2 * n + k, k), catalan_power(n as i64, k as i64 + 1));
            }
        }
    }

    #[test]
    fn trivial_system_gives_powers() {
        let sys = FavardSystem::new("zero", |_| int(0), |_| int(0));
        let table = favard_coeffs(&sys, 6);
        for n in 0..=6 {
            for j in 0..=n {
                assert_eq!(table.signed(n, j), int((j == n) as i64));
            }
        }
    }

    #[test]
    fn lucas_variant_moments() {
        let mom = moments(&FavardSystem::lucas_variant(), 14);
        for n in 0..=6usize {
            assert_eq!(mom.moment(2 * n), central_binomial(n as i64));
            for k in 0..=2usize {
                assert_eq!(mom.c(2 * n + k, k), int_binomial((2 * n + k) as i64, n as i64));
            }
        }
    }

    #[test]
    fn carlitz_moments() {
        let mom = moments(&FavardSystem::carlitz(), 12);
        for n in 0..=6 {
            assert_eq!(mom.moment(2 * n), carlitz(n));
        }
    }

    #[test]
    fn andrews_moments() {
        let mom = moments(&FavardSystem::andrews_chebyshev(), 10);
        for n in 0..=5usize {
            assert_eq!(mom.moment(2 * n), andrews_moment(n as i64));
            assert!(mom.moment(2 * n + 1).is_zero());
        }
    }

    #[test]
    fn recovered_q_system() {
        let sys = FavardSystem::q_shifted_power(6).unwrap();
        // s(n) = q^{n-1}(q^{n+1} + q^n - 1) for n >= 1, t(k) = q^{3k}(q^{k+1} - 1).
        assert!(sys.s(0).is_one());
        for n in 1..6i64 {
            let expected = (QPoly::q_pow(n + 1) + QPoly::q_pow(n) - QPoly::one()).shift2(2 * (n - 1));
            assert_eq!(sys.s(n as usize), expected);
        }
        for k in 0..5i64 {
            let expected = (QPoly::q_pow(k + 1) - QPoly::one()).shift2(6 * k);
            assert_eq!(sys.t(k as usize), expected);
        }
        let mom = moments(&sys, 8);
        for n in 0..=8i64 {
            assert_eq!(mom.moment(n as usize), QPoly::q_pow(n * (n - 1) / 2));
        }
    }

    #[test]
    fn inconsistent_table_is_flagged() {
        let rows = vec![vec![int(1)], vec![int(-1), int(1)], vec![int(5), int(0), int(1)], vec![int(0), int(0), int(0), int(1)]];
        let r = recover_recurrence(&PolyCoeffTable::from_signed_rows(rows));
        assert!(matches!(r, Err(OrthoError::NoRecurrence(_))));
    }

    #[test]
    fn tyson_on_named_systems() {
        for sys in [FavardSystem::fibonacci(), FavardSystem::catalan(), FavardSystem::lucas_variant()] {
            for n in 0..=5 {
                for m in 0..=3 {
                    assert!(tyson_check(&sys, n, m).unwrap(), "{} n={n} m={m}", sys.name());
                }
            }
        }
        let t = tyson_sides(&FavardSystem::fibonacci(), 3, 0).unwrap();
        assert_eq!(t.lhs, t.rhs);
    }

    #[test]
    fn tyson_on_random_systems() {
        for seed in 0..20 {
            let sys = FavardSystem::random(seed, 16);
            for n in 0..=4 {
                for m in 0..=4 {
                    assert!(tyson_check(&sys, n, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn singular_hankel_is_error() {
        let sys = FavardSystem::new("degenerate", |_| int(0), |_| int(0));
        assert_eq!(tyson_check(&sys, 1, 2), Err(OrthoError::SingularHankel(2)));
    }

    #[test]
    fn shift_formulas() {
        let sys = FavardSystem::catalan();
        for m in 0..=5 {
            assert!(hankel_shift_checks(&sys, m).unwrap());
        }
        let sys = FavardSystem::lucas_variant();
        for m in 0..=5 {
            assert!(hankel_shift_checks(&sys, m).unwrap());
        }
        let o = hankel_shift_sides(&FavardSystem::random(3, 8), 1).unwrap();
        let sys = FavardSystem::random(3, 8);
        assert_eq!(o.first.lhs, sys.s(0));
        assert_eq!(o.second.lhs, sys.s(0) * sys.s(0) + sys.t(0));
    }

    #[test]
    fn orthogonality_by_construction() {
        let sys = FavardSystem::lucas_variant();
        let table = favard_coeffs(&sys, 10);
        let mom = moments(&sys, 10).moments();
        for n in 0..=10 {
            assert_eq!(pair(table.row(n), &mom), int((n == 0) as i64));
        }
    }

    #[test]
    fn from_moments_round_trip() {
        let sys = FavardSystem::catalan();
        let mom: Vec<ExactRat> = moments(&sys, 12).moments().into_iter().map(ExactRat::from_integer).collect();
        let table = orthogonal_from_moments(&mom, 6).unwrap();
        let direct = favard_coeffs(&sys, 6);
        for n in 0..=6 {
            let converted: Vec<ExactRat> = direct.row(n).iter().cloned().map(ExactRat::from_integer).collect();
            assert_eq!(table.row(n), converted.as_slice());
        }
        let (s, t) = recover_recurrence(&table).unwrap();
        assert_eq!(s[0], rat(1, 1));
        assert_eq!(s[3], rat(2, 1));
        assert_eq!(t[2], rat(1, 1));
    }
}
