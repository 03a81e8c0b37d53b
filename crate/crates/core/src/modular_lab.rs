//! Residue-lift determinants.
//!
//! Entries of an integer matrix are reduced modulo 2 or 3 and the residues
//! are read back as ordinary integers before the determinant is taken over
//! `ExactInt`. Working in the residue field instead would make every identity
//! trivially true; the point here is what survives the lift.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{ballot, catalan, catalan_power};
use crate::exact_arith::{int, int_binomial, rat_from_int, sign_pow, ExactInt, ExactRat};
use crate::linalg::{det_bareiss, det_gauss, inverse_over_fractions, LinalgError, RingMatrix};
use crate::orthopoly::{orthogonal_from_moments, OrthoError, PolyCoeffTable};
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("expected exactly one odd binomial for m = {m}, found indices {found:?}")]
    NotUnique { m: u64, found: Vec<u32> },
    #[error("unknown conjecture id {0:?}")]
    UnknownConjecture(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Ortho(#[from] OrthoError),
}

/// How residues are turned back into integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidueLift {
    /// Residue mod 2 as 0 or 1.
    Mod2,
    /// Residue mod 3 as 0, 1 or 2.
    Mod3Standard,
    /// Residue mod 3 as 0, 1 or -1 (the balanced representative).
    Mu,
}

impl ResidueLift {
    pub fn modulus(self) -> i64 {
        match self {
            ResidueLift::Mod2 => 2,
            ResidueLift::Mod3Standard | ResidueLift::Mu => 3,
        }
    }

    pub fn lift(self, x: &ExactInt) -> ExactInt {
        let r = x.mod_floor(&int(self.modulus()));
        match self {
            ResidueLift::Mu if r == int(2) => int(-1),
            _ => r,
        }
    }

    /// Parses `2`, `3`, `mu` (and the kebab-case names).
    pub fn parse(s: &str) -> Option<ResidueLift> {
        match s {
            "2" | "mod2" => Some(ResidueLift::Mod2),
            "3" | "mod3" | "mod3-standard" => Some(ResidueLift::Mod3Standard),
            "mu" => Some(ResidueLift::Mu),
            _ => None,
        }
    }
}

/// Balanced residue mod 3.
pub fn mu(x: &ExactInt) -> ExactInt {
    ResidueLift::Mu.lift(x)
}

/// `binom(a, b) mod 2` by Lucas' theorem: odd iff the bits of `b` are a
/// subset of the bits of `a`.
pub fn lucas_binomial_mod2(a: u64, b: u64) -> u8 {
    (b & !a == 0 && b <= a) as u8
}

/// All `j >= 0` with `m + 1 >= 2^j` for which `binom(m + 2^j, m + 1 - 2^j)`
/// is odd, found by exact binomials.
pub fn odd_power_indices(m: u64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut j = 0u32;
    while j < 63 && (1u64 << j) <= m + 1 {
        let p = 1i64 << j;
        let b = int_binomial(m as i64 + p, m as i64 + 1 - p);
        if b.is_odd() {
            out.push(j);
        }
        j += 1;
    }
    out
}

/// The unique index whose binomial in the family above is odd.
///
/// It is the position of the lowest zero bit of `m`. The exhaustive parity
/// scan of [`odd_power_indices`] is run as well and any disagreement is an
/// error.
pub fn unique_power_index(m: u64) -> Result<u32, ModularError> {
    let h = (!m).trailing_zeros();
    let found = odd_power_indices(m);
    if found != [h] {
        return Err(ModularError::NotUnique { m, found });
    }
    Ok(h)
}

/// Parity of `C_n` from the classical criterion: `C_n` is odd iff `n + 1` is
/// a power of two.
pub fn catalan_parity(n: u64) -> u8 {
    (n + 1).is_power_of_two() as u8
}

/// Integer matrix families that the lifting experiments use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftFamily {
    /// `binom(i+j+1, i-j+1)`.
    CatalanBinomial,
    /// `binom(i+j+k, i-j+1)`.
    PowerBinomial(i64),
    /// `binom(i+j+m, i-j+m)`.
    ShiftedBinomial(i64),
    /// `(-1)^{i-j} binom(i+j, i-j)`; only the binomial is lifted, the sign
    /// is applied afterwards.
    SignedCentral,
}

impl LiftFamily {
    fn sign_and_binomial(self, i: i64, j: i64) -> (i64, ExactInt) {
        match self {
            LiftFamily::CatalanBinomial => (1, int_binomial(i + j + 1, i - j + 1)),
            LiftFamily::PowerBinomial(k) => (1, int_binomial(i + j + k, i - j + 1)),
            LiftFamily::ShiftedBinomial(m) => (1, int_binomial(i + j + m, i - j + m)),
            LiftFamily::SignedCentral => (sign_pow(i - j), int_binomial(i + j, i - j)),
        }
    }

    /// The unlifted `n × n` matrix.
    pub fn matrix(self, n: usize) -> RingMatrix<ExactInt> {
        RingMatrix::square(n, |i, j| {
            let (s, b) = self.sign_and_binomial(i as i64, j as i64);
            b * s
        })
    }

    /// The `n × n` matrix with every binomial replaced by its lift.
    pub fn lifted_matrix(self, n: usize, lift: ResidueLift) -> RingMatrix<ExactInt> {
        RingMatrix::square(n, |i, j| {
            let (s, b) = self.sign_and_binomial(i as i64, j as i64);
            lift.lift(&b) * s
        })
    }
}

/// Lifts every entry of an integer matrix.
pub fn lift_matrix(m: &RingMatrix<ExactInt>, lift: ResidueLift) -> RingMatrix<ExactInt> {
    m.map(|x| lift.lift(x))
}

/// Exact integer determinant of the lifted family matrix.
pub fn lifted_det(family: LiftFamily, n: usize, lift: ResidueLift) -> ExactInt {
    det_bareiss(&family.lifted_matrix(n, lift)).expect("square matrix")
}

/// `r(n, j) = binom(n+j, n-j) mod 2`, lifted to {0, 1}.
pub fn r_coeff(n: i64, j: i64) -> ExactInt {
    ResidueLift::Mod2.lift(&int_binomial(n + j, n - j))
}

/// Signed coefficient rows `(-1)^{n-j} r(n, j)` of `r_n(x)`, lowest degree
/// first.
pub fn r_row(n: i64) -> Vec<ExactInt> {
    (0..=n).map(|j| r_coeff(n, j) * sign_pow(n - j)).collect()
}

/// `Σ_j (-1)^{n-j} r(n, j) (C_j mod 2)`.
pub fn r_catalan_sum(n: i64) -> ExactInt {
    (0..=n)
        .map(|j| r_coeff(n, j) * ResidueLift::Mod2.lift(&catalan(j)) * sign_pow(n - j))
        .sum()
}

/// `det(r(i+1, j))_{i,j<n}`.
pub fn r_shifted_det(n: usize) -> ExactInt {
    let m = RingMatrix::square(n, |i, j| r_coeff(i as i64 + 1, j as i64));
    det_bareiss(&m).expect("square matrix")
}

/// The sequence `C_n mod 2` as integers.
pub fn catalan_mod2_sequence(len: usize) -> Vec<ExactInt> {
    (0..len as i64).map(|n| ResidueLift::Mod2.lift(&catalan(n))).collect()
}

/// Monic orthogonal polynomials whose moments are `C_n mod 2`, as a signed
/// coefficient table `p(n, j)`.
pub fn catalan_mod2_orthopolys(n_max: usize) -> Result<PolyCoeffTable<ExactRat>, ModularError> {
    let moments: Vec<ExactRat> = catalan_mod2_sequence(2 * n_max + 2).iter().map(rat_from_int).collect();
    Ok(orthogonal_from_moments(&moments, n_max)?)
}

/// Both sides of `det(p(i+m, j))_{i,j<n} = (-1)^{C(m,2)} det(a(i+j+n))_{i,j<m}`
/// where `a(n) = C_n mod 2` and `p` are its orthogonal polynomials.
pub fn mod2_hankel_bridge_sides(n: usize, m: usize) -> Result<(ExactRat, ExactRat), ModularError> {
    let table = catalan_mod2_orthopolys(n + m)?;
    let lhs = det_bareiss(&RingMatrix::square(n, |i, j| table.p(i + m, j)))?;
    let a = catalan_mod2_sequence(n + 2 * m + 1);
    let hankel = RingMatrix::square(m, |i, j| a[i + j + n].clone());
    let m = m as i64;
    let rhs = rat_from_int(&(det_bareiss(&hankel)? * sign_pow(m * (m - 1) / 2)));
    Ok((lhs, rhs))
}

/// Checks the mod-2 orthogonal polynomial bridge up to `n`: the `r_n` sums
/// vanish for `0 < n' <= n`, the two shifted determinants agree with
/// `C_{n'} mod 2`, and the Hankel bridge holds for `n' <= n`, `m' <= m`.
pub fn mod2_orthopoly_bridge(n: usize, m: usize) -> Result<bool, ModularError> {
    for k in 0..=n {
        let delta = ExactInt::from((k == 0) as i64);
        if r_catalan_sum(k as i64) != delta {
            return Ok(false);
        }
        let target = ResidueLift::Mod2.lift(&catalan(k as i64));
        if r_shifted_det(k) != target || lifted_det(LiftFamily::CatalanBinomial, k, ResidueLift::Mod2) != target {
            return Ok(false);
        }
    }
    for k in 0..=n {
        for mm in 0..=m {
            let (l, r) = mod2_hankel_bridge_sides(k, mm)?;
            if l != r {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The residue-lift conjectures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureId {
    C12,
    C13a,
    C13b,
    C14,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 4] = [ConjectureId::C12, ConjectureId::C13a, ConjectureId::C13b, ConjectureId::C14];

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureId::C12 => "c12",
            ConjectureId::C13a => "c13a",
            ConjectureId::C13b => "c13b",
            ConjectureId::C14 => "c14",
        }
    }

    pub fn parse(s: &str) -> Result<ConjectureId, ModularError> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| ModularError::UnknownConjecture(s.to_string()))
    }

    pub fn statement(self) -> &'static str {
        match self {
            ConjectureId::C12 => {
                "the inverse of ((-1)^(i-j) (binom(i+j, i-j) mod 2)) is the Catalan triangle reduced mod 2"
            }
            ConjectureId::C13a => "det(binom(i+j+k, i-j+1) mod 2)_n = (-1)^(k-1) (C^(k)_n mod 2) for n, k > 0",
            ConjectureId::C13b => {
                "det(binom(i+j+m, i-j+m) mod 2)_n = det(C^(2i+1)_(n-i+j) mod 2)_m for n, m > 0"
            }
            ConjectureId::C14 => "det(binom(i+j+1, i-j+1) mod 3)_n = mu(C_n), entries lifted to {0, 1, 2}",
        }
    }

    /// Default scan bounds `(n_max, k_max, m_max)`.
    pub fn default_bounds(self) -> SearchBounds {
        match self {
            ConjectureId::C12 => SearchBounds { n_max: 32, k_max: 0, m_max: 0 },
            ConjectureId::C13a => SearchBounds { n_max: 64, k_max: 6, m_max: 0 },
            ConjectureId::C13b => SearchBounds { n_max: 64, k_max: 0, m_max: 4 },
            ConjectureId::C14 => SearchBounds { n_max: 81, k_max: 0, m_max: 0 },
        }
    }
}

/// Inclusive upper bounds of a conjecture scan. Bounds a conjecture does not
/// use are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub n_max: usize,
    pub k_max: usize,
    pub m_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureStatus {
    #[serde(rename = "verified-up-to")]
    VerifiedUpTo,
    #[serde(rename = "counterexample")]
    Counterexample,
}

/// A grid point where the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, i64>,
    pub lhs: Value,
    pub rhs: Value,
    /// Set after recomputing the point with an independent determinant
    /// engine and seeing the same disagreement.
    pub reverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub id: ConjectureId,
    pub label: String,
    pub statement: String,
    /// Inclusive ranges scanned, per parameter.
    pub grid: BTreeMap<String, (i64, i64)>,
    pub points_checked: usize,
    pub status: ConjectureStatus,
    /// Largest value of the size parameter reached by the scan.
    pub verified_up_to: usize,
    pub counterexample_count: usize,
    pub first_counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ConjectureReport {
    pub fn status_str(&self) -> &'static str {
        match self.status {
            ConjectureStatus::VerifiedUpTo => "verified-up-to",
            ConjectureStatus::Counterexample => "counterexample",
        }
    }
}

type Point = BTreeMap<String, i64>;

fn point(pairs: &[(&str, i64)]) -> Point {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Both sides at one grid point. `independent` switches the determinant
/// engine to condensation so that counterexamples can be re-verified.
fn conjecture_sides(id: ConjectureId, p: &Point, independent: bool) -> Result<(Value, Value), ModularError> {
    let det = |m: &RingMatrix<ExactInt>| -> Result<ExactInt, ModularError> {
        Ok(if independent {
            det_gauss(&m.map(rat_from_int))?.to_integer()
        } else {
            det_bareiss(m)?
        })
    };
    let n = p["n"] as usize;
    match id {
        ConjectureId::C12 => {
            let lifted = LiftFamily::SignedCentral.lifted_matrix(n, ResidueLift::Mod2);
            let inv = if independent {
                // Forward substitution on the unipotent triangular matrix.
                unipotent_lower_inverse(&lifted).map(|m| m.map(rat_from_int))?
            } else {
                inverse_over_fractions(&lifted)?
            };
            let target = RingMatrix::square(n, |i, j| {
                rat_from_int(&ResidueLift::Mod2.lift(&ballot(i as i64, j as i64)))
            });
            let rows = |m: &RingMatrix<ExactRat>| {
                Value::Vector((0..n).map(|i| Value::from(m.row(i).to_vec())).collect()).normalize()
            };
            Ok((rows(&inv), rows(&target)))
        }
        ConjectureId::C13a => {
            let k = p["k"];
            let lhs = det(&LiftFamily::PowerBinomial(k).lifted_matrix(n, ResidueLift::Mod2))?;
            let rhs = ResidueLift::Mod2.lift(&catalan_power(n as i64, k)) * sign_pow(k - 1);
            Ok((lhs.into(), rhs.into()))
        }
        ConjectureId::C13b => {
            let m = p["m"] as usize;
            let lhs = det(&LiftFamily::ShiftedBinomial(m as i64).lifted_matrix(n, ResidueLift::Mod2))?;
            let h = RingMatrix::square(m, |i, j| {
                ResidueLift::Mod2.lift(&catalan_power(n as i64 - i as i64 + j as i64, 2 * i as i64 + 1))
            });
            Ok((lhs.into(), det(&h)?.into()))
        }
        ConjectureId::C14 => {
            let lhs = det(&LiftFamily::CatalanBinomial.lifted_matrix(n, ResidueLift::Mod3Standard))?;
            Ok((lhs.into(), mu(&catalan(n as i64)).into()))
        }
    }
}

/// Inverse of a lower triangular integer matrix with unit diagonal.
fn unipotent_lower_inverse(m: &RingMatrix<ExactInt>) -> Result<RingMatrix<ExactInt>, ModularError> {
    let n = m.rows();
    for i in 0..n {
        if !m.get(i, i).is_one() || (i + 1..n).any(|j| !m.get(i, j).is_zero()) {
            return Err(ModularError::Linalg(LinalgError::NotTriangular(i, i)));
        }
    }
    let mut inv = RingMatrix::square(n, |i, j| ExactInt::from((i == j) as i64));
    for j in 0..n {
        for i in j + 1..n {
            let acc: ExactInt = (j..i).map(|l| m.get(i, l) * inv.get(l, j)).sum();
            inv.set(i, j, -acc);
        }
    }
    Ok(inv)
}

fn conjecture_grid(id: ConjectureId, b: SearchBounds) -> (BTreeMap<String, (i64, i64)>, Vec<Point>) {
    let (n, k, m) = (b.n_max as i64, b.k_max as i64, b.m_max as i64);
    let mut grid = BTreeMap::new();
    let mut points = Vec::new();
    match id {
        ConjectureId::C12 => {
            grid.insert("n".into(), (1, n));
            points.extend((1..=n).map(|n| point(&[("n", n)])));
        }
        ConjectureId::C13a => {
            grid.insert("k".into(), (1, k));
            grid.insert("n".into(), (1, n));
            for k in 1..=k {
                points.extend((1..=n).map(|n| point(&[("k", k), ("n", n)])));
            }
        }
        ConjectureId::C13b => {
            grid.insert("m".into(), (1, m));
            grid.insert("n".into(), (1, n));
            for m in 1..=m {
                points.extend((1..=n).map(|n| point(&[("m", m), ("n", n)])));
            }
        }
        ConjectureId::C14 => {
            grid.insert("n".into(), (0, n));
            points.extend((0..=n).map(|n| point(&[("n", n)])));
        }
    }
    (grid, points)
}

/// Scans the conjecture over the grid given by `bounds` and reports either
/// the range verified or the first counterexample in scan order.
///
/// Points are evaluated in parallel; the outcome does not depend on
/// scheduling.
pub fn conjecture_search(id: ConjectureId, bounds: SearchBounds) -> Result<ConjectureReport, ModularError> {
    let start = Instant::now();
    let (grid, points) = conjecture_grid(id, bounds);
    let outcomes: Vec<Result<(Value, Value), ModularError>> =
        points.par_iter().map(|p| conjecture_sides(id, p, false)).collect();
    let mut failures = Vec::new();
    for (p, o) in points.iter().zip(outcomes) {
        let (lhs, rhs) = o?;
        if lhs != rhs {
            failures.push((p.clone(), lhs, rhs));
        }
    }
    let first_counterexample = match failures.first() {
        Some((p, lhs, rhs)) => {
            let (l2, r2) = conjecture_sides(id, p, true)?;
            Some(Counterexample {
                params: p.clone(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                reverified: l2 == *lhs && r2 == *rhs && l2 != r2,
            })
        }
        None => None,
    };
    Ok(ConjectureReport {
        id,
        label: "CONJECTURE".to_string(),
        statement: id.statement().to_string(),
        grid,
        points_checked: points.len(),
        status: if failures.is_empty() {
            ConjectureStatus::VerifiedUpTo
        } else {
            ConjectureStatus::Counterexample
        },
        verified_up_to: bounds.n_max,
        counterexample_count: failures.len(),
        first_counterexample,
        elapsed: start.elapsed(),
    })
}

/// Small helper used by reports: an `ExactInt` that fits in `i64`.
pub fn small(x: &ExactInt) -> Option<i64> {
    x.to_i64()
}

/// `true` iff `lift(x) - x` is divisible by the modulus and `lift(x)` lies in
/// the lift's residue set.
pub fn lift_is_faithful(lift: ResidueLift, x: &ExactInt) -> bool {
    let l = lift.lift(x);
    let in_set = match lift {
        ResidueLift::Mod2 => l == int(0) || l == int(1),
        ResidueLift::Mod3Standard => !l.is_negative() && l < int(3),
        ResidueLift::Mu => l.abs() <= int(1),
    };
    in_set && (&l - x).is_multiple_of(&int(lift.modulus()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binomial_mod2(6, 2), 1);
        assert_eq!(lucas_binomial_mod2(3, 1), 1);
        assert_eq!(lucas_binomial_mod2(9, 0), 1);
        assert_eq!(lucas_binomial_mod2(4, 2), 0);
        assert_eq!(lucas_binomial_mod2(2, 3), 0);
    }

    #[test]
    fn lucas_matches_exact_parity() {
        for a in 0..=256u64 {
            for b in 0..=256u64 {
                let exact = int_binomial(a as i64, b as i64).is_odd() as u8;
                assert_eq!(lucas_binomial_mod2(a, b), exact, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn power_index_examples() {
        assert_eq!(unique_power_index(1).unwrap(), 1);
        assert_eq!(unique_power_index(0).unwrap(), 0);
        assert_eq!(unique_power_index(3).unwrap(), 2);
        assert_eq!(odd_power_indices(0), vec![0]);
    }

    #[test]
    fn balanced_residues() {
        assert_eq!(mu(&int(3)), int(0));
        assert_eq!(mu(&int(4)), int(1));
        assert_eq!(mu(&int(5)), int(-1));
        assert_eq!(mu(&int(-1)), int(-1));
        assert!(lift_is_faithful(ResidueLift::Mu, &int(-7)));
    }

    #[test]
    fn mod3_display_values() {
        let got: Vec<ExactInt> = (0..=4)
            .map(|n| lifted_det(LiftFamily::CatalanBinomial, n, ResidueLift::Mod3Standard))
            .collect();
        assert_eq!(got, vec![int(1), int(1), int(-1), int(-1), int(-1)]);
        let m = LiftFamily::CatalanBinomial.lifted_matrix(3, ResidueLift::Mod3Standard);
        assert_eq!(m.row(2), &[int(1), int(0), int(2)]);
    }

    #[test]
    fn r_rows_match_listing() {
        let rows: Vec<Vec<ExactInt>> = (0..5).map(r_row).collect();
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![-1, 1],
            vec![1, -1, 1],
            vec![-1, 0, -1, 1],
            vec![1, 0, 1, -1, 1],
        ];
        for (r, e) in rows.iter().zip(&expect) {
            assert_eq!(r, &e.iter().map(|&v| int(v)).collect::<Vec<_>>());
        }
        assert_eq!(r_catalan_sum(0), int(1));
    }

    #[test]
    fn parity_criterion_matches_exact() {
        for n in 0..200u64 {
            assert_eq!(catalan_parity(n) as i64, (catalan(n as i64) % 2i64).to_i64().unwrap());
        }
    }

    #[test]
    fn mod2_orthopolys_first_rows() {
        let t = catalan_mod2_orthopolys(5).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![1, 1],
            vec![-1, -1, 1],
            vec![1, 0, -1, 1],
            vec![-1, 0, 1, -1, 1],
            vec![-1, -1, 1, 0, 1, 1],
        ];
        for (n, row) in expect.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(t.p(n, j), ExactRat::from_integer(int(v)), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn bridge_small() {
        assert!(mod2_orthopoly_bridge(10, 3).unwrap());
    }

    #[test]
    fn catalan_triangle_inverse_at_six() {
        let p = point(&[("n", 6)]);
        let (l, r) = conjecture_sides(ConjectureId::C12, &p, false).unwrap();
        assert_eq!(l, r);
        let (l2, _) = conjecture_sides(ConjectureId::C12, &p, true).unwrap();
        assert_eq!(l, l2);
    }

    #[test]
    fn first_power_conjecture_agrees_with_proven_case() {
        for n in 1..=32usize {
            let p = point(&[("k", 1), ("n", n as i64)]);
            let (l, r) = conjecture_sides(ConjectureId::C13a, &p, false).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, Value::Int(ResidueLift::Mod2.lift(&catalan(n as i64))));
        }
    }

    #[test]
    fn power_conjecture_counterexample_reverifies() {
        let b = SearchBounds { n_max: 8, k_max: 6, m_max: 0 };
        let report = conjecture_search(ConjectureId::C13a, b).unwrap();
        assert_eq!(report.status, ConjectureStatus::Counterexample);
        let ce = report.first_counterexample.as_ref().unwrap();
        assert_eq!(ce.params, point(&[("k", 6), ("n", 4)]));
        assert_eq!((ce.lhs.clone(), ce.rhs.clone()), (Value::int(1), Value::int(-1)));
        assert!(ce.reverified);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "counterexample");
        assert_eq!(json["label"], "CONJECTURE");
    }

    #[test]
    fn mod3_conjecture_small_range() {
        let report = conjecture_search(ConjectureId::C14, SearchBounds { n_max: 27, k_max: 0, m_max: 0 }).unwrap();
        assert_eq!(report.status_str(), "verified-up-to");
        assert_eq!(report.verified_up_to, 27);
        assert_eq!(report.points_checked, 28);
    }

    #[test]
    fn unknown_conjecture_is_rejected() {
        assert!(ConjectureId::parse("c99").is_err());
        assert_eq!(ConjectureId::parse("c13b").unwrap(), ConjectureId::C13b);
    }

    #[test]
    fn lifts_parse() {
        assert_eq!(ResidueLift::parse("2"), Some(ResidueLift::Mod2));
        assert_eq!(ResidueLift::parse("mu"), Some(ResidueLift::Mu));
        assert_eq!(ResidueLift::parse("5"), None);
        assert!(small(&ExactInt::one()).is_some());
        assert!(ExactInt::zero().is_zero());
    }
}
