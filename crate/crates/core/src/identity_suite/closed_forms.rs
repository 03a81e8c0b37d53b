//! Closed-form right-hand sides: product formulas, their q-analogues and
//! the random parameter samples used for the general product lemma.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact_arith::{factorial, int, ExactInt, ExactRat};
use crate::qseries::{q_binomial, q_factorial, q_int, q_pochhammer, q_pow_binom2, BaseSign, QError, QPoly, QRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("pole: {0}")]
    Pole(String),
    #[error("negative factorial argument {0}")]
    NegativeFactorial(i64),
    #[error(transparent)]
    Q(#[from] QError),
}

fn fact(n: i64) -> Result<ExactInt, ClosedFormError> {
    u64::try_from(n)
        .map(factorial)
        .map_err(|_| ClosedFormError::NegativeFactorial(n))
}

fn qfact(n: i64) -> Result<QPoly, ClosedFormError> {
    u32::try_from(n)
        .map(q_factorial)
        .map_err(|_| ClosedFormError::NegativeFactorial(n))
}

fn ratio(num: ExactInt, den: ExactInt, what: &str) -> Result<ExactRat, ClosedFormError> {
    if den.is_zero() {
        return Err(ClosedFormError::Pole(what.to_string()));
    }
    Ok(ExactRat::new(num, den))
}

fn qratio(num: QPoly, den: QPoly, what: &str) -> Result<QRat, ClosedFormError> {
    QRat::new(num, den).map_err(|_| ClosedFormError::Pole(what.to_string()))
}

/// The ratio `v(n, m, k) = Π_{l<2m}(2n-1+k+l) / Π_{l<m}(n+l)(n+k+l+m)` of
/// consecutive products.
pub fn krattenthaler_v(n: i64, m: i64, k: i64) -> Result<ExactRat, ClosedFormError> {
    let num: ExactInt = (0..2 * m).map(|l| int(2 * n - 1 + k + l)).product();
    let den: ExactInt = (0..m).map(|l| int(n + l) * int(n + k + l + m)).product();
    ratio(num, den, "v(n, m, k) denominator")
}

/// The same ratio written with factorials:
/// `(n-1)!(k+m-1+n)!(2m+2n+k-2)! / ((2n+k-2)!(m+n-1)!(n+2m+k-1)!)`.
pub fn krattenthaler_v_factorial(n: i64, m: i64, k: i64) -> Result<ExactRat, ClosedFormError> {
    let num = fact(n - 1)? * fact(k + m - 1 + n)? * fact(2 * m + 2 * n + k - 2)?;
    let den = fact(2 * n + k - 2)? * fact(m + n - 1)? * fact(n + 2 * m + k - 1)?;
    ratio(num, den, "factorial form")
}

/// `Π_{j=1}^n v(j, m, k)`, the common value of the shifted binomial
/// determinants.
pub fn krattenthaler_rhs(n: i64, m: i64, k: i64) -> Result<ExactRat, ClosedFormError> {
    (1..=n).try_fold(ExactRat::one(), |acc, j| Ok(acc * krattenthaler_v(j, m, k)?))
}

/// q-analogue `q^{n·C(m,2)} Π_{j=1}^n Π_{l<2m}[2j-1+k+l] / Π_{l<m}[j+l][j+k+m+l]`.
pub fn q_krattenthaler_rhs(n: i64, m: i64, k: i64) -> Result<QRat, ClosedFormError> {
    let mut num = q_pow_binom2(m).pow(n.max(0) as u32);
    let mut den = QPoly::one();
    for j in 1..=n {
        for l in 0..2 * m {
            num *= q_int(2 * j - 1 + k + l);
        }
        for l in 0..m {
            den *= q_int(j + l) * q_int(j + k + m + l);
        }
    }
    qratio(num, den, "q-product denominator")
}

/// A product of factors `1 - q^e`, kept as exponent multiplicities so that
/// zero factors cancel before anything is divided.
#[derive(Default)]
struct FactorBag(BTreeMap<i64, i64>);

impl FactorBag {
    fn push(&mut self, e: i64, times: i64) {
        *self.0.entry(e).or_insert(0) += times;
    }

    /// Multiplies by `(q^a; q)_count`, or divides when `power` is negative.
    /// A negative count means `(q^a; q)_{-k} = 1 / (q^{a-k}; q)_k`.
    fn pochhammer(&mut self, a: i64, count: i64, power: i64) {
        if count >= 0 {
            (a..a + count).for_each(|e| self.push(e, power));
        } else {
            (a + count..a).for_each(|e| self.push(e, -power));
        }
    }

    fn value(&self) -> Result<QRat, ClosedFormError> {
        let zero = self.0.get(&0).copied().unwrap_or(0);
        if zero < 0 {
            return Err(ClosedFormError::Pole("vanishing Pochhammer factor in a denominator".into()));
        }
        if zero > 0 {
            return Ok(QRat::zero());
        }
        let (mut num, mut den) = (QPoly::one(), QPoly::one());
        for (&e, &times) in &self.0 {
            let factor = (QPoly::one() - QPoly::q_pow(e)).pow(times.unsigned_abs() as u32);
            if times > 0 {
                num *= factor;
            } else {
                den *= factor;
            }
        }
        qratio(num, den, "Pochhammer product")
    }
}

/// `w(n, x, m) = q^{n·C(m,2)}/(1-q)^{mn} Π_{j<m}[j]!/[n+j]!
/// Π_{j=1}^n (q^{x+2j-2};q)_{m-j} (q^{x+2m+j-2};q)_j`, where Pochhammer
/// symbols with a negative count are reciprocals.
pub fn theorem11_w(n: i64, x: i64, m: i64) -> Result<QRat, ClosedFormError> {
    let mut bag = FactorBag::default();
    bag.push(1, -(m * n).max(0));
    for j in 1..=n {
        bag.pochhammer(x + 2 * j - 2, m - j, 1);
        bag.pochhammer(x + 2 * m + j - 2, j, 1);
    }
    let mut acc = bag.value()? * QRat::from_poly(q_pow_binom2(m).pow(n.max(0) as u32));
    for j in 0..m {
        acc = acc * qratio(qfact(j)?, qfact(n + j)?, "factorial ratio")?;
    }
    Ok(acc)
}

/// `q^{n·C(m,2)} Π_{j<m} (q^{x+j+1};q)_{m+n-1-2j} / (q^{j+1};q)_{m+n-1-2j}`.
pub fn final_remark_rhs(n: i64, m: i64, x: i64) -> Result<QRat, ClosedFormError> {
    let mut bag = FactorBag::default();
    for j in 0..m {
        let count = m + n - 1 - 2 * j;
        bag.pochhammer(x + j + 1, count, 1);
        bag.pochhammer(j + 1, count, -1);
    }
    Ok(bag.value()? * QRat::from_poly(q_pow_binom2(m).pow(n.max(0) as u32)))
}

/// `q^n (1+q^k)/(1+q^{n+k}) · [k]/[2n+k] · [2n+k, n] / ((-q;q)_n (-q^k;q)_n)`.
pub fn andrews_analogue_rhs(n: i64, k: i64) -> Result<QRat, ClosedFormError> {
    let nn = n.max(0) as u32;
    let num = QPoly::q_pow(n)
        * (QPoly::one() + QPoly::q_pow(k))
        * q_int(k)
        * q_binomial(2 * n + k, n);
    let den = (QPoly::one() + QPoly::q_pow(n + k))
        * q_int(2 * n + k)
        * q_pochhammer(BaseSign::Minus, 2, nn)
        * q_pochhammer(BaseSign::Minus, 2 * k, nn);
    qratio(num, den, "Andrews analogue denominator")
}

/// `(-q^{n+1};q)_{k-1}/(-q;q)_{k-1}`, the prefactor relating the
/// Pochhammer-weighted determinant to `C_n^{(k)}(q)`.
pub fn pochhammer_prefactor(n: i64, k: i64) -> Result<QRat, ClosedFormError> {
    let c = u32::try_from(k - 1).map_err(|_| ClosedFormError::NegativeFactorial(k - 1))?;
    qratio(
        q_pochhammer(BaseSign::Minus, 2 * (n + 1), c),
        q_pochhammer(BaseSign::Minus, 2, c),
        "(-q;q)_{k-1}",
    )
}

/// `Π_{j=1}^{n-1} Π_{i=1}^{j} (2m+i+j)/(i+j)`.
pub fn catalan_hankel_product(n: i64, m: i64) -> ExactRat {
    let mut acc = ExactRat::one();
    for j in 1..n {
        for i in 1..=j {
            acc *= ExactRat::new(int(2 * m + i + j), int(i + j));
        }
    }
    acc
}

/// `Π_{j=1}^{n-1} j!/(2j)! · (2m+2j)!/(2m+j)!`.
pub fn catalan_hankel_factorials(n: i64, m: i64) -> Result<ExactRat, ClosedFormError> {
    let mut acc = ExactRat::one();
    for j in 1..n {
        acc *= ratio(fact(j)? * fact(2 * m + 2 * j)?, fact(2 * j)? * fact(2 * m + j)?, "factorials")?;
    }
    Ok(acc)
}

/// `Π_{j<m} j!·j!·(n+j)! / (n+m+j)!`, the shifted Hilbert determinant.
pub fn hilbert_det(n: i64, m: i64) -> Result<ExactRat, ClosedFormError> {
    let mut acc = ExactRat::one();
    for j in 0..m {
        acc *= ratio(fact(j)? * fact(j)? * fact(n + j)?, fact(n + m + j)?, "factorials")?;
    }
    Ok(acc)
}

/// `u(n, m) = Π_{j=0}^{n-1} (j+m)!² / (j!(2m+j)!)`.
pub fn hilbert_u(n: i64, m: i64) -> Result<ExactRat, ClosedFormError> {
    let mut acc = ExactRat::one();
    for j in 0..n {
        acc *= ratio(fact(j + m)? * fact(j + m)?, fact(j)? * fact(2 * m + j)?, "factorials")?;
    }
    Ok(acc)
}

/// `v(n, m) = Π_{j<m} (n+j)!(m+j)! / (j!(n+m+j)!)`.
pub fn hilbert_v(n: i64, m: i64) -> Result<ExactRat, ClosedFormError> {
    let mut acc = ExactRat::one();
    for j in 0..m {
        acc *= ratio(fact(n + j)? * fact(m + j)?, fact(j)? * fact(n + m + j)?, "factorials")?;
    }
    Ok(acc)
}

/// Product side of the general binomial determinant lemma for a strictly
/// decreasing sequence `l = (L_1, ..., L_n)` and shift `a`:
/// `Π_i (L_i+A-n)! / ((L_i+n)!(A-2i)!) · Π_{i<j} (L_i-L_j)(L_i+L_j+A+1)`.
pub fn lemma3_rhs(l: &[i64], a: i64) -> Result<ExactRat, ClosedFormError> {
    let n = l.len() as i64;
    let mut acc = ExactRat::one();
    for (idx, &li) in l.iter().enumerate() {
        let i = idx as i64 + 1;
        acc *= ratio(fact(li + a - n)?, fact(li + n)? * fact(a - 2 * i)?, "factorials")?;
    }
    for j in 0..l.len() {
        for i in 0..j {
            acc *= ExactRat::from_integer(int(l[i] - l[j]) * int(l[i] + l[j] + a + 1));
        }
    }
    Ok(acc)
}

/// q-analogue of [`lemma3_rhs`], carrying the extra `q^{Σ i L_i}`.
pub fn q_lemma3_rhs(l: &[i64], a: i64) -> Result<QRat, ClosedFormError> {
    let n = l.len() as i64;
    let weight: i64 = l.iter().enumerate().map(|(idx, li)| (idx as i64 + 1) * li).sum();
    let mut num = QPoly::q_pow(weight);
    let mut den = QPoly::one();
    for (idx, &li) in l.iter().enumerate() {
        let i = idx as i64 + 1;
        num *= qfact(li + a - n)?;
        den *= qfact(li + n)? * qfact(a - 2 * i)?;
    }
    for j in 0..l.len() {
        for i in 0..j {
            num *= q_int(l[i] - l[j]) * q_int(l[i] + l[j] + a + 1);
        }
    }
    qratio(num, den, "q-factorials")
}

/// Deterministic random parameters for the general lemma: `n` distinct
/// values of `L` in `-n..=n+6`, sorted decreasingly, and `A` in
/// `2n..=2n+6`. Every factorial argument of the product side is then
/// nonnegative.
pub fn lemma3_sample(seed: u64, n: usize) -> (Vec<i64>, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ni = n as i64;
    let a = 2 * ni + rng.gen_range(0..=6);
    let span = (2 * ni + 7) as usize;
    let mut l: Vec<i64> = sample(&mut rng, span, n).into_iter().map(|v| v as i64 - ni).collect();
    l.sort_unstable_by(|x, y| y.cmp(x));
    (l, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::catalan_power;
    use crate::exact_arith::rat_from_int;

    #[test]
    fn single_column_products_give_catalan_powers() {
        for n in 0..=6 {
            for k in 0..=6 {
                assert_eq!(krattenthaler_rhs(n, 1, k).unwrap(), rat_from_int(&catalan_power(n, k + 1)));
            }
        }
    }

    #[test]
    fn zero_width_product_is_one() {
        assert_eq!(krattenthaler_rhs(5, 0, 3).unwrap(), ExactRat::one());
        assert_eq!(krattenthaler_v(7, 0, 2).unwrap(), ExactRat::one());
    }

    #[test]
    fn ratio_and_factorial_forms_agree() {
        for n in 1..=6 {
            for m in 0..=4 {
                for k in 0..=4 {
                    assert_eq!(krattenthaler_v(n, m, k).unwrap(), krattenthaler_v_factorial(n, m, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn theorem11_w_single_column() {
        for n in 0..=5 {
            for x in 1..=4 {
                assert_eq!(theorem11_w(n, x, 1).unwrap(), QRat::from_poly(q_binomial(2 * n + x - 1, n)));
            }
        }
    }

    #[test]
    fn hilbert_products_agree() {
        for n in 0..=6 {
            for m in 0..=5 {
                let ratio = hilbert_det(n, m).unwrap() / hilbert_det(0, m).unwrap();
                assert_eq!(ratio, hilbert_v(n, m).unwrap());
                assert_eq!(hilbert_u(n, m).unwrap(), hilbert_v(n, m).unwrap());
            }
        }
    }

    #[test]
    fn samples_are_strictly_decreasing_and_in_domain() {
        for seed in 0..50 {
            for n in 1..=5 {
                let (l, a) = lemma3_sample(seed, n);
                assert_eq!(l.len(), n);
                assert!(l.windows(2).all(|w| w[0] > w[1]));
                assert!(a >= 2 * n as i64);
                assert!(lemma3_rhs(&l, a).is_ok());
            }
        }
        assert_eq!(lemma3_sample(9, 3), lemma3_sample(9, 3));
    }

    #[test]
    fn catalan_hankel_forms_agree() {
        for n in 0..=7 {
            for m in 0..=4 {
                assert_eq!(catalan_hankel_product(n, m), catalan_hankel_factorials(n, m).unwrap());
            }
        }
    }
}
