//! Closed forms and recurrences for the Catalan-type sequences and the
//! polynomial families built from them.
//!
//! Recursive families (Carlitz numbers, `g_n(r,q)`) are memoized in
//! [`SeqTable`]s whose tables only ever grow, so values never depend on query
//! order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::exact_arith::{int, int_binomial, ExactInt, ExactRat};
use crate::qseries::{q_binomial, q_int, q_pochhammer, q_ratio_binomial, BaseSign, QPoly, QRat};
use crate::value::Value;

/// `C_n = binom(2n, n) / (n+1)`.
pub fn catalan(n: i64) -> ExactInt {
    catalan_power(n, 1)
}

/// Coefficient of `z^n` in `c(z)^k`: `k/(2n+k) binom(2n+k, n)`, with
/// `C^{(0)}_n = [n = 0]` and 0 for negative `n`.
pub fn catalan_power(n: i64, k: i64) -> ExactInt {
    assert!(k >= 0, "catalan_power needs k >= 0");
    if n < 0 {
        return ExactInt::zero();
    }
    if k == 0 {
        return int((n == 0) as i64);
    }
    int_binomial(2 * n + k, n) * int(k) / int(2 * n + k)
}

/// `binom(2n, n)`.
pub fn central_binomial(n: i64) -> ExactInt {
    int_binomial(2 * n, n)
}

/// Entry `C^{(2j+1)}_{i-j} = (2j+1)/(i+j+1) binom(2i, i-j)` of the Catalan
/// triangle; zero above the diagonal.
pub fn ballot(i: i64, j: i64) -> ExactInt {
    if j > i || j < 0 {
        return ExactInt::zero();
    }
    catalan_power(i - j, 2 * j + 1)
}

/// Gould polynomial `G_n(x, r) = x/(rn+x) binom(rn+x, n)`, evaluated through
/// the pole-free product `x/n! Π_{i=1}^{n-1} (rn+x-i)`.
pub fn gould(n: i64, x: i64, r: i64) -> ExactRat {
    assert!(n >= 0, "gould needs n >= 0");
    if n == 0 {
        return ExactRat::from_integer(int(1));
    }
    let mut num = int(x);
    for i in 1..n {
        num *= int(r * n + x - i);
    }
    ExactRat::new(num, crate::exact_arith::factorial(n as u64))
}

/// Coefficient of `x^{n-2j}` in the Fibonacci polynomial `F_n`:
/// `(-1)^j binom(n-j, j)`.
pub fn fib_coeff(n: i64, j: i64) -> ExactInt {
    let b = int_binomial(n - j, j);
    if j % 2 == 0 {
        b
    } else {
        -b
    }
}

/// Coefficient of `x^{n-2j}` in the Lucas variant `L_n`:
/// `(-1)^j n/(n-j) binom(n-j, j)`, with `L_0 = 1`.
pub fn lucas_coeff(n: i64, j: i64) -> ExactInt {
    if n == 0 {
        return int((j == 0) as i64);
    }
    if j < 0 || 2 * j > n {
        return ExactInt::zero();
    }
    // n/(n-j) binom(n-j, j) = n/j binom(n-j-1, j-1) for j >= 1.
    let b = if j == 0 {
        int(1)
    } else {
        int_binomial(n - j - 1, j - 1) * int(n) / int(j)
    };
    if j % 2 == 0 {
        b
    } else {
        -b
    }
}

/// Dense coefficients (index = power of `x`) of `F_n(x)`.
pub fn fib_poly(n: i64) -> Vec<ExactInt> {
    let mut v = vec![ExactInt::zero(); n as usize + 1];
    for j in 0..=n / 2 {
        v[(n - 2 * j) as usize] = fib_coeff(n, j);
    }
    v
}

/// Dense coefficients of `L_n(x)`.
pub fn lucas_poly(n: i64) -> Vec<ExactInt> {
    let mut v = vec![ExactInt::zero(); n as usize + 1];
    for j in 0..=n / 2 {
        v[(n - 2 * j) as usize] = lucas_coeff(n, j);
    }
    v
}

/// Carlitz q-Catalan number `c_n(q)`, from `c_n = Σ q^k c_k c_{n-1-k}`.
pub fn carlitz(n: usize) -> QPoly {
    static TABLE: OnceLock<SeqTable> = OnceLock::new();
    TABLE
        .get_or_init(|| SeqTable::new(SeqFamily::Carlitz))
        .term(n)
        .into_poly()
}

/// `g_n(r, q) = Σ_{k_1+...+k_r = n-1} Π_j q^{(r-j) k_j} g_{k_j}(r, q)`,
/// `g_0 = 1`.
pub fn gfun(n: usize, r: i64) -> QPoly {
    assert!(r >= 1, "gfun needs r >= 1");
    static TABLES: OnceLock<RwLock<HashMap<i64, Arc<SeqTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    let table = {
        let read = tables.read().unwrap();
        read.get(&r).cloned()
    };
    let table = match table {
        Some(t) => t,
        None => tables
            .write()
            .unwrap()
            .entry(r)
            .or_insert_with(|| Arc::new(SeqTable::new(SeqFamily::GFun(r))))
            .clone(),
    };
    table.term(n).into_poly()
}

/// `C_n(q) = [2n, n] / [n+1]`.
pub fn q_catalan(n: i64) -> QPoly {
    q_catalan_power(n, 1)
}

/// `C^{(k)}_n(q) = [k]/[2n+k] [2n+k, n]`, with `C^{(0)}_n(q) = [n = 0]`.
pub fn q_catalan_power(n: i64, k: i64) -> QPoly {
    assert!(k >= 0, "q_catalan_power needs k >= 0");
    if n < 0 {
        return QPoly::zero();
    }
    if k == 0 {
        return QPoly::constant((n == 0) as i64);
    }
    (&q_int(k) * &q_binomial(2 * n + k, n))
        .exact_div(&q_int(2 * n + k))
        .expect("q-Catalan powers are polynomials")
}

/// `C(n, k, q) = [k]/[2n+k] [2n+k, n] (-q^{n+1}; q)_{k-1} / (-q; q)_{k-1}`.
///
/// This is a rational function in general (for instance at `n = 2, k = 3`),
/// so the reduced quotient is returned.
pub fn andrews_c(n: i64, k: i64) -> QRat {
    assert!(n >= 0 && k >= 1, "andrews_c needs n >= 0, k >= 1");
    let num = &q_catalan_power(n, k) * &q_pochhammer(BaseSign::Minus, 2 * (n + 1), (k - 1) as u32);
    let den = q_pochhammer(BaseSign::Minus, 2, (k - 1) as u32);
    QRat::new(num, den).expect("nonzero denominator")
}

/// `M_n = C_n(q) (1+q)/(1+q^{n+1}) q^n / (-q; q)_n^2`.
pub fn andrews_moment(n: i64) -> QRat {
    assert!(n >= 0, "andrews_moment needs n >= 0");
    let poch = q_pochhammer(BaseSign::Minus, 2, n as u32);
    let num = (&q_catalan(n) * &QPoly::from_coeffs(&[1, 1])).shift2(2 * n);
    let den = &(QPoly::one() + QPoly::q_pow(n + 1)) * &(&poch * &poch);
    QRat::new(num, den).expect("nonzero denominator")
}

/// `h_n(x, q) = [2n+x-1, n]`.
pub fn h_poly(n: i64, x: i64) -> QPoly {
    q_binomial(2 * n + x - 1, n)
}

/// Coefficient of `x^{n-2j}` in `Σ_j (-1)^j q^{e·C(j,2)} [n]/[n-j] [n-j, j] x^{n-2j}`.
///
/// `e = 1` gives the q-Lucas polynomials `L_n(x, q)`; `e = 2` gives the
/// polynomials whose moments are the λ sequence.
pub fn q_lucas_coeff(n: i64, j: i64, e: i64) -> QPoly {
    if n == 0 {
        return QPoly::constant((j == 0) as i64);
    }
    if j < 0 || 2 * j > n {
        return QPoly::zero();
    }
    let base = q_ratio_binomial(n, n - j, j)
        .expect("no pole")
        .to_poly()
        .expect("q-Lucas coefficients are polynomials");
    let signed = if j % 2 == 0 { base } else { -base };
    signed.shift2(e * j * (j - 1))
}

/// Named sequence families, each evaluated term by term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    Catalan,
    CatalanPower(i64),
    CentralBinom,
    /// Row `i` of the Catalan triangle.
    BallotTriangle,
    /// `G_n(x, r)` sampled at `x = 1`.
    Gould(i64),
    /// Signed coefficient row of `F_n`.
    FibCoeff,
    /// Signed coefficient row of `L_n`.
    LucasCoeff,
    Carlitz,
    GFun(i64),
    QCatalan,
    QCatalanPower(i64),
    AndrewsC(i64),
    AndrewsMoment,
    /// `h_n(x, q)` at a fixed integer `x`.
    HPoly(i64),
}

impl SeqFamily {
    fn compute(&self, n: usize, prev: &[Value]) -> Value {
        let ni = n as i64;
        match *self {
            SeqFamily::Catalan => Value::Int(catalan(ni)),
            SeqFamily::CatalanPower(k) => Value::Int(catalan_power(ni, k)),
            SeqFamily::CentralBinom => Value::Int(central_binomial(ni)),
            SeqFamily::BallotTriangle => Value::Vector((0..=ni).map(|j| Value::Int(ballot(ni, j))).collect()),
            SeqFamily::Gould(r) => Value::Rat(gould(ni, 1, r)),
            SeqFamily::FibCoeff => Value::Vector((0..=ni / 2).map(|j| Value::Int(fib_coeff(ni, j))).collect()),
            SeqFamily::LucasCoeff => Value::Vector((0..=ni / 2).map(|j| Value::Int(lucas_coeff(ni, j))).collect()),
            SeqFamily::Carlitz => {
                if n == 0 {
                    return Value::Poly(QPoly::one());
                }
                let c: Vec<&QPoly> = prev.iter().map(Value::as_poly).collect();
                let mut acc = QPoly::zero();
                for k in 0..n {
                    acc += (c[k] * c[n - 1 - k]).shift2(2 * k as i64);
                }
                Value::Poly(acc)
            }
            SeqFamily::GFun(r) => {
                if n == 0 {
                    return Value::Poly(QPoly::one());
                }
                let g: Vec<&QPoly> = prev.iter().map(Value::as_poly).collect();
                // Product of the r truncated series Σ_k q^{(r-j)k} g_k z^k.
                let mut series = vec![QPoly::one()];
                series.resize(n, QPoly::zero());
                for j in 1..=r {
                    let factor: Vec<QPoly> = (0..n).map(|k| g[k].shift2(2 * (r - j) * k as i64)).collect();
                    let mut next = vec![QPoly::zero(); n];
                    for (a, sa) in series.iter().enumerate() {
                        if sa.is_zero() {
                            continue;
                        }
                        for (b, fb) in factor.iter().enumerate().take(n - a) {
                            next[a + b] += sa * fb;
                        }
                    }
                    series = next;
                }
                Value::Poly(series[n - 1].clone())
            }
            SeqFamily::QCatalan => Value::Poly(q_catalan(ni)),
            SeqFamily::QCatalanPower(k) => Value::Poly(q_catalan_power(ni, k)),
            SeqFamily::AndrewsC(k) => Value::RatFn(andrews_c(ni, k)),
            SeqFamily::AndrewsMoment => Value::RatFn(andrews_moment(ni)),
            SeqFamily::HPoly(x) => Value::Poly(h_poly(ni, x)),
        }
    }
}

impl Value {
    fn as_poly(&self) -> &QPoly {
        match self {
            Value::Poly(p) => p,
            other => panic!("expected a polynomial, found {other}"),
        }
    }

    fn into_poly(self) -> QPoly {
        match self {
            Value::Poly(p) => p,
            other => panic!("expected a polynomial, found {other}"),
        }
    }
}

/// Memoized table of a [`SeqFamily`]. Readers share the table; a miss takes
/// the write lock and extends it up to the requested index.
#[derive(Debug)]
pub struct SeqTable {
    family: SeqFamily,
    memo: RwLock<Vec<Value>>,
}

impl SeqTable {
    pub fn new(family: SeqFamily) -> Self {
        SeqTable {
            family,
            memo: RwLock::new(Vec::new()),
        }
    }

    pub fn family(&self) -> SeqFamily {
        self.family
    }

    pub fn term(&self, n: usize) -> Value {
        if let Some(v) = self.memo.read().unwrap().get(n) {
            return v.clone();
        }
        let mut memo = self.memo.write().unwrap();
        while memo.len() <= n {
            let next = self.family.compute(memo.len(), &memo);
            memo.push(next);
        }
        memo[n].clone()
    }

    /// Number of memoized terms.
    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    #[test]
    fn catalan_examples() {
        let first: Vec<ExactInt> = (0..5).map(catalan).collect();
        assert_eq!(first, [1, 1, 2, 5, 14].map(int).to_vec());
        for n in 0..=20 {
            assert_eq!(catalan_power(n, 1), catalan(n));
        }
        // Triple convolution of the Catalan sequence.
        let c: Vec<ExactInt> = (0..3).map(catalan).collect();
        let mut cube2 = int(0);
        for a in 0..3 {
            for b in 0..3 - a {
                cube2 += &c[a] * &c[b] * &c[2 - a - b];
            }
        }
        assert_eq!(catalan_power(2, 3), cube2);
        assert_eq!(cube2, int(9));
    }

    #[test]
    fn ballot_rows() {
        let row4: Vec<ExactInt> = (0..5).map(|j| ballot(4, j)).collect();
        assert_eq!(row4, [14, 28, 20, 7, 1].map(int).to_vec());
        assert_eq!(ballot(6, 2), int(275));
        assert_eq!(ballot(5, 5), int(1));
        assert_eq!(ballot(2, 3), int(0));
    }

    #[test]
    fn gould_examples() {
        for n in 0..=10 {
            assert_eq!(gould(n, 1, 2), ExactRat::from_integer(catalan(n)));
        }
        assert_eq!(gould(0, -7, 3), rat(1, 1));
        for n in 0..=8 {
            for k in 1..=8 {
                assert_eq!(gould(n, k, 2), ExactRat::from_integer(catalan_power(n, k)));
            }
        }
        // At the pole x = -rn the product form stays finite.
        assert_eq!(gould(2, -4, 2), rat(-4 * -1, 2));
    }

    #[test]
    fn fibonacci_and_lucas() {
        assert_eq!(fib_poly(4), [1, 0, -3, 0, 1].map(int).to_vec());
        assert_eq!(lucas_poly(2), [-2, 0, 1].map(int).to_vec());
        for n in 0..10 {
            assert_eq!(fib_coeff(n, 0), int(1));
        }
        // Recurrence oracles.
        for n in 2..12 {
            let mut f = vec![int(0); n as usize + 1];
            for (d, c) in fib_poly(n - 1).into_iter().enumerate() {
                f[d + 1] += c;
            }
            for (d, c) in fib_poly(n - 2).into_iter().enumerate() {
                f[d] -= c;
            }
            assert_eq!(f, fib_poly(n));
            if n >= 3 {
                let mut l = vec![int(0); n as usize + 1];
                for (d, c) in lucas_poly(n - 1).into_iter().enumerate() {
                    l[d + 1] += c;
                }
                for (d, c) in lucas_poly(n - 2).into_iter().enumerate() {
                    l[d] -= c;
                }
                assert_eq!(l, lucas_poly(n));
            }
        }
    }

    #[test]
    fn carlitz_examples() {
        assert_eq!(carlitz(2), p(&[1, 1]));
        assert_eq!(carlitz(3), p(&[1, 2, 1, 1]));
        for n in 0..=6 {
            assert_eq!(carlitz(2 * n).specialize(-1).unwrap(), int((n == 0) as i64));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(carlitz(2 * n + 1).specialize(-1).unwrap(), int(sign) * catalan(n as i64));
        }
    }

    #[test]
    fn gfun_examples() {
        for n in 0..=8 {
            assert_eq!(gfun(n, 2), carlitz(n));
        }
        for r in 1..=5 {
            assert!(gfun(0, r).is_one());
            for n in 0..=5usize {
                let expected = int_binomial(r * n as i64 + 1, n as i64) / int(r * n as i64 + 1);
                assert_eq!(gfun(n, r).specialize(1).unwrap(), expected, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn q_catalan_examples() {
        assert_eq!(q_catalan(2), p(&[1, 0, 1]));
        assert_eq!(q_catalan(3), &p(&[1, -1, 1]) * &q_int(5));
        for n in 0..=10 {
            assert_eq!(q_catalan(n).specialize(-1).unwrap(), int_binomial(n, n / 2));
        }
        for n in 0..=8 {
            for k in 1..=8 {
                let alt = q_binomial(2 * n + k - 2, n) - q_binomial(2 * n + k - 2, n - 2).shift2(2 * k);
                assert_eq!(q_catalan_power(n, k), alt, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn andrews_examples() {
        assert_eq!(andrews_moment(0), QRat::one());
        let expected = QRat::new(QPoly::q_pow(1), &p(&[1, 1]) * &p(&[1, 0, 1])).unwrap();
        assert_eq!(andrews_moment(1), expected);
        for n in 0..=6 {
            let at1 = andrews_moment(n).specialize(1).unwrap();
            let four_n = num_traits::pow(int(4), n as usize);
            assert_eq!(at1, ExactRat::new(catalan(n), four_n));
        }
        // C(2, 3, q) is a genuine rational function.
        assert!(!andrews_c(2, 3).is_poly());
        assert_eq!(andrews_c(3, 1), QRat::from_poly(q_catalan(3)));
    }

    #[test]
    fn h_poly_examples() {
        assert!(h_poly(0, 5).is_one());
        assert_eq!(h_poly(1, 2), q_int(3));
        for n in 0..6 {
            assert_eq!(h_poly(n, 1).specialize(1).unwrap(), central_binomial(n));
        }
    }

    #[test]
    fn seq_table_is_order_independent() {
        let a = SeqTable::new(SeqFamily::Carlitz);
        let b = SeqTable::new(SeqFamily::Carlitz);
        let late = a.term(6);
        for n in 0..=6 {
            b.term(n);
        }
        assert_eq!(b.term(6), late);
        assert_eq!(a.len(), 7);
        let t = SeqTable::new(SeqFamily::BallotTriangle);
        assert_eq!(t.term(4), Value::from((0..5).map(|j| ballot(4, j)).collect::<Vec<_>>()));
    }
}
