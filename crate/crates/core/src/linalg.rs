//! Dense exact linear algebra over the scalar rings.
//!
//! Three independent determinant engines are provided: fraction-free Bareiss
//! elimination (the workhorse), Dodgson condensation, and cofactor expansion
//! (the reference oracle). Over fraction fields there are inverses, null
//! spaces, and a determinant that clears denominators row by row.

use thiserror::Error;

use crate::exact_arith::ring::{Field, Fraction, HasFractionField, Ring, RingTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("exact division failed during elimination (ring is not an integral domain?)")]
    InexactDivision,
    #[error("column elimination did not produce a triangular matrix at ({0}, {1})")]
    NotTriangular(usize, usize),
    #[error("moment M_{0} is zero")]
    ZeroMoment(usize),
    #[error("cofactor expansion is limited to {max} rows, got {got}")]
    TooLarge { max: usize, got: usize },
}

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RingMatrix { rows, cols, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> R>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    /// Builds an `n x n` matrix, propagating the first builder error.
    pub fn try_square<E, F: FnMut(usize, usize) -> Result<R, E>>(n: usize, mut f: F) -> Result<Self, E> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j)?);
            }
        }
        Ok(RingMatrix { rows: n, cols: n, entries })
    }

    pub fn square<F: FnMut(usize, usize) -> R>(n: usize, f: F) -> Self {
        RingMatrix::from_fn(n, n, f)
    }

    pub fn identity(n: usize) -> Self {
        RingMatrix::square(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn tag(&self) -> RingTag {
        R::TAG
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        RingMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Reverses the order of both rows and columns.
    pub fn reverse(&self) -> Self {
        let (r, c) = (self.rows, self.cols);
        RingMatrix::from_fn(r, c, |i, j| self.get(r - 1 - i, c - 1 - j).clone())
    }

    /// Leading principal `k x k` block.
    pub fn leading(&self, k: usize) -> Self {
        RingMatrix::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, mut f: F) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<S: Ring, E, F: FnMut(&R) -> Result<S, E>>(&self, f: F) -> Result<RingMatrix<S>, E> {
        Ok(RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RingMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        }))
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect())
    }

    fn require_square(&self) -> Result<usize, LinalgError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<R: HasFractionField> RingMatrix<R> {
    pub fn to_fraction_field(&self) -> RingMatrix<R::Frac> {
        self.map(|x| x.to_frac())
    }
}

/// Fraction-free Gaussian elimination (Bareiss).
///
/// Zero pivots are handled by swapping in a later row with a nonzero entry;
/// if the whole column below the diagonal vanishes the determinant is 0.
pub fn det_bareiss<R: Ring>(m: &RingMatrix<R>) -> Result<R, LinalgError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = row[j].mul(pivot).sub(&lead.mul(&pivot_row[j]));
                row[j] = if prev.is_one() {
                    num
                } else {
                    num.exact_div(&prev).ok_or(LinalgError::InexactDivision)?
                };
            }
            row[k] = R::zero();
        }
        prev = pivot.clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Dodgson condensation. Each step replaces the current matrix by its
/// connected 2x2 minors divided by the interior of the matrix two steps back;
/// if one of those interior entries is zero the computation restarts with
/// [`det_bareiss`].
pub fn det_condensation<R: Ring>(m: &RingMatrix<R>) -> Result<R, LinalgError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut prev: Option<Vec<Vec<R>>> = None;
    let mut cur: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for size in (1..n).rev() {
        let mut next = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let minor = cur[i][j].mul(&cur[i + 1][j + 1]).sub(&cur[i][j + 1].mul(&cur[i + 1][j]));
                let entry = match &prev {
                    None => minor,
                    Some(p) => {
                        let d = &p[i + 1][j + 1];
                        if d.is_zero() {
                            return det_bareiss(m);
                        }
                        minor.exact_div(d).ok_or(LinalgError::InexactDivision)?
                    }
                };
                row.push(entry);
            }
            next.push(row);
        }
        prev = Some(std::mem::replace(&mut cur, next));
    }
    Ok(cur[0][0].clone())
}

/// Largest size accepted by [`det_cofactor`].
pub const COFACTOR_MAX: usize = 16;

/// Laplace expansion along rows, memoized over the set of used columns so it
/// stays exponential in `n` rather than factorial.
pub fn det_cofactor<R: Ring>(m: &RingMatrix<R>) -> Result<R, LinalgError> {
    let n = m.require_square()?;
    if n > COFACTOR_MAX {
        return Err(LinalgError::TooLarge { max: COFACTOR_MAX, got: n });
    }
    // minors[mask] = determinant of the bottom-right minor built from the
    // last popcount(mask) rows and the columns in `mask`.
    let full = 1usize << n;
    let mut minors: Vec<R> = vec![R::zero(); full];
    minors[0] = R::one();
    for mask in 1..full {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = R::zero();
        let mut position = 0usize;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = m.get(row, col);
            if !entry.is_zero() {
                let term = entry.mul(&minors[mask & !(1 << col)]);
                acc = if position.is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
            }
            position += 1;
        }
        minors[mask] = acc;
    }
    Ok(minors[full - 1].clone())
}

/// Determinant over a fraction field computed by scaling every row with a
/// common denominator, running Bareiss over the base ring, and dividing back.
pub fn det_cleared<F: Fraction>(m: &RingMatrix<F>) -> Result<F, LinalgError> {
    let n = m.require_square()?;
    let mut scale = F::Base::one();
    let mut base_entries = Vec::with_capacity(n * n);
    for i in 0..n {
        let row = m.row(i);
        let l = row
            .iter()
            .fold(F::Base::one(), |acc, x| F::base_lcm(&acc, &x.denom()));
        for x in row {
            let factor = l.exact_div(&x.denom()).ok_or(LinalgError::InexactDivision)?;
            base_entries.push(x.numer().mul(&factor));
        }
        scale = scale.mul(&l);
    }
    let base = RingMatrix::new(n, n, base_entries)?;
    let d = det_bareiss(&base)?;
    Ok(F::from_parts(&d, &scale))
}

/// Determinant by Gaussian elimination with row swaps over a field. Shares
/// no code with the fraction-free engines, which makes it useful for
/// cross-checking them.
pub fn det_gauss<F: Field>(m: &RingMatrix<F>) -> Result<F, LinalgError> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<F>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(F::zero());
        };
        if p != k {
            a.swap(k, p);
            det = det.neg();
        }
        det = det.mul(&a[k][k]);
        let pinv = a[k][k].inv().ok_or(LinalgError::Singular)?;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = a[r][k].mul(&pinv);
            for j in k..n {
                a[r][j] = a[r][j].sub(&f.mul(&a[k][j]));
            }
        }
    }
    Ok(det)
}

/// Gauss-Jordan inverse over a field; the result is re-multiplied against the
/// input and rejected unless it gives the identity.
pub fn inverse<F: Field>(m: &RingMatrix<F>) -> Result<RingMatrix<F>, LinalgError> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<F>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut inv: Vec<Vec<F>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(LinalgError::Singular)?;
        a.swap(k, p);
        inv.swap(k, p);
        let pinv = a[k][k].inv().ok_or(LinalgError::Singular)?;
        for j in 0..n {
            a[k][j] = a[k][j].mul(&pinv);
            inv[k][j] = inv[k][j].mul(&pinv);
        }
        for r in 0..n {
            if r == k || a[r][k].is_zero() {
                continue;
            }
            let f = a[r][k].clone();
            for j in 0..n {
                a[r][j] = a[r][j].sub(&f.mul(&a[k][j]));
                inv[r][j] = inv[r][j].sub(&f.mul(&inv[k][j]));
            }
        }
    }
    let result = RingMatrix::new(n, n, inv.into_iter().flatten().collect())?;
    if m.mul(&result)? != RingMatrix::identity(n) {
        return Err(LinalgError::Singular);
    }
    Ok(result)
}

/// Inverse of a matrix over an integral domain, computed in its fraction
/// field.
pub fn inverse_over_fractions<R: HasFractionField>(m: &RingMatrix<R>) -> Result<RingMatrix<R::Frac>, LinalgError> {
    inverse(&m.to_fraction_field())
}

/// True iff `m v` is the zero vector.
pub fn nullspace_vector_check<R: Ring>(m: &RingMatrix<R>, v: &[R]) -> Result<bool, LinalgError> {
    Ok(m.mul_vec(v)?.iter().all(Ring::is_zero))
}

/// Basis of the right null space over a field, from the reduced row echelon
/// form. Each basis vector has a 1 in one free column.
pub fn nullspace_basis<F: Field>(m: &RingMatrix<F>) -> Vec<Vec<F>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pinv = a[r][c].inv().expect("nonzero pivot is invertible");
        for j in 0..cols {
            a[r][j] = a[r][j].mul(&pinv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    a[i][j] = a[i][j].sub(&f.mul(&a[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); cols];
            v[fc] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = a[row][fc].neg();
            }
            v
        })
        .collect()
}

/// Rank over a field.
pub fn rank<F: Field>(m: &RingMatrix<F>) -> usize {
    m.cols() - nullspace_basis(m).len()
}

/// Whether two vectors over a field are proportional (one a scalar multiple of
/// the other, both nonzero).
pub fn proportional<F: Field>(u: &[F], v: &[F]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let Some(k) = u.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if v[k].is_zero() {
        return false;
    }
    let ratio = v[k].exact_div(&u[k]).expect("nonzero divisor");
    u.iter().zip(v).all(|(a, b)| a.mul(&ratio) == *b)
}

/// Determinant of an almost-triangular matrix `T_{n,1} = (t(i+1, j))` by the
/// column elimination that turns it into a triangular matrix `S_n`.
///
/// `moments` must hold `M_0..=M_n` with every entry nonzero. Column `j` of
/// `S_n` is `t_j + (1/M_j) Σ_{k=1..j} (-1)^k M_{j-k} t_{j-k}`. The routine
/// checks that `S_n` really is lower triangular and returns the product of
/// its diagonal, which telescopes to `M_n / M_0` whenever the moments are the
/// right ones.
pub fn det_by_column_elimination<F: Field>(t: &RingMatrix<F>, moments: &[F]) -> Result<F, LinalgError> {
    let n = t.require_square()?;
    if moments.len() < n + 1 {
        return Err(LinalgError::DimensionMismatch(format!(
            "need {} moments, got {}",
            n + 1,
            moments.len()
        )));
    }
    if let Some(z) = moments.iter().take(n + 1).position(Ring::is_zero) {
        return Err(LinalgError::ZeroMoment(z));
    }
    let mut s = RingMatrix::from_fn(n, n, |_, _| F::zero());
    for j in 0..n {
        let minv = moments[j].inv().ok_or(LinalgError::ZeroMoment(j))?;
        for i in 0..n {
            let mut acc = F::zero();
            for k in 1..=j {
                let term = moments[j - k].mul(t.get(i, j - k));
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            s.set(i, j, t.get(i, j).add(&acc.mul(&minv)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !s.get(i, j).is_zero() {
                return Err(LinalgError::NotTriangular(i, j));
            }
        }
    }
    Ok((0..n).fold(F::one(), |acc, i| acc.mul(s.get(i, i))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, int_binomial, rat, ExactInt, ExactRat};
    use crate::qseries::{QPoly, QRat};
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_matrix(rows: &[&[i64]]) -> RingMatrix<ExactInt> {
        let n = rows.len();
        RingMatrix::from_fn(n, rows.first().map_or(0, |r| r.len()), |i, j| int(rows[i][j]))
    }

    fn catalan_display() -> RingMatrix<ExactInt> {
        int_matrix(&[&[1, 1, 0, 0], &[1, 3, 1, 0], &[1, 6, 5, 1], &[1, 10, 15, 7]])
    }

    #[test]
    fn catalan_four_by_four() {
        let m = catalan_display();
        assert_eq!(det_bareiss(&m).unwrap(), int(14));
        assert_eq!(det_condensation(&m).unwrap(), int(14));
        assert_eq!(det_cofactor(&m).unwrap(), int(14));
        assert_eq!(det_gauss(&m.map(|x| ExactRat::from_integer(x.clone()))).unwrap(), rat(14, 1));
    }

    #[test]
    fn gauss_handles_swaps_and_singularity() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]).map(|x| ExactRat::from_integer(x.clone()));
        assert_eq!(det_gauss(&m).unwrap(), rat(-1, 1));
        let s = int_matrix(&[&[1, 2], &[2, 4]]).map(|x| ExactRat::from_integer(x.clone()));
        assert_eq!(det_gauss(&s).unwrap(), rat(0, 1));
    }

    #[test]
    fn trivial_sizes() {
        let empty: RingMatrix<ExactInt> = RingMatrix::square(0, |_, _| int(0));
        assert_eq!(det_bareiss(&empty).unwrap(), int(1));
        assert_eq!(det_condensation(&empty).unwrap(), int(1));
        assert_eq!(det_cofactor(&empty).unwrap(), int(1));
        let seven = int_matrix(&[&[7]]);
        assert_eq!(det_bareiss(&seven).unwrap(), int(7));
        assert_eq!(det_condensation(&seven).unwrap(), int(7));
    }

    #[test]
    fn zero_interior_falls_back() {
        let m = int_matrix(&[&[2, 1, 3], &[1, 0, 1], &[4, 1, 2]]);
        let expected = det_cofactor(&m).unwrap();
        assert_eq!(det_condensation(&m).unwrap(), expected);
        assert_eq!(det_bareiss(&m).unwrap(), expected);
    }

    #[test]
    fn catalan_hankel() {
        let m = int_matrix(&[&[2, 5], &[5, 14]]);
        assert_eq!(det_condensation(&m).unwrap(), int(3));
    }

    #[test]
    fn random_integer_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(0..=6);
            let m = RingMatrix::square(n, |_, _| int(rng.gen_range(-9..=9)));
            let c = det_cofactor(&m).unwrap();
            assert_eq!(det_bareiss(&m).unwrap(), c);
            assert_eq!(det_condensation(&m).unwrap(), c);
        }
    }

    #[test]
    fn qpoly_agreement() {
        let m = RingMatrix::square(3, |i, j| QPoly::from_coeffs(&[i as i64 - j as i64, 1, (i * j) as i64]));
        let c = det_cofactor(&m).unwrap();
        assert_eq!(det_bareiss(&m).unwrap(), c);
        assert_eq!(det_condensation(&m).unwrap(), c);
    }

    #[test]
    fn catalan_triangle_inverse() {
        let signed = RingMatrix::square(7, |i, j| {
            let (i, j) = (i as i64, j as i64);
            let s = if (i - j) % 2 == 0 { 1 } else { -1 };
            int(s) * int_binomial(i + j, i - j)
        });
        let inv = inverse_over_fractions(&signed).unwrap();
        let row6: Vec<ExactRat> = inv.row(6).to_vec();
        let expected: Vec<ExactRat> = [132, 297, 275, 154, 54, 11, 1].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(row6, expected);
        let id: RingMatrix<ExactRat> = RingMatrix::identity(4);
        assert_eq!(inverse(&id).unwrap(), id);
    }

    #[test]
    fn singular_inverse_is_error() {
        let m: RingMatrix<ExactRat> = RingMatrix::square(2, |_, _| rat(1, 1));
        assert_eq!(inverse(&m), Err(LinalgError::Singular));
    }

    #[test]
    fn cleared_determinant_of_hilbert() {
        let h = RingMatrix::square(3, |i, j| rat(1, (i + j + 1) as i64));
        assert_eq!(det_cleared(&h).unwrap(), rat(1, 2160));
        let qh = RingMatrix::square(2, |i, j| {
            QRat::new(QPoly::one(), QPoly::from_coeffs(&[1, (i + j + 1) as i64])).unwrap()
        });
        assert_eq!(det_cleared(&qh).unwrap(), det_bareiss(&qh).unwrap());
    }

    #[test]
    fn null_space() {
        let m = RingMatrix::from_fn(2, 3, |i, j| rat((i + j) as i64, 1));
        let basis = nullspace_basis(&m);
        assert_eq!(basis.len(), 1);
        assert!(nullspace_vector_check(&m, &basis[0]).unwrap());
        assert!(proportional(&basis[0], &[rat(2, 1), rat(-4, 1), rat(2, 1)]));
        let zero = vec![rat(0, 1); 3];
        assert!(nullspace_vector_check(&m, &zero).unwrap());
    }

    #[test]
    fn column_elimination_on_catalan_family() {
        let n = 6;
        let t = RingMatrix::square(n, |i, j| {
            ExactRat::from_integer(int_binomial((i + j + 1) as i64, i as i64 - j as i64 + 1))
        });
        let cat: Vec<ExactRat> = (0..=n as i64)
            .map(|k| ExactRat::new(int_binomial(2 * k, k), int(k + 1)))
            .collect();
        assert_eq!(det_by_column_elimination(&t, &cat).unwrap(), cat[n].clone());
        let wrong = vec![rat(1, 1); n + 1];
        assert!(matches!(
            det_by_column_elimination(&t, &wrong),
            Err(LinalgError::NotTriangular(_, _))
        ));
    }
}
