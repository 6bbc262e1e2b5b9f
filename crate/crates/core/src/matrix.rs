//! Dense matrices of exact rationals: determinant, linear solves, inversion.
//!
//! Determinants of integer matrices go through fraction-free
//! (division-controlled) Bareiss elimination, so intermediate values stay
//! integers and never touch gcd reduction. Everything else uses plain
//! Gaussian elimination over [`Rational`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("operation requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: matrix is {rows}x{cols}, vector has length {len}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("matrix is singular")]
    Singular,
}

/// Row-major dense matrix of [`Rational`] entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from machine integers (tests, Laplacians).
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| Rational::from_integer(rows[i][j]))
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

    /// Removes the listed rows and columns (used for Laplacian minors).
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Self {
        let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !drop_rows.contains(r)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !drop_cols.contains(c)).collect();
        Self::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self[(keep_rows[i], keep_cols[j])].clone()
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                len: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &v[c]).sum())
            .collect())
    }

    fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn all_integer(&self) -> bool {
        self.entries.iter().all(Rational::is_integer)
    }

    /// Exact determinant. Integer matrices stay in integer arithmetic
    /// throughout (Bareiss); mixed matrices fall back to rational
    /// elimination.
    pub fn determinant(&self) -> Result<Rational, MatrixError> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Rational::one());
        }
        if self.all_integer() {
            let ints: Vec<BigInt> = self.entries.iter().map(|e| e.numerator().clone()).collect();
            return Ok(Rational::from_integer(bareiss_determinant(ints, n)));
        }
        self.determinant_rational()
    }

    fn determinant_rational(&self) -> Result<Rational, MatrixError> {
        let n = self.rows;
        let mut m = self.entries.clone();
        let at = |m: &Vec<Rational>, r: usize, c: usize| m[r * n + c].clone();
        let mut det = Rational::one();
        for k in 0..n {
            let pivot_row = match (k..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(r) => r,
                None => return Ok(Rational::zero()),
            };
            if pivot_row != k {
                for c in 0..n {
                    m.swap(k * n + c, pivot_row * n + c);
                }
                det = -det;
            }
            let pivot = at(&m, k, k);
            det = det * &pivot;
            for r in k + 1..n {
                if m[r * n + k].is_zero() {
                    continue;
                }
                let factor = at(&m, r, k).checked_div(&pivot).expect("pivot is nonzero");
                for c in k..n {
                    let sub = &factor * &m[k * n + c];
                    m[r * n + c] = &m[r * n + c] - &sub;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = b` exactly; the result is re-multiplied against
    /// the inputs before returning.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>, MatrixError> {
        let n = self.require_square()?;
        if b.len() != n {
            return Err(MatrixError::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                len: b.len(),
            });
        }
        let rhs = RationalMatrix::from_fn(n, 1, |r, _| b[r].clone());
        let x = gauss_jordan(self.clone(), rhs)?;
        let x: Vec<Rational> = x.entries;
        debug_assert_eq!(x.len(), n);
        let check = self.mul_vec(&x)?;
        assert_eq!(check, b, "exact solve failed its back-substitution check");
        Ok(x)
    }

    /// Exact inverse via Gauss-Jordan with the identity as right-hand side.
    pub fn inverse(&self) -> Result<RationalMatrix, MatrixError> {
        let n = self.require_square()?;
        gauss_jordan(self.clone(), RationalMatrix::identity(n))
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

/// One-step Bareiss elimination. Every interior division is exact by the
/// Desnanot-Jacobi identity, so the whole computation stays in `BigInt`.
fn bareiss_determinant(mut m: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !m[r * n + k].is_zero()) {
            Some(r) => r,
            None => return BigInt::zero(),
        };
        if pivot_row != k {
            for c in 0..n {
                m.swap(k * n + c, pivot_row * n + c);
            }
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let num = &m[r * n + c] * &m[k * n + k] - &m[r * n + k] * &m[k * n + c];
                m[r * n + c] = num / &prev;
            }
            m[r * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    let det = m[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Reduces `[a | rhs]` to `[I | a^-1 rhs]`; `Singular` when a pivot is missing.
fn gauss_jordan(
    mut a: RationalMatrix,
    mut rhs: RationalMatrix,
) -> Result<RationalMatrix, MatrixError> {
    let n = a.rows;
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !a[(r, k)].is_zero())
            .ok_or(MatrixError::Singular)?;
        if pivot_row != k {
            for c in 0..n {
                let tmp = a[(k, c)].clone();
                a[(k, c)] = a[(pivot_row, c)].clone();
                a[(pivot_row, c)] = tmp;
            }
            for c in 0..rhs.cols {
                let tmp = rhs[(k, c)].clone();
                rhs[(k, c)] = rhs[(pivot_row, c)].clone();
                rhs[(pivot_row, c)] = tmp;
            }
        }
        let pivot = a[(k, k)].clone();
        for c in 0..n {
            a[(k, c)] = a[(k, c)].checked_div(&pivot).expect("pivot is nonzero");
        }
        for c in 0..rhs.cols {
            rhs[(k, c)] = rhs[(k, c)].checked_div(&pivot).expect("pivot is nonzero");
        }
        for r in 0..n {
            if r == k || a[(r, k)].is_zero() {
                continue;
            }
            let factor = a[(r, k)].clone();
            for c in 0..n {
                let sub = &factor * &a[(k, c)];
                a[(r, c)] = &a[(r, c)] - &sub;
            }
            for c in 0..rhs.cols {
                let sub = &factor * &rhs[(k, c)];
                rhs[(r, c)] = &rhs[(r, c)] - &sub;
            }
        }
    }
    Ok(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_trivial_matrices() {
        let m = RationalMatrix::from_i64_rows(&[vec![5]]);
        assert_eq!(m.determinant().unwrap(), Rational::from_integer(5));
        assert_eq!(
            RationalMatrix::identity(3).determinant().unwrap(),
            Rational::one()
        );
        assert_eq!(
            RationalMatrix::zeros(0, 0).determinant().unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = RationalMatrix::zeros(2, 3);
        assert!(matches!(
            m.determinant(),
            Err(MatrixError::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn determinant_with_row_swaps() {
        // First pivot is zero, forcing a swap; det = -(2*3) with the swap
        // sign folded in.
        let m = RationalMatrix::from_i64_rows(&[vec![0, 2], vec![3, 0]]);
        assert_eq!(m.determinant().unwrap(), Rational::from_integer(-6));
    }

    #[test]
    fn rational_entries_take_the_general_path() {
        let m = RationalMatrix::from_fn(2, 2, |r, c| {
            if r == c {
                Rational::ratio(1, 2)
            } else {
                Rational::ratio(1, 3)
            }
        });
        assert_eq!(m.determinant().unwrap(), Rational::ratio(5, 36));
    }

    #[test]
    fn solve_identity_and_diagonal() {
        let b = vec![Rational::ratio(7, 2), Rational::from_integer(-3)];
        let x = RationalMatrix::identity(2).solve(&b).unwrap();
        assert_eq!(x, b);

        let m = RationalMatrix::from_i64_rows(&[vec![2, 0], vec![0, 4]]);
        let x = m.solve(&[Rational::one(), Rational::one()]).unwrap();
        assert_eq!(x, vec![Rational::ratio(1, 2), Rational::ratio(1, 4)]);
    }

    #[test]
    fn solve_singular_is_an_error() {
        let m = RationalMatrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            m.solve(&[Rational::one(), Rational::zero()]).unwrap_err(),
            MatrixError::Singular
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_i64_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 2]]);
        let inv = m.inverse().unwrap();
        let mut product = RationalMatrix::zeros(3, 3);
        for r in 0..3 {
            for c in 0..3 {
                product[(r, c)] = (0..3).map(|k| &m[(r, k)] * &inv[(k, c)]).sum();
            }
        }
        assert_eq!(product, RationalMatrix::identity(3));
    }
}
