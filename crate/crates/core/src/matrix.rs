//! Matrices over ℚ[x]: Sylvester matrices, fraction-free determinants and
//! resultants.

use alloc::vec::Vec;
use core::fmt;

use crate::bipoly::BiPoly;
use crate::error::{invalid, invariant, Result};
use crate::poly::Poly;

/// Row-major rectangular matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl Matrix {
    /// Builds from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(invalid("ragged matrix rows"));
        }
        Ok(Matrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, entries: alloc::vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Sylvester matrix of `a` (degree `m` in y) and `b` (degree `n`): `n`
    /// shifted rows of `a`'s coefficients from `y^m` down to `y^0`, then `m`
    /// shifted rows of `b`'s. Two constants give the empty matrix.
    pub fn sylvester(a: &BiPoly, b: &BiPoly) -> Result<Matrix> {
        let (Some(m), Some(n)) = (a.ydegree(), b.ydegree()) else {
            return Err(invalid("Sylvester matrix of a zero polynomial"));
        };
        let size = m + n;
        let mut out = Matrix::zeros(size, size);
        for r in 0..n {
            for t in 0..=m {
                out.set(r, r + t, a.ycoeff(m - t));
            }
        }
        for r in 0..m {
            for t in 0..=n {
                out.set(n + r, r + t, b.ycoeff(n - t));
            }
        }
        Ok(out)
    }

    /// Determinant by one-step fraction-free (Bareiss) elimination over
    /// ℚ[x]. Every division is exact; a failed division is a bug.
    pub fn det_fraction_free(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(invalid("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(Poly::zero());
                };
                m.swap(k, r);
                negate = !negate;
            }
            let (head, tail) = m.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                for j in k + 1..n {
                    let v = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                    row[j] = v
                        .exact_div(&prev)
                        .map_err(|_| invariant("inexact Bareiss division"))?;
                }
                row[k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Resultant with respect to `y`, as the Sylvester determinant.
    pub fn resultant(a: &BiPoly, b: &BiPoly) -> Result<Poly> {
        Matrix::sylvester(a, b)?.det_fraction_free()
    }
}

/// `Res(a, b, y)`; see [`Matrix::resultant`].
pub fn resultant(a: &BiPoly, b: &BiPoly) -> Result<Poly> {
    Matrix::resultant(a, b)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<alloc::string::String> =
                self.row(i).iter().map(|p| alloc::format!("{p}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::Substitution;
    use crate::error::Error;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn lin(c: i64) -> BiPoly {
        BiPoly::from_ycoeffs(alloc::vec![p(&[c]), p(&[1])])
    }

    #[test]
    fn fibonacci_pell_sylvester_matrix() {
        let a = BiPoly::substitute(&p(&[1, -1, -1]), Substitution::OneMinusY).unwrap();
        let b = BiPoly::substitute(&p(&[1, -2, -1]), Substitution::OverY).unwrap();
        let s = Matrix::sylvester(&a, &b).unwrap();
        let expected = Matrix::from_rows(alloc::vec![
            alloc::vec![p(&[1]), p(&[-2, 1]), p(&[1, -1, -1]), p(&[])],
            alloc::vec![p(&[]), p(&[1]), p(&[-2, 1]), p(&[1, -1, -1])],
            alloc::vec![p(&[1]), p(&[0, -2]), p(&[0, 0, -1]), p(&[])],
            alloc::vec![p(&[]), p(&[1]), p(&[0, -2]), p(&[0, 0, -1])],
        ])
        .unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.det_fraction_free().unwrap(), p(&[1, -6, 7, 6, -9]));
    }

    #[test]
    fn linear_resultant_orientation() {
        // a = y - 1, b = y - x: Res = (1 - x) by the root-product formula.
        let a = lin(-1);
        let b = BiPoly::from_ycoeffs(alloc::vec![p(&[0, -1]), p(&[1])]);
        let s = Matrix::sylvester(&a, &b).unwrap();
        assert_eq!(s.to_rows(), alloc::vec![
            alloc::vec![p(&[1]), p(&[-1])],
            alloc::vec![p(&[1]), p(&[0, -1])],
        ]);
        assert_eq!(resultant(&a, &b).unwrap(), p(&[1, -1]));
        // roots -2 and -3: Res = (-2) - (-3) = 1
        assert_eq!(resultant(&lin(2), &lin(3)).unwrap(), Poly::one());
    }

    #[test]
    fn resultant_with_linear_factor_is_evaluation() {
        // Res(y - 2, g) = g(2) for monic linear first argument.
        let g = BiPoly::lift(&p(&[-1, -1, 1]));
        assert_eq!(resultant(&lin(-2), &g).unwrap(), p(&[1]));
    }

    #[test]
    fn shared_root_gives_zero() {
        let a = BiPoly::from_ycoeffs(alloc::vec![p(&[0, 1]), p(&[3]), p(&[1, 1])]);
        assert_eq!(resultant(&a, &a).unwrap(), Poly::zero());
    }

    #[test]
    fn constants_give_empty_matrix() {
        let c = BiPoly::constant(p(&[5]));
        assert_eq!(Matrix::sylvester(&c, &c).unwrap().rows(), 0);
        assert_eq!(resultant(&c, &c).unwrap(), Poly::one());
        // a constant against a degree-n polynomial gives c^n
        assert_eq!(resultant(&c, &lin(4)).unwrap(), p(&[5]));
    }

    #[test]
    fn identity_and_shape_errors() {
        assert_eq!(Matrix::identity(4).det_fraction_free().unwrap(), Poly::one());
        let m = Matrix::from_rows(alloc::vec![alloc::vec![p(&[1]), p(&[2])]]).unwrap();
        assert!(matches!(m.det_fraction_free(), Err(Error::InvalidInput(_))));
        assert!(Matrix::from_rows(alloc::vec![alloc::vec![p(&[1])], alloc::vec![]]).is_err());
    }

    #[test]
    fn pivoting_keeps_sign() {
        let m = Matrix::from_rows(alloc::vec![
            alloc::vec![p(&[]), p(&[1])],
            alloc::vec![p(&[1]), p(&[])],
        ])
        .unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), p(&[-1]));
    }
}
