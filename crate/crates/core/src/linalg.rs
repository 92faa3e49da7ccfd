//! Dense linear systems over ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::Rational;

/// Solves `a·x = b` by Gauss–Jordan elimination.
///
/// Returns a solution when the system is consistent (free variables set to
/// zero) and `None` when it is not. `a` may be over- or underdetermined.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "right-hand side length mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v -= &f * pv;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn unique_solution() {
        let a = vec![row(&[2, 1]), row(&[1, 3])];
        let x = solve(&a, &row(&[3, 5])).unwrap();
        assert_eq!(x, vec![Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
    }

    #[test]
    fn overdetermined_inconsistent() {
        let a = vec![row(&[1]), row(&[1])];
        assert!(solve(&a, &row(&[1, 2])).is_none());
        assert_eq!(solve(&a, &row(&[2, 2])).unwrap(), row(&[2]));
    }

    #[test]
    fn rank_deficient_sets_free_to_zero() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        assert_eq!(solve(&a, &row(&[3, 6])).unwrap(), row(&[3, 0]));
    }
}
