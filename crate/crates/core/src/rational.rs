//! Scalar helpers over [`Rational`].
//!
//! `Rational` is `num_rational::BigRational`, which already keeps values in
//! canonical form: reduced, positive denominator, zero stored as `0/1`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `base^exp` for a non-negative exponent, with `0^0 = 1`.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Rows `0..=n` of Pascal's triangle, built by the additive recurrence.
pub fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]);
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(BigInt::one());
        for k in 1..r {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// Binomial coefficient `C(n, k)` for non-negative `n`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(top, k)` with an integer (possibly
/// negative) top and `k ≥ 0`: `top(top-1)...(top-k+1)/k!`.
pub fn binomial_signed(top: i64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(top - i as i64);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = Rational::new(BigInt::from(0), BigInt::from(-7));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn pascal_matches_closed_binomial() {
        let rows = pascal(12);
        for (n, row) in rows.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                assert_eq!(c, &binomial(n, k));
            }
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn signed_binomial() {
        assert_eq!(binomial_signed(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_signed(5, 2), BigInt::from(10));
        assert_eq!(binomial_signed(2, 3), BigInt::zero());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
