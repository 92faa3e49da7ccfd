//! Polynomials in an auxiliary variable `y` with coefficients in ℚ[x].

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

/// `Σ cₖ(x) yᵏ` with `ycoeffs[k] = cₖ`. The leading coefficient is nonzero
/// unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    ycoeffs: Vec<Poly>,
}

/// The substitutions needed by the resultant formulas, for `p` of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `(1−y)^d · p(x/(1−y))`
    OneMinusY,
    /// `y^d · p(x/y)`
    OverY,
    /// `p(y)`, constant in `x`
    Lift,
}

impl BiPoly {
    pub fn from_ycoeffs(mut ycoeffs: Vec<Poly>) -> Self {
        while ycoeffs.last().is_some_and(Poly::is_zero) {
            ycoeffs.pop();
        }
        BiPoly { ycoeffs }
    }

    pub fn constant(p: Poly) -> Self {
        BiPoly::from_ycoeffs(alloc::vec![p])
    }

    pub fn ycoeffs(&self) -> &[Poly] {
        &self.ycoeffs
    }

    pub fn ycoeff(&self, k: usize) -> Poly {
        self.ycoeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    /// Degree in `y`; `None` for zero.
    pub fn ydegree(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    /// Evaluates at a polynomial value of `y`.
    pub fn eval_y(&self, y: &Poly) -> Poly {
        self.ycoeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * y) + c)
    }

    /// `(1−y)^m · p(x/(1−y)) = Σᵢ pᵢ xⁱ (1−y)^(m−i)`, for `m ≥ deg p`.
    pub fn one_minus_y_form(p: &Poly, m: usize) -> Result<BiPoly> {
        if p.degree().is_some_and(|d| d > m) {
            return Err(invalid("substitution exponent below the degree"));
        }
        let mut ycoeffs: Vec<Vec<Rational>> = (0..=m).map(|_| Vec::new()).collect();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = m - i;
            for (k, coeffs) in ycoeffs.iter_mut().enumerate().take(e + 1) {
                let b = Rational::from_integer(rational::binomial(e, k)) * rational::sign_pow(k);
                if coeffs.len() <= i {
                    coeffs.resize(i + 1, Rational::zero());
                }
                coeffs[i] += c * b;
            }
        }
        Ok(BiPoly::from_ycoeffs(ycoeffs.into_iter().map(Poly::from_coeffs).collect()))
    }

    /// `y^n · p(x/y) = Σᵢ pᵢ xⁱ y^(n−i)`, for `n ≥ deg p`.
    pub fn over_y_form(p: &Poly, n: usize) -> Result<BiPoly> {
        if p.degree().is_some_and(|d| d > n) {
            return Err(invalid("substitution exponent below the degree"));
        }
        let mut ycoeffs = alloc::vec![Poly::zero(); n + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            ycoeffs[n - i] = Poly::monomial(c.clone(), i);
        }
        Ok(BiPoly::from_ycoeffs(ycoeffs))
    }

    /// `p(y)` with constant-in-`x` coefficients.
    pub fn lift(p: &Poly) -> BiPoly {
        BiPoly::from_ycoeffs(p.coeffs().iter().cloned().map(Poly::constant).collect())
    }

    /// Builds one of the resultant substitutions with the exponent equal to
    /// the degree of `p`.
    pub fn substitute(p: &Poly, form: Substitution) -> Result<BiPoly> {
        let Some(d) = p.degree() else {
            return Err(invalid("substitution of the zero polynomial"));
        };
        match form {
            Substitution::OneMinusY => BiPoly::one_minus_y_form(p, d),
            Substitution::OverY => BiPoly::over_y_form(p, d),
            Substitution::Lift => Ok(BiPoly::lift(p)),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.ycoeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let ypart = match k {
                0 => alloc::string::String::new(),
                1 => alloc::string::String::from("y"),
                _ => alloc::format!("y^{k}"),
            };
            if k == 0 {
                write!(f, "({c})")?;
            } else if c.is_one() {
                f.write_str(&ypart)?;
            } else {
                write!(f, "({c})*{ypart}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn one_minus_y_form_of_fibonacci_denominator() {
        // Expanding (1-y)^2 (1 - x/(1-y) - x^2/(1-y)^2) gives constant term
        // 1 - x - x^2, matching the Sylvester matrix entry.
        let b = BiPoly::substitute(&p(&[1, -1, -1]), Substitution::OneMinusY).unwrap();
        assert_eq!(b.ycoeffs(), &[p(&[1, -1, -1]), p(&[-2, 1]), p(&[1])]);
    }

    #[test]
    fn over_y_form_of_pell_denominator() {
        let b = BiPoly::substitute(&p(&[1, -2, -1]), Substitution::OverY).unwrap();
        assert_eq!(b.ycoeffs(), &[p(&[0, 0, -1]), p(&[0, -2]), p(&[1])]);
    }

    #[test]
    fn constant_input_is_constant() {
        for form in [Substitution::OneMinusY, Substitution::OverY, Substitution::Lift] {
            let b = BiPoly::substitute(&Poly::one(), form).unwrap();
            assert_eq!(b, BiPoly::constant(Poly::one()));
        }
        assert!(BiPoly::substitute(&Poly::zero(), Substitution::Lift).is_err());
    }

    #[test]
    fn one_minus_y_form_evaluates_back() {
        // At y = 0 the substitution returns p itself.
        let u = p(&[1, 3, -2, 5]);
        let b = BiPoly::substitute(&u, Substitution::OneMinusY).unwrap();
        assert_eq!(b.eval_y(&Poly::zero()), u);
    }
}
