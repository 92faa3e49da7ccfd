//! Rational power series `p(x)/q(x)` with `q(0) = 1`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::poly::Poly;
use crate::rational::{self, Rational};

/// A rational function that is a power series at 0, kept in lowest terms
/// with `den(0) = 1`. The zero function is `0/1`.
///
/// Because the form is canonical, `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

/// The first `order` coefficients of a power series.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Series {
        Series { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Series {
        Series { coeffs: c.iter().map(|&v| rational::int(v)).collect() }
    }

    /// Number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    /// The known part as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// `cₙ = Σₖ C(n,k)·aₖ·bₙ₋ₖ` on the common prefix.
    pub fn binomial_convolution(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let pascal = rational::pascal(n.saturating_sub(1));
        let coeffs = (0..n)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..=i {
                    if self.coeffs[k].is_zero() || other.coeffs[i - k].is_zero() {
                        continue;
                    }
                    acc += &self.coeffs[k]
                        * &other.coeffs[i - k]
                        * Rational::from_integer(pascal[i][k].clone());
                }
                acc
            })
            .collect();
        Series { coeffs }
    }

    /// Termwise product on the common prefix.
    pub fn hadamard(&self, other: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect(),
        }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl RatFun {
    /// Normalizes `num/den`: divides by `den(0)` and reduces by the gcd.
    ///
    /// Rejects a zero denominator and any denominator vanishing at 0, even
    /// when a common factor of `x` would cancel; use [`RatFun::from_fraction`]
    /// to cancel first.
    pub fn new(num: Poly, den: Poly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(invalid("zero denominator"));
        }
        if den.coeff(0).is_zero() {
            return Err(Error::NotAPowerSeries);
        }
        Ok(RatFun::normalize(num, den))
    }

    /// Cancels common factors first, then requires `den(0) ≠ 0`.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = (num.exact_div(&g)?, den.exact_div(&g)?);
        RatFun::new(num, den)
    }

    fn normalize(num: Poly, den: Poly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den).expect("nonzero operands");
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let c = den.coeff(0).recip();
        RatFun { num: num.scale(&c), den: den.scale(&c) }
    }

    pub fn zero() -> RatFun {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    /// `1/(1 − a·x)`.
    pub fn geometric(a: Rational) -> RatFun {
        RatFun::normalize(Poly::one(), Poly::from_coeffs(alloc::vec![Rational::one(), -a]))
    }

    /// Convenience constructor from integer coefficient lists.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<RatFun> {
        RatFun::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num < deg den`; the zero function counts as proper.
    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => unreachable!("denominator is never zero"),
        }
    }

    /// Coefficients `0..order` via the recurrence carried by the denominator.
    pub fn expand(&self, order: usize) -> Series {
        let den = self.den.coeffs();
        let mut s: Vec<Rational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut v = self.num.coeff(n);
            for j in 1..den.len().min(n + 1) {
                if !den[j].is_zero() {
                    v -= &den[j] * &s[n - j];
                }
            }
            s.push(v);
        }
        Series { coeffs: s }
    }

    /// Splits into a polynomial plus a proper rational function.
    pub fn proper_split(&self) -> (Poly, RatFun) {
        let (q, r) = self.num.div_rem(&self.den).expect("denominator is nonzero");
        // gcd(r, den) = gcd(num, den) = 1 and den(0) = 1 already.
        let proper = if r.is_zero() {
            RatFun::zero()
        } else {
            RatFun { num: r, den: self.den.clone() }
        };
        (q, proper)
    }

    /// `f(a·x)`.
    pub fn compose_scale(&self, a: &Rational) -> RatFun {
        RatFun::normalize(self.num.compose_scale(a), self.den.compose_scale(a))
    }

    /// `f(c·x^k)`, `k ≥ 1`.
    pub fn compose_monomial(&self, c: &Rational, k: usize) -> RatFun {
        RatFun::normalize(self.num.compose_monomial(c, k), self.den.compose_monomial(c, k))
    }

    /// `(1/(1−βx)) · f(x/(1−βx))`, which equals `f ⊙ 1/(1−βx)`.
    pub fn compose_mobius(&self, beta: &Rational) -> RatFun {
        if self.is_zero() {
            return RatFun::zero();
        }
        let dp = self.num.degree().unwrap_or(0);
        let dq = self.den.degree().unwrap_or(0);
        let big = (dp + 1).max(dq);
        let lin = Poly::from_coeffs(alloc::vec![Rational::one(), -beta.clone()]);
        let mut powers = Vec::with_capacity(big + 1);
        powers.push(Poly::one());
        for i in 1..=big {
            let next = &powers[i - 1] * &lin;
            powers.push(next);
        }
        // num: Σ pᵢ xⁱ (1−βx)^(big−1−i); den: Σ qⱼ xʲ (1−βx)^(big−j)
        let mut num = Poly::zero();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num = &num + &powers[big - 1 - i].shift(i).scale(c);
            }
        }
        let mut den = Poly::zero();
        for (j, c) in self.den.coeffs().iter().enumerate() {
            if !c.is_zero() {
                den = &den + &powers[big - j].shift(j).scale(c);
            }
        }
        debug_assert!(den.coeff(0).is_one());
        RatFun::normalize(num, den)
    }

    pub fn derivative(&self) -> RatFun {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFun::normalize(num, &self.den * &self.den)
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> RatFun {
        RatFun::normalize(self.num.shift(k), self.den.clone())
    }

    /// Quotient as power series; the divisor must be nonzero and the result
    /// must again be a power series at 0.
    pub fn checked_div(&self, other: &RatFun) -> Result<RatFun> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::from_fraction(&self.num * &other.den, &self.den * &other.num)
    }

    /// Value of the constant coefficient, `f(0)`.
    pub fn at_zero(&self) -> Rational {
        self.num.coeff(0)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun { (&self).$m(rhs) }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

fn write_factor(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    if p.term_count() > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write_factor(f, &self.num)?;
        f.write_str(" / ")?;
        write_factor(f, &self.den)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

/// Recovers a rational function from its leading coefficients.
///
/// Solves for a denominator `1 + q₁x + … + q_d x^d`, `d = max_den_deg`, that
/// annihilates every known coefficient past `max_num_deg`; the numerator is
/// the truncated product and the result is reduced to lowest terms, so a
/// smaller true denominator is found as well. The series must carry at
/// least two coefficients beyond the `d + max_num_deg + 1` unknowns, and the
/// answer matches every known coefficient. Inconsistent data gives
/// [`Error::ReconstructionFailed`].
pub fn reconstruct_rational(s: &Series, max_den_deg: usize, max_num_deg: usize) -> Result<RatFun> {
    let needed = max_den_deg + max_num_deg + 3;
    if s.order() < needed {
        return Err(Error::InvalidInput(alloc::format!(
            "reconstruction with bounds ({max_den_deg}, {max_num_deg}) needs {needed} coefficients, got {}",
            s.order()
        )));
    }
    let c = s.coeffs();
    let at = |i: isize| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            c[i as usize].clone()
        }
    };
    // Σ_{j=1..d} q_j c_{n−j} = −c_n  for n = max_num_deg+1 .. order−1. Any
    // solution gives the same N/Q: two of them differ by a polynomial of
    // degree ≤ d + e that vanishes to order > d + e.
    let d = max_den_deg;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for n in max_num_deg + 1..s.order() {
        a.push((1..=d).map(|j| at(n as isize - j as isize)).collect::<Vec<_>>());
        b.push(-c[n].clone());
    }
    let q = linalg::solve(&a, &b).ok_or(Error::ReconstructionFailed)?;
    let mut den = Vec::with_capacity(d + 1);
    den.push(Rational::one());
    den.extend(q);
    let den = Poly::from_coeffs(den);
    let num = s.to_poly().mul_trunc(&den, max_num_deg + 1);
    let f = RatFun::from_fraction(num, den)?;
    if f.expand(s.order()) != *s {
        return Err(crate::error::invariant("reconstructed function disagrees with its data"));
    }
    Ok(f)
}

/// Linear recurrence `a(n) = Σ cᵢ·a(n−i)` satisfied by the coefficients of a
/// rational function for `n ≥ start`, with `a(0..start)` as initial values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    /// `c_1..c_k`.
    pub coeffs: Vec<Rational>,
    pub start: usize,
    pub initial: Vec<Rational>,
}

impl RatFun {
    /// The recurrence read off the reduced denominator.
    pub fn recurrence(&self) -> LinearRecurrence {
        let k = self.den.degree().unwrap_or(0);
        let coeffs: Vec<Rational> = (1..=k).map(|i| -self.den.coeff(i)).collect();
        let start = match self.num.degree() {
            Some(d) => k.max(d + 1),
            None => k,
        };
        LinearRecurrence { coeffs, start, initial: self.expand(start).into_coeffs() }
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a(n) = ")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = rational::abs(c);
            let sep = match (first, c < &Rational::zero()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "a(n-{})", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " for n >= {}", self.start)?;
        for (i, v) in self.initial.iter().enumerate() {
            write!(f, "{}a({i}) = {v}", if i == 0 { "; " } else { ", " })?;
        }
        Ok(())
    }
}
