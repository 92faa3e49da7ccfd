//! Products as constant terms of Laurent series in an auxiliary variable `t`.
//!
//! For proper `A = N_A/D_A` and `B = N_B/D_B` with `n = deg D_B`,
//!
//! ```text
//! A(t)·B(x/t) = N_A(t)·tⁿN_B(x/t) / (D_A(t) · tⁿD_B(x/t))
//!             = R_A(t)/D_A(t) + R_B(t)/(tⁿD_B(x/t)),   deg_t R_B < n.
//! ```
//!
//! The first part only has non-negative powers of `t` and the second only
//! negative ones, so `A ∗ B = R_A(0)/D_A(0)`. The binomial product is the
//! constant term of `(1/(1−t))·A(x/(1−t))·B(x/t)`, split the same way with
//! `(1−t)^m D_A(x/(1−t))` in place of `D_A(t)`.
//!
//! Coefficients in `t` live in the field ℚ(x), see [`RatFunField`].

use alloc::vec::Vec;
use core::fmt;


use crate::bipoly::BiPoly;
use crate::convolve;
use crate::error::{invalid, invariant, Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::rational::Rational;

/// Combined degree above which a field element is reduced by its gcd.
const REDUCE_THRESHOLD: usize = 12;

/// An element `num/den` of ℚ(x). No constraint at `x = 0`.
///
/// Reduction to lowest terms is lazy: arithmetic reduces only when the
/// degrees grow past a threshold, and [`RatFunField::reduced`] gives the
/// canonical form. Equality compares by cross-multiplication.
#[derive(Clone)]
pub struct RatFunField {
    num: Poly,
    den: Poly,
}

impl RatFunField {
    /// Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunField> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunField { num, den }.maybe_reduce())
    }

    pub fn from_poly(p: Poly) -> RatFunField {
        RatFunField { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> RatFunField {
        RatFunField::from_poly(Poly::constant(c))
    }

    pub fn zero() -> RatFunField {
        RatFunField::from_poly(Poly::zero())
    }

    pub fn one() -> RatFunField {
        RatFunField::from_poly(Poly::one())
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

    /// Lowest terms with a monic denominator.
    pub fn reduced(&self) -> RatFunField {
        if self.num.is_zero() {
            return RatFunField::zero();
        }
        let g = self.num.gcd(&self.den).expect("nonzero operands");
        let num = self.num.exact_div(&g).expect("gcd divides");
        let den = self.den.exact_div(&g).expect("gcd divides");
        let l = den.leading().expect("nonzero").recip();
        RatFunField { num: num.scale(&l), den: den.scale(&l) }
    }

    fn maybe_reduce(self) -> RatFunField {
        let size = self.num.len() + self.den.len();
        if self.num.is_zero() {
            RatFunField::zero()
        } else if size > REDUCE_THRESHOLD {
            self.reduced()
        } else {
            self
        }
    }

    pub fn add(&self, o: &RatFunField) -> RatFunField {
        if self.den == o.den {
            return RatFunField { num: &self.num + &o.num, den: self.den.clone() }.maybe_reduce();
        }
        RatFunField {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
        .maybe_reduce()
    }

    pub fn neg(&self) -> RatFunField {
        RatFunField { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunField) -> RatFunField {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunField) -> RatFunField {
        RatFunField { num: &self.num * &o.num, den: &self.den * &o.den }.maybe_reduce()
    }

    pub fn inv(&self) -> Result<RatFunField> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunField { num: self.den.clone(), den: self.num.clone() })
    }

    pub fn div(&self, o: &RatFunField) -> Result<RatFunField> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunField> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as usize;
        Ok(RatFunField { num: base.num.pow(k), den: base.den.pow(k) }.maybe_reduce())
    }

    /// As a power series at 0, after cancelling common factors.
    pub fn to_ratfun(&self) -> Result<RatFun> {
        RatFun::from_fraction(self.num.clone(), self.den.clone())
    }
}

impl From<&RatFun> for RatFunField {
    fn from(f: &RatFun) -> RatFunField {
        RatFunField { num: f.num().clone(), den: f.den().clone() }
    }
}

impl PartialEq for RatFunField {
    fn eq(&self, other: &RatFunField) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunField {}

impl fmt::Display for RatFunField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den.is_one() {
            write!(f, "{}", r.num)
        } else {
            write!(f, "({}) / ({})", r.num, r.den)
        }
    }
}

impl fmt::Debug for RatFunField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunField({self})")
    }
}

/// A polynomial in `t` over ℚ(x); `coeffs[k]` multiplies `t^k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<RatFunField>,
}

impl TPoly {
    pub fn from_coeffs(mut coeffs: Vec<RatFunField>) -> TPoly {
        while coeffs.last().is_some_and(RatFunField::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> TPoly {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> TPoly {
        TPoly::constant(RatFunField::one())
    }

    pub fn constant(c: RatFunField) -> TPoly {
        TPoly::from_coeffs(alloc::vec![c])
    }

    /// `p(t)` with constant coefficients.
    pub fn lift(p: &Poly) -> TPoly {
        TPoly::from_coeffs(p.coeffs().iter().cloned().map(RatFunField::constant).collect())
    }

    /// Reinterprets a [`BiPoly`] in `y` as a polynomial in `t`.
    pub fn from_bipoly(b: &BiPoly) -> TPoly {
        TPoly::from_coeffs(b.ycoeffs().iter().cloned().map(RatFunField::from_poly).collect())
    }

    pub fn coeffs(&self) -> &[RatFunField] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunField {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunField::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        TPoly::from_coeffs((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &TPoly) -> TPoly {
        if self.is_zero() || o.is_zero() {
            return TPoly::zero();
        }
        let mut out = alloc::vec![RatFunField::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        TPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &RatFunField) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> Result<TPoly> {
        match self.coeffs.last() {
            None => Ok(TPoly::zero()),
            Some(l) => Ok(self.scale(&l.inv()?)),
        }
    }

    pub fn div_rem(&self, d: &TPoly) -> Result<(TPoly, TPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((TPoly::zero(), self.clone()));
        }
        let mut quot = alloc::vec![RatFunField::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].mul(&lead_inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((TPoly::from_coeffs(quot), TPoly::from_coeffs(rem)))
    }

    /// Value at `t = 0`.
    pub fn at_zero(&self) -> RatFunField {
        self.coeff(0)
    }

    /// Reduces every coefficient to lowest terms.
    pub fn reduced(&self) -> TPoly {
        TPoly { coeffs: self.coeffs.iter().map(RatFunField::reduced).collect() }
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TPoly[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "t^{k}: {c}")?;
        }
        f.write_str("]")
    }
}

/// Extended Euclid in `t`: `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn tpoly_xgcd(a: &TPoly, b: &TPoly) -> Result<(TPoly, TPoly, TPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(invalid("gcd of two zero polynomials"));
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (TPoly::one(), TPoly::zero());
    let (mut t0, mut t1) = (TPoly::zero(), TPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
        t0 = core::mem::replace(&mut t1, t);
    }
    let inv = r0.coeffs.last().expect("nonzero gcd").inv()?;
    Ok((r0.scale(&inv).reduced(), s0.scale(&inv).reduced(), t0.scale(&inv).reduced()))
}

/// Two-term split `target/(da·db) = ra/da + rb/db` with `deg ra < deg da`
/// and `deg rb < deg db`, via the Bézout pair of `da`, `db`.
pub fn two_term_split(target: &TPoly, da: &TPoly, db: &TPoly) -> Result<(TPoly, TPoly)> {
    let (g, s, t) = tpoly_xgcd(da, db)?;
    if g.degree() != Some(0) {
        return Err(Error::CoprimalityViolation);
    }
    // s·da + t·db = 1  ⇒  target = (target·t mod da)·db + (target·s mod db)·da
    let ra = target.mul(&t).div_rem(da)?.1.reduced();
    let rb = target.mul(&s).div_rem(db)?.1.reduced();
    if ra.mul(db).add(&rb.mul(da)) != *target {
        return Err(invariant("two-term partial fraction does not recombine"));
    }
    Ok((ra, rb))
}

/// The linear system behind `L·dB + M·dA = target`, unknowns
/// `L_0..L_{m−1}, M_0..M_{n−1}` with `m = deg dA`, `n = deg dB`; one row per
/// power of `t`, row denominators cleared so entries are in ℚ[x].
struct BezoutSystem {
    rows: Vec<Vec<Poly>>,
    rhs: Vec<Poly>,
    det: Poly,
    m: usize,
}

impl BezoutSystem {
    fn new(da: &TPoly, db: &TPoly, target: &TPoly) -> Result<BezoutSystem> {
        let (Some(m), Some(n)) = (da.degree(), db.degree()) else {
            return Err(invalid("Bezout system with a zero polynomial"));
        };
        let size = m + n;
        if target.degree().is_some_and(|d| d >= size) {
            return Err(invalid("target degree must be below deg dA + deg dB"));
        }
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(size);
        for k in 0..size {
            let mut entries: Vec<RatFunField> = Vec::with_capacity(size + 1);
            for i in 0..m {
                entries.push(if k >= i { db.coeff(k - i) } else { RatFunField::zero() });
            }
            for j in 0..n {
                entries.push(if k >= j { da.coeff(k - j) } else { RatFunField::zero() });
            }
            entries.push(target.coeff(k));
            let entries: Vec<RatFunField> = entries.iter().map(RatFunField::reduced).collect();
            let lcm = entries.iter().fold(Poly::one(), |acc, e| {
                let g = acc.gcd(e.den()).expect("nonzero");
                (&acc * e.den()).exact_div(&g).expect("gcd divides")
            });
            rows.push(
                entries
                    .iter()
                    .map(|e| e.num() * &lcm.exact_div(e.den()).expect("lcm multiple"))
                    .collect(),
            );
        }
        let rhs: Vec<Poly> = rows.iter_mut().map(|r| r.pop().expect("rhs column")).collect();
        let det = Matrix::from_rows(rows.clone())?.det_fraction_free()?;
        if det.is_zero() {
            return Err(Error::CoprimalityViolation);
        }
        Ok(BezoutSystem { rows, rhs, det, m })
    }

    /// Unknown number `col` by Cramer's rule.
    fn unknown(&self, col: usize) -> Result<RatFunField> {
        let mut replaced = self.rows.clone();
        for (row, r) in replaced.iter_mut().zip(&self.rhs) {
            row[col] = r.clone();
        }
        let dk = Matrix::from_rows(replaced)?.det_fraction_free()?;
        Ok(RatFunField::new(dk, self.det.clone())?.reduced())
    }
}

/// Solves `L·dB + M·dA = target` with `deg L < deg dA`, `deg M < deg dB`,
/// as a Sylvester-structured linear system over ℚ(x) (Cramer's rule on
/// fraction-free determinants after clearing row denominators).
pub fn solve_bezout_system(da: &TPoly, db: &TPoly, target: &TPoly) -> Result<(TPoly, TPoly)> {
    let sys = BezoutSystem::new(da, db, target)?;
    let sol = (0..sys.rows.len()).map(|col| sys.unknown(col)).collect::<Result<Vec<_>>>()?;
    Ok((TPoly::from_coeffs(sol[..sys.m].to_vec()), TPoly::from_coeffs(sol[sys.m..].to_vec())))
}

/// `L(0)` of [`solve_bezout_system`], from two determinants.
pub fn bezout_constant(da: &TPoly, db: &TPoly, target: &TPoly) -> Result<RatFunField> {
    BezoutSystem::new(da, db, target)?.unknown(0)
}

/// Pieces of the Hadamard constant-term split for proper `a`, `b`:
/// `(D_A(t), tⁿD_B(x/t), N_A(t)·tⁿN_B(x/t))`.
pub fn hadamard_split_inputs(a: &RatFun, b: &RatFun) -> Result<(TPoly, TPoly, TPoly)> {
    if !a.is_proper() || !b.is_proper() || a.is_zero() || b.is_zero() {
        return Err(invalid("constant-term split needs nonzero proper operands"));
    }
    let n = b.den().degree().expect("proper and nonzero");
    let da = TPoly::lift(a.den());
    let h = TPoly::from_bipoly(&BiPoly::over_y_form(b.den(), n)?);
    let qb = TPoly::from_bipoly(&BiPoly::over_y_form(b.num(), n)?);
    Ok((da, h, TPoly::lift(a.num()).mul(&qb)))
}

/// `(R_A, R_B)` of the Hadamard split for proper `a`, `b`.
pub fn hadamard_split(a: &RatFun, b: &RatFun) -> Result<(TPoly, TPoly)> {
    let (da, h, target) = hadamard_split_inputs(a, b)?;
    let (ra, rb) = two_term_split(&target, &da, &h)?;
    let n = h.degree().expect("nonzero");
    if rb.degree().is_some_and(|d| d >= n) {
        return Err(invariant("negative-power part has too high a degree in t"));
    }
    Ok((ra, rb))
}

fn hadamard_proper(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    if a.is_zero() || b.is_zero() {
        return Ok(RatFun::zero());
    }
    let (da, h, target) = hadamard_split_inputs(a, b)?;
    // D_A(0) = 1
    bezout_constant(&da, &h, &target)?.to_ratfun()
}

/// `a ∗ b` as the constant term in `t` of `a(t)·b(x/t)`. Polynomial parts
/// are split off first and multiplied termwise.
pub fn hadamard_via_constant_term(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    let (pa, ra) = a.proper_split();
    let (pb, rb) = b.proper_split();
    let poly = &convolve::hadamard_with_poly(&pa, b) + &convolve::hadamard_with_poly(&pb, &ra);
    Ok(&RatFun::from_poly(poly) + &hadamard_proper(&ra, &rb)?)
}

/// Pieces of the binomial constant-term split for proper `a`, `b`:
/// `((1−t)^m D_A(x/(1−t)), tⁿD_B(x/t), (1−t)^(m−1) N_A(x/(1−t)) · tⁿN_B(x/t))`.
pub fn binomial_split_inputs(a: &RatFun, b: &RatFun) -> Result<(TPoly, TPoly, TPoly)> {
    if !a.is_proper() || !b.is_proper() || a.is_zero() || b.is_zero() {
        return Err(invalid("constant-term split needs nonzero proper operands"));
    }
    let m = a.den().degree().expect("proper and nonzero");
    let n = b.den().degree().expect("proper and nonzero");
    let pa = TPoly::from_bipoly(&BiPoly::one_minus_y_form(a.den(), m)?);
    let qa = TPoly::from_bipoly(&BiPoly::one_minus_y_form(a.num(), m - 1)?);
    let h = TPoly::from_bipoly(&BiPoly::over_y_form(b.den(), n)?);
    let qb = TPoly::from_bipoly(&BiPoly::over_y_form(b.num(), n)?);
    Ok((pa, h, qa.mul(&qb)))
}

fn binomial_proper(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    if a.is_zero() || b.is_zero() {
        return Ok(RatFun::zero());
    }
    let (pa, h, target) = binomial_split_inputs(a, b)?;
    // (1−t)^m D_A(x/(1−t)) at t = 0 is D_A(x)
    bezout_constant(&pa, &h, &target)?.div(&pa.at_zero())?.to_ratfun()
}

/// `a ⊙ b` as the constant term in `t` of `(1/(1−t))·a(x/(1−t))·b(x/t)`.
/// Polynomial parts go through the derivative formula.
pub fn binomial_via_constant_term(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    let (pa, ra) = a.proper_split();
    let (pb, rb) = b.proper_split();
    let poly_terms = &convolve::poly_bprod_poly(&pa, b) + &convolve::poly_bprod_poly(&pb, &ra);
    Ok(&poly_terms + &binomial_proper(&ra, &rb)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::from_ints(n, d).unwrap()
    }

    fn field(n: &[i64], d: &[i64]) -> RatFunField {
        RatFunField::new(p(n), p(d)).unwrap()
    }

    fn tconst(c: &[&[i64]]) -> TPoly {
        TPoly::from_coeffs(c.iter().map(|v| RatFunField::from_poly(p(v))).collect())
    }

    #[test]
    fn xgcd_linear_pair() {
        let a = tconst(&[&[-1], &[1]]);
        let b = tconst(&[&[-2], &[1]]);
        let (g, s, t) = tpoly_xgcd(&a, &b).unwrap();
        assert_eq!(g, TPoly::one());
        assert_eq!(s, tconst(&[&[1]]));
        assert_eq!(t, tconst(&[&[-1]]));
        let (g, _, _) = tpoly_xgcd(&a.scale(&RatFunField::constant(int(3))), &a.scale(&RatFunField::constant(int(3)))).unwrap();
        assert_eq!(g, a);
    }

    #[test]
    fn fibonacci_pell_split_matches_partial_fractions() {
        let fib = rf(&[0, 1], &[1, -1, -1]);
        let pell = rf(&[0, 1], &[1, -2, -1]);
        let (ra, rb) = hadamard_split(&fib, &pell).unwrap();
        let den = [1, -2, -7, -2, 1];
        assert_eq!(ra.coeffs(), &[field(&[0, 1, 0, -1], &den), field(&[0, 0, 2, 1], &den)]);
        assert_eq!(rb.coeffs(), &[field(&[0, 0, 0, 1, 0, -1], &den), field(&[0, 0, 2, 1], &den)]);
        assert_eq!(
            hadamard_via_constant_term(&fib, &pell).unwrap(),
            rf(&[0, 1, 0, -1], &[1, -2, -7, -2, 1])
        );
        assert_eq!(
            binomial_via_constant_term(&fib, &pell).unwrap(),
            rf(&[0, 0, 2, -3], &[1, -6, 7, 6, -9])
        );
    }

    #[test]
    fn bezout_system_matches_xgcd() {
        let fib = rf(&[0, 1], &[1, -1, -1]);
        let pell = rf(&[0, 1], &[1, -2, -1]);
        let (da, h, target) = hadamard_split_inputs(&fib, &pell).unwrap();
        assert_eq!(target, TPoly::from_coeffs(alloc::vec![
            RatFunField::zero(),
            RatFunField::zero(),
            RatFunField::from_poly(p(&[0, 1])),
        ]));
        let (l, m) = solve_bezout_system(&da, &h, &target).unwrap();
        let (ra, rb) = hadamard_split(&fib, &pell).unwrap();
        assert_eq!((l.clone(), m), (ra, rb));
        assert_eq!(l.at_zero(), field(&[0, 1, 0, -1], &[1, -2, -7, -2, 1]));
    }

    #[test]
    fn bezout_trivial_target() {
        let da = tconst(&[&[1], &[-1], &[-1]]);
        let db = tconst(&[&[3], &[0], &[1]]);
        let (l, m) = solve_bezout_system(&da, &db, &da).unwrap();
        assert!(l.is_zero());
        assert_eq!(m, TPoly::one());
        assert_eq!(solve_bezout_system(&da, &da, &da).unwrap_err(), Error::CoprimalityViolation);
    }

    #[test]
    fn identities() {
        let f = rf(&[1, 2], &[1, 3, -1]);
        assert_eq!(hadamard_via_constant_term(&f, &RatFun::geometric(int(1))).unwrap(), f);
        let inv = binomial_via_constant_term(&RatFun::geometric(int(1)), &RatFun::geometric(int(-1))).unwrap();
        assert_eq!(inv, RatFun::one());
    }

    #[test]
    fn improper_inputs_split_first() {
        let a = rf(&[0, 0, 0, 1], &[1, -1]);
        let b = RatFun::geometric(int(2));
        assert_eq!(binomial_via_constant_term(&a, &b).unwrap(), convolve::binomial_product(&a, &b).unwrap());
        assert_eq!(hadamard_via_constant_term(&a, &b).unwrap(), convolve::hadamard_product(&a, &b).unwrap());
    }

    #[test]
    fn field_equality_is_by_value() {
        assert_eq!(field(&[2, 2], &[4]), field(&[1, 1], &[2]));
        assert_ne!(field(&[1], &[1, 1]), field(&[1], &[1, -1]));
        assert!(RatFunField::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn euclid_and_cramer_agree_on_binomial_split() {
        let a = rf(&[1, 2, -1], &[1, 3, 0, -2]);
        let b = rf(&[0, 4], &[1, -1, 5]);
        let (pa, h, target) = binomial_split_inputs(&a, &b).unwrap();
        let (ra, rb) = two_term_split(&target, &pa, &h).unwrap();
        assert!(rb.degree() < h.degree());
        assert_eq!(ra.at_zero(), bezout_constant(&pa, &h, &target).unwrap());
        assert_eq!(solve_bezout_system(&pa, &h, &target).unwrap(), (ra, rb));
    }
}
